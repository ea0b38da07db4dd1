#include "landau/norms/norms.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "landau/core/errors.hpp"
#include "landau/core/reduce.hpp"

namespace landau {

namespace {

Axis v_axis(int k) { return static_cast<Axis>(3 + k); }

template <class Field>
Field wedge_impl(const Field& g, int k) {
  if (k < 0 || k > 2) throw std::invalid_argument("wedge component must be 0, 1 or 2");
  const int p = (k + 1) % 3, q = (k + 2) % 3;
  return multiply_weight(differentiate(g, v_axis(q)), Weight::velocity(p)) -
         multiply_weight(differentiate(g, v_axis(p)), Weight::velocity(q));
}

// The seven fields whose squared norms make up psi^2.
template <class Field>
std::vector<Field> psi_components(const Field& g, double gamma) {
  std::vector<Field> out;
  const Weight half = Weight::bracket(0.5 * gamma);
  for (int i = 0; i < 3; ++i) out.push_back(multiply_weight(differentiate(g, v_axis(i)), half));
  for (int k = 0; k < 3; ++k) out.push_back(multiply_weight(wedge_impl(g, k), half));
  out.push_back(multiply_weight(g, Weight::bracket(1.0 + 0.5 * gamma)));
  return out;
}

// sum_{|alpha| <= 2} m^{2 alpha} for the x-mode at flat index ix.
double h20_weight(const GridSpec& g, std::size_t ix) {
  std::array<double, 3> m2{0.0, 0.0, 0.0};
  for (int a = 0; a < g.spatial_dims; ++a) {
    const double m = signed_mode(x_index(g, ix, a), g.nx);
    m2[static_cast<std::size_t>(a)] = m * m;
  }
  double w = 1.0;
  for (int a = 0; a < 3; ++a) {
    w += m2[static_cast<std::size_t>(a)] + m2[static_cast<std::size_t>(a)] * m2[static_cast<std::size_t>(a)];
    for (int b = a + 1; b < 3; ++b) w += m2[static_cast<std::size_t>(a)] * m2[static_cast<std::size_t>(b)];
  }
  return w;
}

double log_factorial(int n) { return std::lgamma(n + 1.0); }

}  // namespace

PhaseField cross_generator(const PhaseField& g, int k) { return wedge_impl(g, k); }
VelocityField cross_generator(const VelocityField& g, int k) { return wedge_impl(g, k); }

double psi_norm(const VelocityField& g, double gamma) {
  double s = 0.0;
  for (const auto& c : psi_components(g, gamma)) s += std::pow(l2_norm(c), 2);
  return std::sqrt(s);
}

double psi_norm(const PhaseField& g, double gamma) {
  double s = 0.0;
  for (const auto& c : psi_components(g, gamma)) s += std::pow(h20_norm(c), 2);
  return std::sqrt(s);
}

cplx h20_inner(const PhaseField& a, const PhaseField& b) {
  const GridSpec& g = a.grid();
  const PhaseField fa = a.transformed(Repr::fourier_x), fb = b.transformed(Repr::fourier_x);
  const std::size_t nv = g.v_size();
  const cplx s = sum_complex(g.x_size(), [&](std::size_t ix) {
    const auto sa = fa.data().segment(static_cast<Eigen::Index>(ix * nv), static_cast<Eigen::Index>(nv));
    const auto sb = fb.data().segment(static_cast<Eigen::Index>(ix * nv), static_cast<Eigen::Index>(nv));
    const cplx d = sum_complex(nv, [&](std::size_t iv) {
      return sa(static_cast<Eigen::Index>(iv)) * std::conj(sb(static_cast<Eigen::Index>(iv)));
    });
    return h20_weight(g, ix) * d;
  });
  return s * g.x_volume() * g.v_weight();
}

double h20_norm(const PhaseField& g) { return std::sqrt(std::max(0.0, h20_inner(g, g).real())); }

double l1m_l2v_norm(const PhaseField& g) {
  const GridSpec& grid = g.grid();
  const PhaseField f = g.transformed(Repr::fourier_x);
  const std::size_t nv = grid.v_size();
  const double scale = grid.x_volume() * grid.v_weight();
  return sum_real(grid.x_size(), [&](std::size_t ix) {
    const auto seg = f.data().segment(static_cast<Eigen::Index>(ix * nv), static_cast<Eigen::Index>(nv));
    const double m2 = sum_real(nv, [&](std::size_t iv) { return std::norm(seg(static_cast<Eigen::Index>(iv))); });
    return std::sqrt(m2 * scale);
  });
}

double l1m_l2v_norm(const VelocityField& g) { return l2_norm(g); }

GaussianBoundReport gaussian_derivative_bound_check(const GridSpec& grid, int max_order) {
  const VelocityField one = sample_v(grid, [](const double*) { return cplx(1.0, 0.0); });
  const VelocityField smu = multiply_weight(one, Weight::sqrt_mu());
  const VelocityField mu = multiply_weight(one, Weight::mu());
  const VelocityField smu_hat = smu.transformed(Repr::fourier_xv);
  const VelocityField mu_hat = mu.transformed(Repr::fourier_xv);
  GaussianBoundReport rep;
  for (int total = 0; total <= max_order; ++total)
    for (int b1 = total; b1 >= 0; --b1)
      for (int b2 = total - b1; b2 >= 0; --b2) {
        const int b3 = total - b1 - b2;
        GaussianBoundEntry e;
        e.beta = {b1, b2, b3};
        VelocityField ds = smu_hat, dm = mu_hat;
        for (int a = 0; a < 3; ++a) {
          ds = differentiate(ds, v_axis(a), e.beta[static_cast<std::size_t>(a)]);
          dm = differentiate(dm, v_axis(a), e.beta[static_cast<std::size_t>(a)]);
        }
        e.lhs = l2_norm(ds) + l2_norm(dm);
        const double base = (total + 1) * std::log(16.0);
        e.bound_multi = std::exp(base + log_factorial(b1) + log_factorial(b2) + log_factorial(b3));
        e.bound_total = std::exp(base + log_factorial(total));
        const double ratio = e.lhs / e.bound_multi;
        if (ratio > rep.max_ratio) {
          rep.max_ratio = ratio;
          rep.witness = e.beta;
        }
        if (!(e.lhs <= e.bound_multi)) {
          std::ostringstream os;
          os << "Gaussian derivative bound violated at beta=(" << b1 << "," << b2 << "," << b3 << "): " << e.lhs
             << " > " << e.bound_multi;
          throw BoundViolation(os.str());
        }
        rep.entries.push_back(e);
      }
  return rep;
}

}  // namespace landau
