#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "landau/collision/coefficients.hpp"
#include "landau/collision/estimates.hpp"
#include "landau/collision/gamma.hpp"
#include "landau/core/errors.hpp"

using namespace landau;

namespace {

GridSpec vgrid(int nv, double vmax) {
  GridSpec g;
  g.nv = nv;
  g.vmax = vmax;
  g.nx = 4;
  g.spatial_dims = 1;
  return g;
}

VelocityField ones(const GridSpec& g) {
  return sample_v(g, [](const double*) { return cplx(1.0, 0.0); });
}

VelocityField sqrt_mu_field(const GridSpec& g) { return multiply_weight(ones(g), Weight::sqrt_mu()); }

// Fixed test polynomial for the quadrature oracle and its gradient.
double poly(const double* v) { return 1.0 + 0.5 * v[0] - 0.3 * v[1] * v[2] + 0.2 * v[0] * v[0]; }
std::array<double, 3> poly_grad(const double* v) { return {0.5 + 0.4 * v[0], -0.3 * v[2], -0.3 * v[1]}; }

// Spectral derivative by an explicit O(n) DFT sum along one axis (independent of FFTW).
std::vector<double> dft_derivative(const std::vector<double>& f, int n, double vmax, int axis) {
  std::vector<double> out(f.size(), 0.0);
  const double k0 = std::numbers::pi / vmax;
  const std::array<int, 3> stride{n * n, n, 1};
  const int s = stride[static_cast<std::size_t>(axis)];
  for (std::size_t base = 0; base < f.size(); ++base) {
    const int idx = static_cast<int>(base / static_cast<std::size_t>(s)) % n;
    if (idx != 0) continue;
    for (int a = 0; a < n; ++a) {
      double acc = 0.0;
      for (int k = 1; k < n; ++k) {
        if (2 * k == n) continue;
        const int mk = 2 * k < n ? k : k - n;
        for (int b = 0; b < n; ++b) {
          const double phase = 2.0 * std::numbers::pi * k * (a - b) / n;
          // Re( i mk k0 e^{i phase} ) f_b / n
          acc += -mk * k0 * std::sin(phase) * f[base + static_cast<std::size_t>(b * s)] / n;
        }
      }
      out[base + static_cast<std::size_t>(a * s)] = acc;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("kernel a_ij closed form") {
  for (double gamma : {0.0, 0.5, 1.0}) CHECK(kernel_aij({1.0, 0.0, 0.0}, gamma, 0, 0) == 0.0);
  CHECK(std::abs(kernel_aij({1.0, 1.0, 0.0}, 1.0, 0, 1) + std::sqrt(2.0)) < 1e-15);
  CHECK(kernel_aij({0.0, 0.0, 0.0}, 1.0, 0, 0) == 0.0);
  CHECK(kernel_aij({0.0, 0.0, 0.0}, 0.0, 1, 1) == 0.0);
  CHECK(kernel_aij({1.0, 2.0, 3.0}, 0.0, 1, 1) == doctest::Approx(10.0));

  std::mt19937 rng(1);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const std::array<double, 3> z{u(rng), u(rng), u(rng)};
    for (int i = 0; i < 3; ++i) {
      double s = 0.0;
      for (int j = 0; j < 3; ++j) s += kernel_aij(z, 0.7, i, j) * z[static_cast<std::size_t>(j)];
      worst = std::max(worst, std::abs(s));
    }
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("hard potential range") {
  CHECK_NOTHROW(HardPotential(0.0));
  CHECK_NOTHROW(HardPotential(1.0));
  CHECK_THROWS_AS(HardPotential(-0.5), ConfigInvalid);
  CHECK_THROWS_AS(HardPotential(1.5), ConfigInvalid);
}

TEST_CASE("coefficients of sqrt(mu)") {
  SUBCASE("gamma = 0 gives the Maxwellian mass") {
    const GridSpec g = vgrid(32, 8.0);
    const ConvCoefficients c = compute_coefficients(sqrt_mu_field(g), HardPotential(0.0));
    CHECK((c.a.data() - 1.0).abs().maxCoeff() < 1e-6);
  }
  SUBCASE("gamma = 1 at v = 0 is the first absolute moment") {
    const GridSpec g = vgrid(64, 8.0);
    const ConvCoefficients c = compute_coefficients(sqrt_mu_field(g), HardPotential(1.0));
    const Eigen::Index centre = (32 * 64 + 32) * 64 + 32;
    const double expected = 2.0 * std::sqrt(2.0 / std::numbers::pi);
    CHECK(std::abs(c.a.data()(centre).real() / expected - 1.0) < 1e-4);
  }
  SUBCASE("symmetry and realness") {
    const GridSpec g = vgrid(16, 8.0);
    const ConvCoefficients c = compute_coefficients(random_profile(g, 3), HardPotential(1.0));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
        CHECK((c.M[ui][uj].data() - c.M[uj][ui].data()).abs().maxCoeff() < 1e-12);
        CHECK(c.M[ui][uj].data().imag().abs().maxCoeff() < 1e-12);
        CHECK(c.rho[ui][uj].data().imag().abs().maxCoeff() < 1e-12);
      }
  }
  SUBCASE("zero input") {
    const GridSpec g = vgrid(16, 8.0);
    const ConvCoefficients c = compute_coefficients(VelocityField(g), HardPotential(1.0));
    CHECK(c.a.data().abs().maxCoeff() == 0.0);
    CHECK(c.rho[0][1].data().abs().maxCoeff() == 0.0);
    CHECK(c.abar_vg[2][1].data().abs().maxCoeff() == 0.0);
  }
}

TEST_CASE("coefficient growth constant is finite") {
  const GridSpec g = vgrid(16, 8.0);
  const double C = coefficient_bound_constant(random_profile(g, 5), HardPotential(1.0));
  MESSAGE("|a_g| <= C <v>^gamma ||g||, C = " << C);
  CHECK(std::isfinite(C));
  CHECK(C > 0.0);
}

TEST_CASE("Q_L structure") {
  // The moments leak through the box faces, where the growth of abar meets the Gaussian tail
  // of F; on [-8, 8)^3 that flux is ~1e-7, so the box is widened.
  const GridSpec g = vgrid(64, 10.0);
  const HardPotential gamma(1.0);
  const VelocityField mu = multiply_weight(ones(g), Weight::mu());
  const VelocityField q = QL_direct(mu, mu, gamma);
  // Scale: the diffusion half of the operator alone.
  const VelocityField mu_shift = multiply_weight(mu, Weight::bracket(1.0));
  const double scale = l2_norm(QL_direct(mu, mu_shift, gamma));
  CHECK(l2_norm(q) / scale < 1e-6);
  CHECK(l2_norm(QL_direct(mu, VelocityField(g), gamma)) == 0.0);

  // collision invariants
  const auto c = [&](auto&& fn) { return sample_v(g, [&](const double* v) { return cplx(fn(v), 0.0); }); };
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    VelocityField F = multiply_weight(random_profile(g, seed), Weight::sqrt_mu());
    F = F.scaled(1.0 / l2_norm(F));
    const VelocityField Q = QL_direct(F, F, gamma);
    const cplx mass = inner(Q, c([](const double*) { return 1.0; }));
    const cplx e = inner(Q, c([](const double* v) { return v[0] * v[0] + v[1] * v[1] + v[2] * v[2]; }));
    MESSAGE("moments " << std::abs(mass) << " " << std::abs(e));
    CHECK(std::abs(mass) < 1e-8);
    CHECK(std::abs(e) < 1e-8);
    for (int i = 0; i < 3; ++i) {
      const cplx p = inner(Q, c([&](const double* v) { return v[i]; }));
      CHECK(std::abs(p) < 1e-8);
    }
  }
}

TEST_CASE("Gamma basics") {
  const GridSpec g = vgrid(16, 8.0);
  const HardPotential gamma(1.0);
  const VelocityField a = random_profile(g, 1), b = random_profile(g, 2);
  const VelocityField zero = multiply_weight(VelocityField(g), Weight::sqrt_mu());
  CHECK(l2_norm(gamma_direct(a, zero, gamma).value) == 0.0);
  CHECK(l2_norm(gamma_direct(zero, b, gamma).value) == 0.0);

  const VelocityField ref = gamma_direct(a, b, gamma).value;
  CHECK(relative_l2(gamma_direct(a.scaled(2.5), b, gamma).value, ref.scaled(2.5)) < 1e-10);
  CHECK(relative_l2(gamma_direct(a, b.scaled(-0.75), gamma).value, ref.scaled(-0.75)) < 1e-10);
  // complex bilinearity
  CHECK(relative_l2(gamma_direct(a.scaled(cplx(0.0, 1.0)), b, gamma).value, ref.scaled(cplx(0.0, 1.0))) < 1e-10);

  VelocityField plain = a;
  plain.mutable_data() *= 1.0;
  CHECK_THROWS_AS(gamma_direct(plain, b, gamma), GuardViolation);
}

TEST_CASE("Gamma(sqrt mu, sqrt mu) vanishes") {
  const GridSpec g = vgrid(32, 10.0);
  const HardPotential gamma(1.0);
  const VelocityField s = sqrt_mu_field(g);
  const double scale = l2_norm(L_term_abar(1, s, s, gamma).value);
  CHECK(l2_norm(gamma_direct(s, s, gamma).value) / scale < 1e-6);
}

// Relative L2 distance between gamma_direct(h, h) and the O(n^6) quadrature of the Landau flux,
// for h = sqrt(mu) * poly and gamma = 1.
double quadrature_oracle_error(int n, double vmax) {
  const GridSpec g = vgrid(n, vmax);
  const double dv = g.dv();
  const std::size_t N = g.v_size();
  std::vector<std::array<double, 3>> V(N);
  for (std::size_t a = 0; a < N; ++a)
    for (int k = 0; k < 3; ++k) V[a][static_cast<std::size_t>(k)] = g.v_coord(v_index(g, a, k));

  // G = H = mu * poly, with analytic gradients.
  std::vector<double> G(N), sm(N);
  std::vector<std::array<double, 3>> dG(N);
  for (std::size_t a = 0; a < N; ++a) {
    const double* v = V[a].data();
    const double m = maxwellian(v);
    sm[a] = sqrt_maxwellian(v);
    G[a] = m * poly(v);
    const auto pg = poly_grad(v);
    for (std::size_t k = 0; k < 3; ++k) dG[a][k] = m * (pg[k] - v[k] * poly(v));
  }
  // flux_i(v_a) = sum_b a_ij(v_a - v_b) [G_b dH_j(a) - H_a dG_j(b)] dv^3, then fl = flux / sqrt(mu)
  std::array<std::vector<double>, 3> fl;
  for (auto& f : fl) f.assign(N, 0.0);
  for (std::size_t a = 0; a < N; ++a) {
    std::array<double, 3> acc{0.0, 0.0, 0.0};
    for (std::size_t b = 0; b < N; ++b) {
      const std::array<double, 3> z{V[a][0] - V[b][0], V[a][1] - V[b][1], V[a][2] - V[b][2]};
      const double r = std::sqrt(z[0] * z[0] + z[1] * z[1] + z[2] * z[2]);
      const double r2 = r * r;
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
          const double aij = ((i == j ? r2 : 0.0) - z[i] * z[j]) * r;
          acc[i] += aij * (G[b] * dG[a][j] - G[a] * dG[b][j]);
        }
    }
    for (std::size_t i = 0; i < 3; ++i) fl[i][a] = acc[i] * dv * dv * dv / sm[a];
  }
  std::vector<double> oracle(N, 0.0);
  for (int i = 0; i < 3; ++i) {
    const auto d = dft_derivative(fl[static_cast<std::size_t>(i)], n, vmax, i);
    for (std::size_t a = 0; a < N; ++a)
      oracle[a] += d[a] - 0.5 * V[a][static_cast<std::size_t>(i)] * fl[static_cast<std::size_t>(i)][a];
  }

  const VelocityField p = sample_v(g, [](const double* v) { return cplx(poly(v), 0.0); });
  const VelocityField h = multiply_weight(p, Weight::sqrt_mu());
  const VelocityField got = gamma_direct(h, h, HardPotential(1.0)).value;
  double num = 0.0, den = 0.0;
  for (std::size_t a = 0; a < N; ++a) {
    num += std::pow(got.data()(static_cast<Eigen::Index>(a)).real() - oracle[a], 2);
    den += oracle[a] * oracle[a];
  }
  const double rel = std::sqrt(num / den);
  return rel;
}

TEST_CASE("Gamma against a brute-force quadrature oracle") {
  // At nv = 16 the box either truncates sqrt(mu) or under-resolves it, so the assertion uses
  // nv = 32 on [-10, 10)^3; the nv = 16 figure is reported.
  MESSAGE("nv = 16, vmax = 7: " << quadrature_oracle_error(16, 7.0));
  const double rel = quadrature_oracle_error(32, 10.0);
  MESSAGE("nv = 32, vmax = 10: " << rel);
  CHECK(rel < 1e-4);
}

TEST_CASE("linearized operator") {
  SUBCASE("null space") {
    const GridSpec g = vgrid(32, 10.0);
    const HardPotential gamma(1.0);
    const VelocityField s = sqrt_mu_field(g);
    const double scale = l2_norm(L_term_abar(1, s, s, gamma).value);
    CHECK(l2_norm(linearized_L(s, gamma)) / scale < 1e-6);
    for (int i = 0; i < 3; ++i) {
      const VelocityField vi = multiply_weight(s, Weight::velocity(i));
      const double r = l2_norm(linearized_L(vi, gamma)) / l2_norm(L_term_abar(1, s, vi, gamma).value);
      MESSAGE("L(v_" << i + 1 << " sqrt mu) residual " << r);
      CHECK(r < 1e-5);
    }
    const VelocityField e = multiply_weight(s, Weight::bracket(2.0)) - s;
    const double r = l2_norm(linearized_L(e, gamma)) / l2_norm(L_term_abar(1, s, e, gamma).value);
    MESSAGE("L(|v|^2 sqrt mu) residual " << r);
    CHECK(r < 1e-5);
  }
  SUBCASE("nonnegative quadratic form") {
    const GridSpec g = vgrid(16, 8.0);
    for (double gm : {0.0, 1.0}) {
      double worst = 0.0;
      for (std::uint64_t seed = 100; seed < 150; ++seed) {
        const VelocityField h = random_profile(g, seed);
        const double q = inner(linearized_L(h, HardPotential(gm)), h).real() / std::pow(l2_norm(h), 2);
        worst = std::min(worst, q);
      }
      CHECK(worst >= -1e-8);
    }
  }
}

TEST_CASE("coercivity and trilinear constants are stable under refinement") {
  for (double g : {0.0, 1.0}) {
    const EmpiricalConstant c32 = coercivity_constant(vgrid(32, 8.0), HardPotential{g}, 10, 7);
    const EmpiricalConstant c64 = coercivity_constant(vgrid(64, 8.0), HardPotential{g}, 10, 7);
    MESSAGE("gamma " << g << " C1 " << c32.value << " -> " << c64.value);
    CHECK(c32.value > 0.0);
    CHECK(std::abs(c64.value - c32.value) <= 0.2 * c32.value);
  }
  const EmpiricalConstant t = trilinear_constant(vgrid(16, 8.0), HardPotential{1.0}, 3, 11);
  CHECK(std::isfinite(t.value));
  CHECK(t.value > 0.0);
}
