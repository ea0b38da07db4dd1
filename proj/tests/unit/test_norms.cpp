#include <doctest.h>

#include <cmath>
#include <numbers>

#include "landau/collision/estimates.hpp"
#include "landau/core/errors.hpp"
#include "landau/norms/norms.hpp"

using namespace landau;

namespace {

constexpr double pi = std::numbers::pi;

GridSpec grid(int nx, int nv, int dims = 1) {
  GridSpec g;
  g.nx = nx;
  g.nv = nv;
  g.spatial_dims = dims;
  return g;
}

VelocityField gaussian(const GridSpec& g) {
  return sample_v(g, [](const double* v) { return cplx(std::exp(-0.5 * (v[0] * v[0] + v[1] * v[1] + v[2] * v[2])), 0.0); });
}

// A smooth, x-dependent field with Gaussian decay in v.
PhaseField wave(const GridSpec& g) {
  return sample(g, [](const double* x, const double* v) {
    const double r2 = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
    return cplx((1.0 + 0.4 * std::cos(x[0]) + 0.2 * std::sin(2.0 * x[0] + x[1]) * v[1]) * std::exp(-0.4 * r2), 0.0);
  });
}

// g(x + a, v) by a Fourier phase in x.
PhaseField translate(const PhaseField& f, const std::array<double, 3>& a) {
  const GridSpec& g = f.grid();
  PhaseField w = transform(f, Repr::fourier_x);
  Eigen::ArrayXcd d = w.data();
  const std::size_t nv = g.v_size();
  for (std::size_t ix = 0; ix < g.x_size(); ++ix) {
    double phase = 0.0;
    for (int k = 0; k < g.spatial_dims; ++k) phase += a[static_cast<std::size_t>(k)] * signed_mode(x_index(g, ix, k), g.nx);
    d.segment(static_cast<Eigen::Index>(ix * nv), static_cast<Eigen::Index>(nv)) *= std::polar(1.0, phase);
  }
  return transform(PhaseField::from_data(g, Repr::fourier_x, d), Repr::physical);
}

}  // namespace

TEST_CASE("cross generator") {
  // e^{-|v|^2/2} is resolved to ~3e-9 at nv = 32; nv = 64 leaves only rounding.
  const GridSpec g = grid(4, 64);
  SUBCASE("radial functions are annihilated") {
    const VelocityField r = gaussian(g);
    for (int k = 0; k < 3; ++k) CHECK(l2_norm(cross_generator(r, k)) < 1e-10);
  }
  SUBCASE("v1 times a radial function has no first component") {
    const VelocityField r = multiply_weight(gaussian(g), Weight::velocity(0));
    CHECK(l2_norm(cross_generator(r, 0)) < 1e-10);
    CHECK(l2_norm(cross_generator(r, 1)) > 0.1);
  }
  SUBCASE("closed form for v2 mu") {
    // (v2 d3 - v3 d2)(v2 mu) = v2 (-v3 v2 mu) - v3 (mu - v2^2 mu) = -v3 mu
    const VelocityField g2 =
        sample_v(g, [](const double* v) { return cplx(v[1] * maxwellian(v), 0.0); });
    const VelocityField expected = sample_v(g, [](const double* v) { return cplx(-v[2] * maxwellian(v), 0.0); });
    CHECK(l2_norm(cross_generator(g2, 0) - expected) / l2_norm(expected) < 1e-8);
  }
  SUBCASE("phase field version acts slice by slice") {
    const PhaseField f = wave(g);
    const PhaseField c = cross_generator(f, 2);
    for (std::size_t ix = 0; ix < g.x_size(); ++ix)
      CHECK(l2_norm(slice(c, ix) - cross_generator(slice(f, ix), 2)) <= 1e-12 * l2_norm(slice(f, ix)));
  }
}

TEST_CASE("psi norm") {
  const GridSpec g = grid(4, 32);
  CHECK(psi_norm(VelocityField(g), 1.0) == 0.0);
  const VelocityField e = gaussian(g);
  CHECK(std::abs(std::pow(psi_norm(e, 0.0), 2) / (4.0 * std::pow(pi, 1.5)) - 1.0) < 1e-8);

  const VelocityField h = random_profile(g, 9);
  CHECK(psi_norm(h.scaled(-3.0), 1.0) == doctest::Approx(3.0 * psi_norm(h, 1.0)).epsilon(1e-12));
  for (double gm : {0.0, 0.5, 1.0}) {
    CHECK(psi_norm(h, gm) >= l2_norm(multiply_weight(h, Weight::bracket(1.0 + gm / 2))));
    CHECK(l2_norm(multiply_weight(h, Weight::bracket(1.0 + gm / 2))) >= l2_norm(h));
  }
  // Phase version: x-independent data only picks up the alpha = 0 term.
  const PhaseField b = broadcast(g, h);
  CHECK(psi_norm(b, 1.0) == doctest::Approx(std::sqrt(g.x_volume()) * psi_norm(h, 1.0)).epsilon(1e-12));
}

TEST_CASE("h20 and l1m norms") {
  const GridSpec g = grid(8, 16, 3);
  const PhaseField f = wave(g);
  CHECK(h20_norm(f) >= l2_norm(f));
  CHECK(h20_inner(f, f).real() == doctest::Approx(std::pow(h20_norm(f), 2)).epsilon(1e-12));
  CHECK(l1m_l2v_norm(f) >= l2_norm(f));

  SUBCASE("x-independent data") {
    const VelocityField v = random_profile(g, 4);
    const PhaseField b = broadcast(g, v);
    CHECK(l1m_l2v_norm(b) == doctest::Approx(l2_norm(b)).epsilon(1e-12));
    CHECK(l1m_l2v_norm(v) == doctest::Approx(l2_norm(v)).epsilon(1e-12));
  }
  SUBCASE("two modes with equal mass") {
    const auto mode = [&](int m) {
      return sample(g, [m](const double* x, const double* v) {
        return std::polar(std::exp(-0.5 * (v[0] * v[0] + v[1] * v[1] + v[2] * v[2])), m * x[0]);
      });
    };
    const PhaseField one = mode(1), two = mode(1) + mode(2);
    CHECK(l1m_l2v_norm(two) == doctest::Approx(2.0 * l1m_l2v_norm(one)).epsilon(1e-12));
    CHECK(l2_norm(two) == doctest::Approx(std::sqrt(2.0) * l2_norm(one)).epsilon(1e-12));
  }
  SUBCASE("h20 of a single x mode") {
    // |alpha| <= 2 derivatives of e^{i x1}: weights 1 + 1 + 1 = 3 (alpha = 0, e1, 2 e1).
    const PhaseField m1 = sample(g, [](const double* x, const double* v) {
      return std::polar(std::exp(-0.5 * (v[0] * v[0] + v[1] * v[1] + v[2] * v[2])), x[0]);
    });
    CHECK(h20_norm(m1) == doctest::Approx(std::sqrt(3.0) * l2_norm(m1)).epsilon(1e-12));
  }
}

TEST_CASE("norms are translation invariant in x") {
  const GridSpec g = grid(8, 16, 3);
  const PhaseField f = wave(g);
  const PhaseField t = translate(f, {0.37, -1.1, 2.0});
  CHECK(std::abs(l2_norm(t) / l2_norm(f) - 1.0) < 1e-10);
  CHECK(std::abs(h20_norm(t) / h20_norm(f) - 1.0) < 1e-10);
  CHECK(std::abs(l1m_l2v_norm(t) / l1m_l2v_norm(f) - 1.0) < 1e-10);
  CHECK(std::abs(psi_norm(t, 1.0) / psi_norm(f, 1.0) - 1.0) < 1e-10);
}

TEST_CASE("Gaussian derivative bound") {
  const GaussianBoundReport r = gaussian_derivative_bound_check(grid(4, 64), 6);
  CHECK(r.entries.size() == 84);
  CHECK(r.max_ratio <= 1.0);
  for (const auto& e : r.entries) {
    CHECK(e.lhs <= e.bound_multi);
    CHECK(e.bound_multi <= e.bound_total);
    if (e.beta == std::array<int, 3>{0, 0, 0}) {
      CHECK(e.lhs == doctest::Approx(1.0 + std::pow(4.0 * pi, -0.75)).epsilon(1e-10));
      CHECK(e.bound_multi == doctest::Approx(16.0));
    }
    if (e.beta == std::array<int, 3>{2, 0, 0}) {
      // d1^2 mu^{1/2} = (v1^2/4 - 1/2) mu^{1/2} and d1^2 mu = (v1^2 - 1) mu. mu is the N(0, I)
      // density and mu^2 = (4 pi)^{-3/2} times the N(0, I/2) density, so both squared norms are
      // Gaussian moments: E(X^2/4 - 1/2)^2 = 3/16 and E(Y^2 - 1)^2 = 3/4.
      const double s = std::sqrt(3.0 / 16.0);
      const double m = std::sqrt(std::pow(4.0 * pi, -1.5) * 0.75);
      CHECK(e.lhs == doctest::Approx(s + m).epsilon(1e-8));
    }
  }
  SUBCASE("grid convergence") {
    const GaussianBoundReport c = gaussian_derivative_bound_check(grid(4, 32), 2);
    const GaussianBoundReport f = gaussian_derivative_bound_check(grid(4, 64), 2);
    for (std::size_t k = 0; k < c.entries.size(); ++k) CHECK(std::abs(c.entries[k].lhs - f.entries[k].lhs) < 1e-6);
  }
}
