#include <doctest.h>

#include <cmath>
#include <numbers>

#include "landau/core/errors.hpp"
#include "landau/timeavg/commutators.hpp"
#include "landau/timeavg/multiplier.hpp"
#include "landau/timeavg/symbol_bound.hpp"

using namespace landau;

namespace {

GridSpec grid(int nx, int nv, double vmax = 8.0) {
  GridSpec g;
  g.nx = nx;
  g.nv = nv;
  g.vmax = vmax;
  g.spatial_dims = 1;
  return g;
}

double rel(const PhaseField& a, const PhaseField& b) { return l2_norm(a - b) / l2_norm(b); }

}  // namespace

TEST_CASE("M symbol") {
  CHECK(m_symbol(5, -2.5, 0.3, 0.3) == 0.0);
  CHECK(m_symbol(0, 3.0, 0.8, 0.3) == doctest::Approx(0.5 * 9.0));
  CHECK(m_symbol(3, -1.0, 1.0, 0.0) == doctest::Approx(1.0));
  for (int m = -4; m <= 4; ++m)
    for (double eta = -3.0; eta <= 3.0; eta += 0.25) {
      CHECK(m_symbol(m, eta, 0.9, 0.2) >= 0.0);
      const double l1 = lambda_symbol(1, m, eta, 0.9, 0.2), l2 = lambda_symbol(2, m, eta, 0.9, 0.2);
      CHECK(l1 * l1 + l2 * l2 == doctest::Approx(m_symbol(m, eta, 0.9, 0.2)).epsilon(1e-13).scale(1.0));
    }
}

TEST_CASE("MSpec validation") {
  CHECK_NOTHROW(MSpec{1.0, 0.5, 0.0}.validate());
  CHECK_THROWS_AS(MSpec({0.4, 0.5, 1.0}).validate(), ConfigInvalid);
  CHECK_THROWS_AS(MSpec({1.2, 0.5, 1.0}).validate(), ConfigInvalid);
  CHECK_THROWS_AS(MSpec({1.0, 0.0, 1.0}).validate(), ConfigInvalid);
  CHECK_THROWS_AS(MSpec({1.0, 0.6, 1.0}).validate(), ConfigInvalid);
  CHECK_THROWS_AS(MSpec({1.0, 0.5, -0.1}).validate(), ConfigInvalid);
}

TEST_CASE("M powers and Lambda fields") {
  const GridSpec g = grid(8, 16);
  const PhaseField f = smooth_random_field(g, 3);
  const double t = 0.9, t0 = 0.25;

  CHECK(rel(apply_M_power(f, {t, t0, 0.0}), transform(f, Repr::fourier_xv)) < 1e-15);
  const PhaseField half = apply_M_power(apply_M_power(f, {t, t0, 0.5}), {t, t0, 0.5});
  CHECK(rel(half, apply_M_power(f, {t, t0, 1.0})) < 1e-12);

  SUBCASE("pure mode") {
    const double k0 = g.k0();
    const PhaseField mode = sample(g, [&](const double* x, const double* v) { return std::polar(1.0, x[0] + k0 * v[0]); });
    const PhaseField out = apply_M_power(mode, {0.75, 0.25, 1.0});
    const double expected = 0.5 * k0 * k0 + 0.25 * k0 + 1.0 / 24.0;
    CHECK(rel(out, transform(mode, Repr::fourier_xv).scaled(expected)) < 1e-13);
  }
  SUBCASE("Lambda squares sum to M") {
    const double lhs = std::pow(l2_norm(apply_lambda(f, 1, t, t0)), 2) + std::pow(l2_norm(apply_lambda(f, 2, t, t0)), 2);
    const double rhs = inner(apply_M_power(f, {t, t0, 1.0}), f).real();
    CHECK(std::abs(lhs / rhs - 1.0) < 1e-10);
    CHECK(l2_norm(apply_lambda(f, 1, t0, t0)) == 0.0);
    CHECK(l2_norm(apply_lambda(f, 2, t0, t0)) == 0.0);
  }
  SUBCASE("tensor powers of Lambda") {
    for (int ell = 0; ell <= 4; ++ell) {
      const double lhs = lambda_tensor_norm2(f, ell, t, t0);
      const double rhs = inner(apply_M_power(f, {t, t0, static_cast<double>(ell)}), f).real();
      CHECK(std::abs(lhs / rhs - 1.0) < 1e-10);
    }
  }
  SUBCASE("Cauchy-Schwarz") {
    for (std::uint64_t s = 0; s < 50; ++s) {
      const PhaseField h = smooth_random_field(g, 100 + s);
      const PhaseField Mh = apply_M_power(h, {t, t0, 1.0});
      CHECK(inner(Mh, h).real() <= l2_norm(Mh) * l2_norm(h) * (1.0 + 1e-14));
    }
  }
  SUBCASE("monotone in sigma above 1, contractive below") {
    const PhaseField fx = transform(f, Repr::fourier_xv);
    const PhaseField a = apply_M_power(f, {t, t0, 0.5}), b = apply_M_power(f, {t, t0, 1.5});
    for (Eigen::Index i = 0; i < fx.data().size(); ++i) {
      const double base = std::abs(fx.data()(i));
      if (base == 0.0) continue;
      const double ra = std::abs(a.data()(i)) / base, rb = std::abs(b.data()(i)) / base;
      if (ra >= 1.0) CHECK(rb >= ra * (1.0 - 1e-12));
      else CHECK(rb <= ra * (1.0 + 1e-12));
    }
  }
}

TEST_CASE("ellipticity constants") {
  const EllipticityConstants c = ellipticity_constant();
  CHECK(c.c0 == doctest::Approx(0.065741).epsilon(1e-5));
  CHECK(c.c0 * c.c0_inverse == doctest::Approx(1.0));
  // minimizing eigenvector of [[1, 1/2], [1/2, 1/3]]
  const double lam = c.c0;
  const double s = 0.5, u = lam - 1.0;  // (1 - lam) s + u/2 = 0 -> (s, u) ∝ (1/2, lam - 1)
  const double ratio = (s * s + s * u + u * u / 3.0) / (s * s + u * u);
  CHECK(std::abs(ratio - (4.0 - std::sqrt(13.0)) / 6.0) < 1e-12);
  // (s, u) = (1, 0): ratio 1
  CHECK(m_symbol(0, 1.0, 1.0, 0.0) / 1.0 == 1.0);

  const EllipticitySample r = ellipticity_sample(20000, 7);
  CHECK(r.pass);
  CHECK(r.min_ratio >= c.c0 - 1e-12);
  CHECK(r.max_ratio <= c.sharp_upper + 1e-12);
}

TEST_CASE("symbol bound") {
  CHECK_THROWS_AS(symbol_bound_sample(7, 10, 1), ConfigInvalid);
  SUBCASE("polynomial powers") {
    const auto c = rho_power_coefficients(2, 3, 0.5);
    // rho = 0.5 eta^2 + 0.75 eta + 0.375
    const double eta = 1.3;
    double v = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) v += c[i] * std::pow(eta, static_cast<double>(i));
    CHECK(v == doctest::Approx(std::pow(m_symbol(3, eta, 0.5, 0.0), 2)).epsilon(1e-14));
    // top coefficient: d^{2k} rho_k = (2k)! tau^k
    CHECK(c.back() * 24.0 == doctest::Approx(24.0 * 0.25));
  }
  const SymbolBoundReport r = symbol_bound_sample(3, 10000, 11);
  MESSAGE("k <= 3 max ratio " << r.max_ratio);
  CHECK(r.max_ratio <= 1.0 + 1e-12);
  double nontrivial = 0.0;
  for (const auto& e : r.entries)
    if (e.j > 0) nontrivial = std::max(nontrivial, e.max_ratio);
  MESSAGE("j >= 1 max ratio " << nontrivial);
  CHECK(nontrivial < 1.0);
  for (const auto& e : r.entries)
    if (e.j == 0) CHECK(e.max_ratio == doctest::Approx(1.0).epsilon(1e-12));
  // k = 5, 6 with large |m1| is where an expansion in powers of eta loses digits to cancellation.
  for (std::uint64_t seed : {1u, 7u, 2035u}) {
    const SymbolBoundReport r6 = symbol_bound_sample(6, 10000, seed);
    CHECK(r6.max_ratio <= 1.0 + 1e-13);
  }
}

TEST_CASE("transport commutator") {
  const GridSpec g = grid(4, 64);
  const PhaseField f = smooth_random_field(g, 5);
  SUBCASE("at t = t0") { CHECK(transport_commutator_error(f, 0.3, 0.3) < 1e-10); }
  SUBCASE("separable field") {
    const PhaseField s = sample(g, [](const double* x, const double* v) {
      return std::polar(std::exp(-0.5 * (v[0] * v[0] + v[1] * v[1] + v[2] * v[2])) * (1.0 + v[0]), x[0]);
    });
    CHECK(transport_commutator_error(s, 0.6, 0.3) < 1e-10);
  }
  const CommutatorReport r = commutator_transport_check(g, 4, 17);
  MESSAGE("transport max error " << r.max_relative_error);
  CHECK(r.pass);
}

TEST_CASE("wedge commutator") {
  const GridSpec g = grid(4, 64);
  SUBCASE("radial field") {
    const PhaseField s = sample(g, [](const double* x, const double* v) {
      return cplx(std::cos(x[0]) * std::exp(-0.5 * (v[0] * v[0] + v[1] * v[1] + v[2] * v[2])), 0.0);
    });
    CHECK(wedge_commutator_error(s, 0.7, 0.2) < 1e-9);
  }
  SUBCASE("t = t0") {
    CHECK(wedge_commutator_error(smooth_random_field(g, 1), 0.4, 0.4) == 0.0);
  }
  const CommutatorReport r = commutator_wedge_check(g, 4, 23);
  MESSAGE("wedge max error " << r.max_relative_error);
  CHECK(r.pass);
}
