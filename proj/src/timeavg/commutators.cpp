#include "landau/timeavg/commutators.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "landau/norms/norms.hpp"
#include "landau/timeavg/multiplier.hpp"

namespace landau {

namespace {

constexpr Axis kx[3] = {Axis::x1, Axis::x2, Axis::x3};
constexpr Axis kv[3] = {Axis::v1, Axis::v2, Axis::v3};

PhaseField M1(const PhaseField& f, double t, double t0) { return apply_M_power(f, {t, t0, 1.0}); }

// (2 tau d_{v1} + tau^2 d_{x1}) f
PhaseField first_order_part(const PhaseField& f, double tau) {
  return differentiate(f, Axis::v1).scaled(2.0 * tau) + differentiate(f, Axis::x1).scaled(tau * tau);
}

}  // namespace

double transport_commutator_error(const PhaseField& g, double t, double t0) {
  const double tau = t - t0;
  // [M, d_t] = -(d_t M): symbol -(eta^2 + 2 tau m eta + tau^2 m^2).
  const PhaseField mt = apply_symbol(g, [&](int m1, double eta1) {
    const double a = eta1 + tau * m1;
    return -a * a;
  });
  PhaseField lhs = mt;
  const PhaseField Mg = M1(g, t, t0);
  for (int a = 0; a < g.grid().spatial_dims; ++a) {
    const PhaseField vdg = multiply_weight(differentiate(g, kx[a]), Weight::velocity(a));
    const PhaseField vdMg = multiply_weight(differentiate(Mg, kx[a]), Weight::velocity(a));
    lhs = lhs + (M1(vdg, t, t0) - vdMg);
  }
  const PhaseField rhs = differentiate(g, Axis::v1, 2);
  return l2_norm(lhs - rhs) / l2_norm(rhs);
}

double wedge_commutator_error(const PhaseField& g, double t, double t0) {
  const double tau = t - t0;
  const PhaseField Mg = M1(g, t, t0);
  std::array<PhaseField, 3> lhs, rhs;
  for (int k = 0; k < 3; ++k) lhs[static_cast<std::size_t>(k)] = M1(cross_generator(g, k), t, t0) - cross_generator(Mg, k);
  rhs[0] = PhaseField(g.grid(), Repr::fourier_xv);
  rhs[1] = first_order_part(differentiate(g, kv[2]), tau);
  rhs[2] = first_order_part(differentiate(g, kv[1]), tau).scaled(-1.0);
  double total = 0.0;
  for (const auto& r : rhs) total += std::pow(l2_norm(r), 2);
  total = std::sqrt(total);
  double worst = 0.0;
  for (std::size_t k = 0; k < 3; ++k) worst = std::max(worst, l2_norm(lhs[k] - rhs[k]));
  return total > 0.0 ? worst / total : worst;
}

PhaseField smooth_random_field(const GridSpec& grid, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  const int cut = dealias_cutoff(grid.nx);
  std::uniform_int_distribution<int> mode(-cut, cut);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  struct Term {
    std::array<int, 3> m{};
    double phase = 0.0;
    std::array<double, 10> q{};  // 1, v1, v2, v3, v1^2, v2^2, v3^2, v1v2, v1v3, v2v3
  };
  std::vector<Term> terms(4);
  for (auto& tm : terms) {
    for (int a = 0; a < grid.spatial_dims; ++a) tm.m[static_cast<std::size_t>(a)] = mode(rng);
    tm.phase = phase(rng);
    for (auto& c : tm.q) c = normal(rng);
  }
  return sample(grid, [&](const double* x, const double* v) {
    double s = 0.0;
    for (const auto& tm : terms) {
      const double arg = tm.m[0] * x[0] + tm.m[1] * x[1] + tm.m[2] * x[2] + tm.phase;
      const auto& q = tm.q;
      const double poly = q[0] + q[1] * v[0] + q[2] * v[1] + q[3] * v[2] + q[4] * v[0] * v[0] + q[5] * v[1] * v[1] +
                          q[6] * v[2] * v[2] + q[7] * v[0] * v[1] + q[8] * v[0] * v[2] + q[9] * v[1] * v[2];
      s += std::cos(arg) * poly;
    }
    return cplx(s * maxwellian(v), 0.0);
  });
}

namespace {

template <class Fn>
CommutatorReport run_check(const char* name, const GridSpec& grid, int count, std::uint64_t seed, double threshold,
                           Fn&& error) {
  CommutatorReport r;
  r.name = name;
  r.threshold = threshold;
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int c = 0; c < count; ++c) {
    const PhaseField g = smooth_random_field(grid, seed + static_cast<std::uint64_t>(c));
    const double t0 = 0.5 - 0.5 * u(rng);
    const double t = t0 + (1.0 - t0) * u(rng);
    r.max_relative_error = std::max(r.max_relative_error, error(g, t, t0));
    ++r.cases;
  }
  r.pass = r.max_relative_error <= threshold;
  return r;
}

}  // namespace

CommutatorReport commutator_transport_check(const GridSpec& grid, int count, std::uint64_t seed, double threshold) {
  return run_check("transport", grid, count, seed, threshold, transport_commutator_error);
}

CommutatorReport commutator_wedge_check(const GridSpec& grid, int count, std::uint64_t seed, double threshold) {
  return run_check("wedge", grid, count, seed, threshold, wedge_commutator_error);
}

}  // namespace landau
