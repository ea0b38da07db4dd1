#include "verify_suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "landau/collision/estimates.hpp"
#include "landau/collision/gamma.hpp"
#include "landau/core/errors.hpp"
#include "landau/norms/norms.hpp"
#include "landau/timeavg/commutators.hpp"
#include "landau/timeavg/leibniz.hpp"
#include "landau/timeavg/multiplier.hpp"
#include "landau/timeavg/symbol_bound.hpp"

namespace landau {

namespace {

using Clock = std::chrono::steady_clock;

constexpr double kGammas[] = {0.0, 0.5, 1.0};

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

CheckResult finish(std::string name, std::string group, double value, double threshold, Clock::time_point start) {
  CheckResult r;
  r.name = std::move(name);
  r.group = std::move(group);
  r.value = value;
  r.threshold = threshold;
  r.pass = std::isfinite(value) && value <= threshold;
  r.seconds = seconds_since(start);
  return r;
}

std::string gamma_tag(double g) {
  std::ostringstream os;
  os << "gamma=" << g;
  return os.str();
}

GridSpec with_nv(GridSpec g, int nv) {
  g.nv = nv;
  return g;
}

void decomposition(const VerifyOptions& o, std::vector<CheckResult>& out) {
  for (double gm : kGammas) {
    const auto start = Clock::now();
    double worst = 0.0;
    for (int k = 0; k < o.pairs; ++k) {
      const std::uint64_t s = o.seed + 2 * static_cast<std::uint64_t>(k);
      const VelocityField g = random_profile(o.grid, s), h = random_profile(o.grid, s + 1);
      worst = std::max(worst, relative_l2(gamma_decomposed(g, h, HardPotential(gm)).value,
                                          gamma_direct(g, h, HardPotential(gm)).value));
    }
    CheckResult r = finish("decomposition " + gamma_tag(gm), "decomposition", worst, 1e-8, start);
    r.extra = to_json(make_report("decomposition", gm, o.grid, worst, 1e-8));
    r.detail = "runtime limit 120 s";
    if (r.seconds > 120.0) r.pass = false;
    out.push_back(r);
  }
}

void forms(const VerifyOptions& o, std::vector<CheckResult>& out) {
  for (int j = 1; j <= 6; ++j) {
    const auto start = Clock::now();
    double worst = 0.0;
    for (double gm : kGammas)
      for (int k = 0; k < o.pairs; ++k) {
        const std::uint64_t s = o.seed + 2 * static_cast<std::uint64_t>(k);
        const VelocityField g = random_profile(o.grid, s), h = random_profile(o.grid, s + 1);
        worst = std::max(worst, relative_l2(L_term(j, g, h, HardPotential(gm)).value,
                                            L_term_abar(j, g, h, HardPotential(gm)).value));
      }
    CheckResult r = finish("L" + std::to_string(j) + " coefficient vs abar form", "forms", worst, 1e-8, start);
    r.extra = to_json(make_report("L" + std::to_string(j) + "_forms", 1.0, o.grid, worst, 1e-8));
    out.push_back(r);
  }
}

void cancellation(const VerifyOptions& o, std::vector<CheckResult>& out) {
  struct Form {
    const char* name;
    double (*fn)(const VelocityField&, HardPotential);
  };
  const Form forms[] = {{"upl2", upl2_form}, {"posterm", posterm_form}, {"l3l6", l3l6_form}};
  for (const Form& f : forms) {
    const auto start = Clock::now();
    double worst = 0.0;
    for (double gm : kGammas)
      for (int k = 0; k < o.cancellation_samples; ++k) {
        const VelocityField h = random_profile(o.grid, o.seed + 1000 + static_cast<std::uint64_t>(k));
        worst = std::max(worst, std::abs(f.fn(h, HardPotential(gm))));
      }
    CheckResult r = finish(std::string("cancellation ") + f.name, "cancellation", worst, 1e-8, start);
    r.detail = "quadratic form divided by ||h||^2";
    out.push_back(r);
  }
}

void commutator(const VerifyOptions& o, std::vector<CheckResult>& out) {
  // mu-decaying fields at nv = 64 keep truncation and periodization below the tolerance.
  GridSpec g = with_nv(o.grid, 64);
  g.nx = 4;
  g.spatial_dims = 1;
  g.vmax = 8.0;
  {
    const auto start = Clock::now();
    const CommutatorReport c = commutator_transport_check(g, o.commutator_fields, o.seed + 7);
    out.push_back(finish("commutator [M, d_t + v.d_x]", "commutator", c.max_relative_error, 1e-9, start));
  }
  {
    const auto start = Clock::now();
    const CommutatorReport c = commutator_wedge_check(g, o.commutator_fields, o.seed + 8);
    out.push_back(finish("commutator [M, v wedge d_v]", "commutator", c.max_relative_error, 1e-9, start));
  }
}

void leibniz(const VerifyOptions& o, std::vector<CheckResult>& out) {
  {
    const auto start = Clock::now();
    std::size_t mismatches = 0;
    std::string first;
    try {
      const LeibnizTable t(12);
      for (int k = 0; k <= 12; ++k) {
        std::vector<std::int64_t> sums(static_cast<std::size_t>(2 * k) + 1, 0);
        for (const auto& e : t.entries(k)) sums[static_cast<std::size_t>(e.j)] += e.c;
        for (int j = 0; j <= 2 * k; ++j)
          if (sums[static_cast<std::size_t>(j)] != binomial(2 * k, j)) {
            if (first.empty()) first = "sum mismatch at k=" + std::to_string(k) + ", j=" + std::to_string(j);
            ++mismatches;
          }
        if (t(k, 2 * k, 0, k, 0) != 1) ++mismatches;
        if (k >= 1 && t(k, 2 * k - 1, 1, k - 1, 0) != 2 * k) ++mismatches;
      }
    } catch (const IntegerOverflow& e) {
      first = e.what();
      ++mismatches;
    }
    CheckResult r = finish("Leibniz coefficient sums k <= 12", "leibniz", static_cast<double>(mismatches), 0.0, start);
    r.detail = first.empty() ? "exact integer equality; runtime limit 1 s" : first;
    if (r.seconds > 1.0) r.pass = false;
    out.push_back(r);
  }
  {
    const auto start = Clock::now();
    GridSpec g = with_nv(o.grid, 16);
    g.nx = 8;
    g.spatial_dims = 1;
    double worst = 0.0;
    for (int s = 0; s < 3; ++s) {
      const PhaseField a = smooth_random_field(g, o.seed + 300 + 2 * static_cast<std::uint64_t>(s));
      const PhaseField b = smooth_random_field(g, o.seed + 301 + 2 * static_cast<std::uint64_t>(s));
      const double t0 = 0.2 + 0.1 * s, t = 0.6 + 0.15 * s;
      for (int k = 1; k <= 3; ++k) worst = std::max(worst, leibniz_expand_error(a, b, k, t, t0));
    }
    out.push_back(finish("Leibniz expansion k <= 3", "leibniz", worst, 1e-7, start));
  }
}

void symbol_bound(const VerifyOptions& o, std::vector<CheckResult>& out) {
  const auto start = Clock::now();
  double value = 0.0;
  std::string detail;
  try {
    const SymbolBoundReport r = symbol_bound_sample(6, o.symbol_samples, o.seed + 11);
    value = r.max_ratio;
  } catch (const BoundViolation& e) {
    value = INFINITY;
    detail = e.what();
  }
  CheckResult r = finish("symbol bound k <= 6", "symbol_bound", value, 1.0 + 1e-12, start);
  r.detail = detail.empty() ? "max |d^j rho_k| / bound over all (k, j)" : detail;
  out.push_back(r);
}

void ellipticity(const VerifyOptions& o, std::vector<CheckResult>& out) {
  const auto start = Clock::now();
  const EllipticitySample e = ellipticity_sample(o.ellipticity_samples, o.seed + 13);
  // Distance outside [c0, 1/c0]; zero when every ratio lies inside.
  const double outside = std::max({0.0, e.lower - e.min_ratio, e.max_ratio - e.upper});
  CheckResult r = finish("ellipticity", "ellipticity", outside, 0.0, start);
  r.pass = e.pass;
  std::ostringstream os;
  os.precision(17);
  os << "ratios in [" << e.min_ratio << ", " << e.max_ratio << "], allowed [" << e.lower << ", " << e.upper << "]";
  r.detail = os.str();
  out.push_back(r);
}

void gaussian_bound(const VerifyOptions& o, std::vector<CheckResult>& out) {
  const auto start = Clock::now();
  GridSpec g = with_nv(o.grid, 64);
  g.vmax = 8.0;
  double value = 0.0;
  std::string detail;
  try {
    value = gaussian_derivative_bound_check(g, 6).max_ratio;
  } catch (const BoundViolation& e) {
    value = INFINITY;
    detail = e.what();
  }
  CheckResult r = finish("Gaussian derivative bound |beta| <= 6", "gaussian_bound", value, 1.0, start);
  r.detail = detail.empty() ? "max lhs / (16^{|beta|+1} beta!)" : detail;
  out.push_back(r);
}

void coercivity(const VerifyOptions& o, std::vector<CheckResult>& out) {
  const auto start = Clock::now();
  const int count = 10;
  const GridSpec coarse = with_nv(o.grid, 32), fine = with_nv(o.grid, 64);
  const double c32 = coercivity_constant(coarse, HardPotential(1.0), count, o.seed + 17).value;
  const double c64 = coercivity_constant(fine, HardPotential(1.0), count, o.seed + 17).value;
  CheckResult r = finish("coercivity constant stability", "coercivity", std::abs(c64 - c32) / c32, 0.2, start);
  std::ostringstream os;
  os.precision(17);
  os << "C1(nv=32) = " << c32 << ", C1(nv=64) = " << c64;
  r.detail = os.str();
  r.extra = {{"C1_nv32", c32}, {"C1_nv64", c64}};
  out.push_back(r);
}

using GroupFn = void (*)(const VerifyOptions&, std::vector<CheckResult>&);

const std::vector<std::pair<std::string, GroupFn>>& registry() {
  static const std::vector<std::pair<std::string, GroupFn>> r = {
      {"decomposition", decomposition}, {"forms", forms},     {"cancellation", cancellation},
      {"commutator", commutator},       {"leibniz", leibniz}, {"symbol_bound", symbol_bound},
      {"ellipticity", ellipticity},     {"gaussian_bound", gaussian_bound}, {"coercivity", coercivity},
  };
  return r;
}

}  // namespace

nlohmann::json to_json(const CheckResult& r) {
  nlohmann::json j;
  j["identity_name"] = r.name;
  j["group"] = r.group;
  j["relative_error"] = std::isfinite(r.value) ? nlohmann::json(r.value) : nlohmann::json(nullptr);
  j["threshold"] = r.threshold;
  j["pass"] = r.pass;
  j["seconds"] = r.seconds;
  j["detail"] = r.detail;
  if (!r.extra.empty()) j["extra"] = r.extra;
  return j;
}

const std::vector<std::string>& verify_groups() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : registry()) n.push_back(name);
    return n;
  }();
  return names;
}

std::vector<CheckResult> run_verify(const VerifyOptions& opt, const std::function<void(const CheckResult&)>& sink) {
  opt.grid.validate();
  for (const auto& g : opt.only)
    if (std::find(verify_groups().begin(), verify_groups().end(), g) == verify_groups().end())
      throw ConfigInvalid("unknown verify group '" + g + "'");
  std::vector<CheckResult> all;
  for (const auto& [name, fn] : registry()) {
    if (!opt.only.empty() && !opt.only.count(name)) continue;
    std::vector<CheckResult> part;
    fn(opt, part);
    for (const auto& r : part) {
      if (sink) sink(r);
      all.push_back(r);
    }
  }
  return all;
}

}  // namespace landau
