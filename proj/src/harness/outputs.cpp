#include "landau/harness/outputs.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace landau {

namespace {

std::ofstream open(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  return out;
}

// JSON cannot carry NaN or infinities.
nlohmann::json number(double x) { return std::isfinite(x) ? nlohmann::json(x) : nlohmann::json(nullptr); }

}  // namespace

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_smoothing_csv(const std::string& path, const std::vector<RegularityRecord>& records) {
  std::ofstream out = open(path);
  out << "t,alpha1,alpha2,alpha3,beta1,beta2,beta3,norm,scaled_norm\n";
  for (const auto& r : records)
    for (std::size_t i = 0; i < r.derivatives.size(); ++i) {
      const DerivativeIndex& d = r.derivatives[i];
      out << format_double(r.t);
      for (int a : d.alpha) out << ',' << a;
      for (int b : d.beta) out << ',' << b;
      out << ',' << format_double(r.norms[i]) << ','
          << format_double(time_weight(TimeWeight::analytic, d, r.t) * r.norms[i]) << '\n';
    }
}

void write_mk_csv(const std::string& path, const std::vector<RegularityRecord>& records) {
  std::ofstream out = open(path);
  out << "t,k,mk_h20,mk_psi\n";
  for (const auto& r : records)
    for (std::size_t k = 0; k < r.mk_h20.size(); ++k)
      out << format_double(r.t) << ',' << k << ',' << format_double(r.mk_h20[k]) << ','
          << format_double(r.mk_psi[k]) << '\n';
}

void write_spectrum_csv(const std::string& path, const std::vector<RegularityRecord>& records) {
  std::ofstream out = open(path);
  out << "t,shell,log_max_mod\n";
  for (const auto& r : records)
    for (std::size_t s = 0; s < r.shell_spectrum.size(); ++s)
      if (r.shell_spectrum[s] > 0.0)
        out << format_double(r.t) << ',' << s << ',' << format_double(std::log(r.shell_spectrum[s])) << '\n';
}

nlohmann::json fit_json(const SmoothingFit& fit, const std::string& config_hash, const std::string& weighting) {
  nlohmann::json j;
  j["sigma_fit"] = number(fit.sigma_fit);
  j["C_fit"] = number(fit.C_fit);
  j["r2"] = number(fit.r2);
  j["config_hash"] = config_hash;
  j["weighting"] = weighting;
  j["degenerate"] = fit.degenerate;
  j["points"] = fit.points;
  return j;
}

nlohmann::json spectrum_json(const SpectrumFit& fit, double t) {
  nlohmann::json j;
  j["t"] = t;
  j["slope"] = number(fit.slope);
  j["r2"] = number(fit.r2);
  j["shells"] = fit.shells;
  j["analytic"] = fit.analytic;
  return j;
}

void write_json(const std::string& path, const nlohmann::json& j) {
  std::ofstream out = open(path);
  out << j.dump(2) << '\n';
}

}  // namespace landau
