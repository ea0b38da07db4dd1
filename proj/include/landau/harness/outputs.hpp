#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "landau/harness/harness.hpp"

namespace landau {

// Doubles are printed with 17 significant digits so files round-trip and compare bytewise.
std::string format_double(double x);

// smoothing.csv: t, alpha1..3, beta1..3, norm, scaled_norm (analytic weighting).
void write_smoothing_csv(const std::string& path, const std::vector<RegularityRecord>& records);
// mk.csv: t, k, mk_h20, mk_psi.
void write_mk_csv(const std::string& path, const std::vector<RegularityRecord>& records);
// spectrum.csv: t, shell, log_max_mod (natural log; shells with a zero maximum are skipped).
void write_spectrum_csv(const std::string& path, const std::vector<RegularityRecord>& records);

// {sigma_fit, C_fit, r2, config_hash} plus the regression details.
nlohmann::json fit_json(const SmoothingFit& fit, const std::string& config_hash, const std::string& weighting);
nlohmann::json spectrum_json(const SpectrumFit& fit, double t);

// Writes j.dump(2) followed by a newline.
void write_json(const std::string& path, const nlohmann::json& j);

}  // namespace landau
