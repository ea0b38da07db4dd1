#pragma once

#include <string>

#include <json.hpp>

#include "landau/collision/kernel.hpp"
#include "landau/core/fields.hpp"

namespace landau {

enum class GammaMethod { direct, decomposed, term, term_abar };

struct GammaOutput {
  VelocityField value;
  GammaMethod method = GammaMethod::direct;
  int term = 0;  // 1..6 for the single-term methods
};

struct PhaseGammaOutput {
  PhaseField value;
  GammaMethod method = GammaMethod::direct;
  int term = 0;
};

// Q_L(G, H) = sum_ij d_i { abar_ij(G) d_j H - abar_ij(d_j G) H }.
VelocityField QL_direct(const VelocityField& G, const VelocityField& H, HardPotential gamma);

// Gamma(g, h) = mu^{-1/2} Q_L(sqrt(mu) g, sqrt(mu) h), assembled from the eight-term expansion
// (only sqrt(mu)-weighted convolutions appear). Both inputs must carry a Gaussian-decay
// certificate; GuardViolation otherwise.
GammaOutput gamma_direct(const VelocityField& g, const VelocityField& h, HardPotential gamma);
// Sum of the six terms L_1..L_6 built from ConvCoefficients and the wedge generator.
GammaOutput gamma_decomposed(const VelocityField& g, const VelocityField& h, HardPotential gamma);
// L_j, j in 1..6, in the coefficient (a, A, B, M, rho, lambda) form.
GammaOutput L_term(int j, const VelocityField& g, const VelocityField& h, HardPotential gamma);
// L_j, j in 1..6, in the abar_ij convolution form.
GammaOutput L_term_abar(int j, const VelocityField& g, const VelocityField& h, HardPotential gamma);

// Applied independently at every x point.
PhaseGammaOutput gamma_direct(const PhaseField& g, const PhaseField& h, HardPotential gamma);

// Linearized operator -Gamma(sqrt(mu), f) - Gamma(f, sqrt(mu)).
VelocityField linearized_L(const VelocityField& f, HardPotential gamma);
PhaseField linearized_L(const PhaseField& f, HardPotential gamma);

// Quadratic forms at g = sqrt(mu), each divided by ||h||^2:
//   <L_2(sqrt mu, h), h>,  <L_3(sqrt mu, h) + L_6(sqrt mu, h), h>,
//   sum_{i!=j} <v_i lambda_ij h, h> - sum_ij <v_i M_ij v_j h, h>.
double upl2_form(const VelocityField& h, HardPotential gamma);
double l3l6_form(const VelocityField& h, HardPotential gamma);
double posterm_form(const VelocityField& h, HardPotential gamma);

struct IdentityReport {
  std::string identity_name;
  double gamma = 0.0;
  GridSpec grid;
  double relative_error = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

IdentityReport make_report(std::string name, double gamma, const GridSpec& grid, double err, double threshold);
nlohmann::json to_json(const IdentityReport& r);

// ||a - b|| / ||b|| (absolute error when b vanishes).
double relative_l2(const VelocityField& a, const VelocityField& b);
double relative_l2(const PhaseField& a, const PhaseField& b);

}  // namespace landau
