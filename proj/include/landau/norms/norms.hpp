#pragma once

#include <array>
#include <vector>

#include "landau/core/fields.hpp"

namespace landau {

// Component k (0-based) of (v wedge d_v) g = v_{k+1} d_{k+2} g - v_{k+2} d_{k+1} g.
PhaseField cross_generator(const PhaseField& g, int k);
VelocityField cross_generator(const VelocityField& g, int k);

// psi(v, D_v) triple norm:
//   ( ||<v>^{gamma/2} d_v g||^2 + ||<v>^{gamma/2} (v wedge d_v) g||^2 + ||<v>^{1+gamma/2} g||^2 )^{1/2}.
// The PhaseField version is the (2,0) variant: spatial derivatives of order <= 2 are summed.
double psi_norm(const VelocityField& g, double gamma);
double psi_norm(const PhaseField& g, double gamma);

// (sum_{|alpha| <= 2} ||d_x^alpha g||^2)^{1/2} and the matching inner product.
double h20_norm(const PhaseField& g);
cplx h20_inner(const PhaseField& a, const PhaseField& b);

// sum_m ||F_x g(m, .)||_{L^2_v}, with the unitary x-transform, so the norm dominates the L^2 norm
// and equals it for x-independent data.
double l1m_l2v_norm(const PhaseField& g);
double l1m_l2v_norm(const VelocityField& g);

struct GaussianBoundEntry {
  std::array<int, 3> beta{};
  double lhs = 0.0;              // ||d^beta sqrt(mu)|| + ||d^beta mu||
  double bound_multi = 0.0;      // 16^{|beta|+1} beta!
  double bound_total = 0.0;      // 16^{|beta|+1} |beta|!
};

struct GaussianBoundReport {
  std::vector<GaussianBoundEntry> entries;
  double max_ratio = 0.0;  // max lhs / bound_multi
  std::array<int, 3> witness{};
};

// Checks ||d^beta sqrt(mu)|| + ||d^beta mu|| <= 16^{|beta|+1} beta! for all |beta| <= max_order.
// Throws BoundViolation naming the first failing beta.
GaussianBoundReport gaussian_derivative_bound_check(const GridSpec& grid, int max_order = 6);

}  // namespace landau
