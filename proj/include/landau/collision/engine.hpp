#pragma once

#include <Eigen/Core>
#include <array>
#include <memory>
#include <mutex>
#include <optional>

#include "landau/core/grid.hpp"
#include "landau/core/velocity_ops.hpp"

namespace landau {

using Sym3Field = std::array<Eigen::ArrayXd, 6>;

// Zero-padded linear convolution with the tabulated kernels |z|^gamma and a_ij(z):
//   (K * F)(v_a) = sum_b K(v_a - v_b) F(v_b) dv^3,
// computed on a 2n^3 grid so no wrap-around occurs.
class KernelTable {
 public:
  KernelTable(std::shared_ptr<const VelocityOps> ops, double gamma);

  Eigen::ArrayXcd forward(const Eigen::ArrayXd& F) const;
  // Multiplies by the real kernel spectrum and returns the cropped, scaled result.
  Eigen::ArrayXd apply(const Eigen::ArrayXcd& Fhat, const Eigen::ArrayXd& khat) const;
  Eigen::ArrayXd inverse(Eigen::ArrayXcd spec) const;

  const Eigen::ArrayXd& radial() const { return radial_; }
  const Eigen::ArrayXd& aij(int i, int j) const;

 private:
  std::shared_ptr<const VelocityOps> ops_;
  int n_, m_;
  Eigen::Index padded_, half_;
  Eigen::ArrayXd radial_;
  std::array<Eigen::ArrayXd, 6> aij_;
};

// abar(sqrt(mu) g) and b_i = sum_j abar_ij(sqrt(mu) d_j g - v_j sqrt(mu) g / 2): the parts of
// Gamma(g, .) that depend only on g.
struct LeftFactor {
  Sym3Field abar;
  Vec3Field b;
};

// Velocity-space collision kernels for one (nv, vmax, gamma). Real arrays only; immutable after
// construction apart from lazily cached Maxwellian factors, and safe to share across threads.
class CollisionEngine {
 public:
  CollisionEngine(int nv, double vmax, double gamma);

  static std::shared_ptr<const CollisionEngine> get(const GridSpec& g, double gamma);

  const VelocityOps& ops() const { return *ops_; }
  const KernelTable& kernels() const { return table_; }
  double gamma() const { return gamma_; }

  Eigen::ArrayXd conv_radial(const Eigen::ArrayXd& F) const;
  Sym3Field abar(const Eigen::ArrayXd& F) const;
  Eigen::ArrayXd abar_ij(const Eigen::ArrayXd& F, int i, int j) const;
  // sum_j abar_ij(X_j) for i = 0..2.
  Vec3Field abar_contract(const Vec3Field& X) const;

  LeftFactor left(const Eigen::ArrayXd& g) const;
  // Gamma(g, h) = sum_i (d_i - v_i/2) [ sum_j abar_ij (d_j h - v_j h/2) - b_i h ].
  Eigen::ArrayXd apply(const LeftFactor& left, const Eigen::ArrayXd& h) const;
  Eigen::ArrayXd gamma(const Eigen::ArrayXd& g, const Eigen::ArrayXd& h) const;
  // Gamma(f, sqrt(mu)) through c_i = sum_j abar_ij(sqrt(mu)(d_j f + v_j f/2)).
  Eigen::ArrayXd gamma_maxwellian_right(const Eigen::ArrayXd& f) const;
  // Gamma(sqrt(mu), f).
  Eigen::ArrayXd gamma_maxwellian_left(const Eigen::ArrayXd& f) const;
  // Linearized operator -Gamma(sqrt(mu), f) - Gamma(f, sqrt(mu)).
  Eigen::ArrayXd linearized(const Eigen::ArrayXd& f) const;
  const LeftFactor& maxwellian_left() const;

  // sum_i d_i { abar_ij(G) d_j H - abar_ij(d_j G) H }.
  Eigen::ArrayXd QL(const Eigen::ArrayXd& G, const Eigen::ArrayXd& H) const;

 private:
  std::shared_ptr<const VelocityOps> ops_;
  double gamma_;
  KernelTable table_;
  mutable std::once_flag maxwellian_once_;
  mutable std::optional<LeftFactor> maxwellian_left_;
};

}  // namespace landau
