#pragma once

#include <Eigen/Core>
#include <array>
#include <memory>

namespace landau {

using Vec3Field = std::array<Eigen::ArrayXd, 3>;

// Real-valued velocity-space kernels used on hot paths: coordinate arrays and spectral
// derivatives via real FFTs. One instance per (nv, vmax), shared and immutable.
class VelocityOps {
 public:
  VelocityOps(int nv, double vmax);

  static std::shared_ptr<const VelocityOps> get(int nv, double vmax);

  int n() const { return n_; }
  double vmax() const { return vmax_; }
  double dv() const { return dv_; }
  Eigen::Index size() const { return size_; }

  const Eigen::ArrayXd& v(int i) const { return v_[static_cast<std::size_t>(i)]; }
  const Eigen::ArrayXd& v2() const { return v2_; }
  const Eigen::ArrayXd& sqrt_mu() const { return sqrt_mu_; }
  Eigen::ArrayXd bracket(double s) const;

  Eigen::ArrayXd derivative(const Eigen::ArrayXd& f, int axis) const;
  Vec3Field gradient(const Eigen::ArrayXd& f) const;
  Eigen::ArrayXd divergence(const Vec3Field& fl) const;
  // Component k of (v wedge d_v) f: v_{k+1} d_{k+2} f - v_{k+2} d_{k+1} f.
  Eigen::ArrayXd wedge(const Eigen::ArrayXd& f, int k) const;

  // Quadrature of f over the v-box.
  double integrate(const Eigen::ArrayXd& f) const;
  double dot(const Eigen::ArrayXd& a, const Eigen::ArrayXd& b) const;

 private:
  int n_;
  double vmax_, dv_;
  Eigen::Index size_, half_size_;
  std::array<Eigen::ArrayXd, 3> v_;
  Eigen::ArrayXd v2_, sqrt_mu_;
  // Wavenumbers on the half spectrum (n x n x (n/2+1)); Nyquist entries are 0.
  std::array<Eigen::ArrayXd, 3> k_;

  Eigen::ArrayXcd forward(const Eigen::ArrayXd& f) const;
  Eigen::ArrayXd backward(Eigen::ArrayXcd spec) const;
};

}  // namespace landau
