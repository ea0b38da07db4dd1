#include "landau/core/velocity_ops.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "landau/core/fft.hpp"
#include "landau/core/grid.hpp"
#include "landau/core/reduce.hpp"

namespace landau {

VelocityOps::VelocityOps(int nv, double vmax)
    : n_(nv), vmax_(vmax), dv_(2.0 * vmax / nv) {
  const Eigen::Index n = nv;
  size_ = n * n * n;
  half_size_ = n * n * (n / 2 + 1);
  for (auto& a : v_) a.resize(size_);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index k = 0; k < n; ++k) {
        const Eigen::Index idx = (i * n + j) * n + k;
        v_[0](idx) = -vmax + dv_ * static_cast<double>(i);
        v_[1](idx) = -vmax + dv_ * static_cast<double>(j);
        v_[2](idx) = -vmax + dv_ * static_cast<double>(k);
      }
  v2_ = v_[0].square() + v_[1].square() + v_[2].square();
  sqrt_mu_ = std::pow(2.0 * std::numbers::pi, -0.75) * (-0.25 * v2_).exp();

  const double k0 = std::numbers::pi / vmax;
  const Eigen::Index nh = n / 2 + 1;
  for (auto& a : k_) a.resize(half_size_);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index k = 0; k < nh; ++k) {
        const Eigen::Index idx = (i * n + j) * nh + k;
        k_[0](idx) = k0 * signed_mode(static_cast<int>(i), nv);
        k_[1](idx) = k0 * signed_mode(static_cast<int>(j), nv);
        k_[2](idx) = k0 * signed_mode(static_cast<int>(k), nv);
      }
}

std::shared_ptr<const VelocityOps> VelocityOps::get(int nv, double vmax) {
  static std::mutex m;
  static std::map<std::pair<int, double>, std::shared_ptr<const VelocityOps>> cache;
  std::lock_guard lock(m);
  auto& slot = cache[{nv, vmax}];
  if (!slot) slot = std::make_shared<const VelocityOps>(nv, vmax);
  return slot;
}

Eigen::ArrayXd VelocityOps::bracket(double s) const { return (1.0 + v2_).pow(0.5 * s); }

Eigen::ArrayXcd VelocityOps::forward(const Eigen::ArrayXd& f) const {
  Eigen::ArrayXd in = f;
  Eigen::ArrayXcd out(half_size_);
  fft::r2c_3d(n_, n_, n_, in.data(), out.data());
  return out;
}

Eigen::ArrayXd VelocityOps::backward(Eigen::ArrayXcd spec) const {
  Eigen::ArrayXd out(size_);
  fft::c2r_3d(n_, n_, n_, spec.data(), out.data());
  return out / static_cast<double>(size_);
}

Eigen::ArrayXd VelocityOps::derivative(const Eigen::ArrayXd& f, int axis) const {
  Eigen::ArrayXcd s = forward(f);
  s *= fft::cplx(0.0, 1.0) * k_[static_cast<std::size_t>(axis)];
  return backward(std::move(s));
}

Vec3Field VelocityOps::gradient(const Eigen::ArrayXd& f) const {
  const Eigen::ArrayXcd s = forward(f);
  Vec3Field g;
  for (int a = 0; a < 3; ++a)
    g[static_cast<std::size_t>(a)] = backward(s * (fft::cplx(0.0, 1.0) * k_[static_cast<std::size_t>(a)]));
  return g;
}

Eigen::ArrayXd VelocityOps::divergence(const Vec3Field& fl) const {
  Eigen::ArrayXcd acc = Eigen::ArrayXcd::Zero(half_size_);
  for (int a = 0; a < 3; ++a)
    acc += forward(fl[static_cast<std::size_t>(a)]) * (fft::cplx(0.0, 1.0) * k_[static_cast<std::size_t>(a)]);
  return backward(std::move(acc));
}

Eigen::ArrayXd VelocityOps::wedge(const Eigen::ArrayXd& f, int k) const {
  const int p = (k + 1) % 3, q = (k + 2) % 3;
  return v(p) * derivative(f, q) - v(q) * derivative(f, p);
}

double VelocityOps::integrate(const Eigen::ArrayXd& f) const {
  return sum_real(static_cast<std::size_t>(f.size()), [&](std::size_t i) { return f(static_cast<Eigen::Index>(i)); }) *
         dv_ * dv_ * dv_;
}

double VelocityOps::dot(const Eigen::ArrayXd& a, const Eigen::ArrayXd& b) const {
  return sum_real(static_cast<std::size_t>(a.size()),
                  [&](std::size_t i) { return a(static_cast<Eigen::Index>(i)) * b(static_cast<Eigen::Index>(i)); }) *
         dv_ * dv_ * dv_;
}

}  // namespace landau
