#include "landau/collision/engine.hpp"

#include <cmath>
#include <map>
#include <tuple>

#include "landau/collision/kernel.hpp"
#include "landau/core/fft.hpp"

namespace landau {

KernelTable::KernelTable(std::shared_ptr<const VelocityOps> ops, double gamma)
    : ops_(std::move(ops)), n_(ops_->n()), m_(2 * ops_->n()) {
  const Eigen::Index m = m_;
  padded_ = m * m * m;
  half_ = m * m * (m / 2 + 1);
  const double dv = ops_->dv();
  auto offset = [&](Eigen::Index i) { return dv * static_cast<double>(i < m / 2 ? i : i - m); };

  auto spectrum = [&](auto&& kernel) {
    Eigen::ArrayXd table(padded_);
    for (Eigen::Index a = 0; a < m; ++a)
      for (Eigen::Index b = 0; b < m; ++b)
        for (Eigen::Index c = 0; c < m; ++c)
          table((a * m + b) * m + c) = kernel(std::array<double, 3>{offset(a), offset(b), offset(c)});
    Eigen::ArrayXcd out(half_);
    fft::r2c_3d(m_, m_, m_, table.data(), out.data());
    // The tables are even in z, so their spectra are real.
    return Eigen::ArrayXd(out.real());
  };

  radial_ = spectrum([&](const std::array<double, 3>& z) {
    const double r2 = z[0] * z[0] + z[1] * z[1] + z[2] * z[2];
    if (gamma == 0.0) return 1.0;
    return r2 == 0.0 ? 0.0 : std::pow(r2, 0.5 * gamma);
  });
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j)
      aij_[static_cast<std::size_t>(sym_index(i, j))] =
          spectrum([&](const std::array<double, 3>& z) { return kernel_aij(z, gamma, i, j); });
}

const Eigen::ArrayXd& KernelTable::aij(int i, int j) const {
  return aij_[static_cast<std::size_t>(sym_index(i, j))];
}

Eigen::ArrayXcd KernelTable::forward(const Eigen::ArrayXd& F) const {
  const Eigen::Index n = n_, m = m_;
  Eigen::ArrayXd padded = Eigen::ArrayXd::Zero(padded_);
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < n; ++b)
      padded.segment((a * m + b) * m, n) = F.segment((a * n + b) * n, n);
  Eigen::ArrayXcd out(half_);
  fft::r2c_3d(m_, m_, m_, padded.data(), out.data());
  return out;
}

Eigen::ArrayXd KernelTable::inverse(Eigen::ArrayXcd spec) const {
  const Eigen::Index n = n_, m = m_;
  Eigen::ArrayXd full(padded_);
  fft::c2r_3d(m_, m_, m_, spec.data(), full.data());
  const double dv = ops_->dv();
  const double scale = dv * dv * dv / static_cast<double>(padded_);
  Eigen::ArrayXd out(n * n * n);
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < n; ++b)
      out.segment((a * n + b) * n, n) = full.segment((a * m + b) * m, n) * scale;
  return out;
}

Eigen::ArrayXd KernelTable::apply(const Eigen::ArrayXcd& Fhat, const Eigen::ArrayXd& khat) const {
  return inverse(Fhat * khat);
}

CollisionEngine::CollisionEngine(int nv, double vmax, double gamma)
    : ops_(VelocityOps::get(nv, vmax)), gamma_(gamma), table_(ops_, gamma) {}

std::shared_ptr<const CollisionEngine> CollisionEngine::get(const GridSpec& g, double gamma) {
  static std::mutex m;
  static std::map<std::tuple<int, double, double>, std::shared_ptr<const CollisionEngine>> cache;
  std::lock_guard lock(m);
  auto& slot = cache[{g.nv, g.vmax, gamma}];
  if (!slot) slot = std::make_shared<const CollisionEngine>(g.nv, g.vmax, gamma);
  return slot;
}

Eigen::ArrayXd CollisionEngine::conv_radial(const Eigen::ArrayXd& F) const {
  return table_.apply(table_.forward(F), table_.radial());
}

Sym3Field CollisionEngine::abar(const Eigen::ArrayXd& F) const {
  const Eigen::ArrayXcd Fhat = table_.forward(F);
  Sym3Field out;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j)
      out[static_cast<std::size_t>(sym_index(i, j))] = table_.apply(Fhat, table_.aij(i, j));
  return out;
}

Eigen::ArrayXd CollisionEngine::abar_ij(const Eigen::ArrayXd& F, int i, int j) const {
  return table_.apply(table_.forward(F), table_.aij(i, j));
}

Vec3Field CollisionEngine::abar_contract(const Vec3Field& X) const {
  std::array<Eigen::ArrayXcd, 3> Xhat;
  for (std::size_t j = 0; j < 3; ++j) Xhat[j] = table_.forward(X[j]);
  Vec3Field out;
  for (int i = 0; i < 3; ++i) {
    Eigen::ArrayXcd acc = Xhat[0] * table_.aij(i, 0);
    acc += Xhat[1] * table_.aij(i, 1);
    acc += Xhat[2] * table_.aij(i, 2);
    out[static_cast<std::size_t>(i)] = table_.inverse(std::move(acc));
  }
  return out;
}

LeftFactor CollisionEngine::left(const Eigen::ArrayXd& g) const {
  const VelocityOps& o = *ops_;
  const Eigen::ArrayXd G = o.sqrt_mu() * g;
  const Vec3Field dg = o.gradient(g);
  Vec3Field X;
  for (int j = 0; j < 3; ++j)
    X[static_cast<std::size_t>(j)] = o.sqrt_mu() * dg[static_cast<std::size_t>(j)] - 0.5 * o.v(j) * G;
  return {abar(G), abar_contract(X)};
}

Eigen::ArrayXd CollisionEngine::apply(const LeftFactor& L, const Eigen::ArrayXd& h) const {
  const VelocityOps& o = *ops_;
  const Vec3Field dh = o.gradient(h);
  Vec3Field shifted;
  for (int j = 0; j < 3; ++j)
    shifted[static_cast<std::size_t>(j)] = dh[static_cast<std::size_t>(j)] - 0.5 * o.v(j) * h;
  Vec3Field flux;
  Eigen::ArrayXd vflux = Eigen::ArrayXd::Zero(o.size());
  for (int i = 0; i < 3; ++i) {
    Eigen::ArrayXd fl = -L.b[static_cast<std::size_t>(i)] * h;
    for (int j = 0; j < 3; ++j)
      fl += L.abar[static_cast<std::size_t>(sym_index(i, j))] * shifted[static_cast<std::size_t>(j)];
    vflux += o.v(i) * fl;
    flux[static_cast<std::size_t>(i)] = std::move(fl);
  }
  return o.divergence(flux) - 0.5 * vflux;
}

Eigen::ArrayXd CollisionEngine::gamma(const Eigen::ArrayXd& g, const Eigen::ArrayXd& h) const {
  return apply(left(g), h);
}

Eigen::ArrayXd CollisionEngine::gamma_maxwellian_right(const Eigen::ArrayXd& f) const {
  const VelocityOps& o = *ops_;
  const Vec3Field df = o.gradient(f);
  Vec3Field X;
  for (int j = 0; j < 3; ++j)
    X[static_cast<std::size_t>(j)] = o.sqrt_mu() * (df[static_cast<std::size_t>(j)] + 0.5 * o.v(j) * f);
  Vec3Field c = abar_contract(X);
  Eigen::ArrayXd vc = Eigen::ArrayXd::Zero(o.size());
  for (int i = 0; i < 3; ++i) {
    c[static_cast<std::size_t>(i)] *= o.sqrt_mu();
    vc += o.v(i) * c[static_cast<std::size_t>(i)];
  }
  return 0.5 * vc - o.divergence(c);
}

const LeftFactor& CollisionEngine::maxwellian_left() const {
  std::call_once(maxwellian_once_, [&] { maxwellian_left_ = left(ops_->sqrt_mu()); });
  return *maxwellian_left_;
}

Eigen::ArrayXd CollisionEngine::gamma_maxwellian_left(const Eigen::ArrayXd& f) const {
  return apply(maxwellian_left(), f);
}

Eigen::ArrayXd CollisionEngine::linearized(const Eigen::ArrayXd& f) const {
  return -gamma_maxwellian_left(f) - gamma_maxwellian_right(f);
}

Eigen::ArrayXd CollisionEngine::QL(const Eigen::ArrayXd& G, const Eigen::ArrayXd& H) const {
  const VelocityOps& o = *ops_;
  const Sym3Field aG = abar(G);
  const Vec3Field dH = o.gradient(H);
  const Vec3Field adG = abar_contract(o.gradient(G));
  Vec3Field flux;
  for (int i = 0; i < 3; ++i) {
    Eigen::ArrayXd fl = -adG[static_cast<std::size_t>(i)] * H;
    for (int j = 0; j < 3; ++j)
      fl += aG[static_cast<std::size_t>(sym_index(i, j))] * dH[static_cast<std::size_t>(j)];
    flux[static_cast<std::size_t>(i)] = std::move(fl);
  }
  return o.divergence(flux);
}

}  // namespace landau
