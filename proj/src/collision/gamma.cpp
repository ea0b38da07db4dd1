#include "landau/collision/gamma.hpp"

#include <cmath>

#include "internal.hpp"
#include "landau/core/errors.hpp"
#include "landau/core/parallel.hpp"

namespace landau {

namespace detail {

namespace {

std::size_t nxt(int k, int s) { return static_cast<std::size_t>((k + s) % 3); }

// cross(X, Y)_k = X_{k+1} Y_{k+2} - X_{k+2} Y_{k+1}
Vec3Field cross(const Vec3Field& X, const std::array<const Arr*, 3>& Y) {
  Vec3Field out;
  for (int k = 0; k < 3; ++k) out[static_cast<std::size_t>(k)] = X[nxt(k, 1)] * *Y[nxt(k, 2)] - X[nxt(k, 2)] * *Y[nxt(k, 1)];
  return out;
}

}  // namespace

// Wedge-wedge contractions follow the bivector convention (sum over ordered index pairs), which
// is twice the 3-vector dot product; with it the six terms add up to Gamma exactly.
std::vector<Arr> L_terms(const CollisionEngine& e, const RealCoefficients& c, const Arr& h) {
  const VelocityOps& o = e.ops();
  auto D = [&](const Arr& f, int i) { return o.derivative(f, i); };
  auto W = [&](const Arr& f, int k) { return o.wedge(f, k); };
  const std::array<const Arr*, 3> V{&o.v(0), &o.v(1), &o.v(2)};
  const Vec3Field dh = o.gradient(h);
  Vec3Field Wh;
  for (int k = 0; k < 3; ++k) Wh[static_cast<std::size_t>(k)] = W(h, k);
  const Vec3Field Bv = cross(c.B, V);
  const Vec3Field Av = cross(c.A, V);
  const Arr zero = Arr::Zero(o.size());
  std::vector<Arr> L(6, zero);

  Vec3Field flux_M, flux_Mv;
  for (int i = 0; i < 3; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    flux_M[ui] = zero;
    flux_Mv[ui] = zero;
    for (int j = 0; j < 3; ++j) {
      const auto uj = static_cast<std::size_t>(j);
      flux_M[ui] += c.M[ui][uj] * dh[uj];
      flux_Mv[ui] += c.M[ui][uj] * o.v(j) * h;
    }
  }

  // L1
  for (int k = 0; k < 3; ++k) {
    const auto uk = static_cast<std::size_t>(k);
    L[0] += W(c.a * Wh[uk], k);
    L[0] += D(c.B[nxt(k, 2)] * Wh[uk], static_cast<int>(nxt(k, 1))) - D(c.B[nxt(k, 1)] * Wh[uk], static_cast<int>(nxt(k, 2)));
    const Arr Bd = c.B[nxt(k, 1)] * dh[nxt(k, 2)] - c.B[nxt(k, 2)] * dh[nxt(k, 1)];
    L[0] -= W(Bd, k);
  }
  L[0] += o.divergence(flux_M);

  // L2
  for (int k = 0; k < 3; ++k) {
    const auto uk = static_cast<std::size_t>(k);
    L[1] += 0.5 * (W(Bv[uk] * h, k) + Bv[uk] * Wh[uk]);
  }
  L[1] -= 0.5 * o.divergence(flux_Mv);
  for (int i = 0; i < 3; ++i) L[1] -= 0.5 * o.v(i) * flux_M[static_cast<std::size_t>(i)];

  // L3
  for (int i = 0; i < 3; ++i) L[2] += 0.25 * o.v(i) * flux_Mv[static_cast<std::size_t>(i)];

  // L4, L5, L6
  Vec3Field flux_rho, flux_lam;
  for (int i = 0; i < 3; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    flux_rho[ui] = zero;
    flux_lam[ui] = zero;
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      const auto uj = static_cast<std::size_t>(j);
      flux_rho[ui] += c.rho[ui][uj] * h;
      flux_lam[ui] += c.lambda[ui][uj] * h;
    }
  }
  for (int k = 0; k < 3; ++k) {
    const auto uk = static_cast<std::size_t>(k);
    L[3] += W(Av[uk] * h, k);
    L[4] -= 0.5 * W(Bv[uk] * h, k);
  }
  L[3] -= o.divergence(flux_rho);
  L[4] += 0.5 * o.divergence(flux_lam);
  for (int i = 0; i < 3; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    L[4] += 0.5 * o.v(i) * flux_rho[ui];
    L[5] -= 0.25 * o.v(i) * flux_lam[ui];
  }
  return L;
}

std::vector<Arr> L_terms_abar(const CollisionEngine& e, const RealCoefficients& c, const Arr& h) {
  const VelocityOps& o = e.ops();
  const Vec3Field dh = o.gradient(h);
  const Arr zero = Arr::Zero(o.size());
  Vec3Field f1, f2, f4, f5;
  Arr s2 = zero, s3 = zero, s5 = zero, s6 = zero;
  for (int i = 0; i < 3; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    f1[ui] = zero;
    f2[ui] = zero;
    f4[ui] = zero;
    f5[ui] = zero;
    for (int j = 0; j < 3; ++j) {
      const auto uj = static_cast<std::size_t>(j);
      f1[ui] += c.ab[ui][uj] * dh[uj];
      f2[ui] += c.ab[ui][uj] * o.v(j) * h;
      f4[ui] += c.ad[ui][uj] * h;
      f5[ui] += c.av[ui][uj] * h;
      s2 += o.v(i) * c.ab[ui][uj] * dh[uj];
      s3 += o.v(i) * c.ab[ui][uj] * o.v(j) * h;
      s5 += o.v(i) * c.ad[ui][uj] * h;
      s6 += o.v(i) * c.av[ui][uj] * h;
    }
  }
  std::vector<Arr> L(6);
  L[0] = o.divergence(f1);
  L[1] = -0.5 * o.divergence(f2) - 0.5 * s2;
  L[2] = 0.25 * s3;
  L[3] = -o.divergence(f4);
  L[4] = 0.5 * o.divergence(f5) + 0.5 * s5;
  L[5] = -0.25 * s6;
  return L;
}

}  // namespace detail

namespace {

void require_certified(const VelocityField& g, const VelocityField& h) {
  if (!g.certified() || !h.certified())
    throw GuardViolation("Gamma requires inputs carrying a Gaussian-decay certificate");
}

void check_term(int j) {
  if (j < 1 || j > 6) throw std::invalid_argument("L_j term index must be in 1..6");
}

}  // namespace

VelocityField QL_direct(const VelocityField& G, const VelocityField& H, HardPotential gamma) {
  auto e = CollisionEngine::get(G.grid(), gamma.gamma);
  return detail::complexify(G, H, [&](const detail::Arr& a, const detail::Arr& b) {
    return std::vector<detail::Arr>{e->QL(a, b)};
  })[0];
}

GammaOutput gamma_direct(const VelocityField& g, const VelocityField& h, HardPotential gamma) {
  require_certified(g, h);
  auto e = CollisionEngine::get(g.grid(), gamma.gamma);
  auto v = detail::complexify(g, h, [&](const detail::Arr& a, const detail::Arr& b) {
    return std::vector<detail::Arr>{e->gamma(a, b)};
  });
  return {v[0], GammaMethod::direct, 0};
}

GammaOutput gamma_decomposed(const VelocityField& g, const VelocityField& h, HardPotential gamma) {
  require_certified(g, h);
  auto e = CollisionEngine::get(g.grid(), gamma.gamma);
  auto v = detail::complexify(g, h, [&](const detail::Arr& a, const detail::Arr& b) {
    const auto c = detail::real_coefficients(*e, a, true, false);
    const auto L = detail::L_terms(*e, c, b);
    detail::Arr s = L[0];
    for (std::size_t k = 1; k < 6; ++k) s += L[k];
    return std::vector<detail::Arr>{s};
  });
  return {v[0], GammaMethod::decomposed, 0};
}

GammaOutput L_term(int j, const VelocityField& g, const VelocityField& h, HardPotential gamma) {
  check_term(j);
  require_certified(g, h);
  auto e = CollisionEngine::get(g.grid(), gamma.gamma);
  auto v = detail::complexify(g, h, [&](const detail::Arr& a, const detail::Arr& b) {
    const auto c = detail::real_coefficients(*e, a, true, false);
    return std::vector<detail::Arr>{detail::L_terms(*e, c, b)[static_cast<std::size_t>(j - 1)]};
  });
  return {v[0], GammaMethod::term, j};
}

GammaOutput L_term_abar(int j, const VelocityField& g, const VelocityField& h, HardPotential gamma) {
  check_term(j);
  require_certified(g, h);
  auto e = CollisionEngine::get(g.grid(), gamma.gamma);
  auto v = detail::complexify(g, h, [&](const detail::Arr& a, const detail::Arr& b) {
    const auto c = detail::real_coefficients(*e, a, false, true);
    return std::vector<detail::Arr>{detail::L_terms_abar(*e, c, b)[static_cast<std::size_t>(j - 1)]};
  });
  return {v[0], GammaMethod::term_abar, j};
}

PhaseGammaOutput gamma_direct(const PhaseField& g, const PhaseField& h, HardPotential gamma) {
  if (!g.certified() || !h.certified())
    throw GuardViolation("Gamma requires inputs carrying a Gaussian-decay certificate");
  auto e = CollisionEngine::get(g.grid(), gamma.gamma);
  const Repr work = Repr::physical;
  const PhaseField gp = g.transformed(work), hp = h.transformed(work);
  const GridSpec& grid = g.grid();
  const std::size_t nv = grid.v_size();
  Eigen::ArrayXcd out(static_cast<Eigen::Index>(grid.size()));
  parallel_for(grid.x_size(), [&](std::size_t ix) {
    const auto r = detail::complexify(slice(gp, ix), slice(hp, ix), [&](const detail::Arr& a, const detail::Arr& b) {
      return std::vector<detail::Arr>{e->gamma(a, b)};
    });
    out.segment(static_cast<Eigen::Index>(ix * nv), static_cast<Eigen::Index>(nv)) = r[0].data();
  });
  return {PhaseField::from_data(grid, work, std::move(out)).transformed(g.repr()), GammaMethod::direct, 0};
}

VelocityField linearized_L(const VelocityField& f, HardPotential gamma) {
  auto e = CollisionEngine::get(f.grid(), gamma.gamma);
  return detail::complexify(f, [&](const detail::Arr& a) { return e->linearized(a); }).transformed(f.repr());
}

PhaseField linearized_L(const PhaseField& f, HardPotential gamma) {
  auto e = CollisionEngine::get(f.grid(), gamma.gamma);
  const PhaseField fp = f.transformed(Repr::physical);
  const GridSpec& grid = f.grid();
  const std::size_t nv = grid.v_size();
  Eigen::ArrayXcd out(static_cast<Eigen::Index>(grid.size()));
  parallel_for(grid.x_size(), [&](std::size_t ix) {
    const auto r = detail::complexify(slice(fp, ix), [&](const detail::Arr& a) { return e->linearized(a); });
    out.segment(static_cast<Eigen::Index>(ix * nv), static_cast<Eigen::Index>(nv)) = r.data();
  });
  return PhaseField::from_data(grid, Repr::physical, std::move(out)).transformed(f.repr());
}

namespace {

// Real part of <op(h), h> / ||h||^2 for a real quadratic form evaluated part by part.
double quadratic_form(const VelocityField& h, const std::function<detail::Arr(const CollisionEngine&, const detail::RealCoefficients&, const detail::Arr&)>& op,
                      HardPotential gamma) {
  auto e = CollisionEngine::get(h.grid(), gamma.gamma);
  const auto c = detail::real_coefficients(*e, e->ops().sqrt_mu(), true, false);
  const VelocityField hp = h.transformed(Repr::physical);
  const detail::Arr re = hp.data().real(), im = hp.data().imag();
  double q = e->ops().dot(op(*e, c, re), re);
  if ((im != 0.0).any()) q += e->ops().dot(op(*e, c, im), im);
  const double n = l2_norm(h);
  return n > 0.0 ? q / (n * n) : 0.0;
}

}  // namespace

double upl2_form(const VelocityField& h, HardPotential gamma) {
  return quadratic_form(h, [](const CollisionEngine& e, const detail::RealCoefficients& c, const detail::Arr& x) {
    return detail::L_terms(e, c, x)[1];
  }, gamma);
}

double l3l6_form(const VelocityField& h, HardPotential gamma) {
  return quadratic_form(h, [](const CollisionEngine& e, const detail::RealCoefficients& c, const detail::Arr& x) {
    const auto L = detail::L_terms(e, c, x);
    return detail::Arr(L[2] + L[5]);
  }, gamma);
}

double posterm_form(const VelocityField& h, HardPotential gamma) {
  return quadratic_form(h, [](const CollisionEngine& e, const detail::RealCoefficients& c, const detail::Arr& x) {
    const VelocityOps& o = e.ops();
    detail::Arr lam = detail::Arr::Zero(o.size()), vmv = detail::Arr::Zero(o.size());
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
        if (i != j) lam += o.v(i) * c.lambda[ui][uj];
        vmv += o.v(i) * c.M[ui][uj] * o.v(j);
      }
    return detail::Arr((lam - vmv) * x);
  }, gamma);
}

IdentityReport make_report(std::string name, double gamma, const GridSpec& grid, double err, double threshold) {
  return {std::move(name), gamma, grid, err, threshold, std::isfinite(err) && err <= threshold};
}

nlohmann::json to_json(const IdentityReport& r) {
  return {{"identity_name", r.identity_name}, {"gamma", r.gamma},         {"grid", to_json(r.grid)},
          {"relative_error", r.relative_error}, {"threshold", r.threshold}, {"pass", r.pass}};
}

double relative_l2(const VelocityField& a, const VelocityField& b) {
  const double d = l2_norm(a - b), n = l2_norm(b);
  return n > 0.0 ? d / n : d;
}

double relative_l2(const PhaseField& a, const PhaseField& b) {
  const double d = l2_norm(a - b), n = l2_norm(b);
  return n > 0.0 ? d / n : d;
}

}  // namespace landau
