#include "landau/harness/harness.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "landau/core/errors.hpp"
#include "landau/core/parallel.hpp"
#include "landau/core/reduce.hpp"
#include "landau/norms/norms.hpp"
#include "landau/timeavg/multiplier.hpp"

namespace landau {

namespace {

int raw_mode(int k, int n) { return 2 * k <= n ? k : k - n; }

double ipow(double x, int p) {
  double r = 1.0;
  for (int i = 0; i < p; ++i) r *= x;
  return r;
}

struct LinearFit {
  Eigen::VectorXd coef;
  double r2 = 0.0;
};

LinearFit least_squares(const Eigen::MatrixXd& A, const Eigen::VectorXd& y) {
  LinearFit f;
  f.coef = A.colPivHouseholderQr().solve(y);
  const Eigen::VectorXd res = y - A * f.coef;
  const double mean = y.mean();
  const double ss_tot = (y.array() - mean).square().sum();
  const double ss_res = res.squaredNorm();
  f.r2 = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 0.0;
  return f;
}

}  // namespace

std::vector<DerivativeIndex> derivative_set(int max_order, int spatial_dims) {
  std::vector<DerivativeIndex> out;
  for (int n = 0; n <= max_order; ++n)
    for (int a = 0; a <= n; ++a) {
      // alpha with |alpha| = a on the active axes, beta with |beta| = n - a.
      std::vector<std::array<int, 3>> alphas, betas;
      for (int a1 = a; a1 >= 0; --a1)
        for (int a2 = a - a1; a2 >= 0; --a2) {
          const std::array<int, 3> al{a1, a2, a - a1 - a2};
          if (spatial_dims == 1 && (al[1] != 0 || al[2] != 0)) continue;
          alphas.push_back(al);
        }
      const int b = n - a;
      for (int b1 = b; b1 >= 0; --b1)
        for (int b2 = b - b1; b2 >= 0; --b2) betas.push_back({b1, b2, b - b1 - b2});
      for (const auto& al : alphas)
        for (const auto& be : betas) out.push_back({al, be});
    }
  return out;
}

int max_shell(const GridSpec& g) {
  const double cx = dealias_cutoff(g.nx), cv = dealias_cutoff(g.nv);
  return static_cast<int>(std::floor(std::sqrt(static_cast<double>(g.spatial_dims)) * cx + std::sqrt(3.0) * cv));
}

RegularityRecord record(const PhaseField& f, double t, const RecordRequest& req) {
  const GridSpec& g = f.grid();
  if (req.k_max > kMaxRecordOrder) throw ResolutionExceeded("k_max exceeds " + std::to_string(kMaxRecordOrder));
  for (const auto& d : req.derivatives) {
    if (d.order() > kMaxRecordOrder || d.alpha[0] < 0 || d.beta[0] < 0)
      throw ResolutionExceeded("derivative order " + std::to_string(d.order()) + " exceeds " +
                               std::to_string(kMaxRecordOrder));
    for (int a = g.spatial_dims; a < 3; ++a)
      if (d.alpha[static_cast<std::size_t>(a)] != 0)
        throw ResolutionExceeded("x derivative along an inactive axis");
  }

  RegularityRecord r;
  r.t = t;
  r.derivatives = req.derivatives;
  const PhaseField h = transform(f, Repr::fourier_xv);
  const Eigen::ArrayXcd& c = h.data();
  const std::size_t nx = g.x_size(), nv = g.v_size();
  const double k0 = g.k0();

  // Per-point |f^|^2 and per-axis symbols.
  const Eigen::ArrayXd p = c.abs2();
  std::vector<std::array<int, 3>> mx(nx), mv(nv);
  for (std::size_t ix = 0; ix < nx; ++ix)
    for (int a = 0; a < 3; ++a) mx[ix][static_cast<std::size_t>(a)] = signed_mode(x_index(g, ix, a), g.nx);
  for (std::size_t iv = 0; iv < nv; ++iv)
    for (int a = 0; a < 3; ++a) mv[iv][static_cast<std::size_t>(a)] = signed_mode(v_index(g, iv, a), g.nv);

  const double measure = g.x_volume() * g.v_volume();
  r.norms.assign(req.derivatives.size(), 0.0);
  parallel_for(req.derivatives.size(), [&](std::size_t k) {
    const DerivativeIndex& d = req.derivatives[k];
    Eigen::ArrayXd wv(static_cast<Eigen::Index>(nv));
    for (std::size_t iv = 0; iv < nv; ++iv) {
      double w = 1.0;
      for (std::size_t a = 0; a < 3; ++a) w *= ipow(k0 * mv[iv][a], 2 * d.beta[a]);
      wv(static_cast<Eigen::Index>(iv)) = w;
    }
    const double s = pairwise_sum<double>(0, nx, [&](std::size_t ix) {
      double wx = 1.0;
      for (std::size_t a = 0; a < 3; ++a) wx *= ipow(static_cast<double>(mx[ix][a]), 2 * d.alpha[a]);
      if (wx == 0.0) return 0.0;
      const std::size_t base = ix * nv;
      return wx * sum_real(nv, [&](std::size_t iv) {
               return p(static_cast<Eigen::Index>(base + iv)) * wv(static_cast<Eigen::Index>(iv));
             });
    });
    r.norms[k] = std::sqrt(s * measure);
  });

  if (req.k_max >= 0 && t >= req.t0 && t > 0.0) {
    r.mk_h20.assign(static_cast<std::size_t>(req.k_max) + 1, 0.0);
    r.mk_psi = r.mk_h20;
    for (int k = 0; k <= req.k_max; ++k) {
      const PhaseField mk = apply_M_power(h, MSpec{t, req.t0, static_cast<double>(k)});
      r.mk_h20[static_cast<std::size_t>(k)] = h20_norm(mk);
      r.mk_psi[static_cast<std::size_t>(k)] = psi_norm(mk, req.gamma);
    }
  }

  // Shell maxima over the dealiased modes.
  const int cx = dealias_cutoff(g.nx), cv = dealias_cutoff(g.nv);
  r.shell_spectrum.assign(static_cast<std::size_t>(max_shell(g)) + 1, 0.0);
  for (std::size_t ix = 0; ix < nx; ++ix) {
    double m2 = 0.0;
    bool keep = true;
    for (int a = 0; a < g.spatial_dims; ++a) {
      const int m = raw_mode(x_index(g, ix, a), g.nx);
      if (std::abs(m) > cx) keep = false;
      m2 += static_cast<double>(m) * m;
    }
    if (!keep) continue;
    for (std::size_t iv = 0; iv < nv; ++iv) {
      double e2 = 0.0;
      for (int a = 0; a < 3; ++a) {
        const int m = raw_mode(v_index(g, iv, a), g.nv);
        if (std::abs(m) > cv) keep = false;
        e2 += static_cast<double>(m) * m;
      }
      if (!keep) {
        keep = true;
        continue;
      }
      const auto s = static_cast<std::size_t>(std::floor(std::sqrt(m2) + std::sqrt(e2)));
      const double a = std::sqrt(p(static_cast<Eigen::Index>(ix * nv + iv)));
      r.shell_spectrum[s] = std::max(r.shell_spectrum[s], a);
    }
  }
  return r;
}

double time_weight(TimeWeight w, const DerivativeIndex& d, double t) {
  const double tt = t_tilde(t);
  const double e = w == TimeWeight::analytic ? 1.5 * d.x_order() + 0.5 * d.v_order() : 1.5 * d.order();
  return std::pow(tt, e);
}

SmoothingFit fit_factorial(const std::vector<DerivativeIndex>& d, const std::vector<double>& S) {
  SmoothingFit fit;
  fit.derivatives = d;
  fit.S = S;
  std::vector<std::size_t> use;
  std::set<int> orders;
  for (std::size_t i = 0; i < S.size(); ++i)
    if (S[i] > 0.0 && std::isfinite(S[i])) {
      use.push_back(i);
      orders.insert(d[i].order());
    }
  if (use.empty()) {
    fit.degenerate = true;
    return fit;
  }
  if (use.size() < 3 || orders.size() < 3)
    throw InsufficientData("factorial fit needs positive S values at three or more distinct orders");
  Eigen::MatrixXd A(static_cast<Eigen::Index>(use.size()), 3);
  Eigen::VectorXd y(static_cast<Eigen::Index>(use.size()));
  for (std::size_t k = 0; k < use.size(); ++k) {
    const int n = d[use[k]].order();
    const auto row = static_cast<Eigen::Index>(k);
    A(row, 0) = n;
    A(row, 1) = std::lgamma(n + 1.0);
    A(row, 2) = 1.0;
    y(row) = std::log(S[use[k]]);
  }
  const LinearFit lf = least_squares(A, y);
  fit.C_fit = std::exp(lf.coef(0));
  fit.sigma_fit = lf.coef(1);
  fit.c0 = lf.coef(2);
  fit.r2 = lf.r2;
  fit.points = use.size();
  return fit;
}

SmoothingFit fit_smoothing(const std::vector<RegularityRecord>& records, TimeWeight w) {
  std::vector<const RegularityRecord*> use;
  for (const auto& r : records)
    if (r.t > 0.0) use.push_back(&r);
  if (use.size() < 8) {
    std::ostringstream os;
    os << "fit_smoothing needs at least 8 records with t > 0, got " << use.size();
    throw InsufficientData(os.str());
  }
  const std::vector<DerivativeIndex>& d = use.front()->derivatives;
  std::vector<double> S(d.size(), 0.0);
  for (const RegularityRecord* r : use) {
    if (r->norms.size() != d.size()) throw InsufficientData("records disagree on the derivative set");
    for (std::size_t i = 0; i < d.size(); ++i) S[i] = std::max(S[i], time_weight(w, d[i], r->t) * r->norms[i]);
  }
  return fit_factorial(d, S);
}

SpectrumFit spectrum_decay(const RegularityRecord& r) {
  std::vector<double> xs, ys;
  for (std::size_t s = 0; s < r.shell_spectrum.size(); ++s)
    if (r.shell_spectrum[s] > 1e-13) {
      xs.push_back(static_cast<double>(s));
      ys.push_back(std::log(r.shell_spectrum[s]));
    }
  if (xs.size() < 3) throw InsufficientData("spectrum_decay needs three shells above 1e-13");
  Eigen::MatrixXd A(static_cast<Eigen::Index>(xs.size()), 2);
  Eigen::VectorXd y(static_cast<Eigen::Index>(xs.size()));
  for (std::size_t k = 0; k < xs.size(); ++k) {
    A(static_cast<Eigen::Index>(k), 0) = xs[k];
    A(static_cast<Eigen::Index>(k), 1) = 1.0;
    y(static_cast<Eigen::Index>(k)) = ys[k];
  }
  const LinearFit lf = least_squares(A, y);
  SpectrumFit out;
  out.slope = lf.coef(0);
  out.r2 = lf.r2;
  out.shells = xs.size();
  out.analytic = out.slope <= -0.1 && out.r2 >= 0.9;
  return out;
}

PhaseField heat_flow_field(const GridSpec& g, double t) {
  const PhaseField f0 = sample(g, [](const double*, const double* v) {
    return cplx(std::exp(-0.5 * (v[0] * v[0] + v[1] * v[1] + v[2] * v[2])), 0.0);
  });
  PhaseField h = transform(f0, Repr::fourier_xv);
  Eigen::ArrayXcd d = h.data();
  const std::size_t nv = g.v_size();
  const double k0 = g.k0();
  for (std::size_t ix = 0; ix < g.x_size(); ++ix)
    for (std::size_t iv = 0; iv < nv; ++iv) {
      double e2 = 0.0;
      for (int a = 0; a < 3; ++a) {
        const double eta = k0 * signed_mode(v_index(g, iv, a), g.nv);
        e2 += eta * eta;
      }
      d(static_cast<Eigen::Index>(ix * nv + iv)) *= std::exp(-t * e2);
    }
  return transform(PhaseField::from_data(g, Repr::fourier_xv, std::move(d)), Repr::physical);
}

double heat_flow_norm(const GridSpec& g, const std::array<int, 3>& beta, double t) {
  const double s = 1.0 + 2.0 * t;
  double n2 = g.x_volume();
  for (int b : beta) n2 *= std::tgamma(b + 0.5) / std::pow(s, b + 0.5);
  return std::sqrt(n2);
}

HeatOracleReport heat_flow_oracle(const GridSpec& g, int max_order, const std::vector<double>& times) {
  HeatOracleReport rep;
  rep.grid = g;
  RecordRequest req;
  for (const auto& d : derivative_set(max_order, g.spatial_dims))
    if (d.x_order() == 0) req.derivatives.push_back(d);
  req.k_max = -1;
  std::vector<RegularityRecord> records;
  std::vector<double> S_exact(req.derivatives.size(), 0.0);
  for (double t : times) {
    records.push_back(record(heat_flow_field(g, t), t, req));
    const RegularityRecord& r = records.back();
    for (std::size_t i = 0; i < r.norms.size(); ++i) {
      const double exact = heat_flow_norm(g, req.derivatives[i].beta, t);
      rep.max_norm_error = std::max(rep.max_norm_error, std::abs(r.norms[i] - exact) / exact);
      if (t > 0.0)
        S_exact[i] = std::max(S_exact[i], time_weight(TimeWeight::analytic, req.derivatives[i], t) * exact);
    }
  }
  rep.fit = fit_smoothing(records, TimeWeight::analytic);
  rep.exact_fit = fit_factorial(req.derivatives, S_exact);
  rep.C_relative_error = std::abs(rep.fit.C_fit - rep.exact_fit.C_fit) / rep.exact_fit.C_fit;
  return rep;
}

}  // namespace landau
