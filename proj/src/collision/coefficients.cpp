#include "landau/collision/coefficients.hpp"

#include "internal.hpp"

namespace landau {

namespace detail {

RealCoefficients real_coefficients(const CollisionEngine& e, const Arr& g, bool moments, bool abar_forms) {
  const VelocityOps& o = e.ops();
  RealCoefficients c;
  const Arr G = o.sqrt_mu() * g;
  const Vec3Field dg = o.gradient(g);
  Vec3Field sdg;
  for (int j = 0; j < 3; ++j) sdg[static_cast<std::size_t>(j)] = o.sqrt_mu() * dg[static_cast<std::size_t>(j)];

  if (moments) {
    auto conv = [&](const Arr& F) { return e.conv_radial(F); };
    c.a = conv(G);
    for (int j = 0; j < 3; ++j) {
      const auto u = static_cast<std::size_t>(j);
      c.A[u] = conv(sdg[u]);
      c.B[u] = conv(o.v(j) * G);
    }
    // T_kl = |v|^gamma * (v_k v_l G);  P_{i;k} = |v|^gamma * (v_k sqrt(mu) d_i g);
    // Q_{i;kl} = |v|^gamma * (v_k v_l sqrt(mu) d_i g).
    Mat3Field T, P;
    std::array<Mat3Field, 3> Q;
    for (int k = 0; k < 3; ++k)
      for (int l = k; l < 3; ++l) {
        const auto uk = static_cast<std::size_t>(k), ul = static_cast<std::size_t>(l);
        T[uk][ul] = conv(o.v(k) * o.v(l) * G);
        T[ul][uk] = T[uk][ul];
        for (std::size_t i = 0; i < 3; ++i) {
          Q[i][uk][ul] = conv(o.v(k) * o.v(l) * sdg[i]);
          Q[i][ul][uk] = Q[i][uk][ul];
        }
      }
    for (std::size_t i = 0; i < 3; ++i)
      for (int k = 0; k < 3; ++k) P[i][static_cast<std::size_t>(k)] = conv(o.v(k) * sdg[i]);
    const Arr trace = T[0][0] + T[1][1] + T[2][2];
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
        c.M[ui][uj] = (i == j ? trace : Arr::Zero(o.size())) - T[ui][uj];
        if (i == j) {
          c.rho[ui][uj] = Arr::Zero(o.size());
          c.lambda[ui][uj] = Arr::Zero(o.size());
          continue;
        }
        c.rho[ui][uj] = Q[ui][uj][uj] - 2.0 * o.v(j) * P[ui][uj] + o.v(i) * P[uj][uj] + o.v(j) * P[uj][ui] -
                        Q[uj][ui][uj];
        c.lambda[ui][uj] = o.v(i) * T[uj][uj] - o.v(j) * T[ui][uj];
      }
  }

  if (abar_forms) {
    const Sym3Field ab = e.abar(G);
    const auto& table = e.kernels();
    std::array<Eigen::ArrayXcd, 3> dhat, vhat;
    for (int j = 0; j < 3; ++j) {
      dhat[static_cast<std::size_t>(j)] = table.forward(sdg[static_cast<std::size_t>(j)]);
      vhat[static_cast<std::size_t>(j)] = table.forward(o.v(j) * G);
    }
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
        c.ab[ui][uj] = ab[static_cast<std::size_t>(sym_index(i, j))];
        c.ad[ui][uj] = table.apply(dhat[uj], table.aij(i, j));
        c.av[ui][uj] = table.apply(vhat[uj], table.aij(i, j));
      }
  }
  return c;
}

VelocityField to_field(const GridSpec& grid, const Arr& re, const Arr& im) {
  Eigen::ArrayXcd d(re.size());
  d.real() = re;
  d.imag() = im;
  return VelocityField::from_data(grid, Repr::physical, std::move(d));
}

std::vector<VelocityField> complexify(const VelocityField& g, const VelocityField& h, const BilinearOp& op) {
  const VelocityField gp = g.transformed(Repr::physical), hp = h.transformed(Repr::physical);
  const Arr gr = gp.data().real(), gi = gp.data().imag();
  const Arr hr = hp.data().real(), hi = hp.data().imag();
  const bool g_im = (gi != 0.0).any(), h_im = (hi != 0.0).any();
  std::vector<Arr> re = op(gr, hr);
  std::vector<Arr> im(re.size(), Arr::Zero(gr.size()));
  if (g_im && h_im) {
    const auto t = op(gi, hi);
    for (std::size_t k = 0; k < re.size(); ++k) re[k] -= t[k];
  }
  if (h_im) {
    const auto t = op(gr, hi);
    for (std::size_t k = 0; k < re.size(); ++k) im[k] += t[k];
  }
  if (g_im) {
    const auto t = op(gi, hr);
    for (std::size_t k = 0; k < re.size(); ++k) im[k] += t[k];
  }
  std::vector<VelocityField> out;
  out.reserve(re.size());
  for (std::size_t k = 0; k < re.size(); ++k) out.push_back(to_field(g.grid(), re[k], im[k]));
  return out;
}

VelocityField complexify(const VelocityField& f, const LinearOp& op) {
  const VelocityField p = f.transformed(Repr::physical);
  const Arr re = p.data().real(), im = p.data().imag();
  const Arr out_re = op(re);
  const Arr out_im = (im != 0.0).any() ? op(im) : Arr::Zero(re.size());
  return to_field(f.grid(), out_re, out_im);
}

}  // namespace detail

ConvCoefficients compute_coefficients(const VelocityField& g, HardPotential gamma) {
  const GridSpec& grid = g.grid();
  auto engine = CollisionEngine::get(grid, gamma.gamma);
  const VelocityField gp = g.transformed(Repr::physical);
  const detail::Arr gr = gp.data().real(), gi = gp.data().imag();
  const bool has_im = (gi != 0.0).any();
  const auto cr = detail::real_coefficients(*engine, gr, true, true);
  const auto ci = has_im ? detail::real_coefficients(*engine, gi, true, true) : detail::RealCoefficients{};
  auto field = [&](const detail::Arr& re, const detail::Arr* im) {
    return detail::to_field(grid, re, im ? *im : detail::Arr::Zero(re.size()));
  };
  ConvCoefficients c;
  c.grid = grid;
  c.gamma = gamma.gamma;
  c.a = field(cr.a, has_im ? &ci.a : nullptr);
  for (std::size_t i = 0; i < 3; ++i) {
    c.A[i] = field(cr.A[i], has_im ? &ci.A[i] : nullptr);
    c.B[i] = field(cr.B[i], has_im ? &ci.B[i] : nullptr);
    for (std::size_t j = 0; j < 3; ++j) {
      c.M[i][j] = field(cr.M[i][j], has_im ? &ci.M[i][j] : nullptr);
      c.rho[i][j] = field(cr.rho[i][j], has_im ? &ci.rho[i][j] : nullptr);
      c.lambda[i][j] = field(cr.lambda[i][j], has_im ? &ci.lambda[i][j] : nullptr);
      c.abar_g[i][j] = field(cr.ab[i][j], has_im ? &ci.ab[i][j] : nullptr);
      c.abar_dg[i][j] = field(cr.ad[i][j], has_im ? &ci.ad[i][j] : nullptr);
      c.abar_vg[i][j] = field(cr.av[i][j], has_im ? &ci.av[i][j] : nullptr);
    }
  }
  return c;
}

}  // namespace landau
