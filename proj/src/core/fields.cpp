#include "landau/core/fields.hpp"

#include <cmath>
#include <numbers>

#include "landau/core/errors.hpp"
#include "landau/core/fft.hpp"
#include "landau/core/reduce.hpp"

namespace landau {

namespace {

int level(Repr r, bool has_x) {
  switch (r) {
    case Repr::physical:
      return 0;
    case Repr::fourier_x:
      return has_x ? 1 : 0;
    case Repr::fourier_xv:
      return 2;
  }
  return 0;
}

Repr normalize_repr(Repr r, bool has_x) {
  return (!has_x && r == Repr::fourier_x) ? Repr::physical : r;
}

void x_fft(Eigen::ArrayXcd& d, const GridSpec& g, int sign) {
  std::vector<int> dims(static_cast<std::size_t>(g.spatial_dims), g.nx);
  const int nv = static_cast<int>(g.v_size());
  fft::many_c2c(d.data(), dims, nv, nv, 1, sign);
  if (sign < 0) d /= static_cast<double>(g.x_size());
}

void v_fft(Eigen::ArrayXcd& d, const GridSpec& g, std::size_t nx_points, int sign) {
  const int nv = static_cast<int>(g.v_size());
  fft::many_c2c(d.data(), {g.nv, g.nv, g.nv}, static_cast<int>(nx_points), 1, nv, sign);
  if (sign < 0) d /= static_cast<double>(g.v_size());
}

int raw_mode(int k, int n) { return 2 * k <= n ? k : k - n; }

}  // namespace

int x_index(const GridSpec& g, std::size_t ix, int axis) {
  if (axis >= g.spatial_dims) return 0;
  std::size_t div = 1;
  for (int a = g.spatial_dims - 1; a > axis; --a) div *= static_cast<std::size_t>(g.nx);
  return static_cast<int>((ix / div) % static_cast<std::size_t>(g.nx));
}

int v_index(const GridSpec& g, std::size_t iv, int axis) {
  std::size_t div = 1;
  for (int a = 2; a > axis; --a) div *= static_cast<std::size_t>(g.nv);
  return static_cast<int>((iv / div) % static_cast<std::size_t>(g.nv));
}

double sqrt_maxwellian(const double* v) {
  const double r2 = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
  return std::pow(2.0 * std::numbers::pi, -0.75) * std::exp(-0.25 * r2);
}

double maxwellian(const double* v) {
  const double r2 = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
  return std::pow(2.0 * std::numbers::pi, -1.5) * std::exp(-0.5 * r2);
}

template <bool HasX>
BasicField<HasX>::BasicField(const GridSpec& grid, Repr repr)
    : grid_(grid), repr_(normalize_repr(repr, HasX)) {
  data_ = Eigen::ArrayXcd::Zero(static_cast<Eigen::Index>(x_points() * grid.v_size()));
}

template <bool HasX>
BasicField<HasX> BasicField<HasX>::from_data(const GridSpec& grid, Repr repr, Eigen::ArrayXcd data) {
  BasicField f;
  f.grid_ = grid;
  f.repr_ = normalize_repr(repr, HasX);
  if (static_cast<std::size_t>(data.size()) != f.x_points() * grid.v_size())
    throw std::invalid_argument("field data size does not match the grid");
  f.data_ = std::move(data);
  return f;
}

template <bool HasX>
BasicField<HasX> BasicField<HasX>::scaled(cplx a) const {
  BasicField out = *this;
  out.data_ *= a;
  if (preimage_) out.preimage_ = std::make_shared<const BasicField>(preimage_->scaled(a));
  return out;
}

template <bool HasX>
BasicField<HasX> BasicField<HasX>::transformed(Repr target) const {
  target = normalize_repr(target, HasX);
  BasicField out = *this;
  out.repr_ = target;
  int from = level(repr_, HasX);
  const int to = level(target, HasX);
  while (from < to) {
    if (from == 0 && HasX) {
      x_fft(out.data_, grid_, -1);
      from = 1;
    } else {
      v_fft(out.data_, grid_, x_points(), -1);
      from = 2;
    }
  }
  while (from > to) {
    if (from == 2) {
      v_fft(out.data_, grid_, x_points(), +1);
      from = HasX ? 1 : 0;
    } else {
      x_fft(out.data_, grid_, +1);
      from = 0;
    }
  }
  return out;
}

template <bool HasX>
BasicField<HasX> BasicField<HasX>::weighted(const Weight& w) const {
  using K = Weight::Kind;
  if (w.kind == K::inv_sqrt_mu) {
    if (!preimage_)
      throw GuardViolation("mu^{-1/2} requested on a field without a Gaussian-decay certificate");
    if (cert_kind_ == K::sqrt_mu) return preimage_->transformed(repr_);
    return preimage_->weighted(Weight::sqrt_mu()).transformed(repr_);
  }
  if (w.kind == K::velocity && (w.i < 0 || w.i > 2))
    throw std::invalid_argument("velocity weight component must be 0, 1 or 2");
  const Repr work = repr_ == Repr::fourier_xv ? (HasX ? Repr::fourier_x : Repr::physical) : repr_;
  BasicField out = transformed(work);
  out.preimage_.reset();
  const std::size_t nv = grid_.v_size();
  Eigen::ArrayXd weight(static_cast<Eigen::Index>(nv));
  for (std::size_t iv = 0; iv < nv; ++iv) {
    const double v[3] = {grid_.v_coord(v_index(grid_, iv, 0)), grid_.v_coord(v_index(grid_, iv, 1)),
                         grid_.v_coord(v_index(grid_, iv, 2))};
    double value = 1.0;
    switch (w.kind) {
      case K::bracket:
        value = std::pow(1.0 + v[0] * v[0] + v[1] * v[1] + v[2] * v[2], 0.5 * w.s);
        break;
      case K::velocity:
        value = v[w.i];
        break;
      case K::sqrt_mu:
        value = sqrt_maxwellian(v);
        break;
      case K::mu:
        value = maxwellian(v);
        break;
      case K::inv_sqrt_mu:
        break;
    }
    weight(static_cast<Eigen::Index>(iv)) = value;
  }
  for (std::size_t ix = 0; ix < x_points(); ++ix)
    out.data_.segment(static_cast<Eigen::Index>(ix * nv), static_cast<Eigen::Index>(nv)) *= weight;
  out = out.transformed(repr_);
  if ((w.kind == K::bracket || w.kind == K::velocity) && preimage_) {
    // Polynomial weights keep the Gaussian decay.
    out.preimage_ = std::make_shared<const BasicField>(preimage_->weighted(w));
    out.cert_kind_ = cert_kind_;
  } else if (w.kind == K::sqrt_mu || w.kind == K::mu) {
    out.preimage_ = std::make_shared<const BasicField>(*this);
    out.cert_kind_ = w.kind;
  }
  return out;
}

template <bool HasX>
BasicField<HasX> BasicField<HasX>::combined(const BasicField& b, double sign) const {
  if (!(grid_ == b.grid_)) throw std::invalid_argument("adding fields on different grids");
  const BasicField bb = b.repr_ == repr_ ? b : b.transformed(repr_);
  BasicField out = from_data(grid_, repr_, data_ + sign * bb.data_);
  if (preimage_ && b.preimage_ && cert_kind_ == b.cert_kind_) {
    out.preimage_ = std::make_shared<const BasicField>(preimage_->combined(*b.preimage_, sign));
    out.cert_kind_ = cert_kind_;
  }
  return out;
}

template class BasicField<true>;
template class BasicField<false>;

namespace {

template <bool HasX>
BasicField<HasX> differentiate_impl(const BasicField<HasX>& f, Axis axis, int order) {
  if (order < 0) throw std::invalid_argument("derivative order must be nonnegative");
  if (order == 0) return f;
  const GridSpec& g = f.grid();
  const int a = axis_index(axis);
  const bool vel = is_velocity_axis(axis);
  if (!vel && (!HasX || a >= g.spatial_dims))
    return BasicField<HasX>(g, f.repr());

  Repr work = f.repr();
  if (vel) work = Repr::fourier_xv;
  else if (work == Repr::physical) work = Repr::fourier_x;
  BasicField<HasX> w = f.transformed(work);
  Eigen::ArrayXcd d = w.data();
  const std::size_t nv = g.v_size();
  const std::size_t nxp = w.x_points();
  if (vel) {
    Eigen::ArrayXcd sym(static_cast<Eigen::Index>(nv));
    for (std::size_t iv = 0; iv < nv; ++iv) {
      const double k = g.k0() * signed_mode(v_index(g, iv, a), g.nv);
      sym(static_cast<Eigen::Index>(iv)) = std::pow(cplx(0.0, k), order);
    }
    for (std::size_t ix = 0; ix < nxp; ++ix)
      d.segment(static_cast<Eigen::Index>(ix * nv), static_cast<Eigen::Index>(nv)) *= sym;
  } else {
    for (std::size_t ix = 0; ix < nxp; ++ix) {
      const double m = signed_mode(x_index(g, ix, a), g.nx);
      d.segment(static_cast<Eigen::Index>(ix * nv), static_cast<Eigen::Index>(nv)) *=
          std::pow(cplx(0.0, m), order);
    }
  }
  return BasicField<HasX>::from_data(g, work, std::move(d)).transformed(f.repr());
}

template <bool HasX>
double norm_measure(const BasicField<HasX>& f) {
  const GridSpec& g = f.grid();
  const double xw = HasX ? (f.repr() == Repr::physical ? g.x_weight() : g.x_volume()) : 1.0;
  const double vw = f.repr() == Repr::fourier_xv ? g.v_volume() : g.v_weight();
  return xw * vw;
}

template <bool HasX>
cplx inner_impl(const BasicField<HasX>& a, const BasicField<HasX>& b) {
  if (!(a.grid() == b.grid())) throw std::invalid_argument("inner product of fields on different grids");
  const BasicField<HasX> bb = b.repr() == a.repr() ? b : b.transformed(a.repr());
  const auto& x = a.data();
  const auto& y = bb.data();
  const cplx s = sum_complex(a.size(), [&](std::size_t i) {
    return x(static_cast<Eigen::Index>(i)) * std::conj(y(static_cast<Eigen::Index>(i)));
  });
  return s * norm_measure(a);
}

template <bool HasX>
double norm_impl(const BasicField<HasX>& f) {
  const auto& x = f.data();
  const double s = sum_real(f.size(), [&](std::size_t i) { return std::norm(x(static_cast<Eigen::Index>(i))); });
  return std::sqrt(s * norm_measure(f));
}

template <bool HasX>
BasicField<HasX> combine(const BasicField<HasX>& a, const BasicField<HasX>& b, double sign) {
  return a.combined(b, sign);
}

}  // namespace

PhaseField transform(const PhaseField& f, Repr target) { return f.transformed(target); }
VelocityField transform(const VelocityField& f, Repr target) { return f.transformed(target); }

PhaseField differentiate(const PhaseField& f, Axis axis, int order) { return differentiate_impl(f, axis, order); }
VelocityField differentiate(const VelocityField& f, Axis axis, int order) {
  return differentiate_impl(f, axis, order);
}

PhaseField multiply_weight(const PhaseField& f, const Weight& w) { return f.weighted(w); }
VelocityField multiply_weight(const VelocityField& f, const Weight& w) { return f.weighted(w); }

double l2_norm(const PhaseField& f) { return norm_impl(f); }
double l2_norm(const VelocityField& f) { return norm_impl(f); }
cplx inner(const PhaseField& a, const PhaseField& b) { return inner_impl(a, b); }
cplx inner(const VelocityField& a, const VelocityField& b) { return inner_impl(a, b); }

PhaseField operator+(const PhaseField& a, const PhaseField& b) { return combine(a, b, 1.0); }
PhaseField operator-(const PhaseField& a, const PhaseField& b) { return combine(a, b, -1.0); }
VelocityField operator+(const VelocityField& a, const VelocityField& b) { return combine(a, b, 1.0); }
VelocityField operator-(const VelocityField& a, const VelocityField& b) { return combine(a, b, -1.0); }

PhaseField sample(const GridSpec& g, const std::function<cplx(const double*, const double*)>& fn) {
  PhaseField f(g);
  Eigen::ArrayXcd& d = f.mutable_data();
  const std::size_t nv = g.v_size();
  for (std::size_t ix = 0; ix < g.x_size(); ++ix) {
    double x[3] = {0.0, 0.0, 0.0};
    for (int a = 0; a < g.spatial_dims; ++a) x[a] = 2.0 * std::numbers::pi * x_index(g, ix, a) / g.nx;
    for (std::size_t iv = 0; iv < nv; ++iv) {
      const double v[3] = {g.v_coord(v_index(g, iv, 0)), g.v_coord(v_index(g, iv, 1)),
                           g.v_coord(v_index(g, iv, 2))};
      d(static_cast<Eigen::Index>(ix * nv + iv)) = fn(x, v);
    }
  }
  return f;
}

VelocityField sample_v(const GridSpec& g, const std::function<cplx(const double*)>& fn) {
  VelocityField f(g);
  Eigen::ArrayXcd& d = f.mutable_data();
  for (std::size_t iv = 0; iv < g.v_size(); ++iv) {
    const double v[3] = {g.v_coord(v_index(g, iv, 0)), g.v_coord(v_index(g, iv, 1)),
                         g.v_coord(v_index(g, iv, 2))};
    d(static_cast<Eigen::Index>(iv)) = fn(v);
  }
  return f;
}

VelocityField slice(const PhaseField& f, std::size_t ix) {
  if (f.repr() == Repr::fourier_xv) throw std::invalid_argument("slice needs physical v representation");
  const std::size_t nv = f.grid().v_size();
  return VelocityField::from_data(
      f.grid(), Repr::physical,
      f.data().segment(static_cast<Eigen::Index>(ix * nv), static_cast<Eigen::Index>(nv)));
}

PhaseField broadcast(const GridSpec& g, const VelocityField& v) {
  if (v.certified()) return broadcast(g, *v.preimage()).weighted({v.certificate_kind(), 0.0, 0});
  const VelocityField p = v.transformed(Repr::physical);
  PhaseField f(g);
  Eigen::ArrayXcd& d = f.mutable_data();
  const std::size_t nv = g.v_size();
  for (std::size_t ix = 0; ix < g.x_size(); ++ix)
    d.segment(static_cast<Eigen::Index>(ix * nv), static_cast<Eigen::Index>(nv)) = p.data();
  return f;
}

PhaseField dealias(const PhaseField& f, bool in_x, bool in_v) {
  const GridSpec& g = f.grid();
  const Repr work = in_v ? Repr::fourier_xv : Repr::fourier_x;
  PhaseField w = f.transformed(work);
  Eigen::ArrayXcd d = w.data();
  const std::size_t nv = g.v_size();
  const int cx = dealias_cutoff(g.nx), cv = dealias_cutoff(g.nv);
  for (std::size_t ix = 0; ix < g.x_size(); ++ix) {
    bool keep_x = true;
    if (in_x)
      for (int a = 0; a < g.spatial_dims; ++a)
        if (std::abs(raw_mode(x_index(g, ix, a), g.nx)) > cx) keep_x = false;
    for (std::size_t iv = 0; iv < nv; ++iv) {
      bool keep = keep_x;
      if (in_v && keep)
        for (int a = 0; a < 3; ++a)
          if (std::abs(raw_mode(v_index(g, iv, a), g.nv)) > cv) keep = false;
      if (!keep) d(static_cast<Eigen::Index>(ix * nv + iv)) = 0.0;
    }
  }
  return PhaseField::from_data(g, work, std::move(d)).transformed(f.repr());
}

double max_imag(const VelocityField& f) {
  const VelocityField p = f.transformed(Repr::physical);
  return p.data().imag().abs().maxCoeff();
}

}  // namespace landau
