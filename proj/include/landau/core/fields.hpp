#pragma once

#include <Eigen/Core>
#include <complex>
#include <functional>
#include <memory>

#include "landau/core/grid.hpp"

namespace landau {

using cplx = std::complex<double>;

enum class Repr { physical, fourier_x, fourier_xv };

enum class Axis { x1, x2, x3, v1, v2, v3 };

inline bool is_velocity_axis(Axis a) { return a >= Axis::v1; }
inline int axis_index(Axis a) { return static_cast<int>(a) % 3; }

struct Weight {
  enum class Kind { bracket, velocity, sqrt_mu, mu, inv_sqrt_mu };
  Kind kind = Kind::bracket;
  double s = 0.0;  // exponent of <v>
  int i = 0;       // component of v, 0-based

  static Weight bracket(double s) { return {Kind::bracket, s, 0}; }
  static Weight velocity(int i) { return {Kind::velocity, 0.0, i}; }
  static Weight sqrt_mu() { return {Kind::sqrt_mu, 0.0, 0}; }
  static Weight mu() { return {Kind::mu, 0.0, 0}; }
  static Weight inv_sqrt_mu() { return {Kind::inv_sqrt_mu, 0.0, 0}; }
};

// Complex samples on the grid. Layout: data[ix * nv^3 + iv], with iv = (i1 * nv + i2) * nv + i3
// and ix the row-major x index (x1 slowest). A VelocityField has a single x point.
//
// Fourier coefficients are normalized as DFT / N, so a constant field has a unit DC mode.
template <bool HasX>
class BasicField {
 public:
  BasicField() = default;
  explicit BasicField(const GridSpec& grid, Repr repr = Repr::physical);

  const GridSpec& grid() const { return grid_; }
  Repr repr() const { return repr_; }
  std::size_t x_points() const { return HasX ? grid_.x_size() : 1; }
  std::size_t size() const { return static_cast<std::size_t>(data_.size()); }

  const Eigen::ArrayXcd& data() const { return data_; }
  // Mutable access invalidates the Gaussian-decay certificate.
  Eigen::ArrayXcd& mutable_data() {
    preimage_.reset();
    return data_;
  }

  bool certified() const { return static_cast<bool>(preimage_); }
  // The certificate: *this == weight(certificate_kind()) * (*preimage()). Null if uncertified.
  const BasicField* preimage() const { return preimage_.get(); }
  Weight::Kind certificate_kind() const { return cert_kind_; }

  BasicField scaled(cplx a) const;

  static BasicField from_data(const GridSpec& grid, Repr repr, Eigen::ArrayXcd data);

  // Same function in another representation. The certificate follows the field.
  BasicField transformed(Repr target) const;
  BasicField weighted(const Weight& w) const;
  // this + sign * b. Certified when both operands carry the same kind of certificate.
  BasicField combined(const BasicField& b, double sign) const;

 private:
  GridSpec grid_;
  Repr repr_ = Repr::physical;
  Eigen::ArrayXcd data_;
  // Certificate: the field equals weight * (*preimage_), weight being sqrt(mu) or mu.
  std::shared_ptr<const BasicField> preimage_;
  Weight::Kind cert_kind_ = Weight::Kind::sqrt_mu;
};

using PhaseField = BasicField<true>;
using VelocityField = BasicField<false>;

PhaseField transform(const PhaseField& f, Repr target);
VelocityField transform(const VelocityField& f, Repr target);

PhaseField differentiate(const PhaseField& f, Axis axis, int order = 1);
VelocityField differentiate(const VelocityField& f, Axis axis, int order = 1);

PhaseField multiply_weight(const PhaseField& f, const Weight& w);
VelocityField multiply_weight(const VelocityField& f, const Weight& w);

// L2 norm and inner product <a, b> = integral a * conj(b) with the trapezoidal grid measure,
// evaluated in whatever representation the arguments are in (Parseval).
double l2_norm(const PhaseField& f);
double l2_norm(const VelocityField& f);
cplx inner(const PhaseField& a, const PhaseField& b);
cplx inner(const VelocityField& a, const VelocityField& b);

// Samples a function on the physical grid.
PhaseField sample(const GridSpec& g, const std::function<cplx(const double* x, const double* v)>& fn);
VelocityField sample_v(const GridSpec& g, const std::function<cplx(const double* v)>& fn);

// Velocity slice at x index ix of a field in physical or fourier_x representation.
VelocityField slice(const PhaseField& f, std::size_t ix);
// Broadcast an x-independent field to all x points.
PhaseField broadcast(const GridSpec& g, const VelocityField& v);

// 2/3-rule truncation in the requested directions; returns the field in its original repr.
PhaseField dealias(const PhaseField& f, bool in_x, bool in_v);

PhaseField operator+(const PhaseField& a, const PhaseField& b);
PhaseField operator-(const PhaseField& a, const PhaseField& b);
VelocityField operator+(const VelocityField& a, const VelocityField& b);
VelocityField operator-(const VelocityField& a, const VelocityField& b);

// Largest |imaginary part| of a physical-representation field.
double max_imag(const VelocityField& f);

// Per-axis DFT index of a flat x or v index (x axes beyond spatial_dims give 0).
int x_index(const GridSpec& g, std::size_t ix, int axis);
int v_index(const GridSpec& g, std::size_t iv, int axis);

// (2 pi)^{-3/4} exp(-|v|^2 / 4) and its square.
double sqrt_maxwellian(const double* v);
double maxwellian(const double* v);

}  // namespace landau
