#pragma once

#include <functional>
#include <vector>

#include "landau/collision/engine.hpp"
#include "landau/core/fields.hpp"

namespace landau::detail {

using Arr = Eigen::ArrayXd;
using Mat3Field = std::array<std::array<Arr, 3>, 3>;

struct RealCoefficients {
  Arr a;
  Vec3Field A, B;
  Mat3Field M, rho, lambda;
  Mat3Field ab, ad, av;
};

RealCoefficients real_coefficients(const CollisionEngine& e, const Arr& g, bool moments, bool abar_forms);

// L_1..L_6 in coefficient form and in abar form.
std::vector<Arr> L_terms(const CollisionEngine& e, const RealCoefficients& c, const Arr& h);
std::vector<Arr> L_terms_abar(const CollisionEngine& e, const RealCoefficients& c, const Arr& h);

using BilinearOp = std::function<std::vector<Arr>(const Arr&, const Arr&)>;
using LinearOp = std::function<Arr(const Arr&)>;

// Extends a real bilinear (or linear) velocity operator to complex fields part by part.
std::vector<VelocityField> complexify(const VelocityField& g, const VelocityField& h, const BilinearOp& op);
VelocityField complexify(const VelocityField& f, const LinearOp& op);

VelocityField to_field(const GridSpec& grid, const Arr& re, const Arr& im);

}  // namespace landau::detail
