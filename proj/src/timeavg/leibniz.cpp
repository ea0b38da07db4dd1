#include "landau/timeavg/leibniz.hpp"

#include <string>

#include "landau/core/errors.hpp"
#include "landau/timeavg/multiplier.hpp"

namespace landau {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw IntegerOverflow("Leibniz coefficient exceeds int64");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw IntegerOverflow("Leibniz coefficient exceeds int64");
  return r;
}

}  // namespace

LeibnizTable::LeibnizTable(int k_max) : k_max_(k_max) {
  if (k_max < 0) throw ConfigInvalid("Leibniz table: k_max must be nonnegative");
  c_.resize(static_cast<std::size_t>(k_max) + 1);
  c_[0] = {{1}};
  for (int k = 0; k < k_max; ++k) {
    const auto& cur = c_[static_cast<std::size_t>(k)];
    auto& next = c_[static_cast<std::size_t>(k) + 1];
    next.assign(static_cast<std::size_t>(k) + 2, {});
    for (int l = 0; l <= k + 1; ++l) {
      next[static_cast<std::size_t>(l)].assign(static_cast<std::size_t>(k + 2 - l), 0);
      for (int p = 0; p + l <= k + 1; ++p) {
        const int q = k + 1 - l - p;
        auto at = [&](int ll, int pp, int qq) -> std::int64_t {
          if (ll < 0 || pp < 0 || qq < 0) return 0;
          return cur[static_cast<std::size_t>(ll)][static_cast<std::size_t>(pp)];
        };
        std::int64_t v = checked_add(at(l, p - 1, q), at(l, p, q - 1));
        v = checked_add(v, checked_mul(2, at(l - 1, p, q)));
        next[static_cast<std::size_t>(l)][static_cast<std::size_t>(p)] = v;
      }
    }
  }
  rows_.resize(c_.size());
  for (int k = 0; k <= k_max; ++k)
    for (int j = 0; j <= 2 * k; ++j)
      for (int l = j % 2; l <= j && l <= 2 * k - j; l += 2) {
        const int p = (j - l) / 2, q = (2 * k - j - l) / 2;
        rows_[static_cast<std::size_t>(k)].push_back({k, j, l, p, q, (*this)(k, j, l, p, q)});
      }
}

std::int64_t LeibnizTable::operator()(int k, int j, int l, int p, int q) const {
  if (k < 0 || k > k_max_ || j < 0 || j > 2 * k || l < 0 || p < 0 || q < 0) return 0;
  if (l + 2 * p != j || l + 2 * q != 2 * k - j) return 0;
  return c_[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)][static_cast<std::size_t>(p)];
}

std::int64_t binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  std::int64_t out = 1;
  for (int i = 1; i <= r; ++i) out = checked_mul(out, n - r + i) / i;
  return out;
}

namespace {

PhaseField product(const PhaseField& a, const PhaseField& b) {
  const PhaseField pa = transform(a, Repr::physical), pb = transform(b, Repr::physical);
  return dealias(PhaseField::from_data(a.grid(), Repr::physical, pa.data() * pb.data()), true, true);
}

}  // namespace

double leibniz_expand_error(const PhaseField& g, const PhaseField& h, int k, double t, double t0) {
  if (k < 0) throw ConfigInvalid("Leibniz expansion: k must be nonnegative");
  const PhaseField gb = dealias(g, true, true), hb = dealias(h, true, true);
  const PhaseField lhs = apply_M_power(product(gb, hb), {t, t0, static_cast<double>(k)});

  const LeibnizTable table(k);
  PhaseField rhs(g.grid(), Repr::fourier_xv);
  for (const LeibnizEntry& e : table.entries(k)) {
    const PhaseField Mg = apply_M_power(gb, {t, t0, static_cast<double>(e.p)});
    const PhaseField Mh = apply_M_power(hb, {t, t0, static_cast<double>(e.q)});
    for (int n1 = 0; n1 <= e.l; ++n1) {
      const double weight = static_cast<double>(e.c) * static_cast<double>(binomial(e.l, n1));
      const PhaseField term = product(apply_lambda_power(Mg, n1, e.l - n1, t, t0),
                                      apply_lambda_power(Mh, n1, e.l - n1, t, t0));
      rhs = rhs + term.scaled(weight);
    }
  }
  const double scale = l2_norm(lhs);
  const double diff = l2_norm(rhs - lhs);
  return scale > 0.0 ? diff / scale : diff;
}

}  // namespace landau
