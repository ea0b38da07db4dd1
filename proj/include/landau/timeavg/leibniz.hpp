#pragma once

#include <cstdint>
#include <vector>

#include "landau/core/fields.hpp"

namespace landau {

struct LeibnizEntry {
  int k = 0, j = 0, l = 0, p = 0, q = 0;
  std::int64_t c = 0;
};

// Coefficients of M^k(gh) = sum c^{k,j}_{l,p,q} (Lambda^l M^p g).(Lambda^l M^q h), l + 2p = j,
// l + 2q = 2k - j, built from the recurrence
//   c^{k+1,j}_{l,p,q} = c^{k,j-2}_{l,p-1,q} + c^{k,j}_{l,p,q-1} + 2 c^{k,j-1}_{l-1,p,q}
// with c^{0,0}_{0,0,0} = 1. Arithmetic is checked; IntegerOverflow if an entry leaves int64.
class LeibnizTable {
 public:
  explicit LeibnizTable(int k_max);

  int k_max() const { return k_max_; }
  // Zero for any index outside the support.
  std::int64_t operator()(int k, int j, int l, int p, int q) const;
  // Nonzero entries for one k, ordered by (j, l).
  const std::vector<LeibnizEntry>& entries(int k) const { return rows_.at(static_cast<std::size_t>(k)); }

 private:
  int k_max_;
  // rows_[k][l][p] with q = k - l - p.
  std::vector<std::vector<std::vector<std::int64_t>>> c_;
  std::vector<std::vector<LeibnizEntry>> rows_;
};

// C(n, r) with checked arithmetic.
std::int64_t binomial(int n, int r);

// Relative L2 distance between M^k(g h) and the Leibniz expansion, with g, h truncated to the
// 2/3 band in x and v and both products truncated the same way.
double leibniz_expand_error(const PhaseField& g, const PhaseField& h, int k, double t, double t0);

}  // namespace landau
