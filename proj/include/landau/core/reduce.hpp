#pragma once

#include <complex>
#include <cstddef>

namespace landau {

// Fixed-shape pairwise summation. The tree depends only on n, so results are bit-identical
// between runs and independent of threading.
template <class T, class F>
T pairwise_sum(std::size_t begin, std::size_t end, const F& term) {
  const std::size_t n = end - begin;
  if (n <= 32) {
    T s{};
    for (std::size_t i = begin; i < end; ++i) s += term(i);
    return s;
  }
  const std::size_t mid = begin + n / 2;
  return pairwise_sum<T>(begin, mid, term) + pairwise_sum<T>(mid, end, term);
}

template <class F>
double sum_real(std::size_t n, const F& term) {
  return pairwise_sum<double>(0, n, term);
}

template <class F>
std::complex<double> sum_complex(std::size_t n, const F& term) {
  return pairwise_sum<std::complex<double>>(0, n, term);
}

}  // namespace landau
