#include "landau/core/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <tuple>

namespace landau::fft {

namespace {

// FFTW's planner is not thread-safe; execution with the new-array interface is.
// FFTW_UNALIGNED lets one plan serve any buffer, and FFTW_ESTIMATE keeps plans (and so
// results) independent of timing measurements.
constexpr unsigned kFlags = FFTW_ESTIMATE | FFTW_UNALIGNED;

std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

using ManyKey = std::tuple<std::vector<int>, int, int, int, int>;
using Key3 = std::tuple<int, int, int>;

fftw_plan many_plan(const std::vector<int>& dims, int howmany, int stride, int dist, int sign) {
  static std::map<ManyKey, fftw_plan> cache;
  std::lock_guard lock(planner_mutex());
  ManyKey key{dims, howmany, stride, dist, sign};
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  std::size_t total = 1;
  for (int d : dims) total *= static_cast<std::size_t>(d);
  const std::size_t span = (total - 1) * static_cast<std::size_t>(stride) +
                           static_cast<std::size_t>(howmany - 1) * dist + 1;
  auto* scratch = fftw_alloc_complex(span);
  fftw_plan p = fftw_plan_many_dft(static_cast<int>(dims.size()), dims.data(), howmany, scratch,
                                   nullptr, stride, dist, scratch, nullptr, stride, dist, sign,
                                   kFlags);
  fftw_free(scratch);
  cache.emplace(key, p);
  return p;
}

fftw_plan r2c_plan(int n0, int n1, int n2) {
  static std::map<Key3, fftw_plan> cache;
  std::lock_guard lock(planner_mutex());
  Key3 key{n0, n1, n2};
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  const std::size_t nr = static_cast<std::size_t>(n0) * n1 * n2;
  const std::size_t nc = static_cast<std::size_t>(n0) * n1 * (n2 / 2 + 1);
  double* in = fftw_alloc_real(nr);
  fftw_complex* out = fftw_alloc_complex(nc);
  fftw_plan p = fftw_plan_dft_r2c_3d(n0, n1, n2, in, out, kFlags);
  fftw_free(in);
  fftw_free(out);
  cache.emplace(key, p);
  return p;
}

fftw_plan c2r_plan(int n0, int n1, int n2) {
  static std::map<Key3, fftw_plan> cache;
  std::lock_guard lock(planner_mutex());
  Key3 key{n0, n1, n2};
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  const std::size_t nr = static_cast<std::size_t>(n0) * n1 * n2;
  const std::size_t nc = static_cast<std::size_t>(n0) * n1 * (n2 / 2 + 1);
  double* out = fftw_alloc_real(nr);
  fftw_complex* in = fftw_alloc_complex(nc);
  fftw_plan p = fftw_plan_dft_c2r_3d(n0, n1, n2, in, out, kFlags);
  fftw_free(in);
  fftw_free(out);
  cache.emplace(key, p);
  return p;
}

}  // namespace

void many_c2c(cplx* data, const std::vector<int>& dims, int howmany, int stride, int dist, int sign) {
  fftw_plan p = many_plan(dims, howmany, stride, dist, sign);
  auto* d = reinterpret_cast<fftw_complex*>(data);
  fftw_execute_dft(p, d, d);
}

void r2c_3d(int n0, int n1, int n2, double* in, cplx* out) {
  fftw_execute_dft_r2c(r2c_plan(n0, n1, n2), in, reinterpret_cast<fftw_complex*>(out));
}

void c2r_3d(int n0, int n1, int n2, cplx* in, double* out) {
  fftw_execute_dft_c2r(c2r_plan(n0, n1, n2), reinterpret_cast<fftw_complex*>(in), out);
}

}  // namespace landau::fft
