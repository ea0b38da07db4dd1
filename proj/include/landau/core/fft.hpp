#pragma once

#include <complex>
#include <vector>

namespace landau::fft {

using cplx = std::complex<double>;

// In-place batched complex DFT over `dims` (row-major), unnormalized.
// sign = -1 forward, +1 backward.
void many_c2c(cplx* data, const std::vector<int>& dims, int howmany, int stride, int dist, int sign);

// 3-D real transforms on an n0 x n1 x n2 row-major array; the complex side has n2/2+1 entries
// in the last dimension. c2r overwrites its input.
void r2c_3d(int n0, int n1, int n2, double* in, cplx* out);
void c2r_3d(int n0, int n1, int n2, cplx* in, double* out);

}  // namespace landau::fft
