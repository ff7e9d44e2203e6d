#pragma once

#include <complex>

namespace mixdiff::fft {

// In-place complex DFT on an M^dim lattice (row-major for dim == 2), FFTW
// backend. forward uses the e^{-i...} sign, inverse the e^{+i...} sign;
// neither is normalized. Plans are cached per (dim, m, direction) behind a
// mutex; execution on distinct buffers is thread-safe.
void transform(int dim, int m, std::complex<double>* data, bool inverse);

}  // namespace mixdiff::fft
