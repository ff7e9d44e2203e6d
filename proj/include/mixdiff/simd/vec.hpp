#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace mixdiff::vec {

// Data-parallel kernels behind the spectral inner loops: reductions for the
// lattice norms, pointwise multiplier application, and the transcendental
// maps (exp multipliers, signed powers for the nonlinearity, |x|^a symbols).
//
// Every kernel has a scalar reference implementation and, on x86-64, an AVX2
// variant. The backend is selected once at startup from the CPU feature set;
// set MIXDIFF_SIMD=scalar (or =avx2) to force a backend. The two backends are
// equivalence-tested against each other; reductions may reassociate, so
// agreement is to round-off, not bit-exact.

double sum(std::span<const double> x);
double sum_abs(std::span<const double> x);
double sum_sq(std::span<const double> x);
double max_abs(std::span<const double> x);
double dot(std::span<const double> x, std::span<const double> y);

void scale(std::span<double> x, double a);
void axpy(std::span<double> y, double a, std::span<const double> x);
void multiply(std::span<double> x, std::span<const double> m);

// c[i] *= m[i] for interleaved complex data.
void complex_scale(std::span<std::complex<double>> c, std::span<const double> m);

// out[i] = exp(-tau * x[i]); tau >= 0 and x finite by contract.
void exp_neg(std::span<double> out, std::span<const double> x, double tau);

// out[i] = |u[i]|^(p-1) * u[i]. Magnitudes below 1e-290 flush to zero, which
// is far under round-off for the unit-scale fields this is applied to.
void signed_pow(std::span<double> out, std::span<const double> u, double p);

// out[i] = |x[i]|^a with 0^a = 0 (a > 0). Same flush threshold as signed_pow.
void abs_pow(std::span<double> out, std::span<const double> x, double a);

// Name of the backend in use ("scalar" or "avx2").
std::string_view active_backend();

}  // namespace mixdiff::vec
