#pragma once

// Backend entry points, exposed separately from the dispatch layer so the
// equivalence tests can drive both implementations side by side.

#include <complex>
#include <cstddef>
#include <span>

namespace mixdiff::vec::scalar {

double sum(std::span<const double> x);
double sum_abs(std::span<const double> x);
double sum_sq(std::span<const double> x);
double max_abs(std::span<const double> x);
double dot(std::span<const double> x, std::span<const double> y);
void scale(std::span<double> x, double a);
void axpy(std::span<double> y, double a, std::span<const double> x);
void multiply(std::span<double> x, std::span<const double> m);
void complex_scale(std::span<std::complex<double>> c, std::span<const double> m);
void exp_neg(std::span<double> out, std::span<const double> x, double tau);
void signed_pow(std::span<double> out, std::span<const double> u, double p);
void abs_pow(std::span<double> out, std::span<const double> x, double a);

}  // namespace mixdiff::vec::scalar

#if defined(MIXDIFF_HAVE_AVX2)
namespace mixdiff::vec::avx2 {

// True when the running CPU supports AVX2+FMA.
bool available();

double sum(std::span<const double> x);
double sum_abs(std::span<const double> x);
double sum_sq(std::span<const double> x);
double max_abs(std::span<const double> x);
double dot(std::span<const double> x, std::span<const double> y);
void scale(std::span<double> x, double a);
void axpy(std::span<double> y, double a, std::span<const double> x);
void multiply(std::span<double> x, std::span<const double> m);
void complex_scale(std::span<std::complex<double>> c, std::span<const double> m);
void exp_neg(std::span<double> out, std::span<const double> x, double tau);
void signed_pow(std::span<double> out, std::span<const double> u, double p);
void abs_pow(std::span<double> out, std::span<const double> x, double a);

}  // namespace mixdiff::vec::avx2
#endif
