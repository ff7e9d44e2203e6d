#include <cmath>

#include "mixdiff/simd/backends.hpp"

namespace mixdiff::vec::scalar {

double sum(std::span<const double> x) {
    double acc = 0.0;
    for (double v : x) acc += v;
    return acc;
}

double sum_abs(std::span<const double> x) {
    double acc = 0.0;
    for (double v : x) acc += std::abs(v);
    return acc;
}

double sum_sq(std::span<const double> x) {
    double acc = 0.0;
    for (double v : x) acc += v * v;
    return acc;
}

double max_abs(std::span<const double> x) {
    double m = 0.0;
    for (double v : x) m = std::max(m, std::abs(v));
    return m;
}

double dot(std::span<const double> x, std::span<const double> y) {
    double acc = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
    return acc;
}

void scale(std::span<double> x, double a) {
    for (double& v : x) v *= a;
}

void axpy(std::span<double> y, double a, std::span<const double> x) {
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

void multiply(std::span<double> x, std::span<const double> m) {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] *= m[i];
}

void complex_scale(std::span<std::complex<double>> c, std::span<const double> m) {
    for (std::size_t i = 0; i < c.size(); ++i) c[i] *= m[i];
}

void exp_neg(std::span<double> out, std::span<const double> x, double tau) {
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = std::exp(-tau * x[i]);
}

void signed_pow(std::span<double> out, std::span<const double> u, double p) {
    for (std::size_t i = 0; i < u.size(); ++i) {
        const double a = std::abs(u[i]);
        out[i] = a < 1e-290 ? 0.0 : std::copysign(std::pow(a, p), u[i]);
    }
}

void abs_pow(std::span<double> out, std::span<const double> x, double a) {
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double v = std::abs(x[i]);
        out[i] = v < 1e-290 ? 0.0 : std::pow(v, a);
    }
}

}  // namespace mixdiff::vec::scalar
