#include "mixdiff/simd/vec.hpp"

#include <cstdlib>
#include <cstring>

#include "mixdiff/simd/backends.hpp"

namespace mixdiff::vec {

namespace {

struct Backend {
    const char* name;
    double (*sum)(std::span<const double>);
    double (*sum_abs)(std::span<const double>);
    double (*sum_sq)(std::span<const double>);
    double (*max_abs)(std::span<const double>);
    double (*dot)(std::span<const double>, std::span<const double>);
    void (*scale)(std::span<double>, double);
    void (*axpy)(std::span<double>, double, std::span<const double>);
    void (*multiply)(std::span<double>, std::span<const double>);
    void (*complex_scale)(std::span<std::complex<double>>, std::span<const double>);
    void (*exp_neg)(std::span<double>, std::span<const double>, double);
    void (*signed_pow)(std::span<double>, std::span<const double>, double);
    void (*abs_pow)(std::span<double>, std::span<const double>, double);
};

constexpr Backend kScalar{
    "scalar",        scalar::sum,       scalar::sum_abs,    scalar::sum_sq,
    scalar::max_abs, scalar::dot,       scalar::scale,      scalar::axpy,
    scalar::multiply, scalar::complex_scale, scalar::exp_neg, scalar::signed_pow,
    scalar::abs_pow,
};

#if defined(MIXDIFF_HAVE_AVX2)
constexpr Backend kAvx2{
    "avx2",        avx2::sum,       avx2::sum_abs,    avx2::sum_sq,
    avx2::max_abs, avx2::dot,       avx2::scale,      avx2::axpy,
    avx2::multiply, avx2::complex_scale, avx2::exp_neg, avx2::signed_pow,
    avx2::abs_pow,
};
#endif

const Backend& pick_backend() {
    const char* force = std::getenv("MIXDIFF_SIMD");
    if (force != nullptr && std::strcmp(force, "scalar") == 0) return kScalar;
#if defined(MIXDIFF_HAVE_AVX2)
    if (force != nullptr && std::strcmp(force, "avx2") == 0) return kAvx2;
    if (force == nullptr && avx2::available()) return kAvx2;
#endif
    return kScalar;
}

const Backend& backend() {
    static const Backend& b = pick_backend();
    return b;
}

}  // namespace

double sum(std::span<const double> x) { return backend().sum(x); }
double sum_abs(std::span<const double> x) { return backend().sum_abs(x); }
double sum_sq(std::span<const double> x) { return backend().sum_sq(x); }
double max_abs(std::span<const double> x) { return backend().max_abs(x); }
double dot(std::span<const double> x, std::span<const double> y) { return backend().dot(x, y); }
void scale(std::span<double> x, double a) { backend().scale(x, a); }
void axpy(std::span<double> y, double a, std::span<const double> x) { backend().axpy(y, a, x); }
void multiply(std::span<double> x, std::span<const double> m) { backend().multiply(x, m); }
void complex_scale(std::span<std::complex<double>> c, std::span<const double> m) {
    backend().complex_scale(c, m);
}
void exp_neg(std::span<double> out, std::span<const double> x, double tau) {
    backend().exp_neg(out, x, tau);
}
void signed_pow(std::span<double> out, std::span<const double> u, double p) {
    backend().signed_pow(out, u, p);
}
void abs_pow(std::span<double> out, std::span<const double> x, double a) {
    backend().abs_pow(out, x, a);
}

std::string_view active_backend() { return backend().name; }

}  // namespace mixdiff::vec
