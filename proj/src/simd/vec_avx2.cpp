#include <cmath>
#include <immintrin.h>

#include "mixdiff/simd/backends.hpp"

// AVX2+FMA variants of the inner-loop kernels. Tails that do not fill a
// 4-lane vector fall back to the scalar ops so remainder handling stays in
// one place criticality-wise. exp/log use the classic Cephes rational
// approximations (~1-2 ulp over the reduced range), which is well inside the
// equivalence tolerance the tests pin against the scalar backend.

namespace mixdiff::vec::avx2 {

namespace {

inline double hadd(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(lo) + _mm_cvtsd_f64(_mm_unpackhi_pd(lo, lo));
}

inline double hmax(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_max_pd(lo, hi);
    return std::max(_mm_cvtsd_f64(lo), _mm_cvtsd_f64(_mm_unpackhi_pd(lo, lo)));
}

inline __m256d abs_pd(__m256d v) {
    const __m256d mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
    return _mm256_and_pd(v, mask);
}

// e^x for finite x; x <= -708.39 gives 0, x >= 709.78 gives +inf.
inline __m256d exp_pd(__m256d x) {
    const __m256d log2e = _mm256_set1_pd(1.4426950408889634073599);
    const __m256d c1 = _mm256_set1_pd(6.93145751953125e-1);
    const __m256d c2 = _mm256_set1_pd(1.42860682030941723212e-6);

    const __m256d p0 = _mm256_set1_pd(1.26177193074810590878e-4);
    const __m256d p1 = _mm256_set1_pd(3.02994407707441961300e-2);
    const __m256d p2 = _mm256_set1_pd(9.99999999999999999910e-1);
    const __m256d q0 = _mm256_set1_pd(3.00198505138664455042e-6);
    const __m256d q1 = _mm256_set1_pd(2.52448340349684104192e-3);
    const __m256d q2 = _mm256_set1_pd(2.27265548208155028766e-1);
    const __m256d q3 = _mm256_set1_pd(2.00000000000000000005e0);

    const __m256d underflow = _mm256_set1_pd(-708.39641853226410622);
    const __m256d overflow = _mm256_set1_pd(709.78271289338399673);
    const __m256d lo_mask = _mm256_cmp_pd(x, underflow, _CMP_LT_OQ);
    const __m256d hi_mask = _mm256_cmp_pd(x, overflow, _CMP_GT_OQ);
    x = _mm256_min_pd(_mm256_max_pd(x, underflow), overflow);

    // n = round(x * log2(e)); reduce with the split ln 2.
    __m256d n = _mm256_round_pd(_mm256_mul_pd(x, log2e),
                                _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    x = _mm256_fnmadd_pd(n, c1, x);
    x = _mm256_fnmadd_pd(n, c2, x);

    const __m256d xx = _mm256_mul_pd(x, x);
    __m256d px = _mm256_fmadd_pd(p0, xx, p1);
    px = _mm256_fmadd_pd(px, xx, p2);
    px = _mm256_mul_pd(px, x);
    __m256d qx = _mm256_fmadd_pd(q0, xx, q1);
    qx = _mm256_fmadd_pd(qx, xx, q2);
    qx = _mm256_fmadd_pd(qx, xx, q3);
    __m256d e = _mm256_div_pd(px, _mm256_sub_pd(qx, px));
    e = _mm256_fmadd_pd(_mm256_set1_pd(2.0), e, _mm256_set1_pd(1.0));

    // scale by 2^n via the exponent field (n in [-1023, 1024) after clamping)
    __m128i ni = _mm256_cvtpd_epi32(n);
    __m256i nl = _mm256_cvtepi32_epi64(ni);
    __m256i pow2 = _mm256_slli_epi64(_mm256_add_epi64(nl, _mm256_set1_epi64x(1023)), 52);
    e = _mm256_mul_pd(e, _mm256_castsi256_pd(pow2));

    e = _mm256_blendv_pd(e, _mm256_setzero_pd(), lo_mask);
    e = _mm256_blendv_pd(e, _mm256_set1_pd(HUGE_VAL), hi_mask);
    return e;
}

// 4 x int64 -> 4 x double for values that fit in 32 bits (exponent fields).
inline __m256d cvt_epi64_lo32_to_pd(__m256i v) {
    const __m256i idx = _mm256_setr_epi32(0, 2, 4, 6, 0, 0, 0, 0);
    const __m256i packed = _mm256_permutevar8x32_epi32(v, idx);
    return _mm256_cvtepi32_pd(_mm256_castsi256_si128(packed));
}

// ln x for normal positive x (inputs below 1e-290 are masked out by callers).
inline __m256d log_pd(__m256d x) {
    const __m256i mant_mask = _mm256_set1_epi64x(0x000fffffffffffffLL);
    const __m256i half_bits = _mm256_set1_epi64x(0x3fe0000000000000LL);

    __m256i bits = _mm256_castpd_si256(x);
    // exponent = biased_exponent - 1022 so the mantissa m lands in [0.5, 1)
    __m256i biased = _mm256_srli_epi64(bits, 52);
    biased = _mm256_and_si256(biased, _mm256_set1_epi64x(0x7ff));
    __m256i e_int = _mm256_sub_epi64(biased, _mm256_set1_epi64x(1022));
    __m256d m = _mm256_castsi256_pd(
        _mm256_or_si256(_mm256_and_si256(bits, mant_mask), half_bits));

    // fold m < sqrt(1/2) to keep the argument of the polynomial near 1
    const __m256d sqrth = _mm256_set1_pd(0.70710678118654752440);
    const __m256d below = _mm256_cmp_pd(m, sqrth, _CMP_LT_OQ);
    m = _mm256_add_pd(m, _mm256_and_pd(below, m));
    __m256d e = cvt_epi64_lo32_to_pd(e_int);
    e = _mm256_sub_pd(e, _mm256_and_pd(below, _mm256_set1_pd(1.0)));

    const __m256d w = _mm256_sub_pd(m, _mm256_set1_pd(1.0));
    const __m256d z = _mm256_mul_pd(w, w);

    __m256d p = _mm256_set1_pd(1.01875663804580931796e-4);
    p = _mm256_fmadd_pd(p, w, _mm256_set1_pd(4.97494994976747001425e-1));
    p = _mm256_fmadd_pd(p, w, _mm256_set1_pd(4.70579119878881725854e0));
    p = _mm256_fmadd_pd(p, w, _mm256_set1_pd(1.44989225341610930846e1));
    p = _mm256_fmadd_pd(p, w, _mm256_set1_pd(1.79368678507819816313e1));
    p = _mm256_fmadd_pd(p, w, _mm256_set1_pd(7.70838733755885391666e0));
    __m256d q = _mm256_add_pd(w, _mm256_set1_pd(1.12873587189167450590e1));
    q = _mm256_fmadd_pd(q, w, _mm256_set1_pd(4.52279145837532221105e1));
    q = _mm256_fmadd_pd(q, w, _mm256_set1_pd(8.29875266912776603211e1));
    q = _mm256_fmadd_pd(q, w, _mm256_set1_pd(7.11544750618563894466e1));
    q = _mm256_fmadd_pd(q, w, _mm256_set1_pd(2.31251620126765340583e1));

    __m256d y = _mm256_mul_pd(_mm256_mul_pd(w, z), _mm256_div_pd(p, q));
    y = _mm256_fnmadd_pd(_mm256_set1_pd(0.5), z, y);
    y = _mm256_add_pd(y, w);

    // ln 2 split for the exponent contribution
    y = _mm256_fmadd_pd(e, _mm256_set1_pd(-2.121944400546905827679e-4), y);
    y = _mm256_fmadd_pd(e, _mm256_set1_pd(0.693359375), y);
    return y;
}

}  // namespace

bool available() {
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

double sum(std::span<const double> x) {
    const std::size_t n4 = x.size() & ~std::size_t{3};
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t i = 0; i < n4; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(&x[i]));
    return hadd(acc) + scalar::sum(x.subspan(n4));
}

double sum_abs(std::span<const double> x) {
    const std::size_t n4 = x.size() & ~std::size_t{3};
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t i = 0; i < n4; i += 4)
        acc = _mm256_add_pd(acc, abs_pd(_mm256_loadu_pd(&x[i])));
    return hadd(acc) + scalar::sum_abs(x.subspan(n4));
}

double sum_sq(std::span<const double> x) {
    const std::size_t n4 = x.size() & ~std::size_t{3};
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t i = 0; i < n4; i += 4) {
        const __m256d v = _mm256_loadu_pd(&x[i]);
        acc = _mm256_fmadd_pd(v, v, acc);
    }
    return hadd(acc) + scalar::sum_sq(x.subspan(n4));
}

double max_abs(std::span<const double> x) {
    const std::size_t n4 = x.size() & ~std::size_t{3};
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t i = 0; i < n4; i += 4)
        acc = _mm256_max_pd(acc, abs_pd(_mm256_loadu_pd(&x[i])));
    return std::max(hmax(acc), scalar::max_abs(x.subspan(n4)));
}

double dot(std::span<const double> x, std::span<const double> y) {
    const std::size_t n4 = x.size() & ~std::size_t{3};
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t i = 0; i < n4; i += 4)
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(&x[i]), _mm256_loadu_pd(&y[i]), acc);
    return hadd(acc) + scalar::dot(x.subspan(n4), y.subspan(n4));
}

void scale(std::span<double> x, double a) {
    const std::size_t n4 = x.size() & ~std::size_t{3};
    const __m256d av = _mm256_set1_pd(a);
    for (std::size_t i = 0; i < n4; i += 4)
        _mm256_storeu_pd(&x[i], _mm256_mul_pd(_mm256_loadu_pd(&x[i]), av));
    scalar::scale(x.subspan(n4), a);
}

void axpy(std::span<double> y, double a, std::span<const double> x) {
    const std::size_t n4 = y.size() & ~std::size_t{3};
    const __m256d av = _mm256_set1_pd(a);
    for (std::size_t i = 0; i < n4; i += 4) {
        const __m256d r = _mm256_fmadd_pd(av, _mm256_loadu_pd(&x[i]), _mm256_loadu_pd(&y[i]));
        _mm256_storeu_pd(&y[i], r);
    }
    scalar::axpy(y.subspan(n4), a, x.subspan(n4));
}

void multiply(std::span<double> x, std::span<const double> m) {
    const std::size_t n4 = x.size() & ~std::size_t{3};
    for (std::size_t i = 0; i < n4; i += 4)
        _mm256_storeu_pd(&x[i], _mm256_mul_pd(_mm256_loadu_pd(&x[i]), _mm256_loadu_pd(&m[i])));
    scalar::multiply(x.subspan(n4), m.subspan(n4));
}

void complex_scale(std::span<std::complex<double>> c, std::span<const double> m) {
    double* cd = reinterpret_cast<double*>(c.data());
    const std::size_t n2 = c.size() & ~std::size_t{1};
    for (std::size_t i = 0; i < n2; i += 2) {
        const __m128d mv = _mm_loadu_pd(&m[i]);
        const __m256d md =
            _mm256_set_m128d(_mm_unpackhi_pd(mv, mv), _mm_unpacklo_pd(mv, mv));
        _mm256_storeu_pd(cd + 2 * i, _mm256_mul_pd(_mm256_loadu_pd(cd + 2 * i), md));
    }
    scalar::complex_scale(c.subspan(n2), m.subspan(n2));
}

void exp_neg(std::span<double> out, std::span<const double> x, double tau) {
    const std::size_t n4 = x.size() & ~std::size_t{3};
    const __m256d nt = _mm256_set1_pd(-tau);
    for (std::size_t i = 0; i < n4; i += 4)
        _mm256_storeu_pd(&out[i], exp_pd(_mm256_mul_pd(nt, _mm256_loadu_pd(&x[i]))));
    scalar::exp_neg(out.subspan(n4), x.subspan(n4), tau);
}

void signed_pow(std::span<double> out, std::span<const double> u, double p) {
    const std::size_t n4 = u.size() & ~std::size_t{3};
    const __m256d pv = _mm256_set1_pd(p);
    const __m256d tiny = _mm256_set1_pd(1e-290);
    const __m256d sign_mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x8000000000000000ULL));
    for (std::size_t i = 0; i < n4; i += 4) {
        const __m256d v = _mm256_loadu_pd(&u[i]);
        const __m256d a = abs_pd(v);
        const __m256d keep = _mm256_cmp_pd(a, tiny, _CMP_GE_OQ);
        // |u|^p = exp(p ln|u|); masked lanes feed a harmless 1.0 into log
        const __m256d safe = _mm256_blendv_pd(_mm256_set1_pd(1.0), a, keep);
        __m256d r = exp_pd(_mm256_mul_pd(pv, log_pd(safe)));
        r = _mm256_or_pd(r, _mm256_and_pd(v, sign_mask));
        _mm256_storeu_pd(&out[i], _mm256_and_pd(r, keep));
    }
    scalar::signed_pow(out.subspan(n4), u.subspan(n4), p);
}

void abs_pow(std::span<double> out, std::span<const double> x, double a) {
    const std::size_t n4 = x.size() & ~std::size_t{3};
    const __m256d av = _mm256_set1_pd(a);
    const __m256d tiny = _mm256_set1_pd(1e-290);
    for (std::size_t i = 0; i < n4; i += 4) {
        const __m256d v = abs_pd(_mm256_loadu_pd(&x[i]));
        const __m256d keep = _mm256_cmp_pd(v, tiny, _CMP_GE_OQ);
        const __m256d safe = _mm256_blendv_pd(_mm256_set1_pd(1.0), v, keep);
        const __m256d r = exp_pd(_mm256_mul_pd(av, log_pd(safe)));
        _mm256_storeu_pd(&out[i], _mm256_and_pd(r, keep));
    }
    scalar::abs_pow(out.subspan(n4), x.subspan(n4), a);
}

}  // namespace mixdiff::vec::avx2
