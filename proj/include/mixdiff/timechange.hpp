#pragma once

#include <cmath>
#include <stdexcept>

namespace mixdiff {

// Power-law time weight t^beta and the substitution that turns the weighted
// diffusion into an autonomous one: the effective diffusion time between t0
// and t is (t^(beta+1) - t0^(beta+1)) / (beta+1).
struct TimeWeight {
    double beta;

    explicit TimeWeight(double b) : beta(b) {
        if (!(b >= 0.0) || !std::isfinite(b))
            throw std::invalid_argument("time weight beta must be >= 0");
    }

    double tau(double t, double t0) const {
        if (!(t0 >= 0.0) || !(t >= t0)) throw std::invalid_argument("tau requires 0 <= t0 <= t");
        if (beta == 0.0) return t - t0;
        const double e = beta + 1.0;
        return (std::pow(t, e) - std::pow(t0, e)) / e;
    }

    double tau_inverse(double sigma, double t0) const {
        if (!(sigma >= 0.0)) throw std::invalid_argument("tau_inverse requires sigma >= 0");
        if (beta == 0.0) return sigma + t0;
        const double e = beta + 1.0;
        return std::pow(e * sigma + std::pow(t0, e), 1.0 / e);
    }
};

inline double tau(double t, double t0, double beta) { return TimeWeight(beta).tau(t, t0); }
inline double tau_inverse(double sigma, double t0, double beta) {
    return TimeWeight(beta).tau_inverse(sigma, t0);
}

}  // namespace mixdiff
