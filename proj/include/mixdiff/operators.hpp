#pragma once

#include <cstddef>
#include <vector>

#include "mixdiff/grid.hpp"

namespace mixdiff {

enum class OperatorKind { laplacian, fractional, mixed };

// -Delta, (-Delta)^s for s in (0,1), or -Delta + (-Delta)^(alpha/2) for
// alpha in (0,2). Fourier symbols |xi|^2, |xi|^(2s), |xi|^2 + |xi|^alpha.
struct OperatorSpec {
    OperatorKind kind;
    double order;  // s (fractional) or alpha (mixed); unused for laplacian

    static OperatorSpec laplacian() { return {OperatorKind::laplacian, 0.0}; }
    static OperatorSpec fractional(double s);
    static OperatorSpec mixed(double alpha);
};

double symbol(const OperatorSpec& spec, double xi_abs);

// Symbol values over all lattice modes (|xi| from the grid frequencies),
// evaluated with the vector kernels.
std::vector<double> symbol_table(const OperatorSpec& spec, const Grid& grid);

// Multiplier application; the result must be real, so the inverse transform's
// imaginary residue is checked (throws beyond 1e-10 relative).
Field apply_operator(const OperatorSpec& spec, const Field& f);

// Normalization constant of the singular-integral form of (-Delta)^s:
// s 4^s Gamma(dim/2 + s) / (pi^(dim/2) Gamma(1 - s)). Diverges as s -> 1 and
// is returned unclamped.
double c_ns(int dim, double s);

// Singular-integral evaluation of (-Delta)^s f at one lattice site, the
// independent cross-check for the multiplier path. The principal value is
// handled by lattice-midpoint summation over a centered ball with the
// singular cell replaced by its closed-form second-order Taylor contribution;
// for s >= 1/2 the integrand inside |z| < inner_radius carries the gradient
// correction. Outside the summation ball the data is modeled as f(x) times
// the exact power-law tail (fields decaying below ~1e-8 of their peak at the
// boundary use a ball inscribed in the box; anything larger is treated as
// periodic and summed over wrapped images first).
//
// Preconditions: 0 < s < 1; site within the central half of the box;
// inner_radius a positive multiple of the spacing (default 8 spacings).
double fractional_laplacian_quadrature(double s, const Field& f, std::size_t site,
                                       double inner_radius = 0.0);

}  // namespace mixdiff
