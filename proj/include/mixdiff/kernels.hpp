#pragma once

#include "mixdiff/grid.hpp"
#include "mixdiff/operators.hpp"

namespace mixdiff {

enum class KernelKind { gauss, stable, mixed };

// Heat kernel family: the Gaussian kernel of -Delta, the alpha-stable kernel
// of -(-Delta)^(alpha/2), and their convolution, the kernel of the mixed
// operator. alpha is unused for the Gaussian kind.
struct KernelSpec {
    KernelKind kind;
    double alpha;

    static KernelSpec gauss() { return {KernelKind::gauss, 2.0}; }
    static KernelSpec stable(double alpha);
    static KernelSpec mixed(double alpha);
};

// Multiplier symbol of the generator associated with the kernel.
OperatorSpec kernel_generator(const KernelSpec& spec);

struct KernelSlice {
    KernelSpec spec;
    double time;
    Field field;
};

// Pointwise closed-form Gaussian kernel (4 pi t)^(-N/2) e^(-|x|^2 / 4t).
// Requires sqrt(t) <= L/6 so the support fits the torus.
KernelSlice gauss_kernel(const GridPtr& grid, double t);

// Inverse transform of e^(-t |xi|^alpha). Requires t^(1/alpha) <= L/6;
// throws if spectral truncation drives the minimum below -1e-6 of the peak
// (heavy-tailed densities ring when under-resolved).
KernelSlice stable_kernel(const GridPtr& grid, double alpha, double t);

// Inverse transform of e^(-t(|xi|^2 + |xi|^alpha)). The Gaussian factor
// bounds the spectral truncation, so only sqrt(t) <= L/6 is enforced; the
// stable factor's tail wrap never moves mass off the torus.
KernelSlice mixed_kernel(const GridPtr& grid, double alpha, double t);

// e^(-tau L) f via the multiplier; tau = 0 is the exact identity, the mode-0
// multiplier is exactly 1 so integrate(f) is conserved.
Field apply_semigroup(const KernelSpec& spec, double tau, const Field& f);

// || |x| g ||_1 lattice moment.
double moment_l1(const Field& g);

// ||E(t) * g - M_g E(t)||_1 with M_g = integrate(g), and the reference decay
// envelope min(t^(-1/2), t^(-1/alpha)) * || x g ||_1 it is tested against.
double taylor_discrepancy(const KernelSpec& spec, const Field& g, double t);
double taylor_bound(const KernelSpec& spec, const Field& g, double t);

}  // namespace mixdiff
