#include "mixdiff/operators.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mixdiff/simd/vec.hpp"

namespace mixdiff {

namespace {
constexpr double kPi = std::numbers::pi;
}

OperatorSpec OperatorSpec::fractional(double s) {
    if (!(s > 0.0 && s < 1.0)) throw std::invalid_argument("fractional order s must be in (0,1)");
    return {OperatorKind::fractional, s};
}

OperatorSpec OperatorSpec::mixed(double alpha) {
    if (!(alpha > 0.0 && alpha < 2.0)) throw std::invalid_argument("mixed alpha must be in (0,2)");
    return {OperatorKind::mixed, alpha};
}

double symbol(const OperatorSpec& spec, double xi_abs) {
    switch (spec.kind) {
        case OperatorKind::laplacian:
            return xi_abs * xi_abs;
        case OperatorKind::fractional:
            return xi_abs == 0.0 ? 0.0 : std::pow(xi_abs, 2.0 * spec.order);
        case OperatorKind::mixed:
            return xi_abs * xi_abs + (xi_abs == 0.0 ? 0.0 : std::pow(xi_abs, spec.order));
    }
    throw std::invalid_argument("unknown operator kind");
}

std::vector<double> symbol_table(const OperatorSpec& spec, const Grid& grid) {
    const std::size_t n = grid.size();
    std::vector<double> xi_abs(n);
    if (grid.dim() == 1) {
        for (std::size_t i = 0; i < n; ++i) xi_abs[i] = std::abs(grid.frequency(static_cast<int>(i)));
    } else {
        const int m = grid.points_per_dim();
        for (int i = 0; i < m; ++i) {
            const double a = grid.frequency(i);
            for (int j = 0; j < m; ++j) {
                const double b = grid.frequency(j);
                xi_abs[grid.flat_index({i, j})] = std::hypot(a, b);
            }
        }
    }
    std::vector<double> sym(n);
    switch (spec.kind) {
        case OperatorKind::laplacian:
            for (std::size_t i = 0; i < n; ++i) sym[i] = xi_abs[i] * xi_abs[i];
            break;
        case OperatorKind::fractional:
            vec::abs_pow(sym, xi_abs, 2.0 * spec.order);
            break;
        case OperatorKind::mixed:
            vec::abs_pow(sym, xi_abs, spec.order);
            for (std::size_t i = 0; i < n; ++i) sym[i] += xi_abs[i] * xi_abs[i];
            break;
    }
    return sym;
}

Field apply_operator(const OperatorSpec& spec, const Field& f) {
    Spectrum s = to_spectrum(f);
    const std::vector<double> sym = symbol_table(spec, *f.grid);
    vec::complex_scale(s.coefficients, sym);

    const double residual = spectral_imag_residual(s);
    Field out = from_spectrum(s);
    const double scale = std::max(vec::max_abs(out.span()), 1.0);
    if (residual > 1e-10 * scale)
        throw std::runtime_error("apply_operator: imaginary residue exceeds 1e-10");
    return out;
}

double c_ns(int dim, double s) {
    if (dim < 1) throw std::invalid_argument("c_ns: dim must be >= 1");
    if (!(s > 0.0 && s < 1.0)) throw std::invalid_argument("c_ns: s must be in (0,1)");
    const double n = dim;
    return s * std::pow(4.0, s) * std::tgamma(n / 2.0 + s) /
           (std::pow(kPi, n / 2.0) * std::tgamma(1.0 - s));
}

namespace {

// Integral of |z|^(2 - dim - 2s) over the singular lattice cell: the exact
// value for the centered 1D cell, an equal-area disc for the 2D cell.
double singular_cell_moment(int dim, double s, double dx) {
    if (dim == 1) return 2.0 * std::pow(dx / 2.0, 2.0 - 2.0 * s) / (2.0 - 2.0 * s);
    const double rho = dx / std::sqrt(kPi);
    return 2.0 * kPi * std::pow(rho, 2.0 - 2.0 * s) / (2.0 - 2.0 * s);
}

// Surface measure of the unit sphere boundary in dim dimensions.
double sphere_measure(int dim) { return dim == 1 ? 2.0 : 2.0 * kPi; }

}  // namespace

double fractional_laplacian_quadrature(double s, const Field& f, std::size_t site,
                                       double inner_radius) {
    const Grid& g = *f.grid;
    if (!(s > 0.0 && s < 1.0)) throw std::invalid_argument("quadrature: s must be in (0,1)");
    const double dx = g.spacing();
    const double cell = g.cell_volume();
    const double half = g.half_width();
    if (inner_radius == 0.0) inner_radius = 8.0 * dx;
    const double cells = inner_radius / dx;
    if (!(inner_radius > 0.0) || std::abs(cells - std::round(cells)) > 1e-9)
        throw std::invalid_argument("quadrature: inner_radius must be a positive multiple of spacing");

    const auto x = g.point(site);
    const auto idx = g.multi_index(site);
    for (int a = 0; a < g.dim(); ++a)
        if (std::abs(x[a]) > half / 2.0 + 1e-12)
            throw std::invalid_argument("quadrature: evaluation point within L/2 of the boundary");

    // Zero-extend decaying data; wrap anything with a live boundary.
    double boundary = 0.0;
    const int m = g.points_per_dim();
    if (g.dim() == 1) {
        boundary = std::abs(f.values[0]);
    } else {
        for (int i = 0; i < m; ++i) {
            boundary = std::max(boundary, std::abs(f.values[g.flat_index({0, i})]));
            boundary = std::max(boundary, std::abs(f.values[g.flat_index({i, 0})]));
        }
    }
    const double peak = vec::max_abs(f.span());
    const bool periodic = boundary > 1e-8 * peak;

    double ball_radius;
    if (periodic) {
        ball_radius = 4.0 * 2.0 * half;
    } else {
        ball_radius = half - std::abs(x[0]);
        if (g.dim() == 2) ball_radius = std::min(ball_radius, half - std::abs(x[1]));
    }

    const double fx = f.values[site];
    const bool corrected = s >= 0.5;
    std::array<double, 2> grad{0.0, 0.0};
    if (corrected)
        for (int a = 0; a < g.dim(); ++a) grad[a] = spectral_derivative(f, a).values[site];

    // Closed-form contribution of the excluded singular cell: the even Taylor
    // part integrates to -(trace Hessian / (2 dim)) * cell moment, and the
    // spectral (-Delta)f supplies -trace Hessian at the site.
    const double neg_lap = apply_operator(OperatorSpec::laplacian(), f).values[site];
    const double center_term =
        (neg_lap / (2.0 * g.dim())) * singular_cell_moment(g.dim(), s, dx);

    const double exponent = g.dim() + 2.0 * s;
    const int reach = static_cast<int>(std::floor(ball_radius / dx));
    const double r2max = ball_radius * ball_radius;

    auto wrap = [m](int i) {
        int r = i % m;
        return r < 0 ? r + m : r;
    };

    double acc = 0.0;
    if (g.dim() == 1) {
        for (int j = -reach; j <= reach; ++j) {
            if (j == 0) continue;
            const double z = j * dx;
            if (z * z > r2max) continue;
            const int yi = idx[0] + j;
            double fy;
            if (periodic) {
                fy = f.values[static_cast<std::size_t>(wrap(yi))];
            } else if (yi < 0 || yi >= m) {
                fy = 0.0;
            } else {
                fy = f.values[static_cast<std::size_t>(yi)];
            }
            double num = fx - fy;
            if (corrected && std::abs(z) < inner_radius) num += grad[0] * z;
            acc += num / std::pow(std::abs(z), exponent);
        }
    } else {
        for (int j0 = -reach; j0 <= reach; ++j0)
            for (int j1 = -reach; j1 <= reach; ++j1) {
                if (j0 == 0 && j1 == 0) continue;
                const double z0 = j0 * dx, z1 = j1 * dx;
                const double r2 = z0 * z0 + z1 * z1;
                if (r2 > r2max) continue;
                const int yi0 = idx[0] + j0, yi1 = idx[1] + j1;
                double fy;
                if (periodic) {
                    fy = f.values[g.flat_index({wrap(yi0), wrap(yi1)})];
                } else if (yi0 < 0 || yi0 >= m || yi1 < 0 || yi1 >= m) {
                    fy = 0.0;
                } else {
                    fy = f.values[g.flat_index({yi0, yi1})];
                }
                double num = fx - fy;
                if (corrected && r2 < inner_radius * inner_radius)
                    num += grad[0] * z0 + grad[1] * z1;
                acc += num / std::pow(r2, exponent / 2.0);
            }
    }

    // f(x) times the exact integral of |z|^-(dim+2s) outside the ball; the
    // data itself is negligible (or oscillatory-small) out there.
    const double tail =
        fx * sphere_measure(g.dim()) * std::pow(ball_radius, -2.0 * s) / (2.0 * s);

    return c_ns(g.dim(), s) * (acc * cell + center_term + tail);
}

}  // namespace mixdiff
