#include "mixdiff/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mixdiff/fft.hpp"
#include "mixdiff/simd/vec.hpp"

namespace mixdiff {

namespace {

bool is_pow2(int m) { return m > 0 && (m & (m - 1)) == 0; }

void check_finite(std::span<const double> v, const char* what) {
    const double m = vec::max_abs(v);
    if (!std::isfinite(m)) throw std::invalid_argument(std::string(what) + ": non-finite values");
}

// (-1)^(i1 + i2) phase that maps DFT output on samples starting at x = -L to
// coefficients of e^{i xi_k x}. Parity of the FFT index equals the parity of
// the signed mode for even M.
inline double mode_phase(const Grid& g, std::size_t flat) {
    const auto idx = g.multi_index(flat);
    return ((idx[0] + idx[1]) & 1) ? -1.0 : 1.0;
}

}  // namespace

Grid::Grid(int dim, double half_width, int points_per_dim)
    : dim_(dim),
      half_width_(half_width),
      points_per_dim_(points_per_dim),
      spacing_(2.0 * half_width / points_per_dim),
      size_(dim == 1 ? static_cast<std::size_t>(points_per_dim)
                     : static_cast<std::size_t>(points_per_dim) * points_per_dim),
      cell_volume_(dim == 1 ? spacing_ : spacing_ * spacing_),
      box_volume_(dim == 1 ? 2.0 * half_width : 4.0 * half_width * half_width),
      freqs_(static_cast<std::size_t>(points_per_dim)) {
    const int m = points_per_dim;
    for (int i = 0; i < m; ++i) {
        const int k = i < m / 2 ? i : i - m;
        freqs_[static_cast<std::size_t>(i)] = std::numbers::pi * k / half_width;
    }
    freqs_[0] = 0.0;
}

std::size_t Grid::nearest_index(std::array<double, 2> x) const {
    auto clamp_axis = [&](double c) {
        int i = static_cast<int>(std::lround((c + half_width_) / spacing_));
        if (i < 0) i = 0;
        if (i >= points_per_dim_) i = points_per_dim_ - 1;
        return i;
    };
    return flat_index({clamp_axis(x[0]), dim_ == 1 ? 0 : clamp_axis(x[1])});
}

GridPtr make_grid(int dim, double half_width, int points_per_dim) {
    if (dim != 1 && dim != 2) throw std::invalid_argument("grid dim must be 1 or 2");
    if (!(half_width > 0.0) || !std::isfinite(half_width))
        throw std::invalid_argument("grid half_width must be positive and finite");
    if (points_per_dim < 8 || !is_pow2(points_per_dim))
        throw std::invalid_argument("grid points_per_dim must be a power of two >= 8");
    return std::shared_ptr<const Grid>(new Grid(dim, half_width, points_per_dim));
}

Field::Field(GridPtr g, std::vector<double> v) : grid(std::move(g)), values(std::move(v)) {
    if (values.size() != grid->size()) throw std::invalid_argument("field size mismatch");
    check_finite(values, "field");
}

Field::Field(GridPtr g) : grid(std::move(g)), values(grid->size(), 0.0) {}

Spectrum to_spectrum(const Field& f) {
    const Grid& g = *f.grid;
    check_finite(f.values, "to_spectrum input");
    std::vector<std::complex<double>> buf(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) buf[i] = f.values[i];
    fft::transform(g.dim(), g.points_per_dim(), buf.data(), /*inverse=*/false);
    const double scale = 1.0 / static_cast<double>(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) buf[i] *= scale * mode_phase(g, i);
    return Spectrum{f.grid, std::move(buf)};
}

Field from_spectrum(const Spectrum& s) {
    const Grid& g = *s.grid;
    std::vector<std::complex<double>> buf(s.coefficients.size());
    for (std::size_t i = 0; i < buf.size(); ++i) buf[i] = s.coefficients[i] * mode_phase(g, i);
    fft::transform(g.dim(), g.points_per_dim(), buf.data(), /*inverse=*/true);
    std::vector<double> out(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) out[i] = buf[i].real();
    return Field{s.grid, std::move(out)};
}

double spectral_imag_residual(const Spectrum& s) {
    const Grid& g = *s.grid;
    std::vector<std::complex<double>> buf(s.coefficients.size());
    for (std::size_t i = 0; i < buf.size(); ++i) buf[i] = s.coefficients[i] * mode_phase(g, i);
    fft::transform(g.dim(), g.points_per_dim(), buf.data(), /*inverse=*/true);
    double m = 0.0;
    for (const auto& c : buf) m = std::max(m, std::abs(c.imag()));
    return m;
}

double norm(const Field& f, Norm q) {
    switch (q) {
        case Norm::l1:
            return vec::sum_abs(f.span()) * f.grid->cell_volume();
        case Norm::l2:
            return std::sqrt(vec::sum_sq(f.span()) * f.grid->cell_volume());
        case Norm::linf:
            return vec::max_abs(f.span());
    }
    throw std::invalid_argument("unknown norm");
}

double integrate(const Field& f) { return vec::sum(f.span()) * f.grid->cell_volume(); }

double hermitian_defect(const Spectrum& s) {
    const Grid& g = *s.grid;
    const int m = g.points_per_dim();
    auto conj_index = [m](int i) { return i == 0 ? 0 : m - i; };
    double defect = 0.0;
    if (g.dim() == 1) {
        for (int i = 0; i < m; ++i) {
            const auto a = s.coefficients[static_cast<std::size_t>(i)];
            const auto b = s.coefficients[static_cast<std::size_t>(conj_index(i))];
            defect = std::max(defect, std::abs(a - std::conj(b)));
        }
    } else {
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                const auto a = s.coefficients[g.flat_index({i, j})];
                const auto b = s.coefficients[g.flat_index({conj_index(i), conj_index(j)})];
                defect = std::max(defect, std::abs(a - std::conj(b)));
            }
    }
    return defect;
}

Field convolve(const Field& f, const Field& g) {
    if (!f.grid->same_layout(*g.grid)) throw std::invalid_argument("convolve: grid mismatch");
    Spectrum fs = to_spectrum(f);
    const Spectrum gs = to_spectrum(g);
    const double vol = f.grid->box_volume();
    for (std::size_t i = 0; i < fs.coefficients.size(); ++i)
        fs.coefficients[i] *= vol * gs.coefficients[i];
    return from_spectrum(fs);
}

Field spectral_derivative(const Field& f, int axis) {
    const Grid& g = *f.grid;
    if (axis < 0 || axis >= g.dim()) throw std::invalid_argument("derivative axis out of range");
    Spectrum s = to_spectrum(f);
    for (std::size_t i = 0; i < s.coefficients.size(); ++i) {
        const auto idx = g.multi_index(i);
        const double xi = g.frequency(idx[axis]);
        s.coefficients[i] *= std::complex<double>(0.0, xi);
    }
    return from_spectrum(s);
}

Field make_field(const GridPtr& grid, const std::function<double(std::array<double, 2>)>& fn) {
    std::vector<double> v(grid->size());
    for (std::size_t i = 0; i < grid->size(); ++i) v[i] = fn(grid->point(i));
    return Field{grid, std::move(v)};
}

Field field_scaled(const Field& f, double a) {
    Field out = f;
    vec::scale(out.span(), a);
    return out;
}

void field_add_scaled(Field& y, double a, const Field& x) {
    if (!y.grid->same_layout(*x.grid)) throw std::invalid_argument("field combine: grid mismatch");
    vec::axpy(y.span(), a, x.span());
}

}  // namespace mixdiff
