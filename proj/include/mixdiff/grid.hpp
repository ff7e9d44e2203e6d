#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <vector>

namespace mixdiff {

// Periodic torus lattice on [-L, L)^dim with M points per axis, M a power of
// two. The per-axis angular wavenumbers are xi_k = pi k / L for
// k in {-M/2, ..., M/2 - 1}, stored in FFT index order (0, 1, ..., -1).
// Immutable after construction; fields and spectra hold shared references.
class Grid {
public:
    int dim() const { return dim_; }
    double half_width() const { return half_width_; }
    int points_per_dim() const { return points_per_dim_; }
    double spacing() const { return spacing_; }

    std::size_t size() const { return size_; }
    double cell_volume() const { return cell_volume_; }  // spacing^dim
    double box_volume() const { return box_volume_; }    // (2L)^dim

    // Wavenumber of FFT index i along one axis.
    double frequency(int i) const { return freqs_[static_cast<std::size_t>(i)]; }
    std::span<const double> frequencies() const { return freqs_; }

    // Coordinate of lattice index i along one axis: -L + i * spacing.
    double coordinate(int i) const { return -half_width_ + spacing_ * i; }

    // Row-major flattening for dim == 2; identity for dim == 1.
    std::size_t flat_index(std::array<int, 2> idx) const {
        return dim_ == 1 ? static_cast<std::size_t>(idx[0])
                         : static_cast<std::size_t>(idx[0]) * points_per_dim_ + idx[1];
    }
    std::array<int, 2> multi_index(std::size_t flat) const {
        if (dim_ == 1) return {static_cast<int>(flat), 0};
        return {static_cast<int>(flat / points_per_dim_),
                static_cast<int>(flat % points_per_dim_)};
    }

    // Lattice point coordinates (second component 0 in 1D).
    std::array<double, 2> point(std::size_t flat) const {
        const auto idx = multi_index(flat);
        return {coordinate(idx[0]), dim_ == 1 ? 0.0 : coordinate(idx[1])};
    }

    // Flat index of the lattice point nearest to the given coordinates.
    std::size_t nearest_index(std::array<double, 2> x) const;

    bool same_layout(const Grid& other) const {
        return dim_ == other.dim_ && points_per_dim_ == other.points_per_dim_ &&
               half_width_ == other.half_width_;
    }

private:
    friend std::shared_ptr<const Grid> make_grid(int, double, int);
    Grid(int dim, double half_width, int points_per_dim);

    int dim_;
    double half_width_;
    int points_per_dim_;
    double spacing_;
    std::size_t size_;
    double cell_volume_;
    double box_volume_;
    std::vector<double> freqs_;
};

using GridPtr = std::shared_ptr<const Grid>;

// Rejects dim outside {1,2}, non-positive half widths, and M that is not a
// power of two >= 8.
GridPtr make_grid(int dim, double half_width, int points_per_dim);

// Real lattice function. Public operations keep values finite; constructors
// and transforms reject NaN/Inf.
struct Field {
    GridPtr grid;
    std::vector<double> values;

    Field() = default;
    Field(GridPtr g, std::vector<double> v);
    explicit Field(GridPtr g);  // zero field

    std::span<const double> span() const { return values; }
    std::span<double> span() { return values; }
};

// Fourier coefficients of a Field, same index layout as the grid frequencies.
// coefficient(0) is the mean of the field. A spectrum originating from a real
// field is Hermitian-symmetric up to round-off.
struct Spectrum {
    GridPtr grid;
    std::vector<std::complex<double>> coefficients;
};

// Forward transform, normalized so the mode-0 coefficient equals the mean of
// f; coefficients multiply the basis functions e^{i xi_k . x}.
Spectrum to_spectrum(const Field& f);

// Inverse of to_spectrum; discards the imaginary residue of the inverse DFT.
Field from_spectrum(const Spectrum& s);

// Largest |imaginary part| the inverse DFT discards (diagnostic for
// multiplier outputs that must be real).
double spectral_imag_residual(const Spectrum& s);

enum class Norm { l1, l2, linf };

// Riemann-sum lattice norms and integral.
double norm(const Field& f, Norm q);
double integrate(const Field& f);

// Max over the Hermitian pairs of |c(k) - conj(c(-k))| (test diagnostic).
double hermitian_defect(const Spectrum& s);

// Torus convolution (f * g)(x) = integral f(y) g(x - y) dy, evaluated
// spectrally: coefficients multiply pointwise scaled by the box volume.
Field convolve(const Field& f, const Field& g);

// Spectral derivative along an axis (i xi_axis multiplier).
Field spectral_derivative(const Field& f, int axis);

// Pointwise construction helper; fn receives lattice coordinates.
Field make_field(const GridPtr& grid, const std::function<double(std::array<double, 2>)>& fn);

// Field combination helpers used across the solver hot paths.
Field field_scaled(const Field& f, double a);
void field_add_scaled(Field& y, double a, const Field& x);  // y += a x

}  // namespace mixdiff
