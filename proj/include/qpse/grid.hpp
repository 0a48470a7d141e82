#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace qpse {

using cdouble = std::complex<double>;

enum class Representation { position, frequency };

// Uniform centered sampling grid. Each axis covers [-L/2, L/2) with N nodes,
// node i at (i - N/2)*dx. The dual grid has spacing 2*pi/L and covers
// [-pi*N/L, pi*N/L) with the zero frequency at index N/2.
// dim 1 and 3 are the physical cases; dim 2 arises as the product grid of two
// one-dimensional particles.
struct GridSpec {
    int dim = 1;
    int points_per_axis = 0;
    double extent_per_axis = 0.0;

    GridSpec() = default;
    GridSpec(int dim_, int points, double extent);

    double spacing() const { return extent_per_axis / points_per_axis; }
    double frequency_spacing() const;
    double frequency_extent() const { return frequency_spacing() * points_per_axis; }
    std::size_t node_count() const;

    // coordinate of node index i along one axis, centered convention
    double coordinate(int i) const { return (i - points_per_axis / 2) * spacing(); }
    double frequency(int i) const { return (i - points_per_axis / 2) * frequency_spacing(); }

    // volume element of one node, (spacing)^dim or (dk)^dim
    double cell_volume(Representation rep) const;

    GridSpec dual() const;  // same grid; kept for readability at call sites

    bool operator==(const GridSpec&) const = default;
};

struct SampledAmplitude {
    GridSpec grid;
    Representation representation = Representation::position;
    double time = 0.0;
    std::vector<cdouble> values;

    double norm2() const;  // sum |v|^2 * cell_volume
};

struct Density {
    GridSpec grid;
    Representation representation = Representation::position;
    std::vector<double> values;

    double integral() const;
};

// Unitary transform between position and frequency representations:
//   phi(k) = (2*pi)^(-d/2) * integral psi(r) e^{-i k.r} d^d r
// discretized on the centered grid; exactly unitary in the grid norms.
// Accepts either representation and returns the conjugate one.
SampledAmplitude fourier_transform(const SampledAmplitude& a);

// rho = |psi|^2 on the same grid.
Density born_density(const SampledAmplitude& a);

// Scale so norm2 == 1. Zero input is rejected ("degenerate amplitude").
SampledAmplitude normalize(const SampledAmplitude& a);

}  // namespace qpse
