#pragma once

#include "qpse/grid.hpp"

namespace qpse {

// Dimensionless phase-space entropy of a pure state: S = S_r + S_k with
// hbar = 1, so the -3 ln hbar term vanishes and momentum equals spatial
// frequency.
struct EntropyValue {
    double s_r = 0.0;
    double s_k = 0.0;
    double total = 0.0;
};

// -sum rho ln rho * (spacing)^dim with the 0 ln 0 := 0 convention.
// Values in [-1e-12, 0] are clamped to zero (FFT round-off in |phi|^2);
// anything more negative is rejected as "invalid density".
double differential_entropy(const Density& d);

EntropyValue total_entropy(const Density& position, const Density& frequency);

// Joint entropy of a symmetrized two-particle state sampled on product grids
// (x1, x2) and (k1, k2). The -6 ln hbar term vanishes with hbar = 1.
EntropyValue two_particle_entropy(const Density& rho_r12, const Density& rho_k12);

// dim * (1 + ln pi), the entropic-uncertainty floor per Cartesian dimension.
double min_entropy_bound(int dim);

}  // namespace qpse
