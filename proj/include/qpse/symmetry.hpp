#pragma once

#include <Eigen/Dense>
#include <array>

#include "qpse/entropy.hpp"
#include "qpse/grid.hpp"

namespace qpse {

using Matrix4cd = Eigen::Matrix4cd;

// Dirac gamma matrices in the standard (Dirac-Pauli) representation, metric
// diag(+,-,-,-), together with the discrete-symmetry matrices
//   P = gamma0, C = i gamma2 gamma0, T = i gamma1 gamma3,
//   gamma5 = i gamma0 gamma1 gamma2 gamma3.
// All symmetry phases are fixed to 1; densities are phase-blind.
struct GammaSet {
    Matrix4cd gamma0, gamma1, gamma2, gamma3, gamma5;
    Matrix4cd C, T, P;

    static const GammaSet& standard();
};

// Sampled 4-spinor field on a centered grid.
struct SpinorField {
    GridSpec grid;
    double time = 0.0;
    std::array<std::vector<cdouble>, 4> components;

    double norm2() const;  // integral of psi^dagger psi
};

SpinorField normalize(const SpinorField& f);

// psi^dagger psi summed over the 4 components.
Density spinor_position_density(const SpinorField& f);
// density of the componentwise Fourier transform
Density spinor_frequency_density(const SpinorField& f);
EntropyValue spinor_entropy(const SpinorField& f);

// Psi^P(-r, t) = gamma0 Psi(-r, t): spatial reflection then gamma0.
SpinorField apply_parity(const SpinorField& f);

// Psi^C = C conj(Psi-bar)^T = i gamma2 conj(Psi) in the standard
// representation; pointwise density preserved.
SpinorField apply_charge_conjugation(const SpinorField& f);

// Psi^T = T conj(Psi), time stamp negated; squares to -identity (Kramers).
SpinorField apply_time_reversal(const SpinorField& f);

// Psi^CPT(-r) = gamma5 conj(Psi)(r) with spatial reflection; an exact
// involution.
SpinorField apply_cpt(const SpinorField& f);

}  // namespace qpse
