#pragma once

#include <Eigen/Dense>
#include <complex>
#include <utility>
#include <vector>

#include "qpse/grid.hpp"
#include "qpse/qcurve.hpp"

namespace qpse {

// Two eigenstates of H0 coupled by a real symmetric interaction H_I, in
// frequency units (matrix elements divided by hbar). omega21_i = omega12_i
// keeps H_I Hermitian.
struct TwoLevelSystem {
    double omega1 = 0.0;
    double omega2 = 0.0;
    double w11i = 0.0;
    double w22i = 0.0;
    double w12i = 0.0;

    double omega11() const { return omega1 + w11i; }
    double omega22() const { return omega2 + w22i; }
};

struct MixingAngle {
    double theta = 0.0;  // in (-pi/2, pi/2]
    bool degenerate = false;
};

// sin 2theta = 2 w12 / sqrt((w11-w22)^2 + 4 w12^2), cos 2theta matching.
MixingAngle mixing_angle(const TwoLevelSystem& sys);

// (lambda1, lambda2) = ((w11+w22) +- sqrt((w11-w22)^2 + 4 w12^2)) / 2,
// lambda1 takes the plus sign.
std::pair<double, double> eigenvalues(const TwoLevelSystem& sys);

// Evolution coefficients of the state starting in eigenstate 1:
//   alpha1 = cos^2(th) e^{-i l1 t} + sin^2(th) e^{-i l2 t}
//   alpha2 = sin(2 th) (e^{-i l1 t} - e^{-i l2 t}) / 2
// |alpha1|^2 + |alpha2|^2 = 1 and |alpha2|^2 = sin^2(2th) sin^2((l2-l1)t/2).
std::pair<cdouble, cdouble> coefficients(const TwoLevelSystem& sys, double t);

// Same propagator applied to a normalized initial superposition.
std::pair<cdouble, cdouble> superposition_coefficients(const TwoLevelSystem& sys, double t,
                                                       cdouble a1_0, cdouble a2_0);

// Weak-coupling transition probability 4 w12^2/(w1-w2)^2 sin^2((w2-w1)t/2);
// rejects the resonant case w1 == w2.
double fermi_approximation(const TwoLevelSystem& sys, double t);

// |alpha_j(t)|^2 for an N-level H0 + H_I via the spectral cosine expansion
// over eigenpairs of the symmetric matrix; initial state is level 1.
// j is 1-based.
double n_level_transition(const Eigen::VectorXd& h0_diag, const Eigen::MatrixXd& hi, int j,
                          double t);

// Orthonormal pair carrying the spatial structure of the two levels, with
// precomputed frequency representations.
struct OscillationBasis {
    SampledAmplitude psi1, psi2;  // position representation
    SampledAmplitude phi1, phi2;  // their transforms
};

// 1D harmonic-oscillator eigenfunctions (unit frequency) as the default basis.
OscillationBasis harmonic_oscillator_basis(const GridSpec& grid, int n1, int n2);

// Static coefficients of the density expansion
//   rho_r(r,t) = A1 + A2 sin^2((l2-l1)t/2) + A3 sin((l2-l1)t)
// and the same in frequency space with B coefficients.
struct OscillationCoefficients {
    std::vector<double> a1, a2, a3;
    std::vector<double> b1, b2, b3;
    double a3_max = 0.0;  // L-inf norms; zero means the sin((l2-l1)t) term is absent
    double b3_max = 0.0;
};

OscillationCoefficients oscillation_density_coefficients(const OscillationBasis& basis,
                                                         const TwoLevelSystem& sys);

// Position and frequency densities at time t. Evaluated both through the
// expansion above and directly as |a1 psi1 + a2 psi2|^2; the two routes must
// agree to 1e-10.
std::pair<Density, Density> oscillation_densities(const OscillationBasis& basis,
                                                  const TwoLevelSystem& sys, double t);

EntropySeries oscillation_entropy_series(const OscillationBasis& basis,
                                         const TwoLevelSystem& sys,
                                         const std::vector<double>& t_grid);

// Numerical probe of entropy recurrence under a half-period translation
// t -> t + pi/|l2 - l1|. Exact recurrence needs the full period
// 2 pi/|l2 - l1|; the half-period value is reported per configuration.
bool half_period_recurrence(const OscillationBasis& basis, const TwoLevelSystem& sys,
                            double tol = 1e-6);

}  // namespace qpse
