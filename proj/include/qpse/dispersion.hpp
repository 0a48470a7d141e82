#pragma once

#include <Eigen/Dense>

#include "qpse/grid.hpp"

namespace qpse {

enum class DispersionKind { schroedinger, dirac };
enum class EnergyBranch { positive, negative };

// Free-particle dispersion relation with hbar = c = 1:
//   schroedinger: w(k) = k^2 / (2m)
//   dirac:        w(k) = branch * sqrt(k^2 + m^2)
struct DispersionModel {
    DispersionKind kind = DispersionKind::schroedinger;
    double mass = 1.0;
    EnergyBranch branch = EnergyBranch::positive;

    double sign() const { return branch == EnergyBranch::positive ? 1.0 : -1.0; }
};

double omega(const DispersionModel& model, const Eigen::VectorXd& k);
Eigen::VectorXd group_velocity(const DispersionModel& model, const Eigen::VectorXd& k);
Eigen::MatrixXd hessian(const DispersionModel& model, const Eigen::VectorXd& k);

// Closed-form Dirac Hessian spectrum: lambda1 = m^2/(m^2+|k|^2)^(3/2) along k,
// lambda2 = lambda3 = (m^2+|k|^2)^(-1/2) transverse (times the branch sign).
Eigen::Vector3d hessian_eigenvalues(const DispersionModel& model, const Eigen::Vector3d& k);

// scalar convenience for 1D problems
double omega1d(const DispersionModel& model, double k);
double group_velocity1d(const DispersionModel& model, double k);
double hessian1d(const DispersionModel& model, double k);

// Gaussian minimum-uncertainty packet. The amplitude is proportional to
// exp(-(r-r0)^T Sigma^{-1} (r-r0)/2) e^{i k0.r}, so the position density has
// covariance Sigma/2 and the frequency density Sigma^{-1}/2; the uncertainty
// product is 1/4 per axis and the t=0 entropy sits at dim*(1+ln pi).
struct CoherentState {
    Eigen::VectorXd center_r;
    Eigen::VectorXd center_k;
    Eigen::MatrixXd sigma2;  // positive-definite spatial covariance Sigma

    int dim() const { return static_cast<int>(center_r.size()); }

    static CoherentState isotropic(int dim, double sigma2_scalar, double k0 = 0.0,
                                   double r0 = 0.0);
};

// Sample the packet on the grid (position representation), normalized.
// Warns on stderr if the packet comes within 6 sigma of the boundary.
SampledAmplitude make_coherent(const GridSpec& grid, const CoherentState& cs);

// Spectral evolution: multiply the frequency representation by e^{-i w(k) t}.
// Exact for the free particle; preserves the norm and the momentum density.
SampledAmplitude evolve_exact(const SampledAmplitude& a, const DispersionModel& model,
                              double t);

// Second-order Taylor of w around k0 (group velocity + Hessian), the
// quadratic-phase approximation of the spectral evolution; renormalized
// numerically. Equals evolve_exact for schroedinger, where w is quadratic.
SampledAmplitude evolve_dispersion_transform(const SampledAmplitude& a,
                                             const DispersionModel& model, double t,
                                             const Eigen::VectorXd& k0);

// dim*(1 + ln pi) + 0.5 * ln det(I + t^2 (Sigma^{-1} H)^2) with H the Hessian
// at the packet's central frequency.
double coherent_entropy_closed_form(const CoherentState& cs, const DispersionModel& model,
                                    double t);

}  // namespace qpse
