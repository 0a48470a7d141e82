#pragma once

#include <utility>
#include <vector>

#include "qpse/dispersion.hpp"
#include "qpse/entropy.hpp"
#include "qpse/grid.hpp"
#include "qpse/qcurve.hpp"

namespace qpse {

enum class ExchangeStatistics { fermion, boson };

// Two identical coherent packets on a shared 1D grid, launched at c1 and c2
// with momenta +p1 and -p1. The Dirac dispersion with c = 1 drives the group
// velocity and spreading; mass = 1 / hbar_over_m with hbar = 1.
struct CollisionSetup {
    double c1 = -150.0;
    double c2 = 150.0;
    double p1 = 1.0;
    double sigma2 = 25.0;  // position variance parameter of the packet pair
    double hbar_over_m = 1.0;
    ExchangeStatistics statistics = ExchangeStatistics::fermion;
    GridSpec grid{1, 1000, 800.0};

    double mass() const { return 1.0 / hbar_over_m; }
    DispersionModel model() const { return {DispersionKind::dirac, mass()}; }
};

// Packet `which` (1 or 2) at time t, position representation. Analytic
// Gaussian with complex width sigma2 + i t H(p), translated by the group
// velocity; agrees with evolve_dispersion_transform of the t=0 packet.
SampledAmplitude single_packet(const CollisionSetup& setup, int which, double t);

// (Anti)symmetrized joint densities on the (x1,x2) and (k1,k2) product grids,
// renormalized numerically; the normalization integrals fix C_t.
struct JointDensities {
    Density position;   // dim-2 grid
    Density frequency;  // dim-2 grid
    double c_position = 0.0;   // normalization constant of the raw assembly
    double c_frequency = 0.0;
};

JointDensities joint_density(const CollisionSetup& setup, double t);

// Total two-particle entropy over t_grid.
EntropySeries collision_entropy_series(const CollisionSetup& setup,
                                       const std::vector<double>& t_grid);

// Entropy trace of one packet evolving alone (its QCurve is increasing).
EntropySeries single_packet_entropy_series(const CollisionSetup& setup, int which,
                                           const std::vector<double>& t_grid);

QCurveClass classify_collision(const CollisionSetup& setup, const std::vector<double>& t_grid);
// default window: [0, 1.25 x meeting time], 57 samples
QCurveClass classify_collision(const CollisionSetup& setup);

// L-inf norm of psi1 conj(psi2), the strength of the exchange interference.
double packet_overlap(const CollisionSetup& setup, double t);

}  // namespace qpse
