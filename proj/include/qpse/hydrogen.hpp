#pragma once

#include <complex>
#include <string>
#include <vector>

namespace qpse {

// Hydrogen bound states used by the Lyman-alpha entropy budget; only
// (1,0,0) and (2,1,0) are supported. a0 is the Bohr radius, p0 = hbar/a0.
struct HydrogenState {
    int n = 1, l = 0, m = 0;
    double a0 = 1.0;
    double p0 = 1.0;
};

enum class MomentumVariant { standard, alt };

// Closed-form amplitudes. Position and standard-momentum forms are
// normalized under the full spherical measure; the alternative forms follow
// the printed spherical-conjugate-momentum expressions and are normalized
// numerically inside the budget.
std::complex<double> position_amplitude(const HydrogenState& s, double r, double theta,
                                        double phi);
std::complex<double> momentum_amplitude_standard(const HydrogenState& s, double p,
                                                 double theta_p, double phi_p);
std::complex<double> momentum_amplitude_alt(const HydrogenState& s, double p, double theta_p,
                                            double phi_p);

struct QuadratureConfig {
    int radial_nodes = 160;    // Gauss-Legendre on u in (0,1), r = scale*u/(1-u)
    int angular_nodes = 96;    // Gauss-Legendre in cos(theta), split at 0
    int phi_nodes = 64;        // per panel for the alt variant; uniform otherwise
    double radial_scale = 4.0;
    bool convergence_check = true;  // redo at doubled resolution, require |dS| < 1e-3
};

struct HydrogenBudget {
    std::string variant;
    std::string measure;  // integration measure used for the momentum entropies
    double s_r_2p0 = 0.0;  // position entropies (include the ln pi part)
    double s_r_1s = 0.0;
    double s_p_2p0 = 0.0;  // momentum entropies for the chosen variant
    double s_p_1s = 0.0;
    double delta_s = 0.0;  // (S_r + S_p)(1s) - (S_r + S_p)(2p0)
    double photon_s_q = 0.0;
    double photon_s_r = 0.0;
    double photon_bound = 0.0;  // 2 ln 2pi + delta_s
    // transition metadata, reported only
    double delta_e_ev = 10.2;
    double wavelength_nm = 121.567;
    // convergence diagnostics: largest |dS| under doubled resolution
    double convergence_ds = 0.0;
};

// Entropies at a0 = p0 = 1 with numerically normalized densities.
// Throws with grid diagnostics if the doubled-resolution check moves any
// entropy by more than 1e-3.
HydrogenBudget hydrogen_entropy_budget(MomentumVariant variant,
                                       const QuadratureConfig& cfg = {});

struct PhotonEntropy {
    double s_q = 0.0;    // ln 2pi
    double s_r = 0.0;    // ln 2pi
    double bound = 0.0;  // 2 ln 2pi + delta_s of the chosen electron budget
};

PhotonEntropy photon_angular_entropy(double delta_s);

// Gauss-Legendre nodes/weights on (-1, 1); shared with the tests.
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace qpse
