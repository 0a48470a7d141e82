#include "qpse/hydrogen.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace qpse {

namespace {

using std::numbers::pi;

void require_supported(const HydrogenState& s) {
    const bool ok = (s.n == 1 && s.l == 0 && s.m == 0) || (s.n == 2 && s.l == 1 && s.m == 0);
    if (!ok) throw std::invalid_argument("hydrogen: only (1,0,0) and (2,1,0) are supported");
}

bool is_ground(const HydrogenState& s) { return s.n == 1; }

}  // namespace

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.resize(n);
    weights.resize(n);
    const int m = (n + 1) / 2;
    for (int i = 1; i <= m; ++i) {
        double z = std::cos(pi * (i - 0.25) / (n + 0.5));
        double z1, pp;
        do {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 1; j <= n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            z1 = z;
            z = z1 - p1 / pp;
        } while (std::abs(z - z1) > 3e-15);
        nodes[i - 1] = -z;
        nodes[n - i] = z;
        weights[i - 1] = 2.0 / ((1.0 - z * z) * pp * pp);
        weights[n - i] = weights[i - 1];
    }
}

std::complex<double> position_amplitude(const HydrogenState& s, double r, double theta,
                                        double /*phi*/) {
    require_supported(s);
    const double rho = r / s.a0;
    const double scale = std::pow(s.a0, -1.5);
    if (is_ground(s)) return scale / std::sqrt(pi) * std::exp(-rho);
    return scale / std::sqrt(32.0 * pi) * rho * std::exp(-0.5 * rho) * std::cos(theta);
}

std::complex<double> momentum_amplitude_standard(const HydrogenState& s, double p,
                                                 double theta_p, double /*phi_p*/) {
    require_supported(s);
    const double q = p / s.p0;
    const double scale = std::pow(s.p0, -1.5);
    if (is_ground(s)) return scale * std::sqrt(32.0 / pi) * std::pow(1.0 + q * q, -2.0);
    return scale * std::sqrt(128.0 * 128.0 / (2.0 * pi)) * q * std::pow(1.0 + 4.0 * q * q, -3.0) *
           std::cos(theta_p);
}

std::complex<double> momentum_amplitude_alt(const HydrogenState& s, double p, double theta_p,
                                            double phi_p) {
    using namespace std::complex_literals;
    require_supported(s);

    // removable limits: sin(t)/t -> 1, (t cos t - sin t)/t^2 -> 0,
    // (e^{2 i pi f} - 1)/f -> 2 i pi
    std::complex<double> theta_factor;
    if (std::abs(theta_p) < 1e-8) {
        theta_factor = is_ground(s) ? 1.0 : 0.0;
    } else {
        theta_factor = is_ground(s)
                           ? std::sin(theta_p) / theta_p
                           : (theta_p * std::cos(theta_p) - std::sin(theta_p)) / (theta_p * theta_p);
    }
    std::complex<double> phi_factor;
    if (std::abs(phi_p) < 1e-8) {
        phi_factor = 2i * pi;
    } else {
        phi_factor = (std::exp(2i * pi * phi_p) - 1.0) / phi_p;
    }
    if (is_ground(s)) {
        const std::complex<double> pre = (-1.0 + 1i) / (2.0 * pi * pi) * std::sqrt(2.0);
        return pre * std::pow(1i - p, -2.0) * theta_factor * phi_factor;
    }
    const std::complex<double> pre = 2.0 * (-1.0 + 1i) / (pi * pi) * std::sqrt(2.0);
    return pre * std::pow(1i - 2.0 * p, -3.0) * theta_factor * phi_factor;
}

namespace {

struct Rule1D {
    std::vector<double> x, w;
};

// Gauss-Legendre mapped to (a, b)
Rule1D gl_on(double a, double b, int n) {
    std::vector<double> u, wu;
    gauss_legendre(n, u, wu);
    Rule1D r;
    r.x.resize(n);
    r.w.resize(n);
    for (int i = 0; i < n; ++i) {
        r.x[i] = 0.5 * (b - a) * u[i] + 0.5 * (a + b);
        r.w[i] = 0.5 * (b - a) * wu[i];
    }
    return r;
}

// composite rule over break points
Rule1D gl_panels(const std::vector<double>& breaks, int n_per_panel) {
    Rule1D out;
    for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
        const Rule1D r = gl_on(breaks[k], breaks[k + 1], n_per_panel);
        out.x.insert(out.x.end(), r.x.begin(), r.x.end());
        out.w.insert(out.w.end(), r.w.begin(), r.w.end());
    }
    return out;
}

// semi-infinite radial rule r = scale * u / (1 - u), u in (0,1)
Rule1D radial_rule(int n, double scale) {
    std::vector<double> u, wu;
    gauss_legendre(n, u, wu);
    Rule1D r;
    r.x.resize(n);
    r.w.resize(n);
    for (int i = 0; i < n; ++i) {
        const double uu = 0.5 * (u[i] + 1.0);
        const double ww = 0.5 * wu[i];
        r.x[i] = scale * uu / (1.0 - uu);
        r.w[i] = scale * ww / ((1.0 - uu) * (1.0 - uu));
    }
    return r;
}

// -integral rho ln(rho) dmu over a tensor rule, where dmu carries the
// Jacobian (r^2 for spherical radial integrals) and rho is the physical
// density w.r.t. dmu; rho is normalized under the rule first.
double entropy_tensor(const std::function<double(double, double, double)>& rho,
                      const std::function<double(double)>& radial_measure, const Rule1D& ra,
                      const Rule1D& rb, const Rule1D& rc) {
    double norm = 0.0;
    for (std::size_t i = 0; i < ra.x.size(); ++i) {
        const double mi = radial_measure(ra.x[i]) * ra.w[i];
        for (std::size_t j = 0; j < rb.x.size(); ++j) {
            double inner = 0.0;
            for (std::size_t k = 0; k < rc.x.size(); ++k)
                inner += rho(ra.x[i], rb.x[j], rc.x[k]) * rc.w[k];
            norm += inner * mi * rb.w[j];
        }
    }
    if (!(norm > 0.0)) throw std::runtime_error("hydrogen quadrature: zero norm");
    double s = 0.0;
    for (std::size_t i = 0; i < ra.x.size(); ++i) {
        const double mi = radial_measure(ra.x[i]) * ra.w[i];
        for (std::size_t j = 0; j < rb.x.size(); ++j) {
            double inner = 0.0;
            for (std::size_t k = 0; k < rc.x.size(); ++k) {
                const double v = rho(ra.x[i], rb.x[j], rc.x[k]) / norm;
                if (v > 0.0) inner += v * std::log(v) * rc.w[k];
            }
            s -= inner * mi * rb.w[j];
        }
    }
    return s;
}

struct BudgetEntropies {
    double s_r_1s, s_r_2p0, s_p_1s, s_p_2p0;
};

BudgetEntropies compute_entropies(MomentumVariant variant, const QuadratureConfig& cfg) {
    const HydrogenState ground{1, 0, 0};
    const HydrogenState excited{2, 1, 0};

    // position: spherical measure r^2 dr dct dphi, GL in cos(theta) split at
    // the 2p0 node, uniform phi handled as a constant 2*pi factor via a
    // 1-point rule
    const Rule1D ct = gl_panels({-1.0, 0.0, 1.0}, cfg.angular_nodes);
    Rule1D phi_const;
    phi_const.x = {0.0};
    phi_const.w = {2.0 * pi};

    auto pos_density = [&](const HydrogenState& st) {
        return [st](double r, double c, double /*f*/) {
            const double a = std::abs(position_amplitude(st, r, std::acos(c), 0.0));
            return a * a;
        };
    };
    const auto r_squared = [](double r) { return r * r; };
    const Rule1D r_short = radial_rule(cfg.radial_nodes, cfg.radial_scale);
    const Rule1D r_long = radial_rule(cfg.radial_nodes, 2.0 * cfg.radial_scale);

    BudgetEntropies out{};
    out.s_r_1s = entropy_tensor(pos_density(ground), r_squared, r_short, ct, phi_const);
    out.s_r_2p0 = entropy_tensor(pos_density(excited), r_squared, r_long, ct, phi_const);

    if (variant == MomentumVariant::standard) {
        auto mom_density = [&](const HydrogenState& st) {
            return [st](double p, double c, double /*f*/) {
                const double a = std::abs(momentum_amplitude_standard(st, p, std::acos(c), 0.0));
                return a * a;
            };
        };
        const Rule1D pr = radial_rule(cfg.radial_nodes, 1.0);
        out.s_p_1s = entropy_tensor(mom_density(ground), r_squared, pr, ct, phi_const);
        out.s_p_2p0 = entropy_tensor(mom_density(excited), r_squared, pr, ct, phi_const);
    } else {
        // plain dp dtheta dphi over (0,inf) x (0,pi] x (0,2pi]; panels split
        // at the interior zeros of the phi factor
        auto mom_density = [&](const HydrogenState& st) {
            return [st](double p, double th, double f) {
                const double a = std::abs(momentum_amplitude_alt(st, p, th, f));
                return a * a;
            };
        };
        const auto plain = [](double) { return 1.0; };
        const Rule1D pr = radial_rule(cfg.radial_nodes, 1.0);
        const Rule1D th = gl_panels({0.0, 0.5 * pi, pi}, cfg.angular_nodes);
        const Rule1D ph = gl_panels({0.0, 1.0, 2.0, 2.0 * pi}, cfg.phi_nodes);
        out.s_p_1s = entropy_tensor(mom_density(ground), plain, pr, th, ph);
        out.s_p_2p0 = entropy_tensor(mom_density(excited), plain, pr, th, ph);
    }
    return out;
}

}  // namespace

HydrogenBudget hydrogen_entropy_budget(MomentumVariant variant, const QuadratureConfig& cfg) {
    const BudgetEntropies e = compute_entropies(variant, cfg);

    HydrogenBudget b;
    b.variant = variant == MomentumVariant::standard ? "standard" : "alt";
    b.measure = variant == MomentumVariant::standard
                    ? "p^2 dp dcos(theta) dphi (spherical)"
                    : "dp dtheta dphi on (0,inf) x (0,pi] x (0,2pi] (plain)";
    b.s_r_1s = e.s_r_1s;
    b.s_r_2p0 = e.s_r_2p0;
    b.s_p_1s = e.s_p_1s;
    b.s_p_2p0 = e.s_p_2p0;
    b.delta_s = (e.s_r_1s + e.s_p_1s) - (e.s_r_2p0 + e.s_p_2p0);

    if (cfg.convergence_check) {
        QuadratureConfig fine = cfg;
        fine.radial_nodes *= 2;
        fine.angular_nodes *= 2;
        fine.phi_nodes *= 2;
        fine.convergence_check = false;
        const BudgetEntropies f = compute_entropies(variant, fine);
        double ds = std::abs(f.s_r_1s - e.s_r_1s);
        ds = std::max(ds, std::abs(f.s_r_2p0 - e.s_r_2p0));
        ds = std::max(ds, std::abs(f.s_p_1s - e.s_p_1s));
        ds = std::max(ds, std::abs(f.s_p_2p0 - e.s_p_2p0));
        b.convergence_ds = ds;
        if (ds > 1e-3) {
            std::ostringstream msg;
            msg << "hydrogen quadrature not converged: |dS| = " << ds << " at radial="
                << cfg.radial_nodes << " angular=" << cfg.angular_nodes
                << " phi=" << cfg.phi_nodes;
            throw std::runtime_error(msg.str());
        }
    }

    const PhotonEntropy ph = photon_angular_entropy(b.delta_s);
    b.photon_s_q = ph.s_q;
    b.photon_s_r = ph.s_r;
    b.photon_bound = ph.bound;
    return b;
}

PhotonEntropy photon_angular_entropy(double delta_s) {
    PhotonEntropy p;
    p.s_q = std::log(2.0 * pi);
    p.s_r = std::log(2.0 * pi);
    p.bound = 2.0 * std::log(2.0 * pi) + delta_s;
    return p;
}

}  // namespace qpse
