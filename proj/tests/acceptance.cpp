// Acceptance suite: one criterion per function, one PASS/FAIL line each.
// Returns the number of failed criteria.

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qpse/dispersion.hpp"
#include "qpse/entropy.hpp"
#include "qpse/hydrogen.hpp"
#include "qpse/qcurve.hpp"
#include "qpse/symmetry.hpp"
#include "qpse/twolevel.hpp"
#include "qpse/twoparticle.hpp"

using namespace qpse;
using std::numbers::pi;

namespace {

struct CheckList {
    bool ok = true;
    std::ostringstream detail;
    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail << (detail.tellp() > 0 ? "; " : "") << what;
        }
    }
    void note(const std::string& what) {
        detail << (detail.tellp() > 0 ? "; " : "") << what;
    }
};

double total_of(const SampledAmplitude& pos) {
    return total_entropy(born_density(pos), born_density(fourier_transform(pos))).total;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

// ---------------------------------------------------------------- 1
void criterion_minimum_entropy(CheckList& c) {
    GridSpec g1(1, 4096, 80.0);
    const double s1 = total_of(make_coherent(g1, CoherentState::isotropic(1, 1.0)));
    c.expect(std::abs(s1 - (1.0 + std::log(pi))) <= 1e-3,
             "1D coherent entropy " + fmt(s1) + " vs 2.14473 (tol 1e-3)");

    GridSpec g3(3, 64, 24.0);
    const double s3 = total_of(make_coherent(g3, CoherentState::isotropic(3, 1.0)));
    c.expect(std::abs(s3 - 3.0 * (1.0 + std::log(pi))) <= 5e-3,
             "3D coherent entropy " + fmt(s3) + " vs 6.43418 (tol 5e-3)");
}

// ---------------------------------------------------------------- 2
void criterion_coherent_growth(CheckList& c) {
    GridSpec g(1, 4096, 80.0);
    DispersionModel m{DispersionKind::schroedinger, 1.0};
    const auto cs = CoherentState::isotropic(1, 1.0);
    const auto psi0 = make_coherent(g, cs);

    EntropySeries series;
    series.meta = "coherent growth";
    double worst = 0.0;
    for (int i = 0; i <= 20; ++i) {
        const double t = 10.0 * i / 20.0;
        const double numeric = total_of(evolve_exact(psi0, m, t));
        worst = std::max(worst, std::abs(numeric - coherent_entropy_closed_form(cs, m, t)));
        series.times.push_back(t);
        series.values.push_back(numeric);
    }
    c.expect(worst <= 2e-3, "closed-form mismatch " + fmt(worst) + " (tol 2e-3)");
    bool strict = true;
    for (std::size_t i = 0; i + 1 < series.values.size(); ++i)
        strict = strict && series.values[i + 1] > series.values[i];
    c.expect(strict, "series not strictly increasing");
    c.expect(classify(series).label == QCurveLabel::I, "series not classified I");
}

// ---------------------------------------------------------------- 3
void criterion_dispersion_oracles(CheckList& c) {
    std::mt19937_64 rng(301);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    double worst_g = 0.0, worst_h = 0.0, worst_l = 0.0;
    for (const auto kind : {DispersionKind::schroedinger, DispersionKind::dirac}) {
        DispersionModel m{kind, 1.2};
        for (int trial = 0; trial < 100; ++trial) {
            Eigen::VectorXd k(3);
            k << u(rng), u(rng), u(rng);
            // central differences of omega
            Eigen::VectorXd fd(3);
            Eigen::MatrixXd fh(3, 3);
            const double h = 1e-5;
            for (int i = 0; i < 3; ++i) {
                Eigen::VectorXd kp = k, km = k;
                kp(i) += h;
                km(i) -= h;
                fd(i) = (omega(m, kp) - omega(m, km)) / (2.0 * h);
            }
            const double h2 = 1e-4;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) {
                    Eigen::VectorXd kpp = k, kpm = k, kmp = k, kmm = k;
                    kpp(i) += h2;
                    kpp(j) += h2;
                    kpm(i) += h2;
                    kpm(j) -= h2;
                    kmp(i) -= h2;
                    kmp(j) += h2;
                    kmm(i) -= h2;
                    kmm(j) -= h2;
                    fh(i, j) = (omega(m, kpp) - omega(m, kpm) - omega(m, kmp) + omega(m, kmm)) /
                               (4.0 * h2 * h2);
                }
            const auto g = group_velocity(m, k);
            const auto hess = hessian(m, k);
            worst_g = std::max(worst_g, (g - fd).norm() / std::max(1.0, g.norm()));
            worst_h = std::max(worst_h, (hess - fh).norm() / std::max(1.0, hess.norm()));
            if (kind == DispersionKind::dirac) {
                Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(hess);
                Eigen::Vector3d closed = hessian_eigenvalues(m, Eigen::Vector3d(k));
                std::sort(closed.data(), closed.data() + 3);
                worst_l =
                    std::max(worst_l, (Eigen::Vector3d(es.eigenvalues()) - closed).norm());
            }
        }
    }
    c.expect(worst_g <= 1e-7, "group velocity FD error " + fmt(worst_g));
    c.expect(worst_h <= 1e-6, "hessian FD error " + fmt(worst_h));
    c.expect(worst_l <= 1e-10, "eigenvalue closed-form error " + fmt(worst_l));
    c.note("gv " + fmt(worst_g) + ", hess " + fmt(worst_h) + ", eig " + fmt(worst_l));
}

// ---------------------------------------------------------------- 4
void criterion_twolevel_exactness(CheckList& c) {
    std::mt19937_64 rng(401);
    std::uniform_real_distribution<double> u(-4.0, 4.0);
    double worst_oracle = 0.0, worst_unit = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        TwoLevelSystem sys{u(rng), u(rng), u(rng), u(rng), u(rng)};
        const double t = std::abs(u(rng));
        Eigen::Matrix2cd h;
        h << sys.omega11(), sys.w12i, sys.w12i, sys.omega22();
        const Eigen::Matrix2cd prop = (cdouble(0, -t) * h).exp();
        const auto [a1, a2] = coefficients(sys, t);
        worst_oracle = std::max(worst_oracle, std::abs(a1 - prop(0, 0)));
        worst_oracle = std::max(worst_oracle, std::abs(a2 - prop(1, 0)));
        worst_unit = std::max(worst_unit, std::abs(std::norm(a1) + std::norm(a2) - 1.0));
    }
    c.expect(worst_oracle <= 1e-10, "two-state oracle error " + fmt(worst_oracle));
    c.expect(worst_unit <= 1e-12, "unitarity defect " + fmt(worst_unit));

    const auto [r1, r2] = coefficients({0.0, 0.0, 0.0, 0.0, 1.0}, pi / 2.0);
    c.expect(std::abs(std::norm(r2) - 1.0) <= 1e-12,
             "resonant transfer |a2|^2 = " + fmt(std::norm(r2)));

    double worst_n = 0.0;
    for (int n = 2; n <= 8; ++n) {
        for (int trial = 0; trial < 40; ++trial) {
            Eigen::VectorXd h0(n);
            for (int i = 0; i < n; ++i) h0(i) = u(rng);
            Eigen::MatrixXd hi(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = i; j < n; ++j) hi(i, j) = hi(j, i) = 0.3 * u(rng);
            const double t = std::abs(u(rng));
            Eigen::MatrixXcd h = hi.cast<cdouble>();
            h.diagonal() += h0.cast<cdouble>();
            const Eigen::MatrixXcd prop = (cdouble(0, -t) * h).exp();
            for (int j = 1; j <= n; ++j)
                worst_n = std::max(worst_n, std::abs(n_level_transition(h0, hi, j, t) -
                                                     std::norm(prop(j - 1, 0))));
        }
    }
    c.expect(worst_n <= 1e-10, "n-level oracle error " + fmt(worst_n));
    c.note("oracle " + fmt(worst_oracle) + ", n-level " + fmt(worst_n));
}

// ---------------------------------------------------------------- 5
void criterion_oscillation(CheckList& c) {
    GridSpec g(1, 512, 40.0);
    TwoLevelSystem sys{1.0, 1.0, 0.0, 0.0, 0.5};
    const auto [l1, l2] = eigenvalues(sys);
    const double period = 2.0 * pi / std::abs(l2 - l1);

    for (const auto& [n1, n2] : {std::pair{0, 1}, std::pair{0, 2}}) {
        const auto basis = harmonic_oscillator_basis(g, n1, n2);
        std::vector<double> ts;
        for (int i = 0; i <= 48; ++i) ts.push_back(period * i / 48.0);
        const auto series = oscillation_entropy_series(basis, sys, ts);
        const std::string tag = "basis(" + std::to_string(n1) + "," + std::to_string(n2) + ")";
        c.expect(classify(series).label == QCurveLabel::O, tag + " not classified O");

        const double probe = 0.31 * period;
        const auto [ra, ka] = oscillation_densities(basis, sys, probe);
        const auto [rb, kb] = oscillation_densities(basis, sys, probe + period);
        double rec = 0.0;
        for (std::size_t i = 0; i < ra.values.size(); ++i) {
            rec = std::max(rec, std::abs(ra.values[i] - rb.values[i]));
            rec = std::max(rec, std::abs(ka.values[i] - kb.values[i]));
        }
        c.expect(rec <= 1e-9, tag + " density recurrence " + fmt(rec));

        const auto coef = oscillation_density_coefficients(basis, sys);
        const bool half = half_period_recurrence(basis, sys);
        c.note(tag + ": half-period recurrence " + (half ? "true" : "false") +
               " (|A3| " + fmt(coef.a3_max) + ", |B3| " + fmt(coef.b3_max) + ")");
    }
}

// ---------------------------------------------------------------- 6
void criterion_hydrogen(CheckList& c) {
    const auto std_b = hydrogen_entropy_budget(MomentumVariant::standard);
    const double lp = std::log(pi);
    c.expect(std::abs(std_b.s_r_2p0 - lp - 6.120) <= 0.01,
             "S_r(2p0)-ln pi = " + fmt(std_b.s_r_2p0 - lp) + " vs 6.120");
    c.expect(std::abs(std_b.s_r_1s - lp - 3.000) <= 0.005,
             "S_r(1s)-ln pi = " + fmt(std_b.s_r_1s - lp) + " vs 3.000");
    c.expect(std::abs(std_b.s_p_2p0 - 0.042) <= 0.01,
             "S_p(2p0) = " + fmt(std_b.s_p_2p0) + " vs 0.042");
    c.expect(std::abs(std_b.s_p_1s - 2.422) <= 0.01,
             "S_p(1s) = " + fmt(std_b.s_p_1s) + " vs 2.422");
    c.expect(std::abs(std_b.delta_s - (-0.740)) <= 0.02,
             "delta S = " + fmt(std_b.delta_s) + " vs -0.740");
    c.expect(std::abs(std_b.photon_bound - 2.936) <= 0.02,
             "photon bound = " + fmt(std_b.photon_bound) + " vs 2.936");

    const auto alt_b = hydrogen_entropy_budget(MomentumVariant::alt);
    c.expect(std::abs(alt_b.s_p_2p0 - 0.556) <= 0.01,
             "S'_p(2p0) = " + fmt(alt_b.s_p_2p0) + " vs 0.556");
    c.expect(std::abs(alt_b.s_p_1s - 2.667) <= 0.01,
             "S'_p(1s) = " + fmt(alt_b.s_p_1s) + " vs 2.667");
    c.expect(std::abs(alt_b.delta_s - (-1.009)) <= 0.02,
             "delta S' = " + fmt(alt_b.delta_s) + " vs -1.009");
}

// ---------------------------------------------------------------- 7
void criterion_collision(CheckList& c) {
    struct Config {
        double p1, hm;
        const char* tag;
    };
    const Config configs[3] = {{1.0, 1.0, "(1,1)"}, {1.0, 0.5, "(1,0.5)"}, {2.0, 0.5, "(2,0.5)"}};
    double onset[3] = {0, 0, 0};
    for (int i = 0; i < 3; ++i) {
        CollisionSetup setup;
        setup.p1 = configs[i].p1;
        setup.hbar_over_m = configs[i].hm;
        const double vg = group_velocity1d(setup.model(), setup.p1);
        const double t_meet = 150.0 / vg;
        std::vector<double> ts;
        for (int s = 0; s <= 56; ++s) ts.push_back(1.25 * t_meet * s / 56.0);
        const auto series = collision_entropy_series(setup, ts);
        const auto cls = classify(series);
        c.expect(cls.label == QCurveLabel::O,
                 std::string(configs[i].tag) + " not O (got " + to_string(cls.label) + ")");
        const auto tc = detect_critical_time(series, default_epsilon(series));
        if (tc) {
            onset[i] = *tc;
            c.note(std::string(configs[i].tag) + " onset " + fmt(*tc) + " meet " + fmt(t_meet));
        } else {
            c.expect(false, std::string(configs[i].tag) + " has no critical time");
        }
    }
    c.expect(onset[1] > onset[0], "onset(1,0.5) not later than onset(1,1)");
    c.expect(onset[2] < onset[1], "onset(2,0.5) not earlier than onset(1,0.5)");
}

// ---------------------------------------------------------------- 8
void criterion_symmetries(CheckList& c) {
    const auto& g = GammaSet::standard();
    const Matrix4cd id = Matrix4cd::Identity();
    const Matrix4cd gam[4] = {g.gamma0, g.gamma1, g.gamma2, g.gamma3};
    const double eta[4] = {1.0, -1.0, -1.0, -1.0};
    double worst_alg = 0.0;
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            const Matrix4cd anti = gam[mu] * gam[nu] + gam[nu] * gam[mu];
            const Matrix4cd want = (mu == nu ? 2.0 * eta[mu] : 0.0) * id;
            worst_alg = std::max(worst_alg, (anti - want).cwiseAbs().maxCoeff());
        }
    const Matrix4cd cinv = g.C.inverse();
    for (const auto& m : gam)
        worst_alg =
            std::max(worst_alg, (g.C * m * cinv + m.transpose()).cwiseAbs().maxCoeff());
    worst_alg = std::max(worst_alg, (g.T * g.T.conjugate() + id).cwiseAbs().maxCoeff());
    c.expect(worst_alg <= 1e-13, "gamma algebra error " + fmt(worst_alg));

    GridSpec grid(1, 128, 24.0);
    std::mt19937_64 rng(801);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    double worst_ent = 0.0, worst_inv = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        SpinorField f;
        f.grid = grid;
        for (auto& comp : f.components) {
            comp.resize(grid.node_count());
            const double sigma2 = 1.0 + 2.0 * std::abs(u(rng));
            const double x0 = 4.0 * u(rng), k0 = 2.0 * u(rng);
            const cdouble amp(u(rng), u(rng));
            for (int i = 0; i < grid.points_per_axis; ++i) {
                const double x = grid.coordinate(i);
                comp[i] = amp * std::exp(-(x - x0) * (x - x0) / (2.0 * sigma2)) *
                          std::polar(1.0, k0 * x);
            }
        }
        f = normalize(f);
        const double base = spinor_entropy(f).total;
        SpinorField conj = f;
        for (auto& comp : conj.components)
            for (auto& v : comp) v = std::conj(v);
        for (const auto& tf : {conj, apply_parity(f), apply_charge_conjugation(f),
                               apply_time_reversal(f), apply_cpt(f)})
            worst_ent = std::max(worst_ent, std::abs(spinor_entropy(tf).total - base));
        const auto back = apply_cpt(apply_cpt(f));
        for (int comp = 0; comp < 4; ++comp)
            for (std::size_t i = 0; i < back.components[comp].size(); ++i)
                worst_inv = std::max(worst_inv, std::abs(back.components[comp][i] -
                                                         f.components[comp][i]));
    }
    c.expect(worst_ent <= 1e-9, "entropy invariance error " + fmt(worst_ent));
    c.expect(worst_inv <= 1e-12, "CPT involution error " + fmt(worst_inv));
    c.note("algebra " + fmt(worst_alg) + ", entropy " + fmt(worst_ent));
}

// ---------------------------------------------------------------- 9
void criterion_qcurve_partition(CheckList& c) {
    std::mt19937_64 rng(901);
    std::uniform_int_distribution<int> n_seg(1, 4);
    std::uniform_int_distribution<int> seg_len(2, 8);
    std::uniform_real_distribution<double> step(0.05, 0.4);
    std::bernoulli_distribution up(0.5);
    int bad = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        EntropySeries s;
        std::vector<double> v{0.0};
        const int segments = n_seg(rng);
        for (int seg = 0; seg < segments; ++seg) {
            const bool rising = up(rng);
            const int len = seg_len(rng);
            for (int i = 0; i < len; ++i)
                v.push_back(v.back() + (rising ? 1.0 : -1.0) * step(rng));
        }
        while (v.size() < 3) v.push_back(v.back() + step(rng));
        for (std::size_t i = 0; i < v.size(); ++i) s.times.push_back(static_cast<double>(i));
        s.values = v;

        const double eps = default_epsilon(s);
        const auto got = classify(s, eps).label;
        // exclusivity: recompute from first principles
        double lo = v[0], hi = v[0];
        for (double x : v) {
            lo = std::min(lo, x);
            hi = std::max(hi, x);
        }
        bool drop = false, rise = false;
        for (std::size_t i = 0; i + 1 < v.size(); ++i) {
            if (v[i + 1] - v[i] < -eps) drop = true;
            if (v[i + 1] - v[i] > eps) rise = true;
        }
        QCurveLabel want;
        if (hi - lo <= eps)
            want = QCurveLabel::C;
        else if (!drop)
            want = QCurveLabel::I;
        else if (!rise)
            want = QCurveLabel::D;
        else
            want = QCurveLabel::O;
        if (got != want) ++bad;
        if (classify(reflect(s), eps).label != class_of_reflection(got)) ++bad;
    }
    c.expect(bad == 0, std::to_string(bad) + " partition/mapping mismatches");
}

// ---------------------------------------------------------------- 10
void criterion_far_apart_additivity(CheckList& c) {
    for (auto stats : {ExchangeStatistics::fermion, ExchangeStatistics::boson}) {
        CollisionSetup setup;
        setup.statistics = stats;
        const auto jd = joint_density(setup, 0.0);
        const double joint = two_particle_entropy(jd.position, jd.frequency).total;
        const double singles = total_of(single_packet(setup, 1, 0.0)) +
                               total_of(single_packet(setup, 2, 0.0));
        const std::string tag = stats == ExchangeStatistics::fermion ? "fermion" : "boson";
        c.expect(std::abs(joint - (singles + 2.0 * std::log(2.0))) <= 2e-2,
                 tag + " joint " + fmt(joint) + " vs singles+2ln2 " +
                     fmt(singles + 2.0 * std::log(2.0)));

        // brute-force oracle from the squared amplitude at doubled resolution
        CollisionSetup fine = setup;
        fine.grid = GridSpec(1, 2000, setup.grid.extent_per_axis);
        auto oracle = [&](const SampledAmplitude& f1, const SampledAmplitude& f2) {
            const int n = f1.grid.points_per_axis;
            const double sign = stats == ExchangeStatistics::fermion ? -1.0 : 1.0;
            const double cell = f1.grid.cell_volume(f1.representation);
            std::vector<double> rho(static_cast<std::size_t>(n) * n);
            double z = 0.0;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    const double v =
                        std::norm(f1.values[i] * f2.values[j] + sign * f1.values[j] * f2.values[i]);
                    rho[static_cast<std::size_t>(i) * n + j] = v;
                    z += v;
                }
            z *= cell * cell;
            double s = 0.0;
            for (double v : rho) {
                const double p = v / z;
                if (p > 0.0) s -= p * std::log(p);
            }
            return s * cell * cell;
        };
        const auto f1 = single_packet(fine, 1, 0.0);
        const auto f2 = single_packet(fine, 2, 0.0);
        const double oracle_joint =
            oracle(f1, f2) + oracle(fourier_transform(f1), fourier_transform(f2));
        c.expect(std::abs(joint - oracle_joint) <= 2e-2,
                 tag + " refined-grid oracle " + fmt(oracle_joint) + " vs " + fmt(joint));
    }
}

struct Criterion {
    int id;
    const char* name;
    double runtime_limit_s;
    void (*run)(CheckList&);
};

}  // namespace

int main() {
    const Criterion criteria[] = {
        {1, "minimum entropy of coherent states", 5.0, criterion_minimum_entropy},
        {2, "coherent entropy growth vs closed form", 30.0, criterion_coherent_growth},
        {3, "dispersion derivative oracles", 0.0, criterion_dispersion_oracles},
        {4, "two-level exact coefficients", 10.0, criterion_twolevel_exactness},
        {5, "two-level entropy oscillation", 60.0, criterion_oscillation},
        {6, "hydrogen entropy budget", 60.0, criterion_hydrogen},
        {7, "two-fermion collision ordering", 600.0, criterion_collision},
        {8, "gamma algebra and CPT invariance", 0.0, criterion_symmetries},
        {9, "QCurve partition and reflection", 0.0, criterion_qcurve_partition},
        {10, "far-apart two-particle additivity", 0.0, criterion_far_apart_additivity},
    };

    int failures = 0;
    for (const auto& cr : criteria) {
        CheckList c;
        const auto start = std::chrono::steady_clock::now();
        try {
            cr.run(c);
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (cr.runtime_limit_s > 0.0 && elapsed > cr.runtime_limit_s) {
            c.expect(false, "runtime " + fmt(elapsed) + "s exceeds " +
                                fmt(cr.runtime_limit_s) + "s");
        }
        const std::string detail = c.detail.str();
        std::printf("%s criterion %2d: %s [%.1fs]%s%s\n", c.ok ? "PASS" : "FAIL", cr.id, cr.name,
                    elapsed, detail.empty() ? "" : " - ", detail.c_str());
        std::fflush(stdout);
        if (!c.ok) ++failures;
    }
    if (failures > 0) std::printf("%d criterion(s) failed\n", failures);
    return failures;
}
