#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>

#include "qpse/dispersion.hpp"
#include "qpse/entropy.hpp"
#include "qpse/hydrogen.hpp"
#include "qpse/io.hpp"
#include "qpse/qcurve.hpp"
#include "qpse/symmetry.hpp"
#include "qpse/twolevel.hpp"
#include "qpse/twoparticle.hpp"

using nlohmann::json;
using namespace qpse;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitGuard = 3;

struct GuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::ostream& open_sink(const std::string& path, std::ofstream& file) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output path: " + path);
    return file;
}

void emit_json(const json& j, const std::string& path) {
    std::ofstream file;
    auto& out = open_sink(path, file);
    out << j.dump(2) << "\n";
}

double total_of(const SampledAmplitude& position_amp) {
    return total_entropy(born_density(position_amp),
                         born_density(fourier_transform(position_amp)))
        .total;
}

// The underresolution guard: recompute the first snapshot at doubled
// resolution and compare.
void check_guard(double coarse, double fine, const std::string& what) {
    if (std::abs(coarse - fine) > 1e-3) {
        std::ostringstream msg;
        msg << what << ": entropy moved by " << format_g12(std::abs(coarse - fine))
            << " when doubling the grid; increase --points/--extent";
        throw GuardError(msg.str());
    }
}

// ---------------------------------------------------------------- commands

int cmd_min_bound(int dim, const std::string& output) {
    json j;
    j["schema_version"] = "1";
    j["dim"] = dim;
    j["min_entropy"] = min_entropy_bound(dim);
    emit_json(j, output);
    return kExitOk;
}

int cmd_entropy(const std::string& input, const std::string& meta, const std::string& output,
                bool guard) {
    SampledAmplitude a = read_amplitude(input, meta);
    a = normalize(a);
    const SampledAmplitude pos =
        a.representation == Representation::position ? a : fourier_transform(a);
    const SampledAmplitude freq =
        a.representation == Representation::position ? fourier_transform(a) : a;
    const EntropyValue e = total_entropy(born_density(pos), born_density(freq));

    if (guard && a.grid.points_per_axis % 2 == 0 && a.grid.dim == 1) {
        // coarsen by keeping every other node; a resolved amplitude barely
        // moves
        SampledAmplitude half;
        half.grid = GridSpec(1, a.grid.points_per_axis / 2, a.grid.extent_per_axis);
        half.representation = pos.representation;
        for (int i = 0; i < a.grid.points_per_axis; i += 2) half.values.push_back(pos.values[i]);
        half = normalize(half);
        check_guard(total_of(half), e.total, "entropy guard");
    }

    json j;
    j["schema_version"] = "1";
    j["s_r"] = e.s_r;
    j["s_k"] = e.s_k;
    j["s_total"] = e.total;
    j["min_bound"] = min_entropy_bound(a.grid.dim);
    emit_json(j, output);
    return kExitOk;
}

int cmd_coherent_evolve(double sigma2, const std::string& model_name, double mass, double k0,
                        double tmax, int steps, int points, double extent,
                        const std::string& output, bool guard) {
    DispersionModel model{
        model_name == "dirac" ? DispersionKind::dirac : DispersionKind::schroedinger, mass};
    const GridSpec grid(1, points, extent);
    const auto cs = CoherentState::isotropic(1, sigma2, k0);
    const SampledAmplitude psi0 = make_coherent(grid, cs);

    if (guard) {
        const GridSpec fine(1, 2 * points, extent);
        check_guard(total_of(make_coherent(fine, cs)), total_of(psi0), "coherent-evolve guard");
    }

    std::ofstream file;
    auto& out = open_sink(output, file);
    out << "t,s_r,s_k,s_total,s_closed_form\n";
    for (int i = 0; i <= steps; ++i) {
        const double t = tmax * i / steps;
        const SampledAmplitude psi = evolve_exact(psi0, model, t);
        const EntropyValue e =
            total_entropy(born_density(psi), born_density(fourier_transform(psi)));
        out << format_g12(t) << ',' << format_g12(e.s_r) << ',' << format_g12(e.s_k) << ','
            << format_g12(e.total) << ','
            << format_g12(coherent_entropy_closed_form(cs, model, t)) << "\n";
    }
    return kExitOk;
}

int cmd_two_state(const TwoLevelSystem& sys, double tmax, int steps, int points, double extent,
                  int level1, int level2, const std::string& output, bool guard) {
    const GridSpec grid(1, points, extent);
    const OscillationBasis basis = harmonic_oscillator_basis(grid, level1, level2);

    if (guard) {
        const GridSpec fine(1, 2 * points, extent);
        const OscillationBasis fb = harmonic_oscillator_basis(fine, level1, level2);
        const auto [r0, k0] = oscillation_densities(basis, sys, 0.0);
        const auto [r1, k1] = oscillation_densities(fb, sys, 0.0);
        check_guard(total_entropy(r1, k1).total, total_entropy(r0, k0).total, "two-state guard");
    }

    std::ofstream file;
    auto& out = open_sink(output, file);
    out << "t,p1,p2,s_total\n";
    for (int i = 0; i <= steps; ++i) {
        const double t = tmax * i / steps;
        const auto [a1, a2] = coefficients(sys, t);
        const auto [rho_r, rho_k] = oscillation_densities(basis, sys, t);
        out << format_g12(t) << ',' << format_g12(std::norm(a1)) << ','
            << format_g12(std::norm(a2)) << ',' << format_g12(total_entropy(rho_r, rho_k).total)
            << "\n";
    }
    return kExitOk;
}

json parse_json_arg(const std::string& arg) {
    // accept inline JSON or a path to a JSON file
    if (!arg.empty() && (arg.front() == '[' || arg.front() == '{')) return json::parse(arg);
    std::ifstream in(arg);
    if (!in) throw std::runtime_error("cannot open JSON input: " + arg);
    json j;
    in >> j;
    return j;
}

int cmd_n_state(const std::string& h0_arg, const std::string& hi_arg, double tmax, int steps,
                const std::string& output) {
    const json h0_json = parse_json_arg(h0_arg);
    const json hi_json = parse_json_arg(hi_arg);
    const auto n = static_cast<Eigen::Index>(h0_json.size());
    Eigen::VectorXd h0(n);
    for (Eigen::Index i = 0; i < n; ++i) h0(i) = h0_json.at(i).get<double>();
    Eigen::MatrixXd hi(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) hi(i, j) = hi_json.at(i).at(j).get<double>();

    std::ofstream file;
    auto& out = open_sink(output, file);
    out << "t";
    for (Eigen::Index j = 1; j <= n; ++j) out << ",p" << j;
    out << "\n";
    for (int i = 0; i <= steps; ++i) {
        const double t = tmax * i / steps;
        out << format_g12(t);
        for (int j = 1; j <= n; ++j) out << ',' << format_g12(n_level_transition(h0, hi, j, t));
        out << "\n";
    }
    return kExitOk;
}

int cmd_collide(double p1, double hbar_over_m, double sigma2, double c, int grid_points,
                const std::string& stats, double tmax, int steps, const std::string& output,
                bool guard) {
    CollisionSetup setup;
    setup.c1 = -c;
    setup.c2 = c;
    setup.p1 = p1;
    setup.sigma2 = sigma2;
    setup.hbar_over_m = hbar_over_m;
    setup.statistics = stats == "boson" ? ExchangeStatistics::boson : ExchangeStatistics::fermion;
    setup.grid = GridSpec(1, grid_points, 800.0 * (c / 150.0));

    if (tmax <= 0.0) {
        const double vg = group_velocity1d(setup.model(), p1);
        tmax = 1.25 * c / vg;
    }

    if (guard) {
        CollisionSetup fine = setup;
        fine.grid = GridSpec(1, 2 * grid_points, setup.grid.extent_per_axis);
        const auto jd0 = joint_density(setup, 0.0);
        const auto jd1 = joint_density(fine, 0.0);
        check_guard(two_particle_entropy(jd1.position, jd1.frequency).total,
                    two_particle_entropy(jd0.position, jd0.frequency).total, "collide guard");
    }

    std::ofstream file;
    auto& out = open_sink(output, file);
    out << "t,s_total,s_sum_singles,overlap\n";
    for (int i = 0; i <= steps; ++i) {
        const double t = tmax * i / steps;
        const auto jd = joint_density(setup, t);
        const double joint = two_particle_entropy(jd.position, jd.frequency).total;
        const double singles =
            total_of(single_packet(setup, 1, t)) + total_of(single_packet(setup, 2, t));
        out << format_g12(t) << ',' << format_g12(joint) << ',' << format_g12(singles) << ','
            << format_g12(packet_overlap(setup, t)) << "\n";
    }
    return kExitOk;
}

int cmd_hydrogen(const std::string& variant_name, int radial, int angular, int phi,
                 const std::string& output, bool guard) {
    const MomentumVariant variant =
        variant_name == "alt" ? MomentumVariant::alt : MomentumVariant::standard;
    QuadratureConfig cfg;
    cfg.radial_nodes = radial;
    cfg.angular_nodes = angular;
    cfg.phi_nodes = phi;
    cfg.convergence_check = guard;
    HydrogenBudget b;
    try {
        b = hydrogen_entropy_budget(variant, cfg);
    } catch (const std::runtime_error& e) {
        throw GuardError(e.what());
    }

    json j;
    j["schema_version"] = "1";
    j["variant"] = b.variant;
    j["measure"] = b.measure;
    j["s_r_2p0"] = b.s_r_2p0;
    j["s_r_1s"] = b.s_r_1s;
    j["s_p_2p0"] = b.s_p_2p0;
    j["s_p_1s"] = b.s_p_1s;
    j["delta_s"] = b.delta_s;
    j["photon_s_q"] = b.photon_s_q;
    j["photon_s_r"] = b.photon_s_r;
    j["photon_bound"] = b.photon_bound;
    j["delta_e_ev"] = b.delta_e_ev;
    j["wavelength_nm"] = b.wavelength_nm;
    j["convergence_ds"] = b.convergence_ds;
    emit_json(j, output);
    return kExitOk;
}

int cmd_classify(const std::string& input, std::optional<double> epsilon,
                 const std::string& output) {
    const EntropySeries s = read_series_csv(input);
    const double eps = epsilon ? *epsilon : default_epsilon(s);
    const QCurveClass cls = classify(s, eps);
    const auto tc = detect_critical_time(s, eps);

    json j;
    j["schema_version"] = "1";
    j["label"] = to_string(cls.label);
    j["epsilon"] = eps;
    if (tc)
        j["t_c"] = *tc;
    else
        j["t_c"] = nullptr;
    emit_json(j, output);
    return kExitOk;
}

int cmd_verify_symmetries(int fields, int points, std::uint64_t seed,
                          const std::string& output) {
    const auto& g = GammaSet::standard();
    json checks = json::array();
    bool all_ok = true;
    auto record = [&](const std::string& name, double err, double tol) {
        const bool ok = err <= tol;
        all_ok = all_ok && ok;
        checks.push_back({{"check", name}, {"max_error", err}, {"tolerance", tol}, {"pass", ok}});
    };

    {
        const Matrix4cd id = Matrix4cd::Identity();
        const Matrix4cd gam[4] = {g.gamma0, g.gamma1, g.gamma2, g.gamma3};
        const double eta[4] = {1.0, -1.0, -1.0, -1.0};
        double worst = 0.0;
        for (int mu = 0; mu < 4; ++mu)
            for (int nu = 0; nu < 4; ++nu) {
                const Matrix4cd anti = gam[mu] * gam[nu] + gam[nu] * gam[mu];
                const Matrix4cd want = (mu == nu ? 2.0 * eta[mu] : 0.0) * id;
                worst = std::max(worst, (anti - want).cwiseAbs().maxCoeff());
            }
        record("anticommutator metric", worst, 1e-13);

        double cworst = 0.0;
        const Matrix4cd cinv = g.C.inverse();
        for (const auto& m : gam)
            cworst = std::max(cworst, (g.C * m * cinv + m.transpose()).cwiseAbs().maxCoeff());
        record("C gamma C^-1 = -gamma^T", cworst, 1e-13);
        record("T T* = -1 (Kramers)", (g.T * g.T.conjugate() + id).cwiseAbs().maxCoeff(), 1e-13);
    }

    {
        const GridSpec grid(1, points, 24.0);
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        double worst = 0.0, worst_inv = 0.0;
        for (int trial = 0; trial < fields; ++trial) {
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
            for (const auto& tf : {apply_parity(f), apply_charge_conjugation(f),
                                   apply_time_reversal(f), apply_cpt(f)}) {
                worst = std::max(worst, std::abs(spinor_entropy(tf).total - base));
            }
            const auto back = apply_cpt(apply_cpt(f));
            for (int c = 0; c < 4; ++c)
                for (std::size_t i = 0; i < back.components[c].size(); ++i)
                    worst_inv = std::max(worst_inv,
                                         std::abs(back.components[c][i] - f.components[c][i]));
        }
        record("entropy invariance (P, C, T, CPT)", worst, 1e-9);
        record("CPT involution", worst_inv, 1e-12);
    }

    json j;
    j["schema_version"] = "1";
    j["seed"] = seed;
    j["fields"] = fields;
    j["checks"] = checks;
    j["pass"] = all_ok;
    emit_json(j, output);
    return all_ok ? kExitOk : kExitGuard;
}

}  // namespace

// Optional JSON config: a flat object of flag names to values, applied only
// where the command line did not set the flag (explicit flags win).
std::vector<std::string> apply_config(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::string config_path;
    for (std::size_t i = 0; i + 1 < args.size(); ++i)
        if (args[i] == "--config") config_path = args[i + 1];
    if (config_path.empty()) return args;

    std::ifstream in(config_path);
    if (!in) throw std::runtime_error("cannot open config: " + config_path);
    json cfg;
    in >> cfg;
    for (const auto& [key, value] : cfg.items()) {
        const std::string flag = "--" + key;
        if (std::find(args.begin(), args.end(), flag) != args.end()) continue;
        args.push_back(flag);
        if (value.is_boolean()) {
            if (!value.get<bool>()) args.pop_back();
        } else if (value.is_string()) {
            args.push_back(value.get<std::string>());
        } else {
            args.push_back(value.dump());
        }
    }
    return args;
}

int main(int argc, char** argv) {
    CLI::App app{"phase-space entropy toolkit: wavepacket entropy evolution, exact two-level "
                 "transitions, two-particle collisions, hydrogen budgets and QCurve "
                 "classification"};
    app.require_subcommand(1);
    std::string output = "-";

    auto* mb = app.add_subcommand("min-bound", "print the entropy floor dim*(1+ln pi)");
    mb->add_option("--output", output, "output path (\'-\' for stdout)");
    int mb_dim = 3;
    mb->add_option("--dim", mb_dim, "number of Cartesian dimensions")->capture_default_str();

    auto* en = app.add_subcommand("entropy", "entropy of an amplitude stored as CSV + JSON meta");
    en->add_option("--output", output, "output path (\'-\' for stdout)");
    std::string en_input, en_meta;
    bool en_no_guard = false;
    en->add_option("--input", en_input, "amplitude CSV")->required();
    en->add_option("--meta", en_meta, "amplitude JSON metadata")->required();
    en->add_flag("--no-guard", en_no_guard, "skip the resolution guard");

    auto* ce = app.add_subcommand("coherent-evolve", "free coherent packet entropy vs time");
    ce->add_option("--output", output, "output path (\'-\' for stdout)");
    double ce_sigma2 = 1.0, ce_mass = 1.0, ce_k0 = 0.0, ce_tmax = 10.0, ce_extent = 80.0;
    int ce_steps = 20, ce_points = 4096;
    std::string ce_model = "schroedinger";
    bool ce_no_guard = false;
    ce->add_option("--sigma2", ce_sigma2, "packet covariance")->capture_default_str();
    ce->add_option("--model", ce_model, "schroedinger|dirac")
        ->check(CLI::IsMember({"schroedinger", "dirac"}))
        ->capture_default_str();
    ce->add_option("--mass", ce_mass)->capture_default_str();
    ce->add_option("--k0", ce_k0, "central frequency")->capture_default_str();
    ce->add_option("--tmax", ce_tmax)->capture_default_str();
    ce->add_option("--steps", ce_steps)->capture_default_str();
    ce->add_option("--points", ce_points)->capture_default_str();
    ce->add_option("--extent", ce_extent)->capture_default_str();
    ce->add_flag("--no-guard", ce_no_guard);

    auto* ts = app.add_subcommand("two-state", "exact two-level transition and entropy trace");
    ts->add_option("--output", output, "output path (\'-\' for stdout)");
    TwoLevelSystem ts_sys;
    double ts_tmax = 0.0, ts_extent = 40.0;
    int ts_steps = 64, ts_points = 512, ts_l1 = 0, ts_l2 = 1;
    bool ts_no_guard = false;
    ts->add_option("--omega1", ts_sys.omega1)->capture_default_str();
    ts->add_option("--omega2", ts_sys.omega2)->capture_default_str();
    ts->add_option("--w11i", ts_sys.w11i)->capture_default_str();
    ts->add_option("--w22i", ts_sys.w22i)->capture_default_str();
    ts->add_option("--w12i", ts_sys.w12i)->capture_default_str();
    ts->add_option("--tmax", ts_tmax, "0 means one full density period")->capture_default_str();
    ts->add_option("--steps", ts_steps)->capture_default_str();
    ts->add_option("--points", ts_points)->capture_default_str();
    ts->add_option("--extent", ts_extent)->capture_default_str();
    ts->add_option("--level1", ts_l1, "oscillator index of the first basis state")
        ->capture_default_str();
    ts->add_option("--level2", ts_l2, "oscillator index of the second basis state")
        ->capture_default_str();
    ts->add_flag("--no-guard", ts_no_guard);

    auto* ns = app.add_subcommand("n-state", "N-level transition probabilities");
    ns->add_option("--output", output, "output path (\'-\' for stdout)");
    std::string ns_h0, ns_hi;
    double ns_tmax = 10.0;
    int ns_steps = 100;
    ns->add_option("--h0", ns_h0, "diagonal of H0 as JSON array (inline or file)")->required();
    ns->add_option("--hi", ns_hi, "interaction matrix as JSON (inline or file)")->required();
    ns->add_option("--tmax", ns_tmax)->capture_default_str();
    ns->add_option("--steps", ns_steps)->capture_default_str();

    auto* co = app.add_subcommand("collide", "two-packet collision entropy trace");
    co->add_option("--output", output, "output path (\'-\' for stdout)");
    double co_p1 = 1.0, co_hm = 1.0, co_sigma2 = 25.0, co_c = 150.0, co_tmax = 0.0;
    int co_grid = 1000, co_steps = 56;
    std::string co_stats = "fermion";
    bool co_no_guard = false;
    co->add_option("--p1", co_p1, "packet momentum")->capture_default_str();
    co->add_option("--hbar-over-m", co_hm)->capture_default_str();
    co->add_option("--sigma2", co_sigma2)->capture_default_str();
    co->add_option("--c", co_c, "packets start at -c and +c")->capture_default_str();
    co->add_option("--grid", co_grid, "points per axis")->capture_default_str();
    co->add_option("--stats", co_stats, "fermion|boson")
        ->check(CLI::IsMember({"fermion", "boson"}))
        ->capture_default_str();
    co->add_option("--tmax", co_tmax, "0 means 1.25x the meeting time")->capture_default_str();
    co->add_option("--steps", co_steps)->capture_default_str();
    co->add_flag("--no-guard", co_no_guard);

    auto* hy = app.add_subcommand("hydrogen", "Lyman-alpha entropy budget report");
    hy->add_option("--output", output, "output path (\'-\' for stdout)");
    std::string hy_variant = "standard";
    int hy_radial = 160, hy_angular = 96, hy_phi = 64;
    bool hy_no_guard = false;
    hy->add_option("--variant", hy_variant, "standard|alt")
        ->check(CLI::IsMember({"standard", "alt"}))
        ->capture_default_str();
    hy->add_option("--radial-nodes", hy_radial)->capture_default_str();
    hy->add_option("--angular-nodes", hy_angular)->capture_default_str();
    hy->add_option("--phi-nodes", hy_phi)->capture_default_str();
    hy->add_flag("--no-guard", hy_no_guard, "skip the doubled-resolution check");

    auto* cl = app.add_subcommand("classify", "label an entropy series CSV as C/D/I/O");
    cl->add_option("--output", output, "output path (\'-\' for stdout)");
    std::string cl_input;
    double cl_eps = -1.0;
    cl->add_option("--input", cl_input, "CSV with t and s_total columns")->required();
    cl->add_option("--epsilon", cl_eps, "tolerance band (default: relative)");

    auto* vs = app.add_subcommand("verify-symmetries",
                                  "gamma algebra and CPT entropy-invariance checks");
    vs->add_option("--output", output, "output path (\'-\' for stdout)");
    int vs_fields = 100, vs_points = 256;
    std::uint64_t vs_seed = 1;
    vs->add_option("--fields", vs_fields, "number of random spinor fields")->capture_default_str();
    vs->add_option("--points", vs_points)->capture_default_str();
    vs->add_option("--seed", vs_seed)->capture_default_str();

    std::string config_path;
    for (auto* sub : {mb, en, ce, ts, ns, co, hy, cl, vs})
        sub->add_option("--config", config_path,
                        "JSON file of flag defaults; explicit flags override");

    try {
        std::vector<std::string> args = apply_config(argc, argv);
        std::reverse(args.begin(), args.end());  // CLI11 vector parse wants reversed args
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }

    try {
        if (mb->parsed()) return cmd_min_bound(mb_dim, output);
        if (en->parsed()) return cmd_entropy(en_input, en_meta, output, !en_no_guard);
        if (ce->parsed())
            return cmd_coherent_evolve(ce_sigma2, ce_model, ce_mass, ce_k0, ce_tmax, ce_steps,
                                       ce_points, ce_extent, output, !ce_no_guard);
        if (ts->parsed()) {
            double tmax = ts_tmax;
            if (tmax <= 0.0) {
                const auto [l1, l2] = eigenvalues(ts_sys);
                tmax = l1 == l2 ? 10.0 : 2.0 * std::numbers::pi / std::abs(l2 - l1);
            }
            return cmd_two_state(ts_sys, tmax, ts_steps, ts_points, ts_extent, ts_l1, ts_l2,
                                 output, !ts_no_guard);
        }
        if (ns->parsed()) return cmd_n_state(ns_h0, ns_hi, ns_tmax, ns_steps, output);
        if (co->parsed())
            return cmd_collide(co_p1, co_hm, co_sigma2, co_c, co_grid, co_stats, co_tmax, co_steps,
                               output, !co_no_guard);
        if (hy->parsed())
            return cmd_hydrogen(hy_variant, hy_radial, hy_angular, hy_phi, output, !hy_no_guard);
        if (cl->parsed())
            return cmd_classify(
                cl_input, cl_eps >= 0.0 ? std::optional<double>(cl_eps) : std::nullopt, output);
        if (vs->parsed()) return cmd_verify_symmetries(vs_fields, vs_points, vs_seed, output);
    } catch (const GuardError& e) {
        json j;
        j["schema_version"] = "1";
        j["error"] = "numerical-guard";
        j["detail"] = e.what();
        std::cerr << j.dump(2) << "\n";
        return kExitGuard;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitValidation;
}
