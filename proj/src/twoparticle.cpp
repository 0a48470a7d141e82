#include "qpse/twoparticle.hpp"

#include <cmath>
#include <iostream>
#include <stdexcept>

namespace qpse {

namespace {

void validate(const CollisionSetup& setup) {
    if (setup.grid.dim != 1) throw std::invalid_argument("collision: 1D grid required");
    if (!(setup.sigma2 > 0.0)) throw std::invalid_argument("collision: sigma2 must be positive");
    if (!(setup.hbar_over_m > 0.0))
        throw std::invalid_argument("collision: hbar_over_m must be positive");
}

}  // namespace

SampledAmplitude single_packet(const CollisionSetup& setup, int which, double t) {
    validate(setup);
    if (which != 1 && which != 2) throw std::invalid_argument("single_packet: which must be 1 or 2");
    const DispersionModel model = setup.model();
    const double p = which == 1 ? setup.p1 : -setup.p1;
    const double c0 = which == 1 ? setup.c1 : setup.c2;
    const double vg = group_velocity1d(model, p);
    const double h = hessian1d(model, p);
    const double w0 = omega1d(model, p);
    const double center = c0 + vg * t;

    const double half_l = 0.5 * setup.grid.extent_per_axis;
    // density variance (sigma^4 + t^2 H^2) / (2 sigma^2)
    const double widened = std::hypot(setup.sigma2, t * h);
    const double sigma_t = widened / std::sqrt(2.0 * setup.sigma2);
    if (std::abs(center) + 6.0 * sigma_t > half_l)
        std::cerr << "warning: packet leaving grid (center " << center << ")\n";

    const cdouble width(setup.sigma2, t * h);           // sigma^2 + i t H
    const cdouble spread = 1.0 / std::sqrt(width);      // principal branch
    const cdouble phase0 = std::polar(1.0, -w0 * t);    // e^{-i w(p) t}

    SampledAmplitude a;
    a.grid = setup.grid;
    a.representation = Representation::position;
    a.time = t;
    a.values.resize(setup.grid.node_count());
    for (int i = 0; i < setup.grid.points_per_axis; ++i) {
        const double x = setup.grid.coordinate(i);
        const double d = x - center;
        const cdouble gauss = std::exp(-d * d / (2.0 * width));
        a.values[i] = spread * phase0 * gauss * std::polar(1.0, p * x);
    }
    return normalize(a);
}

namespace {

// rho(i,j) = a_i b_j + a_j b_i -/+ 2 Re(w_i conj(w_j)) with w = f1 conj(f2),
// renormalized on the product grid.
std::pair<Density, double> assemble_joint(const SampledAmplitude& f1, const SampledAmplitude& f2,
                                          ExchangeStatistics stats) {
    const GridSpec& g1 = f1.grid;
    const int n = g1.points_per_axis;
    const double sign = stats == ExchangeStatistics::fermion ? -1.0 : 1.0;

    std::vector<double> a(n), b(n);
    std::vector<cdouble> w(n);
    for (int i = 0; i < n; ++i) {
        a[i] = std::norm(f1.values[i]);
        b[i] = std::norm(f2.values[i]);
        w[i] = f1.values[i] * std::conj(f2.values[i]);
    }

    Density d;
    d.grid = GridSpec(2, n, g1.extent_per_axis);
    d.representation = f1.representation;
    d.values.resize(d.grid.node_count());
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        double row_sum = 0.0;
        for (int j = 0; j < n; ++j) {
            const cdouble cross = w[i] * std::conj(w[j]);
            double v = a[i] * b[j] + a[j] * b[i] + sign * 2.0 * cross.real();
            if (v < 0.0) v = 0.0;  // interference round-off at the fermion diagonal
            d.values[static_cast<std::size_t>(i) * n + j] = v;
            row_sum += v;
        }
        sum += row_sum;
    }
    const double c_t = sum * d.grid.cell_volume(d.representation);
    if (!(c_t > 1e-12))
        throw std::invalid_argument("joint_density: degenerate two-particle state (zero norm)");
    const double inv = 1.0 / c_t;
    for (auto& v : d.values) v *= inv;
    return {std::move(d), c_t};
}

}  // namespace

JointDensities joint_density(const CollisionSetup& setup, double t) {
    const SampledAmplitude psi1 = single_packet(setup, 1, t);
    const SampledAmplitude psi2 = single_packet(setup, 2, t);
    const SampledAmplitude phi1 = fourier_transform(psi1);
    const SampledAmplitude phi2 = fourier_transform(psi2);

    JointDensities out;
    auto [dr, cr] = assemble_joint(psi1, psi2, setup.statistics);
    auto [dk, ck] = assemble_joint(phi1, phi2, setup.statistics);
    out.position = std::move(dr);
    out.frequency = std::move(dk);
    out.c_position = cr;
    out.c_frequency = ck;
    return out;
}

EntropySeries collision_entropy_series(const CollisionSetup& setup,
                                       const std::vector<double>& t_grid) {
    if (std::abs(setup.c2 - setup.c1) < 10.0 * std::sqrt(setup.sigma2))
        std::cerr << "warning: packets closer than 10 sigma at t=0; the separated-packet "
                     "regime assumptions do not hold\n";
    EntropySeries series;
    series.meta = "two-particle collision";
    for (double t : t_grid) {
        const JointDensities jd = joint_density(setup, t);
        series.times.push_back(t);
        series.values.push_back(two_particle_entropy(jd.position, jd.frequency).total);
    }
    return series;
}

EntropySeries single_packet_entropy_series(const CollisionSetup& setup, int which,
                                           const std::vector<double>& t_grid) {
    EntropySeries series;
    series.meta = "single collision packet";
    for (double t : t_grid) {
        const SampledAmplitude psi = single_packet(setup, which, t);
        const SampledAmplitude phi = fourier_transform(psi);
        series.times.push_back(t);
        series.values.push_back(total_entropy(born_density(psi), born_density(phi)).total);
    }
    return series;
}

QCurveClass classify_collision(const CollisionSetup& setup, const std::vector<double>& t_grid) {
    const EntropySeries series = collision_entropy_series(setup, t_grid);
    return classify(series);
}

QCurveClass classify_collision(const CollisionSetup& setup) {
    const double vg = group_velocity1d(setup.model(), setup.p1);
    const double t_meet = 0.5 * std::abs(setup.c2 - setup.c1) / std::max(vg, 1e-12);
    std::vector<double> ts;
    for (int i = 0; i <= 56; ++i) ts.push_back(1.25 * t_meet * i / 56.0);
    return classify_collision(setup, ts);
}

double packet_overlap(const CollisionSetup& setup, double t) {
    // L-inf of psi1 conj(psi2), the amplitude of the exchange interference;
    // the plain inner product would be suppressed by the +-p1 phases even
    // when the packets sit on top of each other
    const SampledAmplitude psi1 = single_packet(setup, 1, t);
    const SampledAmplitude psi2 = single_packet(setup, 2, t);
    double linf = 0.0;
    for (std::size_t i = 0; i < psi1.values.size(); ++i)
        linf = std::max(linf, std::abs(psi1.values[i] * std::conj(psi2.values[i])));
    return linf;
}

}  // namespace qpse
