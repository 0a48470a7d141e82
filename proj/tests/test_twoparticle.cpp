#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qpse/twoparticle.hpp"
#include "test_helpers.hpp"

using namespace qpse;
using namespace qpse::test;

namespace {

// Brute-force oracle: assemble |psi1(x1) psi2(x2) -/+ psi1(x2) psi2(x1)|^2 / C
// directly from the squared two-particle amplitude (no expanded terms), then
// integrate -rho ln rho. Used at the production grid and at a refined one.
double oracle_joint_entropy(const SampledAmplitude& f1, const SampledAmplitude& f2,
                            ExchangeStatistics stats) {
    const int n = f1.grid.points_per_axis;
    const double sign = stats == ExchangeStatistics::fermion ? -1.0 : 1.0;
    const double cell = f1.grid.cell_volume(f1.representation);
    std::vector<double> rho(static_cast<std::size_t>(n) * n);
    double z = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const cdouble amp =
                f1.values[i] * f2.values[j] + sign * f1.values[j] * f2.values[i];
            const double v = std::norm(amp);
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
}

double single_total_entropy(const SampledAmplitude& psi) {
    return total_entropy(born_density(psi), born_density(fourier_transform(psi))).total;
}

}  // namespace

TEST_CASE("single packet") {
    CollisionSetup setup;  // defaults: c = +-150, p1 = 1, sigma2 = 25, grid 1000 x [−400,400)
    SUBCASE("t=0 is a coherent packet at c1 with momentum +p1") {
        auto psi = single_packet(setup, 1, 0.0);
        auto rho = born_density(psi);
        double mean = 0.0;
        for (int i = 0; i < setup.grid.points_per_axis; ++i)
            mean += setup.grid.coordinate(i) * rho.values[i];
        mean *= setup.grid.spacing();
        CHECK(mean == doctest::Approx(-150.0).epsilon(1e-9));

        auto phi = born_density(fourier_transform(psi));
        double kmean = 0.0;
        for (int i = 0; i < setup.grid.points_per_axis; ++i)
            kmean += setup.grid.frequency(i) * phi.values[i];
        kmean *= setup.grid.frequency_spacing();
        CHECK(kmean == doctest::Approx(1.0).epsilon(1e-9));
    }
    SUBCASE("center follows c1 + vg t") {
        const double vg = group_velocity1d(setup.model(), setup.p1);
        for (double t : {40.0, 120.0}) {
            auto rho = born_density(single_packet(setup, 1, t));
            double mean = 0.0;
            for (int i = 0; i < setup.grid.points_per_axis; ++i)
                mean += setup.grid.coordinate(i) * rho.values[i];
            mean *= setup.grid.spacing();
            CHECK(std::abs(mean - (setup.c1 + vg * t)) < 1e-3);
        }
    }
    SUBCASE("momentum density is stationary") {
        auto p0 = born_density(fourier_transform(single_packet(setup, 2, 0.0)));
        auto p1 = born_density(fourier_transform(single_packet(setup, 2, 150.0)));
        CHECK(max_abs_diff(p0.values, p1.values) < 1e-9);
    }
    SUBCASE("agrees with the dispersion transform of the t=0 packet") {
        auto psi0 = single_packet(setup, 1, 0.0);
        Eigen::VectorXd k0(1);
        k0 << setup.p1;
        for (double t : {25.0, 90.0}) {
            auto via_transform = evolve_dispersion_transform(psi0, setup.model(), t, k0);
            auto analytic = single_packet(setup, 1, t);
            CHECK(max_abs_diff(via_transform.values, analytic.values) < 1e-9);
        }
    }
}

TEST_CASE("joint density structure") {
    CollisionSetup setup;
    SUBCASE("interference is negligible for separated packets") {
        auto psi1 = single_packet(setup, 1, 0.0);
        auto psi2 = single_packet(setup, 2, 0.0);
        double linf = 0.0;
        for (std::size_t i = 0; i < psi1.values.size(); ++i)
            linf = std::max(linf, std::abs(psi1.values[i] * std::conj(psi2.values[i])));
        CHECK(linf < 1e-10);
    }
    SUBCASE("fermion density vanishes on the diagonal") {
        auto jd = joint_density(setup, 150.0);
        const int n = setup.grid.points_per_axis;
        double worst = 0.0;
        for (int i = 0; i < n; ++i)
            worst = std::max(worst, jd.position.values[static_cast<std::size_t>(i) * n + i]);
        CHECK(worst < 1e-10);
    }
    SUBCASE("exchange symmetry is exact") {
        auto jd = joint_density(setup, 100.0);
        const int n = setup.grid.points_per_axis;
        double worst = 0.0;
        for (int i = 0; i < n; i += 7)
            for (int j = 0; j < n; j += 11)
                worst = std::max(worst,
                                 std::abs(jd.position.values[static_cast<std::size_t>(i) * n + j] -
                                          jd.position.values[static_cast<std::size_t>(j) * n + i]));
        CHECK(worst == 0.0);
    }
    SUBCASE("normalized at every t") {
        for (double t : {0.0, 100.0, 212.0}) {
            auto jd = joint_density(setup, t);
            CHECK(std::abs(jd.position.integral() - 1.0) < 1e-8);
            CHECK(std::abs(jd.frequency.integral() - 1.0) < 1e-8);
        }
    }
    SUBCASE("identical fermion packets are rejected") {
        CollisionSetup degenerate = setup;
        degenerate.p1 = 0.0;
        degenerate.c2 = degenerate.c1;
        CHECK_THROWS_AS(joint_density(degenerate, 0.0), std::invalid_argument);
    }
}

TEST_CASE("far-apart packets: entropy is additive plus exchange ln 2") {
    CollisionSetup setup;
    for (auto stats : {ExchangeStatistics::fermion, ExchangeStatistics::boson}) {
        setup.statistics = stats;
        auto jd = joint_density(setup, 0.0);
        const double joint = two_particle_entropy(jd.position, jd.frequency).total;

        auto psi1 = single_packet(setup, 1, 0.0);
        auto psi2 = single_packet(setup, 2, 0.0);
        const double singles = single_total_entropy(psi1) + single_total_entropy(psi2);
        CHECK(std::abs(joint - (singles + 2.0 * std::log(2.0))) < 1e-2);

        // brute-force squared-amplitude oracle on the same and a refined grid
        const double oracle_x = oracle_joint_entropy(psi1, psi2, stats);
        auto phi1 = fourier_transform(psi1);
        auto phi2 = fourier_transform(psi2);
        const double oracle_k = oracle_joint_entropy(phi1, phi2, stats);
        CHECK(std::abs(joint - (oracle_x + oracle_k)) < 1e-9);

        CollisionSetup fine = setup;
        fine.grid = GridSpec(1, 2000, setup.grid.extent_per_axis);
        auto f1 = single_packet(fine, 1, 0.0);
        auto f2 = single_packet(fine, 2, 0.0);
        const double oracle_fine = oracle_joint_entropy(f1, f2, stats) +
                                   oracle_joint_entropy(fourier_transform(f1),
                                                        fourier_transform(f2), stats);
        CHECK(std::abs(joint - oracle_fine) < 1e-3);
    }
}

TEST_CASE("identical boson packets form a product state") {
    // symmetrization of identical factors: joint entropy is twice the single
    CollisionSetup setup;
    setup.statistics = ExchangeStatistics::boson;
    setup.p1 = 0.0;
    setup.c2 = setup.c1 = 0.0;
    setup.sigma2 = 25.0;
    auto jd = joint_density(setup, 0.0);
    const double joint = two_particle_entropy(jd.position, jd.frequency).total;
    const double single = single_total_entropy(single_packet(setup, 1, 0.0));
    CHECK(std::abs(joint - 2.0 * single) < 1e-6);
}

TEST_CASE("normalization constant is 2 for orthogonal packets") {
    // far-separated packets are orthogonal, where C_t = 2 exactly
    CollisionSetup setup;
    auto jd = joint_density(setup, 0.0);
    CHECK(jd.c_position == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(jd.c_frequency == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("bosons and fermions differ only once the packets overlap") {
    CollisionSetup fermi;
    CollisionSetup bose;
    bose.statistics = ExchangeStatistics::boson;

    SUBCASE("far apart: identical joint densities") {
        auto jf = joint_density(fermi, 0.0);
        auto jb = joint_density(bose, 0.0);
        CHECK(max_abs_diff(jf.position.values, jb.position.values) < 1e-12);
        CHECK(std::abs(two_particle_entropy(jf.position, jf.frequency).total -
                       two_particle_entropy(jb.position, jb.frequency).total) < 1e-9);
    }
    SUBCASE("overlapping: densities split where the interference is live") {
        const double t_meet = 150.0 / group_velocity1d(fermi.model(), fermi.p1);
        CHECK(packet_overlap(fermi, t_meet) > 1e-6);
        auto jf = joint_density(fermi, t_meet);
        auto jb = joint_density(bose, t_meet);
        CHECK(max_abs_diff(jf.position.values, jb.position.values) > 1e-6);
    }
}

TEST_CASE("swapping packet labels leaves the series unchanged") {
    CollisionSetup setup;
    CollisionSetup swapped = setup;
    std::swap(swapped.c1, swapped.c2);
    swapped.p1 = -swapped.p1;  // packet 1 now starts right moving left
    const std::vector<double> ts{0.0, 80.0, 160.0, 240.0};
    auto a = collision_entropy_series(setup, ts);
    auto b = collision_entropy_series(swapped, ts);
    for (std::size_t i = 0; i < ts.size(); ++i)
        CHECK(a.values[i] == doctest::Approx(b.values[i]).epsilon(1e-10));
}

TEST_CASE("collision classification on a reduced setup") {
    // scaled-down run so the unit suite stays fast; acceptance covers the
    // full Fig-2 parameter sets
    CollisionSetup setup;
    setup.c1 = -60.0;
    setup.c2 = 60.0;
    setup.p1 = 1.0;
    setup.sigma2 = 9.0;
    setup.grid = GridSpec(1, 500, 400.0);

    const double vg = group_velocity1d(setup.model(), setup.p1);
    const double t_meet = 60.0 / vg;
    std::vector<double> ts;
    for (int i = 0; i <= 40; ++i) ts.push_back(1.3 * t_meet * i / 40.0);

    auto cls = classify_collision(setup, ts);
    CHECK(cls.label == QCurveLabel::O);

    auto series = collision_entropy_series(setup, ts);
    auto tc = detect_critical_time(series, default_epsilon(series));
    REQUIRE(tc.has_value());
    CHECK(*tc < t_meet);

    SUBCASE("a packet alone is increasing") {
        auto alone = single_packet_entropy_series(setup, 1, ts);
        CHECK(classify(alone).label == QCurveLabel::I);
    }
}
