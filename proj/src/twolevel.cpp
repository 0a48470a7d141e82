#include "qpse/twolevel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "qpse/entropy.hpp"

namespace qpse {

namespace {

double discriminant(const TwoLevelSystem& sys) {
    return std::hypot(sys.omega11() - sys.omega22(), 2.0 * sys.w12i);
}

}  // namespace

MixingAngle mixing_angle(const TwoLevelSystem& sys) {
    MixingAngle out;
    if (discriminant(sys) == 0.0) {
        out.degenerate = true;  // direction undefined, pick theta = 0
        return out;
    }
    out.theta = 0.5 * std::atan2(2.0 * sys.w12i, sys.omega11() - sys.omega22());
    if (out.theta <= -0.5 * std::numbers::pi) out.theta += std::numbers::pi;
    return out;
}

std::pair<double, double> eigenvalues(const TwoLevelSystem& sys) {
    const double mid = 0.5 * (sys.omega11() + sys.omega22());
    const double half = 0.5 * discriminant(sys);
    return {mid + half, mid - half};
}

std::pair<cdouble, cdouble> coefficients(const TwoLevelSystem& sys, double t) {
    return superposition_coefficients(sys, t, 1.0, 0.0);
}

std::pair<cdouble, cdouble> superposition_coefficients(const TwoLevelSystem& sys, double t,
                                                       cdouble a1_0, cdouble a2_0) {
    const double n2 = std::norm(a1_0) + std::norm(a2_0);
    if (std::abs(n2 - 1.0) > 1e-9)
        throw std::invalid_argument("superposition_coefficients: input not normalized");
    const auto [l1, l2] = eigenvalues(sys);
    const double theta = mixing_angle(sys).theta;
    const double c2 = std::cos(theta) * std::cos(theta);
    const double s2 = std::sin(theta) * std::sin(theta);
    const double s2t = std::sin(2.0 * theta);
    const cdouble e1 = std::polar(1.0, -l1 * t);
    const cdouble e2 = std::polar(1.0, -l2 * t);
    const cdouble diag1 = c2 * e1 + s2 * e2;
    const cdouble diag2 = s2 * e1 + c2 * e2;
    const cdouble off = 0.5 * s2t * (e1 - e2);
    return {a1_0 * diag1 + a2_0 * off, a1_0 * off + a2_0 * diag2};
}

double fermi_approximation(const TwoLevelSystem& sys, double t) {
    const double dw = sys.omega1 - sys.omega2;
    if (dw == 0.0)
        throw std::invalid_argument("fermi_approximation: resonant: approximation invalid");
    const double amp = 4.0 * sys.w12i * sys.w12i / (dw * dw);
    const double s = std::sin(0.5 * (sys.omega2 - sys.omega1) * t);
    return amp * s * s;
}

double n_level_transition(const Eigen::VectorXd& h0_diag, const Eigen::MatrixXd& hi, int j,
                          double t) {
    const auto n = h0_diag.size();
    if (hi.rows() != n || hi.cols() != n)
        throw std::invalid_argument("n_level_transition: dimension mismatch");
    if (!hi.isApprox(hi.transpose(), 1e-12))
        throw std::invalid_argument("n_level_transition: interaction matrix must be symmetric");
    if (j < 1 || j > n) throw std::invalid_argument("n_level_transition: level index out of range");

    Eigen::MatrixXd h = hi;
    h.diagonal() += h0_diag;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("n_level_transition: eigensolver failed");
    const Eigen::VectorXd lambda = es.eigenvalues();
    Eigen::MatrixXd v = es.eigenvectors();  // columns are eigenvectors
    // deterministic sign: first nonzero component positive
    for (Eigen::Index c = 0; c < n; ++c) {
        for (Eigen::Index r = 0; r < n; ++r) {
            if (std::abs(v(r, c)) > 1e-14) {
                if (v(r, c) < 0.0) v.col(c) *= -1.0;
                break;
            }
        }
    }

    // |alpha_j|^2 = sum_i [ v_ij^2 v_i1^2
    //                       + 2 sum_{k>i} v_ij v_i1 v_kj v_k1 cos((l_i - l_k) t) ]
    const int jj = j - 1;
    double p = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        const double a = v(jj, i) * v(0, i);
        p += a * a;
        for (Eigen::Index k = i + 1; k < n; ++k) {
            const double b = v(jj, k) * v(0, k);
            p += 2.0 * a * b * std::cos((lambda(i) - lambda(k)) * t);
        }
    }
    return p;
}

OscillationBasis harmonic_oscillator_basis(const GridSpec& grid, int n1, int n2) {
    if (grid.dim != 1)
        throw std::invalid_argument("harmonic_oscillator_basis: 1D grid required");
    if (n1 == n2) throw std::invalid_argument("harmonic_oscillator_basis: need distinct levels");

    auto hermite_state = [&](int n) {
        SampledAmplitude a;
        a.grid = grid;
        a.representation = Representation::position;
        a.values.resize(grid.node_count());
        for (int i = 0; i < grid.points_per_axis; ++i) {
            const double x = grid.coordinate(i);
            // physicists' Hermite polynomials by recurrence
            double h0 = 1.0, h1 = 2.0 * x;
            double h = n == 0 ? h0 : h1;
            for (int m = 2; m <= n; ++m) {
                const double hm = 2.0 * x * h1 - 2.0 * (m - 1) * h0;
                h0 = h1;
                h1 = hm;
                h = hm;
            }
            a.values[i] = h * std::exp(-0.5 * x * x);
        }
        return normalize(a);
    };

    OscillationBasis basis;
    basis.psi1 = hermite_state(n1);
    basis.psi2 = hermite_state(n2);
    basis.phi1 = fourier_transform(basis.psi1);
    basis.phi2 = fourier_transform(basis.psi2);
    return basis;
}

namespace {

void check_orthonormal(const OscillationBasis& basis) {
    const auto& g = basis.psi1.grid;
    if (basis.psi2.grid != g) throw std::invalid_argument("oscillation basis: grid mismatch");
    cdouble dot = 0.0;
    for (std::size_t i = 0; i < basis.psi1.values.size(); ++i)
        dot += std::conj(basis.psi1.values[i]) * basis.psi2.values[i];
    dot *= g.cell_volume(Representation::position);
    const double n1 = basis.psi1.norm2(), n2 = basis.psi2.norm2();
    if (std::abs(dot) > 1e-8 || std::abs(n1 - 1.0) > 1e-8 || std::abs(n2 - 1.0) > 1e-8)
        throw std::invalid_argument("non-orthonormal basis");
}

struct ExpansionTerms {
    std::vector<double> c1, c2, c3;
    double c3_max = 0.0;
};

// rho(t) = c1 + c2 sin^2(dl t / 2) + c3 sin(dl t) for a pair (f1, f2):
//   c1 = |f1|^2
//   c2 = sin^2(2th) (|f2|^2 - |f1|^2) + 2 sin(2th) cos(2th) Re(f1 conj(f2))
//   c3 = sin(2th) Im(f1 conj(f2))
ExpansionTerms expansion_terms(const std::vector<cdouble>& f1, const std::vector<cdouble>& f2,
                               double theta) {
    const double s = std::sin(2.0 * theta);
    const double c = std::cos(2.0 * theta);
    ExpansionTerms out;
    const std::size_t n = f1.size();
    out.c1.resize(n);
    out.c2.resize(n);
    out.c3.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double r1 = std::norm(f1[i]);
        const double r2 = std::norm(f2[i]);
        const cdouble cross = f1[i] * std::conj(f2[i]);
        out.c1[i] = r1;
        out.c2[i] = s * s * (r2 - r1) + 2.0 * s * c * cross.real();
        out.c3[i] = s * cross.imag();
        out.c3_max = std::max(out.c3_max, std::abs(out.c3[i]));
    }
    return out;
}

}  // namespace

OscillationCoefficients oscillation_density_coefficients(const OscillationBasis& basis,
                                                         const TwoLevelSystem& sys) {
    check_orthonormal(basis);
    const double theta = mixing_angle(sys).theta;
    auto a = expansion_terms(basis.psi1.values, basis.psi2.values, theta);
    auto b = expansion_terms(basis.phi1.values, basis.phi2.values, theta);
    OscillationCoefficients out;
    out.a1 = std::move(a.c1);
    out.a2 = std::move(a.c2);
    out.a3 = std::move(a.c3);
    out.b1 = std::move(b.c1);
    out.b2 = std::move(b.c2);
    out.b3 = std::move(b.c3);
    out.a3_max = a.c3_max;
    out.b3_max = b.c3_max;
    return out;
}

std::pair<Density, Density> oscillation_densities(const OscillationBasis& basis,
                                                  const TwoLevelSystem& sys, double t) {
    check_orthonormal(basis);
    const auto [l1, l2] = eigenvalues(sys);
    const auto [a1, a2] = coefficients(sys, t);
    const auto coef = oscillation_density_coefficients(basis, sys);

    const double dl = l2 - l1;
    const double s2 = std::pow(std::sin(0.5 * dl * t), 2);
    const double s1 = std::sin(dl * t);

    auto build = [&](const SampledAmplitude& f1, const SampledAmplitude& f2,
                     const std::vector<double>& c1, const std::vector<double>& c2,
                     const std::vector<double>& c3) {
        Density d;
        d.grid = f1.grid;
        d.representation = f1.representation;
        const std::size_t n = f1.values.size();
        d.values.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double expansion = c1[i] + c2[i] * s2 + c3[i] * s1;
            const double direct = std::norm(a1 * f1.values[i] + a2 * f2.values[i]);
            if (std::abs(expansion - direct) > 1e-10)
                throw std::runtime_error(
                    "oscillation_densities: expansion/direct route disagreement");
            d.values[i] = direct < 0.0 ? 0.0 : direct;
        }
        return d;
    };

    return {build(basis.psi1, basis.psi2, coef.a1, coef.a2, coef.a3),
            build(basis.phi1, basis.phi2, coef.b1, coef.b2, coef.b3)};
}

bool half_period_recurrence(const OscillationBasis& basis, const TwoLevelSystem& sys,
                            double tol) {
    const auto [l1, l2] = eigenvalues(sys);
    if (l1 == l2) return true;  // constant densities
    const double half = std::numbers::pi / std::abs(l2 - l1);
    for (int i = 0; i < 8; ++i) {
        const double t = 2.0 * half * i / 8.0;
        const auto [r0, k0] = oscillation_densities(basis, sys, t);
        const auto [r1, k1] = oscillation_densities(basis, sys, t + half);
        const double s0 = total_entropy(r0, k0).total;
        const double s1 = total_entropy(r1, k1).total;
        if (std::abs(s0 - s1) > tol) return false;
    }
    return true;
}

EntropySeries oscillation_entropy_series(const OscillationBasis& basis,
                                         const TwoLevelSystem& sys,
                                         const std::vector<double>& t_grid) {
    EntropySeries series;
    series.meta = "two-level oscillation";
    series.times.reserve(t_grid.size());
    series.values.reserve(t_grid.size());
    for (double t : t_grid) {
        const auto [rho_r, rho_k] = oscillation_densities(basis, sys, t);
        series.times.push_back(t);
        series.values.push_back(total_entropy(rho_r, rho_k).total);
    }
    return series;
}

}  // namespace qpse
