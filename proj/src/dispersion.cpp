#include "qpse/dispersion.hpp"

#include <cmath>
#include <iostream>
#include <numbers>
#include <stdexcept>

#include <Eigen/Cholesky>

namespace qpse {

double omega(const DispersionModel& model, const Eigen::VectorXd& k) {
    const double k2 = k.squaredNorm();
    if (model.kind == DispersionKind::schroedinger) return k2 / (2.0 * model.mass);
    return model.sign() * std::sqrt(k2 + model.mass * model.mass);
}

Eigen::VectorXd group_velocity(const DispersionModel& model, const Eigen::VectorXd& k) {
    if (model.kind == DispersionKind::schroedinger) return k / model.mass;
    const double w = std::sqrt(k.squaredNorm() + model.mass * model.mass);
    return model.sign() * k / w;
}

Eigen::MatrixXd hessian(const DispersionModel& model, const Eigen::VectorXd& k) {
    const auto n = k.size();
    if (model.kind == DispersionKind::schroedinger)
        return Eigen::MatrixXd::Identity(n, n) / model.mass;
    const double w2 = k.squaredNorm() + model.mass * model.mass;
    const double w = std::sqrt(w2);
    Eigen::MatrixXd h = Eigen::MatrixXd::Identity(n, n) / w - k * k.transpose() / (w2 * w);
    return model.sign() * h;
}

Eigen::Vector3d hessian_eigenvalues(const DispersionModel& model, const Eigen::Vector3d& k) {
    if (model.kind != DispersionKind::dirac)
        throw std::invalid_argument("hessian_eigenvalues: dirac model required");
    const double m = model.mass;
    const double mu2 = k.squaredNorm();
    const double w2 = m * m + mu2;
    const double s = model.sign();
    return {s * m * m / (w2 * std::sqrt(w2)), s / std::sqrt(w2), s / std::sqrt(w2)};
}

double omega1d(const DispersionModel& model, double k) {
    Eigen::VectorXd v(1);
    v << k;
    return omega(model, v);
}

double group_velocity1d(const DispersionModel& model, double k) {
    Eigen::VectorXd v(1);
    v << k;
    return group_velocity(model, v)(0);
}

double hessian1d(const DispersionModel& model, double k) {
    Eigen::VectorXd v(1);
    v << k;
    return hessian(model, v)(0, 0);
}

CoherentState CoherentState::isotropic(int dim, double sigma2_scalar, double k0, double r0) {
    CoherentState cs;
    cs.center_r = Eigen::VectorXd::Constant(dim, r0);
    cs.center_k = Eigen::VectorXd::Constant(dim, k0);
    cs.sigma2 = Eigen::MatrixXd::Identity(dim, dim) * sigma2_scalar;
    return cs;
}

namespace {

// iterate grid nodes of a dim-cube, yielding the coordinate vector
template <typename F>
void for_each_node(const GridSpec& grid, Representation rep, F&& f) {
    const int n = grid.points_per_axis;
    const int dim = grid.dim;
    Eigen::VectorXd v(dim);
    auto coord = [&](int i) {
        return rep == Representation::position ? grid.coordinate(i) : grid.frequency(i);
    };
    if (dim == 1) {
        for (int i = 0; i < n; ++i) {
            v(0) = coord(i);
            f(static_cast<std::size_t>(i), v);
        }
    } else if (dim == 2) {
        std::size_t idx = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                v(0) = coord(i);
                v(1) = coord(j);
                f(idx++, v);
            }
    } else {
        std::size_t idx = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    v(0) = coord(i);
                    v(1) = coord(j);
                    v(2) = coord(k);
                    f(idx++, v);
                }
    }
}

}  // namespace

SampledAmplitude make_coherent(const GridSpec& grid, const CoherentState& cs) {
    if (cs.dim() != grid.dim)
        throw std::invalid_argument("make_coherent: state/grid dimension mismatch");
    Eigen::LLT<Eigen::MatrixXd> llt(cs.sigma2);
    if (llt.info() != Eigen::Success)
        throw std::invalid_argument("make_coherent: sigma2 must be positive definite");

    for (int d = 0; d < grid.dim; ++d) {
        const double sigma = std::sqrt(cs.sigma2(d, d));
        if (std::abs(cs.center_r(d)) + 6.0 * sigma > 0.5 * grid.extent_per_axis)
            std::cerr << "warning: packet truncation (coherent packet within 6 sigma of the "
                         "grid boundary)\n";
    }

    const Eigen::MatrixXd prec = cs.sigma2.inverse();
    SampledAmplitude a;
    a.grid = grid;
    a.representation = Representation::position;
    a.values.resize(grid.node_count());
    for_each_node(grid, Representation::position, [&](std::size_t idx, const Eigen::VectorXd& r) {
        const Eigen::VectorXd d = r - cs.center_r;
        const double quad = 0.5 * d.dot(prec * d);
        const double phase = cs.center_k.dot(r);
        a.values[idx] = std::exp(-quad) * cdouble(std::cos(phase), std::sin(phase));
    });
    return normalize(a);
}

SampledAmplitude evolve_exact(const SampledAmplitude& a, const DispersionModel& model,
                              double t) {
    const bool from_position = a.representation == Representation::position;
    SampledAmplitude freq = from_position ? fourier_transform(a) : a;
    for_each_node(freq.grid, Representation::frequency,
                  [&](std::size_t idx, const Eigen::VectorXd& k) {
                      const double w = omega(model, k);
                      freq.values[idx] *= cdouble(std::cos(w * t), -std::sin(w * t));
                  });
    freq.time = a.time + t;
    if (!from_position) return freq;
    SampledAmplitude out = fourier_transform(freq);
    out.time = a.time + t;
    return out;
}

SampledAmplitude evolve_dispersion_transform(const SampledAmplitude& a,
                                             const DispersionModel& model, double t,
                                             const Eigen::VectorXd& k0) {
    const bool from_position = a.representation == Representation::position;
    SampledAmplitude freq = from_position ? fourier_transform(a) : a;
    const double w0 = omega(model, k0);
    const Eigen::VectorXd vg = group_velocity(model, k0);
    const Eigen::MatrixXd h = hessian(model, k0);
    for_each_node(freq.grid, Representation::frequency,
                  [&](std::size_t idx, const Eigen::VectorXd& k) {
                      const Eigen::VectorXd dk = k - k0;
                      const double w = w0 + vg.dot(dk) + 0.5 * dk.dot(h * dk);
                      freq.values[idx] *= cdouble(std::cos(w * t), -std::sin(w * t));
                  });
    freq.time = a.time + t;
    if (!from_position) return normalize(freq);
    SampledAmplitude out = fourier_transform(freq);
    out.time = a.time + t;
    return normalize(out);
}

double coherent_entropy_closed_form(const CoherentState& cs, const DispersionModel& model,
                                    double t) {
    Eigen::LLT<Eigen::MatrixXd> llt(cs.sigma2);
    if (llt.info() != Eigen::Success)
        throw std::invalid_argument("coherent_entropy_closed_form: sigma2 not positive definite");
    const int dim = cs.dim();
    const Eigen::MatrixXd h = hessian(model, cs.center_k);
    const Eigen::MatrixXd m = cs.sigma2.inverse() * h;
    const Eigen::MatrixXd arg =
        Eigen::MatrixXd::Identity(dim, dim) + t * t * (m * m);
    return dim * (1.0 + std::log(std::numbers::pi)) + 0.5 * std::log(arg.determinant());
}

}  // namespace qpse
