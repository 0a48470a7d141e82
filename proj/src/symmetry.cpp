#include "qpse/symmetry.hpp"

#include <cmath>
#include <stdexcept>

namespace qpse {

namespace {

GammaSet build_standard() {
    using namespace std::complex_literals;
    GammaSet g;
    g.gamma0.setZero();
    g.gamma0.diagonal() << 1, 1, -1, -1;

    // block structure [[0, sigma_i], [-sigma_i, 0]]
    Eigen::Matrix2cd s1, s2, s3;
    s1 << 0, 1, 1, 0;
    s2 << 0, -1i, 1i, 0;
    s3 << 1, 0, 0, -1;
    auto offdiag = [](const Eigen::Matrix2cd& s) {
        Matrix4cd m;
        m.setZero();
        m.block<2, 2>(0, 2) = s;
        m.block<2, 2>(2, 0) = -s;
        return m;
    };
    g.gamma1 = offdiag(s1);
    g.gamma2 = offdiag(s2);
    g.gamma3 = offdiag(s3);
    g.gamma5 = 1i * g.gamma0 * g.gamma1 * g.gamma2 * g.gamma3;
    g.C = 1i * g.gamma2 * g.gamma0;
    g.T = 1i * g.gamma1 * g.gamma3;
    g.P = g.gamma0;
    return g;
}

// mirrored node index under r -> -r, torus convention on the centered grid
std::size_t mirror_index(const GridSpec& grid, std::size_t idx) {
    const int n = grid.points_per_axis;
    const int c = n / 2;
    auto mirror_axis = [&](int i) { return ((2 * c - i) % n + n) % n; };
    if (grid.dim == 1) return static_cast<std::size_t>(mirror_axis(static_cast<int>(idx)));
    if (grid.dim == 2) {
        const int i = static_cast<int>(idx) / n;
        const int j = static_cast<int>(idx) % n;
        return static_cast<std::size_t>(mirror_axis(i)) * n + mirror_axis(j);
    }
    const int i = static_cast<int>(idx / (static_cast<std::size_t>(n) * n));
    const int j = static_cast<int>(idx / n) % n;
    const int k = static_cast<int>(idx) % n;
    return (static_cast<std::size_t>(mirror_axis(i)) * n + mirror_axis(j)) * n + mirror_axis(k);
}

// out(r) = M * op(in)(source(r)) applied across the grid
template <typename SourceIndex, typename ComponentOp>
SpinorField spinor_map(const SpinorField& f, const Matrix4cd& m, SourceIndex source,
                       ComponentOp op) {
    SpinorField out;
    out.grid = f.grid;
    out.time = f.time;
    const std::size_t n = f.grid.node_count();
    for (auto& c : out.components) c.resize(n);
    for (std::size_t idx = 0; idx < n; ++idx) {
        const std::size_t src = source(idx);
        Eigen::Vector4cd v;
        for (int c = 0; c < 4; ++c) v(c) = op(f.components[c][src]);
        const Eigen::Vector4cd w = m * v;
        for (int c = 0; c < 4; ++c) out.components[c][idx] = w(c);
    }
    return out;
}

SampledAmplitude component_amplitude(const SpinorField& f, int c) {
    SampledAmplitude a;
    a.grid = f.grid;
    a.representation = Representation::position;
    a.time = f.time;
    a.values = f.components[c];
    return a;
}

}  // namespace

const GammaSet& GammaSet::standard() {
    static const GammaSet g = build_standard();
    return g;
}

double SpinorField::norm2() const {
    double s = 0.0;
    for (const auto& comp : components)
        for (const auto& v : comp) s += std::norm(v);
    return s * grid.cell_volume(Representation::position);
}

SpinorField normalize(const SpinorField& f) {
    const double n2 = f.norm2();
    if (!(n2 > 0.0)) throw std::invalid_argument("normalize: degenerate spinor field");
    SpinorField out = f;
    const double s = 1.0 / std::sqrt(n2);
    for (auto& comp : out.components)
        for (auto& v : comp) v *= s;
    return out;
}

Density spinor_position_density(const SpinorField& f) {
    Density d;
    d.grid = f.grid;
    d.representation = Representation::position;
    d.values.assign(f.grid.node_count(), 0.0);
    for (const auto& comp : f.components)
        for (std::size_t i = 0; i < comp.size(); ++i) d.values[i] += std::norm(comp[i]);
    return d;
}

Density spinor_frequency_density(const SpinorField& f) {
    Density d;
    d.grid = f.grid;
    d.representation = Representation::frequency;
    d.values.assign(f.grid.node_count(), 0.0);
    for (int c = 0; c < 4; ++c) {
        const SampledAmplitude phi = fourier_transform(component_amplitude(f, c));
        for (std::size_t i = 0; i < phi.values.size(); ++i) d.values[i] += std::norm(phi.values[i]);
    }
    return d;
}

EntropyValue spinor_entropy(const SpinorField& f) {
    return total_entropy(spinor_position_density(f), spinor_frequency_density(f));
}

SpinorField apply_parity(const SpinorField& f) {
    const auto& g = GammaSet::standard();
    return spinor_map(
        f, g.P, [&](std::size_t idx) { return mirror_index(f.grid, idx); },
        [](cdouble v) { return v; });
}

SpinorField apply_charge_conjugation(const SpinorField& f) {
    using namespace std::complex_literals;
    const auto& g = GammaSet::standard();
    // C conj(Psi-bar)^T = i gamma2 gamma0 gamma0 conj(Psi) = i gamma2 conj(Psi)
    const Matrix4cd m = 1i * g.gamma2;
    return spinor_map(
        f, m, [](std::size_t idx) { return idx; }, [](cdouble v) { return std::conj(v); });
}

SpinorField apply_time_reversal(const SpinorField& f) {
    const auto& g = GammaSet::standard();
    SpinorField out = spinor_map(
        f, g.T, [](std::size_t idx) { return idx; }, [](cdouble v) { return std::conj(v); });
    out.time = -f.time;
    return out;
}

SpinorField apply_cpt(const SpinorField& f) {
    const auto& g = GammaSet::standard();
    SpinorField out = spinor_map(
        f, g.gamma5, [&](std::size_t idx) { return mirror_index(f.grid, idx); },
        [](cdouble v) { return std::conj(v); });
    out.time = -f.time;
    return out;
}

}  // namespace qpse
