#include "qpse/grid.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace qpse {

GridSpec::GridSpec(int dim_, int points, double extent)
    : dim(dim_), points_per_axis(points), extent_per_axis(extent) {
    if (dim < 1 || dim > 3)
        throw std::invalid_argument("GridSpec: dim must be 1, 2 or 3");
    if (points_per_axis < 8)
        throw std::invalid_argument("GridSpec: points_per_axis must be >= 8");
    if (!(extent_per_axis > 0.0))
        throw std::invalid_argument("GridSpec: extent must be positive");
}

double GridSpec::frequency_spacing() const {
    return 2.0 * std::numbers::pi / extent_per_axis;
}

std::size_t GridSpec::node_count() const {
    std::size_t n = 1;
    for (int d = 0; d < dim; ++d) n *= static_cast<std::size_t>(points_per_axis);
    return n;
}

double GridSpec::cell_volume(Representation rep) const {
    const double step = rep == Representation::position ? spacing() : frequency_spacing();
    return std::pow(step, dim);
}

GridSpec GridSpec::dual() const { return *this; }

double SampledAmplitude::norm2() const {
    double s = 0.0;
    for (const auto& v : values) s += std::norm(v);
    return s * grid.cell_volume(representation);
}

double Density::integral() const {
    double s = 0.0;
    for (double v : values) s += v;
    return s * grid.cell_volume(representation);
}

namespace {

// Circular per-axis index shift: out[i] = in[(i + offset) mod N] along every
// axis. offset = N/2 moves the centered zero node to index 0 (pre-FFT) and
// offset = N - N/2 moves it back (post-FFT).
void roll_axes(const std::vector<cdouble>& in, std::vector<cdouble>& out, int dim, int n,
               int offset) {
    const auto N = static_cast<std::size_t>(n);
    if (dim == 1) {
        for (std::size_t i = 0; i < N; ++i) out[i] = in[(i + offset) % N];
    } else if (dim == 2) {
        for (std::size_t i = 0; i < N; ++i) {
            const std::size_t si = ((i + offset) % N) * N;
            for (std::size_t j = 0; j < N; ++j) out[i * N + j] = in[si + (j + offset) % N];
        }
    } else {
        for (std::size_t i = 0; i < N; ++i) {
            const std::size_t si = ((i + offset) % N) * N * N;
            for (std::size_t j = 0; j < N; ++j) {
                const std::size_t sj = si + ((j + offset) % N) * N;
                for (std::size_t k = 0; k < N; ++k)
                    out[(i * N + j) * N + k] = in[sj + (k + offset) % N];
            }
        }
    }
}

std::mutex g_fftw_plan_mutex;  // fftw planning is not thread safe

void run_fft(std::vector<cdouble>& data, int dim, int n, int sign) {
    auto* buf = reinterpret_cast<fftw_complex*>(data.data());
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(g_fftw_plan_mutex);
        switch (dim) {
            case 1: plan = fftw_plan_dft_1d(n, buf, buf, sign, FFTW_ESTIMATE); break;
            case 2: plan = fftw_plan_dft_2d(n, n, buf, buf, sign, FFTW_ESTIMATE); break;
            default: plan = fftw_plan_dft_3d(n, n, n, buf, buf, sign, FFTW_ESTIMATE); break;
        }
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(g_fftw_plan_mutex);
        fftw_destroy_plan(plan);
    }
}

}  // namespace

SampledAmplitude fourier_transform(const SampledAmplitude& a) {
    const int n = a.grid.points_per_axis;
    const int dim = a.grid.dim;
    if (a.values.size() != a.grid.node_count())
        throw std::invalid_argument("fourier_transform: value count does not match grid");
    for (const auto& v : a.values)
        if (std::isnan(v.real()) || std::isnan(v.imag()))
            throw std::invalid_argument("fourier_transform: NaN in input");

    const bool forward = a.representation == Representation::position;
    const int center = n / 2;

    std::vector<cdouble> work(a.values.size());
    roll_axes(a.values, work, dim, n, center);
    run_fft(work, dim, n, forward ? FFTW_FORWARD : FFTW_BACKWARD);
    SampledAmplitude out;
    out.grid = a.grid;
    out.time = a.time;
    out.representation = forward ? Representation::frequency : Representation::position;
    out.values.resize(work.size());
    roll_axes(work, out.values, dim, n, n - center);

    const double step = forward ? a.grid.spacing() : a.grid.frequency_spacing();
    const double scale = std::pow(step / std::sqrt(2.0 * std::numbers::pi), dim);
    for (auto& v : out.values) v *= scale;
    return out;
}

Density born_density(const SampledAmplitude& a) {
    Density d;
    d.grid = a.grid;
    d.representation = a.representation;
    d.values.resize(a.values.size());
    for (std::size_t i = 0; i < a.values.size(); ++i) d.values[i] = std::norm(a.values[i]);
    return d;
}

SampledAmplitude normalize(const SampledAmplitude& a) {
    const double n2 = a.norm2();
    if (!(n2 > 0.0)) throw std::invalid_argument("normalize: degenerate amplitude");
    SampledAmplitude out = a;
    const double s = 1.0 / std::sqrt(n2);
    for (auto& v : out.values) v *= s;
    return out;
}

}  // namespace qpse
