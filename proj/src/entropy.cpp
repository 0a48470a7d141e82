#include "qpse/entropy.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qpse {

namespace {
constexpr double kNegativeClamp = -1e-12;
}

double differential_entropy(const Density& d) {
    double s = 0.0;
    for (double rho : d.values) {
        if (rho < kNegativeClamp)
            throw std::invalid_argument("differential_entropy: invalid density");
        if (rho <= 0.0) continue;  // clamp window and 0 ln 0 = 0
        s -= rho * std::log(rho);
    }
    return s * d.grid.cell_volume(d.representation);
}

EntropyValue total_entropy(const Density& position, const Density& frequency) {
    if (position.grid.dim != frequency.grid.dim)
        throw std::invalid_argument("total_entropy: dimension mismatch");
    EntropyValue e;
    e.s_r = differential_entropy(position);
    e.s_k = differential_entropy(frequency);
    e.total = e.s_r + e.s_k;
    return e;
}

EntropyValue two_particle_entropy(const Density& rho_r12, const Density& rho_k12) {
    return total_entropy(rho_r12, rho_k12);
}

double min_entropy_bound(int dim) {
    if (dim < 1) throw std::invalid_argument("min_entropy_bound: dim must be >= 1");
    return dim * (1.0 + std::log(std::numbers::pi));
}

}  // namespace qpse
