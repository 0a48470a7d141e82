#include "qpse/qcurve.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qpse {

namespace {

void validate(const EntropySeries& s) {
    if (s.times.size() != s.values.size())
        throw std::invalid_argument("EntropySeries: times/values length mismatch");
    if (s.times.size() < 3)
        throw std::invalid_argument("EntropySeries: need at least 3 samples");
    for (std::size_t i = 0; i + 1 < s.times.size(); ++i)
        if (!(s.times[i] < s.times[i + 1]))
            throw std::invalid_argument("EntropySeries: times must be strictly increasing");
    for (double v : s.values)
        if (!std::isfinite(v)) throw std::invalid_argument("EntropySeries: non-finite value");
}

}  // namespace

double default_epsilon(const EntropySeries& s) {
    // relative band, floored at the double-precision noise scale so that a
    // series varying only by round-off still reads as constant
    const auto [lo, hi] = std::minmax_element(s.values.begin(), s.values.end());
    return 1e-4 * (*hi - *lo) + 1e-12;
}

QCurveClass classify(const EntropySeries& s, double eps) {
    validate(s);
    QCurveClass out;
    out.epsilon = eps;

    const auto [lo, hi] = std::minmax_element(s.values.begin(), s.values.end());
    const double range = *hi - *lo;

    bool has_drop = false, has_rise = false;
    int direction = 0;  // sign of the last eps-significant move
    for (std::size_t i = 0; i + 1 < s.values.size(); ++i) {
        const double d = s.values[i + 1] - s.values[i];
        if (d < -eps) {
            has_drop = true;
            if (direction > 0) out.extrema.push_back(static_cast<int>(i));
            direction = -1;
        } else if (d > eps) {
            has_rise = true;
            if (direction < 0) out.extrema.push_back(static_cast<int>(i));
            direction = 1;
        }
    }

    if (range <= eps)
        out.label = QCurveLabel::C;
    else if (!has_drop)
        out.label = QCurveLabel::I;
    else if (!has_rise)
        out.label = QCurveLabel::D;
    else
        out.label = QCurveLabel::O;
    return out;
}

QCurveClass classify(const EntropySeries& s) { return classify(s, default_epsilon(s)); }

EntropySeries reflect(const EntropySeries& s) {
    EntropySeries out = s;
    std::reverse(out.values.begin(), out.values.end());
    out.meta = s.meta.empty() ? "reflected" : s.meta + " (reflected)";
    return out;
}

QCurveLabel class_of_reflection(QCurveLabel label) {
    switch (label) {
        case QCurveLabel::C: return QCurveLabel::C;
        case QCurveLabel::D: return QCurveLabel::I;
        case QCurveLabel::I: return QCurveLabel::D;
        case QCurveLabel::O: return QCurveLabel::O;
    }
    return QCurveLabel::C;
}

std::optional<double> detect_critical_time(const EntropySeries& s, double eps) {
    if (classify(s, eps).label != QCurveLabel::O) return std::nullopt;
    // walk the maximal eps-increasing prefix; t_c is where it ends
    std::size_t end = s.values.size() - 1;
    for (std::size_t i = 0; i + 1 < s.values.size(); ++i) {
        if (s.values[i + 1] - s.values[i] < -eps) {
            end = i;
            break;
        }
    }
    return s.times[end];
}

const char* to_string(QCurveLabel label) {
    switch (label) {
        case QCurveLabel::C: return "C";
        case QCurveLabel::D: return "D";
        case QCurveLabel::I: return "I";
        case QCurveLabel::O: return "O";
    }
    return "?";
}

}  // namespace qpse
