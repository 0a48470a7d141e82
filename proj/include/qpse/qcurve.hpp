#pragma once

#include <optional>
#include <string>
#include <vector>

namespace qpse {

// Entropy trace S(t) of an evolution, the substrate for the
// constant/decreasing/increasing/oscillating partition.
struct EntropySeries {
    std::vector<double> times;   // strictly increasing
    std::vector<double> values;  // same length, finite
    std::string meta;            // which generator produced it
};

enum class QCurveLabel { C, D, I, O };

struct QCurveClass {
    QCurveLabel label = QCurveLabel::C;
    double epsilon = 0.0;
    std::vector<int> extrema;  // indices where the epsilon-significant direction flips
};

// Relative tolerance band 1e-4 * (max - min), floored at 1e-12.
double default_epsilon(const EntropySeries& s);

// C if max-min <= eps; I if every forward difference >= -eps and max-min > eps;
// D symmetric; O otherwise. Series must have at least 3 samples.
QCurveClass classify(const EntropySeries& s, double eps);
QCurveClass classify(const EntropySeries& s);  // with default_epsilon

// Values reversed over the same time stamps; an involution.
EntropySeries reflect(const EntropySeries& s);

// C->C, D->I, I->D, O->O.
QCurveLabel class_of_reflection(QCurveLabel label);

// For an O series, the time at which the maximal eps-increasing prefix ends
// (entry into the first decreasing stretch). Empty for non-O series.
std::optional<double> detect_critical_time(const EntropySeries& s, double eps);

const char* to_string(QCurveLabel label);

}  // namespace qpse
