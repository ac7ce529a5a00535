#pragma once

#include <optional>
#include <vector>

namespace fraclog {

struct GapSample {
    double t;
    double lhs;
    double rhs;
    double gap;
};

/// Tabulated lhs/rhs of an identity (or of two solutions) over t, with the sup-norm of the gap.
struct GapReport {
    double alpha = 0.0;
    double k = 0.0;
    std::optional<double> u0;
    std::vector<GapSample> samples;  // sorted by t
    double sup_gap = 0.0;
    double argmax_t = 0.0;

    /// Fills sup_gap/argmax_t from samples; ties keep the earliest t.
    static GapReport from_samples(double alpha, double k, std::optional<double> u0, std::vector<GapSample> samples);
};

}  // namespace fraclog
