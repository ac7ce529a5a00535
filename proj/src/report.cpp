#include "fraclog/report.hpp"

#include <cmath>

namespace fraclog {

GapReport GapReport::from_samples(double alpha, double k, std::optional<double> u0, std::vector<GapSample> samples) {
    GapReport r{alpha, k, u0, std::move(samples), 0.0, 0.0};
    if (!r.samples.empty()) r.argmax_t = r.samples.front().t;
    for (const auto& s : r.samples) {
        if (std::abs(s.gap) > r.sup_gap) {
            r.sup_gap = std::abs(s.gap);
            r.argmax_t = s.t;
        }
    }
    return r;
}

}  // namespace fraclog
