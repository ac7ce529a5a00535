#include "fraclog/grid.hpp"

#include <cmath>
#include <string>

#include "fraclog/errors.hpp"

namespace fraclog {

UniformGrid::UniformGrid(double t0, double h, std::size_t n_steps) : t0_(t0), h_(h), n_steps_(n_steps) {
    if (!std::isfinite(t0)) throw DomainError("UniformGrid: t0 must be finite");
    if (!(h > 0.0) || !std::isfinite(h)) throw DomainError("UniformGrid: step h must be > 0");
    if (n_steps < 1) throw DomainError("UniformGrid: n_steps must be >= 1");
}

UniformGrid UniformGrid::over(double t_max, std::size_t steps) {
    if (!(t_max > 0.0)) throw DomainError("UniformGrid: t_max must be > 0");
    if (steps < 1) throw DomainError("UniformGrid: steps must be >= 1");
    return {0.0, t_max / static_cast<double>(steps), steps};
}

GridFunction::GridFunction(UniformGrid grid, std::vector<double> values) : grid_(grid), values_(std::move(values)) {
    if (values_.size() != grid_.size())
        throw ArgumentError("GridFunction: " + std::to_string(values_.size()) + " values for a grid of " +
                            std::to_string(grid_.size()) + " points");
    for (double v : values_)
        if (!std::isfinite(v)) throw NumericalFailure("GridFunction: non-finite sample");
}

}  // namespace fraclog
