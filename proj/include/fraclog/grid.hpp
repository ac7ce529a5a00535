#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace fraclog {

/// t_i = t0 + i h, i = 0..n_steps.
class UniformGrid {
public:
    UniformGrid(double t0, double h, std::size_t n_steps);

    /// [0, t_max] split into `steps` intervals.
    static UniformGrid over(double t_max, std::size_t steps);

    double t0() const noexcept { return t0_; }
    double h() const noexcept { return h_; }
    std::size_t n_steps() const noexcept { return n_steps_; }
    std::size_t size() const noexcept { return n_steps_ + 1; }
    double t(std::size_t i) const noexcept { return t0_ + static_cast<double>(i) * h_; }
    double t_max() const noexcept { return t(n_steps_); }

    bool operator==(const UniformGrid&) const = default;

private:
    double t0_;
    double h_;
    std::size_t n_steps_;
};

/// Samples on a UniformGrid; length always equals grid.size() and all values are finite.
class GridFunction {
public:
    GridFunction(UniformGrid grid, std::vector<double> values);

    template <typename F>
    static GridFunction sample(const UniformGrid& grid, F&& f) {
        std::vector<double> v(grid.size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = f(grid.t(i));
        return {grid, std::move(v)};
    }

    const UniformGrid& grid() const noexcept { return grid_; }
    std::span<const double> values() const noexcept { return values_; }
    double operator[](std::size_t i) const noexcept { return values_[i]; }
    std::size_t size() const noexcept { return values_.size(); }

private:
    UniformGrid grid_;
    std::vector<double> values_;
};

}  // namespace fraclog
