#pragma once

// Caputo derivative of order 0 < alpha < 1: exact power rule and the L1
// finite-difference scheme on uniform grids.

#include <optional>

#include "fraclog/grid.hpp"

namespace fraclog {

/// D^alpha t^b = t^(b - alpha) Gamma(b + 1) / Gamma(b + 1 - alpha), for b > -1, b != 0.
/// alpha = 1 is accepted as the integer-order limit.
double caputo_power_rule(double b, double alpha, double t);

/// L1 weights w_j = (j + 1)^(1 - alpha) - j^(1 - alpha), j = 0..n-1.
std::vector<double> l1_weights(double alpha, std::size_t n);

/// (D^alpha f)(t_i) for every grid point; the value at t_0 is defined as 0.
/// Output points are independent and computed in parallel.
GridFunction caputo_l1(const GridFunction& f, double alpha);

/// max |L1(E_alpha(lam t^alpha)) - lam E_alpha(lam t^alpha)| over grid points t >= t_cut
/// (default t_cut = t0 + 10 h). The first points carry the start-up error of the
/// unbounded derivative and are excluded.
///
/// Note: with the default cut the sup is attained at node 10, whose error does not
/// shrink with h for alpha <= 1/2. Pass a fixed t_cut to study convergence.
double eigenfunction_residual(double alpha, double lam, const UniformGrid& grid,
                              std::optional<double> t_cut = std::nullopt);

namespace serial {

/// Single-threaded reference for caputo_l1; identical summation order.
GridFunction caputo_l1(const GridFunction& f, double alpha);

}  // namespace serial

}  // namespace fraclog
