#pragma once

// Fractional logistic equation  D^alpha u = k^alpha u (1 - u),  u(0) = u0,
// with D the Caputo derivative. Provides the classical alpha = 1 closed form,
// the candidate series  u(t) = sum_n c^n E_alpha(-n k^alpha t^alpha),
// c = (u0 - 1)/u0, its term-wise Caputo derivative and residual, and a
// predictor-corrector reference solver.

#include <cstddef>
#include <optional>
#include <vector>

#include "fraclog/grid.hpp"
#include "fraclog/report.hpp"

namespace fraclog {

struct LogisticProblem {
    double alpha;
    double k;
    double u0;

    /// Throws DomainError unless alpha in (0, 1], k > 0, u0 in [0, 1].
    LogisticProblem(double alpha_, double k_, double u0_);

    double rate() const;  ///< k^alpha
    double rhs(double u) const { return rate() * u * (1.0 - u); }
    /// c = (u0 - 1)/u0; DomainError at u0 = 0.
    double ratio() const;
};

struct WestSeriesConfig {
    std::optional<std::size_t> truncation_n;  ///< sum n = 0..N; empty picks N from tail_tol
    double tail_tol = 1e-12;

    void validate() const;
};

/// u0 / (u0 + (1 - u0) e^{-k t})
double closed_form_logistic(double k, double u0, double t);

/// Upper summation index used by west_series / west_series_caputo.
/// DivergenceError when u0 <= 1/2, DomainError when u0 = 0.
std::size_t west_truncation(const LogisticProblem& p, const WestSeriesConfig& cfg = {});

double west_series(const LogisticProblem& p, double t, const WestSeriesConfig& cfg = {});

/// -k^alpha sum_n n c^n E_alpha(-n k^alpha t^alpha)
double west_series_caputo(const LogisticProblem& p, double t, const WestSeriesConfig& cfg = {});

struct ResidualSample {
    double t;
    double u;
    double lhs;  ///< term-wise Caputo derivative of the series
    double rhs;  ///< k^alpha u (1 - u)
    double residual;
};

struct ResidualReport {
    LogisticProblem problem;
    std::vector<ResidualSample> samples;
    double sup_residual = 0.0;
    double argmax_t = 0.0;
};

ResidualReport west_residual(const LogisticProblem& p, const UniformGrid& grid, const WestSeriesConfig& cfg = {});

/// caputo_l1 applied to sampled series values (lhs) against the term-wise
/// derivative (rhs). Agreement is only O(h^{2-alpha}) away from t = 0.
GapReport west_caputo_l1_check(const LogisticProblem& p, const UniformGrid& grid, const WestSeriesConfig& cfg = {});

/// Fractional Adams-Bashforth-Moulton PECE, one corrector sweep. The initial
/// condition sits at grid.t(0). History sums are split into fixed blocks that
/// are reduced in order, so the result does not depend on the thread count.
GridFunction fabm_solve(const LogisticProblem& p, const UniformGrid& grid);

/// lhs = series, rhs = fabm_solve, gap = lhs - rhs.
GapReport compare_west_vs_reference(const LogisticProblem& p, const UniformGrid& grid,
                                    const WestSeriesConfig& cfg = {});

namespace serial {
ResidualReport west_residual(const LogisticProblem& p, const UniformGrid& grid, const WestSeriesConfig& cfg = {});
GridFunction fabm_solve(const LogisticProblem& p, const UniformGrid& grid);
}  // namespace serial

}  // namespace fraclog
