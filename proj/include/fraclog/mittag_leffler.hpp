#pragma once

// Real-axis evaluation of the two-parameter Mittag-Leffler function
//   E_{a,b}(z) = sum_k z^k / Gamma(a k + b).
//
// On the negative axis the power series cancels catastrophically: its largest
// term is about exp(|z|^(1/a)). The dispatcher therefore works in the scaled
// magnitude w = |z|^(1/a) and picks one of three representations:
//
//   w <= series_cutoff              plain double series (compensated sum)
//   series_cutoff < w < asym_cutoff series summed in double-double
//   w >= asym_cutoff                optimally truncated asymptotic expansion
//
// Positive z always uses the series (terms share a sign).

#include <cstddef>

namespace fraclog {

/// (alpha, beta) pair. Both must be positive; construction throws DomainError otherwise.
struct MLParams {
    double alpha;
    double beta;

    MLParams(double alpha_, double beta_ = 1.0);  // NOLINT(google-explicit-constructor)
};

struct EvalPolicy {
    double target_abs_error = 1e-12;
    std::size_t max_terms = 10'000;
    /// Upper bound of |z|^(1/alpha) for the plain double series.
    double series_cutoff = 3.0;
    /// Lower bound of |z|^(1/alpha) for the asymptotic expansion.
    double asymptotic_cutoff = 30.0;

    /// Throws DomainError if the invariants do not hold.
    void validate() const;
};

enum class MLRegime { closed_form, series, extended_series, asymptotic };

struct AsymptoticValue {
    double value;
    /// Magnitude bound of the first omitted term.
    double error_estimate;
};

/// Truncated power series with Neumaier summation. Throws AccuracyError if
/// max_terms is reached before the tail bound drops below target_abs_error
/// (relative to max(1, |sum|)).
double ml_series(MLParams params, double z, const EvalPolicy& policy = {});

/// Same series with every term and the accumulation carried in double-double.
double ml_series_extended(MLParams params, double z, const EvalPolicy& policy = {});

/// Asymptotic expansion for z < 0, 0 < alpha <= 2:
///   E(z) ~ -sum_{k>=1} z^-k / Gamma(beta - alpha k) + (1/alpha) sum_m zeta_m^(1-beta) exp(zeta_m)
/// where zeta_m are the branches of z^(1/alpha) with |arg| <= pi (present only for alpha >= 1).
/// Throws AccuracyError when the optimal truncation error exceeds target_abs_error.
AsymptoticValue ml_asymptotic(MLParams params, double z, const EvalPolicy& policy = {});

/// Representation ml_eval picks for (params, z).
MLRegime ml_regime(MLParams params, double z, const EvalPolicy& policy = {});

/// Dispatching evaluator. Throws OverflowError for z > 700^alpha.
double ml_eval(MLParams params, double z, const EvalPolicy& policy = {});

/// One-parameter E_alpha(z).
inline double ml_eval(double alpha, double z) { return ml_eval(MLParams{alpha, 1.0}, z); }

/// E_{alpha,alpha}(lam t^alpha), the factor in d/dt E_alpha(lam t^alpha) = lam t^(alpha-1) E_{alpha,alpha}(lam t^alpha).
double ml_deriv_factor(double alpha, double lam, double t);

}  // namespace fraclog
