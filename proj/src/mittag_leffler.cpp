#include "fraclog/mittag_leffler.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "fraclog/double_double.hpp"
#include "fraclog/errors.hpp"
#include "fraclog/gamma.hpp"

namespace fraclog {
namespace {

// Neumaier's variant of Kahan summation.
class CompensatedSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

// |z|^k / Gamma(alpha k + beta)
double series_term_magnitude(const MLParams& p, double abs_z, double log_abs_z, std::size_t k) {
    const double kd = static_cast<double>(k);
    const double x = p.alpha * kd + p.beta;
    if (x < 170.0) {
        const double pw = std::pow(abs_z, kd);
        if (std::isfinite(pw) && pw > 1e-290) return pw * recip_gamma(x);
    }
    return std::exp(kd * log_abs_z - log_gamma(x));
}

// The truncated tail gets a small share of the budget so rounding, not truncation, dominates.
constexpr double kTailShare = 1e-4;

// Tail of a series whose term ratios never increase (log-concave magnitudes):
// once the ratio r = |t_k / t_{k-1}| drops below 1 the rest sums to at most |t_k| r / (1 - r).
double log_concave_tail(double mag, double prev_mag) {
    if (mag == 0.0) return 0.0;
    const double r = mag / prev_mag;
    if (!(r < 1.0)) return std::numeric_limits<double>::infinity();
    return mag * r / (1.0 - r);
}

bool closed_form_available(const MLParams& p, double z) {
    if (p.alpha == 1.0) return p.beta == 1.0 || p.beta == 2.0;
    if (p.alpha == 2.0) return p.beta == 1.0 || p.beta == 2.0 || (p.beta == 3.0 && std::abs(z) >= 1.0);
    return false;
}

double closed_form(const MLParams& p, double z) {
    if (p.alpha == 1.0) {
        if (p.beta == 1.0) return std::exp(z);
        return std::expm1(z) / z;
    }
    const double r = std::sqrt(std::abs(z));
    if (p.beta == 1.0) return z >= 0.0 ? std::cosh(r) : std::cos(r);
    if (p.beta == 2.0) return z >= 0.0 ? std::sinh(r) / r : std::sin(r) / r;
    return z >= 0.0 ? (std::cosh(r) - 1.0) / z : (1.0 - std::cos(r)) / (-z);
}

void check_overflow(const MLParams& p, double z) {
    if (z > 0.0 && z > std::pow(700.0, p.alpha))
        throw OverflowError("ml_eval: z = " + std::to_string(z) + " exceeds 700^alpha");
}

}  // namespace

MLParams::MLParams(double alpha_, double beta_) : alpha(alpha_), beta(beta_) {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) throw DomainError("MLParams: alpha must be > 0");
    if (!(beta > 0.0) || !std::isfinite(beta)) throw DomainError("MLParams: beta must be > 0");
}

void EvalPolicy::validate() const {
    if (!(target_abs_error > 0.0 && target_abs_error < 1.0))
        throw DomainError("EvalPolicy: target_abs_error must lie in (0, 1)");
    if (max_terms < 1) throw DomainError("EvalPolicy: max_terms must be >= 1");
    if (!(series_cutoff > 0.0 && series_cutoff < asymptotic_cutoff))
        throw DomainError("EvalPolicy: need 0 < series_cutoff < asymptotic_cutoff");
}

double ml_series(MLParams params, double z, const EvalPolicy& policy) {
    policy.validate();
    if (z == 0.0) return recip_gamma(params.beta);

    const double abs_z = std::abs(z);
    const double log_abs_z = std::log(abs_z);
    CompensatedSum sum;
    double prev_mag = 0.0;
    double tail = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < policy.max_terms; ++k) {
        const double mag = series_term_magnitude(params, abs_z, log_abs_z, k);
        sum.add((z < 0.0 && (k & 1U)) ? -mag : mag);
        if (k > 0) {
            tail = log_concave_tail(mag, prev_mag);
            if (tail <= kTailShare * policy.target_abs_error * std::max(1.0, std::abs(sum.value()))) return sum.value();
        }
        prev_mag = mag;
    }
    throw AccuracyError("ml_series: max_terms exhausted before the tail bound was met", tail);
}

double ml_series_extended(MLParams params, double z, const EvalPolicy& policy) {
    policy.validate();
    if (z == 0.0) return recip_gamma(params.beta);

    using dd::DoubleDouble;
    const DoubleDouble log_abs_z = dd::log(DoubleDouble(std::abs(z)));
    DoubleDouble sum;
    double prev_mag = 0.0;
    double tail = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < policy.max_terms; ++k) {
        const double kd = static_cast<double>(k);
        const DoubleDouble arg = dd::two_prod(params.alpha, kd) + DoubleDouble(params.beta);
        const DoubleDouble term = dd::exp(log_abs_z * DoubleDouble(kd) - dd::log_gamma(arg));
        sum += (z < 0.0 && (k & 1U)) ? -term : term;
        const double mag = term.hi;
        if (k > 0) {
            tail = log_concave_tail(mag, prev_mag);
            if (tail <= kTailShare * policy.target_abs_error * std::max(1.0, std::abs(sum.hi))) return sum.to_double();
        }
        prev_mag = mag;
    }
    throw AccuracyError("ml_series_extended: max_terms exhausted before the tail bound was met", tail);
}

AsymptoticValue ml_asymptotic(MLParams params, double z, const EvalPolicy& policy) {
    policy.validate();
    if (!(z < 0.0)) throw DomainError("ml_asymptotic: requires z < 0");
    if (params.alpha > 2.0) throw DomainError("ml_asymptotic: requires alpha <= 2");

    const double abs_z = -z;
    const double log_abs_z = std::log(abs_z);
    const double alpha = params.alpha;
    const double beta = params.beta;

    // Majorant |z|^-k Gamma(1 - beta + alpha k) / pi >= |z^-k / Gamma(beta - alpha k)|,
    // valid once 1 - beta + alpha k > 0.
    auto majorant = [&](std::size_t k) {
        const double g_arg = 1.0 - beta + alpha * static_cast<double>(k);
        if (!(g_arg > 0.0)) return std::numeric_limits<double>::infinity();
        return std::exp(log_gamma(g_arg) - static_cast<double>(k) * log_abs_z) / std::numbers::pi;
    };
    // -z^-k / Gamma(beta - alpha k)
    auto term = [&](std::size_t k) {
        const double kd = static_cast<double>(k);
        const double x = beta - alpha * kd;
        const double sign_zk = (k & 1U) ? -1.0 : 1.0;  // sign of z^-k for z < 0
        if (x > 0.5 || 1.0 - x <= 170.0) {
            const double pw = std::pow(abs_z, -kd);
            if (pw > 1e-290 && std::isfinite(pw)) return -sign_zk * pw * recip_gamma(x);
        }
        // log form: |1/Gamma(x)| = Gamma(1 - x) |sin(pi x)| / pi
        const double s = sin_pi(x);
        if (s == 0.0) return 0.0;
        const double r = std::exp(log_gamma(1.0 - x) - kd * log_abs_z) / std::numbers::pi;
        return -sign_zk * std::copysign(r, s);
    };

    CompensatedSum sum;
    double error_estimate = std::numeric_limits<double>::infinity();
    double current = majorant(1);
    for (std::size_t k = 1; k <= policy.max_terms; ++k) {
        const double next = majorant(k + 1);
        if (std::isfinite(current) && next >= current) {
            // k is the smallest term: stop in front of it.
            error_estimate = current;
            break;
        }
        sum.add(term(k));
        if (std::isfinite(next) && next <= 1e-20 * std::max(std::abs(sum.value()), 1e-300)) {
            error_estimate = next;
            break;
        }
        error_estimate = next;
        current = next;
    }

    // Exponential contributions from the branches zeta = w e^{i theta}, |theta| <= pi.
    const double w = std::pow(abs_z, 1.0 / alpha);
    double exp_part = 0.0;
    if (alpha >= 1.0) {
        const double theta = std::numbers::pi / alpha;
        const double branch = std::pow(w, 1.0 - beta) * std::exp(w * std::cos(theta)) *
                              std::cos(theta * (1.0 - beta) + w * std::sin(theta)) / alpha;
        // alpha > 1 has the conjugate branch -theta as well, with equal real part.
        exp_part = alpha > 1.0 ? 2.0 * branch : branch;
    }

    const double value = sum.value() + exp_part;
    if (!(error_estimate <= policy.target_abs_error))
        throw AccuracyError("ml_asymptotic: requested accuracy unreachable at z = " + std::to_string(z),
                            error_estimate);
    return {value, error_estimate};
}

MLRegime ml_regime(MLParams params, double z, const EvalPolicy& policy) {
    if (z == 0.0 || closed_form_available(params, z)) return MLRegime::closed_form;
    if (z > 0.0) return MLRegime::series;
    const double w = std::pow(-z, 1.0 / params.alpha);
    if (w <= policy.series_cutoff) return MLRegime::series;
    if (w < policy.asymptotic_cutoff || params.alpha > 2.0) return MLRegime::extended_series;
    return MLRegime::asymptotic;
}

double ml_eval(MLParams params, double z, const EvalPolicy& policy) {
    policy.validate();
    if (!std::isfinite(z)) throw DomainError("ml_eval: z must be finite");
    check_overflow(params, z);
    switch (ml_regime(params, z, policy)) {
        case MLRegime::closed_form:
            return z == 0.0 ? recip_gamma(params.beta) : closed_form(params, z);
        case MLRegime::series:
            return ml_series(params, z, policy);
        case MLRegime::extended_series:
            return ml_series_extended(params, z, policy);
        case MLRegime::asymptotic:
            try {
                return ml_asymptotic(params, z, policy).value;
            } catch (const AccuracyError&) {
                // Near the cutoff the double-double series still has headroom.
                if (std::pow(-z, 1.0 / params.alpha) < 40.0) return ml_series_extended(params, z, policy);
                throw;
            }
    }
    return std::nan("");
}

double ml_deriv_factor(double alpha, double lam, double t) {
    if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("ml_deriv_factor: alpha must lie in (0, 1]");
    if (!(t >= 0.0)) throw DomainError("ml_deriv_factor: t must be >= 0");
    return ml_eval(MLParams{alpha, alpha}, lam * std::pow(t, alpha));
}

}  // namespace fraclog
