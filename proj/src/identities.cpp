#include "fraclog/identities.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fraclog/errors.hpp"
#include "fraclog/gamma.hpp"
#include "fraclog/mittag_leffler.hpp"

namespace fraclog {
namespace {

// Gamma(n alpha + 1) overflows near n alpha ~ 170; switch to log-Gamma early.
constexpr std::size_t kDirectGammaLimit = 30;

void check_gap_args(double alpha, double k, double t, const char* who) {
    if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError(std::string(who) + ": alpha must lie in (0, 1]");
    if (!(k > 0.0)) throw DomainError(std::string(who) + ": k must be > 0");
    if (!(t >= 0.0)) throw DomainError(std::string(who) + ": t must be >= 0");
}

double scaled_time(double alpha, double k, double t) { return std::pow(k, alpha) * std::pow(t, alpha); }

GapSample sample_identity(const ScanOptions& o, double t) {
    switch (o.which) {
        case Identity::squared: {
            const double x = scaled_time(o.alpha, o.k, t);
            const double e1 = ml_eval(o.alpha, -x);
            const double lhs = ml_eval(o.alpha, -2.0 * x);
            const double rhs = e1 * e1;
            return {t, lhs, rhs, lhs - rhs};
        }
        case Identity::derivative: {
            const double x = scaled_time(o.alpha, o.k, t);
            const MLParams aa{o.alpha, o.alpha};
            const double lhs = ml_eval(aa, -2.0 * x);
            const double rhs = ml_eval(aa, -x) * ml_eval(o.alpha, -x);
            return {t, lhs, rhs, lhs - rhs};
        }
        case Identity::semigroup: {
            const double a = -std::pow(o.k, o.alpha);
            const double s = o.semigroup_s.value_or(t);
            const double lhs = ml_eval(o.alpha, a * std::pow(t + s, o.alpha));
            const double rhs = ml_eval(o.alpha, a * std::pow(t, o.alpha)) * ml_eval(o.alpha, a * std::pow(s, o.alpha));
            return {t, lhs, rhs, lhs - rhs};
        }
    }
    return {t, NAN, NAN, NAN};
}

void check_scan(const ScanOptions& o) {
    check_gap_args(o.alpha, o.k, 0.0, "scan_gap");
    if (o.semigroup_s && !(*o.semigroup_s >= 0.0)) throw DomainError("scan_gap: s must be >= 0");
}

}  // namespace

double coeff_a(std::size_t n, double alpha) {
    if (!(alpha > 0.0)) throw DomainError("coeff_a: alpha must be > 0");
    const double x = static_cast<double>(n) * alpha + 1.0;
    return n <= kDirectGammaLimit ? recip_gamma(x) : std::exp(-log_gamma(x));
}

double coeff_b(std::size_t n, double alpha) {
    if (!(alpha > 0.0)) throw DomainError("coeff_b: alpha must be > 0");
    const double nd = static_cast<double>(n);
    double sum = 0.0;
    if (n <= kDirectGammaLimit) {
        const double scale = std::ldexp(1.0, -static_cast<int>(n));
        for (std::size_t j = 0; j <= n; ++j) {
            const double jd = static_cast<double>(j);
            sum += scale * recip_gamma((nd - jd) * alpha + 1.0) * recip_gamma(jd * alpha + 1.0);
        }
        return sum;
    }
    const double log_scale = -nd * std::numbers::ln2;
    for (std::size_t j = 0; j <= n; ++j) {
        const double jd = static_cast<double>(j);
        sum += std::exp(log_scale - log_gamma((nd - jd) * alpha + 1.0) - log_gamma(jd * alpha + 1.0));
    }
    return sum;
}

double coeff_ratio(double alpha) {
    if (!(alpha > 0.0)) throw DomainError("coeff_ratio: alpha must be > 0");
    if (alpha > 20.0) return 0.25 * std::exp(log_gamma(2.0 * alpha + 1.0) - 2.0 * log_gamma(alpha + 1.0));
    const double g = gamma(alpha + 1.0);
    return gamma(2.0 * alpha + 1.0) / (4.0 * g * g);
}

CoeffSeq coeff_a_sequence(double alpha, std::size_t length) {
    CoeffSeq s{alpha, std::vector<double>(length)};
    for (std::size_t n = 0; n < length; ++n) s.values[n] = coeff_a(n, alpha);
    return s;
}

CoeffSeq coeff_b_sequence(double alpha, std::size_t length) {
    CoeffSeq s{alpha, std::vector<double>(length)};
    for (std::size_t n = 0; n < length; ++n) s.values[n] = coeff_b(n, alpha);
    return s;
}

CoeffSeq cauchy_product(const CoeffSeq& a, const CoeffSeq& b, std::size_t n_max) {
    if (a.alpha != b.alpha) throw ArgumentError("cauchy_product: sequences carry different alpha");
    if (a.length() <= n_max || b.length() <= n_max)
        throw ArgumentError("cauchy_product: need length > n_max = " + std::to_string(n_max));
    CoeffSeq c{a.alpha, std::vector<double>(n_max + 1, 0.0)};
    for (std::size_t n = 0; n <= n_max; ++n) {
        double acc = 0.0;
        for (std::size_t j = 0; j <= n; ++j) acc += a.values[j] * b.values[n - j];
        c.values[n] = acc;
    }
    return c;
}

double squared_identity_gap(double alpha, double k, double t) {
    check_gap_args(alpha, k, t, "squared_identity_gap");
    return sample_identity({alpha, k, Identity::squared, std::nullopt}, t).gap;
}

double product_sum_residual(std::size_t n, double alpha, double k, double t) {
    check_gap_args(alpha, k, t, "product_sum_residual");
    const double x = scaled_time(alpha, k, t);
    std::vector<double> e(n + 1);
    for (std::size_t j = 0; j <= n; ++j) e[j] = ml_eval(alpha, -static_cast<double>(j) * x);
    double rhs = 0.0;
    for (std::size_t j = 0; j <= n; ++j) rhs += e[n - j] * e[j];
    return static_cast<double>(n + 1) * e[n] - rhs;
}

double derivative_identity_gap(double alpha, double k, double t) {
    check_gap_args(alpha, k, t, "derivative_identity_gap");
    return sample_identity({alpha, k, Identity::derivative, std::nullopt}, t).gap;
}

double semigroup_gap(double alpha, double a, double t, double s) {
    if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("semigroup_gap: alpha must lie in (0, 1]");
    if (!(t >= 0.0 && s >= 0.0)) throw DomainError("semigroup_gap: t and s must be >= 0");
    const double lhs = ml_eval(alpha, a * std::pow(t + s, alpha));
    const double rhs = ml_eval(alpha, a * std::pow(t, alpha)) * ml_eval(alpha, a * std::pow(s, alpha));
    return lhs - rhs;
}

std::string_view to_string(Identity id) {
    switch (id) {
        case Identity::squared:
            return "squared";
        case Identity::derivative:
            return "derivative";
        case Identity::semigroup:
            return "semigroup";
    }
    return "?";
}

std::optional<Identity> parse_identity(std::string_view name) {
    if (name == "squared") return Identity::squared;
    if (name == "derivative") return Identity::derivative;
    if (name == "semigroup") return Identity::semigroup;
    return std::nullopt;
}

GapReport scan_gap(const ScanOptions& opts, const UniformGrid& grid) {
    check_scan(opts);
    std::vector<GapSample> samples(grid.size());
    const auto n = static_cast<std::ptrdiff_t>(grid.size());
#pragma omp parallel for schedule(dynamic, 8)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        samples[idx] = sample_identity(opts, grid.t(idx));
    }
    return GapReport::from_samples(opts.alpha, opts.k, std::nullopt, std::move(samples));
}

GapReport serial::scan_gap(const ScanOptions& opts, const UniformGrid& grid) {
    check_scan(opts);
    std::vector<GapSample> samples;
    samples.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) samples.push_back(sample_identity(opts, grid.t(i)));
    return GapReport::from_samples(opts.alpha, opts.k, std::nullopt, std::move(samples));
}

}  // namespace fraclog
