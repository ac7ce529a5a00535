#include "fraclog/logistic.hpp"

#include <cmath>
#include <string>

#include "fraclog/caputo.hpp"
#include "fraclog/errors.hpp"
#include "fraclog/gamma.hpp"
#include "fraclog/mittag_leffler.hpp"

namespace fraclog {
namespace {

constexpr std::size_t kMaxWestTerms = 1'000'000;
constexpr std::size_t kFabmBlock = 256;

struct WestSums {
    double u;
    double caputo;
};

WestSums west_sums(const LogisticProblem& p, double t, std::size_t n_max) {
    if (!(t >= 0.0)) throw DomainError("west series: t must be >= 0");
    const double c = p.ratio();
    const double x = p.rate() * std::pow(t, p.alpha);
    double u = 0.0, d = 0.0, cn = 1.0;
    for (std::size_t n = 0; n <= n_max; ++n) {
        const double e = n == 0 ? 1.0 : ml_eval(p.alpha, -static_cast<double>(n) * x);
        u += cn * e;
        d += static_cast<double>(n) * cn * e;
        cn *= c;
    }
    return {u, -p.rate() * d};
}

ResidualSample residual_at(const LogisticProblem& p, double t, std::size_t n_max) {
    const auto s = west_sums(p, t, n_max);
    const double rhs = p.rhs(s.u);
    return {t, s.u, s.caputo, rhs, s.caputo - rhs};
}

ResidualReport make_residual_report(const LogisticProblem& p, std::vector<ResidualSample> samples) {
    ResidualReport r{p, std::move(samples), 0.0, 0.0};
    if (!r.samples.empty()) r.argmax_t = r.samples.front().t;
    for (const auto& s : r.samples) {
        if (std::abs(s.residual) > r.sup_residual) {
            r.sup_residual = std::abs(s.residual);
            r.argmax_t = s.t;
        }
    }
    return r;
}

// Weights in the form of the Diethelm-Ford-Freed scheme, indexed by lag m = n - j.
struct FabmWeights {
    std::vector<double> b;  // predictor: (m+1)^a - m^a
    std::vector<double> a;  // corrector, j >= 1: (m+2)^{a+1} + m^{a+1} - 2 (m+1)^{a+1}
};

FabmWeights fabm_weights(double alpha, std::size_t n) {
    FabmWeights w{std::vector<double>(n), std::vector<double>(n)};
    const double p = alpha + 1.0;
    for (std::size_t m = 0; m < n; ++m) {
        const double md = static_cast<double>(m);
        w.b[m] = m == 0 ? 1.0 : std::pow(md, alpha) * std::expm1(alpha * std::log1p(1.0 / md));
        if (m == 0) {
            w.a[m] = std::exp2(p) - 2.0;
        } else {
            const double x = 1.0 / (md + 1.0);
            w.a[m] = std::pow(md + 1.0, p) * (std::expm1(p * std::log1p(x)) + std::expm1(p * std::log1p(-x)));
        }
    }
    return w;
}

struct Partial {
    double pred;
    double corr;
};

// Block partial sums for step n -> n+1 over j in [lo, hi).
Partial fabm_block(const FabmWeights& w, const std::vector<double>& f, std::size_t n, std::size_t lo, std::size_t hi) {
    Partial s{0.0, 0.0};
    for (std::size_t j = lo; j < hi; ++j) {
        s.pred += w.b[n - j] * f[j];
        if (j >= 1) s.corr += w.a[n - j] * f[j];
    }
    return s;
}

template <bool Parallel>
GridFunction fabm_impl(const LogisticProblem& p, const UniformGrid& grid) {
    const std::size_t steps = grid.n_steps();
    const double alpha = p.alpha;
    const double hp = std::pow(grid.h(), alpha);
    const double c_pred = hp * recip_gamma(alpha + 1.0);
    const double c_corr = hp * recip_gamma(alpha + 2.0);
    const auto w = fabm_weights(alpha, steps);

    std::vector<double> u(steps + 1), f(steps + 1);
    u[0] = p.u0;
    f[0] = p.rhs(u[0]);
    std::vector<Partial> partials((steps + kFabmBlock) / kFabmBlock);

    for (std::size_t n = 0; n < steps; ++n) {
        const std::size_t n_blocks = n / kFabmBlock + 1;
        const auto nb = static_cast<std::ptrdiff_t>(n_blocks);
        if constexpr (Parallel) {
#pragma omp parallel for schedule(static) if (n_blocks > 4)
            for (std::ptrdiff_t bi = 0; bi < nb; ++bi) {
                const auto lo = static_cast<std::size_t>(bi) * kFabmBlock;
                partials[static_cast<std::size_t>(bi)] = fabm_block(w, f, n, lo, std::min(lo + kFabmBlock, n + 1));
            }
        } else {
            for (std::ptrdiff_t bi = 0; bi < nb; ++bi) {
                const auto lo = static_cast<std::size_t>(bi) * kFabmBlock;
                partials[static_cast<std::size_t>(bi)] = fabm_block(w, f, n, lo, std::min(lo + kFabmBlock, n + 1));
            }
        }
        double pred = 0.0, corr = 0.0;
        for (std::size_t bi = 0; bi < n_blocks; ++bi) {
            pred += partials[bi].pred;
            corr += partials[bi].corr;
        }
        const double nd = static_cast<double>(n);
        const double a0 = std::pow(nd, alpha + 1.0) - (nd - alpha) * std::pow(nd + 1.0, alpha);
        const double u_pred = p.u0 + c_pred * pred;
        const double u_next = p.u0 + c_corr * (p.rhs(u_pred) + a0 * f[0] + corr);
        if (!std::isfinite(u_next))
            throw NumericalFailure("fabm_solve: non-finite value at step " + std::to_string(n + 1));
        u[n + 1] = u_next;
        f[n + 1] = p.rhs(u_next);
    }
    return GridFunction(grid, std::move(u));
}

}  // namespace

LogisticProblem::LogisticProblem(double alpha_, double k_, double u0_) : alpha(alpha_), k(k_), u0(u0_) {
    if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("LogisticProblem: alpha must lie in (0, 1]");
    if (!(k > 0.0) || !std::isfinite(k)) throw DomainError("LogisticProblem: k must be a positive finite number");
    if (!(u0 >= 0.0 && u0 <= 1.0)) throw DomainError("LogisticProblem: u0 must lie in [0, 1]");
}

double LogisticProblem::rate() const { return std::pow(k, alpha); }

double LogisticProblem::ratio() const {
    if (u0 == 0.0) throw DomainError("west series: c = (u0 - 1)/u0 is undefined at u0 = 0");
    return (u0 - 1.0) / u0;
}

void WestSeriesConfig::validate() const {
    if (truncation_n && *truncation_n < 1) throw ArgumentError("WestSeriesConfig: truncation_n must be >= 1");
    if (!(tail_tol > 0.0)) throw ArgumentError("WestSeriesConfig: tail_tol must be > 0");
}

double closed_form_logistic(double k, double u0, double t) {
    if (!(k > 0.0)) throw DomainError("closed_form_logistic: k must be > 0");
    if (!(u0 >= 0.0 && u0 <= 1.0)) throw DomainError("closed_form_logistic: u0 must lie in [0, 1]");
    if (!(t >= 0.0)) throw DomainError("closed_form_logistic: t must be >= 0");
    if (u0 == 0.0) return 0.0;
    return u0 / (u0 + (1.0 - u0) * std::exp(-k * t));
}

std::size_t west_truncation(const LogisticProblem& p, const WestSeriesConfig& cfg) {
    cfg.validate();
    const double c = p.ratio();
    const double r = std::abs(c);
    if (!(r < 1.0))
        throw DivergenceError("west series diverges: |(u0 - 1)/u0| = " + std::to_string(r) +
                              " is not < 1 (requires u0 > 1/2)");
    if (cfg.truncation_n) return *cfg.truncation_n;
    if (r == 0.0) return 0;
    // Both tails bounded since 0 < E_alpha(-x) <= 1:
    //   sum_{n>N} r^n = r^{N+1}/(1-r),  sum_{n>N} n r^n = r^{N+1} ((N+1) - N r)/(1-r)^2.
    const double scale = std::max(1.0, p.rate());
    std::size_t n = 0;
    double rn1 = r;
    while (true) {
        const double nd = static_cast<double>(n);
        const double tail_u = rn1 / (1.0 - r);
        const double tail_d = rn1 * ((nd + 1.0) - nd * r) / ((1.0 - r) * (1.0 - r));
        if (tail_u < cfg.tail_tol && scale * tail_d < cfg.tail_tol) return n;
        if (++n > kMaxWestTerms) throw AccuracyError("west series: tail tolerance needs too many terms", tail_u);
        rn1 *= r;
    }
}

double west_series(const LogisticProblem& p, double t, const WestSeriesConfig& cfg) {
    return west_sums(p, t, west_truncation(p, cfg)).u;
}

double west_series_caputo(const LogisticProblem& p, double t, const WestSeriesConfig& cfg) {
    return west_sums(p, t, west_truncation(p, cfg)).caputo;
}

ResidualReport west_residual(const LogisticProblem& p, const UniformGrid& grid, const WestSeriesConfig& cfg) {
    const std::size_t n_max = west_truncation(p, cfg);
    std::vector<ResidualSample> samples(grid.size());
    const auto n = static_cast<std::ptrdiff_t>(grid.size());
#pragma omp parallel for schedule(dynamic, 8)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        samples[idx] = residual_at(p, grid.t(idx), n_max);
    }
    return make_residual_report(p, std::move(samples));
}

ResidualReport serial::west_residual(const LogisticProblem& p, const UniformGrid& grid, const WestSeriesConfig& cfg) {
    const std::size_t n_max = west_truncation(p, cfg);
    std::vector<ResidualSample> samples;
    samples.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) samples.push_back(residual_at(p, grid.t(i), n_max));
    return make_residual_report(p, std::move(samples));
}

GapReport west_caputo_l1_check(const LogisticProblem& p, const UniformGrid& grid, const WestSeriesConfig& cfg) {
    const auto res = west_residual(p, grid, cfg);
    std::vector<double> u(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) u[i] = res.samples[i].u;
    const auto l1 = caputo_l1(GridFunction(grid, std::move(u)), p.alpha);
    std::vector<GapSample> samples(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
        samples[i] = {grid.t(i), l1[i], res.samples[i].lhs, l1[i] - res.samples[i].lhs};
    return GapReport::from_samples(p.alpha, p.k, p.u0, std::move(samples));
}

GridFunction fabm_solve(const LogisticProblem& p, const UniformGrid& grid) { return fabm_impl<true>(p, grid); }

GridFunction serial::fabm_solve(const LogisticProblem& p, const UniformGrid& grid) {
    return fabm_impl<false>(p, grid);
}

GapReport compare_west_vs_reference(const LogisticProblem& p, const UniformGrid& grid, const WestSeriesConfig& cfg) {
    const auto west = west_residual(p, grid, cfg);
    const auto ref = fabm_solve(p, grid);
    std::vector<GapSample> samples(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double w = west.samples[i].u;
        samples[i] = {grid.t(i), w, ref[i], w - ref[i]};
    }
    return GapReport::from_samples(p.alpha, p.k, p.u0, std::move(samples));
}

}  // namespace fraclog
