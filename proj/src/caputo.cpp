#include "fraclog/caputo.hpp"

#include <cmath>
#include <string>

#include "fraclog/errors.hpp"
#include "fraclog/gamma.hpp"
#include "fraclog/mittag_leffler.hpp"

namespace fraclog {
namespace {

void check_order(double alpha, const char* who) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError(std::string(who) + ": alpha must lie in (0, 1)");
}

std::vector<double> first_differences(std::span<const double> v) {
    std::vector<double> d(v.size(), 0.0);
    for (std::size_t m = 1; m < v.size(); ++m) d[m] = v[m] - v[m - 1];
    return d;
}

// sum_{j=0}^{n-1} w_j d_{n-j}
inline double l1_point(const std::vector<double>& w, const std::vector<double>& d, std::size_t n) {
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) acc += w[j] * d[n - j];
    return acc;
}

}  // namespace

double caputo_power_rule(double b, double alpha, double t) {
    if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("caputo_power_rule: alpha must lie in (0, 1]");
    if (!(b > -1.0) || b == 0.0) throw DomainError("caputo_power_rule: requires b > -1 and b != 0");
    if (!(t >= 0.0)) throw DomainError("caputo_power_rule: requires t >= 0");
    const double exponent = b - alpha;
    if (t == 0.0) {
        if (exponent < 0.0) throw DivergenceError("caputo_power_rule: t^(b - alpha) diverges at t = 0 for b < alpha");
        if (exponent > 0.0) return 0.0;
    }
    // b + 1 - alpha hits a pole only when b = alpha - 1 - n, excluded by b > -1 for alpha <= 1,
    // except alpha = 1, b -> 0 which is excluded above.
    return std::pow(t, exponent) * gamma_ratio(b + 1.0, b + 1.0 - alpha);
}

std::vector<double> l1_weights(double alpha, std::size_t n) {
    const double p = 1.0 - alpha;
    std::vector<double> w(n);
    if (n > 0) w[0] = 1.0;
    // j^p ((1 + 1/j)^p - 1) avoids cancellation for large j
    for (std::size_t j = 1; j < n; ++j) {
        const double jd = static_cast<double>(j);
        w[j] = std::pow(jd, p) * std::expm1(p * std::log1p(1.0 / jd));
    }
    return w;
}

GridFunction caputo_l1(const GridFunction& f, double alpha) {
    check_order(alpha, "caputo_l1");
    const std::size_t n_pts = f.size();
    const auto w = l1_weights(alpha, n_pts);
    const auto d = first_differences(f.values());
    const double scale = std::pow(f.grid().h(), -alpha) * recip_gamma(2.0 - alpha);

    std::vector<double> out(n_pts, 0.0);
    const auto n_pts_signed = static_cast<std::ptrdiff_t>(n_pts);
#pragma omp parallel for schedule(dynamic, 64)
    for (std::ptrdiff_t n = 1; n < n_pts_signed; ++n) {
        out[static_cast<std::size_t>(n)] = scale * l1_point(w, d, static_cast<std::size_t>(n));
    }
    return {f.grid(), std::move(out)};
}

GridFunction serial::caputo_l1(const GridFunction& f, double alpha) {
    check_order(alpha, "caputo_l1");
    const std::size_t n_pts = f.size();
    const auto w = l1_weights(alpha, n_pts);
    const auto d = first_differences(f.values());
    const double scale = std::pow(f.grid().h(), -alpha) * recip_gamma(2.0 - alpha);

    std::vector<double> out(n_pts, 0.0);
    for (std::size_t n = 1; n < n_pts; ++n) out[n] = scale * l1_point(w, d, n);
    return {f.grid(), std::move(out)};
}

double eigenfunction_residual(double alpha, double lam, const UniformGrid& grid, std::optional<double> t_cut) {
    check_order(alpha, "eigenfunction_residual");
    std::vector<double> samples(grid.size());
    const auto size_signed = static_cast<std::ptrdiff_t>(grid.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < size_signed; ++i) {
        const double t = grid.t(static_cast<std::size_t>(i));
        samples[static_cast<std::size_t>(i)] = ml_eval(alpha, lam * std::pow(t, alpha));
    }
    const GridFunction f(grid, std::move(samples));
    const GridFunction d = caputo_l1(f, alpha);

    const double cut = t_cut.value_or(grid.t0() + 10.0 * grid.h());
    std::size_t first = 1;
    while (first < grid.size() && grid.t(first) < cut - 1e-12 * grid.h()) ++first;
    if (first >= grid.size()) first = 1;

    double worst = 0.0;
    for (std::size_t i = first; i < grid.size(); ++i) worst = std::max(worst, std::abs(d[i] - lam * f[i]));
    return worst;
}

}  // namespace fraclog
