#pragma once

// Numerical instances of the Mittag-Leffler identities that an exact
// power-series solution of the fractional logistic equation would force.
// Every gap below is evaluated with x = k^alpha t^alpha and vanishes
// identically when alpha = 1.

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "fraclog/grid.hpp"
#include "fraclog/report.hpp"

namespace fraclog {

/// Coefficients c_0..c_{n-1} of a power series in one variable, tagged with the ML order.
struct CoeffSeq {
    double alpha;
    std::vector<double> values;

    std::size_t length() const noexcept { return values.size(); }
};

/// 1/Gamma(n alpha + 1): coefficient of (-2x)^n in E_alpha(-2x).
double coeff_a(std::size_t n, double alpha);

/// sum_j 2^-n / (Gamma((n-j) alpha + 1) Gamma(j alpha + 1)): coefficient of (-2x)^n in E_alpha(-x)^2.
double coeff_b(std::size_t n, double alpha);

/// Gamma(2 alpha + 1) / (4 Gamma(alpha + 1)^2). Equals 1/2 exactly when coeff_a(2) == coeff_b(2).
double coeff_ratio(double alpha);

CoeffSeq coeff_a_sequence(double alpha, std::size_t length);
CoeffSeq coeff_b_sequence(double alpha, std::size_t length);

/// c_n = sum_{j<=n} a_j b_{n-j}, n = 0..n_max. Throws ArgumentError on mismatched alpha or short inputs.
CoeffSeq cauchy_product(const CoeffSeq& a, const CoeffSeq& b, std::size_t n_max);

/// E_alpha(-2x) - E_alpha(-x)^2
double squared_identity_gap(double alpha, double k, double t);

/// (n+1) E_alpha(-n x) - sum_{j=0}^n E_alpha(-(n-j) x) E_alpha(-j x); both sides at the same t.
double product_sum_residual(std::size_t n, double alpha, double k, double t);

/// E_{alpha,alpha}(-2x) - E_{alpha,alpha}(-x) E_alpha(-x)
double derivative_identity_gap(double alpha, double k, double t);

/// E_alpha(a (t+s)^alpha) - E_alpha(a t^alpha) E_alpha(a s^alpha)
double semigroup_gap(double alpha, double a, double t, double s);

enum class Identity {
    squared,     ///< E(-2x) vs E(-x)^2
    derivative,  ///< E_{a,a}(-2x) vs E_{a,a}(-x) E(-x)
    semigroup,   ///< E(a (t+s)^alpha) vs E(a t^alpha) E(a s^alpha), a = -k^alpha
};

std::string_view to_string(Identity id);
std::optional<Identity> parse_identity(std::string_view name);

struct ScanOptions {
    double alpha;
    double k = 1.0;
    Identity which = Identity::squared;
    /// Fixed s for the semigroup identity; when empty s = t.
    std::optional<double> semigroup_s;
};

/// Tabulates lhs, rhs and gap on every grid point. Points are evaluated in
/// parallel; the report is identical to serial::scan_gap.
GapReport scan_gap(const ScanOptions& opts, const UniformGrid& grid);

namespace serial {
GapReport scan_gap(const ScanOptions& opts, const UniformGrid& grid);
}

}  // namespace fraclog
