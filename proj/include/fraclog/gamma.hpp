#pragma once

// Real-argument Gamma family used throughout the library.

namespace fraclog {

/// Gamma function on the real line. Throws DomainError at 0, -1, -2, ...
/// and OverflowError when the result exceeds the double range (x > ~171.6).
double gamma(double x);

/// ln Gamma(x) for x > 0.
double log_gamma(double x);

/// 1/Gamma(x), total on finite reals; exactly 0 at the poles of Gamma.
double recip_gamma(double x);

/// Gamma(a)/Gamma(b) for positive a, b. Falls back to log-Gamma differences
/// once both arguments exceed 20 so large ratios do not overflow midway.
double gamma_ratio(double a, double b);

/// sin(pi x) with exact argument reduction; exactly 0 at integers.
double sin_pi(double x);

}  // namespace fraclog
