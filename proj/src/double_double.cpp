#include "fraclog/double_double.hpp"

#include <array>
#include <cmath>
#include <limits>

namespace fraclog::dd {
namespace {

const DoubleDouble kLn2{6.931471805599452862e-01, 2.319046813846299558e-17};
const DoubleDouble kTwoPi{6.283185307179586232e+00, 2.449293598294706414e-16};

// Stirling series numerators/denominators: B_2m / (2m (2m - 1)).
constexpr std::array<std::array<double, 2>, 15> kStirling = {{
    {1.0, 12.0},
    {-1.0, 360.0},
    {1.0, 1260.0},
    {-1.0, 1680.0},
    {1.0, 1188.0},
    {-691.0, 360360.0},
    {1.0, 156.0},
    {-3617.0, 122400.0},
    {43867.0, 244188.0},
    {-174611.0, 125400.0},
    {77683.0, 5796.0},
    {-236364091.0, 1506960.0},
    {657931.0, 300.0},
    {-3392780147.0, 93960.0},
    {1723168255201.0, 2492028.0},
}};

constexpr double kShiftTarget = 30.0;

}  // namespace

DoubleDouble exp(const DoubleDouble& x) {
    if (x.hi > 709.0) return {std::numeric_limits<double>::infinity(), 0.0};
    if (x.hi < -745.0) return {0.0, 0.0};
    if (x.hi == 0.0) return {1.0, 0.0};

    // 1/i!, i = 2..12
    static const std::array<DoubleDouble, 11> inv_fact = [] {
        std::array<DoubleDouble, 11> t{};
        DoubleDouble f(1.0);
        for (int i = 2; i <= 12; ++i) {
            f = f / DoubleDouble(static_cast<double>(i));
            t[static_cast<std::size_t>(i - 2)] = f;
        }
        return t;
    }();

    // x = m ln2 + r, |r| <= ln2/2, then r / 2^10 and square back up.
    const double m = std::nearbyint(x.hi / kLn2.hi);
    const DoubleDouble r = x - kLn2 * DoubleDouble(m);
    constexpr int kSquarings = 10;
    const DoubleDouble s = r * DoubleDouble(1.0 / 1024.0);

    // Taylor for e^s - 1, |s| < 3.4e-4: 12 terms reach well below 1e-32. Horner form.
    DoubleDouble poly = inv_fact.back();
    for (std::size_t i = inv_fact.size() - 1; i-- > 0;) poly = poly * s + inv_fact[i];
    DoubleDouble sum = s + s * s * poly;
    // (1 + e)^2 - 1 = 2e + e^2 keeps the small part separate.
    for (int i = 0; i < kSquarings; ++i) sum = sum * DoubleDouble(2.0) + sum * sum;
    DoubleDouble result = sum + DoubleDouble(1.0);
    const double scale = std::ldexp(1.0, static_cast<int>(m));
    return {result.hi * scale, result.lo * scale};
}

DoubleDouble log(const DoubleDouble& x) {
    if (!(x.hi > 0.0)) return {std::numeric_limits<double>::quiet_NaN(), 0.0};
    // x = 2^e m with m in [1, 2); one Newton step on exp, y <- y + m e^-y - 1,
    // doubles the 53 correct bits of the libm start since |y| < ln 2.
    int e = 0;
    const double frac = std::frexp(x.hi, &e);
    const DoubleDouble m{std::ldexp(frac, 1), std::ldexp(x.lo, 1 - e)};
    const DoubleDouble y(std::log(m.hi));
    return y + m * exp(-y) - DoubleDouble(1.0) + kLn2 * DoubleDouble(static_cast<double>(e - 1));
}

DoubleDouble log_gamma(const DoubleDouble& x) {
    if (!(x.hi > 0.0)) return {std::numeric_limits<double>::quiet_NaN(), 0.0};

    static const DoubleDouble half_log_two_pi = log(kTwoPi) * DoubleDouble(0.5);
    static const std::array<DoubleDouble, kStirling.size()> coeff = [] {
        std::array<DoubleDouble, kStirling.size()> c{};
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = DoubleDouble(kStirling[i][0]) / DoubleDouble(kStirling[i][1]);
        return c;
    }();

    DoubleDouble shifted = x;
    DoubleDouble product(1.0);
    while (shifted.hi < kShiftTarget) {
        product *= shifted;
        shifted += DoubleDouble(1.0);
    }

    const DoubleDouble ln_x = log(shifted);
    DoubleDouble result = (shifted - DoubleDouble(0.5)) * ln_x - shifted + half_log_two_pi;

    const DoubleDouble inv = DoubleDouble(1.0) / shifted;
    const DoubleDouble inv2 = inv * inv;
    DoubleDouble series = coeff.back();
    for (std::size_t i = coeff.size() - 1; i-- > 0;) series = series * inv2 + coeff[i];
    result += series * inv;
    if (product.hi != 1.0 || product.lo != 0.0) result = result - log(product);
    return result;
}

}  // namespace fraclog::dd
