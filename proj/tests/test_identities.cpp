#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "fraclog/errors.hpp"
#include "fraclog/gamma.hpp"
#include "fraclog/identities.hpp"
#include "oracle/mpfr_oracle.hpp"

namespace fl = fraclog;
using fl::UniformGrid;

TEST(Coefficients, AExamples) {
    for (double a : {0.1, 0.5, 1.0, 2.7}) EXPECT_EQ(fl::coeff_a(0, a), 1.0);
    EXPECT_NEAR(fl::coeff_a(2, 0.5), 1.0, 1e-15);
    double fact = 1.0;
    for (std::size_t n = 1; n <= 20; ++n) {
        fact *= static_cast<double>(n);
        EXPECT_NEAR(fl::coeff_a(n, 1.0) * fact, 1.0, 1e-14) << n;
    }
    EXPECT_THROW(fl::coeff_a(1, 0.0), fl::DomainError);
}

TEST(Coefficients, BExamples) {
    for (double a : {0.1, 0.5, 1.0}) EXPECT_NEAR(fl::coeff_b(0, a), 1.0, 1e-15);
    EXPECT_NEAR(fl::coeff_b(2, 0.5), 0.5 + 1.0 / std::numbers::pi, 1e-15);
    EXPECT_THROW(fl::coeff_b(1, -1.0), fl::DomainError);
}

TEST(Coefficients, AlphaOneCollapse) {
    for (std::size_t n = 0; n <= 50; ++n) {
        const double a = fl::coeff_a(n, 1.0), b = fl::coeff_b(n, 1.0);
        EXPECT_NEAR(b / a, 1.0, 1e-12) << n;
    }
}

TEST(Coefficients, LogPathMatchesDirectSum) {
    // n = 31 is the first index on the log-Gamma branch
    for (double alpha : {0.3, 0.7}) {
        const std::size_t n = 31;
        double direct = 0.0;
        for (std::size_t j = 0; j <= n; ++j)
            direct += std::ldexp(1.0, -static_cast<int>(n)) * fl::recip_gamma((n - j) * alpha + 1.0) *
                      fl::recip_gamma(j * alpha + 1.0);
        EXPECT_NEAR(fl::coeff_b(n, alpha) / direct, 1.0, 1e-12);
    }
    EXPECT_GT(fl::coeff_b(200, 0.5), 0.0);
    EXPECT_TRUE(std::isfinite(fl::coeff_b(200, 0.5)));
}

TEST(Coefficients, SecondOrderMismatchBelowOne) {
    for (int i = 1; i <= 9; ++i) {
        const double alpha = 0.1 * i;
        EXPECT_GT(std::abs(fl::coeff_a(2, alpha) - fl::coeff_b(2, alpha)), 1e-3) << alpha;
    }
}

TEST(CoeffRatio, Examples) {
    EXPECT_NEAR(fl::coeff_ratio(1.0), 0.5, 1e-13);
    EXPECT_NEAR(fl::coeff_ratio(0.5), 1.0 / std::numbers::pi, 1e-15);
    EXPECT_NEAR(fl::coeff_ratio(1e-9), 0.25, 1e-8);
    EXPECT_TRUE(std::isfinite(fl::coeff_ratio(60.0)));
}

TEST(CoeffRatio, BelowHalfOnUnitInterval) {
    for (int i = 1; i <= 99; ++i) {
        const double alpha = 0.01 * i;
        EXPECT_LT(fl::coeff_ratio(alpha), 0.5) << alpha;
        // same statement in coefficient form: b_2 < a_2 exactly when the ratio is below 1/2
        EXPECT_LT(fl::coeff_b(2, alpha), fl::coeff_a(2, alpha)) << alpha;
    }
}

TEST(CauchyProduct, Examples) {
    fl::CoeffSeq ones{0.5, std::vector<double>(10, 1.0)};
    const auto c = fl::cauchy_product(ones, ones, 9);
    ASSERT_EQ(c.length(), 10U);
    for (std::size_t n = 0; n < 10; ++n) EXPECT_EQ(c.values[n], static_cast<double>(n + 1));

    const auto e = fl::coeff_a_sequence(1.0, 21);
    const auto e2 = fl::cauchy_product(e, e, 20);
    for (std::size_t n = 0; n <= 20; ++n) EXPECT_NEAR(e2.values[n] / (std::ldexp(1.0, n) * e.values[n]), 1.0, 1e-13);

    const auto a = fl::coeff_a_sequence(0.5, 3);
    const auto p = fl::cauchy_product(a, a, 2);
    EXPECT_NEAR(0.25 * p.values[2], fl::coeff_b(2, 0.5), 1e-15);
}

TEST(CauchyProduct, Errors) {
    fl::CoeffSeq a{0.5, std::vector<double>(3, 1.0)};
    fl::CoeffSeq b{0.5, std::vector<double>(5, 1.0)};
    fl::CoeffSeq other{0.7, std::vector<double>(5, 1.0)};
    EXPECT_THROW(fl::cauchy_product(a, b, 3), fl::ArgumentError);
    EXPECT_THROW(fl::cauchy_product(b, other, 2), fl::ArgumentError);
    EXPECT_NO_THROW(fl::cauchy_product(a, b, 2));
}

TEST(CauchyProduct, NormalizedSquareGivesB) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> ad(0.05, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        const double alpha = ad(rng);
        const auto a = fl::coeff_a_sequence(alpha, 26);
        const auto c = fl::cauchy_product(a, a, 25);
        for (std::size_t n = 0; n <= 25; ++n)
            ASSERT_NEAR(std::ldexp(c.values[n], -static_cast<int>(n)) / fl::coeff_b(n, alpha), 1.0, 1e-13);
    }
}

TEST(SquaredIdentity, Examples) {
    EXPECT_NEAR(fl::squared_identity_gap(1.0, 1.0, 3.0), 0.0, 1e-12);
    for (double a : {0.25, 0.5, 1.0}) EXPECT_EQ(fl::squared_identity_gap(a, 2.0, 0.0), 0.0);
    EXPECT_NEAR(fl::squared_identity_gap(0.5, 1.0, 1.0), 0.072567961712316942, 1e-13);
    const double e1 = oracle::erfcx(1.0);
    EXPECT_NEAR(fl::squared_identity_gap(0.5, 1.0, 1.0), oracle::erfcx(2.0) - e1 * e1, 1e-13);
}

TEST(SquaredIdentity, Domain) {
    EXPECT_THROW(fl::squared_identity_gap(1.5, 1.0, 1.0), fl::DomainError);
    EXPECT_THROW(fl::squared_identity_gap(0.5, 0.0, 1.0), fl::DomainError);
    EXPECT_THROW(fl::squared_identity_gap(0.5, 1.0, -1.0), fl::DomainError);
}

TEST(SquaredIdentity, ScaleInvariance) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> ad(0.05, 1.0), kd(0.1, 3.0), td(0.0, 4.0);
    for (int i = 0; i < 200; ++i) {
        const double alpha = ad(rng), k = kd(rng), t = td(rng);
        ASSERT_NEAR(fl::squared_identity_gap(alpha, k, t), fl::squared_identity_gap(alpha, 1.0, k * t), 1e-12)
            << alpha << " " << k << " " << t;
    }
}

TEST(ProductSum, Examples) {
    EXPECT_NEAR(fl::product_sum_residual(2, 1.0, 1.0, 1.0), 0.0, 1e-12);
    EXPECT_NEAR(fl::product_sum_residual(2, 0.5, 1.0, 1.0), 0.072567961712316942, 1e-13);
    for (std::size_t n = 0; n <= 8; ++n) EXPECT_NEAR(fl::product_sum_residual(n, 1.0, 1.3, 0.7), 0.0, 1e-12) << n;
}

TEST(ProductSum, LowOrdersVanish) {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> ad(0.05, 1.0), kd(0.1, 3.0), td(0.0, 10.0);
    for (int i = 0; i < 200; ++i) {
        const double alpha = ad(rng), k = kd(rng), t = td(rng);
        ASSERT_NEAR(fl::product_sum_residual(0, alpha, k, t), 0.0, 1e-12);
        ASSERT_NEAR(fl::product_sum_residual(1, alpha, k, t), 0.0, 1e-12);
    }
}

TEST(ProductSum, SecondOrderIsSquaredGap) {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> ad(0.05, 1.0), kd(0.1, 3.0), td(0.0, 6.0);
    for (int i = 0; i < 200; ++i) {
        const double alpha = ad(rng), k = kd(rng), t = td(rng);
        ASSERT_NEAR(fl::product_sum_residual(2, alpha, k, t), fl::squared_identity_gap(alpha, k, t), 1e-13);
    }
}

TEST(DerivativeIdentity, Examples) {
    EXPECT_NEAR(fl::derivative_identity_gap(1.0, 1.0, 2.0), 0.0, 1e-12);
    for (double a : {0.25, 0.5, 0.9}) EXPECT_NEAR(fl::derivative_identity_gap(a, 1.0, 0.0), 0.0, 1e-16);
    EXPECT_NEAR(fl::derivative_identity_gap(0.5, 1.0, 1.0), -0.0050122542382714796, 1e-13);
    const double lhs = oracle::ml_half_half_negative(2.0);
    const double rhs = oracle::ml_half_half_negative(1.0) * oracle::erfcx(1.0);
    EXPECT_NEAR(fl::derivative_identity_gap(0.5, 1.0, 1.0), lhs - rhs, 1e-13);
}

TEST(Semigroup, Examples) {
    EXPECT_NEAR(fl::semigroup_gap(1.0, -1.0, 1.0, 2.0), 0.0, 1e-12);
    EXPECT_EQ(fl::semigroup_gap(0.5, 0.0, 1.3, 2.1), 0.0);
    EXPECT_NEAR(fl::semigroup_gap(0.5, -1.0, 1.0, 1.0), 0.15337628784815238, 1e-13);
    const double e1 = oracle::erfcx(1.0);
    EXPECT_NEAR(fl::semigroup_gap(0.5, -1.0, 1.0, 1.0), oracle::erfcx(std::sqrt(2.0)) - e1 * e1, 1e-13);
    EXPECT_THROW(fl::semigroup_gap(0.5, -1.0, -1.0, 1.0), fl::DomainError);
    EXPECT_THROW(fl::semigroup_gap(0.0, -1.0, 1.0, 1.0), fl::DomainError);
}

TEST(Semigroup, ExponentialCaseHolds) {
    std::mt19937_64 rng(19);
    std::uniform_real_distribution<double> ad(-2.0, 0.5), td(0.0, 3.0);
    for (int i = 0; i < 200; ++i) {
        const double a = ad(rng), t = td(rng), s = td(rng);
        ASSERT_NEAR(fl::semigroup_gap(1.0, a, t, s), 0.0, 1e-12 * std::max(1.0, std::exp(a * (t + s))));
    }
}

TEST(Gaps, VanishAtOrigin) {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> ad(0.05, 1.0), kd(0.1, 3.0);
    for (int i = 0; i < 100; ++i) {
        const double alpha = ad(rng), k = kd(rng);
        ASSERT_EQ(fl::squared_identity_gap(alpha, k, 0.0), 0.0);
        ASSERT_NEAR(fl::derivative_identity_gap(alpha, k, 0.0), 0.0, 1e-16);
        ASSERT_EQ(fl::semigroup_gap(alpha, -k, 0.0, 0.0), 0.0);
        for (std::size_t n = 0; n <= 5; ++n) ASSERT_NEAR(fl::product_sum_residual(n, alpha, k, 0.0), 0.0, 1e-14);
    }
}

TEST(IdentityNames, RoundTrip) {
    for (auto id : {fl::Identity::squared, fl::Identity::derivative, fl::Identity::semigroup})
        EXPECT_EQ(fl::parse_identity(fl::to_string(id)), id);
    EXPECT_FALSE(fl::parse_identity("cubed").has_value());
}

TEST(ScanGap, AlphaOneIsFlat) {
    const auto g = UniformGrid::over(5.0, 500);
    for (auto id : {fl::Identity::squared, fl::Identity::derivative, fl::Identity::semigroup}) {
        const auto r = fl::scan_gap({1.0, 1.0, id, std::nullopt}, g);
        EXPECT_LE(r.sup_gap, 1e-11) << fl::to_string(id);
    }
}

TEST(ScanGap, HalfOrderInteriorMaximum) {
    const auto r = fl::scan_gap({0.5, 1.0, fl::Identity::squared, std::nullopt}, UniformGrid::over(5.0, 5000));
    ASSERT_EQ(r.samples.size(), 5001U);
    EXPECT_NEAR(r.sup_gap, 0.075810111087612417, 1e-9);
    EXPECT_NEAR(r.argmax_t, 1.897, 2e-3);
    EXPECT_EQ(r.samples.front().gap, 0.0);
    EXPECT_LT(std::abs(r.samples.back().gap), r.sup_gap);
    EXPECT_FALSE(r.u0.has_value());
}

TEST(ScanGap, GapShrinksTowardAlphaOne) {
    const auto g = UniformGrid::over(5.0, 500);
    double prev = 0.0;
    for (double alpha : {0.9, 0.75, 0.5, 0.25}) {
        const double s = fl::scan_gap({alpha, 1.0, fl::Identity::squared, std::nullopt}, g).sup_gap;
        EXPECT_GT(s, prev) << alpha;
        prev = s;
    }
}

TEST(ScanGap, ReportInvariants) {
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> ad(0.1, 1.0), kd(0.2, 2.0);
    for (int trial = 0; trial < 12; ++trial) {
        const fl::ScanOptions o{ad(rng), kd(rng), static_cast<fl::Identity>(trial % 3), std::nullopt};
        const auto r = fl::scan_gap(o, UniformGrid::over(3.0, 120));
        double sup = 0.0;
        for (std::size_t i = 0; i < r.samples.size(); ++i) {
            const auto& s = r.samples[i];
            if (i > 0) ASSERT_GT(s.t, r.samples[i - 1].t);
            ASSERT_EQ(s.gap, s.lhs - s.rhs);
            sup = std::max(sup, std::abs(s.gap));
        }
        ASSERT_EQ(r.sup_gap, sup);
        ASSERT_EQ(r.alpha, o.alpha);
        ASSERT_EQ(r.k, o.k);
    }
}

TEST(ScanGap, SemigroupWithFixedShift) {
    const auto g = UniformGrid::over(2.0, 20);
    const auto r = fl::scan_gap({0.5, 1.0, fl::Identity::semigroup, 1.0}, g);
    for (const auto& s : r.samples) EXPECT_NEAR(s.gap, fl::semigroup_gap(0.5, -1.0, s.t, 1.0), 1e-15);
    // s = t by default; t = 1 gives the tabulated example
    const auto d = fl::scan_gap({0.5, 1.0, fl::Identity::semigroup, std::nullopt}, g);
    EXPECT_NEAR(d.samples[10].gap, 0.15337628784815238, 1e-13);
    EXPECT_THROW(fl::scan_gap({0.5, 1.0, fl::Identity::semigroup, -1.0}, g), fl::DomainError);
}

TEST(ScanGap, ParallelMatchesSerial) {
    const auto g = UniformGrid::over(5.0, 700);
    for (auto id : {fl::Identity::squared, fl::Identity::derivative, fl::Identity::semigroup}) {
        const fl::ScanOptions o{0.37, 1.4, id, std::nullopt};
        const auto p = fl::scan_gap(o, g), s = fl::serial::scan_gap(o, g);
        ASSERT_EQ(p.samples.size(), s.samples.size());
        for (std::size_t i = 0; i < p.samples.size(); ++i) {
            ASSERT_EQ(p.samples[i].lhs, s.samples[i].lhs);
            ASSERT_EQ(p.samples[i].rhs, s.samples[i].rhs);
        }
        EXPECT_EQ(p.sup_gap, s.sup_gap);
        EXPECT_EQ(p.argmax_t, s.argmax_t);
    }
}

TEST(GapReport, TiesKeepEarliest) {
    const auto r = fl::GapReport::from_samples(0.5, 1.0, 0.8, {{0.0, 0, 0, 0}, {1.0, 1, 0, 1}, {2.0, 0, 1, -1}});
    EXPECT_EQ(r.sup_gap, 1.0);
    EXPECT_EQ(r.argmax_t, 1.0);
    EXPECT_EQ(r.u0, 0.8);
    const auto empty = fl::GapReport::from_samples(0.5, 1.0, std::nullopt, {});
    EXPECT_EQ(empty.sup_gap, 0.0);
}
