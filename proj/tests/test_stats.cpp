#include <gtest/gtest.h>

#include <numeric>

#include "oracles.hpp"
#include "primespec/stats.hpp"

using namespace primespec;

TEST(Li, EndpointAndDomain) {
    EXPECT_EQ(li(2.0), 0.0);
    EXPECT_THROW(li(1.5), std::domain_error);
}

TEST(Li, MatchesMidpointOracle) {
    for (double x : {3.0, 10.0, 100.0, 1234.5, 1e4}) EXPECT_NEAR(li(x), oracle::li_reference(x), 1e-6) << x;
    // li(100) - li(2) from the offset logarithmic integral tables.
    EXPECT_NEAR(li(100.0), 29.080977803962, 1e-8);
    EXPECT_NEAR(li(1e6), 78626.503995682, 1e-6);
}

TEST(Li, WithinClassicalBoundOfPi) {
    const double x = 1e4;
    EXPECT_LT(std::abs(li(x) - static_cast<double>(count_primes(10000))), error_bound(10000));
}

TEST(Psi, SmallValues) {
    EXPECT_DOUBLE_EQ(psi(2), std::log(2.0));
    const double expected = 3 * std::log(2.0) + 2 * std::log(3.0) + std::log(5.0) + std::log(7.0);
    EXPECT_NEAR(psi(10), expected, 1e-12);
    double brute = 0.0;
    for (std::uint64_t n = 2; n <= 5000; ++n) brute += oracle::mangoldt(n);
    EXPECT_NEAR(psi(5000), brute, 1e-9);
    EXPECT_THROW(psi(1), std::domain_error);
}

TEST(Psi, DeskScale) {
    EXPECT_LT(std::abs(psi(1000000) / 1e6 - 1.0), 0.01);
}

TEST(Psi, DominatesTheta) {
    for (std::uint64_t x : {2ull, 10ull, 1000ull, 100000ull}) EXPECT_LE(theta(x), psi(x));
}

TEST(PntRatio, Values) {
    EXPECT_NEAR(pnt_ratio(1000), 168.0 * std::log(1000.0) / 1000.0, 1e-15);
    EXPECT_NEAR(pnt_ratio(1000), 1.1605, 1e-4);
    EXPECT_NEAR(pnt_ratio(3), 2.0 * std::log(3.0) / 3.0, 1e-15);
    const double big = pnt_ratio(1000000);
    EXPECT_GT(big, 1.0);
    EXPECT_LT(big, 1.1);
    EXPECT_THROW(pnt_ratio(2), std::domain_error);
}

TEST(PsiComparison, FieldsAreFinite) {
    const auto c = compare_psi(1000);
    EXPECT_EQ(c.pi_x, 168u);
    EXPECT_TRUE(std::isfinite(c.psi));
    EXPECT_TRUE(std::isfinite(c.li));
    EXPECT_GT(c.bound, 0.0);
}

TEST(Histogram, BucketValues) {
    const auto h = interval_histogram(10000, 1000);
    ASSERT_EQ(h.buckets.size(), 10u);
    EXPECT_EQ(h.buckets[0], (HistogramBucket{0, 168}));
    EXPECT_EQ(h.buckets[9].start, 9000u);
    EXPECT_EQ(h.buckets[9].count, count_primes(9999) - count_primes(8999));

    const auto unit = interval_histogram(20, 1);
    EXPECT_EQ(unit.buckets[7].count, 1u);
    EXPECT_EQ(unit.buckets[8].count, 0u);
    EXPECT_EQ(unit.buckets[0].count + unit.buckets[1].count, 0u);
}

TEST(Histogram, SumsToPrimeCount) {
    for (auto [x, w] : {std::pair<std::uint64_t, std::uint64_t>{100000, 1000}, {99999, 7}, {5, 5}, {3, 1}}) {
        const auto h = interval_histogram(x, w);
        std::uint64_t total = 0;
        for (const auto& b : h.buckets) total += b.count;
        const std::uint64_t covered = h.buckets.size() * w - 1;
        EXPECT_EQ(total, covered >= 2 ? count_primes(covered) : 0u) << x << "/" << w;
    }
}

TEST(Histogram, Errors) {
    EXPECT_THROW(interval_histogram(100, 0), std::invalid_argument);
    EXPECT_THROW(interval_histogram(10, 100), std::invalid_argument);
}

TEST(Histogram, MovingAverageTrend) {
    IntervalHistogram h{1, {{0, 10}, {1, 8}, {2, 9}, {3, 7}}};
    const auto avg = moving_average(h, 2);
    EXPECT_EQ(avg, (std::vector<double>{9.0, 8.5, 8.0}));
    const auto rep = moving_average_trend(avg, 2);
    EXPECT_EQ(rep.strict_rises, 0u);
    EXPECT_LE(rep.worst_rise_sigma, 0.0);

    const std::vector<double> rising{4.0, 5.0};
    EXPECT_NEAR(moving_average_trend(rising, 1).worst_rise_sigma, 0.5, 1e-15);
}

TEST(Dirichlet, PartialSumsDiffer) {
    const auto d = dirichlet_partial_sums(100000, 2.0);
    EXPECT_NEAR(d.zeta_partial, std::numbers::pi * std::numbers::pi / 6.0, 1e-4);
    // Prime zeta P(2) = 0.4522474200410654...
    EXPECT_NEAR(d.prime_partial, 0.45224742, 1e-5);
    EXPECT_THROW(dirichlet_partial_sums(100, 1.0), std::domain_error);
}
