#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "primespec/reconstruct.hpp"

using namespace primespec;

namespace {

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

}  // namespace

TEST(ReconstructFull, SmallWindow) {
    const auto series = build_series(Window::make(2, 10), SeriesMode::Indicator);
    const auto r = reconstruct_full(dft_naive(series));
    EXPECT_EQ(r.detected_primes, (std::vector<std::uint64_t>{2, 3, 5, 7}));
    EXPECT_LT(r.residual, 1e-9);
    EXPECT_EQ(r.components_used, 1u + 4u);
}

TEST(ReconstructFull, AllCompositeWindow) {
    const auto r = reconstruct_full(dft_naive(build_series(Window::make(24, 28), SeriesMode::Indicator)));
    EXPECT_TRUE(r.detected_primes.empty());
}

TEST(ReconstructFull, PrimesUpTo10001) {
    const auto series = build_series(Window::make(2, 10001), SeriesMode::Indicator);
    const auto spec = dft_fast(series);
    const auto r = reconstruct_full(spec, {.reference = std::span<const double>(series.values)});
    EXPECT_EQ(r.detected_primes.size(), 1229u);
    EXPECT_EQ(r.detected_primes, sieve_range(series.window));
    EXPECT_LT(r.residual, 1e-9);
}

TEST(ReconstructFull, DirectAndSpectralRoutesAgreeWithInverse) {
    for (auto [a, b] : {std::pair<std::uint64_t, std::uint64_t>{2, 1001}, {1000, 2000}, {5, 1604}}) {
        const auto spec = dft_fast(build_series(Window::make(a, b), SeriesMode::Indicator));
        const auto inv = inverse_dft(spec);
        ReconstructOptions direct_opt, spectral_opt;
        direct_opt.method = ResynthesisMethod::Direct;
        spectral_opt.method = ResynthesisMethod::Spectral;
        const auto direct = reconstruct_full(spec, direct_opt);
        const auto fast = reconstruct_full(spec, spectral_opt);
        EXPECT_LT(max_abs_diff(direct.values, inv), 1e-9);
        EXPECT_LT(max_abs_diff(fast.values, inv), 1e-9);
        EXPECT_EQ(direct.detected_primes, fast.detected_primes);
    }
}

TEST(ReconstructFull, DetectionExactOnLargeWindows) {
    for (auto [a, b] : {std::pair<std::uint64_t, std::uint64_t>{2, 100001}, {10200000, 10300000}}) {
        const auto series = build_series(Window::make(a, b), SeriesMode::Indicator);
        const auto r = reconstruct_full(dft_fast(series));
        EXPECT_EQ(r.detected_primes, oracle::primes_in(a, b)) << a;
    }
}

TEST(ReconstructFull, LogWeightedDetectsPrimePowers) {
    const auto series = build_series(Window::make(2, 40), SeriesMode::LogWeighted);
    const auto r = reconstruct_full(dft_naive(series));
    EXPECT_DOUBLE_EQ(r.detection_threshold, 0.5 * std::numbers::ln2);
    const std::vector<std::uint64_t> powers{2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32, 37};
    EXPECT_EQ(r.detected_primes, powers);
}

TEST(ReconstructTopk, AllComponentsMatchesFull) {
    for (auto [a, b] : {std::pair<std::uint64_t, std::uint64_t>{2, 10}, {2, 11}, {2, 2001}}) {
        const auto spec = dft_naive(build_series(Window::make(a, b), SeriesMode::Indicator));
        const auto full = reconstruct_full(spec);
        const auto top = reconstruct_topk(spec, max_top_k(spec));
        EXPECT_EQ(top.values, full.values);
        EXPECT_EQ(top.detected_primes, full.detected_primes);
    }
}

TEST(ReconstructTopk, RangeChecks) {
    const auto spec = dft_naive(build_series(Window::make(2, 10), SeriesMode::Indicator));
    EXPECT_THROW(reconstruct_topk(spec, 0), std::domain_error);
    EXPECT_THROW(reconstruct_topk(spec, max_top_k(spec) + 1), std::domain_error);
}

// Frozen from an independent numpy computation (naive DFT, descending
// amplitude with ascending-bin ties, Hermitian inverse).
TEST(ReconstructTopk, SingleComponentFixture) {
    const auto series = build_series(Window::make(2, 10), SeriesMode::Indicator);
    const auto r = reconstruct_topk(dft_naive(series), 1, {.reference = std::span<const double>(series.values)});
    EXPECT_NEAR(r.residual, 0.7123860142010863, 1e-12);
    EXPECT_GT(r.residual, 0.0);
    EXPECT_EQ(r.components_used, 2u);
    EXPECT_EQ(r.detected_primes, (std::vector<std::uint64_t>{3, 5, 7, 9}));
}

TEST(ReconstructTopk, PrecisionRecallFixture) {
    const auto series = build_series(Window::make(2, 2001), SeriesMode::Indicator);
    const auto r = reconstruct_topk(dft_naive(series), series.size() / 8);
    const auto truth = sieve_range(series.window);
    const std::set<std::uint64_t> t(truth.begin(), truth.end());
    std::size_t hits = 0;
    for (auto p : r.detected_primes) hits += t.count(p);
    EXPECT_EQ(r.detected_primes.size(), 316u);
    EXPECT_EQ(hits, 299u);
    EXPECT_EQ(truth.size(), 303u);
}

TEST(ReconstructTopk, EnergyOfOmittedBinsMatchesResidual) {
    const auto series = build_series(Window::make(2, 2001), SeriesMode::Indicator);
    const auto spec = dft_fast(series);
    double total = 0.0;
    for (double v : series.values) total += v * v;
    auto order = bins_by_amplitude(spec);
    for (std::size_t k : {1u, 10u, 100u, 500u, 1000u}) {
        const auto r = reconstruct_topk(spec, k, {.reference = std::span<const double>(series.values)});
        std::vector<std::size_t> kept(order.begin(), order.begin() + k);
        EXPECT_NEAR(r.residual_energy, omitted_energy(spec, kept), 1e-9 * total) << k;
    }
}

TEST(ReconstructTopk, ResidualEnergyNonIncreasing) {
    const auto series = build_series(Window::make(2, 601), SeriesMode::Indicator);
    const auto spec = dft_fast(series);
    double prev = std::numeric_limits<double>::infinity();
    for (std::size_t k = 1; k <= max_top_k(spec); ++k) {
        const auto r = reconstruct_topk(spec, k, {.reference = std::span<const double>(series.values)});
        EXPECT_LE(r.residual_energy, prev + 1e-9) << k;
        prev = r.residual_energy;
    }
}

TEST(ReconstructTopk, TiesBrokenByAscendingBin) {
    std::vector<double> impulse(16, 0.0);
    impulse[0] = 1.0;
    const auto spec = dft_naive(MangoldtSeries{Window::make(2, 17), SeriesMode::Indicator, impulse, 1});
    auto order = bins_by_amplitude(spec);
    // Amplitudes are all ~1 but not bit-identical; ordering must still be total and stable.
    EXPECT_EQ(order.size(), 8u);
    std::set<std::size_t> uniq(order.begin(), order.end());
    EXPECT_EQ(uniq.size(), 8u);
    Spectrum flat = spec;
    std::fill(flat.amplitudes.begin(), flat.amplitudes.end(), 1.0);
    EXPECT_EQ(bins_by_amplitude(flat), (std::vector<std::size_t>{1, 2, 3, 4, 5, 6, 7, 8}));
}

TEST(StrictSuperposition, RunsWithoutClaims) {
    const auto spec = dft_naive(build_series(Window::make(2, 101), SeriesMode::Indicator));
    const auto peaks = extract_peaks(spec, default_peak_threshold(spec));
    const auto r = strict_superposition(spec, peaks);
    EXPECT_EQ(r.values.size(), spec.n_points);
    for (double v : r.values) EXPECT_TRUE(std::isfinite(v));
}
