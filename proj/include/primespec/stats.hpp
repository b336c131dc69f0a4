// stats.hpp
// Prime-counting diagnostics: pi(x), Chebyshev theta/psi, the logarithmic
// integral from 2, the PNT ratio and new-primes-per-interval histograms.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "primespec/sieve.hpp"

namespace primespec {

struct HistogramBucket {
    std::uint64_t start = 0;
    std::uint64_t count = 0;

    friend bool operator==(const HistogramBucket&, const HistogramBucket&) = default;
};

struct IntervalHistogram {
    std::uint64_t bucket_width = 1000;
    std::vector<HistogramBucket> buckets;
};

struct PsiComparison {
    std::uint64_t x = 0;
    double psi = 0.0;
    double li = 0.0;
    std::uint64_t pi_x = 0;
    double bound = 0.0;  // sqrt(x) (ln x)^2
};

namespace detail {

template <typename F>
double simpson_step(const F& f, double lo, double hi, double flo, double fmid, double fhi, double whole,
                    double eps, int depth) {
    const double mid = 0.5 * (lo + hi);
    const double flm = f(0.5 * (lo + mid)), frm = f(0.5 * (mid + hi));
    const double left = (mid - lo) / 6.0 * (flo + 4.0 * flm + fmid);
    const double right = (hi - mid) / 6.0 * (fmid + 4.0 * frm + fhi);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * eps) return left + right + delta / 15.0;
    return simpson_step(f, lo, mid, flo, flm, fmid, left, 0.5 * eps, depth - 1) +
           simpson_step(f, mid, hi, fmid, frm, fhi, right, 0.5 * eps, depth - 1);
}

template <typename F>
double adaptive_simpson(const F& f, double a, double b, double tol, int max_depth) {
    const double fa = f(a), fm = f(0.5 * (a + b)), fb = f(b);
    return simpson_step(f, a, b, fa, fm, fb, (b - a) / 6.0 * (fa + 4.0 * fm + fb), tol, max_depth);
}

}  // namespace detail

// Integral of 1/ln t over [2, x], adaptive Simpson on dyadic pieces
// [2,4], [4,8], ... with tolerance 1e-10 each.
inline double li(double x) {
    if (!(x >= 2.0)) throw std::domain_error("li(x) requires x >= 2");
    const auto inv_log = [](double t) { return 1.0 / std::log(t); };
    double total = 0.0;
    for (double a = 2.0; a < x; a *= 2.0) {
        const double b = std::min(2.0 * a, x);
        total += detail::adaptive_simpson(inv_log, a, b, 1e-10, 48);
    }
    return total;
}

// theta(x): sum of ln p over primes p <= x.
inline double theta(std::uint64_t x, const SieveConfig& cfg = {}) {
    if (x < 2) throw std::domain_error("theta(x) requires x >= 2");
    double sum = 0.0;
    for_each_block(Window{2, x}, cfg, [&](std::uint64_t lo, std::span<const char> is_prime) {
        for (std::size_t i = 0; i < is_prime.size(); ++i)
            if (is_prime[i]) sum += std::log(static_cast<double>(lo + i));
    });
    return sum;
}

// Chebyshev psi(x): sum of the von Mangoldt weights up to x.
inline double psi(std::uint64_t x, const SieveConfig& cfg = {}) {
    if (x < 2) throw std::domain_error("psi(x) requires x >= 2");
    const auto series = build_series(Window{2, x}, SeriesMode::LogWeighted, cfg);
    double sum = 0.0;
    for (double v : series.values) sum += v;
    return sum;
}

// pi(x) ln x / x.
inline double pnt_ratio(std::uint64_t x, const SieveConfig& cfg = {}) {
    if (x < 3) throw std::domain_error("pnt_ratio requires x >= 3");
    const double xd = static_cast<double>(x);
    return static_cast<double>(count_primes(x, cfg)) * std::log(xd) / xd;
}

inline double error_bound(std::uint64_t x) {
    const double xd = static_cast<double>(x);
    const double lx = std::log(xd);
    return std::sqrt(xd) * lx * lx;
}

inline PsiComparison compare_psi(std::uint64_t x, const SieveConfig& cfg = {}) {
    if (x < 2) throw std::domain_error("compare_psi requires x >= 2");
    return PsiComparison{x, psi(x, cfg), li(static_cast<double>(x)), count_primes(x, cfg), error_bound(x)};
}

// Prime counts in [k w, (k+1) w) for every k with (k+1) w <= x_max.
inline IntervalHistogram interval_histogram(std::uint64_t x_max, std::uint64_t width,
                                            const SieveConfig& cfg = {}) {
    if (width < 1) throw std::invalid_argument("bucket width must be >= 1");
    if (x_max < width) throw std::invalid_argument("x_max must be >= bucket width");
    const std::uint64_t n_buckets = x_max / width;
    IntervalHistogram hist{width, {}};
    hist.buckets.reserve(n_buckets);
    for (std::uint64_t k = 0; k < n_buckets; ++k) hist.buckets.push_back({k * width, 0});
    const std::uint64_t last = n_buckets * width - 1;
    if (last < 2) return hist;
    for_each_block(Window{2, last}, cfg, [&](std::uint64_t lo, std::span<const char> is_prime) {
        for (std::size_t i = 0; i < is_prime.size(); ++i)
            if (is_prime[i]) ++hist.buckets[(lo + i) / width].count;
    });
    return hist;
}

// Sliding mean of `span` consecutive bucket counts.
inline std::vector<double> moving_average(const IntervalHistogram& hist, std::size_t span = 10) {
    if (span == 0) throw std::invalid_argument("moving average span must be >= 1");
    std::vector<double> out;
    if (hist.buckets.size() < span) return out;
    double acc = 0.0;
    for (std::size_t i = 0; i < hist.buckets.size(); ++i) {
        acc += static_cast<double>(hist.buckets[i].count);
        if (i >= span) acc -= static_cast<double>(hist.buckets[i - span].count);
        if (i + 1 >= span) out.push_back(acc / static_cast<double>(span));
    }
    return out;
}

struct TrendReport {
    std::size_t strict_rises = 0;   // steps where the average went up at all
    double worst_rise_sigma = 0.0;  // max over i<j of (avg[j]-avg[i]) / sqrt(avg[i]/span)
};

// Measures how far a moving average ever climbs above an earlier value, in
// units of the Poisson standard error of a `span`-bucket mean.
inline TrendReport moving_average_trend(std::span<const double> avg, std::size_t span = 10) {
    TrendReport rep;
    for (std::size_t i = 1; i < avg.size(); ++i)
        if (avg[i] > avg[i - 1]) ++rep.strict_rises;
    for (std::size_t j = 1; j < avg.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            const double sigma = std::sqrt(avg[i] / static_cast<double>(span));
            if (sigma > 0.0) rep.worst_rise_sigma = std::max(rep.worst_rise_sigma, (avg[j] - avg[i]) / sigma);
        }
    }
    return rep;
}

struct DirichletPartialSums {
    std::uint64_t terms = 0;
    double exponent = 0.0;
    double zeta_partial = 0.0;  // sum_{n<=M} n^-a
    double prime_partial = 0.0; // sum_{n<=M} L(n) n^-a, L the prime indicator
};

// Diagnostic comparison of the zeta partial sum against the prime-indicator
// Dirichlet partial sum. The two do not agree; reported without a claim.
inline DirichletPartialSums dirichlet_partial_sums(std::uint64_t terms, double a, const SieveConfig& cfg = {}) {
    if (terms < 2) throw std::invalid_argument("need at least 2 terms");
    if (!(a > 1.0)) throw std::domain_error("Dirichlet exponent must be > 1");
    DirichletPartialSums out{terms, a, 0.0, 0.0};
    for (std::uint64_t n = terms; n >= 1; --n) out.zeta_partial += std::pow(static_cast<double>(n), -a);
    const auto primes = sieve_range(Window{2, terms}, cfg);
    for (auto it = primes.rbegin(); it != primes.rend(); ++it)
        out.prime_partial += std::pow(static_cast<double>(*it), -a);
    return out;
}

}  // namespace primespec
