// sieve.hpp
// Segmented sieve of Eratosthenes over arbitrary integer windows and the
// (modified) von Mangoldt series built on top of it.
//
// Memory per call is one block of `block_size` bytes plus the base primes
// up to sqrt(end), so windows far from the origin (start ~ 1e7 and beyond)
// cost the same as windows near 2.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace primespec {

// Raised when a window exceeds the configured numeric or length bounds.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Inclusive integer window [start, end], start >= 2.
struct Window {
    std::uint64_t start = 2;
    std::uint64_t end = 2;

    static Window make(std::uint64_t start, std::uint64_t end) {
        if (start < 2)
            throw std::invalid_argument("window start must be >= 2, got " + std::to_string(start));
        if (end < start)
            throw std::invalid_argument("window end (" + std::to_string(end) +
                                        ") must be >= start (" + std::to_string(start) + ")");
        return Window{start, end};
    }

    std::size_t length() const { return static_cast<std::size_t>(end - start + 1); }
    bool contains(std::uint64_t n) const { return n >= start && n <= end; }

    friend bool operator==(const Window&, const Window&) = default;
};

enum class SeriesMode { Indicator, LogWeighted };

inline const char* to_string(SeriesMode mode) {
    return mode == SeriesMode::Indicator ? "indicator" : "log";
}

struct SieveConfig {
    std::uint64_t max_value = static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max());
    std::size_t block_size = std::size_t{1} << 16;
};

// Sampled series over a window, one value per integer, unit sampling step.
struct MangoldtSeries {
    Window window;
    SeriesMode mode = SeriesMode::Indicator;
    std::vector<double> values;
    std::uint64_t delta = 1;

    std::size_t size() const { return values.size(); }
    std::span<const double> view() const { return values; }
};

namespace detail {

inline std::uint64_t isqrt(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r > n / r) --r;
    while ((r + 1) <= n / (r + 1)) ++r;
    return r;
}

inline void check_capacity(const Window& w, const SieveConfig& cfg) {
    if (w.end > cfg.max_value)
        throw CapacityError("window end " + std::to_string(w.end) +
                            " exceeds configured maximum " + std::to_string(cfg.max_value));
    if (cfg.block_size == 0)
        throw std::invalid_argument("sieve block size must be positive");
}

}  // namespace detail

// Primes <= limit by a plain sieve; used for the base primes of the segmented sieve.
inline std::vector<std::uint64_t> small_primes(std::uint64_t limit) {
    std::vector<std::uint64_t> primes;
    if (limit < 2) return primes;
    std::vector<char> composite(limit + 1, 0);
    for (std::uint64_t i = 2; i * i <= limit; ++i)
        if (!composite[i])
            for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = 1;
    for (std::uint64_t i = 2; i <= limit; ++i)
        if (!composite[i]) primes.push_back(i);
    return primes;
}

// Calls visit(block_start, is_prime) for consecutive blocks covering the
// window, in ascending order. is_prime[i] refers to block_start + i.
template <typename Visitor>
void for_each_block(const Window& window, const SieveConfig& cfg, Visitor&& visit) {
    detail::check_capacity(window, cfg);
    const auto base = small_primes(detail::isqrt(window.end));
    std::vector<char> is_prime;
    std::uint64_t lo = window.start;
    for (;;) {
        const std::uint64_t span_len = std::min<std::uint64_t>(cfg.block_size, window.end - lo);
        const std::uint64_t hi = lo + span_len;
        is_prime.assign(span_len + 1, 1);
        for (std::uint64_t p : base) {
            if (p > hi / p) break;
            std::uint64_t first = std::max(p * p, (lo + p - 1) / p * p);
            for (std::uint64_t m = first; m <= hi; m += p) {
                is_prime[m - lo] = 0;
                if (m > hi - p) break;
            }
        }
        visit(lo, std::span<const char>(is_prime));
        if (hi == window.end) break;
        lo = hi + 1;
    }
}

// Ascending primes p with start <= p <= end.
inline std::vector<std::uint64_t> sieve_range(const Window& window, const SieveConfig& cfg = {}) {
    std::vector<std::uint64_t> primes;
    for_each_block(window, cfg, [&](std::uint64_t lo, std::span<const char> is_prime) {
        for (std::size_t i = 0; i < is_prime.size(); ++i)
            if (is_prime[i]) primes.push_back(lo + i);
    });
    return primes;
}

// pi(x): number of primes <= x.
inline std::uint64_t count_primes(std::uint64_t x, const SieveConfig& cfg = {}) {
    if (x < 2) throw std::invalid_argument("count_primes requires x >= 2");
    std::uint64_t count = 0;
    for_each_block(Window{2, x}, cfg, [&](std::uint64_t, std::span<const char> is_prime) {
        count += static_cast<std::uint64_t>(std::count(is_prime.begin(), is_prime.end(), 1));
    });
    return count;
}

// Indicator: 1 at primes, 0 elsewhere. LogWeighted: ln p at every prime
// power p^k (k >= 1), 0 elsewhere.
inline MangoldtSeries build_series(const Window& window, SeriesMode mode, const SieveConfig& cfg = {}) {
    MangoldtSeries series{window, mode, std::vector<double>(window.length(), 0.0), 1};
    for_each_block(window, cfg, [&](std::uint64_t lo, std::span<const char> is_prime) {
        const std::size_t offset = lo - window.start;
        for (std::size_t i = 0; i < is_prime.size(); ++i) {
            if (!is_prime[i]) continue;
            series.values[offset + i] =
                mode == SeriesMode::Indicator ? 1.0 : std::log(static_cast<double>(lo + i));
        }
    });
    if (mode == SeriesMode::LogWeighted) {
        // Higher powers p^k, k >= 2, need p <= sqrt(end).
        for (std::uint64_t p : small_primes(detail::isqrt(window.end))) {
            const double weight = std::log(static_cast<double>(p));
            for (std::uint64_t q = p * p;; q *= p) {
                if (q >= window.start) series.values[q - window.start] = weight;
                if (q > window.end / p) break;
            }
        }
    }
    return series;
}

}  // namespace primespec
