// transform.hpp
// Discrete Fourier transform of a sampled series.
//
// Convention: X(l) = sum_{k=0}^{N-1} x[k] exp(-2 pi i l k / N), with k counted
// from the window start. The physical offset of the window only contributes a
// linear phase and is not compensated. Forward is unnormalized; the inverse
// carries 1/N. Frequencies are reported in cycles per sample, nu = l / N.
//
// dft_naive is the O(N^2) reference. dft_fast is an iterative radix-2 FFT for
// power-of-two N and a Bluestein chirp-z embedding for every other N.

#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "primespec/sieve.hpp"

namespace primespec {

using Complex = std::complex<double>;

struct Spectrum {
    std::size_t n_points = 0;
    std::vector<Complex> coefficients;
    std::vector<double> freq_grid;   // cycles per sample
    std::vector<double> amplitudes;
    std::vector<double> phases;      // (-pi, pi]
    Window source_window;
    SeriesMode mode = SeriesMode::Indicator;

    // Derives the grid, amplitudes and phases from raw coefficients.
    static Spectrum from_coefficients(std::vector<Complex> coeffs, const Window& window,
                                      SeriesMode mode) {
        Spectrum s;
        s.n_points = coeffs.size();
        s.coefficients = std::move(coeffs);
        s.source_window = window;
        s.mode = mode;
        s.freq_grid.resize(s.n_points);
        s.amplitudes.resize(s.n_points);
        s.phases.resize(s.n_points);
        for (std::size_t l = 0; l < s.n_points; ++l) {
            s.freq_grid[l] = static_cast<double>(l) / static_cast<double>(s.n_points);
            s.amplitudes[l] = std::abs(s.coefficients[l]);
            double phi = std::arg(s.coefficients[l]);
            if (phi == -std::numbers::pi) phi = std::numbers::pi;
            s.phases[l] = phi;
        }
        return s;
    }

    // Highest bin of the positive half-spectrum, floor(N/2).
    std::size_t half() const { return n_points / 2; }
};

struct TransformConfig {
    std::size_t naive_cap = std::size_t{1} << 14;
};

// exp(-2 pi i j / n) for j = 0..n-1. Generated by the rotation recurrence and
// resynchronized to the exact value every 256 steps so drift stays bounded.
inline std::vector<Complex> twiddle_table(std::size_t n, double sign = -1.0) {
    constexpr std::size_t kResync = 256;
    std::vector<Complex> w(n);
    if (n == 0) return w;
    const double step = sign * 2.0 * std::numbers::pi / static_cast<double>(n);
    const Complex rot = std::polar(1.0, step);
    for (std::size_t j = 0; j < n; ++j) {
        if (j % kResync == 0)
            w[j] = std::polar(1.0, step * static_cast<double>(j));
        else
            w[j] = w[j - 1] * rot;
    }
    return w;
}

namespace detail {

inline void require_points(std::size_t n) {
    if (n < 2)
        throw std::invalid_argument("transform needs at least 2 samples, got " + std::to_string(n));
}

// In-place iterative radix-2 FFT, n a power of two. sign = -1 forward.
inline void fft_pow2(std::span<Complex> a, double sign) {
    const std::size_t n = a.size();
    if (n <= 1) return;
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    const auto w = twiddle_table(n, sign);
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t stride = n / len;
        const std::size_t halflen = len / 2;
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t k = 0; k < halflen; ++k) {
                const Complex u = a[i + k];
                const Complex v = a[i + k + halflen] * w[k * stride];
                a[i + k] = u + v;
                a[i + k + halflen] = u - v;
            }
        }
    }
}

// Bluestein: X(l) = conj(c_l) * sum_k (x_k conj(c_k)) c_{l-k}, c_m = exp(i pi m^2 / n),
// evaluated as a power-of-two circular convolution.
inline std::vector<Complex> bluestein(std::span<const Complex> x, double sign) {
    const std::size_t n = x.size();
    const std::size_t m = std::bit_ceil(2 * n - 1);
    const std::uint64_t two_n = 2 * static_cast<std::uint64_t>(n);

    // m^2 mod 2n keeps the chirp argument small and exact.
    std::vector<Complex> chirp(n);
    for (std::size_t k = 0; k < n; ++k) {
        const std::uint64_t k2 = (static_cast<std::uint64_t>(k) * k) % two_n;
        chirp[k] = std::polar(1.0, -sign * std::numbers::pi * static_cast<double>(k2) /
                                       static_cast<double>(n));
    }

    std::vector<Complex> a(m, Complex{}), b(m, Complex{});
    for (std::size_t k = 0; k < n; ++k) a[k] = x[k] * std::conj(chirp[k]);
    b[0] = chirp[0];
    for (std::size_t k = 1; k < n; ++k) b[k] = b[m - k] = chirp[k];

    fft_pow2(a, -1.0);
    fft_pow2(b, -1.0);
    for (std::size_t i = 0; i < m; ++i) a[i] *= b[i];
    fft_pow2(a, +1.0);

    std::vector<Complex> out(n);
    const double scale = 1.0 / static_cast<double>(m);
    for (std::size_t l = 0; l < n; ++l) out[l] = a[l] * scale * std::conj(chirp[l]);
    return out;
}

}  // namespace detail

// Unnormalized transform of arbitrary length. sign = -1 forward, +1 backward.
inline std::vector<Complex> fft(std::span<const Complex> x, double sign = -1.0) {
    if (x.empty()) return {};
    if (std::has_single_bit(x.size())) {
        std::vector<Complex> a(x.begin(), x.end());
        detail::fft_pow2(a, sign);
        return a;
    }
    return detail::bluestein(x, sign);
}

inline Spectrum dft_naive(const MangoldtSeries& series, const TransformConfig& cfg = {}) {
    const std::size_t n = series.size();
    detail::require_points(n);
    if (n > cfg.naive_cap)
        throw CapacityError("dft_naive limited to " + std::to_string(cfg.naive_cap) +
                            " samples (got " + std::to_string(n) + "); use dft_fast");
    const auto w = twiddle_table(n);
    std::vector<Complex> coeffs(n);
    for (std::size_t l = 0; l < n; ++l) {
        Complex acc{};
        std::size_t idx = 0;  // (l * k) mod n
        for (std::size_t k = 0; k < n; ++k) {
            acc += series.values[k] * w[idx];
            idx += l;
            if (idx >= n) idx -= n;
        }
        coeffs[l] = acc;
    }
    // DC bin of a real series is real by construction.
    coeffs[0] = Complex{coeffs[0].real(), 0.0};
    return Spectrum::from_coefficients(std::move(coeffs), series.window, series.mode);
}

inline Spectrum dft_fast(const MangoldtSeries& series) {
    const std::size_t n = series.size();
    detail::require_points(n);
    std::vector<Complex> x(series.values.begin(), series.values.end());
    auto coeffs = fft(x, -1.0);
    double dc = 0.0;
    for (double v : series.values) dc += v;
    coeffs[0] = Complex{dc, 0.0};
    return Spectrum::from_coefficients(std::move(coeffs), series.window, series.mode);
}

// Complex inverse, (1/N) sum_l X(l) exp(+2 pi i l k / N).
inline std::vector<Complex> inverse_dft_complex(std::span<const Complex> coeffs) {
    auto out = fft(coeffs, +1.0);
    const double scale = 1.0 / static_cast<double>(coeffs.size());
    for (auto& v : out) v *= scale;
    return out;
}

// Real part of the inverse transform.
inline std::vector<double> inverse_dft(const Spectrum& spectrum) {
    const auto z = inverse_dft_complex(spectrum.coefficients);
    std::vector<double> out(z.size());
    std::transform(z.begin(), z.end(), out.begin(), [](const Complex& c) { return c.real(); });
    return out;
}

// Direct evaluation of the transform sum at bin l + z N, with the per-sample
// factor exp(-2 pi i z k) evaluated numerically rather than folded away.
// Returns |X(l + zN) - X(l)|.
inline double check_periodicity(const MangoldtSeries& series, std::int64_t z, std::size_t l) {
    const std::size_t n = series.size();
    detail::require_points(n);
    if (l >= n) throw std::invalid_argument("bin index l must be < N");
    if (z < 1) throw std::invalid_argument("period multiple z must be >= 1");
    const auto w = twiddle_table(n);
    Complex base{}, shifted{};
    for (std::size_t k = 0; k < n; ++k) {
        const Complex term = series.values[k] * w[(static_cast<std::uint64_t>(l) * k) % n];
        const Complex wrap =
            std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(z) * static_cast<double>(k));
        base += term;
        shifted += term * wrap;
    }
    return std::abs(shifted - base);
}

}  // namespace primespec
