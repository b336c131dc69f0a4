// reconstruct.hpp
// Rebuilds a series from its spectrum as a superposition of cosines with
// per-bin amplitude and phase, then marks primes by thresholding:
//
//   y(i) = (1/N) [ A_0 + 2 sum_l A_l cos(2 pi l i / N + phi_l) + A_{N/2} cos(pi i + phi_{N/2}) ]
//
// where the Nyquist term is present only for even N. With every bin this is
// exactly the inverse DFT; with a subset it is the best L2 approximation
// using those bins.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "primespec/spectral.hpp"
#include "primespec/transform.hpp"

namespace primespec {

struct Reconstruction {
    Window window;
    std::vector<double> values;
    std::vector<std::uint64_t> detected_primes;
    double residual = 0.0;         // max |values - reference|
    double residual_energy = 0.0;  // sum (values - reference)^2
    std::size_t components_used = 0;  // DC plus selected half-spectrum bins
    double detection_threshold = 0.5;
};

enum class ResynthesisMethod { Auto, Direct, Spectral };

struct ReconstructOptions {
    ResynthesisMethod method = ResynthesisMethod::Auto;
    // Auto switches to the spectral route above this many N x bins products.
    std::size_t direct_budget = std::size_t{1} << 28;
    // Series to measure the residual against; defaults to the inverse DFT of the spectrum.
    std::optional<std::span<const double>> reference;
};

// Midpoint between "absent" (0) and the smallest weight a prime can carry:
// 1 for indicator series, ln 2 for log-weighted series.
inline double detection_threshold(SeriesMode mode) {
    return mode == SeriesMode::Indicator ? 0.5 : 0.5 * std::numbers::ln2;
}

// Half-spectrum bins 1..N/2 ordered by descending amplitude, ties by ascending bin.
inline std::vector<std::size_t> bins_by_amplitude(const Spectrum& spectrum) {
    std::vector<std::size_t> bins;
    for (std::size_t l = 1; l <= spectrum.half(); ++l) bins.push_back(l);
    std::stable_sort(bins.begin(), bins.end(), [&](std::size_t a, std::size_t b) {
        if (spectrum.amplitudes[a] != spectrum.amplitudes[b])
            return spectrum.amplitudes[a] > spectrum.amplitudes[b];
        return a < b;
    });
    return bins;
}

// Series-domain energy carried by the bins NOT in `kept` (DC always kept),
// counting mirror bins: (1/N) sum_{omitted l in 0..N-1} |X(l)|^2.
inline double omitted_energy(const Spectrum& spectrum, std::span<const std::size_t> kept) {
    const std::size_t n = spectrum.n_points;
    std::vector<char> keep(n, 0);
    keep[0] = 1;
    for (std::size_t l : kept) {
        keep[l] = 1;
        keep[(n - l) % n] = 1;
    }
    double e = 0.0;
    for (std::size_t l = 0; l < n; ++l)
        if (!keep[l]) e += std::norm(spectrum.coefficients[l]);
    return e / static_cast<double>(n);
}

namespace detail {

inline std::vector<double> resynthesize_direct(const Spectrum& s, std::span<const std::size_t> bins) {
    const std::size_t n = s.n_points;
    std::vector<double> cos_tab(n), sin_tab(n);
    for (std::size_t m = 0; m < n; ++m) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(n);
        cos_tab[m] = std::cos(theta);
        sin_tab[m] = std::sin(theta);
    }
    // Per-bin weight: 2 for interior bins, 1 for the Nyquist bin of even N.
    std::vector<double> ac(bins.size()), as(bins.size());
    for (std::size_t j = 0; j < bins.size(); ++j) {
        const std::size_t l = bins[j];
        const double weight = (2 * l == n) ? 1.0 : 2.0;
        ac[j] = weight * s.amplitudes[l] * std::cos(s.phases[l]);
        as[j] = weight * s.amplitudes[l] * std::sin(s.phases[l]);
    }
    const double dc = s.amplitudes[0] * std::cos(s.phases[0]);
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        double acc = dc;
        for (std::size_t j = 0; j < bins.size(); ++j) {
            const std::size_t m = (static_cast<std::uint64_t>(bins[j]) * i) % n;
            acc += ac[j] * cos_tab[m] - as[j] * sin_tab[m];
        }
        out[i] = acc / static_cast<double>(n);
    }
    return out;
}

// Same superposition, evaluated by placing A e^{i phi} (and its mirror) into an
// otherwise empty spectrum and inverting with the fast transform.
inline std::vector<double> resynthesize_spectral(const Spectrum& s, std::span<const std::size_t> bins) {
    const std::size_t n = s.n_points;
    std::vector<Complex> coeffs(n, Complex{});
    coeffs[0] = std::polar(s.amplitudes[0], s.phases[0]);
    for (std::size_t l : bins) {
        const Complex c = std::polar(s.amplitudes[l], s.phases[l]);
        coeffs[l] = c;
        coeffs[n - l] = std::conj(c);
    }
    const auto z = inverse_dft_complex(coeffs);
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = z[i].real();
    return out;
}

inline Reconstruction finish(const Spectrum& s, std::vector<double> values, std::size_t n_bins,
                             const ReconstructOptions& opt) {
    Reconstruction r;
    r.window = s.source_window;
    r.components_used = 1 + n_bins;
    r.detection_threshold = detection_threshold(s.mode);
    std::vector<double> fallback;
    std::span<const double> ref;
    if (opt.reference) {
        ref = *opt.reference;
        if (ref.size() != values.size())
            throw std::invalid_argument("reference series length does not match the spectrum");
    } else {
        fallback = inverse_dft(s);
        ref = fallback;
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double d = values[i] - ref[i];
        r.residual = std::max(r.residual, std::abs(d));
        r.residual_energy += d * d;
        if (values[i] >= r.detection_threshold) r.detected_primes.push_back(s.source_window.start + i);
    }
    r.values = std::move(values);
    return r;
}

}  // namespace detail

// Resynthesis from DC plus the given half-spectrum bins.
inline Reconstruction reconstruct_bins(const Spectrum& spectrum, std::span<const std::size_t> bins,
                                       const ReconstructOptions& opt = {}) {
    detail::require_points(spectrum.n_points);
    for (std::size_t l : bins)
        if (l < 1 || l > spectrum.half())
            throw std::invalid_argument("bin " + std::to_string(l) + " outside half-spectrum");
    bool direct = opt.method == ResynthesisMethod::Direct;
    if (opt.method == ResynthesisMethod::Auto)
        direct = spectrum.n_points * std::max<std::size_t>(bins.size(), 1) <= opt.direct_budget;
    auto values = direct ? detail::resynthesize_direct(spectrum, bins)
                         : detail::resynthesize_spectral(spectrum, bins);
    return detail::finish(spectrum, std::move(values), bins.size(), opt);
}

inline Reconstruction reconstruct_full(const Spectrum& spectrum, const ReconstructOptions& opt = {}) {
    std::vector<std::size_t> bins;
    for (std::size_t l = 1; l <= spectrum.half(); ++l) bins.push_back(l);
    return reconstruct_bins(spectrum, bins, opt);
}

// Largest valid k for reconstruct_topk: ceil(N/2). For odd N this is one more
// than the number of half-spectrum bins; the extra count selects nothing new.
inline std::size_t max_top_k(const Spectrum& spectrum) { return (spectrum.n_points + 1) / 2; }

inline Reconstruction reconstruct_topk(const Spectrum& spectrum, std::size_t k,
                                       const ReconstructOptions& opt = {}) {
    if (k < 1 || k > max_top_k(spectrum))
        throw std::domain_error("top-k: k=" + std::to_string(k) + " outside [1, " +
                                std::to_string(max_top_k(spectrum)) + "]");
    auto order = bins_by_amplitude(spectrum);
    order.resize(std::min(k, order.size()));
    std::sort(order.begin(), order.end());
    return reconstruct_bins(spectrum, order, opt);
}

// Literal single-omega superposition sum_t A_t sin(f_t + omega n) over the
// given peaks, with f_t = 2 pi nu_t and omega = 2 pi / N unless overridden.
// Inspection only: this does not reproduce the series in general.
inline Reconstruction strict_superposition(const Spectrum& spectrum, const PeakSet& peaks,
                                           std::optional<double> omega = std::nullopt) {
    const std::size_t n = spectrum.n_points;
    const double w = omega.value_or(2.0 * std::numbers::pi / static_cast<double>(n));
    std::vector<double> values(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double acc = 0.0;
        for (const auto& p : peaks.entries)
            acc += p.amplitude * std::sin(2.0 * std::numbers::pi * p.frequency + w * static_cast<double>(i));
        values[i] = acc / static_cast<double>(n);
    }
    return detail::finish(spectrum, std::move(values), peaks.size(), {});
}

}  // namespace primespec
