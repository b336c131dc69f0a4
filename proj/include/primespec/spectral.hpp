// spectral.hpp
// Peak extraction, frequency-grid convergence checks and the Fermat spiral
// trace of a spectrum.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "primespec/transform.hpp"

namespace primespec {

struct Peak {
    std::size_t bin = 0;
    double frequency = 0.0;  // cycles per sample
    double amplitude = 0.0;
    double phase = 0.0;

    friend bool operator==(const Peak&, const Peak&) = default;
};

// Positive half-spectrum bins (1 <= bin <= N/2) with amplitude >= threshold,
// ascending by bin.
struct PeakSet {
    std::vector<Peak> entries;
    double threshold = 0.0;
    std::size_t n_points = 0;
    Window source_window;

    bool empty() const { return entries.empty(); }
    std::size_t size() const { return entries.size(); }
};

struct SpiralPoint {
    std::size_t t = 0;  // position in the trace
    double f = 0.0;     // spiral parameter (radians)
    double x = 0.0;
    double y = 0.0;
};

struct SpiralTrace {
    std::vector<SpiralPoint> points;
    double scale = 1.0;
};

// Largest amplitude over bins 1..N/2, i.e. ignoring DC.
inline double max_nondc_amplitude(const Spectrum& spectrum) {
    double best = 0.0;
    for (std::size_t l = 1; l <= spectrum.half(); ++l) best = std::max(best, spectrum.amplitudes[l]);
    return best;
}

// 0.25 x the largest non-DC amplitude.
inline double default_peak_threshold(const Spectrum& spectrum) {
    return 0.25 * max_nondc_amplitude(spectrum);
}

inline PeakSet extract_peaks(const Spectrum& spectrum, double threshold) {
    if (!(threshold > 0.0))
        throw std::invalid_argument("peak threshold must be > 0");
    PeakSet set{{}, threshold, spectrum.n_points, spectrum.source_window};
    for (std::size_t l = 1; l <= spectrum.half(); ++l) {
        if (spectrum.amplitudes[l] >= threshold)
            set.entries.push_back({l, spectrum.freq_grid[l], spectrum.amplitudes[l], spectrum.phases[l]});
    }
    return set;
}

// Every half-spectrum bin 0..N/2 as a peak entry, threshold 0.
inline PeakSet all_bins(const Spectrum& spectrum) {
    PeakSet set{{}, 0.0, spectrum.n_points, spectrum.source_window};
    for (std::size_t l = 0; l <= spectrum.half(); ++l)
        set.entries.push_back({l, spectrum.freq_grid[l], spectrum.amplitudes[l], spectrum.phases[l]});
    return set;
}

// f_{t+1} / f_t on the uniform grid of an N-point spectrum; equals (t+1)/t
// and tends to 1 as t approaches N/2.
inline double ratio_convergence(std::size_t n_points, std::size_t t) {
    if (t < 1 || t + 1 > n_points / 2)
        throw std::domain_error("ratio_convergence: t=" + std::to_string(t) +
                                " outside [1, N/2 - 1] for N=" + std::to_string(n_points));
    return static_cast<double>(t + 1) / static_cast<double>(t);
}

inline double ratio_convergence(const Spectrum& spectrum, std::size_t t) {
    return ratio_convergence(spectrum.n_points, t);
}

inline double ratio_convergence(const PeakSet& peaks, std::size_t t) {
    return ratio_convergence(peaks.n_points, t);
}

// 1 / f_t = N / t in samples. At t = N/2 this is 2 (Nyquist), at t = N it is 1.
inline double reciprocal_convergence(std::size_t t, std::size_t n_points) {
    if (t == 0) throw std::domain_error("reciprocal_convergence: 1/f_0 is undefined");
    if (t > n_points)
        throw std::domain_error("reciprocal_convergence: t=" + std::to_string(t) + " exceeds N=" +
                                std::to_string(n_points));
    return static_cast<double>(n_points) / static_cast<double>(t);
}

// x = a f cos f, y = a f sin f for each parameter value.
inline SpiralTrace spiral_from_parameters(const std::vector<double>& params, double a = 1.0) {
    if (!(a > 0.0)) throw std::invalid_argument("spiral scale a must be > 0");
    SpiralTrace trace{{}, a};
    trace.points.reserve(params.size());
    for (std::size_t t = 0; t < params.size(); ++t) {
        const double f = params[t];
        const double r = a * f;
        trace.points.push_back({t, f, r * std::cos(f), r * std::sin(f)});
    }
    return trace;
}

// Spiral over peak frequencies; the bin index is the spiral parameter.
inline SpiralTrace spiral_trace(const PeakSet& peaks, double a = 1.0) {
    std::vector<double> params;
    params.reserve(peaks.size());
    for (const auto& p : peaks.entries) params.push_back(static_cast<double>(p.bin));
    return spiral_from_parameters(params, a);
}

// Cumulative polyline length along the trace, starting at 0 for the first point.
inline std::vector<double> cumulative_arc_length(const SpiralTrace& trace) {
    std::vector<double> out(trace.points.size(), 0.0);
    for (std::size_t i = 1; i < trace.points.size(); ++i) {
        const auto& p = trace.points[i - 1];
        const auto& q = trace.points[i];
        out[i] = out[i - 1] + std::hypot(q.x - p.x, q.y - p.y);
    }
    return out;
}

}  // namespace primespec
