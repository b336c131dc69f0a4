// cli.hpp
// Command orchestration for the prime_spectrum tool: builds the series, runs
// the requested analysis and writes CSV / JSON / SVG outputs.
//
// Exit codes: 0 success, 2 usage, 3 capacity, 4 I/O.

#pragma once

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <limits>
#include <numbers>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "primespec/io.hpp"
#include "primespec/primespec.hpp"
#include "primespec/svg.hpp"

namespace primespec::cli {

enum ExitCode : int { kOk = 0, kUsage = 2, kCapacity = 3, kIo = 4 };

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Command { Sieve, Spectrum, Spiral, Reconstruct, Stats };

inline const char* to_string(Command c) {
    switch (c) {
        case Command::Sieve: return "sieve";
        case Command::Spectrum: return "spectrum";
        case Command::Spiral: return "spiral";
        case Command::Reconstruct: return "reconstruct";
        case Command::Stats: return "stats";
    }
    return "?";
}

enum class Format { Csv, Json, Svg };

struct RunConfig {
    Command command = Command::Spectrum;
    Window window{2, 10000};
    SeriesMode mode = SeriesMode::Indicator;
    std::optional<double> threshold;       // default: 0.25 x max non-DC amplitude
    std::optional<std::size_t> top_k;      // empty: all components
    std::uint64_t bucket_width = 1000;
    bool all_bins = false;
    bool strict_eq13 = false;
    double spiral_scale = 1.0;
    std::optional<Window> compare_window;  // spectrum: second window for overlay
    std::optional<std::filesystem::path> from_spectrum;
    std::optional<std::pair<double, double>> plot_range;
    std::optional<double> dirichlet_exponent;
    std::filesystem::path output_dir = ".";
    std::set<Format> formats{Format::Csv, Format::Json, Format::Svg};
    std::uint64_t max_length = 10'000'000;  // window length cap
};

// PRIME_SPECTRUM_MAX_N, when set, overrides the default window length cap.
inline std::uint64_t max_length_from_env(std::uint64_t fallback = 10'000'000) {
    const char* env = std::getenv("PRIME_SPECTRUM_MAX_N");
    if (!env || !*env) return fallback;
    try {
        std::size_t used = 0;
        const auto v = std::stoull(env, &used);
        if (used != std::string(env).size() || v == 0) throw std::invalid_argument(env);
        return v;
    } catch (const std::exception&) {
        throw UsageError(std::string("PRIME_SPECTRUM_MAX_N must be a positive integer, got '") + env + "'");
    }
}

inline std::set<Format> parse_formats(const std::string& list) {
    std::set<Format> out;
    std::size_t pos = 0;
    while (pos <= list.size()) {
        const auto comma = list.find(',', pos);
        const auto tok = list.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (tok == "csv") out.insert(Format::Csv);
        else if (tok == "json") out.insert(Format::Json);
        else if (tok == "svg") out.insert(Format::Svg);
        else throw UsageError("unknown format '" + tok + "' (expected csv, json, svg)");
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (out.empty()) throw UsageError("--format must name at least one of csv, json, svg");
    return out;
}

// "A:B" with A <= B.
inline std::pair<double, double> parse_range(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw UsageError("range '" + text + "' must look like A:B");
    try {
        const double a = std::stod(text.substr(0, colon));
        const double b = std::stod(text.substr(colon + 1));
        if (!(a <= b)) throw UsageError("range '" + text + "' must have A <= B");
        return {a, b};
    } catch (const std::invalid_argument&) {
        throw UsageError("range '" + text + "' must contain numbers");
    }
}

inline Window parse_window_range(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw UsageError("window '" + text + "' must look like START:END");
    try {
        return Window::make(std::stoull(text.substr(0, colon)), std::stoull(text.substr(colon + 1)));
    } catch (const std::invalid_argument& e) {
        throw UsageError("invalid window '" + text + "': " + e.what());
    }
}

namespace detail {

class Writer {
public:
    Writer(const RunConfig& cfg, io::Provenance prov) : cfg_(cfg), prov_(std::move(prov)) {}

    io::Provenance& provenance() { return prov_; }

    void table(const std::string& stem, const io::Table& t) const {
        if (cfg_.formats.contains(Format::Csv)) io::write_csv(cfg_.output_dir / (stem + ".csv"), prov_, t);
        if (cfg_.formats.contains(Format::Json)) io::write_json(cfg_.output_dir / (stem + ".json"), prov_, t);
    }

    void plot(const std::string& stem, const svg::Plot& p) const {
        if (cfg_.formats.contains(Format::Svg)) io::write_text(cfg_.output_dir / (stem + ".svg"), p.render());
    }

private:
    const RunConfig& cfg_;
    io::Provenance prov_;
};

inline std::string window_label(const Window& w) {
    return std::to_string(w.start) + "-" + std::to_string(w.end);
}

inline MangoldtSeries series_for(const RunConfig& cfg, const Window& w) {
    if (w.length() > cfg.max_length)
        throw CapacityError("window length " + std::to_string(w.length()) + " exceeds cap " +
                            std::to_string(cfg.max_length) + " (PRIME_SPECTRUM_MAX_N)");
    return build_series(w, cfg.mode);
}

inline double threshold_for(const RunConfig& cfg, const Spectrum& s) {
    if (cfg.threshold) {
        if (!(*cfg.threshold > 0.0)) throw UsageError("--threshold must be > 0");
        return *cfg.threshold;
    }
    const double t = default_peak_threshold(s);
    return t > 0.0 ? t : std::numeric_limits<double>::min();
}

inline io::Table peaks_table(const PeakSet& peaks) {
    io::Table t{{"bin", "nu", "amplitude", "phase"}, {}};
    for (const auto& p : peaks.entries) t.rows.push_back({std::uint64_t{p.bin}, p.frequency, p.amplitude, p.phase});
    return t;
}

inline void run_sieve(const RunConfig& cfg) {
    const auto series = series_for(cfg, cfg.window);
    Writer out(cfg, {"sieve", cfg.window, cfg.mode, {}});

    io::Table primes{{"n"}, {}};
    for (auto p : sieve_range(cfg.window)) primes.rows.push_back({std::uint64_t{p}});
    out.table("primes", primes);

    io::Table values{{"n", "value"}, {}};
    svg::Series stems;
    stems.stems = true;
    for (std::size_t i = 0; i < series.size(); ++i) {
        const auto n = cfg.window.start + i;
        values.rows.push_back({std::uint64_t{n}, series.values[i]});
        stems.x.push_back(static_cast<double>(n));
        stems.y.push_back(series.values[i]);
    }
    out.table("series", values);

    svg::Plot plot("Modified von Mangoldt series " + window_label(cfg.window), "n", "L(n)");
    plot.add(std::move(stems));
    out.plot("series", plot);
}

inline void run_spectrum(const RunConfig& cfg) {
    const auto spectrum = dft_fast(series_for(cfg, cfg.window));
    const double thr = threshold_for(cfg, spectrum);
    Writer out(cfg, {"spectrum", cfg.window, cfg.mode, {}});
    out.table("spectrum", io::spectrum_table(spectrum));

    out.provenance().extra = {{"threshold", io::format_double(thr)}};
    out.table("peaks", peaks_table(extract_peaks(spectrum, thr)));

    svg::Plot plot("DFT amplitude spectrum", "frequency (cycles/sample)", "|X|");
    svg::Series main{spectrum.freq_grid, spectrum.amplitudes, "#000000", window_label(cfg.window)};
    // DC dominates the scale; plot from bin 1.
    main.x.erase(main.x.begin());
    main.y.erase(main.y.begin());
    plot.add(std::move(main));

    if (cfg.compare_window) {
        const auto other = dft_fast(series_for(cfg, *cfg.compare_window));
        Writer cmp(cfg, {"spectrum", *cfg.compare_window, cfg.mode, {{"role", "compare"}}});
        cmp.table("spectrum_compare", io::spectrum_table(other));
        svg::Series overlay{other.freq_grid, other.amplitudes, "#888888", window_label(*cfg.compare_window), true};
        overlay.x.erase(overlay.x.begin());
        overlay.y.erase(overlay.y.begin());
        plot.add(std::move(overlay));
    }
    out.plot("spectrum", plot);
}

inline void run_spiral(const RunConfig& cfg) {
    if (!(cfg.spiral_scale > 0.0)) throw UsageError("--scale must be > 0");
    const auto spectrum = dft_fast(series_for(cfg, cfg.window));
    const double thr = threshold_for(cfg, spectrum);
    const auto peaks = cfg.all_bins ? all_bins(spectrum) : extract_peaks(spectrum, thr);
    const auto trace = spiral_trace(peaks, cfg.spiral_scale);

    io::Provenance prov{"spiral", cfg.window, cfg.mode,
                        {{"scale", io::format_double(cfg.spiral_scale)},
                         {"source", cfg.all_bins ? "all_bins" : "peaks"}}};
    if (!cfg.all_bins) prov.extra.emplace_back("threshold", io::format_double(thr));
    Writer out(cfg, prov);

    io::Table t{{"t", "f", "x", "y"}, {}};
    svg::Series line;
    for (const auto& p : trace.points) {
        t.rows.push_back({std::uint64_t{p.t}, p.f, p.x, p.y});
        line.x.push_back(p.x);
        line.y.push_back(p.y);
    }
    out.table("spiral", t);

    svg::Plot plot("Fermat spiral of spectral frequencies", "x", "y");
    plot.equal_aspect();
    svg::Series dots = line;
    dots.markers = true;
    dots.marker_radius = 1.5;
    dots.color = "#1f4e9c";
    plot.add(std::move(line)).add(std::move(dots));
    out.plot("spiral", plot);
}

inline void run_reconstruct(const RunConfig& cfg) {
    Spectrum spectrum;
    std::optional<MangoldtSeries> original;
    if (cfg.from_spectrum) {
        spectrum = io::read_spectrum_csv(*cfg.from_spectrum);
        // Residual reference is the sieved series of the recorded window.
        original = series_for(cfg, spectrum.source_window);
        if (original->mode != spectrum.mode) original = build_series(spectrum.source_window, spectrum.mode);
    } else {
        original = series_for(cfg, cfg.window);
        spectrum = dft_fast(*original);
    }
    ReconstructOptions opt;
    if (original) opt.reference = std::span<const double>(original->values);

    Reconstruction rec;
    if (cfg.top_k) {
        if (*cfg.top_k < 1 || *cfg.top_k > max_top_k(spectrum))
            throw UsageError("--top-k must be in [1, " + std::to_string(max_top_k(spectrum)) + "] or 'all'");
        rec = reconstruct_topk(spectrum, *cfg.top_k, opt);
    } else {
        rec = reconstruct_full(spectrum, opt);
    }

    io::Provenance prov{"reconstruct", spectrum.source_window, spectrum.mode,
                        {{"top_k", cfg.top_k ? std::to_string(*cfg.top_k) : "all"},
                         {"components_used", std::to_string(rec.components_used)},
                         {"detected", std::to_string(rec.detected_primes.size())},
                         {"residual", io::format_double(rec.residual)}}};
    Writer out(cfg, prov);

    io::Table t{{"n", "value", "is_detected_prime"}, {}};
    std::size_t d = 0;
    for (std::size_t i = 0; i < rec.values.size(); ++i) {
        const auto n = spectrum.source_window.start + i;
        const bool hit = d < rec.detected_primes.size() && rec.detected_primes[d] == n;
        if (hit) ++d;
        t.rows.push_back({std::uint64_t{n}, rec.values[i], std::uint64_t{hit ? 1u : 0u}});
    }
    out.table("reconstruction", t);

    svg::Plot plot("Reconstruction from " + std::to_string(rec.components_used) + " spectral components",
                   "n", "value");
    svg::Series wave;
    svg::Series circles;
    circles.markers = true;
    circles.color = "#c0392b";
    circles.label = "detected primes";
    for (std::size_t i = 0; i < rec.values.size(); ++i) {
        wave.x.push_back(static_cast<double>(spectrum.source_window.start + i));
        wave.y.push_back(rec.values[i]);
    }
    for (auto p : rec.detected_primes) {
        circles.x.push_back(static_cast<double>(p));
        circles.y.push_back(rec.values[p - spectrum.source_window.start]);
    }
    plot.add(std::move(wave)).add(std::move(circles));
    if (cfg.plot_range) plot.x_range(cfg.plot_range->first, cfg.plot_range->second);
    out.plot("reconstruction", plot);

    if (cfg.strict_eq13) {
        const auto peaks = extract_peaks(spectrum, threshold_for(cfg, spectrum));
        const auto strict = strict_superposition(spectrum, peaks);
        io::Provenance sp{"reconstruct", spectrum.source_window, spectrum.mode,
                          {{"variant", "strict_single_omega"}, {"peaks", std::to_string(peaks.size())}}};
        io::Table st{{"n", "value"}, {}};
        for (std::size_t i = 0; i < strict.values.size(); ++i)
            st.rows.push_back({std::uint64_t{spectrum.source_window.start + i}, strict.values[i]});
        Writer(cfg, sp).table("reconstruction_strict", st);
    }
}

inline std::vector<std::uint64_t> stats_checkpoints(std::uint64_t x_max) {
    std::vector<std::uint64_t> xs;
    for (std::uint64_t x = 1000; x <= x_max; x *= 10) {
        xs.push_back(x);
        if (x > x_max / 10) break;
    }
    if (xs.empty() || xs.back() != x_max) xs.push_back(x_max);
    return xs;
}

inline void run_stats(const RunConfig& cfg) {
    const std::uint64_t x_max = cfg.window.end;
    if (x_max < 3) throw UsageError("stats needs --end >= 3");
    if (cfg.bucket_width < 1 || cfg.bucket_width > x_max)
        throw UsageError("--bucket-width must be in [1, --end]");
    if (x_max - 1 > cfg.max_length)
        throw CapacityError("stats range exceeds cap (PRIME_SPECTRUM_MAX_N)");
    const Window range{2, x_max};
    Writer out(cfg, {"stats", range, cfg.mode, {{"bucket_width", std::to_string(cfg.bucket_width)}}});

    const auto hist = interval_histogram(x_max, cfg.bucket_width);
    io::Table h{{"bucket_start", "count"}, {}};
    svg::Series bars;
    bars.stems = true;
    for (const auto& b : hist.buckets) {
        h.rows.push_back({b.start, b.count});
        bars.x.push_back(static_cast<double>(b.start));
        bars.y.push_back(static_cast<double>(b.count));
    }
    out.table("histogram", h);
    svg::Plot plot("New primes per " + std::to_string(cfg.bucket_width) + "-number interval", "n", "count");
    plot.add(std::move(bars));
    out.plot("histogram", plot);

    io::Table s{{"x", "pi", "psi", "theta", "li", "pnt_ratio", "bound", "li_error"}, {}};
    for (auto x : stats_checkpoints(x_max)) {
        const auto c = compare_psi(x);
        s.rows.push_back({x, c.pi_x, c.psi, theta(x), c.li, pnt_ratio(x), c.bound,
                          c.li - static_cast<double>(c.pi_x)});
    }
    out.table("stats", s);

    if (cfg.dirichlet_exponent) {
        const auto d = dirichlet_partial_sums(x_max, *cfg.dirichlet_exponent);
        io::Table dt{{"terms", "exponent", "zeta_partial", "prime_partial"}, {}};
        dt.rows.push_back({d.terms, d.exponent, d.zeta_partial, d.prime_partial});
        out.table("dirichlet", dt);
    }
}

}  // namespace detail

// Runs one command. Exceptions are mapped to exit codes; messages go to `err`.
inline int run(const RunConfig& cfg, std::ostream& err = std::cerr) {
    try {
        if (cfg.formats.empty()) throw UsageError("no output formats selected");
        std::error_code ec;
        std::filesystem::create_directories(cfg.output_dir, ec);
        if (ec || !std::filesystem::is_directory(cfg.output_dir))
            throw io::IoError("cannot create output directory " + cfg.output_dir.string());
        switch (cfg.command) {
            case Command::Sieve: detail::run_sieve(cfg); break;
            case Command::Spectrum: detail::run_spectrum(cfg); break;
            case Command::Spiral: detail::run_spiral(cfg); break;
            case Command::Reconstruct: detail::run_reconstruct(cfg); break;
            case Command::Stats: detail::run_stats(cfg); break;
        }
        return kOk;
    } catch (const CapacityError& e) {
        err << "capacity error: " << e.what() << "\n";
        return kCapacity;
    } catch (const io::IoError& e) {
        err << "i/o error: " << e.what() << "\n";
        return kIo;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "i/o error: " << e.what() << "\n";
        return kIo;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::domain_error& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    }
}

}  // namespace primespec::cli
