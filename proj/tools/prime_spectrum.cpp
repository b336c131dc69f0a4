// prime_spectrum: sieve, spectrum, spiral, reconstruct and stats over integer
// windows of the (modified) von Mangoldt series.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "primespec/cli.hpp"

namespace {

using primespec::cli::Command;
using primespec::cli::RunConfig;

struct RawFlags {
    std::uint64_t start = 2;
    std::uint64_t end = 10000;
    std::string mode = "indicator";
    std::string out = ".";
    std::string format = "csv,json,svg";
    std::optional<double> threshold;
    std::string top_k = "all";
    std::uint64_t bucket_width = 1000;
    bool all_bins = false;
    bool strict_eq13 = false;
    double scale = 1.0;
    std::string compare;
    std::string from_spectrum;
    std::string plot_range;
    std::optional<double> dirichlet;
};

RunConfig to_config(Command command, const RawFlags& f) {
    namespace cli = primespec::cli;
    RunConfig cfg;
    cfg.command = command;
    try {
        cfg.window = primespec::Window::make(f.start, f.end);
    } catch (const std::invalid_argument& e) {
        throw cli::UsageError(e.what());
    }
    cfg.mode = f.mode == "log" ? primespec::SeriesMode::LogWeighted : primespec::SeriesMode::Indicator;
    cfg.output_dir = f.out;
    cfg.formats = cli::parse_formats(f.format);
    cfg.threshold = f.threshold;
    if (f.top_k != "all") {
        try {
            std::size_t used = 0;
            const long long k = std::stoll(f.top_k, &used);
            if (used != f.top_k.size() || k < 1) throw std::invalid_argument(f.top_k);
            cfg.top_k = static_cast<std::size_t>(k);
        } catch (const std::exception&) {
            throw cli::UsageError("--top-k must be a positive integer or 'all', got '" + f.top_k + "'");
        }
    }
    cfg.bucket_width = f.bucket_width;
    cfg.all_bins = f.all_bins;
    cfg.strict_eq13 = f.strict_eq13;
    cfg.spiral_scale = f.scale;
    if (!f.compare.empty()) cfg.compare_window = cli::parse_window_range(f.compare);
    if (!f.from_spectrum.empty()) cfg.from_spectrum = f.from_spectrum;
    if (!f.plot_range.empty()) cfg.plot_range = cli::parse_range(f.plot_range);
    cfg.dirichlet_exponent = f.dirichlet;
    cfg.max_length = cli::max_length_from_env();
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Prime-indicator series, DFT spectra and prime-counting statistics"};
    app.set_version_flag("--version", std::string(primespec::kVersion));
    app.set_config("--config", "", "TOML/INI file with default flag values (flags override it)");
    app.require_subcommand(1);
    app.fallthrough();

    RawFlags f;
    app.add_option("--start", f.start, "First integer of the window (>= 2)")->capture_default_str();
    app.add_option("--end", f.end, "Last integer of the window (inclusive); x_max for stats")->capture_default_str();
    app.add_option("--mode", f.mode, "Series weights: indicator (1 at primes) or log (ln p at prime powers)")
        ->check(CLI::IsMember({"indicator", "log"}))
        ->capture_default_str();
    app.add_option("--out", f.out, "Output directory")->capture_default_str();
    app.add_option("--format", f.format, "Comma-separated subset of csv,json,svg")->capture_default_str();
    app.add_option("--threshold", f.threshold, "Peak amplitude threshold (default 0.25 x max non-DC amplitude)");
    app.add_option("--top-k", f.top_k, "Reconstruct from DC plus the k strongest bins, or 'all'")
        ->capture_default_str();
    app.add_option("--bucket-width", f.bucket_width, "Histogram bucket width")->capture_default_str();
    app.add_flag("--all-bins", f.all_bins, "Spiral over every half-spectrum bin instead of peaks");
    app.add_flag("--strict-eq13", f.strict_eq13,
                 "Also write the literal single-omega superposition (inspection only)");

    auto* sieve = app.add_subcommand("sieve", "Primes and series values over the window");
    auto* spectrum = app.add_subcommand("spectrum", "DFT amplitude/phase spectrum and peaks");
    spectrum->add_option("--compare", f.compare, "Second window START:END overlaid on the plot");
    auto* spiral = app.add_subcommand("spiral", "Fermat spiral of the spectral frequencies");
    spiral->add_option("--scale", f.scale, "Spiral scale a in r = a f")->capture_default_str();
    auto* reconstruct = app.add_subcommand("reconstruct", "Rebuild the series from spectral components");
    reconstruct->add_option("--from-spectrum", f.from_spectrum, "Read coefficients from a spectrum.csv")
        ->check(CLI::ExistingFile);
    reconstruct->add_option("--plot-range", f.plot_range, "Restrict the plot to n in A:B");
    auto* stats = app.add_subcommand("stats", "pi/psi/li statistics and the new-primes histogram");
    stats->add_option("--dirichlet", f.dirichlet, "Also compare Dirichlet partial sums at this exponent (> 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : primespec::cli::kUsage;
    }

    Command command = Command::Spectrum;
    if (sieve->parsed()) command = Command::Sieve;
    else if (spectrum->parsed()) command = Command::Spectrum;
    else if (spiral->parsed()) command = Command::Spiral;
    else if (reconstruct->parsed()) command = Command::Reconstruct;
    else if (stats->parsed()) command = Command::Stats;

    RunConfig cfg;
    try {
        cfg = to_config(command, f);
    } catch (const primespec::cli::UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return primespec::cli::kUsage;
    }
    return primespec::cli::run(cfg);
}
