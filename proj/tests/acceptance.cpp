// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "primespec/cli.hpp"
#include "primespec/primespec.hpp"

using namespace primespec;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct Criterion {
    int id;
    std::string name;
    double time_limit_s;  // 0: no limit
    std::function<Outcome()> check;
};

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), f, v);
    return buf;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

MangoldtSeries indicator(std::uint64_t a, std::uint64_t b) {
    return build_series(Window::make(a, b), SeriesMode::Indicator);
}

Outcome sieve_oracle() {
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<std::uint64_t> pick(2, 100000);
    for (int i = 0; i < 200; ++i) {
        auto a = pick(rng), b = pick(rng);
        if (a > b) std::swap(a, b);
        if (sieve_range(Window::make(a, b)) != oracle::primes_in(a, b))
            return {false, "mismatch on [" + std::to_string(a) + "," + std::to_string(b) + "]"};
    }
    return {true, "200/200 windows identical"};
}

Outcome dft_oracle() {
    std::string detail;
    bool ok = true;
    for (std::size_t n : {17u, 64u, 1000u, 4096u}) {
        const auto s = indicator(2, 1 + n);
        const auto fast = dft_fast(s), naive = dft_naive(s);
        double d = 0.0;
        for (std::size_t l = 0; l < n; ++l) d = std::max(d, std::abs(fast.coefficients[l] - naive.coefficients[l]));
        ok = ok && d < 1e-6 * static_cast<double>(n);
        detail += "N=" + std::to_string(n) + ":" + fmt("%.2e", d) + " ";
    }
    return {ok, detail + "(tol 1e-6*N)"};
}

Outcome inversion() {
    const auto s = indicator(2, 10001);
    const auto spec = dft_fast(s);
    const auto back = inverse_dft(spec);
    double err = 0.0;
    for (std::size_t i = 0; i < back.size(); ++i) err = std::max(err, std::abs(back[i] - s.values[i]));
    const auto rec = reconstruct_full(spec, {.reference = std::span<const double>(s.values)});
    const auto truth = sieve_range(s.window);
    const bool ok = err < 1e-9 && rec.detected_primes == truth && truth.size() == 1229;
    return {ok, "max err " + fmt("%.2e", err) + " (tol 1e-9), detected " +
                    std::to_string(rec.detected_primes.size()) + "/1229, exact set " +
                    (rec.detected_primes == truth ? "yes" : "no")};
}

Outcome periodicity() {
    const auto s = indicator(2, 1001);
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<std::int64_t> z(1, 5);
    std::uniform_int_distribution<std::size_t> l(0, s.size() - 1);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) worst = std::max(worst, check_periodicity(s, z(rng), l(rng)));
    return {worst < 1e-9, "50 pairs, worst deviation " + fmt("%.2e", worst) + " (tol 1e-9)"};
}

Outcome symmetry() {
    std::string detail;
    bool ok = true;
    for (auto [a, b] : {std::pair<std::uint64_t, std::uint64_t>{2, 10001}, {10200000, 10201000}}) {
        const auto spec = dft_fast(indicator(a, b));
        double worst = 0.0;
        for (std::size_t l = 1; l < spec.n_points; ++l)
            worst = std::max(worst, std::abs(spec.amplitudes[l] - spec.amplitudes[spec.n_points - l]));
        ok = ok && worst < 1e-9;
        detail += "[" + std::to_string(a) + "," + std::to_string(b) + "]:" + fmt("%.2e", worst) + " ";
    }
    return {ok, detail + "(tol 1e-9)"};
}

Outcome spiral() {
    const auto spec = dft_fast(indicator(2, 10001));
    double worst = 0.0;
    std::size_t points = 0;
    bool arc_ok = true;
    for (const auto& peaks : {extract_peaks(spec, default_peak_threshold(spec)), all_bins(spec)}) {
        const auto tr = spiral_trace(peaks, 1.0);
        for (const auto& p : tr.points) {
            worst = std::max(worst, std::abs(std::sqrt(p.x * p.x + p.y * p.y) - tr.scale * p.f));
            ++points;
        }
        const auto arc = cumulative_arc_length(tr);
        for (std::size_t i = 1; i < arc.size(); ++i) arc_ok = arc_ok && arc[i] > arc[i - 1];
    }
    return {worst < 1e-12 && arc_ok, std::to_string(points) + " points, worst |r - a f| " + fmt("%.2e", worst) +
                                         " (tol 1e-12), arc length strictly increasing " + (arc_ok ? "yes" : "no")};
}

Outcome parseval_topk() {
    const auto s = indicator(2, 2001);
    const auto spec = dft_fast(s);
    double total = 0.0;
    for (double v : s.values) total += v * v;
    const auto order = bins_by_amplitude(spec);
    std::string detail;
    bool ok = true;
    for (std::size_t k : {std::size_t{1}, std::size_t{10}, std::size_t{100}, max_top_k(spec)}) {
        const auto r = reconstruct_topk(spec, k, {.reference = std::span<const double>(s.values)});
        const std::vector<std::size_t> kept(order.begin(), order.begin() + std::min(k, order.size()));
        const double omitted = omitted_energy(spec, kept);
        const double scale = omitted > 0.0 ? omitted : total;
        const double rel = std::abs(r.residual_energy - omitted) / scale;
        ok = ok && rel < 1e-9;
        detail += "k=" + std::to_string(k) + ":" + fmt("%.1e", rel) + " ";
    }
    return {ok, detail + "(relative tol 1e-9)"};
}

Outcome desk_statistics() {
    std::string detail;
    bool ok = true;
    double prev_ratio = std::numeric_limits<double>::infinity();
    for (std::uint64_t x : {1000ull, 10000ull, 100000ull, 1000000ull}) {
        const auto pi = count_primes(x);
        const double gap = std::abs(static_cast<double>(pi) - li(static_cast<double>(x)));
        const double ratio = pnt_ratio(x);
        ok = ok && gap < error_bound(x) && ratio < prev_ratio && ratio > 1.0;
        prev_ratio = ratio;
        detail += "x=" + std::to_string(x) + ":|pi-li|=" + fmt("%.1f", gap) + "<" + fmt("%.0f", error_bound(x)) +
                  ",ratio=" + fmt("%.4f", ratio) + " ";
    }
    return {ok, detail};
}

Outcome histogram() {
    const auto h = interval_histogram(1000000, 1000);
    const auto avg = moving_average(h, 10);
    const auto trend = moving_average_trend(avg, 10);
    const bool ok = h.buckets.size() == 1000 && h.buckets.front().count == 168 && trend.worst_rise_sigma <= 3.0;
    return {ok, std::to_string(h.buckets.size()) + " buckets, first=" + std::to_string(h.buckets.front().count) +
                    ", worst moving-average rise " + fmt("%.2f", trend.worst_rise_sigma) +
                    " sigma (tol 3 sigma; strict rises " + std::to_string(trend.strict_rises) + "/" +
                    std::to_string(avg.size() - 1) + ")"};
}

Outcome cli_determinism() {
    const auto root = fs::temp_directory_path() / "primespec_acceptance_cli";
    fs::remove_all(root);
    std::vector<cli::RunConfig> configs;
    auto base = [](cli::Command c, std::uint64_t a, std::uint64_t b) {
        cli::RunConfig cfg;
        cfg.command = c;
        cfg.window = Window::make(a, b);
        return cfg;
    };
    configs.push_back(base(cli::Command::Sieve, 2, 100));
    configs.push_back(base(cli::Command::Spectrum, 2, 10000));
    configs.back().compare_window = Window::make(10200000, 10201000);
    configs.push_back(base(cli::Command::Spiral, 2, 10000));
    configs.push_back(base(cli::Command::Reconstruct, 2, 10000));
    configs.back().plot_range = std::pair{2.0, 30.0};
    configs.back().strict_eq13 = true;
    configs.push_back(base(cli::Command::Stats, 2, 1000000));
    configs.back().dirichlet_exponent = 2.0;

    std::string detail;
    bool ok = true;
    std::size_t compared = 0;
    double slowest = 0.0;
    for (auto cfg : configs) {
        const std::string name = cli::to_string(cfg.command);
        for (const char* run : {"a", "b"}) {
            cfg.output_dir = root / name / run;
            const auto t0 = std::chrono::steady_clock::now();
            if (cli::run(cfg) != cli::kOk) return {false, name + " failed"};
            slowest = std::max(slowest, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
        }
        for (const auto& entry : fs::directory_iterator(root / name / "a")) {
            const auto other = root / name / "b" / entry.path().filename();
            if (!fs::exists(other) || slurp(entry.path()) != slurp(other)) {
                ok = false;
                detail += "differs:" + name + "/" + entry.path().filename().string() + " ";
            }
            ++compared;
        }
    }
    fs::remove_all(root);
    return {ok, std::to_string(compared) + " files byte-identical across runs" +
                    (detail.empty() ? "" : " " + detail) + ", slowest command " + fmt("%.2f", slowest) + " s"};
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "sieve oracle equivalence", 10, sieve_oracle},
        {2, "DFT fast vs naive", 30, dft_oracle},
        {3, "Fourier inversion + full reconstruction [2,10001]", 5, inversion},
        {4, "periodicity X(l+zN)=X(l)", 5, periodicity},
        {5, "conjugate symmetry of both windows", 20, symmetry},
        {6, "spiral polar form and arc length", 1, spiral},
        {7, "Parseval under top-k reconstruction", 5, parseval_topk},
        {8, "pi/li bound and PNT ratio trend", 60, desk_statistics},
        {9, "new-primes-per-1000 histogram", 30, histogram},
        {10, "CLI determinism", 0, cli_determinism},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_time = c.time_limit_s == 0 || secs < c.time_limit_s;
        const bool pass = o.pass && in_time;
        if (!pass) ++failures;
        std::printf("[%s] AC%-2d %-50s %6.2fs%s  %s\n", pass ? "PASS" : "FAIL", c.id, c.name.c_str(), secs,
                    in_time ? "" : " (over time limit)", o.detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
