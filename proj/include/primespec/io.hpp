// io.hpp
// CSV / JSON serialization of result tables, and reading a spectrum back from
// its CSV form. Doubles are written in shortest round-trip form so a CSV
// re-ingested reproduces the in-memory values bit for bit.

#pragma once

#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <variant>
#include <vector>

#include <json.hpp>

#include "primespec/transform.hpp"
#include "primespec/version.hpp"

namespace primespec::io {

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Value = std::variant<std::uint64_t, std::int64_t, double>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Value>> rows;
};

struct Provenance {
    std::string command;
    Window window;
    SeriesMode mode = SeriesMode::Indicator;
    std::vector<std::pair<std::string, std::string>> extra;  // additional key=value pairs
};

inline std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

inline std::string format_value(const Value& v) {
    return std::visit(
        [](auto x) -> std::string {
            if constexpr (std::is_same_v<decltype(x), double>)
                return format_double(x);
            else
                return std::to_string(x);
        },
        v);
}

// "# prime_spectrum 0.1.0 command=spectrum start=2 end=10000 mode=indicator ..."
inline std::string provenance_line(const Provenance& p) {
    std::string s = "# prime_spectrum " + std::string(kVersion) + " command=" + p.command +
                    " start=" + std::to_string(p.window.start) + " end=" + std::to_string(p.window.end) +
                    " mode=" + to_string(p.mode);
    for (const auto& [k, v] : p.extra) s += " " + k + "=" + v;
    return s;
}

inline std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    return out;
}

inline void write_text(const std::filesystem::path& path, std::string_view text) {
    auto out = open_output(path);
    out << text;
    if (!out) throw IoError("failed writing " + path.string());
}

inline std::string to_csv(const Provenance& p, const Table& t) {
    std::string s = provenance_line(p) + "\n";
    for (std::size_t c = 0; c < t.columns.size(); ++c) s += (c ? "," : "") + t.columns[c];
    s += "\n";
    for (const auto& row : t.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) s += ",";
            s += format_value(row[c]);
        }
        s += "\n";
    }
    return s;
}

inline nlohmann::ordered_json to_json(const Provenance& p, const Table& t) {
    nlohmann::ordered_json j;
    j["tool"] = "prime_spectrum";
    j["version"] = kVersion;
    j["command"] = p.command;
    j["window"] = {{"start", p.window.start}, {"end", p.window.end}};
    j["mode"] = to_string(p.mode);
    for (const auto& [k, v] : p.extra) j["parameters"][k] = v;
    j["columns"] = t.columns;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
        nlohmann::ordered_json r;
        for (std::size_t c = 0; c < row.size(); ++c)
            std::visit([&](auto x) { r[t.columns[c]] = x; }, row[c]);
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    return j;
}

inline void write_csv(const std::filesystem::path& path, const Provenance& p, const Table& t) {
    write_text(path, to_csv(p, t));
}

inline void write_json(const std::filesystem::path& path, const Provenance& p, const Table& t) {
    write_text(path, to_json(p, t).dump(2) + "\n");
}

// spectrum(bin,nu,re,im,amplitude,phase)
inline Table spectrum_table(const Spectrum& s) {
    Table t{{"bin", "nu", "re", "im", "amplitude", "phase"}, {}};
    t.rows.reserve(s.n_points);
    for (std::size_t l = 0; l < s.n_points; ++l)
        t.rows.push_back({std::uint64_t{l}, s.freq_grid[l], s.coefficients[l].real(), s.coefficients[l].imag(),
                          s.amplitudes[l], s.phases[l]});
    return t;
}

namespace detail {

inline double parse_double(std::string_view text, const std::string& where) {
    double v = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
        throw IoError("malformed number '" + std::string(text) + "' in " + where);
    return v;
}

inline std::uint64_t parse_uint(std::string_view text, const std::string& where) {
    std::uint64_t v = 0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
        throw IoError("malformed integer '" + std::string(text) + "' in " + where);
    return v;
}

inline std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    for (;;) {
        const auto next = line.find(sep, pos);
        out.push_back(line.substr(pos, next - pos));
        if (next == std::string_view::npos) break;
        pos = next + 1;
    }
    return out;
}

}  // namespace detail

// Parses the key=value tokens of a provenance line.
inline std::map<std::string, std::string> parse_provenance(std::string_view line) {
    std::map<std::string, std::string> kv;
    for (auto tok : detail::split(line, ' ')) {
        const auto eq = tok.find('=');
        if (eq != std::string_view::npos) kv.emplace(tok.substr(0, eq), tok.substr(eq + 1));
    }
    return kv;
}

// Reads a spectrum CSV as written by spectrum_table. Window and mode come
// from the provenance line; amplitude and phase are recomputed from re/im.
inline Spectrum read_spectrum_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    const std::string where = path.string();
    std::string line;
    std::map<std::string, std::string> prov;
    bool header_seen = false;
    std::vector<Complex> coeffs;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line.front() == '#') {
            auto kv = parse_provenance(line);
            prov.insert(kv.begin(), kv.end());
            continue;
        }
        if (!header_seen) {
            if (line != "bin,nu,re,im,amplitude,phase")
                throw IoError("unexpected spectrum header '" + line + "' in " + where);
            header_seen = true;
            continue;
        }
        const auto cells = detail::split(line, ',');
        if (cells.size() != 6) throw IoError("expected 6 columns in " + where + ": " + line);
        const auto bin = detail::parse_uint(cells[0], where);
        if (bin != coeffs.size()) throw IoError("non-consecutive bin " + std::string(cells[0]) + " in " + where);
        coeffs.emplace_back(detail::parse_double(cells[2], where), detail::parse_double(cells[3], where));
    }
    if (!prov.contains("start") || !prov.contains("end"))
        throw IoError("missing provenance window in " + where);
    if (coeffs.size() < 2) throw IoError("spectrum in " + where + " has fewer than 2 bins");
    const auto window = Window::make(detail::parse_uint(prov["start"], where), detail::parse_uint(prov["end"], where));
    if (window.length() != coeffs.size())
        throw IoError("window length does not match bin count in " + where);
    const SeriesMode mode = prov["mode"] == "log" ? SeriesMode::LogWeighted : SeriesMode::Indicator;
    return Spectrum::from_coefficients(std::move(coeffs), window, mode);
}

}  // namespace primespec::io
