// svg.hpp
// Minimal self-contained SVG 1.1 line/marker plots. Coordinates are printed
// with fixed precision so output is byte-stable across runs.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <vector>

#include "primespec/version.hpp"

namespace primespec::svg {

struct Series {
    std::vector<double> x;
    std::vector<double> y;
    std::string color = "#000000";
    std::string label;
    bool dashed = false;
    bool markers = false;   // circles instead of a polyline
    bool stems = false;     // vertical lines from y=0
    double marker_radius = 3.0;
};

class Plot {
public:
    Plot(std::string title, std::string x_label, std::string y_label)
        : title_(std::move(title)), x_label_(std::move(x_label)), y_label_(std::move(y_label)) {}

    Plot& add(Series s) {
        series_.push_back(std::move(s));
        return *this;
    }

    Plot& x_range(double lo, double hi) {
        x_lo_ = lo;
        x_hi_ = hi;
        fixed_x_ = true;
        return *this;
    }

    Plot& equal_aspect(bool on = true) {
        equal_aspect_ = on;
        return *this;
    }

    std::string render() const;

private:
    static std::string num(double v) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.2f", v);
        return buf;
    }

    static std::string tick(double v) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.4g", v);
        return buf;
    }

    static std::string escape(const std::string& s) {
        std::string out;
        for (char c : s) {
            switch (c) {
                case '&': out += "&amp;"; break;
                case '<': out += "&lt;"; break;
                case '>': out += "&gt;"; break;
                case '"': out += "&quot;"; break;
                default: out += c;
            }
        }
        return out;
    }

    std::string title_, x_label_, y_label_;
    std::vector<Series> series_;
    double x_lo_ = 0.0, x_hi_ = 1.0;
    bool fixed_x_ = false;
    bool equal_aspect_ = false;
    int width_ = 900, height_ = 500;
};

inline std::string Plot::render() const {
    constexpr double left = 70, right = 20, top = 40, bottom = 50;
    const double pw = width_ - left - right, ph = height_ - top - bottom;

    double xlo = x_lo_, xhi = x_hi_;
    double ylo = std::numeric_limits<double>::infinity(), yhi = -ylo;
    if (!fixed_x_) {
        xlo = std::numeric_limits<double>::infinity();
        xhi = -xlo;
    }
    for (const auto& s : series_) {
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (!fixed_x_) {
                xlo = std::min(xlo, s.x[i]);
                xhi = std::max(xhi, s.x[i]);
            } else if (s.x[i] < xlo || s.x[i] > xhi) {
                continue;
            }
            ylo = std::min(ylo, s.y[i]);
            yhi = std::max(yhi, s.y[i]);
        }
        if (s.stems) ylo = std::min(ylo, 0.0);
    }
    if (!std::isfinite(xlo) || !std::isfinite(xhi)) xlo = 0, xhi = 1;
    if (!std::isfinite(ylo) || !std::isfinite(yhi)) ylo = 0, yhi = 1;
    if (xhi == xlo) xhi = xlo + 1;
    if (yhi == ylo) yhi = ylo + 1;
    const double pad = 0.05 * (yhi - ylo);
    ylo = ylo >= 0.0 ? std::max(0.0, ylo - pad) : ylo - pad;
    yhi += pad;
    if (equal_aspect_) {
        const double span = std::max((xhi - xlo) / pw, (yhi - ylo) / ph);
        const double cx = 0.5 * (xlo + xhi), cy = 0.5 * (ylo + yhi);
        xlo = cx - 0.5 * span * pw;
        xhi = cx + 0.5 * span * pw;
        ylo = cy - 0.5 * span * ph;
        yhi = cy + 0.5 * span * ph;
    }
    const auto px = [&](double x) { return left + (x - xlo) / (xhi - xlo) * pw; };
    const auto py = [&](double y) { return top + (yhi - y) / (yhi - ylo) * ph; };

    std::string s;
    s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s += "<!-- prime_spectrum " + std::string(kVersion) + " -->\n";
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + std::to_string(width_) +
         "\" height=\"" + std::to_string(height_) + "\" viewBox=\"0 0 " + std::to_string(width_) + " " +
         std::to_string(height_) + "\">\n";
    s += "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
    s += "<text x=\"" + num(width_ / 2.0) + "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"16\">" + escape(title_) + "</text>\n";
    s += "<rect x=\"" + num(left) + "\" y=\"" + num(top) + "\" width=\"" + num(pw) + "\" height=\"" + num(ph) +
         "\" fill=\"none\" stroke=\"#444444\"/>\n";

    // Axis ticks.
    for (int i = 0; i <= 5; ++i) {
        const double xv = xlo + (xhi - xlo) * i / 5.0;
        const double yv = ylo + (yhi - ylo) * i / 5.0;
        s += "<text x=\"" + num(px(xv)) + "\" y=\"" + num(top + ph + 16) +
             "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" + tick(xv) + "</text>\n";
        s += "<text x=\"" + num(left - 6) + "\" y=\"" + num(py(yv) + 4) +
             "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" + tick(yv) + "</text>\n";
    }
    s += "<text x=\"" + num(left + pw / 2) + "\" y=\"" + num(height_ - 10.0) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" + escape(x_label_) + "</text>\n";
    s += "<text x=\"16\" y=\"" + num(top + ph / 2) + "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"13\" transform=\"rotate(-90 16 " + num(top + ph / 2) + ")\">" + escape(y_label_) + "</text>\n";

    s += "<svg x=\"" + num(left) + "\" y=\"" + num(top) + "\" width=\"" + num(pw) + "\" height=\"" + num(ph) +
         "\" viewBox=\"" + num(left) + " " + num(top) + " " + num(pw) + " " + num(ph) + "\" overflow=\"hidden\">\n";
    for (const auto& ser : series_) {
        const std::string dash = ser.dashed ? " stroke-dasharray=\"3,3\"" : "";
        if (ser.markers) {
            for (std::size_t i = 0; i < ser.x.size(); ++i) {
                if (fixed_x_ && (ser.x[i] < xlo || ser.x[i] > xhi)) continue;
                s += "<circle cx=\"" + num(px(ser.x[i])) + "\" cy=\"" + num(py(ser.y[i])) + "\" r=\"" +
                     num(ser.marker_radius) + "\" fill=\"none\" stroke=\"" + ser.color + "\"/>\n";
            }
        } else if (ser.stems) {
            s += "<path fill=\"none\" stroke=\"" + ser.color + "\" stroke-width=\"1\"" + dash + " d=\"";
            for (std::size_t i = 0; i < ser.x.size(); ++i) {
                if (fixed_x_ && (ser.x[i] < xlo || ser.x[i] > xhi)) continue;
                s += "M" + num(px(ser.x[i])) + " " + num(py(0.0)) + "V" + num(py(ser.y[i]));
            }
            s += "\"/>\n";
        } else {
            s += "<polyline fill=\"none\" stroke=\"" + ser.color + "\" stroke-width=\"1\"" + dash + " points=\"";
            for (std::size_t i = 0; i < ser.x.size(); ++i) {
                if (fixed_x_ && (ser.x[i] < xlo || ser.x[i] > xhi)) continue;
                s += num(px(ser.x[i])) + "," + num(py(ser.y[i])) + " ";
            }
            s += "\"/>\n";
        }
    }
    s += "</svg>\n";

    // Legend.
    double ly = top + 14;
    for (const auto& ser : series_) {
        if (ser.label.empty()) continue;
        s += "<text x=\"" + num(left + pw - 8) + "\" y=\"" + num(ly) +
             "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\" fill=\"" + ser.color + "\">" +
             escape(ser.label) + "</text>\n";
        ly += 14;
    }
    s += "</svg>\n";
    return s;
}

}  // namespace primespec::svg
