// Copyright 2026 The infolab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// CSV tables and minimal SVG line charts for sweeps and conservation runs.
// All numeric text goes through snprintf with fixed formats, so output is
// byte-identical for identical inputs.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "infolab/efficiency.hpp"
#include "infolab/infospace.hpp"

namespace infolab::report {

/// Largest tolerated row-identity violation before a table is written.
inline constexpr double kSelfCheckTol = 1e-12;

/// 12 significant digits, as used in every CSV cell.
inline std::string csv_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v == 0.0 ? 0.0 : v);
    return buf;
}

/// Fixed-point with `precision` decimals, trailing zeros dropped but at least
/// one decimal kept: 1 -> "1.0", 0.29449493 -> "0.294495" at precision 6.
inline std::string display_number(double v, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", precision, v);
    std::string s = buf;
    if (const auto dot = s.find('.'); dot != std::string::npos) {
        while (s.size() > dot + 2 && s.back() == '0') s.pop_back();
    }
    if (s.find_first_not_of("-0.") == std::string::npos && s.front() == '-') s.erase(0, 1);
    return s;
}

inline void write_sweep_csv(std::ostream& os, const SweepTable& table) {
    if (sweep_self_check(table) > kSelfCheckTol) throw std::runtime_error("sweep failed its row self-check");
    os << "eta,I1,I2,I3,I_total,ratio,Hx,Hy,Hz\n";
    for (const SweepRow& r : table.rows) {
        os << csv_number(r.eta) << ',' << csv_number(r.i1) << ',' << csv_number(r.i2) << ',' << csv_number(r.i3)
           << ',' << csv_number(r.i_total) << ',' << csv_number(r.ratio) << ',' << csv_number(r.hx) << ','
           << csv_number(r.hy) << ',' << csv_number(r.hz) << '\n';
    }
}

inline void write_conservation_csv(std::ostream& os, const ConservationReport& rep) {
    os << "t,i1,i2,i3,I_total\n";
    for (std::size_t k = 0; k < rep.times.size(); ++k) {
        const InfoVector& iv = rep.info_vectors[k];
        os << csv_number(rep.times[k]) << ',' << csv_number(iv[0]) << ',' << csv_number(iv[1]) << ','
           << csv_number(iv[2]) << ',' << csv_number(rep.i_total_values[k]) << '\n';
    }
}

struct Series {
    std::string label;
    std::string color;
    std::vector<double> x, y;
};

struct Marker {
    double x, y;
    std::string label;
};

struct Chart {
    std::string title, x_label, y_label;
    double x_min = 0, x_max = 1, y_min = 0, y_max = 1;
    std::vector<Series> series;
    std::vector<double> h_lines; ///< dashed horizontal references
    std::vector<double> v_lines; ///< dashed vertical references
    std::vector<Marker> markers;
};

namespace detail {

inline std::string fmt(const char* f, double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

} // namespace detail

inline std::string render_svg(const Chart& c) {
    constexpr double W = 640, H = 420, L = 70, R = 20, T = 40, B = 60;
    const auto px = [&](double x) { return L + (x - c.x_min) / (c.x_max - c.x_min) * (W - L - R); };
    const auto py = [&](double y) { return H - B - (y - c.y_min) / (c.y_max - c.y_min) * (H - T - B); };
    const auto p = [](double v) { return detail::fmt("%.2f", v); };

    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"420\" viewBox=\"0 0 640 420\">\n";
    s << "<rect width=\"640\" height=\"420\" fill=\"white\"/>\n";
    s << "<text x=\"320\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"15\">" << c.title
      << "</text>\n";
    // axes
    s << "<line x1=\"" << p(L) << "\" y1=\"" << p(H - B) << "\" x2=\"" << p(W - R) << "\" y2=\"" << p(H - B)
      << "\" stroke=\"black\"/>\n";
    s << "<line x1=\"" << p(L) << "\" y1=\"" << p(T) << "\" x2=\"" << p(L) << "\" y2=\"" << p(H - B)
      << "\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 5; ++i) {
        const double xv = c.x_min + (c.x_max - c.x_min) * i / 5.0;
        const double yv = c.y_min + (c.y_max - c.y_min) * i / 5.0;
        s << "<text x=\"" << p(px(xv)) << "\" y=\"" << p(H - B + 18)
          << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" << detail::fmt("%.1f", xv)
          << "</text>\n";
        s << "<text x=\"" << p(L - 8) << "\" y=\"" << p(py(yv) + 4)
          << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << detail::fmt("%.2f", yv)
          << "</text>\n";
    }
    s << "<text x=\"" << p((L + W - R) / 2) << "\" y=\"" << p(H - 18)
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" << c.x_label << "</text>\n";
    s << "<text x=\"18\" y=\"" << p((T + H - B) / 2) << "\" transform=\"rotate(-90 18 " << p((T + H - B) / 2)
      << ")\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" << c.y_label << "</text>\n";

    for (double y : c.h_lines)
        s << "<line x1=\"" << p(L) << "\" y1=\"" << p(py(y)) << "\" x2=\"" << p(W - R) << "\" y2=\"" << p(py(y))
          << "\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n";
    for (double x : c.v_lines)
        s << "<line x1=\"" << p(px(x)) << "\" y1=\"" << p(T) << "\" x2=\"" << p(px(x)) << "\" y2=\"" << p(H - B)
          << "\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n";

    double legend_y = T + 10;
    for (const Series& ser : c.series) {
        s << "<polyline fill=\"none\" stroke=\"" << ser.color << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < ser.x.size(); ++i) s << (i ? " " : "") << p(px(ser.x[i])) << ',' << p(py(ser.y[i]));
        s << "\"/>\n";
        s << "<text x=\"" << p(W - R - 10) << "\" y=\"" << p(legend_y) << "\" text-anchor=\"end\" fill=\""
          << ser.color << "\" font-family=\"sans-serif\" font-size=\"12\">" << ser.label << "</text>\n";
        legend_y += 16;
    }
    for (const Marker& m : c.markers) {
        s << "<circle cx=\"" << p(px(m.x)) << "\" cy=\"" << p(py(m.y)) << "\" r=\"3.5\" fill=\"black\"/>\n";
        s << "<text x=\"" << p(px(m.x) + 6) << "\" y=\"" << p(py(m.y) - 6)
          << "\" font-family=\"sans-serif\" font-size=\"11\">" << m.label << "</text>\n";
    }
    s << "</svg>\n";
    return s.str();
}

inline constexpr std::size_t kFigurePoints = 201;

inline void write_fig1_csv(std::ostream& os, const SweepTable& t) {
    os << "eta,I_total,ratio\n";
    for (const SweepRow& r : t.rows) os << csv_number(r.eta) << ',' << csv_number(r.i_total) << ',' << csv_number(r.ratio) << '\n';
}

inline void write_fig2_csv(std::ostream& os, const SweepTable& t) {
    os << "eta,Hx,Hy,Hz\n";
    for (const SweepRow& r : t.rows)
        os << csv_number(r.eta) << ',' << csv_number(r.hx) << ',' << csv_number(r.hy) << ',' << csv_number(r.hz) << '\n';
}

/// I_total / log2(3) against eta, reference line at 1, threshold markers.
inline Chart fig1_chart(const SweepTable& t) {
    Chart c;
    c.title = "Total quadratic information relative to log2(3)";
    c.x_label = "efficiency eta";
    c.y_label = "I_total / k";
    c.y_max = 3.0;
    Series s{"I_total / k", "#1f5fbf", {}, {}};
    for (const SweepRow& r : t.rows) {
        s.x.push_back(r.eta);
        s.y.push_back(r.ratio);
    }
    c.series.push_back(std::move(s));
    c.h_lines = {1.0};
    const auto [lo, hi] = thresholds();
    c.v_lines = {lo, hi};
    c.markers = {{lo, 1.0, detail::fmt("%.2f", lo)}, {hi, 1.0, detail::fmt("%.2f", hi)}};
    return c;
}

/// Hx and Hy (= Hz) against eta with their maxima marked.
inline Chart fig2_chart(const SweepTable& t) {
    Chart c;
    c.title = "Shannon uncertainties of the three-outcome measurements";
    c.x_label = "efficiency eta";
    c.y_label = "bits";
    c.y_max = 1.75;
    Series hx{"Hx", "#1f5fbf", {}, {}}, hy{"Hy = Hz", "#c0392b", {}, {}};
    for (const SweepRow& r : t.rows) {
        hx.x.push_back(r.eta);
        hx.y.push_back(r.hx);
        hy.x.push_back(r.eta);
        hy.y.push_back(r.hy);
    }
    c.series = {std::move(hx), std::move(hy)};
    const auto hx_peak = shannon_components(EfficiencyModel(0.5))[0];
    const auto hy_peak = shannon_components(EfficiencyModel(2.0 / 3.0))[1];
    c.markers = {{0.5, hx_peak, "1 bit at 1/2"}, {2.0 / 3.0, hy_peak, "log2(3) at 2/3"}};
    return c;
}

struct FigureFiles {
    std::filesystem::path fig1_csv, fig1_svg, fig2_csv, fig2_svg;
};

inline void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    out << content;
    if (!out.flush()) throw std::runtime_error("write to '" + path.string() + "' failed");
}

/// Writes fig1.{csv,svg} and fig2.{csv,svg} into `out_dir`, creating it if
/// needed. The sweep passes its row self-check before anything is written.
inline FigureFiles reproduce_figures(const std::filesystem::path& out_dir) {
    const SweepTable table = ratio_sweep(0.0, 1.0, kFigurePoints);
    if (sweep_self_check(table) > kSelfCheckTol) throw std::runtime_error("sweep failed its row self-check");

    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw std::runtime_error("cannot create '" + out_dir.string() + "': " + ec.message());

    FigureFiles f{out_dir / "fig1.csv", out_dir / "fig1.svg", out_dir / "fig2.csv", out_dir / "fig2.svg"};
    std::ostringstream c1, c2;
    write_fig1_csv(c1, table);
    write_fig2_csv(c2, table);
    write_file(f.fig1_csv, c1.str());
    write_file(f.fig1_svg, render_svg(fig1_chart(table)));
    write_file(f.fig2_csv, c2.str());
    write_file(f.fig2_svg, render_svg(fig2_chart(table)));
    return f;
}

} // namespace infolab::report
