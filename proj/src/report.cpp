#include "tfspec/error.hpp"
#include "tfspec/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

namespace tfspec {

namespace {

std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

std::string xml_escape(std::string_view s) {
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

std::string fixed(double v, int digits = 2) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    out << text;
    out.flush();
    if (!out) throw IoError("write to '" + path.string() + "' failed");
}

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

}  // namespace

std::string format_number(double v) {
    if (!std::isfinite(v)) return "";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string to_csv(const std::vector<ConvergenceReport>& reports) {
    std::string out(kCsvHeader);
    out += "\r\n";
    for (const auto& r : reports) {
        const std::string prefix = csv_field(to_string(r.id)) + ',' + format_number(r.params.alpha1) + ',' +
                                   format_number(r.params.alpha2) + ',' + format_number(r.params.d) + ',' +
                                   format_number(r.params.lambda) + ',';
        for (const auto& row : r.rows)
            out += prefix + std::to_string(row.N) + ',' + format_number(row.l2_error) + ',' +
                   format_number(r.fitted_rate) + "\r\n";
    }
    return out;
}

std::string to_svg(const std::vector<ConvergenceReport>& reports) {
    constexpr double W = 640, H = 480, L = 70, R = 190, T = 30, B = 50;
    double nlo = std::numeric_limits<double>::infinity(), nhi = -nlo, elo = nlo, ehi = -nlo;
    for (const auto& r : reports)
        for (const auto& row : r.rows) {
            if (!(row.l2_error > 0.0)) continue;
            nlo = std::min(nlo, std::log10(static_cast<double>(row.N)));
            nhi = std::max(nhi, std::log10(static_cast<double>(row.N)));
            elo = std::min(elo, std::log10(row.l2_error));
            ehi = std::max(ehi, std::log10(row.l2_error));
        }
    if (!(nlo <= nhi)) nlo = 0.0, nhi = 1.0, elo = -1.0, ehi = 0.0;
    nlo = std::floor(nlo * 10) / 10 - 0.05, nhi = std::ceil(nhi * 10) / 10 + 0.05;
    elo = std::floor(elo), ehi = std::ceil(ehi);
    if (ehi - elo < 1) ehi = elo + 1;
    const auto px = [&](double lx) { return L + (lx - nlo) / (nhi - nlo) * (W - L - R); };
    const auto py = [&](double ly) { return T + (ehi - ly) / (ehi - elo) * (H - T - B); };

    std::ostringstream s;
    s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
      << "\" font-family=\"sans-serif\" font-size=\"11\">\n"
      << "<rect width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n"
      << "<rect x=\"" << L << "\" y=\"" << T << "\" width=\"" << W - L - R << "\" height=\"" << H - T - B
      << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (double e = elo; e <= ehi + 1e-9; e += 1) {
        const double y = py(e);
        s << "<line x1=\"" << L - 4 << "\" y1=\"" << fixed(y) << "\" x2=\"" << L << "\" y2=\"" << fixed(y)
          << "\" stroke=\"black\"/>\n<text x=\"" << L - 6 << "\" y=\"" << fixed(y + 4)
          << "\" text-anchor=\"end\">1e" << static_cast<int>(e) << "</text>\n";
    }
    for (const auto& r : reports)
        for (const auto& row : r.rows) {
            const double x = px(std::log10(static_cast<double>(row.N)));
            s << "<text x=\"" << fixed(x) << "\" y=\"" << H - B + 16 << "\" text-anchor=\"middle\">" << row.N
              << "</text>\n";
        }
    s << "<text x=\"" << (L + W - R) / 2 << "\" y=\"" << H - 12 << "\" text-anchor=\"middle\">N</text>\n"
      << "<text x=\"16\" y=\"" << (T + H - B) / 2 << "\" transform=\"rotate(-90 16 " << (T + H - B) / 2
      << ")\" text-anchor=\"middle\">L2 error</text>\n";

    // Guides N^{-1/2} and N^{-3} through the first point of the first report.
    if (!reports.empty() && !reports.front().rows.empty() && reports.front().rows.front().l2_error > 0.0) {
        const auto& p0 = reports.front().rows.front();
        const double x0 = std::log10(static_cast<double>(p0.N)), y0 = std::log10(p0.l2_error);
        for (double slope : {0.5, 3.0}) {
            double x1 = nhi, y1 = y0 - slope * (x1 - x0);
            if (y1 < elo) y1 = elo, x1 = x0 + (y0 - elo) / slope;
            s << "<line class=\"guide\" x1=\"" << fixed(px(x0)) << "\" y1=\"" << fixed(py(y0)) << "\" x2=\""
              << fixed(px(x1)) << "\" y2=\"" << fixed(py(y1))
              << "\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n<text x=\"" << fixed(px(x1) + 3) << "\" y=\""
              << fixed(py(y1)) << "\" fill=\"gray\">N^-" << (slope == 0.5 ? "1/2" : "3") << "</text>\n";
        }
    }

    std::size_t i = 0;
    for (const auto& r : reports) {
        const char* color = kPalette[i % std::size(kPalette)];
        s << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        bool first = true;
        for (const auto& row : r.rows) {
            if (!(row.l2_error > 0.0)) continue;
            s << (first ? "" : " ") << fixed(px(std::log10(static_cast<double>(row.N)))) << ','
              << fixed(py(std::log10(row.l2_error)));
            first = false;
        }
        s << "\"/>\n";
        std::ostringstream label;
        label << to_string(r.id) << " a1=" << r.params.alpha1 << " a2=" << r.params.alpha2 << " d=" << r.params.d
              << " rate=" << (std::isfinite(r.fitted_rate) ? fixed(r.fitted_rate) : std::string("-"));
        const double ly = T + 14 + 16 * static_cast<double>(i);
        s << "<line x1=\"" << W - R + 8 << "\" y1=\"" << ly - 4 << "\" x2=\"" << W - R + 24 << "\" y2=\"" << ly - 4
          << "\" stroke=\"" << color << "\" stroke-width=\"1.5\"/>\n<text x=\"" << W - R + 28 << "\" y=\"" << ly
          << "\" font-size=\"9\">" << xml_escape(label.str()) << "</text>\n";
        ++i;
    }
    s << "</svg>\n";
    return s.str();
}

void emit_report(const std::vector<ConvergenceReport>& reports, const std::filesystem::path& csv,
                 const std::optional<std::filesystem::path>& svg) {
    write_file(csv, to_csv(reports));
    if (svg) write_file(*svg, to_svg(reports));
}

void emit_report(const ConvergenceReport& report, const std::filesystem::path& csv,
                 const std::optional<std::filesystem::path>& svg) {
    emit_report(std::vector<ConvergenceReport>{report}, csv, svg);
}

}  // namespace tfspec
