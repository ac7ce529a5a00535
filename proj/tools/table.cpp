#include "table.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace fraclog::cli {

void Table::add_row(std::vector<double> row) {
    if (row.size() != columns.size()) throw std::logic_error("Table::add_row: width mismatch");
    rows.push_back(std::move(row));
}

std::vector<double> Table::column(const std::string& name) const {
    const auto it = std::find(columns.begin(), columns.end(), name);
    if (it == columns.end()) throw std::logic_error("Table::column: no column " + name);
    const auto j = static_cast<std::size_t>(it - columns.begin());
    std::vector<double> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(r[j]);
    return out;
}

std::string format_cell(double v) {
    std::array<char, 32> buf{};
    std::snprintf(buf.data(), buf.size(), "%.16e", v);
    return buf.data();
}

void write_csv(std::ostream& os, const Table& t) {
    for (std::size_t j = 0; j < t.columns.size(); ++j) os << (j ? "," : "") << t.columns[j];
    os << '\n';
    for (const auto& r : t.rows) {
        for (std::size_t j = 0; j < r.size(); ++j) os << (j ? "," : "") << format_cell(r[j]);
        os << '\n';
    }
}

Table gap_table(const GapReport& r) {
    Table t{{"t", "lhs", "rhs", "gap"}, {}};
    for (const auto& s : r.samples) t.add_row({s.t, s.lhs, s.rhs, s.gap});
    return t;
}

Table residual_table(const ResidualReport& r) {
    Table t{{"t", "u_west", "lhs", "rhs", "residual"}, {}};
    for (const auto& s : r.samples) t.add_row({s.t, s.u, s.lhs, s.rhs, s.residual});
    return t;
}

namespace {

constexpr double kWidth = 720.0, kHeight = 440.0, kMargin = 56.0;
constexpr std::array<const char*, 6> kPalette = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

std::string num(double v) {
    std::array<char, 32> buf{};
    std::snprintf(buf.data(), buf.size(), "%.2f", v);
    return buf.data();
}

std::string tick(double v) {
    std::array<char, 32> buf{};
    std::snprintf(buf.data(), buf.size(), "%.3g", v);
    return buf.data();
}

}  // namespace

void write_svg(std::ostream& os, const std::string& title, const std::vector<Curve>& curves) {
    double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
    for (const auto& c : curves) {
        for (double v : c.x) x0 = std::min(x0, v), x1 = std::max(x1, v);
        for (double v : c.y)
            if (std::isfinite(v)) y0 = std::min(y0, v), y1 = std::max(y1, v);
    }
    if (!(x1 > x0)) x1 = x0 + 1.0;
    if (!(y1 > y0)) y1 = y0 + 1.0;
    const double pw = kWidth - 2 * kMargin, ph = kHeight - 2 * kMargin;
    auto px = [&](double x) { return kMargin + (x - x0) / (x1 - x0) * pw; };
    auto py = [&](double y) { return kHeight - kMargin - (y - y0) / (y1 - y0) * ph; };

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<text x=\"" << num(kWidth / 2) << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">" << title
       << "</text>\n";
    os << "<rect x=\"" << kMargin << "\" y=\"" << kMargin << "\" width=\"" << pw << "\" height=\"" << ph
       << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 4; ++i) {
        const double xv = x0 + (x1 - x0) * i / 4.0, yv = y0 + (y1 - y0) * i / 4.0;
        os << "<text x=\"" << num(px(xv)) << "\" y=\"" << num(kHeight - kMargin + 16)
           << "\" text-anchor=\"middle\" font-size=\"11\">" << tick(xv) << "</text>\n";
        os << "<text x=\"" << num(kMargin - 6) << "\" y=\"" << num(py(yv) + 4)
           << "\" text-anchor=\"end\" font-size=\"11\">" << tick(yv) << "</text>\n";
    }
    for (std::size_t ci = 0; ci < curves.size(); ++ci) {
        const auto& c = curves[ci];
        const char* color = kPalette[(ci / 2) % kPalette.size()];
        os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\"";
        if (c.dashed) os << " stroke-dasharray=\"6,4\"";
        os << " points=\"";
        for (std::size_t i = 0; i < c.x.size() && i < c.y.size(); ++i) {
            if (!std::isfinite(c.y[i])) continue;
            os << (i ? " " : "") << num(px(c.x[i])) << ',' << num(py(c.y[i]));
        }
        os << "\"/>\n";
        const double ly = kMargin + 16.0 + 16.0 * static_cast<double>(ci);
        os << "<text x=\"" << num(kWidth - kMargin - 8) << "\" y=\"" << num(ly) << "\" text-anchor=\"end\" font-size=\"11\" fill=\""
           << color << "\">" << c.label << "</text>\n";
    }
    os << "</svg>\n";
}

}  // namespace fraclog::cli
