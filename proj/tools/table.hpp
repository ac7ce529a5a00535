#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fraclog/logistic.hpp"
#include "fraclog/report.hpp"

namespace fraclog::cli {

/// Column-major numeric table: the single in-memory source for CSV and SVG output.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    void add_row(std::vector<double> row);
    std::vector<double> column(const std::string& name) const;
};

/// "%.16e" cells (17 significant digits), ',' separator, '\n' endings, header row first.
void write_csv(std::ostream& os, const Table& t);
std::string format_cell(double v);

Table gap_table(const GapReport& r);            // t,lhs,rhs,gap
Table residual_table(const ResidualReport& r);  // t,u_west,lhs,rhs,residual

struct Curve {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
    bool dashed = false;
};

/// Minimal line plot, deterministic text output.
void write_svg(std::ostream& os, const std::string& title, const std::vector<Curve>& curves);

}  // namespace fraclog::cli
