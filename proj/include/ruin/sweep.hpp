#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "ruin/core.hpp"
#include "ruin/report.hpp"

namespace ruin {

/*!
 * Parse "a", "a:b" (integers only, step 1) or "a:b:step".
 *
 * Values are generated as decimals with the precision of the inputs, so
 * 0.3:0.7:0.1 yields exactly the doubles nearest 0.3, 0.4, ..., 0.7 (and 0.5
 * is exactly one half). b < a gives an empty range. Malformed text or a
 * non-positive step throws ParameterError.
 */
std::vector<double> parse_range(std::string_view text);
std::vector<int> parse_int_range(std::string_view text);
//! Comma-separated strategy letters, e.g. "A,B,C".
std::vector<Strategy> parse_strategy_list(std::string_view text);

struct SweepGrid
{
    std::vector<double> p;
    std::vector<double> s;
    std::vector<int> i0;
    std::vector<Strategy> strategies;
};

//! Column names, comma-separated, no trailing newline.
std::string const& sweep_header();
//! One-line description of each column for --help.
std::string sweep_columns_help();
//! One CSV line (no newline) for a report built with rounded = false.
std::string sweep_row(AnalyticReport const& r);

/*!
 * Header, then one row per (p, s, i0, strategy) in lexicographic order.
 * Every point is validated before anything is written.
 */
void run_sweep(std::ostream& os, SweepGrid const& grid, ReportOptions opts);

}  // namespace ruin
