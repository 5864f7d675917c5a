#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "maxplus/matrix.hpp"

namespace maxplus::io {

using Report = nlohmann::ordered_json;

/// Matrix file: optional leading '#' comment lines, a "rows cols" header,
/// then rows*cols whitespace-separated tokens. Tokens are "-inf" or "." for
/// bottom, or exact rationals ("-1", "0.2", "1/15"); decimals are read
/// exactly. Errors carry 1-based line/column positions.
Matrix read_matrix(std::istream& in);
Matrix read_matrix_file(const std::string& path); // "-" reads stdin

void write_matrix(std::ostream& out, const Matrix& a);
std::string matrix_to_string(const Matrix& a);

/// Structured reports for the CLI commands. Every rational is emitted as an
/// exact "p/q" string; a sibling "*_decimal" field is added when the
/// denominator is a power of ten.
Report report_spectral(const Matrix& a);
Report report_ranks(const Matrix& a, int brute_cap);
Report report_urank(const Matrix& a, bool with_oracle, long max_steps);
Report report_semigroup(const std::vector<Matrix>& generators,
                        std::optional<int> oracle_len);
Report report_powers(const Matrix& a, long max_steps, int trace);

/// Human-readable rendering of a structured report; reads only the report,
/// so the two output modes cannot diverge.
void print_human(const Report& report, std::ostream& out);

} // namespace maxplus::io
