#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <string>
#include <string_view>

namespace fisher_rao {

/// Reads the matrix text format:
///
///   p
///   a11 a12 ... a1p
///   ...
///   ap1 ap2 ... app
///
/// Lines whose first non-blank character is '#' and blank lines are ignored.
/// Numbers use '.' as the decimal separator regardless of locale. Any row or
/// column count other than p, or trailing data, is a ParseError naming
/// `source` and the offending line.
Eigen::MatrixXd parse_matrix(std::string_view text, const std::string& source);
Eigen::MatrixXd read_matrix_file(const std::string& path);

/// 15 significant digits; uses the shortest round-trip form when that is
/// no longer. Never locale dependent.
std::string format_scalar(double x);

/// Writes `m` in the matrix text format. Columns are right-aligned.
void write_matrix(std::ostream& os, const Eigen::MatrixXd& m);

}  // namespace fisher_rao
