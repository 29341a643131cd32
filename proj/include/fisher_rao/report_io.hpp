#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fisher_rao/oracles.hpp"

namespace fisher_rao {

/// One JSON object per line:
///
///   {"check_name":..,"residual":..,"tolerance":..,"passed":..,"seed":..,"details":..}
///
/// `seed` is null when the check is not randomized. Non-finite residuals
/// are written as the strings "inf", "-inf" or "nan".
std::string format_report_line(const VerificationReport& report);

/// Inverse of format_report_line. Throws std::invalid_argument on malformed
/// input or missing keys.
VerificationReport parse_report_line(std::string_view line);

std::vector<VerificationReport> parse_report_stream(std::string_view text);

/// Fixed-width table for terminals.
std::string format_report_table(const std::vector<VerificationReport>& reports);

}  // namespace fisher_rao
