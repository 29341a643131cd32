#include "fisher_rao/report_io.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "fisher_rao/matrix_io.hpp"
#include "json.hpp"

namespace fisher_rao {

using json = nlohmann::ordered_json;

namespace {

json encode_real(double x) {
  if (std::isfinite(x)) return x;
  if (std::isnan(x)) return "nan";
  return x > 0 ? "inf" : "-inf";
}

double decode_real(const json& j, const char* key) {
  const json& v = j.at(key);
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  }
  throw std::invalid_argument(std::string("report field '") + key + "' is not a number");
}

}  // namespace

std::string format_report_line(const VerificationReport& r) {
  json j = json::object();
  j["check_name"] = r.check_name;
  j["residual"] = encode_real(r.residual);
  j["tolerance"] = encode_real(r.tolerance);
  j["passed"] = r.passed;
  j["seed"] = r.seed ? json(*r.seed) : json(nullptr);
  j["details"] = r.details;
  return j.dump();
}

VerificationReport parse_report_line(std::string_view line) {
  json j;
  try {
    j = json::parse(line);
    VerificationReport r;
    r.check_name = j.at("check_name").get<std::string>();
    r.residual = decode_real(j, "residual");
    r.tolerance = decode_real(j, "tolerance");
    r.passed = j.at("passed").get<bool>();
    const json& seed = j.at("seed");
    if (!seed.is_null()) r.seed = seed.get<std::uint64_t>();
    r.details = j.at("details").get<std::string>();
    return r;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed report record: ") + e.what());
  }
}

std::vector<VerificationReport> parse_report_stream(std::string_view text) {
  std::vector<VerificationReport> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const auto line = text.substr(pos, end - pos);
    if (!line.empty()) out.push_back(parse_report_line(line));
    pos = end + 1;
  }
  return out;
}

std::string format_report_table(const std::vector<VerificationReport>& reports) {
  std::size_t name_w = std::string_view("check").size();
  for (const auto& r : reports) name_w = std::max(name_w, r.check_name.size());
  std::ostringstream os;
  auto pad = [](const std::string& s, std::size_t w) {
    return s + std::string(w > s.size() ? w - s.size() : 0, ' ');
  };
  os << pad("check", name_w) << "  " << pad("status", 6) << "  " << pad("residual", 22)
     << "  " << pad("tolerance", 22) << "  seed\n";
  for (const auto& r : reports) {
    os << pad(r.check_name, name_w) << "  " << pad(r.passed ? "PASS" : "FAIL", 6) << "  "
       << pad(format_scalar(r.residual), 22) << "  " << pad(format_scalar(r.tolerance), 22)
       << "  " << (r.seed ? std::to_string(*r.seed) : std::string("-")) << '\n';
  }
  return os.str();
}

}  // namespace fisher_rao
