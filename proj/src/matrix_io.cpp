#include "fisher_rao/matrix_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <vector>

#include "fisher_rao/errors.hpp"

namespace fisher_rao {

namespace {

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_blank(line[i])) ++i;
    const std::size_t start = i;
    while (i < line.size() && !is_blank(line[i])) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

bool skippable(std::string_view line) {
  const auto it = std::find_if_not(line.begin(), line.end(), is_blank);
  return it == line.end() || *it == '#';
}

double parse_double(std::string_view field, const std::string& source,
                    std::size_t line) {
  // from_chars rejects a leading '+', which some writers emit.
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw ParseError(source, line, "invalid number '" + std::string(field) + "'");
  }
  return v;
}

}  // namespace

Eigen::MatrixXd parse_matrix(std::string_view text, const std::string& source) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  auto next_line = [&](std::string_view& out) {
    while (pos <= text.size()) {
      if (pos == text.size()) return false;
      const std::size_t end = std::min(text.find('\n', pos), text.size());
      out = text.substr(pos, end - pos);
      pos = end + 1;
      ++line_no;
      if (!skippable(out)) return true;
    }
    return false;
  };

  std::string_view line;
  if (!next_line(line)) throw ParseError(source, 0, "missing dimension line");
  const auto header = split_fields(line);
  if (header.size() != 1) {
    throw ParseError(source, line_no, "expected a single integer dimension");
  }
  long p = 0;
  {
    const auto f = header[0];
    const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), p);
    if (ec != std::errc() || ptr != f.data() + f.size() || p < 1) {
      throw ParseError(source, line_no,
                       "invalid dimension '" + std::string(f) + "'");
    }
  }

  Eigen::MatrixXd m(p, p);
  for (long i = 0; i < p; ++i) {
    if (!next_line(line)) {
      throw ParseError(source, 0,
                       "expected " + std::to_string(p) + " rows, found " +
                           std::to_string(i));
    }
    const auto fields = split_fields(line);
    if (static_cast<long>(fields.size()) != p) {
      throw ParseError(source, line_no,
                       "expected " + std::to_string(p) + " columns, found " +
                           std::to_string(fields.size()));
    }
    for (long j = 0; j < p; ++j) m(i, j) = parse_double(fields[static_cast<std::size_t>(j)], source, line_no);
  }
  if (next_line(line)) throw ParseError(source, line_no, "unexpected trailing data");
  return m;
}

Eigen::MatrixXd read_matrix_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, 0, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix(buf.str(), path);
}

std::string format_scalar(double x) {
  char shortest[64];
  char fixed15[64];
  const auto r1 = std::to_chars(shortest, shortest + sizeof shortest, x);
  const auto r2 = std::to_chars(fixed15, fixed15 + sizeof fixed15, x,
                                std::chars_format::general, 15);
  std::string a(shortest, r1.ptr);
  std::string b(fixed15, r2.ptr);
  return a.size() <= b.size() ? a : b;
}

void write_matrix(std::ostream& os, const Eigen::MatrixXd& m) {
  std::vector<std::string> cells;
  cells.reserve(static_cast<std::size_t>(m.size()));
  std::size_t width = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      cells.push_back(format_scalar(m(i, j)));
      width = std::max(width, cells.back().size());
    }
  os << m.rows() << '\n';
  std::size_t k = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const auto& c = cells[k++];
      if (j > 0) os << ' ';
      os << std::string(width - c.size(), ' ') << c;
    }
    os << '\n';
  }
}

}  // namespace fisher_rao
