#include "fisher_rao/cli.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "fisher_rao/matrix_io.hpp"
#include "fisher_rao/report_io.hpp"
#include "fisher_rao/suite.hpp"
#include "json.hpp"

namespace fisher_rao::cli {

using nlohmann::json;

namespace {

const std::map<std::string, Command>& command_names() {
  static const std::map<std::string, Command> names = {
      {"distance", Command::distance}, {"geodesic", Command::geodesic},
      {"logmap", Command::logmap},     {"expmap", Command::expmap},
      {"metric", Command::metric},     {"pencil", Command::pencil},
      {"verify", Command::verify}};
  return names;
}

std::string command_name(Command c) {
  for (const auto& [name, cmd] : command_names())
    if (cmd == c) return name;
  return "?";
}

std::size_t input_count(Command c) {
  switch (c) {
    case Command::metric:
      return 3;
    case Command::verify:
      return 0;
    default:
      return 2;
  }
}

std::string shortest(double x) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, r.ptr);
}

double parse_real(const std::string& s, const char* flag) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
    throw CLI::ValidationError(flag, "invalid number '" + s + "'");
  }
  return v;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) {
    if (item.empty()) throw CLI::ValidationError("list", "empty item in '" + s + "'");
    out.push_back(item);
  }
  return out;
}

std::vector<std::size_t> parse_dims(const std::string& s) {
  std::vector<std::size_t> out;
  for (const auto& item : split_list(s)) {
    std::size_t p = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), p);
    if (ec != std::errc() || ptr != item.data() + item.size() || p == 0) {
      throw CLI::ValidationError("--dims", "invalid dimension '" + item + "'");
    }
    out.push_back(p);
  }
  if (out.empty()) throw CLI::ValidationError("--dims", "no dimensions given");
  return out;
}

template <typename T>
std::string join(const std::vector<T>& items) {
  std::ostringstream os;
  for (std::size_t i = 0; i < items.size(); ++i) os << (i ? "," : "") << items[i];
  return os.str();
}

// Value as it appears after 15-significant-digit printing.
double printed(double x) {
  const std::string s = format_scalar(x);
  double v = x;
  std::from_chars(s.data(), s.data() + s.size(), v);
  return v;
}

json matrix_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(printed(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Input failure tagged with the exit status it maps to.
struct InputFailure {
  int status;
  std::string message;
};

SymmetricMatrix load_symmetric(const std::string& path) {
  const Eigen::MatrixXd raw = read_matrix_file(path);
  try {
    return SymmetricMatrix(raw);
  } catch (const NotSymmetric& e) {
    throw InputFailure{exit_code::parse_error, path + ": " + e.what()};
  } catch (const std::invalid_argument& e) {
    throw InputFailure{exit_code::parse_error, path + ": " + e.what()};
  }
}

SpdMatrix load_spd(const std::string& path) {
  SymmetricMatrix m = load_symmetric(path);
  try {
    return SpdMatrix(std::move(m));
  } catch (const NotPositiveDefinite& e) {
    std::ostringstream os;
    os.precision(17);
    os << path << ": matrix is not positive definite (lambda_min = " << e.lambda_min()
       << ")";
    throw InputFailure{exit_code::not_positive_definite, os.str()};
  }
}

void emit_scalar(const CliConfig& c, std::ostream& out, const char* key, double value,
                 json extra = json::object()) {
  if (c.format == OutputFormat::human) {
    out << format_scalar(value) << '\n';
    return;
  }
  extra["command"] = command_name(c.command);
  extra[key] = printed(value);
  out << extra.dump() << '\n';
}

void emit_matrix(const CliConfig& c, std::ostream& out, const Eigen::MatrixXd& m) {
  if (c.format == OutputFormat::human) {
    write_matrix(out, m);
  } else {
    out << json{{"command", command_name(c.command)}, {"matrix", matrix_json(m)}}.dump()
        << '\n';
  }
}

int cmd_distance(const CliConfig& c, std::ostream& out) {
  const SpdMatrix r = load_spd(c.inputs[0]);
  const SpdMatrix s = load_spd(c.inputs[1]);
  // A fixed argument order makes the printed value independent of file order.
  bool swap = false;
  if (r.dim() == s.dim()) {
    const auto& a = r.matrix();
    const auto& b = s.matrix();
    swap = std::lexicographical_compare(b.data(), b.data() + b.size(), a.data(),
                                        a.data() + a.size());
  }
  const double d = swap ? distance(s, r, c.convention, c.method)
                        : distance(r, s, c.convention, c.method);
  emit_scalar(c, out, "distance", d,
              {{"convention", c.convention == DistanceConvention::paper ? "paper" : "smith"},
               {"method", c.method == DistanceMethod::trace ? "trace" : "pencil"}});
  return exit_code::ok;
}

int cmd_geodesic(const CliConfig& c, std::ostream& out) {
  const SpdMatrix r = load_spd(c.inputs[0]);
  const SpdMatrix s = load_spd(c.inputs[1]);
  const Geodesic geo(r, log_map(r, s));
  const std::size_t n = c.samples.value_or(kDefaultGeodesicSamples);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = i + 1 == n ? c.t1
                                : c.t0 + (c.t1 - c.t0) * static_cast<double>(i) /
                                             static_cast<double>(n - 1);
    // Endpoints are reported as given rather than re-evaluated.
    const Eigen::MatrixXd m = t == 0.0   ? r.matrix()
                              : t == 1.0 ? s.matrix()
                                         : geo.point(t).matrix();
    if (c.format == OutputFormat::human) {
      out << "# t = " << format_scalar(t) << '\n';
      write_matrix(out, m);
    } else {
      out << json{{"command", "geodesic"}, {"t", printed(t)}, {"matrix", matrix_json(m)}}.dump()
          << '\n';
    }
  }
  return exit_code::ok;
}

int cmd_logmap(const CliConfig& c, std::ostream& out) {
  const SpdMatrix r = load_spd(c.inputs[0]);
  const SpdMatrix s = load_spd(c.inputs[1]);
  emit_matrix(c, out, log_map(r, s).matrix());
  return exit_code::ok;
}

int cmd_expmap(const CliConfig& c, std::ostream& out) {
  const SpdMatrix r = load_spd(c.inputs[0]);
  const SymmetricMatrix d = load_symmetric(c.inputs[1]);
  emit_matrix(c, out, exp_map(r, d).matrix());
  return exit_code::ok;
}

int cmd_metric(const CliConfig& c, std::ostream& out) {
  const SpdMatrix r = load_spd(c.inputs[0]);
  const SymmetricMatrix a = load_symmetric(c.inputs[1]);
  const SymmetricMatrix b = load_symmetric(c.inputs[2]);
  emit_scalar(c, out, "metric", metric(r, a, b));
  return exit_code::ok;
}

int cmd_pencil(const CliConfig& c, std::ostream& out) {
  const SpdMatrix r = load_spd(c.inputs[0]);
  const SpdMatrix s = load_spd(c.inputs[1]);
  const Eigen::VectorXd values = pencil_eigenvalues(r, s);
  if (c.format == OutputFormat::human) {
    for (Eigen::Index i = 0; i < values.size(); ++i) out << format_scalar(values(i)) << '\n';
  } else {
    json arr = json::array();
    for (Eigen::Index i = 0; i < values.size(); ++i) arr.push_back(printed(values(i)));
    out << json{{"command", "pencil"}, {"eigenvalues", arr}}.dump() << '\n';
  }
  return exit_code::ok;
}

SuiteConfig suite_config(const CliConfig& c) {
  SuiteConfig s;
  s.selection = c.suite;
  if (s.selection.size() == 1 && s.selection[0] == "none") s.selection.clear();
  s.seed = c.seed;
  s.dims = c.dims;
  if (c.samples) s.sizes.fisher_samples = *c.samples;
  return s;
}

int cmd_verify(const CliConfig& c, std::ostream& out) {
  const auto reports = run_suite(suite_config(c));
  if (c.format == OutputFormat::structured) {
    for (const auto& r : reports) out << format_report_line(r) << '\n';
  } else if (!reports.empty()) {
    out << format_report_table(reports);
    const auto failed = std::count_if(reports.begin(), reports.end(),
                                      [](const auto& r) { return !r.passed; });
    out << reports.size() << " checks, " << failed << " failed\n";
  }
  return all_passed(reports) ? exit_code::ok : exit_code::verification_failed;
}

}  // namespace

std::vector<std::string> CliConfig::to_args() const {
  std::vector<std::string> a = {command_name(command)};
  a.insert(a.end(), inputs.begin(), inputs.end());
  switch (command) {
    case Command::distance:
      a.insert(a.end(), {"--convention", convention == DistanceConvention::paper ? "paper" : "smith",
                         "--method", method == DistanceMethod::trace ? "trace" : "pencil"});
      break;
    case Command::geodesic:
      a.insert(a.end(), {"--t0", shortest(t0), "--t1", shortest(t1)});
      break;
    case Command::verify:
      a.insert(a.end(), {"--seed", std::to_string(seed), "--suite", join(suite), "--dims",
                         join(dims)});
      break;
    default:
      break;
  }
  if (samples) a.insert(a.end(), {"--samples", std::to_string(*samples)});
  a.insert(a.end(), {"--format", format == OutputFormat::human ? "human" : "structured"});
  return a;
}

ParseOutcome parse_args(const std::vector<std::string>& args) {
  CLI::App app{"Fisher-Rao geometry of the SPD covariance cone", "frcone"};
  app.require_subcommand(1);

  CliConfig cfg;
  std::string convention = "paper", method = "trace", format = "human";
  std::string t0 = "0", t1 = "1", suite = "all", dims = "1,2,3,5,10";
  std::size_t samples = 0;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"human", "structured"}));
  };
  auto add_inputs = [&](CLI::App* sub, std::size_t n, const std::string& desc) {
    sub->add_option("inputs", cfg.inputs, desc)->required()->expected(static_cast<int>(n));
  };

  auto* distance_cmd = app.add_subcommand("distance", "Fisher-Rao distance between two SPD matrices");
  add_inputs(distance_cmd, 2, "Matrix files R S");
  distance_cmd->add_option("--convention", convention, "paper (1/2 trace) or smith")
      ->check(CLI::IsMember({"paper", "smith"}));
  distance_cmd->add_option("--method", method, "trace or pencil")
      ->check(CLI::IsMember({"trace", "pencil"}));
  add_format(distance_cmd);

  auto* geodesic_cmd = app.add_subcommand("geodesic", "Sample the geodesic from R to S");
  add_inputs(geodesic_cmd, 2, "Matrix files R S");
  geodesic_cmd->add_option("--samples", samples, "Number of points (>= 2)")
      ->check(CLI::Range(std::size_t{2}, std::numeric_limits<std::size_t>::max()));
  geodesic_cmd->add_option("--t0", t0, "First parameter value");
  geodesic_cmd->add_option("--t1", t1, "Last parameter value");
  add_format(geodesic_cmd);

  auto* logmap_cmd = app.add_subcommand("logmap", "Tangent vector at R pointing to S");
  add_inputs(logmap_cmd, 2, "Matrix files R S");
  add_format(logmap_cmd);

  auto* expmap_cmd = app.add_subcommand("expmap", "Geodesic endpoint from R along D");
  add_inputs(expmap_cmd, 2, "Matrix files R D");
  add_format(expmap_cmd);

  auto* metric_cmd = app.add_subcommand("metric", "Fisher metric g_R(A, B)");
  add_inputs(metric_cmd, 3, "Matrix files R A B");
  add_format(metric_cmd);

  auto* pencil_cmd = app.add_subcommand("pencil", "Generalized eigenvalues of S - lambda R");
  add_inputs(pencil_cmd, 2, "Matrix files R S");
  add_format(pencil_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Run the numerical verification suite");
  verify_cmd->add_option("--suite", suite, "all, none, group or check names (comma separated)");
  verify_cmd->add_option("--seed", cfg.seed, "Base seed");
  verify_cmd->add_option("--dims", dims, "Comma-separated matrix dimensions");
  verify_cmd->add_option("--samples", samples, "Monte Carlo draws per Fisher estimate (>= 2)")
      ->check(CLI::Range(std::size_t{2}, std::numeric_limits<std::size_t>::max()));
  add_format(verify_cmd);

  ParseOutcome outcome;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);

    CLI::App* chosen = app.get_subcommands().front();
    cfg.command = command_names().at(chosen->get_name());
    cfg.convention = convention == "paper" ? DistanceConvention::paper : DistanceConvention::smith;
    cfg.method = method == "trace" ? DistanceMethod::trace : DistanceMethod::pencil;
    cfg.format = format == "human" ? OutputFormat::human : OutputFormat::structured;
    if (const auto* opt = chosen->get_option_no_throw("--samples"); opt && opt->count() > 0)
      cfg.samples = samples;
    cfg.t0 = parse_real(t0, "--t0");
    cfg.t1 = parse_real(t1, "--t1");
    cfg.suite = split_list(suite);
    cfg.dims = parse_dims(dims);
    if (cfg.inputs.size() != input_count(cfg.command)) {
      throw CLI::ValidationError("inputs", "expected " + std::to_string(input_count(cfg.command)) +
                                               " matrix files");
    }
    if (cfg.command == Command::verify) {
      SuiteConfig probe = suite_config(cfg);
      validate(probe);
    }
    outcome.config = std::move(cfg);
  } catch (const CLI::CallForHelp&) {
    outcome.exit_status = exit_code::ok;
    outcome.message = app.help();
  } catch (const CLI::CallForAllHelp&) {
    outcome.exit_status = exit_code::ok;
    outcome.message = app.help("", CLI::AppFormatMode::All);
  } catch (const CLI::Error& e) {
    outcome.exit_status = exit_code::parse_error;
    outcome.message = std::string("error: ") + e.what();
  } catch (const std::invalid_argument& e) {
    outcome.exit_status = exit_code::parse_error;
    outcome.message = std::string("error: ") + e.what();
  }
  return outcome;
}

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::distance:
        return cmd_distance(config, out);
      case Command::geodesic:
        return cmd_geodesic(config, out);
      case Command::logmap:
        return cmd_logmap(config, out);
      case Command::expmap:
        return cmd_expmap(config, out);
      case Command::metric:
        return cmd_metric(config, out);
      case Command::pencil:
        return cmd_pencil(config, out);
      case Command::verify:
        return cmd_verify(config, out);
    }
  } catch (const InputFailure& f) {
    err << "error: " << f.message << '\n';
    return f.status;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::parse_error;
  } catch (const NotPositiveDefinite& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::not_positive_definite;
  } catch (const DimensionMismatch& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::dimension_mismatch;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::numerical_failure;
  }
  return exit_code::numerical_failure;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const ParseOutcome parsed = parse_args(args);
  if (!parsed.config) {
    (parsed.exit_status == exit_code::ok ? out : err) << parsed.message << '\n';
    return parsed.exit_status;
  }
  return run(*parsed.config, out, err);
}

}  // namespace fisher_rao::cli
