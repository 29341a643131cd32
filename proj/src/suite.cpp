#include "fisher_rao/suite.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "fisher_rao/gaussian.hpp"
#include "fisher_rao/geometry.hpp"
#include "fisher_rao/random_instances.hpp"

namespace fisher_rao {

using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::size_t kMaxSampledDim = 5;

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t check_seed(std::uint64_t base, const std::string& name) {
  return mix64(base ^ fnv1a(name));
}

// max() that keeps NaN.
void worst(double& acc, double x) {
  if (std::isnan(x) || std::isnan(acc)) {
    acc = std::numeric_limits<double>::quiet_NaN();
  } else {
    acc = std::max(acc, x);
  }
}

double rel_err(double a, double b) {
  const double scale = std::max(std::abs(b), std::numeric_limits<double>::min());
  return std::abs(a - b) / scale;
}

double rel_err(const MatrixXd& a, const MatrixXd& b) {
  return max_abs(a - b) / std::max(max_abs(b), std::numeric_limits<double>::min());
}

std::string join_dims(const std::vector<std::size_t>& dims) {
  std::ostringstream os;
  for (std::size_t i = 0; i < dims.size(); ++i) os << (i ? "," : "") << dims[i];
  return os.str();
}

std::string describe(std::size_t instances, const std::vector<std::size_t>& dims) {
  return "instances=" + std::to_string(instances) + " dims=" + join_dims(dims);
}

struct Context {
  const SuiteConfig& config;
  std::uint64_t seed;
  std::vector<std::size_t> dims;

  std::size_t dim(std::size_t i) const { return dims[i % dims.size()]; }
};

using Reports = std::vector<VerificationReport>;
using CheckFn = std::function<Reports(const Context&)>;

struct Check {
  std::string name;
  std::string group;
  bool sampled;  // restricted to p <= kMaxSampledDim
  CheckFn run;
};

VerificationReport report(const Context& ctx, const std::string& name, double residual,
                          double tolerance, std::string details) {
  return VerificationReport::make(name, residual, tolerance, ctx.seed, std::move(details));
}

// -- geometry ---------------------------------------------------------------

Reports metric_algebra(const Context& ctx) {
  InstanceGenerator gen(ctx.seed);
  const std::size_t n = ctx.config.sizes.metric_instances;
  double sym = 0.0, lin = 0.0, pol = 0.0, pos = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t p = ctx.dim(i);
    const SpdMatrix r = gen.spd(p);
    const SymmetricMatrix a = gen.symmetric(p);
    const SymmetricMatrix b = gen.symmetric(p);
    const SymmetricMatrix c = gen.symmetric(p);
    const double alpha = gen.uniform(-3.0, 3.0);
    const double beta = gen.uniform(-3.0, 3.0);

    const double gaa = metric(r, a, a);
    const double gbb = metric(r, b, b);
    const double gcc = metric(r, c, c);
    const double gab = metric(r, a, b);
    // Errors are measured against the energies involved, which bound |g(A,B)|.
    const double scale_ab = 0.5 * (gaa + gbb);

    worst(sym, std::abs(gab - metric(r, b, a)) / scale_ab);

    const SymmetricMatrix combo = alpha * a + beta * c;
    const double lhs1 = metric(r, combo, b);
    const double lhs2 = metric(r, b, combo);
    const double rhs = alpha * gab + beta * metric(r, c, b);
    const double scale_lin = (std::abs(alpha) * std::sqrt(gaa) + std::abs(beta) * std::sqrt(gcc)) *
                             std::sqrt(gbb);
    worst(lin, std::max(std::abs(lhs1 - rhs), std::abs(lhs2 - rhs)) / scale_lin);

    const double polar = 0.25 * (metric(r, a + b, a + b) - metric(r, a - b, a - b));
    worst(pol, std::abs(polar - gab) / scale_ab);

    if (!(gaa > 0.0)) pos += 1.0;
  }
  const std::string d = describe(n, ctx.dims);
  return {report(ctx, "metric_symmetry", sym, 1e-12, d),
          report(ctx, "metric_bilinearity", lin, 1e-12, d),
          report(ctx, "metric_polarization", pol, 1e-12, d),
          report(ctx, "metric_positivity", pos, 0.0, d + " residual=non-positive count")};
}

Reports christoffel_symmetry(const Context& ctx) {
  InstanceGenerator gen(ctx.seed);
  const std::size_t n = ctx.config.sizes.metric_instances;
  double res = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t p = ctx.dim(i);
    const SpdMatrix r = gen.spd(p);
    const SymmetricMatrix a = gen.symmetric(p);
    const SymmetricMatrix b = gen.symmetric(p);
    worst(res, max_abs(christoffel(r, a, b).matrix() - christoffel(r, b, a).matrix()));
  }
  return {report(ctx, "christoffel_symmetry", res, 0.0, describe(n, ctx.dims))};
}

Reports metric_compatibility(const Context& ctx) {
  InstanceGenerator gen(ctx.seed);
  const std::size_t n = ctx.config.sizes.compatibility_instances;
  constexpr double h = 1e-4;
  double res = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t p = ctx.dim(i);
    const SpdMatrix r = gen.spd(p);
    const SymmetricMatrix x = gen.direction(r, 1.0);
    const SymmetricMatrix y = gen.direction(r, 1.0);
    const SymmetricMatrix z = gen.direction(r, 1.0);
    // Constant fields Y, Z along the line R + tX.
    const double fd = (metric(SpdMatrix(r.sym() + h * x), y, z) -
                       metric(SpdMatrix(r.sym() - h * x), y, z)) /
                      (2.0 * h);
    const double connection = metric(r, christoffel(r, x, y), z) + metric(r, y, christoffel(r, x, z));
    worst(res, std::abs(fd - connection));
  }
  return {report(ctx, "metric_compatibility", res, 1e-6,
                 describe(n, ctx.dims) + " step=1e-4 absolute")};
}

Reports geodesic_ode_residual(const Context& ctx) {
  InstanceGenerator gen(ctx.seed);
  const std::size_t n = ctx.config.sizes.ode_residual_instances;
  double res = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t p = ctx.dim(i);
    const SpdMatrix r = gen.spd(p);
    const Geodesic geo(r, gen.direction(r, gen.uniform(0.1, 2.0)));
    for (int k = 0; k < 20; ++k) {
      const double t = static_cast<double>(k) / 19.0;
      const SpdMatrix g = geo.point(t);
      const MatrixXd v = geo.velocity(t).matrix();
      const MatrixXd acc = geo.acceleration(t).matrix();
      const MatrixXd rhs = v * g.inverse().matrix() * v;
      worst(res, max_abs(acc - rhs) / max_abs(acc));
    }
  }
  return {report(ctx, "geodesic_ode_residual", res, 1e-10,
                 describe(n, ctx.dims) + " t_samples=20 relative to max|acc|")};
}

Reports endpoint_identity(const Context& ctx) {
  InstanceGenerator gen(ctx.seed);
  const std::size_t n = ctx.config.sizes.endpoint_pairs;
  double res = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t p = ctx.dim(i);
    const SpdMatrix r = gen.spd(p);
    const SpdMatrix s = gen.spd(p);
    const SymmetricMatrix d = log_map(r, s);
    worst(res, rel_err(geodesic_point(Geodesic(r, d), 1.0).matrix(), s.matrix()));
    worst(res, rel_err(exp_map(r, d).matrix(), s.matrix()));
  }
  return {report(ctx, "endpoint_identity", res, 1e-10, describe(n, ctx.dims))};
}

Reports geodesic_additivity(const Context& ctx) {
  InstanceGenerator gen(ctx.seed);
  const std::size_t n = ctx.config.sizes.endpoint_pairs;
  double res = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t p = ctx.dim(i);
    const SpdMatrix r = gen.spd(p);
    const SpdMatrix s = gen.spd(p);
    const Geodesic geo(r, log_map(r, s));
    const double t = gen.uniform(0.05, 1.0);
    worst(res, rel_err(distance(r, geo.point(t)), t * distance(r, s)));
  }
  return {report(ctx, "geodesic_additivity", res, 1e-9, describe(n, ctx.dims))};
}

Reports distance_pairs(const Context& ctx) {
  InstanceGenerator gen(ctx.seed);
  const std::size_t n = ctx.config.sizes.pair_instances;
  double sym = 0.0, congr = 0.0, inv = 0.0, agree = 0.0, smith = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t p = ctx.dim(i);
    const SpdMatrix r = gen.spd(p);
    const SpdMatrix s = gen.spd(p);
    const MatrixXd m = gen.invertible(p);
    const double d = distance(r, s);

    worst(sym, rel_err(distance(s, r), d));
    const SpdMatrix mr(congruence(r.sym(), m));
    const SpdMatrix ms(congruence(s.sym(), m));
    worst(congr, rel_err(distance(mr, ms), d));
    worst(inv, rel_err(distance(SpdMatrix(r.inverse()), SpdMatrix(s.inverse())), d));
    worst(agree, rel_err(distance(r, s, DistanceConvention::paper, DistanceMethod::pencil), d));
    for (auto method : {DistanceMethod::trace, DistanceMethod::pencil}) {
      const double paper = distance(r, s, DistanceConvention::paper, method);
      worst(smith, rel_err(distance(r, s, DistanceConvention::smith, method),
                           std::numbers::sqrt2 * paper));
    }
  }
  const std::string desc = describe(n, ctx.dims);
  return {report(ctx, "distance_symmetry", sym, 1e-12, desc),
          report(ctx, "congruence_invariance", congr, 1e-9, desc),
          report(ctx, "inversion_invariance", inv, 1e-9, desc),
          report(ctx, "method_agreement", agree, 1e-10, desc),
          report(ctx, "smith_convention", smith, 1e-12, desc)};
}

Reports triangle_inequality(const Context& ctx) {
  InstanceGenerator gen(ctx.seed);
  const std::size_t n = ctx.config.sizes.triangle_triples;
  double excess = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t p = ctx.dim(i);
    const SpdMatrix r = gen.spd(p);
    const SpdMatrix s = gen.spd(p);
    const SpdMatrix t = gen.spd(p);
    worst(excess, std::max(0.0, distance(r, t) - distance(r, s) - distance(s, t)));
  }
  return {report(ctx, "triangle_inequality", excess, 1e-9,
                 describe(n, ctx.dims) + " residual=max(0, excess)")};
}

Reports forced_values(const Context&) {
  const double e2 = std::exp(2.0);
  double dist_err = 0.0;
  dist_err = std::max(dist_err, std::abs(distance(SpdMatrix::identity(2),
                                                   SpdMatrix{{e2, 0.0}, {0.0, e2}}) - 2.0));
  dist_err = std::max(dist_err, std::abs(distance(SpdMatrix{{1.0, 0.0}, {0.0, 4.0}},
                                                   SpdMatrix{{4.0, 0.0}, {0.0, 1.0}}) -
                                          std::log(4.0)));
  const Geodesic unit(SpdMatrix{{1.0}}, SymmetricMatrix{{1.0}});
  double geo_err = 0.0;
  for (double t : {0.0, 0.5, 1.0}) {
    geo_err = std::max(geo_err, std::abs(unit.point(t).matrix()(0, 0) - std::exp(t)));
  }
  return {VerificationReport::make("forced_distance_values", dist_err, 1e-14, std::nullopt,
                                   "d(I,e^2 I)=2 d(diag(1,4),diag(4,1))=log 4"),
          VerificationReport::make("forced_scalar_geodesic", geo_err, 1e-12, std::nullopt,
                                   "R=1 D=1 t in {0,0.5,1}")};
}

// -- gaussian ---------------------------------------------------------------

Reports score_identity(const Context& ctx) {
  InstanceGenerator gen(ctx.seed);
  const auto& sz = ctx.config.sizes;
  double res = 0.0;
  for (std::size_t i = 0; i < sz.score_pairs; ++i) {
    const std::size_t p = ctx.dim(i);
    const SpdMatrix r = gen.spd(p);
    const SymmetricMatrix d = gen.direction(r, 1.0);
    const GaussianModel model(r);
    const DirectionalDerivatives deriv(model, d);
    const std::uint64_t stream = mix64(ctx.seed + i);
    double mean = 0.0, m2 = 0.0;
    for (std::size_t k = 0; k < sz.score_samples; ++k) {
      const double v = deriv.score(model.draw(stream, k));
      const double delta = v - mean;
      mean += delta / static_cast<double>(k + 1);
      m2 += delta * (v - mean);
    }
    const double n = static_cast<double>(sz.score_samples);
    const double se = std::sqrt(m2 / (n - 1.0) / n);
    worst(res, std::abs(mean) / se);
  }
  return {report(ctx, "score_identity", res, 4.0,
                 describe(sz.score_pairs, ctx.dims) + " samples=" +
                     std::to_string(sz.score_samples) + " residual=|mean|/se")};
}

Reports information_identity(const Context& ctx) {
  InstanceGenerator gen(ctx.seed);
  const auto& sz = ctx.config.sizes;
  double score_res = 0.0, hess_res = 0.0, cross_res = 0.0;
  for (std::size_t i = 0; i < sz.fisher_pairs; ++i) {
    const std::size_t p = ctx.dim(i);
    const SpdMatrix r = gen.spd(p);
    const SymmetricMatrix d = gen.direction(r, 1.0);
    const double exact = metric(r, d, d);
    const std::uint64_t stream = mix64(ctx.seed + i);
    const auto s = mc_fisher(r, d, sz.fisher_samples, stream, FisherForm::score);
    const auto h = mc_fisher(r, d, sz.fisher_samples, stream, FisherForm::hessian);
    worst(score_res, std::abs(s.estimate - exact) / s.std_error);
    worst(hess_res, std::abs(h.estimate - exact) / h.std_error);
    worst(cross_res, std::abs(s.estimate - h.estimate) /
                         std::hypot(s.std_error, h.std_error));
  }
  const std::string desc = describe(sz.fisher_pairs, ctx.dims) +
                           " samples=" + std::to_string(sz.fisher_samples);
  return {report(ctx, "mc_fisher_score_form", score_res, 4.0, desc + " residual=|est-g|/se"),
          report(ctx, "mc_fisher_hessian_form", hess_res, 4.0, desc + " residual=|est-g|/se"),
          report(ctx, "mc_cross_form_agreement", cross_res, 6.0,
                 desc + " residual=|score-hessian|/pooled se")};
}

Reports logdet_consistency(const Context& ctx) {
  InstanceGenerator gen(ctx.seed);
  const std::size_t n = ctx.config.sizes.logdet_instances;
  double res = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t p = ctx.dim(i);
    const GaussianModel model(gen.spd(p));
    const VectorXd x = gen.gaussian_vector(p);
    const double half_log_2pi = 0.5 * static_cast<double>(p) * std::log(2.0 * std::numbers::pi);
    const double quad = 0.5 * model.mahalanobis_sq(x);
    const double recovered = -2.0 * (model.log_pdf(x) + half_log_2pi + quad);
    const double from_spectrum = model.covariance().eigen().values.array().log().sum();
    // Rounding scale of the terms that cancel.
    const double scale = std::max({1.0, half_log_2pi, quad});
    worst(res, std::abs(recovered - from_spectrum) / scale);
  }
  return {report(ctx, "logdet_consistency", res, 1e-12, describe(n, ctx.dims))};
}

// -- oracles ----------------------------------------------------------------

MatrixXd ode_endpoint(const SpdMatrix& r, const SymmetricMatrix& d, std::size_t steps) {
  return integrate_geodesic_ode(r, d, 1.0, steps).final_state().position.matrix();
}

Reports rk4_convergence_order(const Context& ctx) {
  InstanceGenerator gen(ctx.seed);
  const std::size_t n = ctx.config.sizes.order_instances;
  double res = 0.0;
  double lo = kInf, hi = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const SpdMatrix r = gen.spd(2);
    const SymmetricMatrix d = gen.direction(r, gen.uniform(0.5, 1.5));
    const MatrixXd exact = Geodesic(r, d).point(1.0).matrix();
    double prev = max_abs(ode_endpoint(r, d, 16) - exact);
    for (std::size_t steps : {32, 64, 128}) {
      const double err = max_abs(ode_endpoint(r, d, steps) - exact);
      const double factor = prev / err;
      lo = std::min(lo, factor);
      hi = std::max(hi, factor);
      worst(res, std::abs(factor - 16.0));
      prev = err;
    }
  }
  std::ostringstream os;
  os << "instances=" << n << " p=2 steps=16,32,64,128 factor_range=[" << lo << "," << hi
     << "] residual=|factor-16|";
  return {report(ctx, "rk4_convergence_order", res, 4.0, os.str())};
}

Reports ode_endpoint_agreement(const Context& ctx) {
  InstanceGenerator gen(ctx.seed);
  const auto& sz = ctx.config.sizes;
  double res = 0.0;
  for (std::size_t i = 0; i < sz.ode_pairs; ++i) {
    const std::size_t p = ctx.dim(i);
    const SpdMatrix r = gen.spd(p);
    const SymmetricMatrix d = gen.direction(r, gen.uniform(0.1, 1.5));
    const MatrixXd exact = Geodesic(r, d).point(1.0).matrix();
    worst(res, rel_err(ode_endpoint(r, d, sz.ode_steps), exact));
  }
  return {report(ctx, "ode_endpoint_agreement", res, 1e-8,
                 describe(sz.ode_pairs, ctx.dims) + " steps=" + std::to_string(sz.ode_steps))};
}

Reports inverse_derivative(const Context& ctx) {
  InstanceGenerator gen(ctx.seed);
  const std::size_t n = ctx.config.sizes.inverse_fd_instances;
  const std::vector<double> steps = {1e-2, 5e-3, 2.5e-3, 1.25e-3, 6.25e-4};
  double slope_res = 0.0;
  double fd_res = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t p = ctx.dim(i);
    const SpdMatrix r = gen.spd(p, 1.0);
    const SymmetricMatrix d = gen.direction(r, 1.0);
    // Least-squares slope of log residual against log step.
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (double h : steps) {
      const VerificationReport rep = check_inverse_derivative(r, d, h);
      worst(fd_res, rep.residual / rep.tolerance);
      const double x = std::log(h);
      const double y = std::log(rep.residual);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    const double k = static_cast<double>(steps.size());
    const double slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
    worst(slope_res, std::abs(slope - 2.0));
  }
  const std::string desc = describe(n, ctx.dims) + " steps=1e-2..6.25e-4";
  return {report(ctx, "inverse_derivative_fd", fd_res, 1.0, desc + " residual=max(res/fd_tol)"),
          report(ctx, "inverse_derivative_slope", slope_res, 0.2, desc + " residual=|slope-2|")};
}

const std::vector<Check>& registry() {
  static const std::vector<Check> checks = {
      {"metric_algebra", "geometry", false, metric_algebra},
      {"christoffel_symmetry", "geometry", false, christoffel_symmetry},
      {"metric_compatibility", "geometry", false, metric_compatibility},
      {"geodesic_ode_residual", "geometry", false, geodesic_ode_residual},
      {"endpoint_identity", "geometry", false, endpoint_identity},
      {"geodesic_additivity", "geometry", false, geodesic_additivity},
      {"distance_pairs", "geometry", false, distance_pairs},
      {"triangle_inequality", "geometry", false, triangle_inequality},
      {"forced_values", "geometry", false, forced_values},
      {"score_identity", "gaussian", true, score_identity},
      {"information_identity", "gaussian", true, information_identity},
      {"logdet_consistency", "gaussian", false, logdet_consistency},
      {"rk4_convergence_order", "oracles", false, rk4_convergence_order},
      {"ode_endpoint_agreement", "oracles", true, ode_endpoint_agreement},
      {"inverse_derivative", "oracles", false, inverse_derivative},
  };
  return checks;
}

bool selected(const Check& c, const std::vector<std::string>& selection) {
  for (const auto& s : selection) {
    if (s == "all" || s == c.group || s == c.name) return true;
  }
  return false;
}

}  // namespace

std::vector<CheckInfo> available_checks() {
  std::vector<CheckInfo> out;
  for (const auto& c : registry()) out.push_back({c.name, c.group});
  return out;
}

void validate(const SuiteConfig& config) {
  for (const auto& s : config.selection) {
    if (s == "all" || s == "none") continue;
    const bool known = std::any_of(registry().begin(), registry().end(), [&](const Check& c) {
      return s == c.group || s == c.name;
    });
    if (!known) throw std::invalid_argument("unknown suite or check '" + s + "'");
  }
  if (config.dims.empty()) throw std::invalid_argument("dims must not be empty");
  for (std::size_t p : config.dims)
    if (p == 0) throw std::invalid_argument("dims must be >= 1");
}

std::vector<VerificationReport> run_suite(const SuiteConfig& config) {
  validate(config);
  std::vector<VerificationReport> out;
  for (const auto& check : registry()) {
    if (!selected(check, config.selection)) continue;
    Context ctx{config, check_seed(config.seed, check.name), config.dims};
    if (check.sampled) {
      std::erase_if(ctx.dims, [](std::size_t p) { return p > kMaxSampledDim; });
      if (ctx.dims.empty()) continue;
    }
    try {
      for (auto& r : check.run(ctx)) out.push_back(std::move(r));
    } catch (const std::exception& e) {
      out.push_back(VerificationReport::make(check.name, kInf, 0.0, ctx.seed,
                                             std::string("exception: ") + e.what()));
    }
  }
  return out;
}

}  // namespace fisher_rao
