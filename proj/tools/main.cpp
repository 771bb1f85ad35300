#include <complex>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "diastat/catalog.hpp"
#include "diastat/entropy.hpp"
#include "diastat/errors.hpp"
#include "diastat/geometry.hpp"
#include "diastat/hilbert.hpp"
#include "diastat/homog.hpp"
#include "diastat/json_io.hpp"
#include "diastat/quadrature.hpp"

namespace {

using namespace diastat;
using json_io::Json;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitNumeric = 2;
constexpr int kExitUsage = 64;

/// Malformed command input (as opposed to well-formed but invalid values).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out) throw Error("cannot open output file '" + output_path + "'");
  out << text;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t pos = text.find(sep, start);
    const std::size_t end = (pos == std::string::npos) ? text.size() : pos;
    parts.push_back(text.substr(start, end - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return parts;
}

long long parse_integer(const std::string& text) {
  try {
    std::size_t used = 0;
    const long long value = std::stoll(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw UsageError("expected an integer, got '" + text + "'");
  }
}

double parse_real(const std::string& text) {
  try {
    std::size_t used = 0;
    const double value = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw UsageError("expected a number, got '" + text + "'");
  }
}

/// "I:2,3", "IV:5", "V" -> family + parameter tuple.
std::pair<catalog::Family, std::vector<long long>> parse_catalog_spec(
    const std::string& spec) {
  const auto parts = split(spec, ':');
  if (parts.empty() || parts.size() > 2 || parts[0].empty()) {
    throw UsageError("malformed domain spec '" + spec + "'");
  }
  catalog::Family family;
  try {
    family = catalog::family_from_string(parts[0]);
  } catch (const InvalidParameterError&) {
    throw UsageError("unknown family '" + parts[0] + "' in domain spec");
  }
  std::vector<long long> params;
  if (parts.size() == 2 && !parts[1].empty()) {
    for (const auto& item : split(parts[1], ',')) params.push_back(parse_integer(item));
  }
  return {family, params};
}

/// "disk", "ball:2", "polydisk:3", "typeI:2,2" -> model (with scale mu).
geometry::DomainModel parse_model_spec(const std::string& spec, double mu) {
  const auto parts = split(spec, ':');
  const std::string& kind = parts[0];
  if (kind == "disk") {
    if (parts.size() != 1) throw UsageError("disk takes no parameters");
    return geometry::DomainModel::disk(mu);
  }
  if (kind == "ball" || kind == "polydisk") {
    if (parts.size() != 2) {
      throw UsageError(kind + " needs a dimension, e.g. '" + kind + ":2'");
    }
    const int n = static_cast<int>(parse_integer(parts[1]));
    return kind == "ball" ? geometry::DomainModel::ball(n, mu)
                          : geometry::DomainModel::polydisk(n, mu);
  }
  if (kind == "typeI" || kind == "typei" || kind == "typeI(p,q)") {
    if (parts.size() != 2) {
      throw UsageError("typeI needs a block shape, e.g. 'typeI:2,2'");
    }
    const auto shape = split(parts[1], ',');
    if (shape.size() != 2) {
      throw UsageError("typeI needs exactly two block parameters");
    }
    return geometry::DomainModel::type_i(static_cast<int>(parse_integer(shape[0])),
                                         static_cast<int>(parse_integer(shape[1])),
                                         mu);
  }
  throw UsageError("unknown model spec '" + spec +
                   "' (expected disk, ball:n, polydisk:n or typeI:p,q)");
}

int default_degree(const geometry::DomainModel& model) {
  if (model.dim() == 1) return 64;
  if (model.kind() == geometry::Kind::TypeI && model.rows() > 1 && model.cols() > 1) {
    return 4;
  }
  return 16;
}

std::vector<geometry::Point> points_from_radii(const geometry::DomainModel& model,
                                               const std::vector<double>& radii,
                                               int n_angles) {
  std::vector<geometry::Point> points;
  for (double r : radii) {
    if (r < 0.0 || r >= 1.0) {
      throw InvalidParameterError("sample radius must lie in [0, 1)");
    }
    const int angles = (r == 0.0) ? 1 : n_angles;
    for (int k = 0; k < angles; ++k) {
      geometry::Point z = geometry::Point::Zero(model.dim());
      z[0] = std::polar(r, 2.0 * std::numbers::pi * k / n_angles);
      points.push_back(std::move(z));
    }
  }
  return points;
}

/// Sample points as a JSON array of points; each point is a row-major array
/// of complex literals (or numbers), e.g. [["0.3+0i","0+0i","0+0i","0.2+0i"]].
std::vector<geometry::Point> points_from_json(const geometry::DomainModel& model,
                                              const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const std::exception& e) {
    throw UsageError(std::string("malformed --points JSON: ") + e.what());
  }
  if (!j.is_array() || j.empty()) {
    throw UsageError("--points must be a nonempty JSON array of points");
  }
  std::vector<geometry::Point> points;
  for (const auto& entry : j) {
    if (!entry.is_array()) {
      throw UsageError("each point must be a row-major JSON array");
    }
    geometry::Point z(entry.size());
    Eigen::Index i = 0;
    for (const auto& item : entry) {
      if (item.is_number()) {
        z[i++] = geometry::Complex(item.get<double>(), 0.0);
      } else if (item.is_string()) {
        z[i++] = geometry::parse_complex(item.get<std::string>());
      } else {
        throw UsageError("point entries must be numbers or \"a+bi\" strings");
      }
    }
    if (z.size() != model.dim()) {
      throw InvalidParameterError("point has dimension " + std::to_string(z.size()) +
                                  ", model expects " + std::to_string(model.dim()));
    }
    points.push_back(std::move(z));
  }
  return points;
}

homog::RootConstants constants_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidParameterError("cannot read constants file '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw InvalidParameterError("malformed JSON in '" + path + "': " + e.what());
  }
  return json_io::root_constants_from_json(j);
}

std::string params_to_text(const std::vector<long long>& params) {
  if (params.empty()) return "-";
  std::string text;
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) text += ",";
    text += std::to_string(params[i]);
  }
  return text;
}

std::string descriptor_table(const std::vector<catalog::DomainDescriptor>& entries) {
  std::ostringstream out;
  out << "family  params  rank  a   b   dim  genus  entropy\n";
  for (const auto& d : entries) {
    char line[128];
    std::snprintf(line, sizeof line, "%-7s %-7s %-5lld %-3lld %-3lld %-4lld %-6lld %s\n",
                  catalog::to_string(d.family).c_str(),
                  params_to_text(d.params).c_str(), d.rank, d.a, d.b, d.dim, d.genus,
                  to_string(catalog::entropy_symmetric(d)).c_str());
    out << line;
  }
  return out.str();
}

struct CommandContext {
  std::string output;
};

int run_invariants(const std::string& spec, bool as_json, bool list_all,
                   const CommandContext& ctx) {
  if (list_all) {
    emit(descriptor_table(catalog::standard_entries()), ctx.output);
    return kExitOk;
  }
  if (spec.empty()) throw UsageError("invariants needs a domain spec or --list");
  const auto [family, params] = parse_catalog_spec(spec);
  const auto d = catalog::lookup_domain(family, params);
  if (as_json) {
    Json j;
    j["descriptor"] = json_io::descriptor_to_json(d);
    j["entropy"] = to_string(catalog::entropy_symmetric(d));
    emit(j.dump(2) + "\n", ctx.output);
  } else {
    emit(descriptor_table({d}), ctx.output);
  }
  return kExitOk;
}

int run_entropy(const std::string& spec, const std::string& constants_path,
                bool bergman, const std::string& scale, const CommandContext& ctx) {
  Rational ent;
  if (!constants_path.empty()) {
    homog::RootConstants c = constants_from_file(constants_path);
    if (bergman) c = homog::bergman_gamma(c);
    ent = homog::entropy_homogeneous(c);
  } else {
    if (spec.empty()) {
      throw UsageError("entropy needs a domain spec or --from-constants FILE");
    }
    const auto [family, params] = parse_catalog_spec(spec);
    const auto d = catalog::lookup_domain(family, params);
    if (bergman) {
      ent = homog::entropy_homogeneous(
          homog::bergman_gamma(catalog::symmetric_root_constants(d)));
    } else {
      ent = catalog::entropy_symmetric(d);
    }
  }
  if (!scale.empty()) ent = homog::entropy_scaled(ent, parse_rational(scale));
  emit(to_string(ent) + "\n", ctx.output);
  return kExitOk;
}

int run_root_constants(const std::string& spec, bool bergman,
                       const CommandContext& ctx) {
  const auto [family, params] = parse_catalog_spec(spec);
  const auto d = catalog::lookup_domain(family, params);
  homog::RootConstants c = catalog::symmetric_root_constants(d);
  if (bergman) c = homog::bergman_gamma(c);
  emit(json_io::root_constants_to_json(c).dump(2) + "\n", ctx.output);
  return kExitOk;
}

int run_epsilon(const std::string& spec, double lambda, double mu, int degree,
                const std::vector<double>& radii, int n_angles,
                const std::string& points_json, double rel_tol, bool as_json,
                const CommandContext& ctx) {
  const auto model = parse_model_spec(spec, mu);
  const int n = degree > 0 ? degree : default_degree(model);
  const auto points = points_json.empty()
                          ? points_from_radii(model, radii, n_angles)
                          : points_from_json(model, points_json);
  const auto ka = hilbert::build_space(model, lambda, n);
  const auto rows = hilbert::epsilon_report(ka, points, rel_tol);

  std::cerr << "epsilon: model=" << model.describe() << " lambda=" << lambda
            << " degree=" << n << " quadrature=" << ka.spec().describe()
            << " rel_tol=" << rel_tol << "\n";

  if (as_json) {
    Json j;
    j["model"] = model.describe();
    j["lambda"] = lambda;
    j["mu"] = mu;
    j["degree"] = n;
    j["rel_tol"] = rel_tol;
    j["quadrature"] = ka.spec().describe();
    Json out_rows = Json::array();
    for (const auto& row : rows) {
      Json r;
      r["re"] = row.re;
      r["im"] = row.im;
      r["radius"] = row.radius;
      r["epsilon"] = row.epsilon;
      r["N"] = row.degree;
      r["tail_flag"] = row.tail_flag;
      out_rows.push_back(std::move(r));
    }
    j["rows"] = std::move(out_rows);
    emit(j.dump(2) + "\n", ctx.output);
  } else {
    std::ostringstream csv;
    csv << "re,im,radius,epsilon,N,tail_flag\n";
    for (const auto& row : rows) {
      csv << json_io::format_double(row.re) << "," << json_io::format_double(row.im)
          << "," << json_io::format_double(row.radius) << ","
          << json_io::format_double(row.epsilon) << "," << row.degree << ","
          << (row.tail_flag ? 1 : 0) << "\n";
    }
    emit(csv.str(), ctx.output);
  }
  return kExitOk;
}

int run_check_balanced(const std::string& spec, double lambda, double mu, int degree,
                       const std::vector<double>& radii, int n_angles,
                       const std::string& points_json, double rel_tol, bool as_json,
                       const CommandContext& ctx) {
  const auto model = parse_model_spec(spec, mu);
  const int n = degree > 0 ? degree : default_degree(model);

  std::optional<hilbert::KernelApproximation> ka;
  try {
    ka.emplace(hilbert::build_space(model, lambda, n));
  } catch (const DivergentNormError& e) {
    const std::string verdict = to_string(hilbert::BalancedVerdict::Degenerate);
    if (as_json) {
      Json j;
      j["model"] = model.describe();
      j["lambda"] = lambda;
      j["verdict"] = verdict;
      j["detail"] = e.what();
      emit(j.dump(2) + "\n", ctx.output);
    } else {
      emit(verdict + "\n  " + e.what() + "\n", ctx.output);
    }
    return kExitNumeric;
  }

  const auto points = !points_json.empty() ? points_from_json(model, points_json)
                      : radii.empty()      ? hilbert::default_sample_points(model)
                                           : points_from_radii(model, radii, n_angles);
  const auto report = ka->is_balanced(points, rel_tol);

  if (as_json) {
    Json j;
    j["model"] = model.describe();
    j["lambda"] = lambda;
    j["degree"] = n;
    j["rel_tol"] = rel_tol;
    j["verdict"] = to_string(report.verdict);
    j["balanced"] = report.balanced;
    j["mean_epsilon"] = report.mean_epsilon;
    j["max_rel_deviation"] = report.max_rel_deviation;
    if (!report.note.empty()) j["note"] = report.note;
    emit(j.dump(2) + "\n", ctx.output);
  } else {
    std::ostringstream out;
    out << to_string(report.verdict) << "\n"
        << "  mean epsilon      " << json_io::format_double(report.mean_epsilon)
        << "\n"
        << "  max rel deviation " << json_io::format_double(report.max_rel_deviation)
        << " (tolerance " << json_io::format_double(rel_tol) << ")\n";
    if (!report.note.empty()) out << "  note: " << report.note << "\n";
    emit(out.str(), ctx.output);
  }
  return report.verdict == hilbert::BalancedVerdict::Balanced ? kExitOk
                                                              : kExitNumeric;
}

int run_estimate_entropy(const std::string& spec, double mu, const std::string& z0_text,
                         double tol, int jmin, int jmax, const CommandContext& ctx) {
  const auto model = parse_model_spec(spec, mu);
  geometry::Point z0 = geometry::Point::Zero(model.dim());
  if (!z0_text.empty()) {
    z0 = geometry::parse_point(z0_text);
    if (z0.size() != model.dim()) {
      throw InvalidParameterError("base point has dimension " +
                                  std::to_string(z0.size()) + ", model expects " +
                                  std::to_string(model.dim()));
    }
  }
  entropy::ShellSchedule schedule;
  schedule.jmin = jmin;
  schedule.jmax = jmax;
  const auto estimate = entropy::estimate_entropy(model, z0, tol, schedule);
  emit(json_io::estimate_to_json(estimate).dump(2) + "\n", ctx.output);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "diastat: diastatic entropy, balanced metrics and weighted Bergman "
      "spaces on bounded complex domains"};
  app.require_subcommand(0, 1);

  int threads = 1;
  app.add_option("--threads", threads, "thread count for quadrature loops")
      ->check(CLI::Range(1, 256));

  CommandContext ctx;

  std::string spec, output, constants_path, scale, z0_text, points_json;
  bool as_json = false, as_csv = false, list_all = false, bergman = false;
  double lambda = 2.0, mu = 1.0, rel_tol = 1e-4, tol = 0.05;
  int degree = 0, n_angles = 1, jmin = 4, jmax = 14;
  std::vector<double> radii;

  auto* inv = app.add_subcommand("invariants",
                                 "catalog invariants of a bounded symmetric domain");
  inv->add_option("spec", spec, "domain spec, e.g. I:2,3 or IV:5 or VI");
  inv->add_flag("--json", as_json, "emit JSON");
  inv->add_flag("--list", list_all, "list the standard catalog table");
  inv->add_option("--output", output, "write to file instead of stdout");

  auto* ent = app.add_subcommand("entropy", "exact diastatic entropy as a rational");
  ent->add_option("spec", spec, "domain spec, e.g. I:2,3");
  ent->add_option("--from-constants", constants_path,
                  "read root constants from a JSON file");
  ent->add_flag("--bergman", bergman,
                "replace gamma by the Bergman normalization 2+p+q+b");
  ent->add_option("--scale", scale, "rational lambda: report entropy of lambda*g");
  ent->add_option("--output", output, "write to file instead of stdout");

  auto* rc = app.add_subcommand("root-constants",
                                "Piatetskii-Shapiro constants of a catalog domain");
  rc->add_option("spec", spec, "domain spec, e.g. I:2,3")->required();
  rc->add_flag("--bergman", bergman,
               "replace gamma by the Bergman normalization 2+p+q+b");
  rc->add_option("--output", output, "write to file instead of stdout");

  auto* eps = app.add_subcommand("epsilon",
                                 "epsilon function of a weighted Bergman space");
  eps->add_option("model", spec, "model spec: disk, ball:n, polydisk:n, typeI:p,q")
      ->required();
  eps->add_option("--lambda", lambda, "weight scale lambda")->required();
  eps->add_option("--mu", mu, "metric scale mu (default 1)");
  eps->add_option("--degree", degree, "monomial truncation degree (default per model)");
  eps->add_option("--radii", radii, "sample radii (default 0,0.3,0.6,0.9)")
      ->delimiter(',');
  eps->add_option("--angles", n_angles, "angles per radius (default 1)");
  eps->add_option("--points", points_json,
                  "sample points as a JSON array of row-major point arrays");
  eps->add_option("--rel-tol", rel_tol, "tolerance for the truncation tail flag");
  eps->add_flag("--csv", as_csv, "emit CSV (default)");
  eps->add_flag("--json", as_json, "emit JSON");
  eps->add_option("--output", output, "write to file instead of stdout");

  auto* bal = app.add_subcommand("check-balanced",
                                 "test whether lambda*g is balanced on a model");
  bal->add_option("model", spec, "model spec: disk, ball:n, polydisk:n, typeI:p,q")
      ->required();
  bal->add_option("--lambda", lambda, "weight scale lambda")->required();
  bal->add_option("--mu", mu, "metric scale mu (default 1)");
  bal->add_option("--degree", degree, "monomial truncation degree");
  bal->add_option("--radii", radii, "sample radii (default 8 radii up to 0.9)")
      ->delimiter(',');
  bal->add_option("--angles", n_angles, "angles per radius");
  bal->add_option("--points", points_json,
                  "sample points as a JSON array of row-major point arrays");
  bal->add_option("--rel-tol", rel_tol, "constancy tolerance (default 1e-4)");
  bal->add_flag("--json", as_json, "emit JSON");
  bal->add_option("--output", output, "write to file instead of stdout");

  auto* est = app.add_subcommand("estimate-entropy",
                                 "bracket the diastatic entropy numerically");
  est->add_option("model", spec, "model spec: disk, ball:n, polydisk:n")->required();
  est->add_option("--mu", mu, "metric scale mu (default 1)");
  est->add_option("--z0", z0_text, "base point, e.g. 0.4+0i (default origin)");
  est->add_option("--tol", tol, "bracket tolerance (default 0.05)");
  est->add_option("--jmin", jmin, "first shell index (default 4)");
  est->add_option("--jmax", jmax, "last shell index (default 14)");
  est->add_option("--output", output, "write to file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  if (app.get_subcommands().empty()) {
    std::cerr << app.help();
    return kExitUsage;
  }

  diastat::quadrature::default_threads() = threads;
  ctx.output = output;

  // Angle count defaults to 3 for the balanced grid when radii were given.
  const bool angles_set = bal->count("--angles") > 0 || eps->count("--angles") > 0;
  if (bal->parsed() && !angles_set) n_angles = 3;

  try {
    if (inv->parsed()) return run_invariants(spec, as_json, list_all, ctx);
    if (ent->parsed()) return run_entropy(spec, constants_path, bergman, scale, ctx);
    if (rc->parsed()) return run_root_constants(spec, bergman, ctx);
    if (eps->parsed()) {
      if (radii.empty()) radii = {0.0, 0.3, 0.6, 0.9};
      return run_epsilon(spec, lambda, mu, degree, radii, n_angles, points_json,
                         rel_tol, as_json, ctx);
    }
    if (bal->parsed()) {
      return run_check_balanced(spec, lambda, mu, degree, radii, n_angles,
                                points_json, rel_tol, as_json, ctx);
    }
    if (est->parsed()) {
      return run_estimate_entropy(spec, mu, z0_text, tol, jmin, jmax, ctx);
    }
    std::cerr << app.help();
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DivergentNormError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const NoBracketError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const VanishingKernelError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}
