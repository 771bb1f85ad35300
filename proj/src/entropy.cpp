#include "diastat/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

#include "diastat/errors.hpp"
#include "diastat/quadrature.hpp"

namespace diastat::entropy {

namespace {

constexpr double kPi = std::numbers::pi;

using geometry::Kind;
using quadrature::Rule1D;

double sphere_surface(int n) {
  // Area of S^{2n-1} in C^n = R^{2n}.
  double surface = 2.0 * std::pow(kPi, n);
  for (int k = 1; k < n; ++k) surface /= k;
  return surface;
}

/// Radial shell integral of e^{-c D_0} * vol over [r0, r1] for a
/// rotation-invariant integrand (base point at the origin).
double radial_shell(const DomainModel& model, double c, double r0, double r1) {
  const int n = model.dim();
  const double surface = sphere_surface(n);
  const Rule1D gl = quadrature::gauss_legendre(24, r0, r1);
  const Point origin = Point::Zero(n);
  Point z = Point::Zero(n);
  double sum = 0.0;
  for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
    const double r = gl.nodes[i];
    z[0] = r;
    const double integrand =
        std::exp(-c * model.diastasis(origin, z)) * model.volume_density(z);
    sum += gl.weights[i] * surface * std::pow(r, 2 * n - 1) * integrand;
  }
  return sum;
}

/// Polar shell integral over a 1-dimensional model with arbitrary base point.
double polar_shell(const DomainModel& model, const Point& z0, double c, double r0,
                   double r1) {
  const Rule1D gl = quadrature::gauss_legendre(24, r0, r1);
  const Rule1D angles = quadrature::trapezoid_angles(128);
  Point z(1);
  double sum = 0.0;
  for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
    const double r = gl.nodes[i];
    double angular = 0.0;
    for (std::size_t k = 0; k < angles.nodes.size(); ++k) {
      z[0] = std::polar(r, angles.nodes[k]);
      angular += angles.weights[k] * std::exp(-c * model.diastasis(z0, z)) *
                 model.volume_density(z);
    }
    sum += gl.weights[i] * r * angular;
  }
  return sum;
}

std::vector<double> shell_integrals(const DomainModel& model, const Point& z0,
                                    double c, const ShellSchedule& schedule,
                                    bool force_general) {
  std::vector<double> integrals;
  integrals.reserve(schedule.count() - 1);

  if (model.kind() == Kind::TypeI && model.rows() > 1 && model.cols() > 1) {
    throw UnsupportedError(
        "entropy shells are not implemented for typeI blocks with min(p,q) >= 2");
  }
  if (model.kind() == Kind::Polydisk && model.dim() > 1) {
    throw UnsupportedError("polydisk integrability is classified per factor");
  }

  const bool at_origin = z0.norm() == 0.0;
  if (at_origin && !force_general) {
    for (int j = schedule.jmin; j < schedule.jmax; ++j) {
      integrals.push_back(radial_shell(model, c, schedule.rho(j), schedule.rho(j + 1)));
    }
    return integrals;
  }
  if (model.dim() == 1) {
    for (int j = schedule.jmin; j < schedule.jmax; ++j) {
      integrals.push_back(
          polar_shell(model, z0, c, schedule.rho(j), schedule.rho(j + 1)));
    }
    return integrals;
  }
  throw UnsupportedError(
      "entropy shells on " + model.describe() +
      " support the origin base point only (the integrand is no longer radial)");
}

Verdict classify_integrals(const std::vector<double>& integrals,
                           std::vector<double>& ratios, double& tail_decay) {
  const std::size_t m = integrals.size();
  ratios.assign(m > 0 ? m - 1 : 0, 0.0);
  for (std::size_t i = 0; i + 1 < m; ++i) {
    ratios[i] = integrals[i] > 0.0 ? integrals[i + 1] / integrals[i] : 0.0;
  }
  const std::size_t tail_steps = m / 2;
  const std::size_t lo = (m - 1) - tail_steps;
  if (!(integrals[lo] > 0.0)) {
    // The tail underflowed to zero: the integrand decays faster than any
    // power, which only happens deep in the convergent regime.
    tail_decay = 0.0;
    return Verdict::Convergent;
  }
  tail_decay = integrals[m - 1] / integrals[lo];
  bool decreasing = true;
  for (std::size_t i = lo; i + 1 < m; ++i) {
    if (!(integrals[i + 1] < integrals[i])) decreasing = false;
  }
  if (tail_decay <= 0.95 && decreasing) return Verdict::Convergent;
  if (tail_decay >= 1.05) return Verdict::Divergent;
  return Verdict::Inconclusive;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Convergent: return "convergent";
    case Verdict::Divergent: return "divergent";
    case Verdict::Inconclusive: return "inconclusive";
  }
  throw InvalidParameterError("unknown verdict");
}

double ShellSchedule::rho(int j) const { return 1.0 - std::pow(2.0, -j); }

ConvergenceReport classify_convergence(const DomainModel& model, const Point& z0,
                                       double c, const ShellSchedule& schedule) {
  model.require_inside(z0);
  if (!(c > 0.0)) throw InvalidParameterError("exponent c must be positive");
  if (schedule.jmin < 1 || schedule.jmax <= schedule.jmin + 3) {
    throw InvalidParameterError("shell schedule needs jmin >= 1 and jmax >= jmin + 4");
  }
  ConvergenceReport report;
  report.c = c;

  if (model.kind() == Kind::Polydisk && model.dim() > 1) {
    // The integrand and the domain both factor, so the integral is a product
    // of per-factor disk integrals: it converges iff every factor converges.
    // Classifying factors separately keeps the full 1D shell resolution
    // (sup-norm shells would blur the threshold by the product growth).
    // Diagnostics come from the factor with the slowest decay.
    const DomainModel factor = DomainModel::disk(model.mu());
    bool any_divergent = false, any_inconclusive = false;
    bool have_worst = false;
    for (int i = 0; i < model.dim(); ++i) {
      Point base(1);
      base[0] = z0[i];
      ShellDiagnostics shells;
      shells.integrals = shell_integrals(factor, base, c, schedule, false);
      const Verdict verdict =
          classify_integrals(shells.integrals, shells.ratios, shells.tail_decay);
      any_divergent |= verdict == Verdict::Divergent;
      any_inconclusive |= verdict == Verdict::Inconclusive;
      if (!have_worst || shells.tail_decay > report.shells.tail_decay) {
        report.shells = std::move(shells);
        have_worst = true;
      }
    }
    report.verdict = any_divergent      ? Verdict::Divergent
                     : any_inconclusive ? Verdict::Inconclusive
                                        : Verdict::Convergent;
    return report;
  }

  report.shells.integrals = shell_integrals(model, z0, c, schedule, false);
  report.verdict = classify_integrals(report.shells.integrals, report.shells.ratios,
                                      report.shells.tail_decay);
  return report;
}

namespace detail {

// Exposed for the radial-vs-general agreement self test.
std::vector<double> shell_integrals_for_test(const DomainModel& model,
                                             const Point& z0, double c,
                                             const ShellSchedule& schedule,
                                             bool force_general) {
  return shell_integrals(model, z0, c, schedule, force_general);
}

}  // namespace detail

EntropyEstimate estimate_entropy(const DomainModel& model, const Point& z0,
                                 double tol, const ShellSchedule& schedule) {
  if (!(tol > 0.0)) throw InvalidParameterError("tolerance must be positive");
  model.require_inside(z0);

  std::map<double, ConvergenceReport> probes;
  auto verdict_at = [&](double c) {
    auto it = probes.find(c);
    if (it == probes.end()) {
      it = probes.emplace(c, classify_convergence(model, z0, c, schedule)).first;
    }
    return it->second.verdict;
  };

  // Seed the bracket by halving/doubling from c = 1.
  double lower = 1.0;
  bool have_lower = false;
  for (int step = 0; step <= 20; ++step) {
    if (verdict_at(lower) == Verdict::Divergent) {
      have_lower = true;
      break;
    }
    lower /= 2.0;
  }
  double upper = 1.0;
  bool have_upper = false;
  for (int step = 0; step <= 20; ++step) {
    if (verdict_at(upper) == Verdict::Convergent) {
      have_upper = true;
      break;
    }
    upper *= 2.0;
  }
  if (!have_lower || !have_upper) {
    std::ostringstream msg;
    msg << "no " << (have_lower ? "convergent" : "divergent")
        << " seed within 20 " << (have_lower ? "doublings" : "halvings")
        << " from c = 1 on " << model.describe();
    throw NoBracketError(msg.str());
  }

  // Bisect. Inconclusive probes are never used to move the bounds, so the
  // returned bracket widens to enclose any inconclusive plateau.
  for (int iteration = 0; iteration < 200 && upper - lower > tol; ++iteration) {
    double a = upper, b = lower;  // inconclusive span inside (lower, upper)
    bool any_inconclusive = false;
    for (const auto& [c, report] : probes) {
      if (c > lower && c < upper && report.verdict == Verdict::Inconclusive) {
        a = std::min(a, c);
        b = std::max(b, c);
        any_inconclusive = true;
      }
    }
    double next;
    if (!any_inconclusive) {
      next = 0.5 * (lower + upper);
    } else {
      const double gap_low = a - lower;
      const double gap_high = upper - b;
      if (std::max(gap_low, gap_high) <= tol / 8.0) break;
      next = (gap_low >= gap_high) ? lower + 0.5 * gap_low : b + 0.5 * gap_high;
    }
    switch (verdict_at(next)) {
      case Verdict::Divergent: lower = next; break;
      case Verdict::Convergent: upper = next; break;
      case Verdict::Inconclusive: break;
    }
  }

  EntropyEstimate estimate;
  estimate.lower = lower;
  estimate.upper = upper;
  estimate.z0 = z0;
  estimate.tol = tol;
  estimate.probes.reserve(probes.size());
  for (auto& [c, report] : probes) estimate.probes.push_back(std::move(report));
  return estimate;
}

}  // namespace diastat::entropy
