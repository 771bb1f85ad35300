#pragma once

#include <string>
#include <vector>

#include "diastat/geometry.hpp"

namespace diastat::entropy {

using geometry::DomainModel;
using geometry::Point;

enum class Verdict { Convergent, Divergent, Inconclusive };

std::string to_string(Verdict v);

/// Annular shell schedule rho_j = 1 - 2^-j, j = jmin..jmax, in the natural
/// boundary coordinate of the model.
struct ShellSchedule {
  int jmin = 4;
  int jmax = 14;

  double rho(int j) const;
  int count() const { return jmax - jmin + 1; }
};

/// Shell integrals of e^{-c * diastasis(z0, .)} * volume_density over the
/// schedule, with consecutive ratios and the cumulative decay of the tail
/// half used for classification.
struct ShellDiagnostics {
  std::vector<double> integrals;  ///< one per shell [rho_j, rho_{j+1})
  std::vector<double> ratios;     ///< integrals[i+1] / integrals[i]
  double tail_decay = 0.0;        ///< integrals[last] / integrals[mid]
};

struct ConvergenceReport {
  double c = 0.0;
  Verdict verdict = Verdict::Inconclusive;
  ShellDiagnostics shells;
};

/// Numerical surrogate for the integrability of e^{-c D_{z0}} omega^n/n!:
/// integrates over boundary shells and classifies by the decay of the tail
/// half of the schedule (convergent <= 0.95, divergent >= 1.05, else
/// inconclusive). Supported: disk-like models at any base point, ball(n>=2)
/// at the origin, polydisk at any base point (the integrand factors, so each
/// factor is classified separately and the verdicts are combined); throws
/// UnsupportedError otherwise.
ConvergenceReport classify_convergence(const DomainModel& model, const Point& z0,
                                       double c, const ShellSchedule& schedule = {});

/// Divergence-threshold bracket for the diastatic entropy at z0.
struct EntropyEstimate {
  double lower = 0.0;  ///< max probed c with a divergent verdict
  double upper = 0.0;  ///< min probed c with a convergent verdict
  Point z0;
  double tol = 0.0;
  std::vector<ConvergenceReport> probes;  ///< sorted by c
};

/// Bracket the entropy by bisection on classify_convergence verdicts. Seeds
/// are found by doubling/halving from c = 1 (at most 20 steps each, else
/// NoBracketError). Inconclusive probes widen the returned bracket: the
/// bisection never moves lower/upper past them, so the bracket may settle
/// wider than tol around a logarithmic boundary.
EntropyEstimate estimate_entropy(const DomainModel& model, const Point& z0,
                                 double tol, const ShellSchedule& schedule = {});

namespace detail {

/// Raw shell integrals with an optional override forcing the general polar
/// path at a radial base point; the two paths must agree (self test).
std::vector<double> shell_integrals_for_test(const DomainModel& model,
                                             const Point& z0, double c,
                                             const ShellSchedule& schedule,
                                             bool force_general);

}  // namespace detail

}  // namespace diastat::entropy
