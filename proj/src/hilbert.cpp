#include "diastat/hilbert.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <thread>

#include "diastat/errors.hpp"
#include "diastat/quadrature.hpp"

namespace diastat::hilbert {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kQmcBlock = 4096;

using geometry::Kind;
using quadrature::Rule1D;

bool ball_like(const DomainModel& m) {
  switch (m.kind()) {
    case Kind::Disk:
    case Kind::Ball:
      return true;
    case Kind::TypeI:
      return m.rows() == 1 || m.cols() == 1;
    case Kind::Polydisk:
      return m.dim() == 1;
  }
  return false;
}

void append_exponents(std::vector<std::vector<int>>& out, std::vector<int>& tuple,
                      int position, int remaining) {
  if (position == static_cast<int>(tuple.size()) - 1) {
    tuple[position] = remaining;
    out.push_back(tuple);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    tuple[position] = e;
    append_exponents(out, tuple, position + 1, remaining - e);
  }
}

std::vector<std::vector<int>> enumerate_exponents(int dim, int degree) {
  std::vector<std::vector<int>> exponents;
  std::vector<int> tuple(dim, 0);
  for (int d = 0; d <= degree; ++d) {
    append_exponents(exponents, tuple, 0, d);
  }
  return exponents;
}

int degree_of(const std::vector<int>& alpha) {
  int sum = 0;
  for (int e : alpha) sum += e;
  return sum;
}

/// Shell integrals of the squared norm integrand of the constant function,
/// e^{-lambda*phi_w} * volume density, over rho_j = 1 - 2^-j. All monomials
/// share the boundary exponent, so the constant decides square-integrability
/// for the whole basis.
std::vector<double> norm_shell_integrals(const DomainModel& model, double lambda,
                                         const GaugeTerm& gauge, int jmin,
                                         int jmax) {
  const double s = lambda * model.mu();
  const int n = model.dim();
  auto rho = [](int j) { return 1.0 - std::pow(2.0, -j); };

  std::vector<double> integrals;
  integrals.reserve(jmax - jmin);

  if (model.kind() == Kind::TypeI && !ball_like(model)) {
    // Profile of the integrand along the top singular value: the det-power
    // weight behaves like (1 - sigma^2)^{s - (p+q)} as sigma -> 1 with the
    // remaining factors bounded.
    const double t = s - (model.rows() + model.cols());
    for (int j = jmin; j < jmax; ++j) {
      const Rule1D gl = quadrature::gauss_legendre(16, rho(j), rho(j + 1));
      double sum = 0.0;
      for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
        const double r = gl.nodes[i];
        sum += gl.weights[i] * std::pow(1.0 - r * r, t) * r;
      }
      integrals.push_back(sum);
    }
    return integrals;
  }

  if (model.kind() == Kind::Polydisk && n > 1) {
    // The norm integrand factors over the polydisk coordinates into identical
    // 1D integrals, so the product converges iff one factor does; classify a
    // single factor at full shell resolution.
    const double t = s - 2.0;
    for (int j = jmin; j < jmax; ++j) {
      const Rule1D gl = quadrature::gauss_legendre(16, rho(j), rho(j + 1));
      double sum = 0.0;
      for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
        const double r = gl.nodes[i];
        sum += gl.weights[i] * 2.0 * kPi * model.mu() * std::pow(1.0 - r * r, t) * r;
      }
      integrals.push_back(sum);
    }
    return integrals;
  }

  if (n == 1) {
    const double t = s - 2.0;
    const bool gauged = !gauge.empty();
    const Rule1D angles = quadrature::trapezoid_angles(gauged ? 64 : 1);
    const double angular_weight = gauged ? 1.0 : 2.0 * kPi;
    for (int j = jmin; j < jmax; ++j) {
      const Rule1D gl = quadrature::gauss_legendre(16, rho(j), rho(j + 1));
      double sum = 0.0;
      for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
        const double r = gl.nodes[i];
        const double radial = model.mu() * std::pow(1.0 - r * r, t) * r;
        if (!gauged) {
          sum += gl.weights[i] * angular_weight * radial;
        } else {
          for (std::size_t k = 0; k < angles.nodes.size(); ++k) {
            Point z(1);
            z[0] = std::polar(r, angles.nodes[k]);
            sum += gl.weights[i] * angles.weights[k] * radial *
                   std::exp(-lambda * gauge(z));
          }
        }
      }
      integrals.push_back(sum);
    }
    return integrals;
  }

  // Ball-like in n >= 2 variables: radial weight, exact sphere factor.
  const double t = s - (n + 1);
  double surface = 2.0 * std::pow(kPi, n);
  for (int k = 1; k < n; ++k) surface /= k;
  for (int j = jmin; j < jmax; ++j) {
    const Rule1D gl = quadrature::gauss_legendre(16, rho(j), rho(j + 1));
    double sum = 0.0;
    for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
      const double r = gl.nodes[i];
      sum += gl.weights[i] * surface * std::pow(model.mu(), n) *
             std::pow(1.0 - r * r, t) * std::pow(r, 2 * n - 1);
    }
    integrals.push_back(sum);
  }
  return integrals;
}

/// The norm classifier: every ratio in the tail half of the shell sequence
/// must decay below 0.95, otherwise the norm integral is not accepted as
/// convergent.
void require_convergent_norms(const DomainModel& model, double lambda,
                              const GaugeTerm& gauge, const QuadratureSpec& spec) {
  const std::vector<double> shells =
      norm_shell_integrals(model, lambda, gauge, spec.shell_jmin, spec.shell_jmax);
  const std::size_t m = shells.size();
  const std::size_t tail_start = m / 2;
  bool convergent = true;
  double worst = 0.0;
  for (std::size_t i = tail_start; i + 1 < m; ++i) {
    if (shells[i] <= 0.0) continue;  // underflowed tail: treat as decayed
    const double ratio = shells[i + 1] / shells[i];
    worst = std::max(worst, ratio);
    if (!(ratio < 0.95)) convergent = false;
  }
  if (!convergent) {
    std::ostringstream msg;
    msg << "monomial norm integral fails the shell convergence classifier on "
        << model.describe() << " at lambda = " << lambda
        << " (worst tail shell ratio " << worst
        << " >= 0.95): the constant function is not square-integrable, the "
           "weighted space degenerates";
    throw DivergentNormError(msg.str());
  }
}

/// Diagonal Gram of a radial weight on a ball-like model:
///   G[alpha] = mu^n pi^n (alpha! / (n-1+|alpha|)!)
///              * int_0^1 u^{|alpha|+n-1} (1-u)^{s-(n+1)} du,
/// with the radial integral by Gauss-Jacobi (exact: polynomial integrand).
Eigen::MatrixXcd radial_ball_gram(const DomainModel& model, double lambda,
                                  const std::vector<std::vector<int>>& exponents,
                                  QuadratureSpec& spec) {
  const int n = model.dim();
  const double s = lambda * model.mu();
  const int degree = degree_of(exponents.back());
  if (spec.radial_nodes <= 0) spec.radial_nodes = std::max(40, (degree + n) / 2 + 4);
  const Rule1D gj = quadrature::gauss_jacobi01(spec.radial_nodes, s - (n + 1));

  const auto size = static_cast<Eigen::Index>(exponents.size());
  Eigen::MatrixXcd gram = Eigen::MatrixXcd::Zero(size, size);
  const double mu_pi_n = std::pow(model.mu() * kPi, n);
  for (Eigen::Index a = 0; a < size; ++a) {
    const auto& alpha = exponents[a];
    const int total = degree_of(alpha);
    double log_angular = 0.0;
    for (int e : alpha) log_angular += std::lgamma(e + 1.0);
    log_angular -= std::lgamma(static_cast<double>(n + total));
    double radial = 0.0;
    for (std::size_t i = 0; i < gj.nodes.size(); ++i) {
      radial += gj.weights[i] * std::pow(gj.nodes[i], total + n - 1);
    }
    gram(a, a) = mu_pi_n * std::exp(log_angular) * radial;
  }
  return gram;
}

/// Diagonal Gram of the polydisk: product of per-factor disk norms.
Eigen::MatrixXcd polydisk_gram(const DomainModel& model, double lambda,
                               const std::vector<std::vector<int>>& exponents,
                               QuadratureSpec& spec) {
  const double s = lambda * model.mu();
  const int degree = degree_of(exponents.back());
  if (spec.radial_nodes <= 0) spec.radial_nodes = std::max(40, degree / 2 + 4);
  const Rule1D gj = quadrature::gauss_jacobi01(spec.radial_nodes, s - 2.0);

  std::vector<double> norm1d(degree + 1, 0.0);
  for (int k = 0; k <= degree; ++k) {
    double radial = 0.0;
    for (std::size_t i = 0; i < gj.nodes.size(); ++i) {
      radial += gj.weights[i] * std::pow(gj.nodes[i], k);
    }
    norm1d[k] = model.mu() * kPi * radial;
  }

  const auto size = static_cast<Eigen::Index>(exponents.size());
  Eigen::MatrixXcd gram = Eigen::MatrixXcd::Zero(size, size);
  for (Eigen::Index a = 0; a < size; ++a) {
    double value = 1.0;
    for (int e : exponents[a]) value *= norm1d[e];
    gram(a, a) = value;
  }
  return gram;
}

Eigen::VectorXcd monomial_vector(const std::vector<std::vector<int>>& exponents,
                                 const Point& z, int degree) {
  const int dim = static_cast<int>(z.size());
  Eigen::MatrixXcd powers(dim, degree + 1);
  for (int i = 0; i < dim; ++i) {
    powers(i, 0) = Complex(1.0, 0.0);
    for (int e = 1; e <= degree; ++e) powers(i, e) = powers(i, e - 1) * z[i];
  }
  Eigen::VectorXcd m(static_cast<Eigen::Index>(exponents.size()));
  for (std::size_t j = 0; j < exponents.size(); ++j) {
    Complex value(1.0, 0.0);
    for (int i = 0; i < dim; ++i) value *= powers(i, exponents[j][i]);
    m[static_cast<Eigen::Index>(j)] = value;
  }
  return m;
}

/// Full Gram by a polar tensor grid (1D models, possibly gauged weight).
/// The Jacobi factor (1-u)^{s-2} is folded into the radial rule; the angular
/// trapezoid rule is geometrically convergent for the analytic gauge factor.
Eigen::MatrixXcd polar_grid_gram(const DomainModel& model, double lambda,
                                 const GaugeTerm& gauge,
                                 const std::vector<std::vector<int>>& exponents,
                                 QuadratureSpec& spec) {
  const double s = lambda * model.mu();
  const int degree = degree_of(exponents.back());
  if (spec.radial_nodes <= 0) spec.radial_nodes = std::max(48, degree + 8);
  if (spec.angular_nodes <= 0) spec.angular_nodes = std::max(64, 2 * degree + 64);
  const Rule1D gj = quadrature::gauss_jacobi01(spec.radial_nodes, s - 2.0);
  const Rule1D angles = quadrature::trapezoid_angles(spec.angular_nodes);

  const auto size = static_cast<Eigen::Index>(exponents.size());
  Eigen::MatrixXcd gram = Eigen::MatrixXcd::Zero(size, size);
  Point z(1);
  for (std::size_t i = 0; i < gj.nodes.size(); ++i) {
    const double r = std::sqrt(gj.nodes[i]);
    for (std::size_t k = 0; k < angles.nodes.size(); ++k) {
      z[0] = std::polar(r, angles.nodes[k]);
      double weight = 0.5 * gj.weights[i] * angles.weights[k] * model.mu();
      if (!gauge.empty()) weight *= std::exp(-lambda * gauge(z));
      const Eigen::VectorXcd m = monomial_vector(exponents, z, degree);
      gram.selfadjointView<Eigen::Lower>().rankUpdate(m, weight);
    }
  }
  return Eigen::MatrixXcd(gram.selfadjointView<Eigen::Lower>());
}

/// Full Gram by Halton sampling with a boundary cutoff at rho_max. Points are
/// uniform on the entry polydisk; those with operator norm above rho_max
/// contribute zero. Blocks are reduced in index order, so the result does not
/// depend on the thread count.
Eigen::MatrixXcd qmc_gram(const DomainModel& model, double lambda,
                          const std::vector<std::vector<int>>& exponents,
                          QuadratureSpec& spec) {
  const int dim = model.dim();
  const int degree = degree_of(exponents.back());
  const auto size = static_cast<Eigen::Index>(exponents.size());
  const int npts = spec.qmc_points;
  const int nblocks = (npts + kQmcBlock - 1) / kQmcBlock;
  const double cell = std::pow(kPi, dim) / npts;

  std::vector<Eigen::MatrixXcd> partial(
      nblocks, Eigen::MatrixXcd::Zero(size, size));
  std::atomic<int> next_block{0};
  auto worker = [&]() {
    Point z(dim);
    for (;;) {
      const int block = next_block.fetch_add(1);
      if (block >= nblocks) return;
      const int begin = block * kQmcBlock;
      const int end = std::min(npts, begin + kQmcBlock);
      Eigen::MatrixXcd& g = partial[block];
      for (int idx = begin; idx < end; ++idx) {
        const std::vector<double> u =
            quadrature::halton_point(static_cast<std::size_t>(idx), 2 * dim);
        for (int e = 0; e < dim; ++e) {
          z[e] = std::polar(std::sqrt(u[2 * e]), 2.0 * kPi * u[2 * e + 1]);
        }
        if (model.boundary_radius(z) > spec.rho_max) continue;
        const double weight =
            cell * std::exp(-lambda * model.potential(z)) * model.volume_density(z);
        const Eigen::VectorXcd m = monomial_vector(exponents, z, degree);
        g.selfadjointView<Eigen::Lower>().rankUpdate(m, weight);
      }
    }
  };

  const int nthreads =
      std::clamp(quadrature::default_threads(), 1, std::max(1, nblocks));
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  Eigen::MatrixXcd gram = Eigen::MatrixXcd::Zero(size, size);
  for (const auto& g : partial) gram += g;
  return Eigen::MatrixXcd(gram.selfadjointView<Eigen::Lower>());
}

}  // namespace

std::string QuadratureSpec::describe() const {
  std::ostringstream out;
  switch (scheme) {
    case Scheme::Auto: out << "auto"; break;
    case Scheme::Radial: out << "radial:gj" << radial_nodes; break;
    case Scheme::PolarGrid:
      out << "polar:gj" << radial_nodes << "x" << angular_nodes;
      break;
    case Scheme::Qmc: out << "qmc:halton" << qmc_points; break;
  }
  return out.str();
}

double GaugeTerm::operator()(const Point& z) const {
  if (alpha.size() != z.size()) {
    throw DimensionMismatchError("gauge coefficient count != point dimension");
  }
  return 2.0 * (alpha.array() * z.array()).sum().real();
}

std::string to_string(BalancedVerdict v) {
  switch (v) {
    case BalancedVerdict::Balanced: return "balanced";
    case BalancedVerdict::NotBalanced: return "not balanced";
    case BalancedVerdict::Inconclusive: return "inconclusive";
    case BalancedVerdict::Degenerate: return "not balanced: space degenerates";
  }
  throw InvalidParameterError("unknown balanced verdict");
}

KernelApproximation build_space(const DomainModel& model, double lambda, int degree,
                                const QuadratureSpec& spec, const GaugeTerm& gauge) {
  if (lambda <= 0.0) throw InvalidParameterError("lambda must be positive");
  if (degree < 0) throw InvalidParameterError("truncation degree must be >= 0");
  if (!gauge.empty() && model.dim() != 1) {
    throw UnsupportedError("gauge terms are supported on 1-dimensional models");
  }

  QuadratureSpec resolved = spec;
  if (resolved.scheme == QuadratureSpec::Scheme::Auto) {
    if (model.kind() == Kind::TypeI && !ball_like(model)) {
      resolved.scheme = QuadratureSpec::Scheme::Qmc;
    } else if (!gauge.empty()) {
      resolved.scheme = QuadratureSpec::Scheme::PolarGrid;
    } else {
      resolved.scheme = QuadratureSpec::Scheme::Radial;
    }
  }

  require_convergent_norms(model, lambda, gauge, resolved);

  std::vector<std::vector<int>> exponents = enumerate_exponents(model.dim(), degree);
  if (exponents.size() > 20000) {
    throw InvalidParameterError("truncation degree yields too large a basis (" +
                                std::to_string(exponents.size()) + " monomials)");
  }

  Eigen::MatrixXcd gram;
  switch (resolved.scheme) {
    case QuadratureSpec::Scheme::Radial:
      if (!gauge.empty()) {
        throw UnsupportedError("the radial scheme cannot integrate gauged weights");
      }
      if (model.kind() == Kind::Polydisk && model.dim() > 1) {
        gram = polydisk_gram(model, lambda, exponents, resolved);
      } else if (ball_like(model)) {
        gram = radial_ball_gram(model, lambda, exponents, resolved);
      } else {
        throw UnsupportedError("the radial scheme requires a radial weight");
      }
      break;
    case QuadratureSpec::Scheme::PolarGrid:
      if (model.dim() != 1) {
        throw UnsupportedError("the polar grid scheme requires a 1-dimensional model");
      }
      gram = polar_grid_gram(model, lambda, gauge, exponents, resolved);
      break;
    case QuadratureSpec::Scheme::Qmc:
      gram = qmc_gram(model, lambda, exponents, resolved);
      break;
    case QuadratureSpec::Scheme::Auto:
      break;  // unreachable
  }

  gram = 0.5 * (gram + gram.adjoint()).eval();

  Eigen::LLT<Eigen::MatrixXcd> llt(gram);
  if (llt.info() != Eigen::Success) {
    throw FactorizationError(
        "Gram matrix is not numerically positive definite (scheme " +
        resolved.describe() + ", basis " + std::to_string(exponents.size()) + ")");
  }

  KernelApproximation ka;
  ka.model_ = model;
  ka.lambda_ = lambda;
  ka.degree_ = degree;
  ka.exponents_ = std::move(exponents);
  ka.gram_ = std::move(gram);
  ka.chol_ = llt.matrixL();
  ka.spec_ = resolved;
  ka.gauge_ = gauge;
  return ka;
}

double KernelApproximation::weight_potential(const Point& z) const {
  double value = model_.potential(z);
  if (!gauge_.empty()) value += gauge_(z);
  return lambda_ * value;
}

Eigen::VectorXcd KernelApproximation::monomials(const Point& z) const {
  return monomial_vector(exponents_, z, degree_);
}

Complex KernelApproximation::kernel(const Point& z, const Point& w,
                                    int basis_limit) const {
  model_.require_inside(z);
  model_.require_inside(w);
  const Eigen::Index size =
      (basis_limit > 0) ? std::min<Eigen::Index>(basis_limit, basis_size())
                        : basis_size();
  const auto lower =
      chol_.topLeftCorner(size, size).triangularView<Eigen::Lower>();
  const Eigen::VectorXcd u = lower.solve(monomials(z).head(size));
  if (z.data() == w.data() || z == w) return Complex(u.squaredNorm(), 0.0);
  const Eigen::VectorXcd v = lower.solve(monomials(w).head(size));
  return v.dot(u);
}

double KernelApproximation::epsilon(const Point& z, int basis_limit) const {
  return std::exp(-weight_potential(z)) * kernel(z, z, basis_limit).real();
}

double KernelApproximation::kernel_diastasis(const Point& z0, const Point& z) const {
  const double k_zz = kernel(z, z).real();
  const double k_00 = kernel(z0, z0).real();
  const double k_cross = std::abs(kernel(z, z0));
  if (k_zz < 1e-300 || k_00 < 1e-300 || k_cross < 1e-300) {
    throw VanishingKernelError(
        "reproducing kernel vanished along the diastasis ratio; epsilon is not "
        "a positive constant here");
  }
  return (std::log(k_zz) + std::log(k_00) - 2.0 * std::log(k_cross)) / lambda_;
}

BalancedReport KernelApproximation::is_balanced(
    const std::vector<Point>& sample_points, double rel_tol) const {
  if (sample_points.size() < 2) {
    throw InvalidParameterError(
        "constancy needs at least 2 sample points spanning distinct radii");
  }
  if (rel_tol <= 0.0) throw InvalidParameterError("rel_tol must be positive");

  int half_limit = 0;
  for (const auto& alpha : exponents_) {
    if (degree_of(alpha) <= degree_ / 2) ++half_limit;
  }

  BalancedReport report;
  report.rel_tol = rel_tol;
  report.samples.reserve(sample_points.size());
  double sum = 0.0;
  for (const Point& z : sample_points) {
    BalancedSample sample;
    sample.z = z;
    sample.radius = model_.boundary_radius(z);
    sample.epsilon = epsilon(z);
    sample.epsilon_half = epsilon(z, half_limit);
    report.samples.push_back(std::move(sample));
    sum += report.samples.back().epsilon;
  }
  report.mean_epsilon = sum / static_cast<double>(report.samples.size());

  bool positive = report.mean_epsilon > 0.0;
  double max_dev = 0.0;
  for (auto& sample : report.samples) {
    if (!(sample.epsilon > 0.0)) positive = false;
    max_dev = std::max(max_dev, std::abs(sample.epsilon - report.mean_epsilon));
    sample.tail_limited = std::abs(sample.epsilon - sample.epsilon_half) >
                          10.0 * rel_tol * std::abs(report.mean_epsilon);
    report.truncation_limited |= sample.tail_limited;
  }
  report.max_rel_deviation =
      positive ? max_dev / report.mean_epsilon : std::numeric_limits<double>::infinity();

  if (!positive) {
    report.balanced = false;
    report.verdict = BalancedVerdict::NotBalanced;
    report.note = "epsilon is not strictly positive at every sample";
    return report;
  }

  report.balanced = report.max_rel_deviation <= rel_tol;
  if (report.max_rel_deviation < 0.5 * rel_tol) {
    report.verdict = BalancedVerdict::Balanced;
  } else if (report.max_rel_deviation > 2.0 * rel_tol) {
    report.verdict = BalancedVerdict::NotBalanced;
  } else {
    report.verdict = BalancedVerdict::Inconclusive;
    report.note = "deviation within a factor 2 of the tolerance";
  }
  if (report.truncation_limited) {
    report.note += report.note.empty() ? "" : "; ";
    report.note += "truncation-limited: epsilon at degree N and N/2 disagree";
  }
  return report;
}

Complex KernelApproximation::inner_product(
    const std::function<Complex(const Point&)>& f,
    const std::function<Complex(const Point&)>& g) const {
  if (model_.dim() != 1) {
    throw UnsupportedError("quadrature inner products are wired for 1-dimensional models");
  }
  const double s = lambda_ * model_.mu();
  const Rule1D gj =
      quadrature::gauss_jacobi01(std::max(64, degree_ + 16), s - 2.0);
  const Rule1D angles = quadrature::trapezoid_angles(std::max(64, 2 * degree_ + 68));

  Complex sum(0.0, 0.0);
  Point z(1);
  for (std::size_t i = 0; i < gj.nodes.size(); ++i) {
    const double r = std::sqrt(gj.nodes[i]);
    for (std::size_t k = 0; k < angles.nodes.size(); ++k) {
      z[0] = std::polar(r, angles.nodes[k]);
      double weight = 0.5 * gj.weights[i] * angles.weights[k] * model_.mu();
      if (!gauge_.empty()) weight *= std::exp(-lambda_ * gauge_(z));
      sum += weight * f(z) * std::conj(g(z));
    }
  }
  return sum;
}

std::vector<Point> default_sample_points(const DomainModel& model, int n_radii,
                                         int n_angles, double rho_sample) {
  if (n_radii < 2 || n_angles < 1) {
    throw InvalidParameterError("sampling grid needs >= 2 radii and >= 1 angle");
  }
  if (!(rho_sample > 0.0 && rho_sample < 1.0)) {
    throw InvalidParameterError("rho_sample must lie in (0, 1)");
  }
  std::vector<Point> points;
  for (int i = 0; i < n_radii; ++i) {
    const double r = rho_sample * i / (n_radii - 1);
    const int angles = (r == 0.0) ? 1 : n_angles;
    for (int k = 0; k < angles; ++k) {
      Point z = Point::Zero(model.dim());
      z[0] = std::polar(r, 2.0 * kPi * k / n_angles);
      points.push_back(std::move(z));
    }
  }
  return points;
}

std::vector<EpsilonRow> epsilon_report(const KernelApproximation& ka,
                                       const std::vector<Point>& points,
                                       double rel_tol) {
  int half_limit = 0;
  for (const auto& alpha : ka.exponents()) {
    if (degree_of(alpha) <= ka.degree() / 2) ++half_limit;
  }
  std::vector<EpsilonRow> rows;
  rows.reserve(points.size());
  for (const Point& z : points) {
    EpsilonRow row;
    row.re = z[0].real();
    row.im = z[0].imag();
    row.radius = ka.model().boundary_radius(z);
    row.epsilon = ka.epsilon(z);
    row.degree = ka.degree();
    const double half = ka.epsilon(z, half_limit);
    row.tail_flag = std::abs(row.epsilon - half) > 10.0 * rel_tol * std::abs(row.epsilon);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace diastat::hilbert
