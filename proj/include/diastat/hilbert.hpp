#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "diastat/geometry.hpp"

namespace diastat::hilbert {

using geometry::Complex;
using geometry::DomainModel;
using geometry::Point;

/// Quadrature configuration for building a weighted Bergman space.
struct QuadratureSpec {
  enum class Scheme {
    Auto,       ///< radial weights -> Radial, gauged 1D -> PolarGrid, TypeI -> Qmc
    Radial,     ///< 1D Gauss-Jacobi radial x exact angular (diagonal Gram)
    PolarGrid,  ///< tensor Gauss-Jacobi radial x trapezoid angular (1D models)
    Qmc,        ///< Halton sampling with boundary cutoff rho_max
  };

  Scheme scheme = Scheme::Auto;
  int radial_nodes = 0;    ///< 0 = automatic (enough for exactness)
  int angular_nodes = 0;   ///< 0 = automatic
  int qmc_points = 1 << 15;
  double rho_max = 1.0 - 0x1p-10;  ///< boundary cutoff for the Qmc scheme
  int shell_jmin = 4;              ///< norm-divergence classifier schedule
  int shell_jmax = 14;

  std::string describe() const;
};

/// Optional holomorphic gauge term: the weight potential becomes
/// lambda * (potential(z) + 2 Re(sum_i alpha_i z_i)). Adding such a term
/// changes the Gram matrix but must leave the epsilon function unchanged.
struct GaugeTerm {
  Eigen::VectorXcd alpha;

  bool empty() const { return alpha.size() == 0; }
  double operator()(const Point& z) const;
};

struct BalancedSample {
  Point z;
  double radius = 0.0;
  double epsilon = 0.0;
  double epsilon_half = 0.0;  ///< recomputed at truncation degree N/2
  bool tail_limited = false;
};

enum class BalancedVerdict { Balanced, NotBalanced, Inconclusive, Degenerate };

std::string to_string(BalancedVerdict v);

/// Outcome of the epsilon-constancy test.
struct BalancedReport {
  bool balanced = false;  ///< max relative deviation <= rel_tol
  BalancedVerdict verdict = BalancedVerdict::NotBalanced;
  double mean_epsilon = 0.0;
  double max_rel_deviation = 0.0;
  double rel_tol = 0.0;
  bool truncation_limited = false;
  std::vector<BalancedSample> samples;
  std::string note;
};

/// Truncated orthonormal-basis representation of the weighted Bergman space
/// H_{lambda*phi}: monomials up to total degree N, their Gram matrix under
///   <f, g> = int e^{-lambda*phi_w} f conj(g) omega^n/n!
/// and its Cholesky factor. Immutable once built; safe for concurrent reads.
class KernelApproximation {
 public:
  const DomainModel& model() const { return model_; }
  double lambda() const { return lambda_; }
  int degree() const { return degree_; }
  int basis_size() const { return static_cast<int>(exponents_.size()); }
  const std::vector<std::vector<int>>& exponents() const { return exponents_; }
  const Eigen::MatrixXcd& gram() const { return gram_; }
  const QuadratureSpec& spec() const { return spec_; }
  const GaugeTerm& gauge() const { return gauge_; }

  /// Full weight exponent lambda * (potential + gauge) at z.
  double weight_potential(const Point& z) const;

  /// Monomial vector m(z) ordered by (total degree, lex).
  Eigen::VectorXcd monomials(const Point& z) const;

  /// K(z, conj w) through triangular solves against the Cholesky factor.
  /// basis_limit restricts to the leading basis_limit monomials (0 = all);
  /// because monomials are degree-ordered this is the degree-truncated kernel.
  Complex kernel(const Point& z, const Point& w, int basis_limit = 0) const;

  /// epsilon(z) = e^{-weight_potential(z)} K(z, conj z); gauge independent.
  double epsilon(const Point& z, int basis_limit = 0) const;

  /// Diastasis of the model metric recovered from the kernel ratio
  ///   (1/lambda) log[ K(z,z) K(z0,z0) / (K(z,z0) K(z0,z)) ].
  /// Throws VanishingKernelError when a kernel magnitude falls below 1e-300.
  double kernel_diastasis(const Point& z0, const Point& z) const;

  /// Epsilon-constancy test over sample_points (>= 2 required). Each sample
  /// is recomputed at truncation degree N/2; disagreement beyond
  /// 10 * rel_tol flags the report truncation_limited.
  /// Verdict: deviation < rel_tol/2 -> Balanced, > 2*rel_tol -> NotBalanced,
  /// within a factor 2 of rel_tol -> Inconclusive.
  BalancedReport is_balanced(const std::vector<Point>& sample_points,
                             double rel_tol = 1e-4) const;

  /// Quadrature inner product <f, g> = int e^{-weight} f conj(g) omega^n/n!
  /// over this space's grid (1D models only). Used to exercise the
  /// reproducing property.
  Complex inner_product(const std::function<Complex(const Point&)>& f,
                        const std::function<Complex(const Point&)>& g) const;

 private:
  friend KernelApproximation build_space(const DomainModel&, double, int,
                                         const QuadratureSpec&, const GaugeTerm&);

  KernelApproximation() : model_(DomainModel::disk()) {}

  DomainModel model_;
  double lambda_ = 0.0;
  int degree_ = 0;
  std::vector<std::vector<int>> exponents_;
  Eigen::MatrixXcd gram_;
  Eigen::MatrixXcd chol_;  // lower triangular, gram = chol * chol^H
  QuadratureSpec spec_;
  GaugeTerm gauge_;
};

/// Compute the monomial Gram matrix of H_{lambda*phi} by quadrature and
/// factorize it.
/// Throws DivergentNormError when the norm integrals fail the shell
/// convergence classifier (lambda at or below the model threshold),
/// FactorizationError when the Gram is not positive definite, and
/// UnsupportedError for configurations outside the quadrature support matrix
/// (gauge terms on models with dim > 1).
KernelApproximation build_space(const DomainModel& model, double lambda,
                                int degree,
                                const QuadratureSpec& spec = {},
                                const GaugeTerm& gauge = {});

/// Default epsilon sampling grid: n_radii radii equally spaced in
/// [0, rho_sample] crossed with n_angles angles, placed on the first
/// coordinate axis.
std::vector<Point> default_sample_points(const DomainModel& model,
                                         int n_radii = 8, int n_angles = 3,
                                         double rho_sample = 0.9);

/// One row of the epsilon report emitted by the CLI as CSV
/// (re, im, radius, epsilon, N, tail_flag).
struct EpsilonRow {
  double re = 0.0;
  double im = 0.0;
  double radius = 0.0;
  double epsilon = 0.0;
  int degree = 0;
  bool tail_flag = false;
};

std::vector<EpsilonRow> epsilon_report(const KernelApproximation& ka,
                                       const std::vector<Point>& points,
                                       double rel_tol = 1e-4);

}  // namespace diastat::hilbert
