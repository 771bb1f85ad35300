#pragma once

#include <complex>
#include <string>

#include <Eigen/Dense>

namespace diastat::geometry {

using Complex = std::complex<double>;

/// A point of a model domain, flattened to a complex vector. TypeI points are
/// p x q matrices stored row-major.
using Point = Eigen::VectorXcd;

enum class Kind { Disk, Ball, Polydisk, TypeI };

std::string to_string(Kind k);

/// Evaluatable model domain with metric scale mu: the metric is mu * g_min,
/// where g_min is the metric of the minimal potential
///   disk/ball:  phi_min(z) = -log(1 - |z|^2)
///   polydisk:   phi_min(z) = sum_j -log(1 - |z_j|^2)
///   typeI(p,q): phi_min(Z) = -log det(I_p - Z Z^*)
/// normalized so phi_min(0) = 0.
class DomainModel {
 public:
  static DomainModel disk(double mu = 1.0);
  static DomainModel ball(int n, double mu = 1.0);
  static DomainModel polydisk(int n, double mu = 1.0);
  static DomainModel type_i(int p, int q, double mu = 1.0);

  Kind kind() const { return kind_; }
  int dim() const { return dim_; }
  double mu() const { return mu_; }
  /// TypeI block shape; (1, dim) for ball-like kinds so rows()*cols() == dim.
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  /// Natural boundary coordinate: |z| (disk/ball), max_j |z_j| (polydisk),
  /// largest singular value (TypeI). The domain is { boundary_radius < 1 }.
  double boundary_radius(const Point& z) const;
  bool contains(const Point& z) const;
  /// Throws PointOutsideDomainError.
  void require_inside(const Point& z) const;

  /// mu * phi_min(z); zero at the origin.
  double potential(const Point& z) const;

  /// Calabi diastasis of the scaled metric,
  ///   mu * [phi(z,conj z) + phi(w,conj w) - phi(z,conj w) - phi(w,conj z)],
  /// evaluated through the closed-form analytic continuation. Always real for
  /// points inside the domain; a non-real residual beyond 1e-9 relative is a
  /// continuation bug and raises Error.
  double diastasis(const Point& w, const Point& z) const;

  /// Density of omega^n / n! against Lebesgue measure on C^n = R^{2n}, with
  /// the convention (i/2) dz wedge dconj(z) = dx wedge dy.
  double volume_density(const Point& z) const;

  /// Exact reproducing kernel K(z, conj w) of the weighted space with weight
  /// e^{-lambda * potential}. Supported for disk/ball/polydisk and ball-like
  /// TypeI (min(p,q) == 1); throws UnsupportedError otherwise, and
  /// DivergentNormError when lambda <= lambda_threshold().
  Complex closed_form_kernel(double lambda, const Point& z, const Point& w) const;

  /// The weighted space contains the constants exactly for
  /// lambda > lambda_threshold(); this is also the diastatic entropy of the
  /// model. Values: disk 1/mu, ball(n) n/mu, polydisk 1/mu,
  /// typeI(p,q) (p+q-1)/mu.
  double lambda_threshold() const;

  /// Analytic continuation phi_min(z, conj w) of the minimal potential
  /// (no mu factor). Principal logarithms are valid because the spectrum of
  /// Z W^* stays in the open unit disk.
  Complex potential_continuation(const Point& z, const Point& w) const;

  std::string describe() const;

  friend bool operator==(const DomainModel&, const DomainModel&) = default;

 private:
  DomainModel(Kind kind, int rows, int cols, double mu);

  Kind kind_;
  int rows_;
  int cols_;
  int dim_;
  double mu_;
};

/// Parse "a+bi" style complex literals, e.g. "0.5", "-0.2-0.1i", "0.3i".
Complex parse_complex(std::string_view text);

/// Parse a comma-separated list of complex literals into a Point.
Point parse_point(std::string_view text);

std::string format_complex(Complex z);

}  // namespace diastat::geometry
