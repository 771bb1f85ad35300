#include "diastat/geometry.hpp"

#include <cassert>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "diastat/errors.hpp"

namespace diastat::geometry {

namespace {

constexpr double kPi = std::numbers::pi;

using RowMajorMatrix =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

Eigen::Map<const RowMajorMatrix> as_matrix(const Point& z, int rows, int cols) {
  return Eigen::Map<const RowMajorMatrix>(z.data(), rows, cols);
}

double lgamma_ratio(double a, double b) {
  // Gamma(a) / Gamma(b) for positive arguments.
  return std::exp(std::lgamma(a) - std::lgamma(b));
}

}  // namespace

std::string to_string(Kind k) {
  switch (k) {
    case Kind::Disk: return "disk";
    case Kind::Ball: return "ball";
    case Kind::Polydisk: return "polydisk";
    case Kind::TypeI: return "typeI";
  }
  throw InvalidParameterError("unknown domain kind");
}

DomainModel::DomainModel(Kind kind, int rows, int cols, double mu)
    : kind_(kind), rows_(rows), cols_(cols), dim_(rows * cols), mu_(mu) {
  if (mu <= 0.0) throw InvalidParameterError("metric scale mu must be positive");
}

DomainModel DomainModel::disk(double mu) { return DomainModel(Kind::Disk, 1, 1, mu); }

DomainModel DomainModel::ball(int n, double mu) {
  if (n < 1) throw InvalidParameterError("ball dimension must be >= 1");
  return DomainModel(Kind::Ball, 1, n, mu);
}

DomainModel DomainModel::polydisk(int n, double mu) {
  if (n < 1) throw InvalidParameterError("polydisk dimension must be >= 1");
  return DomainModel(Kind::Polydisk, 1, n, mu);
}

DomainModel DomainModel::type_i(int p, int q, double mu) {
  if (p < 1 || q < 1) {
    throw InvalidParameterError("typeI block shape must be positive");
  }
  return DomainModel(Kind::TypeI, p, q, mu);
}

double DomainModel::boundary_radius(const Point& z) const {
  if (z.size() != dim_) {
    throw DimensionMismatchError("point has dimension " + std::to_string(z.size()) +
                                 ", model expects " + std::to_string(dim_));
  }
  switch (kind_) {
    case Kind::Disk:
    case Kind::Ball:
      return z.norm();
    case Kind::Polydisk:
      return z.cwiseAbs().maxCoeff();
    case Kind::TypeI: {
      if (rows_ == 1 || cols_ == 1) return z.norm();
      const auto Z = as_matrix(z, rows_, cols_);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(Z * Z.adjoint());
      return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
    }
  }
  throw InvalidParameterError("unknown domain kind");
}

bool DomainModel::contains(const Point& z) const {
  return boundary_radius(z) < 1.0;
}

void DomainModel::require_inside(const Point& z) const {
  if (!contains(z)) {
    throw PointOutsideDomainError("point with boundary radius " +
                                  std::to_string(boundary_radius(z)) +
                                  " is outside " + describe());
  }
}

Complex DomainModel::potential_continuation(const Point& z, const Point& w) const {
  switch (kind_) {
    case Kind::Disk:
    case Kind::Ball:
      // <z, conj w> = sum_i z_i conj(w_i)
      return -std::log(Complex(1.0, 0.0) - w.dot(z));
    case Kind::Polydisk: {
      Complex sum(0.0, 0.0);
      for (int j = 0; j < dim_; ++j) {
        sum -= std::log(Complex(1.0, 0.0) - z[j] * std::conj(w[j]));
      }
      return sum;
    }
    case Kind::TypeI: {
      const auto Z = as_matrix(z, rows_, cols_);
      const auto W = as_matrix(w, rows_, cols_);
      // Eigenvalues of Z W^* lie in the open unit disk, so every factor
      // 1 - eig sits in the right half plane and the principal log applies.
      Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(Z * W.adjoint(), false);
      Complex sum(0.0, 0.0);
      for (int i = 0; i < rows_; ++i) {
        sum -= std::log(Complex(1.0, 0.0) - es.eigenvalues()[i]);
      }
      return sum;
    }
  }
  throw InvalidParameterError("unknown domain kind");
}

double DomainModel::potential(const Point& z) const {
  require_inside(z);
  const Complex value = potential_continuation(z, z);
  return mu_ * value.real();
}

double DomainModel::diastasis(const Point& w, const Point& z) const {
  require_inside(w);
  require_inside(z);
  const Complex total = potential_continuation(z, z) + potential_continuation(w, w) -
                        potential_continuation(z, w) - potential_continuation(w, z);
  if (std::abs(total.imag()) > 1e-9 * (1.0 + std::abs(total.real()))) {
    throw Error("analytic continuation produced a non-real diastasis (imag = " +
                std::to_string(total.imag()) + ")");
  }
  return mu_ * total.real();
}

double DomainModel::volume_density(const Point& z) const {
  require_inside(z);
  switch (kind_) {
    case Kind::Disk:
    case Kind::Ball: {
      const int n = dim_;
      return std::pow(mu_, n) * std::pow(1.0 - z.squaredNorm(), -(n + 1));
    }
    case Kind::Polydisk: {
      double density = 1.0;
      for (int j = 0; j < dim_; ++j) {
        density *= mu_ * std::pow(1.0 - std::norm(z[j]), -2.0);
      }
      return density;
    }
    case Kind::TypeI: {
      const auto Z = as_matrix(z, rows_, cols_);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(Z * Z.adjoint(),
                                                         Eigen::EigenvaluesOnly);
      double logdet = 0.0;
      for (int i = 0; i < rows_; ++i) {
        logdet += std::log1p(-es.eigenvalues()[i]);
      }
      return std::pow(mu_, dim_) * std::exp(-(rows_ + cols_) * logdet);
    }
  }
  throw InvalidParameterError("unknown domain kind");
}

double DomainModel::lambda_threshold() const {
  switch (kind_) {
    case Kind::Disk: return 1.0 / mu_;
    case Kind::Ball: return dim_ / mu_;
    case Kind::Polydisk: return 1.0 / mu_;
    case Kind::TypeI: return (rows_ + cols_ - 1) / mu_;
  }
  throw InvalidParameterError("unknown domain kind");
}

Complex DomainModel::closed_form_kernel(double lambda, const Point& z,
                                        const Point& w) const {
  require_inside(z);
  require_inside(w);
  if (lambda <= lambda_threshold()) {
    throw DivergentNormError("lambda = " + std::to_string(lambda) +
                             " is at or below the threshold " +
                             std::to_string(lambda_threshold()) + " of " +
                             describe() + "; the weighted space degenerates");
  }
  const double s = lambda * mu_;
  switch (kind_) {
    case Kind::Disk:
    case Kind::Ball: {
      const int n = dim_;
      const double prefactor =
          lgamma_ratio(s, s - n) / (std::pow(mu_, n) * std::pow(kPi, n));
      return prefactor * std::pow(Complex(1.0, 0.0) - w.dot(z), -s);
    }
    case Kind::Polydisk: {
      Complex kernel(1.0, 0.0);
      for (int j = 0; j < dim_; ++j) {
        kernel *= (s - 1.0) / (mu_ * kPi) *
                  std::pow(Complex(1.0, 0.0) - z[j] * std::conj(w[j]), -s);
      }
      return kernel;
    }
    case Kind::TypeI: {
      if (rows_ == 1 || cols_ == 1) {
        // Ball-like block shape: same kernel as ball(p*q).
        const int n = dim_;
        const double prefactor =
            lgamma_ratio(s, s - n) / (std::pow(mu_, n) * std::pow(kPi, n));
        return prefactor * std::pow(Complex(1.0, 0.0) - w.dot(z), -s);
      }
      throw UnsupportedError(
          "closed-form kernel is not available for typeI blocks with "
          "min(p,q) >= 2; build the space numerically instead");
    }
  }
  throw InvalidParameterError("unknown domain kind");
}

std::string DomainModel::describe() const {
  char buffer[96];
  switch (kind_) {
    case Kind::Disk:
      std::snprintf(buffer, sizeof buffer, "disk(mu=%g)", mu_);
      break;
    case Kind::Ball:
      std::snprintf(buffer, sizeof buffer, "ball(%d, mu=%g)", dim_, mu_);
      break;
    case Kind::Polydisk:
      std::snprintf(buffer, sizeof buffer, "polydisk(%d, mu=%g)", dim_, mu_);
      break;
    case Kind::TypeI:
      std::snprintf(buffer, sizeof buffer, "typeI(%d,%d, mu=%g)", rows_, cols_, mu_);
      break;
  }
  return buffer;
}

namespace {

double parse_double_strict(std::string_view s) {
  if (s.empty()) throw InvalidParameterError("empty numeric literal");
  double sign = 1.0;
  if (s.front() == '+' || s.front() == '-') {
    if (s.front() == '-') sign = -1.0;
    s.remove_prefix(1);
  }
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw InvalidParameterError("malformed numeric literal '" + std::string(s) + "'");
  }
  return sign * value;
}

}  // namespace

Complex parse_complex(std::string_view text) {
  std::string cleaned;
  cleaned.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) cleaned.push_back(c);
  }
  if (cleaned.empty()) throw InvalidParameterError("empty complex literal");

  std::string_view s = cleaned;
  // Split "a+bi" at the last sign that does not follow an exponent marker.
  std::size_t split = std::string_view::npos;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
    }
  }

  if (s.back() == 'i') {
    std::string_view imag_part = s.substr(0, s.size() - 1);
    double real = 0.0;
    if (split != std::string_view::npos) {
      real = parse_double_strict(s.substr(0, split));
      imag_part = s.substr(split, s.size() - 1 - split);
    }
    double imag;
    if (imag_part.empty() || imag_part == "+") {
      imag = 1.0;
    } else if (imag_part == "-") {
      imag = -1.0;
    } else {
      imag = parse_double_strict(imag_part);
    }
    return {real, imag};
  }
  return {parse_double_strict(s), 0.0};
}

Point parse_point(std::string_view text) {
  std::vector<Complex> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::size_t end = (comma == std::string_view::npos) ? text.size() : comma;
    values.push_back(parse_complex(text.substr(start, end - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  Point z(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) z[i] = values[i];
  return z;
}

std::string format_complex(Complex z) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.9g%+.9gi", z.real(), z.imag());
  return buffer;
}

}  // namespace diastat::geometry
