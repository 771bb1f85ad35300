#include "diastat/quadrature.hpp"

#include <cmath>
#include <memory>
#include <numbers>

#include <gsl/gsl_integration.h>

#include "diastat/errors.hpp"

namespace diastat::quadrature {

Rule1D gauss_jacobi01(int n, double alpha) {
  if (n < 1) throw InvalidParameterError("quadrature order must be positive");
  if (alpha <= -1.0) {
    throw InvalidParameterError("Jacobi weight exponent must exceed -1");
  }
  // GSL integrates f against (b-x)^alpha (x-a)^beta on [a,b].
  using Ws = gsl_integration_fixed_workspace;
  std::unique_ptr<Ws, decltype(&gsl_integration_fixed_free)> ws(
      gsl_integration_fixed_alloc(gsl_integration_fixed_jacobi,
                                  static_cast<size_t>(n), 0.0, 1.0, alpha, 0.0),
      &gsl_integration_fixed_free);
  if (!ws) throw Error("failed to allocate Gauss-Jacobi rule");

  Rule1D rule;
  rule.nodes.assign(gsl_integration_fixed_nodes(ws.get()),
                    gsl_integration_fixed_nodes(ws.get()) + n);
  rule.weights.assign(gsl_integration_fixed_weights(ws.get()),
                      gsl_integration_fixed_weights(ws.get()) + n);
  return rule;
}

Rule1D gauss_legendre(int n, double a, double b) {
  if (n < 1) throw InvalidParameterError("quadrature order must be positive");
  using Table = gsl_integration_glfixed_table;
  std::unique_ptr<Table, decltype(&gsl_integration_glfixed_table_free)> table(
      gsl_integration_glfixed_table_alloc(static_cast<size_t>(n)),
      &gsl_integration_glfixed_table_free);
  if (!table) throw Error("failed to allocate Gauss-Legendre rule");

  Rule1D rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    gsl_integration_glfixed_point(a, b, static_cast<size_t>(i), &rule.nodes[i],
                                  &rule.weights[i], table.get());
  }
  return rule;
}

Rule1D trapezoid_angles(int m) {
  if (m < 1) throw InvalidParameterError("angular node count must be positive");
  Rule1D rule;
  rule.nodes.resize(m);
  rule.weights.assign(m, 2.0 * std::numbers::pi / m);
  for (int k = 0; k < m; ++k) {
    rule.nodes[k] = 2.0 * std::numbers::pi * k / m;
  }
  return rule;
}

namespace {

constexpr int kHaltonPrimes[16] = {2,  3,  5,  7,  11, 13, 17, 19,
                                   23, 29, 31, 37, 41, 43, 47, 53};

double radical_inverse(std::size_t index, int base) {
  double result = 0.0;
  double inv = 1.0 / base;
  double scale = inv;
  while (index > 0) {
    result += static_cast<double>(index % base) * scale;
    index /= base;
    scale *= inv;
  }
  return result;
}

}  // namespace

std::vector<double> halton_point(std::size_t index, int dim) {
  if (dim < 1 || dim > 16) {
    throw InvalidParameterError("Halton dimension must be in 1..16");
  }
  std::vector<double> point(dim);
  // Skip index 0 (the all-zero point) for better uniformity.
  for (int d = 0; d < dim; ++d) {
    point[d] = radical_inverse(index + 1, kHaltonPrimes[d]);
  }
  return point;
}

int& default_threads() {
  static int threads = 1;
  return threads;
}

}  // namespace diastat::quadrature
