#pragma once

#include <cstddef>
#include <vector>

namespace diastat::quadrature {

struct Rule1D {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Nodes and weights for int_0^1 f(u) (1-u)^alpha du with the Jacobi factor
/// folded into the weights; exact for polynomial f of degree <= 2n-1.
/// Requires alpha > -1.
Rule1D gauss_jacobi01(int n, double alpha);

/// Gauss-Legendre on [a, b].
Rule1D gauss_legendre(int n, double a, double b);

/// Angles 2*pi*k/m, k = 0..m-1, each with weight 2*pi/m. For integrands that
/// are analytic and 2*pi periodic the trapezoid rule converges geometrically.
Rule1D trapezoid_angles(int m);

/// Halton low-discrepancy point in [0,1)^dim (index >= 0, dim <= 16).
std::vector<double> halton_point(std::size_t index, int dim);

/// Process-wide thread count for parallelizable quadrature loops. Results are
/// deterministic and independent of this value: work is split into fixed-size
/// blocks that are always reduced in index order.
int& default_threads();

}  // namespace diastat::quadrature
