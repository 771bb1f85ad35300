#pragma once

#include <vector>

#include "diastat/rational.hpp"

namespace diastat::homog {

/// Piatetskii-Shapiro root-multiplicity constants of a homogeneous bounded
/// domain of rank r. The entries b_k are stored as rationals because they are
/// half the dimension of a root space; p_k and q_k are sums of root-space
/// dimensions and gamma_k is a positive normalization constant supplied by the
/// caller.
struct RootConstants {
  long long rank = 0;
  std::vector<Rational> p;
  std::vector<Rational> q;
  std::vector<Rational> b;
  std::vector<Rational> gamma;
};

/// Throws DimensionMismatchError when a sequence length differs from rank,
/// InvalidParameterError when rank < 1, some gamma_k <= 0, or some
/// p_k/q_k/b_k < 0.
void validate(const RootConstants& c);

/// Build the constants from root-space dimensions:
///   p_k = sum_{i<k} dims_upper[i][k],
///   q_k = sum_{l>k} dims_upper[k][l],
///   b_k = dims_half[k] / 2.
/// dims_upper is rank x rank; only the strict upper triangle is read.
RootConstants constants_from_root_dims(
    long long rank, const std::vector<std::vector<long long>>& dims_upper,
    const std::vector<long long>& dims_half, const std::vector<Rational>& gamma);

/// max_k (1 + p_k + b_k + q_k/2) / gamma_k, exact.
Rational entropy_homogeneous(const RootConstants& c);

/// The scale threshold: lambda*g is balanced exactly when lambda strictly
/// exceeds this value. Numerically equal to entropy_homogeneous but computed
/// as the least admissible scale, so the two can be cross-checked.
Rational balanced_threshold(const RootConstants& c);

/// Strict inequality test against balanced_threshold. The boundary scale
/// lambda == threshold is NOT balanced.
bool is_balanced_scale(const RootConstants& c, const Rational& lambda);

/// Copy with gamma_k replaced by the Bergman normalization
/// 2 + p_k + q_k + b_k. The input gamma field is ignored.
RootConstants bergman_gamma(const RootConstants& c);

/// Entropy of (Omega, lambda*g) given the entropy of (Omega, g): ent / lambda.
/// Throws InvalidParameterError when lambda <= 0.
Rational entropy_scaled(const Rational& ent, const Rational& lambda);

}  // namespace diastat::homog
