#include "diastat/homog.hpp"

#include <string>

#include "diastat/errors.hpp"

namespace diastat::homog {

void validate(const RootConstants& c) {
  if (c.rank < 1) throw InvalidParameterError("rank must be >= 1");
  const auto r = static_cast<std::size_t>(c.rank);
  if (c.p.size() != r || c.q.size() != r || c.b.size() != r ||
      c.gamma.size() != r) {
    throw DimensionMismatchError(
        "constant sequences must all have length rank = " + std::to_string(c.rank));
  }
  for (std::size_t k = 0; k < r; ++k) {
    if (c.gamma[k] <= Rational(0)) {
      throw InvalidParameterError("gamma_" + std::to_string(k + 1) +
                                  " must be positive");
    }
    if (c.p[k] < Rational(0) || c.q[k] < Rational(0) || c.b[k] < Rational(0)) {
      throw InvalidParameterError("p_k, q_k, b_k must be nonnegative");
    }
  }
}

RootConstants constants_from_root_dims(
    long long rank, const std::vector<std::vector<long long>>& dims_upper,
    const std::vector<long long>& dims_half, const std::vector<Rational>& gamma) {
  if (rank < 1) throw InvalidParameterError("rank must be >= 1");
  const auto r = static_cast<std::size_t>(rank);
  if (dims_upper.size() != r) {
    throw DimensionMismatchError("dims_upper must be a rank x rank matrix");
  }
  for (const auto& row : dims_upper) {
    if (row.size() != r) {
      throw DimensionMismatchError("dims_upper must be a rank x rank matrix");
    }
  }
  if (dims_half.size() != r) {
    throw DimensionMismatchError("dims_half must have length rank");
  }
  if (gamma.size() != r) {
    throw DimensionMismatchError("gamma must have length rank");
  }

  RootConstants c;
  c.rank = rank;
  c.p.resize(r);
  c.q.resize(r);
  c.b.resize(r);
  c.gamma = gamma;
  for (std::size_t k = 0; k < r; ++k) {
    long long p = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (dims_upper[i][k] < 0) {
        throw InvalidParameterError("root-space dimensions must be nonnegative");
      }
      p += dims_upper[i][k];
    }
    long long q = 0;
    for (std::size_t l = k + 1; l < r; ++l) {
      if (dims_upper[k][l] < 0) {
        throw InvalidParameterError("root-space dimensions must be nonnegative");
      }
      q += dims_upper[k][l];
    }
    if (dims_half[k] < 0) {
      throw InvalidParameterError("root-space dimensions must be nonnegative");
    }
    c.p[k] = Rational(p);
    c.q[k] = Rational(q);
    c.b[k] = Rational(dims_half[k], 2);
  }
  validate(c);
  return c;
}

Rational entropy_homogeneous(const RootConstants& c) {
  validate(c);
  Rational best(0);
  for (std::size_t k = 0; k < static_cast<std::size_t>(c.rank); ++k) {
    const Rational term =
        (Rational(1) + c.p[k] + c.b[k] + c.q[k] / Rational(2)) / c.gamma[k];
    if (k == 0 || term > best) best = term;
  }
  return best;
}

Rational balanced_threshold(const RootConstants& c) {
  validate(c);
  // lambda*g is balanced iff lambda > (1 + p_k + b_k + q_k/2)/gamma_k for
  // every k, so the threshold is the least lambda dominating all r quotients.
  // Kept as a separate denominators-cleared computation so it can be
  // cross-checked against entropy_homogeneous.
  Rational least(0);
  for (std::size_t k = 0; k < static_cast<std::size_t>(c.rank); ++k) {
    const Rational quotient =
        (Rational(2) + Rational(2) * c.p[k] + Rational(2) * c.b[k] + c.q[k]) /
        (Rational(2) * c.gamma[k]);
    if (k == 0 || quotient > least) least = quotient;
  }
  return least;
}

bool is_balanced_scale(const RootConstants& c, const Rational& lambda) {
  return lambda > balanced_threshold(c);
}

RootConstants bergman_gamma(const RootConstants& c) {
  RootConstants out = c;
  const auto r = static_cast<std::size_t>(c.rank);
  if (c.p.size() != r || c.q.size() != r || c.b.size() != r) {
    throw DimensionMismatchError("constant sequences must have length rank");
  }
  out.gamma.resize(r);
  for (std::size_t k = 0; k < r; ++k) {
    out.gamma[k] = Rational(2) + c.p[k] + c.q[k] + c.b[k];
  }
  validate(out);
  return out;
}

Rational entropy_scaled(const Rational& ent, const Rational& lambda) {
  if (lambda <= Rational(0)) {
    throw InvalidParameterError("scale lambda must be positive");
  }
  return ent / lambda;
}

}  // namespace diastat::homog
