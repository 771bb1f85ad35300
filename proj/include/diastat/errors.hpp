#pragma once

#include <stdexcept>
#include <string>

namespace diastat {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An argument violates a documented constraint (the message names it).
struct InvalidParameterError : Error {
  using Error::Error;
};

/// Sequence lengths do not match the declared rank / shape.
struct DimensionMismatchError : Error {
  using Error::Error;
};

/// Evaluation point lies outside the model domain.
struct PointOutsideDomainError : Error {
  using Error::Error;
};

/// A monomial norm integral failed the convergence classifier: the weighted
/// space does not contain that monomial (for the constant, the space is
/// degenerate).
struct DivergentNormError : Error {
  using Error::Error;
};

/// Gram matrix factorization failed (not numerically positive definite).
struct FactorizationError : Error {
  using Error::Error;
};

/// Reproducing kernel magnitude fell below the representable floor.
struct VanishingKernelError : Error {
  using Error::Error;
};

/// Threshold search could not find both a divergent and a convergent seed.
struct NoBracketError : Error {
  using Error::Error;
};

/// Operation is not available for this domain kind or configuration.
struct UnsupportedError : Error {
  using Error::Error;
};

}  // namespace diastat
