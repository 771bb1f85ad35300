#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "diastat/homog.hpp"
#include "diastat/rational.hpp"

namespace diastat::catalog {

/// Cartan classification families of irreducible bounded symmetric domains.
enum class Family { I, II, III, IV, V, VI };

std::string to_string(Family f);
Family family_from_string(std::string_view s);

/// Discrete invariants of an irreducible bounded symmetric domain: rank r,
/// root multiplicities a and b, complex dimension and genus. The genus always
/// satisfies genus = (rank-1)*a + b + 2.
struct DomainDescriptor {
  Family family = Family::I;
  std::vector<long long> params;
  long long rank = 0;
  long long a = 0;
  long long b = 0;
  long long dim = 0;
  long long genus = 0;
};

/// Invariants per family:
///   I (p,q), 1<=p<=q : rank p, a 2, b q-p, dim p*q, genus p+q
///   II (n), n>=2     : rank floor(n/2), a 4, b 0 (n even) / 2 (n odd),
///                      dim n(n-1)/2, genus 2n-2
///   III (n), n>=1    : rank n, a 1, b 0, dim n(n+1)/2, genus n+1
///   IV (n), n>=3     : rank 2, a n-2, b 0, dim n, genus n
///   V                : rank 2, a 6, b 4, dim 16, genus 12
///   VI               : rank 3, a 8, b 0, dim 27, genus 18
/// Throws InvalidParameterError naming the violated constraint.
DomainDescriptor lookup_domain(Family family, const std::vector<long long>& params);

/// Symmetric-case constants: p_k = (k-1)a, q_k = (r-k)a, b_k = b,
/// gamma_k = genus, for k = 1..r.
homog::RootConstants symmetric_root_constants(const DomainDescriptor& d);

/// (genus - 1) / genus, exact.
Rational entropy_symmetric(const DomainDescriptor& d);

/// Fixed small table of every family for CLI listing, ordered by
/// (family, params).
std::vector<DomainDescriptor> standard_entries();

}  // namespace diastat::catalog
