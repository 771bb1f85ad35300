#include "diastat/catalog.hpp"

#include <string>

#include "diastat/errors.hpp"

namespace diastat::catalog {

std::string to_string(Family f) {
  switch (f) {
    case Family::I: return "I";
    case Family::II: return "II";
    case Family::III: return "III";
    case Family::IV: return "IV";
    case Family::V: return "V";
    case Family::VI: return "VI";
  }
  throw InvalidParameterError("unknown family");
}

Family family_from_string(std::string_view s) {
  if (s == "I") return Family::I;
  if (s == "II") return Family::II;
  if (s == "III") return Family::III;
  if (s == "IV") return Family::IV;
  if (s == "V") return Family::V;
  if (s == "VI") return Family::VI;
  throw InvalidParameterError("unknown family '" + std::string(s) +
                              "' (expected I..VI)");
}

namespace {

void require_param_count(Family f, const std::vector<long long>& params,
                         std::size_t expected) {
  if (params.size() != expected) {
    throw InvalidParameterError("family " + to_string(f) + " takes " +
                                std::to_string(expected) + " parameter(s), got " +
                                std::to_string(params.size()));
  }
}

void check_genus_identity(const DomainDescriptor& d) {
  // genus = (rank-1)a + b + 2 must hold for every entry; a failure here is a
  // table bug, not user error.
  if (d.genus != (d.rank - 1) * d.a + d.b + 2) {
    throw Error("catalog entry violates the genus identity: family " +
                to_string(d.family));
  }
  if (d.rank < 1 || d.dim < d.rank) {
    throw Error("catalog entry violates rank/dim constraints: family " +
                to_string(d.family));
  }
}

}  // namespace

DomainDescriptor lookup_domain(Family family, const std::vector<long long>& params) {
  DomainDescriptor d;
  d.family = family;
  d.params = params;
  switch (family) {
    case Family::I: {
      require_param_count(family, params, 2);
      const long long p = params[0], q = params[1];
      if (p < 1) throw InvalidParameterError("family I requires p >= 1");
      if (p > q) throw InvalidParameterError("family I requires p <= q");
      d.rank = p;
      d.a = 2;
      d.b = q - p;
      d.dim = p * q;
      d.genus = p + q;
      break;
    }
    case Family::II: {
      require_param_count(family, params, 1);
      const long long n = params[0];
      if (n < 2) throw InvalidParameterError("family II requires n >= 2");
      d.rank = n / 2;
      d.a = 4;
      d.b = (n % 2 == 0) ? 0 : 2;
      d.dim = n * (n - 1) / 2;
      d.genus = 2 * n - 2;
      break;
    }
    case Family::III: {
      require_param_count(family, params, 1);
      const long long n = params[0];
      if (n < 1) throw InvalidParameterError("family III requires n >= 1");
      d.rank = n;
      d.a = 1;
      d.b = 0;
      d.dim = n * (n + 1) / 2;
      d.genus = n + 1;
      break;
    }
    case Family::IV: {
      require_param_count(family, params, 1);
      const long long n = params[0];
      if (n < 3) throw InvalidParameterError("family IV requires n >= 3");
      d.rank = 2;
      d.a = n - 2;
      d.b = 0;
      d.dim = n;
      d.genus = n;
      break;
    }
    case Family::V: {
      require_param_count(family, params, 0);
      d.rank = 2;
      d.a = 6;
      d.b = 4;
      d.dim = 16;
      d.genus = 12;
      break;
    }
    case Family::VI: {
      require_param_count(family, params, 0);
      d.rank = 3;
      d.a = 8;
      d.b = 0;
      d.dim = 27;
      d.genus = 18;
      break;
    }
  }
  check_genus_identity(d);
  return d;
}

homog::RootConstants symmetric_root_constants(const DomainDescriptor& d) {
  homog::RootConstants c;
  c.rank = d.rank;
  const auto r = static_cast<std::size_t>(d.rank);
  c.p.resize(r);
  c.q.resize(r);
  c.b.resize(r);
  c.gamma.resize(r);
  for (std::size_t k = 0; k < r; ++k) {
    const long long k1 = static_cast<long long>(k) + 1;
    c.p[k] = Rational((k1 - 1) * d.a);
    c.q[k] = Rational((d.rank - k1) * d.a);
    c.b[k] = Rational(d.b);
    c.gamma[k] = Rational(d.genus);
  }
  homog::validate(c);
  return c;
}

Rational entropy_symmetric(const DomainDescriptor& d) {
  if (d.genus < 1) throw InvalidParameterError("descriptor genus must be positive");
  return Rational(d.genus - 1, d.genus);
}

std::vector<DomainDescriptor> standard_entries() {
  std::vector<DomainDescriptor> entries;
  for (long long p = 1; p <= 3; ++p) {
    for (long long q = p; q <= 4; ++q) {
      entries.push_back(lookup_domain(Family::I, {p, q}));
    }
  }
  for (long long n = 2; n <= 6; ++n) {
    entries.push_back(lookup_domain(Family::II, {n}));
  }
  for (long long n = 1; n <= 5; ++n) {
    entries.push_back(lookup_domain(Family::III, {n}));
  }
  for (long long n = 3; n <= 6; ++n) {
    entries.push_back(lookup_domain(Family::IV, {n}));
  }
  entries.push_back(lookup_domain(Family::V, {}));
  entries.push_back(lookup_domain(Family::VI, {}));
  return entries;
}

}  // namespace diastat::catalog
