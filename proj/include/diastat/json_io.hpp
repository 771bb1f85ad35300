#pragma once

#include <string>

#include <json.hpp>

#include "diastat/catalog.hpp"
#include "diastat/entropy.hpp"
#include "diastat/homog.hpp"

namespace diastat::json_io {

using Json = nlohmann::ordered_json;

/// {family, params, rank, a, b, dim, genus} with lowercase keys in this order.
Json descriptor_to_json(const catalog::DomainDescriptor& d);
catalog::DomainDescriptor descriptor_from_json(const Json& j);

/// {rank, p, q, b, gamma} with rationals encoded as "num/den" strings.
/// Parsing also accepts plain JSON integers.
Json root_constants_to_json(const homog::RootConstants& c);
homog::RootConstants root_constants_from_json(const Json& j);

/// {lower, upper, z0, tol, probes:[{c, verdict, ratios}]}.
Json estimate_to_json(const entropy::EntropyEstimate& e);

/// Shortest representation with 9 significant digits ("%.9g").
std::string format_double(double x);

}  // namespace diastat::json_io
