#include "diastat/json_io.hpp"

#include <cstdio>
#include <cstdlib>

#include "diastat/errors.hpp"

namespace diastat::json_io {

namespace {

std::vector<Rational> rationals_from_json(const Json& array, const char* field) {
  if (!array.is_array()) {
    throw InvalidParameterError(std::string("field '") + field +
                                "' must be an array");
  }
  std::vector<Rational> values;
  values.reserve(array.size());
  for (const auto& item : array) {
    if (item.is_number_integer()) {
      values.emplace_back(item.get<long long>());
    } else if (item.is_string()) {
      values.push_back(parse_rational(item.get<std::string>()));
    } else {
      throw InvalidParameterError(std::string("field '") + field +
                                  "' must hold integers or \"num/den\" strings");
    }
  }
  return values;
}

Json rationals_to_json(const std::vector<Rational>& values) {
  Json array = Json::array();
  for (const auto& r : values) array.push_back(to_string(r));
  return array;
}

}  // namespace

Json descriptor_to_json(const catalog::DomainDescriptor& d) {
  Json j;
  j["family"] = catalog::to_string(d.family);
  j["params"] = d.params;
  j["rank"] = d.rank;
  j["a"] = d.a;
  j["b"] = d.b;
  j["dim"] = d.dim;
  j["genus"] = d.genus;
  return j;
}

catalog::DomainDescriptor descriptor_from_json(const Json& j) {
  const auto family = catalog::family_from_string(j.at("family").get<std::string>());
  const auto params = j.at("params").get<std::vector<long long>>();
  // Reconstruct through the table so every invariant is revalidated.
  catalog::DomainDescriptor d = catalog::lookup_domain(family, params);
  for (const char* field : {"rank", "a", "b", "dim", "genus"}) {
    if (j.contains(field)) {
      const long long stored = j.at(field).get<long long>();
      const long long computed = field == std::string("rank")  ? d.rank
                                 : field == std::string("a")   ? d.a
                                 : field == std::string("b")   ? d.b
                                 : field == std::string("dim") ? d.dim
                                                               : d.genus;
      if (stored != computed) {
        throw InvalidParameterError(std::string("descriptor field '") + field +
                                    "' disagrees with the catalog value");
      }
    }
  }
  return d;
}

Json root_constants_to_json(const homog::RootConstants& c) {
  Json j;
  j["rank"] = c.rank;
  j["p"] = rationals_to_json(c.p);
  j["q"] = rationals_to_json(c.q);
  j["b"] = rationals_to_json(c.b);
  j["gamma"] = rationals_to_json(c.gamma);
  return j;
}

homog::RootConstants root_constants_from_json(const Json& j) {
  homog::RootConstants c;
  c.rank = j.at("rank").get<long long>();
  c.p = rationals_from_json(j.at("p"), "p");
  c.q = rationals_from_json(j.at("q"), "q");
  c.b = rationals_from_json(j.at("b"), "b");
  c.gamma = rationals_from_json(j.at("gamma"), "gamma");
  homog::validate(c);
  return c;
}

std::string format_double(double x) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.9g", x);
  return buffer;
}

namespace {

double round9(double x) { return std::strtod(format_double(x).c_str(), nullptr); }

}  // namespace

Json estimate_to_json(const entropy::EntropyEstimate& e) {
  Json j;
  j["lower"] = round9(e.lower);
  j["upper"] = round9(e.upper);
  Json z0 = Json::array();
  for (Eigen::Index i = 0; i < e.z0.size(); ++i) {
    z0.push_back(geometry::format_complex(e.z0[i]));
  }
  j["z0"] = z0;
  j["tol"] = round9(e.tol);
  Json probes = Json::array();
  for (const auto& probe : e.probes) {
    Json p;
    p["c"] = round9(probe.c);
    p["verdict"] = entropy::to_string(probe.verdict);
    Json ratios = Json::array();
    for (double r : probe.shells.ratios) ratios.push_back(round9(r));
    p["ratios"] = ratios;
    probes.push_back(std::move(p));
  }
  j["probes"] = std::move(probes);
  return j;
}

}  // namespace diastat::json_io
