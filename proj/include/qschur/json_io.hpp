#pragma once

#include <string>

#include "json.hpp"
#include "qschur/blm.hpp"
#include "qschur/identities.hpp"
#include "qschur/qschur.hpp"
#include "qschur/sergeev.hpp"

namespace qschur {

using json = nlohmann::json;

// malformed or ill-typed JSON input
struct ParseError : Error {
  using Error::Error;
};

json to_json(const GaussianRational& x);                 // {"re":"p/q","im":"p/q"}
json to_json(const NatMatrix& m);                        // [[..],..]
json to_json(const SuperMatrix& m);                      // {"even":[[..]],"odd":[[..]]}
json to_json(const QElement& q);                         // [{"matrix":..,"coeff":..}, ..] in canonical order
json to_json(const SergeevElement& e);                   // [{"perm":[..],"mask":[0,1,..],"coeff":..}, ..]
json to_json(const ASpec& s);                            // {"matrix":..,"j":[..]}
json to_json(const AComb& c);                            // [{"matrix":..,"j":..,"coeff":..}, ..]
json to_json(const TruncatedFamily& f);                  // [{"r":0,"terms":[..]}, ..]
json to_json(const IdentitySuiteReport& rep);
json to_json(const RelationReport& rep);
json to_json(const TriangularResult& t);

GaussianRational scalar_from_json(const json& j);
// n = 0 accepts any size
SuperMatrix super_matrix_from_json(const json& j, int n = 0);
QElement qelement_from_json(const json& j, int n, int r);
SergeevElement sergeev_from_json(const json& j, int r);
json parse_json(const std::string& text);

}  // namespace qschur
