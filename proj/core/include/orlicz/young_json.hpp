#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "orlicz/young.hpp"

namespace orlicz {

// Builds a Young function from its JSON description, e.g.
//   {"kind":"power","p":2.0}
//   {"kind":"conjugate","base":{"kind":"exp_minus_one"}}
//   {"kind":"phi_theta","base":{...},"theta":0.5}
// Throws ParseError (without a location) on unknown kinds or bad fields;
// callers that hold the source text attach the position.
YoungFunction parse_young(const nlohmann::json& desc);

struct CatalogEntry {
  std::string name;
  YoungFunction phi;
};

// The seven reference functions used by the verification suites:
// t^2, t log(3+t), e^t-1, the deadzone t-1, t capped at 1, the conjugate of
// t^3 and the theta-transform of t^2 at theta = 3/4.
std::vector<CatalogEntry> default_catalog();

}  // namespace orlicz
