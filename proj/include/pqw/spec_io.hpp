#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pqw/product_quotient.hpp"
#include "pqw/todd_coxeter.hpp"

namespace pqw {

// Parsed input file: the spec itself plus optional subgroup descriptor and
// limit overrides.
struct SpecDocument {
  ProductQuotientSpec spec;
  std::optional<std::vector<int>> subgroup;  // element indices in spec.group
  std::optional<EnumerationLimits> limits;
};

// ValidationError carries a field path ("factors[1].vector[2]: ...") for
// semantic problems and the byte position for JSON syntax errors.
SpecDocument parse_spec_document(const nlohmann::json& j);
SpecDocument load_spec_document(const std::string& path);

// "max-cosets=K,max-relators=K[,max-definitions=K]" on top of `base`.
EnumerationLimits parse_limits(const std::string& s, EnumerationLimits base = {});

nlohmann::json spec_echo_json(const ProductQuotientSpec& spec);

}  // namespace pqw
