#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "pqw/coset_table.hpp"
#include "pqw/presentation.hpp"

namespace pqw {

struct EnumerationLimits {
  std::int64_t max_cosets = 2'000'000;
  // Total coset definitions, counting ones later merged away; 0 = 4*max_cosets.
  std::int64_t max_definitions = 0;
  // Cap on deduplicated relators in subgroup presentations.
  std::int64_t max_relators = 1'000'000;

  std::int64_t definition_budget() const {
    return max_definitions > 0 ? max_definitions : 4 * max_cosets;
  }
};

// Enumeration gave up within the configured limits. Never a wrong answer:
// the group may still be finite.
struct Undetermined {
  std::string reason;
  std::int64_t cosets_alive = 0;
  std::int64_t cosets_defined = 0;
};

using ToddCoxeterResult = std::variant<CosetTable, Undetermined>;

// HLT-style coset enumeration with relator filling and coincidence merging.
// On success the table is complete, standardized, and carries a transversal;
// the coset count equals the subgroup index (the group order for the trivial
// subgroup).
ToddCoxeterResult todd_coxeter(const Presentation& p,
                               const std::vector<Word>& subgroup_generators = {},
                               const EnumerationLimits& limits = {});

}  // namespace pqw
