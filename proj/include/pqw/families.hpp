#pragma once

#include <optional>
#include <string>

#include "pqw/product_quotient.hpp"

namespace pqw {

// G = Z_4^2.
FiniteGroup fermat_group();
// The involution with matrix (1 2 / 2 3) over Z_4.
Homomorphism twist_involution(const FiniteGroup& g);
// Element indices of H = <(2,0),(0,2)>.
std::vector<int> subgroup_h_elements(const FiniteGroup& g);

// X_n = C^n / Z_4^2: every factor of type [0;4,4,4]; the first factor carries
// the canonical vector ((1,0),(0,1),(3,3)) and factors 2..n its image under
// the twist involution, computed by composition.
ProductQuotientSpec x_family(int n);
// Y_n = C^n / H, built as the intermediate cover of X_n by H.
ProductQuotientSpec y_family(int n);

// Reference values the tool reproduces for the two families.
struct FamilyExpectations {
  long long h1_theta = 0;
  long long b1 = 0;
  long long marked_tuples = 0;     // tuples with non-trivial stabilizer
  long long singular_points = 0;
  long long pi1_order = 0;
  int pi1_rank = 0;                // elementary abelian 2-group rank
  std::optional<long long> cover_singularities;  // X family only
  bool beyond_verified = false;    // outside the n = 2..5 range
};

FamilyExpectations expected_for(char family, int n);

}  // namespace pqw
