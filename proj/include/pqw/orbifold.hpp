#pragma once

#include <string>
#include <vector>

#include "pqw/finite_group.hpp"
#include "pqw/presentation.hpp"

namespace pqw {

// Signature [g'; m_1,...,m_r] of a quotient orbifold: base genus plus branch
// indices, kept sorted ascending as the canonical form.
struct BranchData {
  int base_genus = 0;
  std::vector<int> indices;

  void validate() const;
  int r() const { return int(indices.size()); }
  std::string to_string() const;
};

// The group T(g'; m_1,...,m_r) with generators a_1,b_1,...,a_g',b_g',c_1,...,c_r
// and relators c_k^{m_k} and [a_1,b_1]...[a_g',b_g'] c_1...c_r.
struct OrbifoldGroup {
  BranchData branch;
  Presentation pres;

  int num_gens() const { return 2 * branch.base_genus + branch.r(); }
  // 1-based generator index of c_k (k 0-based).
  int c_gen(int k) const { return 2 * branch.base_genus + k + 1; }
};

OrbifoldGroup make_orbifold_group(const BranchData& branch);

// Images of the orbifold generators in a finite group, defining an
// epimorphism T -> G. Validation enforces, with distinct diagnostics:
//   - every relator maps to the identity (in particular the long relator),
//   - order(image of c_k) == m_k exactly,
//   - the images generate G.
struct GeneratingVector {
  FiniteGroup target;
  std::vector<int> images;  // one per orbifold generator

  int image_of_letter(Letter l) const;
  int image_of_word(const Word& w) const;
};

GeneratingVector validate_generating_vector(const OrbifoldGroup& og, const FiniteGroup& target,
                                            const std::vector<int>& images);

// Genus of the total space of a degree-N cover with the given branch data:
// 2g - 2 = N(2g' - 2) + N * sum(1 - 1/m_k). Non-integral or negative genus
// raises ValidationError.
long long riemann_hurwitz_genus(long long group_order, const BranchData& branch);

// dim H^1(C, Theta_C)^G for a group acting with quotient of genus g' and the
// given branch indices: h^0 of a divisor of degree (4g'-4) + sum floor(2(1-1/m_k))
// on the quotient curve. Ambiguous Riemann-Roch ranges (g' >= 1 with
// 0 <= d <= 2g'-2) raise instead of guessing.
long long invariant_deformation_dim(const BranchData& branch);

// dim H^1(C, C)^G = 2 g'.
long long invariant_b1_contribution(const BranchData& branch);

}  // namespace pqw
