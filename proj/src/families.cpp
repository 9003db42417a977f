#include "pqw/families.hpp"

namespace pqw {

FiniteGroup fermat_group() { return FiniteGroup::abelian({4, 4}); }

Homomorphism twist_involution(const FiniteGroup& g) {
  return automorphism_from_matrix(g, {{1, 2}, {2, 3}});
}

std::vector<int> subgroup_h_elements(const FiniteGroup& g) {
  Subgroup h = subgroup_generated(
      g, {g.element_of_residues({2, 0}), g.element_of_residues({0, 2})});
  return h.elements;
}

ProductQuotientSpec x_family(int n) {
  check_input(n >= 1, "the X family needs n >= 1");
  FiniteGroup g = fermat_group();
  Homomorphism a = twist_involution(g);

  BranchData branch;
  branch.indices = {4, 4, 4};
  std::vector<int> first = {g.element_of_residues({1, 0}), g.element_of_residues({0, 1}),
                            g.element_of_residues({3, 3})};
  std::vector<int> twisted;
  for (int v : first) twisted.push_back(a(v));

  std::vector<std::pair<BranchData, std::vector<int>>> data;
  data.emplace_back(branch, first);
  for (int i = 1; i < n; ++i) data.emplace_back(branch, twisted);
  return make_spec(g, data, "X-family n=" + std::to_string(n));
}

ProductQuotientSpec y_family(int n) {
  check_input(n >= 1, "the Y family needs n >= 1");
  ProductQuotientSpec x = x_family(n);
  EtaleCover cover = etale_intermediate_cover(x, subgroup_h_elements(x.group));
  check_internal(cover.report.degree == 4, "H cover of the X family has the wrong degree");
  // For n = 1 the cover P^1 -> P^1 is honestly ramified; from n = 2 on the
  // stabilizers of the diagonal action all lie in H.
  check_internal(n == 1 || cover.report.unramified,
                 "H cover of the X family is not unramified");
  check_internal(cover.restricted.has_value(), "H restriction did not produce a spec");
  ProductQuotientSpec y = *cover.restricted;
  y.label = "Y-family n=" + std::to_string(n);
  return y;
}

FamilyExpectations expected_for(char family, int n) {
  check_input(family == 'X' || family == 'Y', "family must be X or Y");
  check_input(n >= 1, "n must be >= 1");
  FamilyExpectations e;
  e.beyond_verified = n < 2 || n > 5;
  e.b1 = 0;
  long long pow4n = 1;
  for (int i = 0; i < n; ++i) pow4n *= 4;
  e.marked_tuples = 3 * pow4n;
  if (family == 'X') {
    e.h1_theta = 0;
    e.singular_points = n >= 2 ? 3 * (pow4n / 8) : 3;  // 3 * 2^(2n-3)
    e.pi1_rank = n + 1;
    e.pi1_order = 1LL << (n + 1);
    if (n >= 2) e.cover_singularities = e.pi1_order * e.singular_points;  // 3 * 2^(3n-2)
  } else {
    e.h1_theta = 3LL * n;
    e.singular_points = n >= 2 ? 3 * (pow4n / 2) : 3;
    e.pi1_rank = n - 1;
    e.pi1_order = 1LL << (n - 1);
  }
  return e;
}

}  // namespace pqw
