#include "pqw/orbifold.hpp"

#include <numeric>
#include <sstream>

namespace pqw {

void BranchData::validate() const {
  check_input(base_genus >= 0, "base genus must be >= 0");
  for (std::size_t i = 0; i < indices.size(); ++i) {
    check_input(indices[i] >= 2, "branch indices must be >= 2");
    check_input(i == 0 || indices[i - 1] <= indices[i], "branch indices must be sorted ascending");
  }
}

std::string BranchData::to_string() const {
  std::ostringstream s;
  s << '[' << base_genus << ';';
  for (std::size_t i = 0; i < indices.size(); ++i) s << (i ? "," : " ") << indices[i];
  s << ']';
  return s.str();
}

OrbifoldGroup make_orbifold_group(const BranchData& branch) {
  branch.validate();
  OrbifoldGroup og;
  og.branch = branch;
  Presentation p;
  for (int i = 1; i <= branch.base_genus; ++i) {
    p.names.push_back("a" + std::to_string(i));
    p.names.push_back("b" + std::to_string(i));
  }
  for (int k = 1; k <= branch.r(); ++k) p.names.push_back("c" + std::to_string(k));
  p.ngens = int(p.names.size());

  for (int k = 0; k < branch.r(); ++k) {
    p.add_relator(Word::generator_power(og.c_gen(k), branch.indices[std::size_t(k)]));
  }
  Word lng;
  for (int i = 0; i < branch.base_genus; ++i) {
    int a = 2 * i + 1, b = 2 * i + 2;
    lng.append(Word{Letter(a), Letter(b), Letter(-a), Letter(-b)});
  }
  for (int k = 0; k < branch.r(); ++k) lng.push(Letter(og.c_gen(k)));
  p.add_relator(lng);  // dropped automatically if it reduces to the identity
  og.pres = p;
  return og;
}

int GeneratingVector::image_of_letter(Letter l) const {
  int g = generator_of(l);
  check_internal(g <= int(images.size()), "letter outside generating vector");
  int img = images[std::size_t(g) - 1];
  return l > 0 ? img : target.inv(img);
}

int GeneratingVector::image_of_word(const Word& w) const {
  int x = target.identity();
  for (Letter l : w) x = target.mul(x, image_of_letter(l));
  return x;
}

GeneratingVector validate_generating_vector(const OrbifoldGroup& og, const FiniteGroup& target,
                                            const std::vector<int>& images) {
  check_input(int(images.size()) == og.num_gens(),
              "generating vector needs one image per orbifold generator");
  for (int v : images) check_input(v >= 0 && v < target.order(), "image out of range");
  GeneratingVector gv{target, images};

  for (int k = 0; k < og.branch.r(); ++k) {
    int m = og.branch.indices[std::size_t(k)];
    int ord = target.element_order(images[std::size_t(og.c_gen(k)) - 1]);
    check_input(ord == m, "generating vector: order failure at c" + std::to_string(k + 1) +
                              ": image has order " + std::to_string(ord) + ", branch index is " +
                              std::to_string(m));
  }
  for (const Word& r : og.pres.relators) {
    int v = gv.image_of_word(r);
    if (v != target.identity()) {
      bool is_power = r.size() >= 2 && r[0] == r[1];
      std::string which = is_power ? "a power relator" : "the long relator";
      throw ValidationError("generating vector: " + which + " maps to " + target.label(v) +
                            ", not the identity");
    }
  }
  Subgroup s = subgroup_generated(target, images);
  check_input(s.group.order() == target.order(),
              "generating vector: images generate a proper subgroup of order " +
                  std::to_string(s.group.order()));
  return gv;
}

long long riemann_hurwitz_genus(long long group_order, const BranchData& branch) {
  branch.validate();
  check_input(group_order >= 1, "group order must be >= 1");
  // 2g - 2 = N(2g'-2) + N sum(1 - 1/m), computed over a common denominator.
  long long den = 1;
  for (int m : branch.indices) den = std::lcm(den, (long long)m);
  long long num = group_order * (2LL * branch.base_genus - 2) * den;
  for (int m : branch.indices) num += group_order * (den - den / m);
  check_input(num % den == 0, "inconsistent branch data: 2g-2 is not an integer");
  long long twog2 = num / den;
  check_input((twog2 + 2) % 2 == 0, "inconsistent branch data: genus is not an integer");
  long long g = (twog2 + 2) / 2;
  check_input(g >= 0, "inconsistent branch data: negative genus");
  return g;
}

long long invariant_deformation_dim(const BranchData& branch) {
  branch.validate();
  long long gp = branch.base_genus;
  long long d = 4 * gp - 4;
  for (int m : branch.indices) d += (2LL * (m - 1)) / m;
  if (d < 0) return 0;
  if (d > 2 * gp - 2) return d - gp + 1;
  throw ValidationError("invariant_deformation_dim: degree " + std::to_string(d) +
                        " is in the ambiguous Riemann-Roch range for base genus " +
                        std::to_string(gp));
}

long long invariant_b1_contribution(const BranchData& branch) {
  branch.validate();
  return 2LL * branch.base_genus;
}

}  // namespace pqw
