#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pqw/errors.hpp"

namespace pqw {

// A finite group given by its full multiplication table. Values are immutable
// after construction and safe to copy and share. Group axioms are checked on
// construction: Latin-square rows/columns and a two-sided identity always,
// associativity exhaustively for order <= 512.
class FiniteGroup {
public:
  static constexpr long long kDefaultOrderLimit = 1'000'000;

  // Empty placeholder; every factory below returns a fully checked group.
  FiniteGroup() = default;

  static FiniteGroup from_table(const std::vector<std::vector<int>>& table,
                                std::vector<std::string> labels = {});
  // Direct product of cyclic groups; elements labeled "(r1,...,rk)".
  static FiniteGroup abelian(const std::vector<int>& invariant_factors,
                             long long order_limit = kDefaultOrderLimit);

  int order() const { return order_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[std::size_t(a) * order_ + b]; }
  int inv(int a) const { return inverse_[std::size_t(a)]; }
  // g x g^-1
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }
  int pow(int a, long long e) const;
  int element_order(int a) const;
  bool is_abelian() const;

  const std::string& label(int a) const { return labels_[std::size_t(a)]; }
  std::optional<int> element_by_label(const std::string& s) const;

  // Invariant factors passed to abelian(); empty for other constructors.
  const std::vector<int>& abelian_factors() const { return abelian_factors_; }
  // Residue tuple of an element of a group built by abelian().
  std::vector<int> residues(int a) const;
  int element_of_residues(const std::vector<int>& r) const;

  bool operator==(const FiniteGroup& o) const {
    return table_ == o.table_ && labels_ == o.labels_;
  }

private:
  void finish_construction();

  int order_ = 0;
  int identity_ = 0;
  std::vector<int> table_;  // row-major order x order
  std::vector<int> inverse_;
  std::vector<std::string> labels_;
  std::vector<int> abelian_factors_;
};

// A subgroup given by its sorted ambient element set plus a derived group
// structure of its own, so every group operation applies to it directly.
struct Subgroup {
  std::vector<int> elements;  // sorted ambient indices, identity included
  FiniteGroup group;          // Cayley table over `elements`

  int ambient_of(int i) const { return elements[std::size_t(i)]; }
  int index_of_ambient(int a) const;  // -1 if absent
  bool contains(int ambient) const { return index_of_ambient(ambient) >= 0; }
};

Subgroup subgroup_generated(const FiniteGroup& g, const std::vector<int>& generators);
Subgroup subgroup_from_elements(const FiniteGroup& g, std::vector<int> elements);
bool is_normal(const FiniteGroup& g, const std::vector<int>& subgroup_elements);
// Sorted element set of <a>.
std::vector<int> cyclic_subgroup_elements(const FiniteGroup& g, int a);
// Sorted intersection of two sorted element sets.
std::vector<int> intersect_sorted(const std::vector<int>& a, const std::vector<int>& b);

// Total map between finite groups, verified multiplicative on construction.
class Homomorphism {
public:
  Homomorphism(FiniteGroup source, FiniteGroup target, std::vector<int> images);

  const FiniteGroup& source() const { return source_; }
  const FiniteGroup& target() const { return target_; }
  int operator()(int x) const { return images_[std::size_t(x)]; }
  const std::vector<int>& images() const { return images_; }
  bool is_bijective() const;
  Homomorphism after(const Homomorphism& inner) const;  // this o inner

private:
  FiniteGroup source_, target_;
  std::vector<int> images_;
};

// The automorphism (a_1..a_k) -> matrix * (a_1..a_k) mod m of a homocyclic
// group Z_m^k built by FiniteGroup::abelian. Throws if the matrix is not
// invertible mod m or the group is not homocyclic abelian.
Homomorphism automorphism_from_matrix(const FiniteGroup& g,
                                      const std::vector<std::vector<int>>& matrix);

struct OrbitInfo {
  std::vector<int> points;                    // sorted
  std::vector<std::vector<int>> stabilizers;  // parallel to points, sorted element sets
};

// Orbits and per-point stabilizers of a group action on {0..n_points-1}.
// The action map is validated: the identity must fix every point and
// compatibility g(h(p)) == (gh)(p) is checked exhaustively when affordable,
// on random samples otherwise.
std::vector<OrbitInfo> orbits_and_stabilizers(const FiniteGroup& g,
                                              const std::function<int(int, int)>& action,
                                              int n_points);

}  // namespace pqw
