#pragma once

#include <string>
#include <vector>

#include "pqw/cyclotomic.hpp"
#include "pqw/finite_group.hpp"
#include "pqw/product_quotient.hpp"

namespace pqw {

// Point of P^2 over Q(zeta_8); equality is projective. The canonical
// representative scales the last nonzero coordinate to 1.
struct ProjectivePoint {
  std::array<Cyclotomic, 3> x;

  ProjectivePoint canonical() const;
  bool operator==(const ProjectivePoint& o) const;
  std::string to_string() const;
  // Stable sort key (canonical coordinate strings).
  std::string sort_key() const;
};

// x0^4 + x1^4 + x2^4 = 0, evaluated exactly.
bool on_curve(const ProjectivePoint& p);

// The Z_4^2 action (a,b) . (x0:x1:x2) = (zeta_4^a x0 : zeta_4^b x1 : x2);
// `group` must be FiniteGroup::abelian({4,4}).
ProjectivePoint fermat_act(const FiniteGroup& group, int g, const ProjectivePoint& p);

// Fixed points of a non-identity element on the curve. The fixed locus in P^2
// is a union of coordinate points and at most one coordinate line (decided by
// which of the weights zeta_4^a, zeta_4^b, 1 coincide); a line x_i = 0 meets
// the curve in the four exact solutions of x^4 = -1.
std::vector<ProjectivePoint> fermat_fixed_points(const FiniteGroup& group, int g);

// Union of the fixed loci over all non-identity elements, sorted canonically.
std::vector<ProjectivePoint> fermat_marked_points(const FiniteGroup& group);

// The invariant map f(x) = (x0^4 : x1^4) to P^1, as a canonical label.
std::string fermat_quotient_value(const ProjectivePoint& p);

struct FermatOrbit {
  std::string representative;
  ProjectivePoint representative_point;  // canonical coordinates
  int length = 0;
  std::string stabilizer_generator;  // label of a generator
  int stabilizer_order = 0;
  std::string branch_point;  // image under f
};

struct FermatReport {
  bool pass = false;
  int marked_count = 0;
  std::vector<FermatOrbit> orbits;
  std::vector<int> subgroup_orbit_lengths;  // under the restriction subgroup
  std::vector<std::string> branch_points;
  std::vector<std::string> failures;
};

// Recomputes the whole fixed-point table of the curve from scratch and checks
// it: 12 marked points in 3 orbits of length 4 with cyclic order-4 stabilizers
// generated by (1,0), (0,1), (1,1) up to inversion; f is invariant and
// branched exactly over (0:1), (1:0), (1:-1) with index 4; the restricted
// subgroup action splits the marked points into 6 orbits of length 2.
// `subgroup_elements` defaults to H = <(2,0),(0,2)> when empty.
FermatReport verify_fixed_point_table(const FiniteGroup& group,
                                      std::vector<int> subgroup_elements = {});

// Matches the group-level marked points of a one-factor spec on this curve
// against the coordinate-level computation: a stabilizer-preserving bijection
// (abstract coset g<c_k> -> the point g . p_k) must exist. Returns failure
// descriptions; empty means the two censuses agree point for point.
std::vector<std::string> marked_point_bijection_failures(const FiniteGroup& group,
                                                         const ProductQuotientSpec& spec);

}  // namespace pqw
