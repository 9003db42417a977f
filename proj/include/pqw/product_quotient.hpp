#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pqw/finite_group.hpp"
#include "pqw/orbifold.hpp"

namespace pqw {

struct Factor {
  BranchData branch;
  GeneratingVector vector;
  long long genus = 0;  // Riemann-Hurwitz genus of the covering curve
};

// The full input datum of a diagonal action on a product of curves: one group
// and per-factor branch data with a validated generating vector. All factor
// genera must be >= 2.
struct ProductQuotientSpec {
  FiniteGroup group;
  std::vector<Factor> factors;
  std::string label;

  int n() const { return int(factors.size()); }
};

ProductQuotientSpec make_spec(const FiniteGroup& group,
                              const std::vector<std::pair<BranchData, std::vector<int>>>& data,
                              std::string label = {});

// A point of one factor curve with non-trivial stabilizer, identified by its
// branch orbit and a coset of the local stabilizer: the point g<c_k> carries
// stabilizer g<c_k>g^-1, and the orbit has |G|/m_k points.
struct MarkedPoint {
  int factor = 0;        // 0-based
  int branch_index = 0;  // 0-based index into branch.indices
  int coset_rep = 0;     // least element of the coset
  std::vector<int> stabilizer;  // sorted

  bool operator==(const MarkedPoint&) const = default;
};

std::vector<MarkedPoint> marked_points(const ProductQuotientSpec& spec, int factor);

struct SingularityRecord {
  std::vector<MarkedPoint> representative;  // one marked point per factor
  std::vector<int> stabilizer;              // common stabilizer, non-trivial
  long long orbit_size = 0;
  std::string type;  // "1/2(1,...,1)" or "undetermined(order m)"

  bool operator==(const SingularityRecord&) const = default;
};

struct Census {
  std::vector<SingularityRecord> records;
  long long marked_tuples = 0;    // tuples with non-trivial common stabilizer
  long long singular_points = 0;  // = records.size()
  bool all_half_type = false;

  long long half_type_points() const;
  bool operator==(const Census&) const = default;
};

struct CensusOptions {
  bool parallel = true;
  std::int64_t budget = 10'000'000;  // tuple enumeration cap
};

// Enumerates tuples of marked points across the factors, keeps those whose
// stabilizers intersect non-trivially in G, and groups them into G-orbits.
// An order-2 stabilizer on an n >= 2 product acts by -1 on every tangent
// direction, hence the 1/2(1,...,1) tag; other stabilizer orders are reported
// undetermined. The tuple filter parallelizes over the first factor's marked
// points; the merge is deterministic.
Census singular_census(const ProductQuotientSpec& spec, const CensusOptions& opt = {});

// Sum over factors of the invariant deformation dimension; factors must have
// genus >= 2 so that H^0(C, Theta_C) = 0.
long long h1_theta(const ProductQuotientSpec& spec);

// Sum over factors of 2 * (base genus of the factor quotient).
long long betti_b1(const ProductQuotientSpec& spec);

struct CoverReport {
  long long degree = 0;
  bool unramified = false;
  std::vector<std::string> stabilizer_elements_outside;  // labels; empty iff unramified
};

struct EtaleCover {
  // Restricted spec over the subgroup; absent when a factor quotient acquires
  // positive base genus, which this tool does not model.
  std::optional<ProductQuotientSpec> restricted;
  CoverReport report;
  std::string note;
};

// Intermediate quotient by a normal subgroup H: recomputes per-factor branch
// data and generating vectors for the H-action and reports the cover degree
// |G/H| and whether Z/H -> Z/G is unramified (every non-trivial stabilizer of
// the diagonal action lies in H).
EtaleCover etale_intermediate_cover(const ProductQuotientSpec& spec,
                                    const std::vector<int>& subgroup_elements);

struct KodairaReport {
  bool genera_ok = false;     // every factor genus >= 2
  bool quasi_etale = false;   // fixed locus has codimension >= 2 (n >= 2 here)
  bool terminal = false;      // all 1/2(1,...,1) and n >= 3
  std::optional<long long> kodaira_dimension;  // = n when certified
  std::vector<std::string> notes;
};

KodairaReport kodaira_report(const ProductQuotientSpec& spec, const Census& census);

}  // namespace pqw
