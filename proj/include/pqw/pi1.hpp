#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pqw/coset_table.hpp"
#include "pqw/product_quotient.hpp"
#include "pqw/schreier.hpp"
#include "pqw/simplify.hpp"
#include "pqw/snf.hpp"
#include "pqw/todd_coxeter.hpp"

namespace pqw {

// The group of lifts of the diagonal action: the preimage of the diagonal
// subgroup of G^n inside T_1 x ... x T_n. The coset table is built by direct
// evaluation in the finite quotient (index |G|^(n-1)), never by blind
// enumeration, and carries a Schreier presentation of the subgroup.
struct FiberProduct {
  Presentation ambient;                  // product presentation with cross commutators
  std::vector<int> gen_offset;           // 0-based generator offset per factor
  std::vector<OrbifoldGroup> orbifolds;  // local factor presentations
  CosetTable table;
  SubgroupPresentation schreier;
  long long index = 0;

  // Ambient generator id of local generator `local` (1-based) of `factor`.
  int ambient_gen(int factor, int local) const {
    return gen_offset[std::size_t(factor)] + local;
  }
  // Image tuple of a word of the product under the factor epimorphisms.
  std::vector<int> factor_values(const ProductQuotientSpec& spec, const Word& w) const;
};

enum class FixMode {
  // Conjugators range over a fiber transversal per factor, with the first
  // factor's conjugator normalized to the identity representative. Sound:
  // conjugation by diagonal-value tuples of the subgroup absorbs exactly one
  // coordinate's conjugator.
  Normalized,
  // No normalization: the first factor's conjugator ranges over the whole
  // transversal too. Strictly more relators, same normal closure.
  Unnormalized,
  // Every conjugator pinned to the identity representative. NOT sound as a
  // relator set: only diagonal conjugation is absorbed by the normal closure,
  // so this under-generates Fix and yields a quotient that surjects onto the
  // true pi1 (the certified order is a proper multiple in general, e.g. 32
  // instead of 8 for the two-factor [0;4,4,4] family). Kept for diagnostics.
  OrbitReduced,
};

struct FixCoordinate {
  int branch_index = 0;  // 0-based k
  int exponent = 0;      // a in 1..m_k-1
  Word conjugator;       // ambient-letter word delta with coordinate delta c_k^a delta^-1
};

// One generator of Fix(G): an elliptic tuple, each coordinate a conjugate
// c_k^a with all factor images equal to `common_value`.
struct FixGenerator {
  int common_value = 0;
  std::vector<FixCoordinate> coords;  // one per factor
  Word ambient_word;
  Word rewritten;  // canonical cyclic form over Schreier generators
};

struct Pi1Options {
  EnumerationLimits limits;
  FixMode fix_mode = FixMode::Normalized;
  bool parallel = true;
  std::vector<Letter> transversal_order;  // BFS letter order; empty = canonical
  SimplifyOptions simplify;
};

// Throws LimitError when |G|^(n-1) exceeds the coset budget or the deduped
// Schreier relator count exceeds the relator cap.
FiberProduct build_fiber_product(const ProductQuotientSpec& spec, const Pi1Options& opt = {});

std::vector<FixGenerator> enumerate_fix_generators(const ProductQuotientSpec& spec,
                                                   const FiberProduct& fp,
                                                   const Pi1Options& opt = {});

enum class OrderStatus { Certified, Undetermined };

struct Pi1Diagnostics {
  long long index = 0;
  long long schreier_generators = 0;
  long long raw_relators = 0;
  long long distinct_relators = 0;
  long long fix_generators = 0;
  long long simplified_generators = 0;
  long long simplified_relators = 0;
  long long enumerated_cosets = 0;
  std::string undetermined_reason;
  double wall_ms = 0;
};

struct Pi1Result {
  OrderStatus status = OrderStatus::Undetermined;
  long long order = 0;                       // meaningful only when Certified
  std::optional<AbelianInvariants> abelian;  // H_1; present whenever a presentation was built
  bool certified_abelian = false;            // coset count matched |H_1|
  std::string isomorphism;                   // abelian invariants when certified abelian
  Presentation presentation;                 // simplified
  std::optional<CosetTable> regular;         // regular representation when Certified
  Pi1Diagnostics diag;
};

// pi_1(Z/G) = fiber product modulo the normal closure of the Fix generators.
// The order is only reported after a completed coset enumeration; an
// exhausted budget yields Undetermined with the abelianization (when
// available), never a guessed order.
Pi1Result armstrong_pi1(const ProductQuotientSpec& spec, const Pi1Options& opt = {});

struct UniversalCoverReport {
  long long pi1_order = 0;
  long long base_singular_points = 0;  // 1/2(1,...,1) points of Z/G
  long long cover_singularities = 0;   // pi1_order * base_singular_points
  bool non_contractible = false;
  std::vector<std::string> notes;
};

// Refuses (ValidationError) when the order is not certified.
UniversalCoverReport universal_cover_report(const ProductQuotientSpec& spec,
                                            const Pi1Result& pi1, const Census& census);

// Helpers for the invariance properties.
ProductQuotientSpec permute_factors(const ProductQuotientSpec& spec, const std::vector<int>& perm);
ProductQuotientSpec apply_uniform_automorphism(const ProductQuotientSpec& spec,
                                               const Homomorphism& aut);

}  // namespace pqw
