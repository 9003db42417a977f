#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "pqw/coset_table.hpp"
#include "pqw/finite_group.hpp"
#include "pqw/presentation.hpp"
#include "pqw/todd_coxeter.hpp"

namespace pqw {

// Element-level view of a homomorphism from a presentation onto finite data,
// together with a canonical key for right cosets of a chosen subgroup U.
// Elements are opaque 64-bit codes.
class QuotientEval {
public:
  virtual ~QuotientEval() = default;
  virtual std::uint64_t identity() const = 0;
  // x * image(l); l may be an inverse letter.
  virtual std::uint64_t mul(std::uint64_t x, Letter l) const = 0;
  // Canonical representative of U * x.
  virtual std::uint64_t coset_key(std::uint64_t x) const = 0;
  // Known index [Q : U], or 0 when not known in advance.
  virtual std::uint64_t expected_index() const = 0;

  std::uint64_t eval(const Word& w) const {
    std::uint64_t x = identity();
    for (Letter l : w) x = mul(x, l);
    return x;
  }
};

// Quotient given by a finite group, one image per generator, and a subgroup
// element set.
class FiniteGroupQuotient : public QuotientEval {
public:
  FiniteGroupQuotient(FiniteGroup q, std::vector<int> gen_images,
                      std::vector<int> subgroup_elements);
  std::uint64_t identity() const override;
  std::uint64_t mul(std::uint64_t x, Letter l) const override;
  std::uint64_t coset_key(std::uint64_t x) const override;
  std::uint64_t expected_index() const override;

private:
  FiniteGroup q_;
  std::vector<int> images_, inv_images_, subgroup_;
};

// Quotient of a direct product of presentations onto G^n, with U the diagonal
// subgroup. Elements are packed base-|G| digit strings, one digit per factor.
// Used for the fiber-product group: the preimage of the diagonal has index
// |G|^(n-1).
class DiagonalProductQuotient : public QuotientEval {
public:
  // letter_factor/letter_image: per signed-letter column (CosetTable::col
  // indexing) the factor it belongs to and its image in G.
  DiagonalProductQuotient(FiniteGroup g, int nfactors, std::vector<int> letter_factor,
                          std::vector<int> letter_image);
  std::uint64_t identity() const override;
  std::uint64_t mul(std::uint64_t x, Letter l) const override;
  std::uint64_t coset_key(std::uint64_t x) const override;
  std::uint64_t expected_index() const override;

private:
  FiniteGroup g_;
  int nfactors_;
  std::vector<int> letter_factor_, letter_image_;
  std::vector<std::uint64_t> pow_;  // |G|^i
};

// Builds the coset table of the preimage of U by BFS over quotient values.
// Every relator must evaluate to the identity element (not merely fix the
// coset of U); otherwise ValidationError. Exceeds limits.max_cosets ->
// LimitError. The table comes standardized with a transversal built in
// `letter_order`.
CosetTable coset_table_from_quotient(const Presentation& p, const QuotientEval& q,
                                     const EnumerationLimits& limits = {},
                                     const std::vector<Letter>& letter_order = {});

}  // namespace pqw
