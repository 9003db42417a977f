#pragma once

#include <cstdint>
#include <vector>

#include "pqw/coset_table.hpp"
#include "pqw/presentation.hpp"

namespace pqw {

struct SchreierOptions {
  bool parallel = true;
  // Cap on deduplicated relators; 0 = unlimited. When hit, the result is
  // marked truncated and must not be used as a presentation.
  std::int64_t max_relators = 0;
  int block_pairs = 1 << 15;  // (coset, relator) pairs per parallel block
};

// Rewrites subgroup words over the Schreier generators of a spanning tree.
class SchreierRewriter {
public:
  SchreierRewriter() = default;
  SchreierRewriter(const CosetTable& table);

  int nsgens() const { return nsgens_; }
  // Schreier generator index for the edge (coset, g), 0 on tree edges.
  int sgen(int coset, int g) const {
    return sgen_of_[std::size_t(coset) * ngens_ + std::size_t(g - 1)];
  }
  // Coset/generator pair of a Schreier generator.
  std::pair<int, int> edge_of(int sgen) const;

  // Word over Schreier generators for an ambient word tracing 0 -> 0.
  // ValidationError if the word leaves the subgroup.
  Word rewrite(const CosetTable& table, const Word& ambient) const;
  // Relator trace: rewrite of t_c * r * t_c^-1, read off by tracing r from c.
  Word rewrite_from(const CosetTable& table, const Word& w, int start) const;
  // The ambient word t_c * x * t_{c.x}^-1 represented by a Schreier generator.
  Word ambient_word(const CosetTable& table, int sgen) const;

private:
  int ngens_ = 0;
  int nsgens_ = 0;
  std::vector<std::int32_t> sgen_of_;
  std::vector<std::int64_t> edge_of_;
};

struct SubgroupPresentation {
  Presentation pres;  // over Schreier generators, auto-named
  SchreierRewriter rewriter;
  std::int64_t raw_relator_count = 0;
  std::int64_t distinct_relator_count = 0;
  bool truncated = false;
};

// Subgroup presentation on Schreier generators: relators are the traces of
// every ambient relator from every coset, freely and cyclically reduced and
// deduplicated by canonical form. The (coset, relator) traces are independent
// and run as an OpenMP-parallel kernel over fixed-size blocks; the merge is
// in deterministic (coset, relator) order, so parallel and serial runs build
// byte-identical presentations.
SubgroupPresentation reidemeister_schreier(const Presentation& ambient,
                                           const CosetTable& table,
                                           const SchreierOptions& opt = {});

}  // namespace pqw
