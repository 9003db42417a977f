#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "pqw/presentation.hpp"

namespace pqw {

struct SimplifyOptions {
  // Eliminate a generator only when its defining relator is at most this long.
  int max_defining_length = 256;
  // Skip an elimination if it would push any relator beyond this length.
  int max_relator_length = 4096;
  // false: only length <= 2 defining relators (plus dedup and cyclic
  // reduction). true: any relator in which some generator occurs exactly once.
  bool aggressive = true;
};

// Tietze-transformation result. The presented group is unchanged up to
// isomorphism; map_word carries words over the original generators to words
// over the surviving ones.
struct Simplified {
  Presentation pres;
  std::vector<std::pair<int, Word>> log;  // (eliminated gen, replacement)
  std::vector<int> renumber;              // 1-based original gen -> new gen, 0 if eliminated
  std::int64_t eliminated = 0;

  Word map_word(Word w) const;
};

// Replaces every occurrence of generator g in w by `replacement` (inverted for
// inverse letters) and freely reduces.
Word substitute(const Word& w, int g, const Word& replacement);

Simplified simplify(const Presentation& p, const SimplifyOptions& opt = {});

}  // namespace pqw
