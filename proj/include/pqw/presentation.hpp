#pragma once

#include <string>
#include <vector>

#include "pqw/word.hpp"

namespace pqw {

// Generators plus relator words. Relators are stored freely reduced and
// non-empty; words reducing to the identity are dropped on insertion.
struct Presentation {
  int ngens = 0;
  std::vector<std::string> names;  // either empty or one name per generator
  std::vector<Word> relators;

  Presentation() = default;
  explicit Presentation(int n) : ngens(n) {}
  Presentation(std::vector<std::string> gen_names, std::vector<Word> rels);

  std::string gen_name(int g) const;
  int gen_by_name(const std::string& name) const;  // -1 if absent

  // Free-reduces, drops empty results, rejects out-of-range indices.
  void add_relator(const Word& w);
  void check_valid() const;

  long long total_relator_length() const;
};

// Debug/golden text format:
//   gens: a b c
//   rel: a^4
//   rel: a b -c^2
// One syllable per whitespace-separated token, `-` prefix for inverses,
// caret exponents for runs. Round-trips bit-exact.
std::string to_text(const Presentation& p);
Presentation presentation_from_text(const std::string& text);

}  // namespace pqw
