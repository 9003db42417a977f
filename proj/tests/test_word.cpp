#include <doctest.h>

#include <random>

#include "pqw/word.hpp"

using namespace pqw;

namespace {

Word random_word(std::mt19937& rng, int ngens, int maxlen) {
  std::uniform_int_distribution<int> len(0, maxlen);
  std::uniform_int_distribution<int> gen(1, ngens);
  std::uniform_int_distribution<int> sign(0, 1);
  Word w;
  int n = len(rng);
  for (int i = 0; i < n; ++i) {
    int g = gen(rng);
    w.push(sign(rng) ? Letter(g) : Letter(-g));
  }
  return w;
}

}  // namespace

TEST_CASE("free reduction basics") {
  CHECK((Word{1, -1}).empty());
  CHECK(Word{1, 2} * Word{-2, 3} == Word{1, 3});
  CHECK(Word{1, 2, 3}.inverse() == Word{-3, -2, -1});
  CHECK(Word::generator_power(2, 3) == Word{2, 2, 2});
  CHECK(Word::generator_power(2, -2) == Word{-2, -2});
}

TEST_CASE("free group axioms on random words") {
  std::mt19937 rng(7);
  for (int t = 0; t < 500; ++t) {
    Word a = random_word(rng, 4, 12);
    Word b = random_word(rng, 4, 12);
    Word c = random_word(rng, 4, 12);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a * a.inverse()).empty());
    CHECK(a.inverse().inverse() == a);
    CHECK(Word::from_letters(a.letters()) == a);  // reduction is idempotent
  }
}

TEST_CASE("cyclic canonical form") {
  // Conjugates and inverses share a canonical form.
  Word w{1, 2, -3};
  std::mt19937 rng(11);
  for (int t = 0; t < 100; ++t) {
    Word conj = w.conjugated_by(random_word(rng, 3, 6));
    CHECK(conj.canonical_cyclic() == w.canonical_cyclic());
    CHECK(conj.inverse().canonical_cyclic() == w.canonical_cyclic());
  }
  CHECK(Word{1, 2, -1, -2}.cyclically_reduced() == Word{1, 2, -1, -2});
  CHECK(Word{3, 1, 2, -3}.cyclically_reduced() == Word{1, 2});
}

TEST_CASE("occurrence counting") {
  Word w{1, -2, 1, 3};
  CHECK(count_occurrences(w, 1) == 2);
  CHECK(count_occurrences(w, 2) == 1);
  CHECK(count_occurrences(w, 4) == 0);
}
