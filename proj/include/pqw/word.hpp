#pragma once

#include <cstddef>
#include <cstdint>
#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

namespace pqw {

// A letter is a signed 1-based generator index: +g is the generator, -g its
// inverse. 0 is never a letter.
using Letter = std::int32_t;

inline Letter inverse_letter(Letter l) { return -l; }
inline int generator_of(Letter l) { return l > 0 ? l : -l; }

// Freely reduced word over an abstract generator alphabet.
class Word {
public:
  Word() = default;
  Word(std::initializer_list<Letter> ls);

  // Reduces the given letter sequence.
  static Word from_letters(const std::vector<Letter>& ls);
  // g^exponent (exponent may be negative or zero).
  static Word generator_power(int g, long long exponent = 1);

  bool empty() const { return ls_.empty(); }
  std::size_t size() const { return ls_.size(); }
  Letter operator[](std::size_t i) const { return ls_[i]; }
  const std::vector<Letter>& letters() const { return ls_; }
  auto begin() const { return ls_.begin(); }
  auto end() const { return ls_.end(); }

  // Largest generator index mentioned; 0 for the empty word.
  int max_generator() const;

  // Appends one letter, cancelling against the current suffix.
  void push(Letter l);
  void append(const Word& w);

  Word inverse() const;
  Word pow(long long e) const;
  // t * w * t^-1
  Word conjugated_by(const Word& t) const;

  // Removes cancelling prefix/suffix pairs.
  Word cyclically_reduced() const;
  // Canonical form under cyclic rotation and inversion: the lexicographically
  // least rotation of the cyclically reduced word or of its inverse. Two
  // relators have the same canonical form iff they generate the same normal
  // closure contribution up to conjugacy and inversion.
  Word canonical_cyclic() const;

  friend Word operator*(const Word& a, const Word& b);
  auto operator<=>(const Word&) const = default;

private:
  std::vector<Letter> ls_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const;
};

// Total occurrence count of generator g (either sign).
int count_occurrences(const Word& w, int g);

}  // namespace pqw
