#include "pqw/word.hpp"

#include <algorithm>
#include <cstdlib>

#include "pqw/errors.hpp"

namespace pqw {

Word::Word(std::initializer_list<Letter> ls) {
  for (Letter l : ls) push(l);
}

Word Word::from_letters(const std::vector<Letter>& ls) {
  Word w;
  for (Letter l : ls) w.push(l);
  return w;
}

Word Word::generator_power(int g, long long exponent) {
  check_internal(g > 0, "generator index must be positive");
  Word w;
  Letter l = exponent >= 0 ? Letter(g) : Letter(-g);
  for (long long i = 0, n = std::llabs(exponent); i < n; ++i) w.push(l);
  return w;
}

int Word::max_generator() const {
  int m = 0;
  for (Letter l : ls_) m = std::max(m, generator_of(l));
  return m;
}

void Word::push(Letter l) {
  check_internal(l != 0, "0 is not a letter");
  if (!ls_.empty() && ls_.back() == -l) {
    ls_.pop_back();
  } else {
    ls_.push_back(l);
  }
}

void Word::append(const Word& w) {
  for (Letter l : w.ls_) push(l);
}

Word Word::inverse() const {
  Word w;
  w.ls_.reserve(ls_.size());
  for (auto it = ls_.rbegin(); it != ls_.rend(); ++it) w.ls_.push_back(-*it);
  return w;
}

Word Word::pow(long long e) const {
  Word base = e >= 0 ? *this : inverse();
  Word w;
  for (long long i = 0, n = std::llabs(e); i < n; ++i) w.append(base);
  return w;
}

Word Word::conjugated_by(const Word& t) const {
  Word w = t;
  w.append(*this);
  w.append(t.inverse());
  return w;
}

Word Word::cyclically_reduced() const {
  std::size_t a = 0, b = ls_.size();
  while (b > a + 1 && ls_[a] == -ls_[b - 1]) {
    ++a;
    --b;
  }
  Word w;
  w.ls_.assign(ls_.begin() + a, ls_.begin() + b);
  return w;
}

namespace {

// Letter order for canonical forms: by generator, positive before negative.
inline int letter_key(Letter l) { return 2 * generator_of(l) + (l < 0 ? 1 : 0); }

bool letter_lex_less(const std::vector<Letter>& a, const std::vector<Letter>& b) {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return letter_key(a[i]) < letter_key(b[i]);
  }
  return a.size() < b.size();
}

// Least rotation under the letter order, plain O(n^2); relators here are short.
std::vector<Letter> least_rotation(const std::vector<Letter>& v) {
  std::size_t n = v.size();
  std::size_t best = 0;
  for (std::size_t s = 1; s < n; ++s) {
    for (std::size_t i = 0; i < n; ++i) {
      Letter a = v[(s + i) % n], b = v[(best + i) % n];
      if (a != b) {
        if (letter_key(a) < letter_key(b)) best = s;
        break;
      }
    }
  }
  std::vector<Letter> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = v[(best + i) % n];
  return out;
}

}  // namespace

Word Word::canonical_cyclic() const {
  Word red = cyclically_reduced();
  if (red.empty()) return red;
  std::vector<Letter> fwd = least_rotation(red.ls_);
  std::vector<Letter> bwd = least_rotation(red.inverse().ls_);
  Word w;
  w.ls_ = letter_lex_less(fwd, bwd) ? fwd : bwd;
  return w;
}

Word operator*(const Word& a, const Word& b) {
  Word w = a;
  w.append(b);
  return w;
}

std::size_t WordHash::operator()(const Word& w) const {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (Letter l : w.letters()) {
    h ^= std::size_t(std::uint32_t(l)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

int count_occurrences(const Word& w, int g) {
  int c = 0;
  for (Letter l : w) {
    if (generator_of(l) == g) ++c;
  }
  return c;
}

}  // namespace pqw
