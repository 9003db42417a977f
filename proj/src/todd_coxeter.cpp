#include "pqw/todd_coxeter.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "pqw/errors.hpp"

namespace pqw {

namespace {

struct LimitReached {};

// HLT enumerator: one relator-scan-and-fill pass per live coset, with a
// union-find over cosets and queue-driven coincidence processing.
class Enumerator {
public:
  Enumerator(const Presentation& p, const EnumerationLimits& limits)
      : ngens_(p.ngens), width_(2 * p.ngens), limits_(limits) {
    std::unordered_set<Word, WordHash> seen;
    for (const Word& r : p.relators) {
      Word c = r.canonical_cyclic();
      if (!c.empty() && seen.insert(c).second) relators_.push_back(std::move(c));
    }
    new_coset();
  }

  void run(const std::vector<Word>& subgroup_generators) {
    for (const Word& w : subgroup_generators) scan_and_fill(0, w);
    for (int cur = 0; cur < int(nrows()); ++cur) {
      if (rep(cur) != cur) continue;
      bool died = false;
      for (const Word& r : relators_) {
        scan_and_fill(cur, r);
        if (rep(cur) != cur) {
          died = true;
          break;
        }
      }
      if (died) continue;
      for (int g = 1; g <= ngens_; ++g) {
        for (Letter l : {Letter(g), Letter(-g)}) {
          if (lookup(cur, l) < 0) define(cur, l);
        }
      }
    }
  }

  std::int64_t alive() const { return alive_; }
  std::int64_t defined() const { return defined_; }

  CosetTable extract() {
    std::vector<int> newid(nrows(), -1);
    int n = 0;
    for (std::size_t c = 0; c < nrows(); ++c) {
      if (rep(int(c)) == int(c)) newid[c] = n++;
    }
    check_internal(n == alive_, "alive count mismatch");
    CosetTable t(ngens_, n);
    for (std::size_t c = 0; c < nrows(); ++c) {
      if (newid[c] < 0) continue;
      for (int j = 0; j < width_; ++j) {
        std::int32_t d = tab_[c * std::size_t(width_) + std::size_t(j)];
        check_internal(d >= 0, "incomplete table after enumeration");
        t.set(newid[c], j % 2 == 0 ? Letter(j / 2 + 1) : Letter(-(j / 2 + 1)),
              newid[std::size_t(rep(d))]);
      }
    }
    return t;
  }

private:
  int ngens_, width_;
  EnumerationLimits limits_;
  std::vector<Word> relators_;
  std::vector<std::int32_t> tab_;  // nrows x width
  std::vector<std::int32_t> uf_;
  std::deque<int> dead_queue_;
  std::int64_t alive_ = 0;
  std::int64_t defined_ = 0;

  std::size_t nrows() const { return uf_.size(); }

  int rep(int c) {
    while (uf_[std::size_t(c)] != c) {
      uf_[std::size_t(c)] = uf_[std::size_t(uf_[std::size_t(c)])];
      c = uf_[std::size_t(c)];
    }
    return c;
  }

  std::int32_t& entry(int c, Letter l) {
    return tab_[std::size_t(c) * width_ + std::size_t(CosetTable::col(l))];
  }

  int lookup(int c, Letter l) {
    std::int32_t v = entry(c, l);
    if (v < 0) return -1;
    int r = rep(v);
    entry(c, l) = r;
    return r;
  }

  int new_coset() {
    if (alive_ + 1 > limits_.max_cosets || defined_ + 1 > limits_.definition_budget()) {
      throw LimitReached{};
    }
    int c = int(nrows());
    uf_.push_back(c);
    tab_.resize(tab_.size() + std::size_t(width_), -1);
    ++alive_;
    ++defined_;
    return c;
  }

  int define(int c, Letter l) {
    int d = new_coset();
    entry(c, l) = d;
    entry(d, -l) = c;
    return d;
  }

  void merge(int a, int b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    uf_[std::size_t(b)] = a;
    --alive_;
    dead_queue_.push_back(b);
  }

  void coincidence(int a, int b) {
    merge(a, b);
    while (!dead_queue_.empty()) {
      int e = dead_queue_.front();
      dead_queue_.pop_front();
      for (int j = 0; j < width_; ++j) {
        Letter l = j % 2 == 0 ? Letter(j / 2 + 1) : Letter(-(j / 2 + 1));
        std::int32_t d = entry(e, l);
        if (d < 0) continue;
        entry(e, l) = -1;
        if (entry(d, -l) == e) entry(d, -l) = -1;
        // Unify with any edges already present at the representatives, then
        // reinstall the pair so live rows never lose an entry.
        int mu = rep(e), nu = rep(d);
        int x = lookup(mu, l);
        if (x >= 0) merge(x, nu);
        mu = rep(mu);
        nu = rep(nu);
        int y = lookup(nu, -l);
        if (y >= 0) merge(mu, y);
        mu = rep(mu);
        nu = rep(nu);
        entry(mu, l) = nu;
        entry(nu, -l) = mu;
      }
    }
  }

  void scan_and_fill(int start, const Word& w) {
    if (w.empty()) return;
    int f = rep(start), b = f;
    std::size_t i = 0, j = w.size();  // unscanned range [i, j)
    while (true) {
      while (i < j) {
        int next = lookup(f, w[i]);
        if (next < 0) break;
        f = next;
        ++i;
      }
      if (i == j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j > i) {
        int prev = lookup(b, -w[j - 1]);
        if (prev < 0) break;
        b = prev;
        --j;
      }
      if (j == i) {
        // Backward scan met the forward gap from the far side.
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        entry(f, w[i]) = b;
        entry(b, -w[i]) = f;
        return;
      }
      define(f, w[i]);
      // Forward loop resumes from the fresh coset.
    }
  }
};

}  // namespace

ToddCoxeterResult todd_coxeter(const Presentation& p,
                               const std::vector<Word>& subgroup_generators,
                               const EnumerationLimits& limits) {
  p.check_valid();
  for (const Word& w : subgroup_generators) {
    check_input(w.max_generator() <= p.ngens, "subgroup generator mentions unknown generator");
  }
  Enumerator e(p, limits);
  try {
    e.run(subgroup_generators);
  } catch (const LimitReached&) {
    return Undetermined{"coset or definition limit reached", e.alive(), e.defined()};
  }
  CosetTable t = e.extract();
  t.standardize();
  t.build_transversal();
  if ((long long)t.ncosets() * (p.total_relator_length() + 1) <= 500'000'000LL) {
    t.validate_against(p);
  }
  return t;
}

}  // namespace pqw
