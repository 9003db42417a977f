#include "pqw/coset_table.hpp"

#include <algorithm>

#include "pqw/errors.hpp"

namespace pqw {

CosetTable::CosetTable(int ngens, int ncosets)
    : ngens_(ngens), width_(2 * ngens), ncosets_(ncosets),
      tab_(std::size_t(ncosets) * std::size_t(2 * ngens), -1) {}

int CosetTable::trace(int coset, const Word& w) const {
  int c = coset;
  for (Letter l : w) {
    c = act(c, l);
    check_internal(c >= 0, "trace hit an undefined entry");
  }
  return c;
}

bool CosetTable::acts_trivially(const Word& w) const {
  for (int c = 0; c < ncosets_; ++c) {
    if (trace(c, w) != c) return false;
  }
  return true;
}

bool CosetTable::complete() const {
  return std::all_of(tab_.begin(), tab_.end(), [](std::int32_t v) { return v >= 0; });
}

void CosetTable::validate_against(const Presentation& p) const {
  check_internal(p.ngens == ngens_, "presentation/table generator mismatch");
  check_internal(complete(), "incomplete coset table");
  std::vector<bool> seen(static_cast<std::size_t>(ncosets_));
  for (int g = 1; g <= ngens_; ++g) {
    std::fill(seen.begin(), seen.end(), false);
    for (int c = 0; c < ncosets_; ++c) {
      int d = act(c, g);
      check_internal(!seen[std::size_t(d)], "generator column is not a permutation");
      seen[std::size_t(d)] = true;
      check_internal(act(d, -g) == c, "mirror entry mismatch");
    }
  }
  for (const Word& r : p.relators) {
    for (int c = 0; c < ncosets_; ++c) {
      check_internal(trace(c, r) == c, "relator does not fix a coset");
    }
  }
}

std::vector<Letter> CosetTable::default_letter_order(int ngens) {
  std::vector<Letter> order;
  order.reserve(std::size_t(2 * ngens));
  for (int g = 1; g <= ngens; ++g) {
    order.push_back(Letter(g));
    order.push_back(Letter(-g));
  }
  return order;
}

void CosetTable::standardize() {
  std::vector<Letter> order = default_letter_order(ngens_);
  std::vector<int> newid(std::size_t(ncosets_), -1);
  std::vector<int> bfs;
  bfs.reserve(std::size_t(ncosets_));
  newid[0] = 0;
  bfs.push_back(0);
  for (std::size_t head = 0; head < bfs.size(); ++head) {
    int c = bfs[head];
    for (Letter l : order) {
      int d = act(c, l);
      if (d >= 0 && newid[std::size_t(d)] < 0) {
        newid[std::size_t(d)] = int(bfs.size());
        bfs.push_back(d);
      }
    }
  }
  check_internal(int(bfs.size()) == ncosets_, "table is not connected");
  std::vector<std::int32_t> out(tab_.size(), -1);
  for (int c = 0; c < ncosets_; ++c) {
    for (int j = 0; j < width_; ++j) {
      std::int32_t d = tab_[std::size_t(c) * width_ + std::size_t(j)];
      out[std::size_t(newid[std::size_t(c)]) * width_ + std::size_t(j)] =
          d < 0 ? -1 : newid[std::size_t(d)];
    }
  }
  tab_ = std::move(out);
  transversal_.clear();
}

void CosetTable::build_transversal(const std::vector<Letter>& letter_order) {
  std::vector<Letter> order = letter_order.empty() ? default_letter_order(ngens_) : letter_order;
  check_input(int(order.size()) == 2 * ngens_, "letter order must list every signed generator");
  transversal_.assign(std::size_t(ncosets_), Word{});
  std::vector<bool> found(std::size_t(ncosets_), false);
  found[0] = true;
  std::vector<int> bfs = {0};
  for (std::size_t head = 0; head < bfs.size(); ++head) {
    int c = bfs[head];
    for (Letter l : order) {
      int d = act(c, l);
      if (d >= 0 && !found[std::size_t(d)]) {
        found[std::size_t(d)] = true;
        Word w = transversal_[std::size_t(c)];
        w.push(l);
        transversal_[std::size_t(d)] = std::move(w);
        bfs.push_back(d);
      }
    }
  }
  check_internal(int(bfs.size()) == ncosets_, "table is not connected");
}

}  // namespace pqw
