#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pqw/presentation.hpp"
#include "pqw/word.hpp"

namespace pqw {

// A complete table of right cosets of a subgroup: one row per coset, one
// column per signed generator. Coset 0 is the subgroup itself.
class CosetTable {
public:
  CosetTable() = default;
  CosetTable(int ngens, int ncosets);

  int ngens() const { return ngens_; }
  int ncosets() const { return ncosets_; }

  static int col(Letter l) { return l > 0 ? 2 * (l - 1) : 2 * (-l - 1) + 1; }

  int act(int coset, Letter l) const {
    return tab_[std::size_t(coset) * width_ + std::size_t(col(l))];
  }
  void set(int coset, Letter l, int target) {
    tab_[std::size_t(coset) * width_ + std::size_t(col(l))] = target;
  }
  // Sets both the entry and its mirror.
  void link(int coset, Letter l, int target) {
    set(coset, l, target);
    set(target, -l, coset);
  }

  int trace(int coset, const Word& w) const;
  // True iff w fixes every coset; for the table over the trivial subgroup this
  // is the regular representation, so it decides triviality in the group.
  bool acts_trivially(const Word& w) const;
  bool complete() const;

  // Checks completeness, that every generator column is a permutation, and
  // that every relator traces back to its start from every coset.
  void validate_against(const Presentation& p) const;

  // Renumbers cosets by BFS from coset 0 in canonical letter order, making the
  // table independent of the construction history.
  void standardize();

  // Schreier transversal from a BFS spanning tree; `letter_order` selects the
  // edge-scan order (default +1,-1,+2,-2,...). transversal()[0] is empty and
  // transversal()[c] traces 0 -> c.
  void build_transversal(const std::vector<Letter>& letter_order = {});
  const std::vector<Word>& transversal() const { return transversal_; }
  bool has_transversal() const { return !transversal_.empty(); }

  std::string subgroup_desc;

  static std::vector<Letter> default_letter_order(int ngens);

private:
  int ngens_ = 0;
  int width_ = 0;
  int ncosets_ = 0;
  std::vector<std::int32_t> tab_;
  std::vector<Word> transversal_;
};

}  // namespace pqw
