#include "pqw/schreier.hpp"

#include <algorithm>
#include <unordered_set>

#include "pqw/errors.hpp"

namespace pqw {

SchreierRewriter::SchreierRewriter(const CosetTable& table) : ngens_(table.ngens()) {
  check_input(table.has_transversal(), "coset table lacks a transversal");
  int n = table.ncosets();
  // Tree edges: the last letter of each transversal word, oriented positively.
  std::vector<bool> tree(std::size_t(n) * ngens_, false);
  for (int d = 1; d < n; ++d) {
    const Word& w = table.transversal()[std::size_t(d)];
    check_internal(!w.empty(), "non-root coset with empty transversal word");
    Letter l = w[w.size() - 1];
    int c = table.act(d, -l);
    if (l > 0) {
      tree[std::size_t(c) * ngens_ + std::size_t(l - 1)] = true;
    } else {
      tree[std::size_t(d) * ngens_ + std::size_t(-l - 1)] = true;
    }
  }
  sgen_of_.assign(std::size_t(n) * ngens_, 0);
  edge_of_.push_back(-1);  // 1-based
  for (int c = 0; c < n; ++c) {
    for (int g = 1; g <= ngens_; ++g) {
      if (tree[std::size_t(c) * ngens_ + std::size_t(g - 1)]) continue;
      sgen_of_[std::size_t(c) * ngens_ + std::size_t(g - 1)] = ++nsgens_;
      edge_of_.push_back(std::int64_t(c) * ngens_ + (g - 1));
    }
  }
}

std::pair<int, int> SchreierRewriter::edge_of(int sgen) const {
  check_internal(sgen >= 1 && sgen <= nsgens_, "Schreier generator out of range");
  std::int64_t e = edge_of_[std::size_t(sgen)];
  return {int(e / ngens_), int(e % ngens_) + 1};
}

Word SchreierRewriter::rewrite_from(const CosetTable& table, const Word& w, int start) const {
  Word out;
  int c = start;
  for (Letter l : w) {
    if (l > 0) {
      int s = sgen(c, l);
      if (s != 0) out.push(Letter(s));
      c = table.act(c, l);
    } else {
      int d = table.act(c, l);
      int s = sgen(d, -l);
      if (s != 0) out.push(Letter(-s));
      c = d;
    }
    check_internal(c >= 0, "rewrite crossed an undefined entry");
  }
  return out;
}

Word SchreierRewriter::rewrite(const CosetTable& table, const Word& ambient) const {
  int end = table.trace(0, ambient);
  check_input(end == 0, "word does not lie in the subgroup");
  return rewrite_from(table, ambient, 0);
}

Word SchreierRewriter::ambient_word(const CosetTable& table, int sgen) const {
  auto [c, g] = edge_of(sgen);
  Word w = table.transversal()[std::size_t(c)];
  w.push(Letter(g));
  w.append(table.transversal()[std::size_t(table.act(c, g))].inverse());
  return w;
}

SubgroupPresentation reidemeister_schreier(const Presentation& ambient,
                                           const CosetTable& table,
                                           const SchreierOptions& opt) {
  ambient.check_valid();
  check_input(table.complete(), "coset table incomplete");
  check_input(table.ngens() == ambient.ngens, "presentation/table generator mismatch");

  SubgroupPresentation out;
  out.rewriter = SchreierRewriter(table);

  const std::int64_t ncosets = table.ncosets();
  const std::int64_t nrel = std::int64_t(ambient.relators.size());
  const std::int64_t npairs = ncosets * nrel;
  out.raw_relator_count = npairs;

  out.pres.ngens = out.rewriter.nsgens();
  std::unordered_set<Word, WordHash> seen;
  seen.reserve(std::size_t(std::min<std::int64_t>(npairs, 1 << 22)));

  const std::int64_t block = std::max<std::int64_t>(1, opt.block_pairs);
  std::vector<Word> buf;
  for (std::int64_t base = 0; base < npairs && !out.truncated; base += block) {
    const std::int64_t count = std::min(block, npairs - base);
    buf.assign(std::size_t(count), Word{});
    if (opt.parallel) {
#pragma omp parallel for schedule(static)
      for (std::int64_t k = 0; k < count; ++k) {
        std::int64_t idx = base + k;
        const Word& r = ambient.relators[std::size_t(idx % nrel)];
        buf[std::size_t(k)] =
            out.rewriter.rewrite_from(table, r, int(idx / nrel)).canonical_cyclic();
      }
    } else {
      for (std::int64_t k = 0; k < count; ++k) {
        std::int64_t idx = base + k;
        const Word& r = ambient.relators[std::size_t(idx % nrel)];
        buf[std::size_t(k)] =
            out.rewriter.rewrite_from(table, r, int(idx / nrel)).canonical_cyclic();
      }
    }
    for (std::int64_t k = 0; k < count; ++k) {
      Word& w = buf[std::size_t(k)];
      if (w.empty()) continue;
      if (!seen.insert(w).second) continue;
      if (opt.max_relators > 0 &&
          std::int64_t(out.pres.relators.size()) + 1 > opt.max_relators) {
        out.truncated = true;
        break;
      }
      out.pres.relators.push_back(std::move(w));
    }
  }
  out.distinct_relator_count = std::int64_t(out.pres.relators.size());
  return out;
}

}  // namespace pqw
