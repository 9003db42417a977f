#include "pqw/simplify.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "pqw/errors.hpp"

namespace pqw {

Word substitute(const Word& w, int g, const Word& replacement) {
  Word out;
  Word inv = replacement.inverse();
  for (Letter l : w) {
    if (l == Letter(g)) {
      out.append(replacement);
    } else if (l == Letter(-g)) {
      out.append(inv);
    } else {
      out.push(l);
    }
  }
  return out;
}

Word Simplified::map_word(Word w) const {
  for (const auto& [g, u] : log) {
    if (count_occurrences(w, g) > 0) w = substitute(w, g, u);
  }
  Word out;
  for (Letter l : w) {
    int g = generator_of(l);
    check_internal(g <= int(renumber.size()) && renumber[std::size_t(g) - 1] > 0,
                   "mapped word mentions an eliminated generator");
    out.push(l > 0 ? Letter(renumber[std::size_t(g) - 1])
                   : Letter(-renumber[std::size_t(g) - 1]));
  }
  return out;
}

namespace {

// Incremental Tietze engine. Relators are kept in canonical cyclic form; a
// length-bucketed work queue drives generator eliminations.
class Tietze {
public:
  Tietze(const Presentation& p, const SimplifyOptions& opt) : opt_(opt), ngens_(p.ngens) {
    alive_gen_.assign(std::size_t(ngens_) + 1, true);
    occ_.assign(std::size_t(ngens_) + 1, 0);
    gen_rels_.resize(std::size_t(ngens_) + 1);
    for (const Word& r : p.relators) add_relator(r.canonical_cyclic());
  }

  void run() {
    for (std::size_t i = 0; i < rels_.size(); ++i) enqueue(int(i));
    while (!queue_empty()) {
      int rid = pop();
      if (rid < 0) break;
      try_eliminate(rid);
    }
  }

  Simplified finish(const Presentation& p) {
    Simplified out;
    out.log = std::move(log_);
    out.eliminated = eliminated_;
    out.renumber.assign(std::size_t(ngens_), 0);
    int next = 0;
    for (int g = 1; g <= ngens_; ++g) {
      if (alive_gen_[std::size_t(g)]) out.renumber[std::size_t(g) - 1] = ++next;
    }
    out.pres.ngens = next;
    if (!p.names.empty()) {
      for (int g = 1; g <= ngens_; ++g) {
        if (alive_gen_[std::size_t(g)]) out.pres.names.push_back(p.names[std::size_t(g) - 1]);
      }
    }
    std::vector<Word> live;
    for (std::size_t i = 0; i < rels_.size(); ++i) {
      if (!alive_rel_[i] || rels_[i].empty()) continue;
      Word w;
      for (Letter l : rels_[i]) {
        int g = out.renumber[std::size_t(generator_of(l)) - 1];
        check_internal(g > 0, "live relator mentions a dead generator");
        w.push(l > 0 ? Letter(g) : Letter(-g));
      }
      live.push_back(w.canonical_cyclic());
    }
    std::sort(live.begin(), live.end(), [](const Word& a, const Word& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a < b;
    });
    out.pres.relators = std::move(live);
    return out;
  }

private:
  SimplifyOptions opt_;
  int ngens_;
  std::vector<Word> rels_;
  std::vector<bool> alive_rel_;
  std::vector<bool> alive_gen_;
  std::vector<std::int64_t> occ_;
  std::vector<std::vector<int>> gen_rels_;  // may hold stale ids
  std::unordered_map<Word, int, WordHash> canon_of_;
  std::vector<std::vector<int>> buckets_;
  std::size_t bucket_cursor_ = 0;
  std::vector<std::pair<int, Word>> log_;
  std::int64_t eliminated_ = 0;

  void count_word(const Word& w, std::int64_t delta) {
    for (Letter l : w) occ_[std::size_t(generator_of(l))] += delta;
  }

  void add_relator(Word w) {
    if (w.empty()) return;
    auto it = canon_of_.find(w);
    if (it != canon_of_.end()) return;  // duplicate
    int id = int(rels_.size());
    canon_of_.emplace(w, id);
    count_word(w, +1);
    for (Letter l : w) gen_rels_[std::size_t(generator_of(l))].push_back(id);
    rels_.push_back(std::move(w));
    alive_rel_.push_back(true);
  }

  void drop_relator(int rid) {
    if (!alive_rel_[std::size_t(rid)]) return;
    alive_rel_[std::size_t(rid)] = false;
    count_word(rels_[std::size_t(rid)], -1);
    auto it = canon_of_.find(rels_[std::size_t(rid)]);
    if (it != canon_of_.end() && it->second == rid) canon_of_.erase(it);
  }

  // Replaces relator rid with a new canonical word (possibly empty).
  void replace_relator(int rid, Word w) {
    drop_relator(rid);
    if (w.empty()) return;
    auto it = canon_of_.find(w);
    if (it != canon_of_.end() && alive_rel_[std::size_t(it->second)]) return;  // dup
    alive_rel_[std::size_t(rid)] = true;
    count_word(w, +1);
    canon_of_[w] = rid;
    for (Letter l : w) gen_rels_[std::size_t(generator_of(l))].push_back(rid);
    rels_[std::size_t(rid)] = std::move(w);
    enqueue(rid);
  }

  void enqueue(int rid) {
    std::size_t len = rels_[std::size_t(rid)].size();
    if (len == 0) return;
    if (buckets_.size() < len) buckets_.resize(len);
    buckets_[len - 1].push_back(rid);
    bucket_cursor_ = std::min(bucket_cursor_, len - 1);
  }

  bool queue_empty() {
    while (bucket_cursor_ < buckets_.size() && buckets_[bucket_cursor_].empty()) ++bucket_cursor_;
    return bucket_cursor_ >= buckets_.size();
  }

  int pop() {
    while (!queue_empty()) {
      auto& b = buckets_[bucket_cursor_];
      int rid = b.back();
      b.pop_back();
      if (!alive_rel_[std::size_t(rid)]) continue;
      if (rels_[std::size_t(rid)].size() != bucket_cursor_ + 1) continue;  // stale
      return rid;
    }
    return -1;
  }

  void try_eliminate(int rid) {
    const Word& r = rels_[std::size_t(rid)];
    int len = int(r.size());
    if (len > opt_.max_defining_length) return;
    if (!opt_.aggressive && len > 2) return;

    // A generator occurring exactly once in r can be solved for.
    int best_gen = 0;
    std::size_t best_pos = 0;
    for (std::size_t pos = 0; pos < r.size(); ++pos) {
      int g = generator_of(r[pos]);
      if (count_occurrences(r, g) != 1) continue;
      if (best_gen == 0 || occ_[std::size_t(g)] < occ_[std::size_t(best_gen)] ||
          (occ_[std::size_t(g)] == occ_[std::size_t(best_gen)] && g < best_gen)) {
        best_gen = g;
        best_pos = pos;
      }
    }
    if (best_gen == 0) return;

    // Rotate so the solved letter leads: r ~ x^e * u, whence x = u^-e.
    std::vector<Letter> rot;
    rot.reserve(r.size());
    for (std::size_t i = 1; i < r.size(); ++i) rot.push_back(r[(best_pos + i) % r.size()]);
    Word u = Word::from_letters(rot);
    Word replacement = r[best_pos] > 0 ? u.inverse() : u;

    // Growth guard across every affected relator.
    std::vector<int> affected;
    for (int id : gen_rels_[std::size_t(best_gen)]) {
      if (id == rid || !alive_rel_[std::size_t(id)]) continue;
      int cnt = count_occurrences(rels_[std::size_t(id)], best_gen);
      if (cnt == 0) continue;
      std::size_t worst = rels_[std::size_t(id)].size() + std::size_t(cnt) * replacement.size();
      if (worst > std::size_t(opt_.max_relator_length)) return;
      affected.push_back(id);
    }
    std::sort(affected.begin(), affected.end());
    affected.erase(std::unique(affected.begin(), affected.end()), affected.end());

    drop_relator(rid);
    alive_gen_[std::size_t(best_gen)] = false;
    ++eliminated_;
    log_.emplace_back(best_gen, replacement);
    for (int id : affected) {
      Word nw = substitute(rels_[std::size_t(id)], best_gen, replacement).canonical_cyclic();
      replace_relator(id, std::move(nw));
    }
    gen_rels_[std::size_t(best_gen)].clear();
    check_internal(occ_[std::size_t(best_gen)] == 0, "stale occurrences after elimination");
  }
};

}  // namespace

Simplified simplify(const Presentation& p, const SimplifyOptions& opt) {
  p.check_valid();
  Tietze t(p, opt);
  t.run();
  return t.finish(p);
}

}  // namespace pqw
