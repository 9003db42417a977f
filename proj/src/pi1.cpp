#include "pqw/pi1.hpp"

#include <algorithm>
#include <chrono>
#include <unordered_set>

#include "pqw/quotient_table.hpp"

namespace pqw {

std::vector<int> FiberProduct::factor_values(const ProductQuotientSpec& spec,
                                             const Word& w) const {
  const FiniteGroup& g = spec.group;
  std::vector<int> vals(spec.factors.size(), g.identity());
  for (Letter l : w) {
    int gen = generator_of(l) - 1;  // 0-based ambient generator
    int factor = int(std::upper_bound(gen_offset.begin(), gen_offset.end(), gen) -
                     gen_offset.begin()) - 1;
    int local = gen - gen_offset[std::size_t(factor)];  // 0-based local generator
    const GeneratingVector& v = spec.factors[std::size_t(factor)].vector;
    int img = v.images[std::size_t(local)];
    if (l < 0) img = g.inv(img);
    vals[std::size_t(factor)] = g.mul(vals[std::size_t(factor)], img);
  }
  return vals;
}

FiberProduct build_fiber_product(const ProductQuotientSpec& spec, const Pi1Options& opt) {
  const FiniteGroup& g = spec.group;
  const int n = spec.n();

  FiberProduct fp;
  Presentation& amb = fp.ambient;
  for (int i = 0; i < n; ++i) {
    OrbifoldGroup og = make_orbifold_group(spec.factors[std::size_t(i)].branch);
    fp.gen_offset.push_back(amb.ngens);
    for (int loc = 1; loc <= og.pres.ngens; ++loc) {
      amb.names.push_back("f" + std::to_string(i + 1) + "." + og.pres.gen_name(loc));
    }
    amb.ngens += og.pres.ngens;
    fp.orbifolds.push_back(std::move(og));
  }
  // Factor relators, then cross-factor commutators.
  for (int i = 0; i < n; ++i) {
    for (const Word& r : fp.orbifolds[std::size_t(i)].pres.relators) {
      Word t;
      for (Letter l : r) {
        int a = fp.ambient_gen(i, generator_of(l));
        t.push(l > 0 ? Letter(a) : Letter(-a));
      }
      amb.add_relator(t);
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int x = 1; x <= fp.orbifolds[std::size_t(i)].pres.ngens; ++x) {
        for (int y = 1; y <= fp.orbifolds[std::size_t(j)].pres.ngens; ++y) {
          Letter a = Letter(fp.ambient_gen(i, x));
          Letter b = Letter(fp.ambient_gen(j, y));
          amb.add_relator(Word{a, b, -a, -b});
        }
      }
    }
  }

  // Image of each signed-letter column under T -> G^n.
  std::vector<int> letter_factor(std::size_t(2 * amb.ngens));
  std::vector<int> letter_image(std::size_t(2 * amb.ngens));
  for (int i = 0; i < n; ++i) {
    const GeneratingVector& v = spec.factors[std::size_t(i)].vector;
    for (int loc = 0; loc < fp.orbifolds[std::size_t(i)].pres.ngens; ++loc) {
      int gen = fp.gen_offset[std::size_t(i)] + loc + 1;
      int img = v.images[std::size_t(loc)];
      letter_factor[std::size_t(CosetTable::col(Letter(gen)))] = i;
      letter_factor[std::size_t(CosetTable::col(Letter(-gen)))] = i;
      letter_image[std::size_t(CosetTable::col(Letter(gen)))] = img;
      letter_image[std::size_t(CosetTable::col(Letter(-gen)))] = g.inv(img);
    }
  }
  DiagonalProductQuotient quo(g, n, std::move(letter_factor), std::move(letter_image));
  if (quo.expected_index() > std::uint64_t(opt.limits.max_cosets)) {
    throw LimitError("fiber product index " + std::to_string(quo.expected_index()) +
                     " exceeds the coset budget");
  }
  fp.table = coset_table_from_quotient(amb, quo, opt.limits, opt.transversal_order);
  fp.index = fp.table.ncosets();
  check_internal(std::uint64_t(fp.index) == quo.expected_index(),
                 "fiber product index mismatch");

  SchreierOptions sopt;
  sopt.parallel = opt.parallel;
  sopt.max_relators = opt.limits.max_relators;
  fp.schreier = reidemeister_schreier(amb, fp.table, sopt);
  if (fp.schreier.truncated) {
    throw LimitError("subgroup presentation exceeds the relator cap of " +
                     std::to_string(opt.limits.max_relators));
  }

  // The factor epimorphisms must agree on the subgroup; spot-check the
  // Schreier generators.
  int checks = std::min(fp.schreier.rewriter.nsgens(), 512);
  for (int s = 1; s <= checks; ++s) {
    Word w = fp.schreier.rewriter.ambient_word(fp.table, s);
    std::vector<int> vals = fp.factor_values(spec, w);
    for (int i = 1; i < n; ++i) {
      check_internal(vals[std::size_t(i)] == vals[0], "inconsistent epimorphisms on the subgroup");
    }
  }
  return fp;
}

namespace {

// Shortest words over one factor's generators reaching every element of G.
std::vector<Word> fiber_transversal(const ProductQuotientSpec& spec, const FiberProduct& fp,
                                    int factor) {
  const FiniteGroup& g = spec.group;
  const GeneratingVector& v = spec.factors[std::size_t(factor)].vector;
  int nloc = fp.orbifolds[std::size_t(factor)].pres.ngens;
  std::vector<Word> words(std::size_t(g.order()));
  std::vector<bool> seen(std::size_t(g.order()), false);
  std::vector<int> bfs = {g.identity()};
  seen[std::size_t(g.identity())] = true;
  for (std::size_t head = 0; head < bfs.size(); ++head) {
    int cur = bfs[head];
    for (int loc = 1; loc <= nloc; ++loc) {
      for (int sign : {+1, -1}) {
        int img = v.images[std::size_t(loc) - 1];
        if (sign < 0) img = g.inv(img);
        int nxt = g.mul(cur, img);
        if (seen[std::size_t(nxt)]) continue;
        seen[std::size_t(nxt)] = true;
        Word w = words[std::size_t(cur)];
        int agen = fp.ambient_gen(factor, loc);
        w.push(sign > 0 ? Letter(agen) : Letter(-agen));
        words[std::size_t(nxt)] = std::move(w);
        bfs.push_back(nxt);
      }
    }
  }
  check_internal(int(bfs.size()) == g.order(), "generating vector does not reach all of G");
  return words;
}

}  // namespace

std::vector<FixGenerator> enumerate_fix_generators(const ProductQuotientSpec& spec,
                                                   const FiberProduct& fp,
                                                   const Pi1Options& opt) {
  const FiniteGroup& g = spec.group;
  const int n = spec.n();
  const int e = g.identity();

  // Per factor and per common value, the candidate coordinates
  // delta c_k^a delta^-1 with that image.
  struct Cand {
    FixCoordinate coord;
    Word word;  // ambient letters
  };
  std::vector<std::vector<std::vector<Cand>>> cands(
      std::size_t(n), std::vector<std::vector<Cand>>(std::size_t(g.order())));

  for (int i = 0; i < n; ++i) {
    std::vector<Word> trans = fiber_transversal(spec, fp, i);
    const Factor& f = spec.factors[std::size_t(i)];
    const OrbifoldGroup& og = fp.orbifolds[std::size_t(i)];
    bool identity_only =
        opt.fix_mode == FixMode::OrbitReduced || (opt.fix_mode == FixMode::Normalized && i == 0);
    int base = 2 * f.branch.base_genus;
    for (int k = 0; k < f.branch.r(); ++k) {
      int m = f.branch.indices[std::size_t(k)];
      int img = f.vector.images[std::size_t(base + k)];
      int agen = fp.ambient_gen(i, og.c_gen(k));
      for (int a = 1; a < m; ++a) {
        for (int h = 0; h < g.order(); ++h) {
          if (identity_only && h != e) continue;
          int value = g.conj(h, g.pow(img, a));
          Cand c;
          c.coord.branch_index = k;
          c.coord.exponent = a;
          c.coord.conjugator = trans[std::size_t(h)];
          c.word = Word::generator_power(agen, a).conjugated_by(trans[std::size_t(h)]);
          cands[std::size_t(i)][std::size_t(value)].push_back(std::move(c));
        }
      }
    }
  }

  std::vector<FixGenerator> out;
  std::unordered_set<Word, WordHash> seen;
  for (int value = 0; value < g.order(); ++value) {
    if (value == e) continue;  // a trivial coordinate would force the identity value
    bool feasible = true;
    long long combos = 1;
    for (int i = 0; i < n; ++i) {
      std::size_t c = cands[std::size_t(i)][std::size_t(value)].size();
      if (c == 0) {
        feasible = false;
        break;
      }
      combos *= (long long)c;
    }
    if (!feasible) continue;

    std::vector<FixGenerator> batch(static_cast<std::size_t>(combos));
    auto fill = [&](long long j) {
      FixGenerator fg;
      fg.common_value = value;
      long long rest = j;
      for (int i = 0; i < n; ++i) {
        const auto& list = cands[std::size_t(i)][std::size_t(value)];
        const Cand& c = list[std::size_t(rest % (long long)list.size())];
        rest /= (long long)list.size();
        fg.coords.push_back(c.coord);
        fg.ambient_word.append(c.word);
      }
      check_internal(fp.table.trace(0, fg.ambient_word) == 0,
                     "fix generator escapes the fiber product");
      fg.rewritten =
          fp.schreier.rewriter.rewrite_from(fp.table, fg.ambient_word, 0).canonical_cyclic();
      check_internal(!fg.rewritten.empty(), "fix generator rewrote to the empty word");
      batch[std::size_t(j)] = std::move(fg);
    };
    if (opt.parallel) {
#pragma omp parallel for schedule(static)
      for (long long j = 0; j < combos; ++j) fill(j);
    } else {
      for (long long j = 0; j < combos; ++j) fill(j);
    }
    for (auto& fg : batch) {
      if (seen.insert(fg.rewritten).second) out.push_back(std::move(fg));
    }
  }
  return out;
}

Pi1Result armstrong_pi1(const ProductQuotientSpec& spec, const Pi1Options& opt) {
  auto t0 = std::chrono::steady_clock::now();
  Pi1Result res;
  auto stamp = [&] {
    res.diag.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  };

  FiberProduct fp;
  try {
    fp = build_fiber_product(spec, opt);
  } catch (const LimitError& err) {
    res.status = OrderStatus::Undetermined;
    res.diag.undetermined_reason = err.what();
    stamp();
    return res;
  }
  res.diag.index = fp.index;
  res.diag.schreier_generators = fp.schreier.rewriter.nsgens();
  res.diag.raw_relators = fp.schreier.raw_relator_count;
  res.diag.distinct_relators = fp.schreier.distinct_relator_count;

  std::vector<FixGenerator> fix = enumerate_fix_generators(spec, fp, opt);
  res.diag.fix_generators = (long long)fix.size();

  Presentation full = fp.schreier.pres;
  {
    std::unordered_set<Word, WordHash> have(full.relators.begin(), full.relators.end());
    for (const FixGenerator& fg : fix) {
      if (have.insert(fg.rewritten).second) full.relators.push_back(fg.rewritten);
    }
  }

  Simplified simp = simplify(full, opt.simplify);
  res.presentation = simp.pres;
  res.diag.simplified_generators = simp.pres.ngens;
  res.diag.simplified_relators = (long long)simp.pres.relators.size();

  res.abelian = abelianization(simp.pres);

  ToddCoxeterResult tc = todd_coxeter(simp.pres, {}, opt.limits);
  if (std::holds_alternative<CosetTable>(tc)) {
    CosetTable table = std::move(std::get<CosetTable>(tc));
    res.status = OrderStatus::Certified;
    res.order = table.ncosets();
    res.diag.enumerated_cosets = res.order;
    res.certified_abelian = res.abelian->finite() && res.abelian->order() == res.order;
    if (res.certified_abelian) res.isomorphism = res.abelian->to_string();
    res.regular = std::move(table);
  } else {
    const Undetermined& u = std::get<Undetermined>(tc);
    res.status = OrderStatus::Undetermined;
    res.diag.undetermined_reason = u.reason;
    res.diag.enumerated_cosets = u.cosets_defined;
  }
  stamp();
  return res;
}

UniversalCoverReport universal_cover_report(const ProductQuotientSpec& spec,
                                            const Pi1Result& pi1, const Census& census) {
  (void)spec;
  check_input(pi1.status == OrderStatus::Certified,
              "universal cover report needs a certified pi1 order");
  UniversalCoverReport rep;
  rep.pi1_order = pi1.order;
  rep.base_singular_points = census.half_type_points();
  rep.cover_singularities = rep.pi1_order * rep.base_singular_points;
  rep.non_contractible = true;
  rep.notes.push_back(
      "finite pi1 => the universal cover is a finite cover, hence projective, hence "
      "non-contractible (b2 != 0)");
  if (census.half_type_points() != census.singular_points) {
    rep.notes.push_back("records with undetermined type are excluded from the count");
  }
  return rep;
}

ProductQuotientSpec permute_factors(const ProductQuotientSpec& spec,
                                    const std::vector<int>& perm) {
  check_input(int(perm.size()) == spec.n(), "permutation has wrong length");
  ProductQuotientSpec out;
  out.group = spec.group;
  out.label = spec.label;
  for (int i : perm) {
    check_input(i >= 0 && i < spec.n(), "permutation entry out of range");
    out.factors.push_back(spec.factors[std::size_t(i)]);
  }
  return out;
}

ProductQuotientSpec apply_uniform_automorphism(const ProductQuotientSpec& spec,
                                               const Homomorphism& aut) {
  check_input(aut.source() == spec.group && aut.target() == spec.group,
              "automorphism must act on the spec group");
  check_input(aut.is_bijective(), "map is not an automorphism");
  std::vector<std::pair<BranchData, std::vector<int>>> data;
  for (const Factor& f : spec.factors) {
    std::vector<int> images;
    for (int v : f.vector.images) images.push_back(aut(v));
    data.emplace_back(f.branch, std::move(images));
  }
  return make_spec(spec.group, data, spec.label);
}

}  // namespace pqw
