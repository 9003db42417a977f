#include <doctest.h>

#include "pqw/families.hpp"
#include "pqw/pi1.hpp"
#include "pqw/quotient_table.hpp"
#include "pqw/schreier.hpp"
#include "pqw/snf.hpp"
#include "pqw/todd_coxeter.hpp"

using namespace pqw;

TEST_CASE("index-2 subgroup of Z_4") {
  Presentation p({"a"}, {Word::generator_power(1, 4)});
  ToddCoxeterResult r = todd_coxeter(p, {Word{1, 1}});
  REQUIRE(std::holds_alternative<CosetTable>(r));
  CosetTable& t = std::get<CosetTable>(r);
  SubgroupPresentation sub = reidemeister_schreier(p, t);
  // The subgroup is <a^2> = Z_2; its abelianization certifies it.
  AbelianInvariants inv = abelianization(sub.pres);
  CHECK(inv.free_rank == 0);
  CHECK(inv.torsion == std::vector<long long>{2});
  ToddCoxeterResult rr = todd_coxeter(sub.pres);
  REQUIRE(std::holds_alternative<CosetTable>(rr));
  CHECK(std::get<CosetTable>(rr).ncosets() == 2);
}

TEST_CASE("index-1 table gives the identity rewriting") {
  Presentation p({"a", "b"}, {Word::generator_power(1, 3), Word{1, 2, -1, -2}});
  ToddCoxeterResult r = todd_coxeter(p, {Word{1}, Word{2}});
  REQUIRE(std::holds_alternative<CosetTable>(r));
  CosetTable& t = std::get<CosetTable>(r);
  REQUIRE(t.ncosets() == 1);
  SubgroupPresentation sub = reidemeister_schreier(p, t);
  CHECK(sub.pres.ngens == p.ngens);
  CHECK(abelianization(sub.pres) == abelianization(p));
  for (const Word& rel : p.relators) {
    CHECK(sub.rewriter.rewrite(t, rel) == rel);
  }
}

TEST_CASE("rewriting rejects words outside the subgroup") {
  Presentation p({"a"}, {Word::generator_power(1, 4)});
  ToddCoxeterResult r = todd_coxeter(p, {Word{1, 1}});
  CosetTable& t = std::get<CosetTable>(r);
  SubgroupPresentation sub = reidemeister_schreier(p, t);
  CHECK_THROWS_AS(sub.rewriter.rewrite(t, Word{1}), ValidationError);
  CHECK(sub.rewriter.rewrite(t, Word{1, 1}).size() == 1);
}

TEST_CASE("schreier generators expand to consistent ambient words") {
  ProductQuotientSpec spec = x_family(2);
  FiberProduct fp = build_fiber_product(spec);
  for (int s = 1; s <= fp.schreier.rewriter.nsgens(); ++s) {
    Word amb = fp.schreier.rewriter.ambient_word(fp.table, s);
    // The ambient expansion lies in the subgroup and rewrites back to s.
    CHECK(fp.table.trace(0, amb) == 0);
    CHECK(fp.schreier.rewriter.rewrite(fp.table, amb) == Word{Letter(s)});
  }
}

TEST_CASE("abelianization of the subgroup is invariant under the transversal choice") {
  ProductQuotientSpec spec = x_family(2);
  Pi1Options opt1, opt2;
  // Default letter order vs a reversed scan order.
  opt2.transversal_order = CosetTable::default_letter_order(6);
  std::reverse(opt2.transversal_order.begin(), opt2.transversal_order.end());
  FiberProduct a = build_fiber_product(spec, opt1);
  FiberProduct b = build_fiber_product(spec, opt2);
  CHECK(abelianization(a.schreier.pres) == abelianization(b.schreier.pres));

  // Same for a plain finite-group subgroup.
  Presentation p({"a", "b"},
                 {Word::generator_power(1, 4), Word::generator_power(2, 4), Word{1, 2, -1, -2}});
  ToddCoxeterResult r = todd_coxeter(p, {Word{1}});
  CosetTable t = std::get<CosetTable>(r);
  t.build_transversal();
  SubgroupPresentation s1 = reidemeister_schreier(p, t);
  std::vector<Letter> rev = CosetTable::default_letter_order(2);
  std::reverse(rev.begin(), rev.end());
  t.build_transversal(rev);
  SubgroupPresentation s2 = reidemeister_schreier(p, t);
  CHECK(abelianization(s1.pres) == abelianization(s2.pres));
}

TEST_CASE("relator cap marks the result truncated") {
  ProductQuotientSpec spec = x_family(2);
  FiberProduct fp = build_fiber_product(spec);
  SchreierOptions opt;
  opt.max_relators = 3;
  SubgroupPresentation sub = reidemeister_schreier(fp.ambient, fp.table, opt);
  CHECK(sub.truncated);
  CHECK(sub.pres.relators.size() == 3);
}
