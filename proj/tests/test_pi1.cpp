#include <doctest.h>

#include <random>
#include <set>

#include "pqw/families.hpp"
#include "pqw/pi1.hpp"
#include "pqw/quotient_table.hpp"

using namespace pqw;

namespace {

Pi1Result run(const ProductQuotientSpec& spec, Pi1Options opt = {}) {
  return armstrong_pi1(spec, opt);
}

void expect_elementary_abelian(const Pi1Result& r, int rank) {
  REQUIRE(r.status == OrderStatus::Certified);
  CHECK(r.order == (1LL << rank));
  CHECK(r.certified_abelian);
  REQUIRE(r.abelian.has_value());
  CHECK(r.abelian->free_rank == 0);
  CHECK(r.abelian->torsion == std::vector<long long>(std::size_t(rank), 2));
}

}  // namespace

TEST_CASE("fiber product structure") {
  ProductQuotientSpec spec = x_family(3);
  FiberProduct fp = build_fiber_product(spec);
  CHECK(fp.index == 256);
  CHECK(fp.ambient.ngens == 9);
  // 4 relators per factor + 27 cross commutators.
  CHECK(fp.ambient.relators.size() == 12 + 27);
  // n = 1: the fiber product is the whole orbifold group.
  FiberProduct fp1 = build_fiber_product(x_family(1));
  CHECK(fp1.index == 1);
  CHECK(fp1.schreier.pres.ngens == 3);
}

TEST_CASE("fix generators have equal factor values and live in the subgroup") {
  ProductQuotientSpec spec = x_family(3);
  FiberProduct fp = build_fiber_product(spec);
  std::vector<FixGenerator> fix = enumerate_fix_generators(spec, fp);
  CHECK(!fix.empty());
  const FiniteGroup& g = spec.group;
  std::set<std::string> values;
  for (const FixGenerator& f : fix) {
    std::vector<int> vals = fp.factor_values(spec, f.ambient_word);
    for (int v : vals) CHECK(v == f.common_value);
    CHECK(fp.table.trace(0, f.ambient_word) == 0);
    values.insert(g.label(f.common_value));
    CHECK(f.coords.size() == 3);
  }
  // For n >= 2 every common value is one of the three order-2 elements: only
  // they have fixed points in every factor.
  CHECK(values == std::set<std::string>{"(2,0)", "(0,2)", "(2,2)"});
}

TEST_CASE("n = 1 negative control: the quotient is simply connected") {
  Pi1Result r = run(x_family(1));
  expect_elementary_abelian(r, 0);
  CHECK(r.order == 1);
  CHECK(r.isomorphism == "1");
  Census census = singular_census(x_family(1));
  UniversalCoverReport cover = universal_cover_report(x_family(1), r, census);
  CHECK(cover.cover_singularities == 0);
}

TEST_CASE("reference pi1 values, n = 2 and 3") {
  expect_elementary_abelian(run(x_family(2)), 3);
  expect_elementary_abelian(run(y_family(2)), 1);
  expect_elementary_abelian(run(x_family(3)), 4);
  expect_elementary_abelian(run(y_family(3)), 2);
}

TEST_CASE("pi1 orders relate through the degree-4 cover") {
  for (int n = 2; n <= 3; ++n) {
    Pi1Result x = run(x_family(n));
    Pi1Result y = run(y_family(n));
    REQUIRE(x.status == OrderStatus::Certified);
    REQUIRE(y.status == OrderStatus::Certified);
    CHECK(x.order == 4 * y.order);
  }
}

TEST_CASE("every pi1(Y_n) generator squares to the identity") {
  for (int n = 2; n <= 3; ++n) {
    Pi1Result r = run(y_family(n));
    REQUIRE(r.status == OrderStatus::Certified);
    REQUIRE(r.regular.has_value());
    for (int g = 1; g <= r.presentation.ngens; ++g) {
      CHECK(r.regular->acts_trivially(Word{Letter(g), Letter(g)}));
    }
  }
}

TEST_CASE("squares of single-factor words lie in the fix closure for Y") {
  ProductQuotientSpec spec = y_family(2);
  FiberProduct fp = build_fiber_product(spec);
  std::vector<FixGenerator> fix = enumerate_fix_generators(spec, fp);
  Presentation full = fp.schreier.pres;
  for (const FixGenerator& f : fix) full.add_relator(f.rewritten);
  Simplified simp = simplify(full);
  ToddCoxeterResult tc = todd_coxeter(simp.pres);
  REQUIRE(std::holds_alternative<CosetTable>(tc));
  const CosetTable& reg = std::get<CosetTable>(tc);

  std::mt19937 rng(77);
  std::uniform_int_distribution<int> len(1, 6), gen(1, 6), sign(0, 1);
  for (int t = 0; t < 3; ++t) {
    // A random word w in the first factor's generators; (w^2, 1) must die in pi1.
    Word w;
    int n = len(rng);
    for (int i = 0; i < n; ++i) {
      int gg = fp.ambient_gen(0, gen(rng));
      w.push(sign(rng) ? Letter(gg) : Letter(-gg));
    }
    Word square = w * w;
    Word rewritten = fp.schreier.rewriter.rewrite(fp.table, square);
    CHECK(reg.acts_trivially(simp.map_word(rewritten)));
  }
}

TEST_CASE("pi1 is invariant under factor permutation") {
  ProductQuotientSpec spec = x_family(3);
  Pi1Result base = run(spec);
  Pi1Result rolled = run(permute_factors(spec, {2, 0, 1}));
  REQUIRE(base.status == OrderStatus::Certified);
  REQUIRE(rolled.status == OrderStatus::Certified);
  CHECK(base.order == rolled.order);
  CHECK(base.abelian == rolled.abelian);
}

TEST_CASE("pi1 is invariant under a uniform automorphism of G") {
  FiniteGroup g = fermat_group();
  // x -> -x and the twist involution itself.
  std::vector<int> neg(std::size_t(g.order()));
  for (int x = 0; x < g.order(); ++x) neg[std::size_t(x)] = g.inv(x);
  Homomorphism minus(g, g, neg);
  for (const Homomorphism& aut : {minus, twist_involution(g)}) {
    for (int n = 2; n <= 3; ++n) {
      ProductQuotientSpec spec = x_family(n);
      Pi1Result base = run(spec);
      Pi1Result twisted = run(apply_uniform_automorphism(spec, aut));
      REQUIRE(base.status == OrderStatus::Certified);
      REQUIRE(twisted.status == OrderStatus::Certified);
      CHECK(base.order == twisted.order);
      CHECK(base.abelian == twisted.abelian);
    }
  }
  // Both valid canonical vectors give the same result (they differ by -1).
  Pi1Result alt = run(apply_uniform_automorphism(y_family(2), [&] {
    std::vector<int> id(std::size_t(4));
    FiniteGroup h = y_family(2).group;
    for (int x = 0; x < 4; ++x) id[std::size_t(x)] = h.inv(x);
    return Homomorphism(h, h, id);
  }()));
  expect_elementary_abelian(alt, 1);
}

TEST_CASE("pi1 is invariant under the transversal choice") {
  for (int n = 2; n <= 3; ++n) {
    ProductQuotientSpec spec = x_family(n);
    Pi1Options a, b;
    b.transversal_order = CosetTable::default_letter_order(3 * n);
    std::reverse(b.transversal_order.begin(), b.transversal_order.end());
    Pi1Result ra = run(spec, a);
    Pi1Result rb = run(spec, b);
    REQUIRE(ra.status == OrderStatus::Certified);
    REQUIRE(rb.status == OrderStatus::Certified);
    CHECK(ra.order == rb.order);
    CHECK(ra.abelian == rb.abelian);
  }
}

TEST_CASE("fix saturation: unnormalized conjugators change nothing") {
  for (int n = 2; n <= 3; ++n) {
    for (char fam : {'X', 'Y'}) {
      ProductQuotientSpec spec = fam == 'X' ? x_family(n) : y_family(n);
      Pi1Options norm, unnorm;
      unnorm.fix_mode = FixMode::Unnormalized;
      Pi1Result a = run(spec, norm);
      Pi1Result b = run(spec, unnorm);
      REQUIRE(a.status == OrderStatus::Certified);
      REQUIRE(b.status == OrderStatus::Certified);
      CHECK(a.order == b.order);
      CHECK(a.abelian == b.abelian);
    }
  }
}

TEST_CASE("pinning every conjugator under-generates Fix") {
  // Only diagonal conjugation is absorbed by the normal closure, so the
  // orbit-reduced relator set presents a group that surjects onto pi1: its
  // order is a proper multiple for these families. This pins down why the
  // per-coordinate conjugator range in Normalized mode is required.
  for (int n = 2; n <= 3; ++n) {
    for (char fam : {'X', 'Y'}) {
      ProductQuotientSpec spec = fam == 'X' ? x_family(n) : y_family(n);
      Pi1Options norm, reduced;
      reduced.fix_mode = FixMode::OrbitReduced;
      Pi1Result a = run(spec, norm);
      Pi1Result b = run(spec, reduced);
      REQUIRE(a.status == OrderStatus::Certified);
      REQUIRE(b.status == OrderStatus::Certified);
      CHECK(b.order % a.order == 0);
      CHECK(b.order > a.order);
    }
  }
}

TEST_CASE("two-route order check: quotient of the full product by the fix words") {
  // For abelian G the fiber product is normal in T with quotient G^(n-1), and
  // the fix closure is T-normal, so |T / <<fix>>| = |pi1| * |G|^(n-1). This
  // route shares no code with the Schreier presentation path.
  ProductQuotientSpec spec = x_family(2);
  FiberProduct fp = build_fiber_product(spec);
  std::vector<FixGenerator> fix = enumerate_fix_generators(spec, fp);
  Presentation with_fix = fp.ambient;
  for (const FixGenerator& f : fix) with_fix.add_relator(f.ambient_word);
  ToddCoxeterResult tc = todd_coxeter(with_fix);
  REQUIRE(std::holds_alternative<CosetTable>(tc));
  Pi1Result r = run(spec);
  REQUIRE(r.status == OrderStatus::Certified);
  CHECK(std::get<CosetTable>(tc).ncosets() == r.order * 16);
}

TEST_CASE("universal cover counts") {
  ProductQuotientSpec spec = x_family(3);
  Pi1Result r = run(spec);
  Census census = singular_census(spec);
  UniversalCoverReport cover = universal_cover_report(spec, r, census);
  CHECK(cover.pi1_order == 16);
  CHECK(cover.base_singular_points == 24);
  CHECK(cover.cover_singularities == 384);  // 3 * 2^(3n-2) at n = 3
  CHECK(cover.non_contractible);
}

TEST_CASE("undetermined results carry diagnostics, never a fabricated order") {
  ProductQuotientSpec spec = x_family(3);
  Pi1Options opt;
  opt.limits.max_cosets = 100;  // below the index 256
  Pi1Result r = run(spec, opt);
  CHECK(r.status == OrderStatus::Undetermined);
  CHECK(r.order == 0);
  CHECK(!r.diag.undetermined_reason.empty());

  // Relator cap: presentation step aborts, reason reported.
  Pi1Options opt2;
  opt2.limits.max_relators = 10;
  Pi1Result r2 = run(spec, opt2);
  CHECK(r2.status == OrderStatus::Undetermined);
  CHECK(r2.diag.undetermined_reason.find("relator cap") != std::string::npos);
}

TEST_CASE("universal cover report refuses uncertified input") {
  ProductQuotientSpec spec = x_family(2);
  Census census = singular_census(spec);
  Pi1Result fake;
  fake.status = OrderStatus::Undetermined;
  CHECK_THROWS_AS(universal_cover_report(spec, fake, census), ValidationError);
}
