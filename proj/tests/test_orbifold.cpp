#include <doctest.h>

#include <random>

#include "pqw/families.hpp"
#include "pqw/orbifold.hpp"
#include "pqw/snf.hpp"

using namespace pqw;

TEST_CASE("orbifold presentations") {
  OrbifoldGroup x = make_orbifold_group({0, {4, 4, 4}});
  CHECK(x.pres.ngens == 3);
  REQUIRE(x.pres.relators.size() == 4);
  CHECK(x.pres.relators[0] == Word::generator_power(1, 4));
  CHECK(x.pres.relators[3] == Word{1, 2, 3});

  OrbifoldGroup y = make_orbifold_group({0, {2, 2, 2, 2, 2, 2}});
  CHECK(y.pres.ngens == 6);
  CHECK(y.pres.relators.size() == 7);

  OrbifoldGroup torus = make_orbifold_group({1, {}});
  CHECK(torus.pres.ngens == 2);
  REQUIRE(torus.pres.relators.size() == 1);
  CHECK(torus.pres.relators[0] == Word{1, 2, -1, -2});

  CHECK_THROWS_AS(make_orbifold_group({0, {1}}), ValidationError);
  CHECK_THROWS_AS(make_orbifold_group({0, {4, 2}}), ValidationError);  // not ascending
}

TEST_CASE("generating vector validation") {
  FiniteGroup g = fermat_group();
  OrbifoldGroup og = make_orbifold_group({0, {4, 4, 4}});
  auto el = [&](const char* s) { return *g.element_by_label(s); };

  GeneratingVector v =
      validate_generating_vector(og, g, {el("(1,0)"), el("(0,1)"), el("(3,3)")});
  CHECK(v.image_of_word(Word{1, 2, 3}) == g.identity());

  // Product (1,0)+(0,1)+(1,1) = (2,2) != identity: named long-relator failure.
  CHECK_THROWS_WITH_AS(
      validate_generating_vector(og, g, {el("(1,0)"), el("(0,1)"), el("(1,1)")}),
      doctest::Contains("long relator"), ValidationError);

  // Order failure: (2,0) has order 2, branch index is 4.
  CHECK_THROWS_WITH_AS(
      validate_generating_vector(og, g, {el("(2,0)"), el("(0,1)"), el("(1,1)")}),
      doctest::Contains("order failure"), ValidationError);

  // Non-surjectivity: a [0;2,2,2,2] vector landing inside <(2,0)>.
  OrbifoldGroup og2 = make_orbifold_group({0, {2, 2, 2, 2}});
  CHECK_THROWS_WITH_AS(
      validate_generating_vector(og2, g, {el("(2,0)"), el("(2,0)"), el("(2,0)"), el("(2,0)")}),
      doctest::Contains("proper subgroup"), ValidationError);
}

TEST_CASE("exactly two vectors realize the fixed-point table stabilizers") {
  // Enumerate all triples whose images generate the three table stabilizers
  // <(1,0)>, <(0,1)>, <(1,1)> with product identity.
  FiniteGroup g = fermat_group();
  auto el = [&](const char* s) { return *g.element_by_label(s); };
  std::vector<int> s1 = {el("(1,0)"), el("(3,0)")};
  std::vector<int> s2 = {el("(0,1)"), el("(0,3)")};
  std::vector<int> s3 = {el("(1,1)"), el("(3,3)")};
  std::vector<std::vector<int>> found;
  for (int a : s1)
    for (int b : s2)
      for (int c : s3)
        if (g.mul(g.mul(a, b), c) == g.identity()) found.push_back({a, b, c});
  REQUIRE(found.size() == 2);
  CHECK(found[0] == std::vector<int>{el("(1,0)"), el("(0,1)"), el("(3,3)")});
  CHECK(found[1] == std::vector<int>{el("(3,0)"), el("(0,3)"), el("(1,1)")});
  // Both are valid generating vectors.
  OrbifoldGroup og = make_orbifold_group({0, {4, 4, 4}});
  for (const auto& images : found) validate_generating_vector(og, g, images);
}

TEST_CASE("riemann-hurwitz genus") {
  CHECK(riemann_hurwitz_genus(16, {0, {4, 4, 4}}) == 3);
  CHECK(riemann_hurwitz_genus(4, {0, {2, 2, 2, 2, 2, 2}}) == 3);
  CHECK(riemann_hurwitz_genus(1, {5, {}}) == 5);
  CHECK(riemann_hurwitz_genus(1, {0, {}}) == 0);
  // Non-integral data is rejected.
  CHECK_THROWS_AS(riemann_hurwitz_genus(3, {0, {2}}), ValidationError);
  // Negative genus is rejected.
  CHECK_THROWS_AS(riemann_hurwitz_genus(2, {0, {}}), ValidationError);
}

TEST_CASE("riemann-hurwitz monotonicity") {
  // Genus grows with N, with each branch index, and with the base genus.
  long long base = riemann_hurwitz_genus(8, {1, {2, 2}});
  CHECK(riemann_hurwitz_genus(16, {1, {2, 2}}) > base);
  CHECK(riemann_hurwitz_genus(8, {1, {2, 4}}) > base);
  CHECK(riemann_hurwitz_genus(8, {2, {2, 2}}) > base);
  CHECK(riemann_hurwitz_genus(8, {1, {2, 2, 2, 2}}) > base);
}

TEST_CASE("invariant deformation dimension") {
  CHECK(invariant_deformation_dim({0, {4, 4, 4}}) == 0);
  CHECK(invariant_deformation_dim({0, {2, 2, 2, 2, 2, 2}}) == 3);
  CHECK(invariant_deformation_dim({0, {2, 2, 2}}) == 0);
  // [0; m,m,m] has no invariant deformations for any m.
  for (int m = 2; m <= 16; ++m) {
    CHECK(invariant_deformation_dim({0, {m, m, m}}) == 0);
  }
  // Unambiguous positive-genus range works; the ambiguous range raises.
  CHECK(invariant_deformation_dim({2, {2, 2}}) == 5);       // d = 6 > 2g'-2 = 2
  CHECK_THROWS_AS(invariant_deformation_dim({1, {}}), ValidationError);  // d = 0 = 2g'-2
}

TEST_CASE("b1 contribution") {
  CHECK(invariant_b1_contribution({0, {4, 4, 4}}) == 0);
  CHECK(invariant_b1_contribution({0, {2, 2, 2, 2, 2, 2}}) == 0);
  CHECK(invariant_b1_contribution({2, {}}) == 4);
}

TEST_CASE("valid vectors kill every orbifold relator") {
  FiniteGroup g = fermat_group();
  ProductQuotientSpec spec = x_family(3);
  for (const Factor& f : spec.factors) {
    OrbifoldGroup og = make_orbifold_group(f.branch);
    for (const Word& r : og.pres.relators) {
      CHECK(f.vector.image_of_word(r) == g.identity());
    }
  }
}

TEST_CASE("orbifold abelianization order divides the branch index product") {
  std::mt19937 rng(41);
  for (int t = 0; t < 30; ++t) {
    std::uniform_int_distribution<int> rdist(1, 4), mdist(2, 6);
    std::vector<int> ms;
    int r = rdist(rng);
    for (int i = 0; i < r; ++i) ms.push_back(mdist(rng));
    std::sort(ms.begin(), ms.end());
    OrbifoldGroup og = make_orbifold_group({0, ms});
    AbelianInvariants inv = abelianization(og.pres);
    REQUIRE(inv.finite());
    long long prod = 1;
    for (int m : ms) prod *= m;
    CHECK(prod % inv.order() == 0);
  }
}
