#include <doctest.h>

#include <random>
#include <set>

#include "pqw/families.hpp"
#include "pqw/fermat.hpp"

using namespace pqw;

namespace {

Cyclotomic random_cyc(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
  Cyclotomic x;
  for (int i = 0; i < 4; ++i) {
    x = x + Cyclotomic::rational(mpq_class(num(rng), den(rng))) * Cyclotomic::zeta8(i);
  }
  return x;
}

}  // namespace

TEST_CASE("cyclotomic ring basics") {
  CHECK(Cyclotomic::zeta8(4) == Cyclotomic::integer(-1));        // z^4 = -1
  CHECK(Cyclotomic::zeta8(2) * Cyclotomic::zeta8(2) == Cyclotomic::integer(-1));  // zeta_4^2 = -1
  Cyclotomic one_plus = Cyclotomic::integer(1) + Cyclotomic::zeta8(1);
  CHECK(one_plus * one_plus.inverse() == Cyclotomic::integer(1));
  CHECK_THROWS_AS(Cyclotomic().inverse(), ValidationError);
  CHECK(Cyclotomic::zeta8(8) == Cyclotomic::integer(1));
  CHECK(Cyclotomic::zeta8(-1) == Cyclotomic::zeta8(7));
}

TEST_CASE("cyclotomic field axioms on random elements") {
  std::mt19937 rng(5);
  for (int t = 0; t < 200; ++t) {
    Cyclotomic a = random_cyc(rng), b = random_cyc(rng), c = random_cyc(rng);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    if (!a.is_zero()) {
      CHECK(a * a.inverse() == Cyclotomic::integer(1));
      CHECK(a.pow(3) * a.pow(-3) == Cyclotomic::integer(1));
    }
  }
}

TEST_CASE("points on the curve") {
  ProjectivePoint p{{Cyclotomic::integer(0), Cyclotomic::integer(1), Cyclotomic::zeta8(1)}};
  CHECK(on_curve(p));  // 1 + z^4 = 0
  ProjectivePoint q{{Cyclotomic::integer(1), Cyclotomic::integer(0), Cyclotomic::integer(0)}};
  CHECK(!on_curve(q));
  ProjectivePoint r{{Cyclotomic::integer(1), Cyclotomic::zeta8(1), Cyclotomic::integer(0)}};
  CHECK(on_curve(r));
}

TEST_CASE("on_curve is invariant under rescaling") {
  std::mt19937 rng(9);
  ProjectivePoint p{{Cyclotomic::integer(0), Cyclotomic::integer(1), Cyclotomic::zeta8(1)}};
  for (int t = 0; t < 50; ++t) {
    Cyclotomic s = random_cyc(rng);
    if (s.is_zero()) continue;
    ProjectivePoint q{{p.x[0] * s, p.x[1] * s, p.x[2] * s}};
    CHECK(on_curve(q));
    CHECK(q == p);
  }
}

TEST_CASE("the action on marked points") {
  FiniteGroup g = fermat_group();
  auto el = [&](const char* s) { return *g.element_by_label(s); };
  ProjectivePoint p{{Cyclotomic::integer(0), Cyclotomic::integer(1), Cyclotomic::zeta8(1)}};

  // (1,0) fixes (0:1:z8).
  CHECK(fermat_act(g, el("(1,0)"), p) == p);
  // The identity fixes everything.
  CHECK(fermat_act(g, g.identity(), p) == p);
  // (0,1) moves it to another marked point: (0 : zeta_4 : z8) = (0 : 1 : z8 zeta_4^-1).
  ProjectivePoint q = fermat_act(g, el("(0,1)"), p);
  CHECK(!(q == p));
  std::vector<ProjectivePoint> marked = fermat_marked_points(g);
  CHECK(std::find(marked.begin(), marked.end(), q) != marked.end());

  // A genuine action: act(gh, p) == act(g, act(h, p)) for all of G x G x marked.
  for (int a = 0; a < g.order(); ++a) {
    for (int b = 0; b < g.order(); ++b) {
      for (const ProjectivePoint& m : marked) {
        CHECK(fermat_act(g, g.mul(a, b), m) == fermat_act(g, a, fermat_act(g, b, m)));
      }
    }
  }
}

TEST_CASE("fixed loci") {
  FiniteGroup g = fermat_group();
  auto el = [&](const char* s) { return *g.element_by_label(s); };
  CHECK(fermat_fixed_points(g, el("(1,0)")).size() == 4);
  CHECK(fermat_fixed_points(g, el("(1,1)")).size() == 4);
  CHECK(fermat_fixed_points(g, el("(2,2)")).size() == 4);
  // Weights all distinct: only coordinate points are fixed, none on the curve.
  CHECK(fermat_fixed_points(g, el("(1,2)")).empty());
  CHECK_THROWS_AS(fermat_fixed_points(g, g.identity()), ValidationError);

  // (2,2) fixes points on the line x2 = 0.
  for (const ProjectivePoint& p : fermat_fixed_points(g, el("(2,2)"))) {
    CHECK(p.x[2].is_zero());
  }
}

TEST_CASE("fixed-point table verification passes") {
  FiniteGroup g = fermat_group();
  FermatReport rep = verify_fixed_point_table(g);
  for (const std::string& f : rep.failures) MESSAGE(f);
  CHECK(rep.pass);
  CHECK(rep.marked_count == 12);
  REQUIRE(rep.orbits.size() == 3);
  std::set<std::string> gens, branch;
  for (const FermatOrbit& o : rep.orbits) {
    CHECK(o.length == 4);
    CHECK(o.stabilizer_order == 4);
    gens.insert(o.stabilizer_generator);
    branch.insert(o.branch_point);
  }
  CHECK(gens == std::set<std::string>{"(1,0)", "(0,1)", "(1,1)"});
  CHECK(branch == std::set<std::string>{"(0:1)", "(1:0)", "(-1:1)"});
  CHECK(rep.subgroup_orbit_lengths == std::vector<int>(6, 2));
}

TEST_CASE("f sends the table representatives to the stated branch points") {
  ProjectivePoint p1{{Cyclotomic::integer(0), Cyclotomic::integer(1), Cyclotomic::zeta8(1)}};
  ProjectivePoint p2{{Cyclotomic::integer(1), Cyclotomic::integer(0), Cyclotomic::zeta8(1)}};
  ProjectivePoint p3{{Cyclotomic::integer(1), Cyclotomic::zeta8(1), Cyclotomic::integer(0)}};
  CHECK(fermat_quotient_value(p1) == "(0:1)");
  CHECK(fermat_quotient_value(p2) == "(1:0)");
  CHECK(fermat_quotient_value(p3) == "(-1:1)");
}

TEST_CASE("whole-group restriction keeps the three orbits") {
  FiniteGroup g = fermat_group();
  std::vector<int> all;
  for (int i = 0; i < g.order(); ++i) all.push_back(i);
  FermatReport rep = verify_fixed_point_table(g, all);
  CHECK(rep.subgroup_orbit_lengths == std::vector<int>{4, 4, 4});
}

TEST_CASE("abstract and coordinate censuses agree point for point") {
  FiniteGroup g = fermat_group();
  std::vector<std::string> failures = marked_point_bijection_failures(g, x_family(1));
  for (const std::string& f : failures) MESSAGE(f);
  CHECK(failures.empty());
}

TEST_CASE("same-orbit criterion for non-trivial diagonal stabilizers") {
  // Brute force at n = 2, 3 over tuples of marked coordinate points: the
  // diagonal stabilizer is non-trivial iff all coordinates lie in one orbit.
  FiniteGroup g = fermat_group();
  Homomorphism tw = twist_involution(g);
  std::vector<ProjectivePoint> marked = fermat_marked_points(g);

  // Orbit labels via the canonical representative index.
  std::vector<int> orbit_of(marked.size(), -1);
  int norb = 0;
  for (std::size_t i = 0; i < marked.size(); ++i) {
    if (orbit_of[i] >= 0) continue;
    for (int a = 0; a < g.order(); ++a) {
      ProjectivePoint q = fermat_act(g, a, marked[i]);
      for (std::size_t j = 0; j < marked.size(); ++j) {
        if (marked[j] == q) orbit_of[j] = norb;
      }
    }
    ++norb;
  }
  REQUIRE(norb == 3);

  for (int n = 2; n <= 3; ++n) {
    long long tuples_with_stab = 0;
    std::vector<std::size_t> idx(std::size_t(n), 0);
    while (true) {
      // Diagonal stabilizer: g fixes z_1 under phi_1 and z_i under phi_1 o A.
      int stab = 0;
      for (int a = 0; a < g.order(); ++a) {
        bool fixes = fermat_act(g, a, marked[idx[0]]) == marked[idx[0]];
        for (int i = 1; i < n && fixes; ++i) {
          fixes = fermat_act(g, tw(a), marked[idx[std::size_t(i)]]) == marked[idx[std::size_t(i)]];
        }
        if (fixes) ++stab;
      }
      bool same_orbit = true;
      for (int i = 1; i < n; ++i) same_orbit = same_orbit && orbit_of[idx[std::size_t(i)]] == orbit_of[idx[0]];
      CHECK((stab > 1) == same_orbit);
      if (stab > 1) ++tuples_with_stab;

      int pos = n - 1;
      while (pos >= 0 && ++idx[std::size_t(pos)] == marked.size()) {
        idx[std::size_t(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
    long long expect = 3;  // 3 * 4^n
    for (int i = 0; i < n; ++i) expect *= 4;
    CHECK(tuples_with_stab == expect);
  }
}
