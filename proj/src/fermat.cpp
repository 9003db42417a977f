#include "pqw/fermat.hpp"

#include <algorithm>
#include <set>

namespace pqw {

ProjectivePoint ProjectivePoint::canonical() const {
  int last = -1;
  for (int i = 2; i >= 0; --i) {
    if (!x[std::size_t(i)].is_zero()) {
      last = i;
      break;
    }
  }
  check_input(last >= 0, "projective point with all-zero coordinates");
  Cyclotomic scale = x[std::size_t(last)].inverse();
  ProjectivePoint p;
  for (int i = 0; i < 3; ++i) p.x[std::size_t(i)] = x[std::size_t(i)] * scale;
  return p;
}

bool ProjectivePoint::operator==(const ProjectivePoint& o) const {
  ProjectivePoint a = canonical(), b = o.canonical();
  return a.x[0] == b.x[0] && a.x[1] == b.x[1] && a.x[2] == b.x[2];
}

std::string ProjectivePoint::to_string() const {
  ProjectivePoint c = canonical();
  return "(" + c.x[0].to_string() + " : " + c.x[1].to_string() + " : " + c.x[2].to_string() + ")";
}

std::string ProjectivePoint::sort_key() const { return to_string(); }

bool on_curve(const ProjectivePoint& p) {
  Cyclotomic sum = p.x[0].pow(4) + p.x[1].pow(4) + p.x[2].pow(4);
  return sum.is_zero();
}

namespace {

std::pair<int, int> residues_mod4(const FiniteGroup& group, int g) {
  std::vector<int> r = group.residues(g);
  check_input(r.size() == 2 && group.abelian_factors() == std::vector<int>({4, 4}),
              "fermat module needs the group Z_4^2");
  return {r[0], r[1]};
}

// The four solutions of t^4 = -1: t = zeta_8^(2k+1).
std::vector<Cyclotomic> quartic_roots_of_minus_one() {
  return {Cyclotomic::zeta8(1), Cyclotomic::zeta8(3), Cyclotomic::zeta8(5), Cyclotomic::zeta8(7)};
}

}  // namespace

ProjectivePoint fermat_act(const FiniteGroup& group, int g, const ProjectivePoint& p) {
  auto [a, b] = residues_mod4(group, g);
  ProjectivePoint q;
  q.x[0] = p.x[0] * Cyclotomic::zeta8(2 * a);
  q.x[1] = p.x[1] * Cyclotomic::zeta8(2 * b);
  q.x[2] = p.x[2];
  return q.canonical();
}

std::vector<ProjectivePoint> fermat_fixed_points(const FiniteGroup& group, int g) {
  check_input(g != group.identity(), "fixed locus of the identity is the whole curve");
  auto [a, b] = residues_mod4(group, g);

  std::vector<ProjectivePoint> out;
  auto add_line_points = [&](int zero_coord) {
    // The line x_i = 0 meets the curve where the ratio of the other two
    // coordinates is a fourth root of -1.
    for (const Cyclotomic& t : quartic_roots_of_minus_one()) {
      ProjectivePoint p;
      if (zero_coord == 0) {
        p.x = {Cyclotomic::integer(0), Cyclotomic::integer(1), t};
      } else if (zero_coord == 1) {
        p.x = {Cyclotomic::integer(1), Cyclotomic::integer(0), t};
      } else {
        p.x = {Cyclotomic::integer(1), t, Cyclotomic::integer(0)};
      }
      check_internal(on_curve(p), "constructed line point misses the curve");
      out.push_back(p.canonical());
    }
  };

  // Weights of the diagonal transformation on (x0, x1, x2).
  bool w01 = a == b, w02 = a == 0, w12 = b == 0;
  if (w01) add_line_points(2);
  if (w02) add_line_points(0);
  if (w12) add_line_points(1);
  // Coordinate points are always fixed but never on the curve; check anyway.
  for (int i = 0; i < 3; ++i) {
    ProjectivePoint p;
    p.x = {Cyclotomic::integer(i == 0), Cyclotomic::integer(i == 1), Cyclotomic::integer(i == 2)};
    if (on_curve(p)) out.push_back(p.canonical());
  }
  std::sort(out.begin(), out.end(),
            [](const ProjectivePoint& p, const ProjectivePoint& q) {
              return p.sort_key() < q.sort_key();
            });
  return out;
}

std::vector<ProjectivePoint> fermat_marked_points(const FiniteGroup& group) {
  std::vector<ProjectivePoint> out;
  for (int g = 0; g < group.order(); ++g) {
    if (g == group.identity()) continue;
    for (const ProjectivePoint& p : fermat_fixed_points(group, g)) {
      if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const ProjectivePoint& p, const ProjectivePoint& q) {
              return p.sort_key() < q.sort_key();
            });
  return out;
}

std::string fermat_quotient_value(const ProjectivePoint& p) {
  Cyclotomic u = p.x[0].pow(4), v = p.x[1].pow(4);
  check_input(!(u.is_zero() && v.is_zero()), "f is undefined at (0:0:1)");
  if (v.is_zero()) return "(1:0)";
  Cyclotomic r = u * v.inverse();
  check_internal(r.is_rational(), "f value is not rational on this point");
  return "(" + r.coeff(0).get_str() + ":1)";
}

FermatReport verify_fixed_point_table(const FiniteGroup& group, std::vector<int> subgroup_elements) {
  FermatReport rep;
  auto fail = [&](const std::string& msg) { rep.failures.push_back(msg); };

  std::vector<ProjectivePoint> marked = fermat_marked_points(group);
  rep.marked_count = int(marked.size());
  if (rep.marked_count != 12) fail("expected 12 marked points, found " + std::to_string(rep.marked_count));
  for (const ProjectivePoint& p : marked) {
    if (!on_curve(p)) fail("marked point off the curve: " + p.to_string());
  }

  auto find_point = [&](const ProjectivePoint& p) {
    for (std::size_t i = 0; i < marked.size(); ++i) {
      if (marked[i] == p) return int(i);
    }
    return -1;
  };
  auto action = [&](int g, int i) {
    int j = find_point(fermat_act(group, g, marked[std::size_t(i)]));
    check_internal(j >= 0, "action leaves the marked set");
    return j;
  };

  std::vector<OrbitInfo> orbits = orbits_and_stabilizers(group, action, rep.marked_count);
  if (orbits.size() != 3) fail("expected 3 orbits, found " + std::to_string(orbits.size()));

  // Reference table: orbit representative and stabilizer generator.
  struct Row {
    ProjectivePoint point;
    std::vector<int> gen_residues;
  };
  std::vector<Row> table = {
      {{{Cyclotomic::integer(0), Cyclotomic::integer(1), Cyclotomic::zeta8(1)}}, {1, 0}},
      {{{Cyclotomic::integer(1), Cyclotomic::integer(0), Cyclotomic::zeta8(1)}}, {0, 1}},
      {{{Cyclotomic::integer(1), Cyclotomic::zeta8(1), Cyclotomic::integer(0)}}, {1, 1}},
  };
  std::set<std::string> expected_branch = {"(0:1)", "(1:0)", "(-1:1)"};

  std::set<std::string> seen_branch;
  std::set<int> matched_rows;
  for (const OrbitInfo& orb : orbits) {
    if (orb.points.size() != 4) {
      fail("orbit of length " + std::to_string(orb.points.size()) + ", expected 4");
      continue;
    }
    // All stabilizers in the orbit must be the same cyclic order-4 group.
    const std::vector<int>& stab = orb.stabilizers[0];
    for (const auto& s : orb.stabilizers) {
      if (s != stab) fail("stabilizers differ within an orbit");
    }
    if (stab.size() != 4) fail("stabilizer order " + std::to_string(stab.size()) + ", expected 4");

    FermatOrbit fo;
    fo.representative = marked[std::size_t(orb.points[0])].to_string();
    fo.representative_point = marked[std::size_t(orb.points[0])].canonical();
    fo.length = int(orb.points.size());
    fo.stabilizer_order = int(stab.size());

    int row_idx = -1;
    for (std::size_t t = 0; t < table.size(); ++t) {
      int p = find_point(table[t].point);
      if (p >= 0 && std::find(orb.points.begin(), orb.points.end(), p) != orb.points.end()) {
        row_idx = int(t);
      }
    }
    if (row_idx < 0) {
      fail("orbit contains no table representative");
    } else {
      matched_rows.insert(row_idx);
      int gen = group.element_of_residues(table[std::size_t(row_idx)].gen_residues);
      std::vector<int> cyc = cyclic_subgroup_elements(group, gen);
      if (cyc != stab) {
        fail("stabilizer is not generated by the table element for orbit " + fo.representative);
      }
      fo.stabilizer_generator = group.label(gen);
    }

    // f is constant on the orbit and defines the branch point.
    std::set<std::string> values;
    for (int p : orb.points) values.insert(fermat_quotient_value(marked[std::size_t(p)]));
    if (values.size() != 1) fail("f is not constant on an orbit");
    fo.branch_point = *values.begin();
    seen_branch.insert(fo.branch_point);
    rep.orbits.push_back(std::move(fo));
  }
  if (matched_rows.size() != table.size()) fail("some table rows are unmatched");
  if (seen_branch != expected_branch) fail("branch points disagree with the table");
  rep.branch_points.assign(seen_branch.begin(), seen_branch.end());

  // f must be invariant under the whole group on the marked set.
  for (int g = 0; g < group.order(); ++g) {
    for (int i = 0; i < rep.marked_count; ++i) {
      if (fermat_quotient_value(marked[std::size_t(i)]) !=
          fermat_quotient_value(marked[std::size_t(action(g, i))])) {
        fail("f is not invariant under the group action");
      }
    }
  }

  // Restricted subgroup action; the default H splits the marked set into 6
  // orbits of length 2.
  bool default_h = subgroup_elements.empty();
  if (default_h) {
    subgroup_elements = {group.element_of_residues({2, 0}), group.element_of_residues({0, 2})};
  }
  Subgroup h = subgroup_generated(group, subgroup_elements);
  auto sub_action = [&](int g, int i) { return action(h.ambient_of(g), i); };
  std::vector<OrbitInfo> sub_orbits = orbits_and_stabilizers(h.group, sub_action, rep.marked_count);
  for (const OrbitInfo& orb : sub_orbits) rep.subgroup_orbit_lengths.push_back(int(orb.points.size()));
  std::sort(rep.subgroup_orbit_lengths.begin(), rep.subgroup_orbit_lengths.end());
  if (default_h && rep.subgroup_orbit_lengths != std::vector<int>(6, 2)) {
    fail("H-restriction does not split into 6 orbits of length 2");
  }

  rep.pass = rep.failures.empty();
  return rep;
}

}  // namespace pqw

namespace pqw {

std::vector<std::string> marked_point_bijection_failures(const FiniteGroup& group,
                                                         const ProductQuotientSpec& spec) {
  std::vector<std::string> failures;
  if (spec.n() < 1) return {"spec has no factors"};

  std::vector<ProjectivePoint> coords = fermat_marked_points(group);
  auto coord_stab = [&](const ProjectivePoint& p) {
    std::vector<int> s;
    for (int g = 0; g < group.order(); ++g) {
      if (fermat_act(group, g, p) == p) s.push_back(g);
    }
    return s;
  };

  std::vector<MarkedPoint> abstract = marked_points(spec, 0);
  if (abstract.size() != coords.size()) {
    failures.push_back("abstract census has " + std::to_string(abstract.size()) +
                       " points, coordinate census has " + std::to_string(coords.size()));
    return failures;
  }

  // Base point per branch index: the least coordinate point whose stabilizer
  // is the branch stabilizer <img(c_k)>.
  const Factor& f = spec.factors[0];
  int base_gen = 2 * f.branch.base_genus;
  std::vector<ProjectivePoint> base_points;
  for (int k = 0; k < f.branch.r(); ++k) {
    std::vector<int> want = cyclic_subgroup_elements(group, f.vector.images[std::size_t(base_gen + k)]);
    const ProjectivePoint* found = nullptr;
    for (const ProjectivePoint& p : coords) {
      if (coord_stab(p) == want) {
        found = &p;
        break;
      }
    }
    if (!found) {
      failures.push_back("no coordinate point has stabilizer of branch " + std::to_string(k));
      return failures;
    }
    base_points.push_back(*found);
  }

  std::vector<bool> hit(coords.size(), false);
  for (const MarkedPoint& mp : abstract) {
    ProjectivePoint img = fermat_act(group, mp.coset_rep, base_points[std::size_t(mp.branch_index)]);
    int idx = -1;
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (coords[i] == img) idx = int(i);
    }
    if (idx < 0) {
      failures.push_back("image point " + img.to_string() + " is not a coordinate marked point");
      continue;
    }
    if (hit[std::size_t(idx)]) {
      failures.push_back("map is not injective at " + img.to_string());
      continue;
    }
    hit[std::size_t(idx)] = true;
    if (coord_stab(img) != mp.stabilizer) {
      failures.push_back("stabilizer mismatch at " + img.to_string());
    }
  }
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (!hit[i]) failures.push_back("coordinate point " + coords[i].to_string() + " is unmatched");
  }
  return failures;
}

}  // namespace pqw
