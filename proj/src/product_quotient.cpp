#include "pqw/product_quotient.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace pqw {

ProductQuotientSpec make_spec(const FiniteGroup& group,
                              const std::vector<std::pair<BranchData, std::vector<int>>>& data,
                              std::string label) {
  check_input(!data.empty(), "spec needs at least one factor");
  ProductQuotientSpec spec;
  spec.group = group;
  spec.label = std::move(label);
  for (const auto& [branch, images] : data) {
    OrbifoldGroup og = make_orbifold_group(branch);
    Factor f;
    f.branch = branch;
    f.vector = validate_generating_vector(og, group, images);
    f.genus = riemann_hurwitz_genus(group.order(), branch);
    check_input(f.genus >= 2, "factor " + branch.to_string() + " has genus " +
                                  std::to_string(f.genus) + " < 2");
    spec.factors.push_back(std::move(f));
  }
  return spec;
}

std::vector<MarkedPoint> marked_points(const ProductQuotientSpec& spec, int factor) {
  check_input(factor >= 0 && factor < spec.n(), "factor index out of range");
  const Factor& f = spec.factors[std::size_t(factor)];
  const FiniteGroup& g = spec.group;
  std::vector<MarkedPoint> out;
  int base = 2 * f.branch.base_genus;
  for (int k = 0; k < f.branch.r(); ++k) {
    int image = f.vector.images[std::size_t(base + k)];
    std::vector<int> cyc = cyclic_subgroup_elements(g, image);
    // Left cosets x<c_k>, each a point of the fiber; stabilizer x<c_k>x^-1.
    std::vector<bool> used(std::size_t(g.order()), false);
    for (int x = 0; x < g.order(); ++x) {
      if (used[std::size_t(x)]) continue;
      MarkedPoint p;
      p.factor = factor;
      p.branch_index = k;
      p.coset_rep = x;
      std::vector<int> stab;
      for (int s : cyc) {
        int y = g.mul(x, s);
        used[std::size_t(y)] = true;
        stab.push_back(g.mul(y, g.inv(x)));  // x s x^-1
      }
      std::sort(stab.begin(), stab.end());
      p.stabilizer = std::move(stab);
      out.push_back(std::move(p));
    }
  }
  return out;
}

long long Census::half_type_points() const {
  long long n = 0;
  for (const auto& r : records) {
    if (r.type.rfind("1/2(", 0) == 0) ++n;
  }
  return n;
}

namespace {

std::string half_type_tag(int n) {
  std::string t = "1/2(1";
  for (int i = 1; i < n; ++i) t += ",1";
  t += ")";
  return t;
}

// Canonical key of a tuple for orbit bookkeeping.
std::vector<int> tuple_key(const std::vector<MarkedPoint>& pts) {
  std::vector<int> key;
  key.reserve(2 * pts.size());
  for (const MarkedPoint& p : pts) {
    key.push_back(p.branch_index);
    key.push_back(p.coset_rep);
  }
  return key;
}

}  // namespace

Census singular_census(const ProductQuotientSpec& spec, const CensusOptions& opt) {
  const FiniteGroup& g = spec.group;
  const int n = spec.n();

  std::vector<std::vector<MarkedPoint>> marked;
  long long tuples = 1;
  for (int i = 0; i < n; ++i) {
    marked.push_back(marked_points(spec, i));
    tuples *= std::max<long long>(1, (long long)marked.back().size());
    if (tuples > opt.budget) {
      throw LimitError("census budget of " + std::to_string(opt.budget) +
                       " tuples exceeded");
    }
  }

  Census census;
  for (const auto& m : marked) {
    if (m.empty()) {
      census.all_half_type = true;
      return census;  // a factor without marked points kills every tuple
    }
  }

  // Keep index tuples whose stabilizers meet non-trivially. Parallel over the
  // first factor's marked points; survivors land in per-slot buckets, so the
  // merged order is independent of the thread count.
  const int first = int(marked[0].size());
  std::vector<std::vector<std::vector<int>>> survivors(static_cast<std::size_t>(first));

  auto scan_first = [&](int i0) {
    std::vector<int> idx(std::size_t(n), 0);
    idx[0] = i0;
    std::vector<std::vector<int>> local;
    while (true) {
      std::vector<int> common = marked[0][std::size_t(idx[0])].stabilizer;
      for (int i = 1; i < n && common.size() > 1; ++i) {
        common = intersect_sorted(common, marked[std::size_t(i)][std::size_t(idx[std::size_t(i)])].stabilizer);
      }
      if (common.size() > 1) local.push_back(idx);
      int pos = n - 1;
      while (pos >= 1) {
        if (++idx[std::size_t(pos)] < int(marked[std::size_t(pos)].size())) break;
        idx[std::size_t(pos)] = 0;
        --pos;
      }
      if (pos < 1) break;
    }
    return local;
  };

  if (opt.parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int i0 = 0; i0 < first; ++i0) survivors[std::size_t(i0)] = scan_first(i0);
  } else {
    for (int i0 = 0; i0 < first; ++i0) survivors[std::size_t(i0)] = scan_first(i0);
  }

  // Group survivors into orbits of the diagonal G-action.
  std::map<std::vector<int>, std::vector<MarkedPoint>> alive;
  for (const auto& bucket : survivors) {
    for (const auto& idx : bucket) {
      std::vector<MarkedPoint> pts;
      for (int i = 0; i < n; ++i) pts.push_back(marked[std::size_t(i)][std::size_t(idx[std::size_t(i)])]);
      alive.emplace(tuple_key(pts), std::move(pts));
    }
  }
  census.marked_tuples = (long long)alive.size();

  auto act_on_point = [&](int x, const MarkedPoint& p) {
    const Factor& f = spec.factors[std::size_t(p.factor)];
    int base = 2 * f.branch.base_genus;
    int image = f.vector.images[std::size_t(base + p.branch_index)];
    std::vector<int> cyc = cyclic_subgroup_elements(g, image);
    int y = g.mul(x, p.coset_rep);
    MarkedPoint q = p;
    q.coset_rep = g.order();
    std::vector<int> stab;
    for (int s : cyc) {
      q.coset_rep = std::min(q.coset_rep, g.mul(y, s));
      stab.push_back(g.conj(y, s));
    }
    std::sort(stab.begin(), stab.end());
    q.stabilizer = std::move(stab);
    return q;
  };

  while (!alive.empty()) {
    auto it = alive.begin();
    std::vector<MarkedPoint> rep = it->second;

    std::vector<int> common = rep[0].stabilizer;
    for (int i = 1; i < n; ++i) common = intersect_sorted(common, rep[std::size_t(i)].stabilizer);

    std::set<std::vector<int>> orbit;
    for (int x = 0; x < g.order(); ++x) {
      std::vector<MarkedPoint> img;
      for (const MarkedPoint& p : rep) img.push_back(act_on_point(x, p));
      orbit.insert(tuple_key(img));
    }
    for (const auto& key : orbit) alive.erase(key);

    SingularityRecord rec;
    rec.representative = std::move(rep);
    rec.stabilizer = std::move(common);
    rec.orbit_size = (long long)orbit.size();
    check_internal(rec.orbit_size * (long long)rec.stabilizer.size() == g.order(),
                   "orbit-stabilizer identity failed in census");
    if (rec.stabilizer.size() == 2 && n >= 2) {
      rec.type = half_type_tag(n);
    } else {
      rec.type = "undetermined(order " + std::to_string(rec.stabilizer.size()) + ")";
    }
    census.records.push_back(std::move(rec));
  }

  std::sort(census.records.begin(), census.records.end(),
            [](const SingularityRecord& a, const SingularityRecord& b) {
              if (a.type != b.type) return a.type < b.type;
              return tuple_key(a.representative) < tuple_key(b.representative);
            });
  census.singular_points = (long long)census.records.size();
  census.all_half_type =
      census.half_type_points() == census.singular_points;
  return census;
}

long long h1_theta(const ProductQuotientSpec& spec) {
  long long sum = 0;
  for (const Factor& f : spec.factors) {
    check_input(f.genus >= 2, "h1_theta needs every factor genus >= 2, got " +
                                  std::to_string(f.genus));
    sum += invariant_deformation_dim(f.branch);
  }
  return sum;
}

long long betti_b1(const ProductQuotientSpec& spec) {
  long long sum = 0;
  for (const Factor& f : spec.factors) sum += invariant_b1_contribution(f.branch);
  return sum;
}

EtaleCover etale_intermediate_cover(const ProductQuotientSpec& spec,
                                    const std::vector<int>& subgroup_elements) {
  const FiniteGroup& g = spec.group;
  Subgroup h = subgroup_from_elements(g, subgroup_elements);
  check_input(is_normal(g, h.elements), "subgroup is not normal");

  EtaleCover out;
  out.report.degree = g.order() / h.group.order();

  // Unramified iff every non-trivial stabilizer of the diagonal action lies
  // in H.
  Census census = singular_census(spec);
  std::set<int> outside;
  for (const auto& rec : census.records) {
    for (int s : rec.stabilizer) {
      if (s != g.identity() && !h.contains(s)) outside.insert(s);
    }
  }
  out.report.unramified = outside.empty();
  for (int s : outside) out.report.stabilizer_elements_outside.push_back(g.label(s));

  // Branch data of each factor under the restricted action: over the branch
  // point with stabilizer <c>, the H-cover is branched in the
  // |G| / |H<c>| points of the intermediate fiber, each with index
  // |<c> meet H| and local generator a conjugate of c^(m/m').
  std::vector<std::pair<BranchData, std::vector<int>>> data;
  bool supported = true;
  for (const Factor& f : spec.factors) {
    std::vector<std::pair<int, int>> contrib;  // (index m', ambient image)
    int base = 2 * f.branch.base_genus;
    if (f.branch.base_genus > 0) supported = false;
    for (int k = 0; k < f.branch.r() && supported; ++k) {
      int image = f.vector.images[std::size_t(base + k)];
      int m = f.branch.indices[std::size_t(k)];
      std::vector<int> cyc = cyclic_subgroup_elements(g, image);
      int mprime = int(intersect_sorted(cyc, h.elements).size());
      if (mprime == 1) continue;
      std::vector<int> hc;
      for (int a : h.elements)
        for (int c : cyc) hc.push_back(g.mul(a, c));
      std::sort(hc.begin(), hc.end());
      hc.erase(std::unique(hc.begin(), hc.end()), hc.end());
      int points = g.order() / int(hc.size());
      // Double-coset representatives of H\G/<c>.
      std::vector<bool> used(std::size_t(g.order()), false);
      int found = 0;
      for (int x = 0; x < g.order() && found < points; ++x) {
        if (used[std::size_t(x)]) continue;
        ++found;
        for (int a : h.elements)
          for (int c : cyc) used[std::size_t(g.mul(g.mul(a, x), c))] = true;
        int loc = g.conj(x, g.pow(image, m / mprime));
        check_internal(h.contains(loc), "local stabilizer generator escapes H");
        contrib.emplace_back(mprime, loc);
      }
    }
    if (!supported) break;
    std::sort(contrib.begin(), contrib.end());
    BranchData nb;
    std::vector<int> nv;
    for (auto [mp, img] : contrib) {
      nb.indices.push_back(mp);
      nv.push_back(h.index_of_ambient(img));
    }
    // Solve 2g_C - 2 = |H|(2g'' - 2) + |H| sum(1 - 1/m') for g''.
    long long gC = riemann_hurwitz_genus(g.order(), f.branch);
    long long den = 1;
    for (int m : nb.indices) den = std::lcm(den, (long long)m);
    long long s_num = 0;
    for (int m : nb.indices) s_num += den - den / m;
    long long t = (2 * gC - 2) * den - (long long)h.group.order() * s_num;
    long long hden = (long long)h.group.order() * den;
    check_internal(t % hden == 0, "restricted base genus is not an integer");
    long long twog2 = t / hden + 2;  // = 2 g''
    check_internal(twog2 % 2 == 0 && twog2 >= 0, "restricted base genus is not an integer");
    nb.base_genus = int(twog2 / 2);
    if (nb.base_genus != 0) {
      supported = false;
      break;
    }
    data.emplace_back(std::move(nb), std::move(nv));
  }

  if (supported) {
    std::string label = spec.label.empty() ? "restriction" : spec.label + " / subgroup";
    out.restricted = make_spec(h.group, data, label);
  } else {
    out.note = "restricted factor quotient has positive base genus; restricted spec omitted";
  }
  return out;
}

KodairaReport kodaira_report(const ProductQuotientSpec& spec, const Census& census) {
  KodairaReport rep;
  rep.genera_ok = true;
  for (const Factor& f : spec.factors) rep.genera_ok = rep.genera_ok && f.genus >= 2;
  rep.quasi_etale = spec.n() >= 2;
  rep.terminal = spec.n() >= 3 && census.singular_points > 0 && census.all_half_type;
  if (spec.n() >= 3 && census.singular_points == 0) rep.terminal = true;  // smooth
  if (!rep.genera_ok) rep.notes.push_back("some factor genus is < 2");
  if (!rep.quasi_etale) rep.notes.push_back("n = 1: the quotient map is ramified in codimension 1");
  if (spec.n() < 3) rep.notes.push_back("terminality criterion needs n >= 3");
  if (rep.genera_ok && rep.quasi_etale && rep.terminal) {
    rep.kodaira_dimension = spec.n();
    rep.notes.push_back("kappa = n since all factor genera are >= 2, the quotient map is "
                        "quasi-etale and the singularities are terminal");
  } else {
    rep.notes.push_back("kodaira dimension not certified by this tool");
  }
  return rep;
}

}  // namespace pqw
