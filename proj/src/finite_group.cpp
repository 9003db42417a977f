#include "pqw/finite_group.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace pqw {

void FiniteGroup::finish_construction() {
  check_input(order_ >= 1, "group order must be >= 1");
  check_input(table_.size() == std::size_t(order_) * order_, "table has wrong shape");
  for (int v : table_) check_input(v >= 0 && v < order_, "table entry out of range");

  // Latin square.
  std::vector<bool> seen(static_cast<std::size_t>(order_));
  for (int a = 0; a < order_; ++a) {
    std::fill(seen.begin(), seen.end(), false);
    for (int b = 0; b < order_; ++b) seen[std::size_t(mul(a, b))] = true;
    check_input(std::all_of(seen.begin(), seen.end(), [](bool x) { return x; }),
                "table row " + std::to_string(a) + " is not a permutation");
    std::fill(seen.begin(), seen.end(), false);
    for (int b = 0; b < order_; ++b) seen[std::size_t(mul(b, a))] = true;
    check_input(std::all_of(seen.begin(), seen.end(), [](bool x) { return x; }),
                "table column " + std::to_string(a) + " is not a permutation");
  }

  // Two-sided identity.
  int e = -1;
  for (int a = 0; a < order_ && e < 0; ++a) {
    bool ok = true;
    for (int b = 0; b < order_ && ok; ++b) ok = mul(a, b) == b && mul(b, a) == b;
    if (ok) e = a;
  }
  check_input(e >= 0, "table has no identity element");
  identity_ = e;

  if (order_ <= 512) {
    for (int a = 0; a < order_; ++a)
      for (int b = 0; b < order_; ++b)
        for (int c = 0; c < order_; ++c)
          check_input(mul(mul(a, b), c) == mul(a, mul(b, c)),
                      "table is not associative");
  }

  inverse_.assign(std::size_t(order_), -1);
  for (int a = 0; a < order_; ++a) {
    for (int b = 0; b < order_; ++b) {
      if (mul(a, b) == identity_) {
        check_input(mul(b, a) == identity_, "one-sided inverse");
        inverse_[std::size_t(a)] = b;
      }
    }
    check_input(inverse_[std::size_t(a)] >= 0, "missing inverse");
  }

  if (labels_.empty()) {
    for (int a = 0; a < order_; ++a) labels_.push_back("g" + std::to_string(a));
  }
  check_input(int(labels_.size()) == order_, "label list has wrong length");
  check_input(std::set<std::string>(labels_.begin(), labels_.end()).size() ==
                  labels_.size(),
              "duplicate element labels");
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<int>>& table,
                                    std::vector<std::string> labels) {
  FiniteGroup g;
  g.order_ = int(table.size());
  for (const auto& row : table) {
    check_input(row.size() == table.size(), "table is not square");
    g.table_.insert(g.table_.end(), row.begin(), row.end());
  }
  g.labels_ = std::move(labels);
  g.finish_construction();
  return g;
}

FiniteGroup FiniteGroup::abelian(const std::vector<int>& invariant_factors,
                                 long long order_limit) {
  check_input(!invariant_factors.empty(), "empty factor list");
  long long n = 1;
  for (int f : invariant_factors) {
    check_input(f >= 1, "invariant factors must be >= 1");
    n *= f;
    check_input(n <= order_limit,
                "group order exceeds limit of " + std::to_string(order_limit));
  }
  int order = int(n);
  int k = int(invariant_factors.size());

  auto decode = [&](int a) {
    std::vector<int> r(static_cast<std::size_t>(k));
    for (int i = k - 1; i >= 0; --i) {
      r[std::size_t(i)] = a % invariant_factors[std::size_t(i)];
      a /= invariant_factors[std::size_t(i)];
    }
    return r;
  };
  auto encode = [&](const std::vector<int>& r) {
    int a = 0;
    for (int i = 0; i < k; ++i) a = a * invariant_factors[std::size_t(i)] + r[std::size_t(i)];
    return a;
  };

  FiniteGroup g;
  g.order_ = order;
  g.table_.resize(std::size_t(order) * order);
  for (int a = 0; a < order; ++a) {
    std::vector<int> ra = decode(a);
    for (int b = 0; b < order; ++b) {
      std::vector<int> rb = decode(b);
      std::vector<int> rc(static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i)
        rc[std::size_t(i)] = (ra[std::size_t(i)] + rb[std::size_t(i)]) % invariant_factors[std::size_t(i)];
      g.table_[std::size_t(a) * order + b] = encode(rc);
    }
  }
  for (int a = 0; a < order; ++a) {
    std::vector<int> r = decode(a);
    std::ostringstream s;
    s << '(';
    for (int i = 0; i < k; ++i) s << (i ? "," : "") << r[std::size_t(i)];
    s << ')';
    g.labels_.push_back(s.str());
  }
  g.abelian_factors_ = invariant_factors;
  g.finish_construction();
  return g;
}

int FiniteGroup::pow(int a, long long e) const {
  int base = e >= 0 ? a : inv(a);
  long long n = e >= 0 ? e : -e;
  int r = identity_;
  while (n > 0) {
    if (n & 1) r = mul(r, base);
    base = mul(base, base);
    n >>= 1;
  }
  return r;
}

int FiniteGroup::element_order(int a) const {
  int x = a, n = 1;
  while (x != identity_) {
    x = mul(x, a);
    ++n;
  }
  return n;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::optional<int> FiniteGroup::element_by_label(const std::string& s) const {
  for (int a = 0; a < order_; ++a) {
    if (labels_[std::size_t(a)] == s) return a;
  }
  return std::nullopt;
}

std::vector<int> FiniteGroup::residues(int a) const {
  check_input(!abelian_factors_.empty(), "group was not built from invariant factors");
  std::vector<int> r(abelian_factors_.size());
  for (int i = int(abelian_factors_.size()) - 1; i >= 0; --i) {
    r[std::size_t(i)] = a % abelian_factors_[std::size_t(i)];
    a /= abelian_factors_[std::size_t(i)];
  }
  return r;
}

int FiniteGroup::element_of_residues(const std::vector<int>& r) const {
  check_input(r.size() == abelian_factors_.size(), "residue tuple has wrong length");
  int a = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    int m = abelian_factors_[i];
    a = a * m + ((r[i] % m) + m) % m;
  }
  return a;
}

int Subgroup::index_of_ambient(int a) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), a);
  if (it == elements.end() || *it != a) return -1;
  return int(it - elements.begin());
}

Subgroup subgroup_from_elements(const FiniteGroup& g, std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  check_input(!elements.empty(), "empty element set");
  auto find = [&](int a) {
    auto it = std::lower_bound(elements.begin(), elements.end(), a);
    check_input(it != elements.end() && *it == a, "element set is not closed");
    return int(it - elements.begin());
  };
  int n = int(elements.size());
  std::vector<std::vector<int>> table(static_cast<std::size_t>(n),
                                       std::vector<int>(static_cast<std::size_t>(n)));
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(g.label(elements[std::size_t(i)]));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      table[std::size_t(i)][std::size_t(j)] =
          find(g.mul(elements[std::size_t(i)], elements[std::size_t(j)]));
  Subgroup s;
  s.elements = std::move(elements);
  s.group = FiniteGroup::from_table(table, std::move(labels));
  return s;
}

Subgroup subgroup_generated(const FiniteGroup& g, const std::vector<int>& generators) {
  std::set<int> closed = {g.identity()};
  std::vector<int> frontier = {g.identity()};
  for (int x : generators) {
    check_input(x >= 0 && x < g.order(), "generator index out of range");
    if (closed.insert(x).second) frontier.push_back(x);
  }
  while (!frontier.empty()) {
    int x = frontier.back();
    frontier.pop_back();
    std::vector<int> next = {g.inv(x)};
    for (int y : closed) {
      next.push_back(g.mul(x, y));
      next.push_back(g.mul(y, x));
    }
    for (int z : next) {
      if (closed.insert(z).second) frontier.push_back(z);
    }
  }
  return subgroup_from_elements(g, std::vector<int>(closed.begin(), closed.end()));
}

bool is_normal(const FiniteGroup& g, const std::vector<int>& subgroup_elements) {
  std::set<int> h(subgroup_elements.begin(), subgroup_elements.end());
  for (int x = 0; x < g.order(); ++x) {
    for (int s : subgroup_elements) {
      if (!h.count(g.conj(x, s))) return false;
    }
  }
  return true;
}

std::vector<int> cyclic_subgroup_elements(const FiniteGroup& g, int a) {
  std::vector<int> out = {g.identity()};
  int x = a;
  while (x != g.identity()) {
    out.push_back(x);
    x = g.mul(x, a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> intersect_sorted(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Homomorphism::Homomorphism(FiniteGroup source, FiniteGroup target, std::vector<int> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  check_input(images_.size() == std::size_t(source_.order()),
              "homomorphism needs one image per element");
  for (int v : images_) check_input(v >= 0 && v < target_.order(), "image out of range");
  for (int x = 0; x < source_.order(); ++x)
    for (int y = 0; y < source_.order(); ++y)
      check_input(images_[std::size_t(source_.mul(x, y))] ==
                      target_.mul(images_[std::size_t(x)], images_[std::size_t(y)]),
                  "map does not respect multiplication");
}

bool Homomorphism::is_bijective() const {
  if (source_.order() != target_.order()) return false;
  std::set<int> img(images_.begin(), images_.end());
  return int(img.size()) == target_.order();
}

Homomorphism Homomorphism::after(const Homomorphism& inner) const {
  check_input(inner.target() == source_, "composition mismatch");
  std::vector<int> images(std::size_t(inner.source().order()));
  for (int x = 0; x < inner.source().order(); ++x) images[std::size_t(x)] = (*this)(inner(x));
  return Homomorphism(inner.source(), target_, std::move(images));
}

Homomorphism automorphism_from_matrix(const FiniteGroup& g,
                                      const std::vector<std::vector<int>>& matrix) {
  const std::vector<int>& f = g.abelian_factors();
  check_input(!f.empty(), "group was not built from invariant factors");
  int k = int(f.size());
  int m = f[0];
  for (int fi : f) check_input(fi == m, "group is not homocyclic");
  check_input(int(matrix.size()) == k, "matrix has wrong shape");
  for (const auto& row : matrix) check_input(int(row.size()) == k, "matrix has wrong shape");

  std::vector<int> images(std::size_t(g.order()));
  for (int a = 0; a < g.order(); ++a) {
    std::vector<int> r = g.residues(a);
    std::vector<int> s(std::size_t(k), 0);
    for (int i = 0; i < k; ++i) {
      long long acc = 0;
      for (int j = 0; j < k; ++j) acc += (long long)matrix[std::size_t(i)][std::size_t(j)] * r[std::size_t(j)];
      s[std::size_t(i)] = int(((acc % m) + m) % m);
    }
    images[std::size_t(a)] = g.element_of_residues(s);
  }
  Homomorphism h(g, g, std::move(images));
  check_input(h.is_bijective(), "matrix is not invertible mod " + std::to_string(m));
  return h;
}

std::vector<OrbitInfo> orbits_and_stabilizers(const FiniteGroup& g,
                                              const std::function<int(int, int)>& action,
                                              int n_points) {
  check_input(n_points >= 0, "negative point count");
  auto act = [&](int x, int p) {
    int q = action(x, p);
    check_input(q >= 0 && q < n_points, "action leaves the point set");
    return q;
  };

  for (int p = 0; p < n_points; ++p)
    check_input(act(g.identity(), p) == p, "identity does not act trivially");

  long long triples = (long long)n_points * g.order() * g.order();
  if (triples <= 20'000'000) {
    for (int x = 0; x < g.order(); ++x)
      for (int y = 0; y < g.order(); ++y)
        for (int p = 0; p < n_points; ++p)
          check_input(act(x, act(y, p)) == act(g.mul(x, y), p),
                      "map is not a group action");
  } else {
    std::mt19937 rng(12345);
    for (int t = 0; t < 100'000; ++t) {
      int x = int(rng() % std::uint32_t(g.order()));
      int y = int(rng() % std::uint32_t(g.order()));
      int p = int(rng() % std::uint32_t(n_points));
      check_input(act(x, act(y, p)) == act(g.mul(x, y), p), "map is not a group action");
    }
  }

  std::vector<bool> done(std::size_t(n_points), false);
  std::vector<OrbitInfo> out;
  for (int p = 0; p < n_points; ++p) {
    if (done[std::size_t(p)]) continue;
    std::set<int> orbit;
    for (int x = 0; x < g.order(); ++x) orbit.insert(act(x, p));
    OrbitInfo info;
    for (int q : orbit) {
      done[std::size_t(q)] = true;
      info.points.push_back(q);
      std::vector<int> stab;
      for (int x = 0; x < g.order(); ++x) {
        if (act(x, q) == q) stab.push_back(x);
      }
      check_internal((long long)orbit.size() * (long long)stab.size() == (long long)g.order(),
                     "orbit-stabilizer identity failed");
      info.stabilizers.push_back(std::move(stab));
    }
    out.push_back(std::move(info));
  }
  return out;
}

}  // namespace pqw
