#include "pqw/quotient_table.hpp"

#include <algorithm>
#include <unordered_map>

#include "pqw/errors.hpp"

namespace pqw {

FiniteGroupQuotient::FiniteGroupQuotient(FiniteGroup q, std::vector<int> gen_images,
                                         std::vector<int> subgroup_elements)
    : q_(std::move(q)), images_(std::move(gen_images)), subgroup_(std::move(subgroup_elements)) {
  for (int v : images_) check_input(v >= 0 && v < q_.order(), "generator image out of range");
  inv_images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv_images_[i] = q_.inv(images_[i]);
  std::sort(subgroup_.begin(), subgroup_.end());
  check_input(!subgroup_.empty(), "empty subgroup descriptor");
  for (int a : subgroup_) {
    for (int b : subgroup_) {
      check_input(std::binary_search(subgroup_.begin(), subgroup_.end(), q_.mul(a, b)),
                  "subgroup descriptor is not closed under multiplication");
    }
  }
}

std::uint64_t FiniteGroupQuotient::identity() const { return std::uint64_t(q_.identity()); }

std::uint64_t FiniteGroupQuotient::mul(std::uint64_t x, Letter l) const {
  int g = generator_of(l) - 1;
  check_internal(g < int(images_.size()), "letter outside image list");
  int img = l > 0 ? images_[std::size_t(g)] : inv_images_[std::size_t(g)];
  return std::uint64_t(q_.mul(int(x), img));
}

std::uint64_t FiniteGroupQuotient::coset_key(std::uint64_t x) const {
  int best = q_.order();
  for (int u : subgroup_) best = std::min(best, q_.mul(u, int(x)));
  return std::uint64_t(best);
}

std::uint64_t FiniteGroupQuotient::expected_index() const { return 0; }

DiagonalProductQuotient::DiagonalProductQuotient(FiniteGroup g, int nfactors,
                                                 std::vector<int> letter_factor,
                                                 std::vector<int> letter_image)
    : g_(std::move(g)), nfactors_(nfactors), letter_factor_(std::move(letter_factor)),
      letter_image_(std::move(letter_image)) {
  check_input(nfactors_ >= 1, "need at least one factor");
  pow_.resize(std::size_t(nfactors_) + 1);
  pow_[0] = 1;
  for (int i = 0; i < nfactors_; ++i) {
    check_input(pow_[std::size_t(i)] <= UINT64_MAX / std::uint64_t(g_.order()),
                "G^n does not fit in 64 bits");
    pow_[std::size_t(i) + 1] = pow_[std::size_t(i)] * std::uint64_t(g_.order());
  }
}

std::uint64_t DiagonalProductQuotient::identity() const {
  std::uint64_t x = 0;
  for (int i = 0; i < nfactors_; ++i) x += std::uint64_t(g_.identity()) * pow_[std::size_t(i)];
  return x;
}

std::uint64_t DiagonalProductQuotient::mul(std::uint64_t x, Letter l) const {
  int c = CosetTable::col(l);
  check_internal(c < int(letter_factor_.size()), "letter outside image list");
  int f = letter_factor_[std::size_t(c)];
  int img = letter_image_[std::size_t(c)];
  std::uint64_t digit = (x / pow_[std::size_t(f)]) % std::uint64_t(g_.order());
  std::uint64_t nd = std::uint64_t(g_.mul(int(digit), img));
  return x + (nd - digit) * pow_[std::size_t(f)];
}

std::uint64_t DiagonalProductQuotient::coset_key(std::uint64_t x) const {
  int d = g_.inv(int(x % std::uint64_t(g_.order())));
  std::uint64_t key = 0;
  for (int i = 0; i < nfactors_; ++i) {
    int digit = int((x / pow_[std::size_t(i)]) % std::uint64_t(g_.order()));
    key += std::uint64_t(g_.mul(d, digit)) * pow_[std::size_t(i)];
  }
  return key;
}

std::uint64_t DiagonalProductQuotient::expected_index() const {
  return pow_[std::size_t(nfactors_) - 1];
}

CosetTable coset_table_from_quotient(const Presentation& p, const QuotientEval& q,
                                     const EnumerationLimits& limits,
                                     const std::vector<Letter>& letter_order) {
  p.check_valid();
  for (const Word& r : p.relators) {
    check_input(q.eval(r) == q.identity(),
                "evaluator does not kill a relator of the presentation");
  }
  std::vector<Letter> order =
      letter_order.empty() ? CosetTable::default_letter_order(p.ngens) : letter_order;
  check_input(int(order.size()) == 2 * p.ngens, "letter order must list every signed generator");

  std::unordered_map<std::uint64_t, int> id_of;
  std::vector<std::uint64_t> rep_element;  // an element whose coset is this state
  std::vector<std::vector<std::int32_t>> rows;

  std::uint64_t start = q.coset_key(q.identity());
  id_of.emplace(start, 0);
  rep_element.push_back(q.identity());
  rows.emplace_back(std::size_t(2 * p.ngens), -1);

  for (std::size_t head = 0; head < rep_element.size(); ++head) {
    std::uint64_t x = rep_element[head];
    for (Letter l : order) {
      if (rows[head][std::size_t(CosetTable::col(l))] >= 0) continue;
      std::uint64_t y = q.mul(x, l);
      std::uint64_t key = q.coset_key(y);
      auto it = id_of.find(key);
      int target;
      if (it == id_of.end()) {
        target = int(rep_element.size());
        if ((std::int64_t)rep_element.size() + 1 > limits.max_cosets) {
          throw LimitError("coset budget exceeded while expanding finite quotient");
        }
        id_of.emplace(key, target);
        rep_element.push_back(y);
        rows.emplace_back(std::size_t(2 * p.ngens), -1);
      } else {
        target = it->second;
      }
      rows[head][std::size_t(CosetTable::col(l))] = target;
    }
  }

  int n = int(rep_element.size());
  if (q.expected_index() != 0) {
    check_internal(std::uint64_t(n) == q.expected_index(),
                   "enumerated index disagrees with the expected index");
  }
  CosetTable t(p.ngens, n);
  for (int c = 0; c < n; ++c) {
    for (Letter l : order) {
      t.set(c, l, rows[std::size_t(c)][std::size_t(CosetTable::col(l))]);
    }
  }
  t.standardize();
  t.build_transversal(letter_order);
  return t;
}

}  // namespace pqw
