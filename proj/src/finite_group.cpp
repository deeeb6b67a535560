#include "finact/finite_group.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <queue>
#include <set>

#include "json.hpp"

namespace finact {

namespace {

constexpr int kIsomorphismLimit = 120;
constexpr int kTableLimit = 4096;

// Closure of `generators` under `mul`, identity first, remaining elements
// sorted.
template <typename T, typename Mul>
std::vector<T> close_under(const T& identity, const std::vector<T>& generators, Mul mul) {
  std::set<T> seen{identity};
  std::queue<T> frontier;
  frontier.push(identity);
  while (!frontier.empty()) {
    const T x = frontier.front();
    frontier.pop();
    for (const T& g : generators) {
      T y = mul(x, g);
      if (seen.insert(y).second) frontier.push(std::move(y));
    }
  }
  std::vector<T> elements{identity};
  for (const T& x : seen) {
    if (!(x == identity)) elements.push_back(x);
  }
  return elements;
}

using Permutation = std::vector<int>;

Permutation compose_perm(const Permutation& a, const Permutation& b) {
  Permutation c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}

bool is_even(const Permutation& p) {
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) inversions += p[i] > p[j];
  }
  return inversions % 2 == 0;
}

std::vector<Permutation> all_permutations(int points) {
  Permutation p(points);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Permutation> result;
  do {
    result.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return result;
}

// Smallest generating set found by trying one element, then pairs, then a
// greedy extension. Larger element orders are tried first.
std::vector<int> small_generating_set(const FiniteGroup& g) {
  const int n = g.order();
  if (n == 1) return {};
  std::vector<int> by_order(n);
  std::iota(by_order.begin(), by_order.end(), 0);
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](int a, int b) { return g.element_order(a) > g.element_order(b); });
  if (g.element_order(by_order[0]) == n) return {by_order[0]};
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const std::vector<int> pair{by_order[i], by_order[j]};
      if (static_cast<int>(g.generated_subgroup(pair).size()) == n) return pair;
    }
  }
  std::vector<int> gens;
  std::vector<int> span{0};
  for (int x : by_order) {
    if (std::binary_search(span.begin(), span.end(), x)) continue;
    gens.push_back(x);
    span = g.generated_subgroup(gens);
  }
  return gens;
}

// Extends generator images to a map defined on all of `a`; returns false on
// any inconsistency or non-injectivity.
bool extends_to_isomorphism(const FiniteGroup& a, const FiniteGroup& b, const std::vector<int>& gens,
                            const std::vector<int>& images) {
  const int n = a.order();
  std::vector<int> phi(n, -1);
  std::vector<bool> hit(n, false);
  phi[0] = 0;
  hit[0] = true;
  std::queue<int> frontier;
  frontier.push(0);
  while (!frontier.empty()) {
    const int x = frontier.front();
    frontier.pop();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const int y = a.mul(x, gens[i]);
      const int image = b.mul(phi[x], images[i]);
      if (phi[y] == -1) {
        if (hit[image]) return false;
        phi[y] = image;
        hit[image] = true;
        frontier.push(y);
      } else if (phi[y] != image) {
        return false;
      }
    }
  }
  return true;
}

bool assign_images(const FiniteGroup& a, const FiniteGroup& b, const std::vector<int>& gens,
                   std::vector<int>& images) {
  if (images.size() == gens.size()) return extends_to_isomorphism(a, b, gens, images);
  const int wanted = a.element_order(gens[images.size()]);
  for (int y = 0; y < b.order(); ++y) {
    if (b.element_order(y) != wanted) continue;
    images.push_back(y);
    if (assign_images(a, b, gens, images)) return true;
    images.pop_back();
  }
  return false;
}

FiniteGroup permutation_group(const std::vector<Permutation>& perms) {
  return FiniteGroup::from_elements(perms, compose_perm);
}

}  // namespace

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table, Validation validation) {
  const auto n = static_cast<int>(table.size());
  if (n == 0) throw PreconditionError("group table is empty");
  if (n > kTableLimit) {
    throw PreconditionError("group of order " + std::to_string(n) + " is too large for a table");
  }
  FiniteGroup g;
  g.order_ = n;
  g.table_.reserve(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table[a].size()) != n) {
      throw PreconditionError("group table row " + std::to_string(a) + " has wrong length");
    }
    std::vector<bool> seen(n, false);
    for (int b = 0; b < n; ++b) {
      const int c = table[a][b];
      if (c < 0 || c >= n) throw PreconditionError("group table entry out of range");
      if (seen[c]) throw PreconditionError("group table row " + std::to_string(a) + " repeats an element");
      seen[c] = true;
      g.table_.push_back(c);
    }
  }
  for (int a = 0; a < n; ++a) {
    if (g.mul(0, a) != a || g.mul(a, 0) != a) throw PreconditionError("element 0 is not the identity");
  }
  // A latin square with identity has right inverses; check they are two-sided.
  g.finish();
  for (int a = 0; a < n; ++a) {
    if (g.mul(g.inverse_[a], a) != 0) throw PreconditionError("group table lacks two-sided inverses");
  }
  if (validation == Validation::kFull) {
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        const int ab = g.mul(a, b);
        for (int c = 0; c < n; ++c) {
          if (g.mul(ab, c) != g.mul(a, g.mul(b, c))) {
            throw PreconditionError("group table is not associative");
          }
        }
      }
    }
  }
  return g;
}

void FiniteGroup::finish() {
  inverse_.assign(order_, 0);
  element_order_.assign(order_, 0);
  for (int a = 0; a < order_; ++a) {
    for (int b = 0; b < order_; ++b) {
      if (mul(a, b) == 0) inverse_[a] = b;
    }
    int power = a;
    int k = 1;
    while (power != 0 && k <= order_) {
      power = mul(power, a);
      ++k;
    }
    element_order_[a] = k;
  }
  element_orders_sorted_ = element_order_;
  std::sort(element_orders_sorted_.begin(), element_orders_sorted_.end());
}

std::vector<std::vector<int>> FiniteGroup::table() const {
  std::vector<std::vector<int>> rows(order_, std::vector<int>(order_));
  for (int a = 0; a < order_; ++a) {
    for (int b = 0; b < order_; ++b) rows[a][b] = mul(a, b);
  }
  return rows;
}

std::vector<int> FiniteGroup::generated_subgroup(const std::vector<int>& generators) const {
  std::vector<bool> in(order_, false);
  in[0] = true;
  std::vector<int> members{0};
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (int g : generators) {
      const int y = mul(members[i], g);
      if (!in[y]) {
        in[y] = true;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

FiniteGroup group_from_maps(const AutGroup& group) {
  if (group.elements.empty() || !(group.elements.front() == identity_map(group.graph))) {
    throw PreconditionError("group_from_maps: identity must be the first element");
  }
  return FiniteGroup::from_elements(group.elements, compose);
}

bool is_isomorphic(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order() > kIsomorphismLimit || b.order() > kIsomorphismLimit) {
    throw PreconditionError("is_isomorphic: groups larger than 120 elements are out of range");
  }
  if (a.order() != b.order() || a.element_orders() != b.element_orders()) return false;
  const std::vector<int> gens = small_generating_set(a);
  std::vector<int> images;
  return assign_images(a, b, gens, images);
}

FiniteGroup cyclic_group(int n) {
  if (n < 1) throw PreconditionError("cyclic_group: order must be positive");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  }
  return FiniteGroup::from_table(std::move(table), FiniteGroup::Validation::kSkipAssociativity);
}

FiniteGroup dihedral_group(int order) {
  if (order < 4 || order % 2 != 0) throw PreconditionError("dihedral_group: order must be even and >= 4");
  const int n = order / 2;
  // (k, s) stands for r^k s^s.
  std::vector<std::pair<int, int>> elements;
  for (int s = 0; s < 2; ++s) {
    for (int k = 0; k < n; ++k) elements.emplace_back(k, s);
  }
  return FiniteGroup::from_elements(elements, [n](const auto& x, const auto& y) {
    const int k = x.second ? x.first - y.first : x.first + y.first;
    return std::pair<int, int>{((k % n) + n) % n, x.second ^ y.second};
  });
}

FiniteGroup alternating_group(int points) {
  std::vector<Permutation> even;
  for (auto& p : all_permutations(points)) {
    if (is_even(p)) even.push_back(std::move(p));
  }
  return permutation_group(even);
}

FiniteGroup symmetric_group(int points) { return permutation_group(all_permutations(points)); }

FiniteGroup quaternion_group() {
  // 2x2 matrices over the Gaussian integers: (re, im) for each entry.
  using Quat = std::array<int, 8>;
  auto mul = [](const Quat& x, const Quat& y) {
    Quat z{};
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) {
        int re = 0;
        int im = 0;
        for (int k = 0; k < 2; ++k) {
          const int a = x[(r * 2 + k) * 2];
          const int b = x[(r * 2 + k) * 2 + 1];
          const int p = y[(k * 2 + c) * 2];
          const int q = y[(k * 2 + c) * 2 + 1];
          re += a * p - b * q;
          im += a * q + b * p;
        }
        z[(r * 2 + c) * 2] = re;
        z[(r * 2 + c) * 2 + 1] = im;
      }
    }
    return z;
  };
  const Quat one{1, 0, 0, 0, 0, 0, 1, 0};
  const Quat i{0, 1, 0, 0, 0, 0, 0, -1};
  const Quat j{0, 0, 1, 0, -1, 0, 0, 0};
  return FiniteGroup::from_elements(close_under(one, std::vector<Quat>{i, j}, mul), mul);
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const int n = a.order() * b.order();
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      table[x][y] = a.mul(x / b.order(), y / b.order()) * b.order() + b.mul(x % b.order(), y % b.order());
    }
  }
  return FiniteGroup::from_table(std::move(table), FiniteGroup::Validation::kSkipAssociativity);
}

FiniteGroup named_group(std::string_view name) {
  if (name == "A4") return alternating_group(4);
  if (name == "S4") return symmetric_group(4);
  if (name == "A5") return alternating_group(5);
  if (name == "Q8") return quaternion_group();
  auto parse_number = [&](std::string_view digits) {
    if (digits.empty() || digits.size() > 4 ||
        !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw ParseError("unknown group name '" + std::string(name) + "'");
    }
    return std::stoi(std::string(digits));
  };
  if (!name.empty() && name.front() == 'Z') {
    const int n = parse_number(name.substr(1));
    if (n < 1 || n > kTableLimit) throw ParseError("cyclic group order out of range in '" + std::string(name) + "'");
    return cyclic_group(n);
  }
  if (!name.empty() && name.front() == 'D') {
    const int order = parse_number(name.substr(1));
    if (order < 4 || order % 2 != 0 || order > kTableLimit) {
      throw ParseError("dihedral order must be even and >= 4 in '" + std::string(name) + "'");
    }
    return dihedral_group(order);
  }
  throw ParseError("unknown group name '" + std::string(name) + "'");
}

FiniteGroup parse_group_table(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (doc.is_object() && doc.contains("table")) doc = doc["table"];
  if (!doc.is_array()) throw ParseError("$: expected a table (array of rows) or {\"table\": rows}");
  std::vector<std::vector<int>> table;
  for (std::size_t r = 0; r < doc.size(); ++r) {
    if (!doc[r].is_array()) throw ParseError("table row " + std::to_string(r) + ": expected an array");
    std::vector<int> row;
    for (std::size_t c = 0; c < doc[r].size(); ++c) {
      if (!doc[r][c].is_number_integer()) {
        throw ParseError("table[" + std::to_string(r) + "][" + std::to_string(c) + "]: expected an integer");
      }
      row.push_back(doc[r][c].get<int>());
    }
    table.push_back(std::move(row));
  }
  return FiniteGroup::from_table(std::move(table));
}

}  // namespace finact
