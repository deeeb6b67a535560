#ifndef FINACT_FINITE_GROUP_HPP
#define FINACT_FINITE_GROUP_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "finact/automorphism.hpp"
#include "finact/error.hpp"

namespace finact {

/// Finite group given by its multiplication table over elements 0..n-1,
/// with 0 the identity.
class FiniteGroup {
 public:
  enum class Validation { kFull, kSkipAssociativity };

  /// Throws PreconditionError unless the table is square, closed, has 0 as
  /// identity, has inverses, and (for kFull) is associative.
  static FiniteGroup from_table(std::vector<std::vector<int>> table,
                                Validation validation = Validation::kFull);

  /// Table of a concrete group. `elements[0]` must be the identity and the
  /// set must be closed under `mul`, which must be associative.
  template <typename T, typename Mul>
  static FiniteGroup from_elements(const std::vector<T>& elements, Mul mul);

  int order() const { return order_; }
  int mul(int a, int b) const { return table_[a * order_ + b]; }
  int inverse(int a) const { return inverse_[a]; }
  int element_order(int a) const { return element_order_[a]; }
  const std::vector<int>& element_orders() const { return element_orders_sorted_; }

  std::vector<std::vector<int>> table() const;
  /// Elements of the subgroup generated by `generators`, ascending.
  std::vector<int> generated_subgroup(const std::vector<int>& generators) const;

 private:
  FiniteGroup() = default;
  void finish();

  int order_ = 0;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::vector<int> element_order_;
  std::vector<int> element_orders_sorted_;
};

template <typename T, typename Mul>
FiniteGroup FiniteGroup::from_elements(const std::vector<T>& elements, Mul mul) {
  std::map<T, int> index;
  for (std::size_t i = 0; i < elements.size(); ++i) index.emplace(elements[i], static_cast<int>(i));
  if (index.size() != elements.size()) throw PreconditionError("group elements are not distinct");
  const auto n = static_cast<int>(elements.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const auto it = index.find(mul(elements[a], elements[b]));
      if (it == index.end()) throw PreconditionError("group elements are not closed");
      table[a][b] = it->second;
    }
  }
  return from_table(std::move(table), Validation::kSkipAssociativity);
}

/// Multiplication table of a group of graph automorphisms, in the group's
/// element order. Throws PreconditionError if the set is not closed or the
/// identity is not first.
FiniteGroup group_from_maps(const AutGroup& group);

/// Brute-force isomorphism test with element-order pruning. Throws
/// PreconditionError when either group has more than 120 elements.
bool is_isomorphic(const FiniteGroup& a, const FiniteGroup& b);

FiniteGroup cyclic_group(int n);
/// Dihedral group of the given order (order >= 4, even).
FiniteGroup dihedral_group(int order);
FiniteGroup alternating_group(int points);
FiniteGroup symmetric_group(int points);
FiniteGroup quaternion_group();
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

/// Built-in names: Z<n>, D<order>, A4, S4, A5, Q8. Throws ParseError for
/// anything else.
FiniteGroup named_group(std::string_view name);

/// Group from a JSON multiplication table: either a bare array of rows or
/// {"table": rows}. Throws ParseError or PreconditionError.
FiniteGroup parse_group_table(std::string_view text);

}  // namespace finact

#endif  // FINACT_FINITE_GROUP_HPP
