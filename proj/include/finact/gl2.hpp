#ifndef FINACT_GL2_HPP
#define FINACT_GL2_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "finact/so3.hpp"

namespace finact {

/// 2x2 integer matrix [[a, b], [c, d]].
struct Mat2 {
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  static constexpr Mat2 identity() { return {1, 0, 0, 1}; }
  constexpr std::int64_t det() const { return a * d - b * c; }
  std::int64_t max_abs_entry() const;
  std::string to_string() const;

  friend constexpr Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
            x.c * y.b + x.d * y.d};
  }
  auto operator<=>(const Mat2&) const = default;
};

/// Smallest k in 1..6 with m^k = I, or 0 if there is none. Integer matrices
/// of finite order never need more than 6.
int torsion_order(const Mat2& m);

/// All matrices with |entries| <= entry_bound, det = +-1 and finite order,
/// ascending.
std::vector<Mat2> torsion_elements(int entry_bound);

/// Group generated by `generators`, identity first, or nullopt once it
/// grows past `cap` elements.
std::optional<std::vector<Mat2>> finite_closure(const std::vector<Mat2>& generators, std::size_t cap);

struct Gl2Subgroup {
  std::vector<Mat2> elements;  // ascending
  SO3Class type;
  bool maximal = false;
};

struct Gl2Report {
  int entry_bound = 0;
  std::size_t closure_cap = 0;
  std::size_t torsion_count = 0;
  std::vector<Gl2Subgroup> subgroups;  // by order, then elements
  std::vector<int> finite_subgroup_orders;
  std::vector<std::string> maximal_types;  // by descending order
  std::size_t infinite_pairs = 0;
  int max_order = 0;

  /// Largest finite subgroup has order 12 and every maximal one is D6 or D4.
  bool matches_known_classification() const;
  std::string to_json() const;
};

/// Closes every pair of bounded torsion elements, then extends each finite
/// subgroup found by every further torsion element until nothing new
/// appears. Closures past `closure_cap` count as infinite. Throws
/// PreconditionError when entry_bound < 1 or closure_cap < 24.
Gl2Report gl2_torsion_search(int entry_bound, std::size_t closure_cap);

}  // namespace finact

#endif  // FINACT_GL2_HPP
