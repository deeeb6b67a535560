#ifndef FINACT_SO3_HPP
#define FINACT_SO3_HPP

#include <optional>
#include <string>
#include <vector>

#include "finact/finite_group.hpp"
#include "finact/int_matrix.hpp"

namespace finact {

/// Isomorphism type of a finite rotation group in three dimensions, or
/// NotSO3 when the group is none of them.
struct SO3Class {
  enum class Kind { kCyclic, kDihedral, kTetrahedral, kOctahedral, kIcosahedral, kNotSO3 };

  Kind kind = Kind::kNotSO3;
  int order = 0;

  static SO3Class cyclic(int n) { return {Kind::kCyclic, n}; }
  /// Dihedral group of the given order (2n).
  static SO3Class dihedral(int order) { return {Kind::kDihedral, order}; }
  static SO3Class tetrahedral() { return {Kind::kTetrahedral, 12}; }
  static SO3Class octahedral() { return {Kind::kOctahedral, 24}; }
  static SO3Class icosahedral() { return {Kind::kIcosahedral, 60}; }
  static SO3Class not_so3(int order) { return {Kind::kNotSO3, order}; }

  bool is_cyclic() const { return kind == Kind::kCyclic; }

  /// "Cyclic(6)", "Dihedral(8)", "Tetrahedral", ...
  std::string to_string() const;
  /// Short type name with dihedral groups indexed by rotation count:
  /// Z6, D4 (order 8), D6 (order 12), A4, S4, A5.
  std::string short_name() const;

  bool operator==(const SO3Class&) const = default;
};

SO3Class classify_so3(const FiniteGroup& g);

/// How many global fixed points a group of the given class leaves for
/// attaching 1-handles. Cyclic groups fix a whole circle.
struct AttachmentBound {
  bool bounded = false;
  int max_points = 0;  // meaningful when bounded

  bool operator==(const AttachmentBound&) const = default;
};

/// Throws PreconditionError for NotSO3.
AttachmentBound attachment_bound(const SO3Class& c);

enum class Theorem1Verdict { kContradiction, kConsistentCyclic, kOutsideHypotheses };

std::string to_string(Theorem1Verdict v);

/// Outcome of the classification step for a group acting homologically
/// trivially on a closed handle of the given genus. Throws
/// PreconditionError for negative genus or NotSO3.
Theorem1Verdict theorem1_verdict(int genus, const SO3Class& c);

struct SignedPermutationGroup {
  std::vector<IntMatrix> matrices;  // identity first, rest ascending
  /// Multiplication table indexed like `matrices`; present for g <= 4 only.
  std::optional<FiniteGroup> group;
};

/// All g x g signed permutation matrices, 1 <= g <= 6.
SignedPermutationGroup signed_permutation_group(int g);

}  // namespace finact

#endif  // FINACT_SO3_HPP
