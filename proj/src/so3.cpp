#include "finact/so3.hpp"

#include <algorithm>
#include <numeric>

namespace finact {

namespace {

bool is_cyclic(const FiniteGroup& g) {
  for (int a = 0; a < g.order(); ++a) {
    if (g.element_order(a) == g.order()) return true;
  }
  return false;
}

// Generated by r of order n and an involution s outside <r> with s r s = r^-1.
bool is_dihedral(const FiniteGroup& g) {
  if (g.order() % 2 != 0 || g.order() < 4) return false;
  const int n = g.order() / 2;
  for (int r = 0; r < g.order(); ++r) {
    if (g.element_order(r) != n) continue;
    const std::vector<int> rotations = g.generated_subgroup({r});
    for (int s = 0; s < g.order(); ++s) {
      if (g.element_order(s) != 2 || std::binary_search(rotations.begin(), rotations.end(), s)) continue;
      if (g.mul(g.mul(s, r), s) == g.inverse(r)) return true;
    }
  }
  return false;
}

}  // namespace

std::string SO3Class::to_string() const {
  switch (kind) {
    case Kind::kCyclic: return "Cyclic(" + std::to_string(order) + ")";
    case Kind::kDihedral: return "Dihedral(" + std::to_string(order) + ")";
    case Kind::kTetrahedral: return "Tetrahedral";
    case Kind::kOctahedral: return "Octahedral";
    case Kind::kIcosahedral: return "Icosahedral";
    case Kind::kNotSO3: return "NotSO3";
  }
  return "NotSO3";
}

std::string SO3Class::short_name() const {
  switch (kind) {
    case Kind::kCyclic: return "Z" + std::to_string(order);
    case Kind::kDihedral: return "D" + std::to_string(order / 2);
    case Kind::kTetrahedral: return "A4";
    case Kind::kOctahedral: return "S4";
    case Kind::kIcosahedral: return "A5";
    case Kind::kNotSO3: return "order-" + std::to_string(order);
  }
  return "?";
}

SO3Class classify_so3(const FiniteGroup& g) {
  static const FiniteGroup tetrahedral = alternating_group(4);
  static const FiniteGroup octahedral = symmetric_group(4);
  static const FiniteGroup icosahedral = alternating_group(5);

  if (is_cyclic(g)) return SO3Class::cyclic(g.order());
  if (is_dihedral(g)) return SO3Class::dihedral(g.order());
  if (g.order() == 12 && is_isomorphic(g, tetrahedral)) return SO3Class::tetrahedral();
  if (g.order() == 24 && is_isomorphic(g, octahedral)) return SO3Class::octahedral();
  if (g.order() == 60 && is_isomorphic(g, icosahedral)) return SO3Class::icosahedral();
  return SO3Class::not_so3(g.order());
}

AttachmentBound attachment_bound(const SO3Class& c) {
  switch (c.kind) {
    case SO3Class::Kind::kCyclic:
      return {false, 0};
    // Non-cyclic rotation groups have at most two global fixed points on S^3.
    case SO3Class::Kind::kDihedral:
    case SO3Class::Kind::kTetrahedral:
    case SO3Class::Kind::kOctahedral:
    case SO3Class::Kind::kIcosahedral:
      return {true, 2};
    case SO3Class::Kind::kNotSO3:
      break;
  }
  throw PreconditionError("attachment_bound: group is not a finite rotation group");
}

std::string to_string(Theorem1Verdict v) {
  switch (v) {
    case Theorem1Verdict::kContradiction: return "Contradiction";
    case Theorem1Verdict::kConsistentCyclic: return "Consistent-Cyclic";
    case Theorem1Verdict::kOutsideHypotheses: return "OutsideHypotheses";
  }
  return "?";
}

Theorem1Verdict theorem1_verdict(int genus, const SO3Class& c) {
  if (genus < 0) throw PreconditionError("theorem1_verdict: genus must be non-negative");
  const AttachmentBound bound = attachment_bound(c);
  if (genus <= 1) return Theorem1Verdict::kOutsideHypotheses;
  if (c.is_cyclic()) return Theorem1Verdict::kConsistentCyclic;
  // Two attachment points leave room for a segment or a circle only: genus <= 1.
  if (bound.bounded && bound.max_points <= 2) return Theorem1Verdict::kContradiction;
  return Theorem1Verdict::kConsistentCyclic;
}

SignedPermutationGroup signed_permutation_group(int g) {
  if (g < 1 || g > 6) throw PreconditionError("signed_permutation_group: g must be in 1..6");
  std::vector<int> perm(g);
  std::iota(perm.begin(), perm.end(), 0);
  SignedPermutationGroup result;
  do {
    for (int signs = 0; signs < (1 << g); ++signs) {
      IntMatrix m(g);
      for (int col = 0; col < g; ++col) m(perm[col], col) = (signs >> col & 1) ? -1 : 1;
      result.matrices.push_back(std::move(m));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(result.matrices.begin(), result.matrices.end());
  const auto id = std::find(result.matrices.begin(), result.matrices.end(), IntMatrix::identity(g));
  std::rotate(result.matrices.begin(), id, id + 1);
  if (g <= 4) {
    result.group = FiniteGroup::from_elements(result.matrices,
                                              [](const IntMatrix& a, const IntMatrix& b) { return a * b; });
  }
  return result;
}

}  // namespace finact
