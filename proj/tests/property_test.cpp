#include "doctest.h"
#include "property_checks.hpp"

using namespace finact;

namespace {

const std::vector<props::Sample>& census_samples() {
  static const auto all = props::samples({4, 6, 0, 4});
  return all;
}

void require_clean(const props::Tally& t) {
  INFO("first failure: " << t.first_failure);
  CHECK(t.failures == 0);
}

}  // namespace

TEST_CASE("homology_matrix is a homomorphism") {
  std::mt19937 rng(101);
  require_clean(props::functoriality(census_samples(), 3000, rng));
}

TEST_CASE("induced matrices are unimodular") {
  std::mt19937 rng(102);
  require_clean(props::unit_determinant(census_samples(), 3000, rng));
}

TEST_CASE("induced matrices do not depend on the basis") {
  std::mt19937 rng(103);
  require_clean(props::basis_independence(census_samples(), 3000, rng));
}

TEST_CASE("subdivision preserves the induced matrix up to conjugacy") {
  std::mt19937 rng(104);
  require_clean(props::subdivision_invariance(census_samples(), 3000, rng));
}

TEST_CASE("random bases are valid bases") {
  std::mt19937 rng(105);
  for (const auto& s : census_samples()) {
    const CycleBasis b = props::random_basis(s.graph, rng);
    CHECK(b.rank() == genus(s.graph));
    CHECK(std::abs(change_of_basis(s.basis, b).determinant()) == 1);
  }
}
