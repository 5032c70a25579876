#include "braidcg/symplectic.hpp"

#include "doctest.h"
#include "property.hpp"

using namespace braidcg;

TEST_CASE("n = 3 gives the standard 2x2 alternating form") {
  const FormSpace space = invariant_forms(3);
  REQUIRE(space.basis.size() == 1);
  CHECK(space.basis[0] == IntegerMatrix::from_rows({{0, 1}, {-1, 0}}));
}

TEST_CASE("is_alternating_nondegenerate") {
  CHECK(is_alternating_nondegenerate(IntegerMatrix::from_rows({{0, 1}, {-1, 0}})));
  CHECK_FALSE(is_alternating_nondegenerate(IntegerMatrix::identity(2)));
  CHECK_FALSE(is_alternating_nondegenerate(IntegerMatrix(2)));
  CHECK_FALSE(is_alternating_nondegenerate(IntegerMatrix::from_rows({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}})));
  CHECK_FALSE(is_alternating_nondegenerate(IntegerMatrix::from_rows({{1, 1}, {-1, 0}})));
}

TEST_CASE("zero space basis excludes the zero matrix") {
  for (int n = 3; n <= 8; ++n)
    for (const auto& j : invariant_forms(n).basis) CHECK_FALSE(j.is_zero());
}

TEST_CASE("odd n has a nondegenerate alternating invariant form") {
  for (int n : {3, 5, 7, 9}) {
    const auto form = find_symplectic_form(invariant_forms(n));
    REQUIRE(form.has_value());
    CHECK(is_alternating_nondegenerate(*form));
    CHECK(form->dim() == static_cast<std::size_t>(n - 1));
  }
}

TEST_CASE("even n reports a degenerate space") {
  // Odd dimension: every alternating form is singular.
  for (int n : {4, 6, 8}) CHECK_FALSE(find_symplectic_form(invariant_forms(n)).has_value());
}

TEST_CASE("basis normalization") {
  for (int n = 3; n <= 9; ++n)
    for (const auto& j : invariant_forms(n).basis) {
      Integer content = 0;
      for (const auto& x : j.entries()) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
      CHECK(content == 1);
      for (const auto& x : j.entries()) {
        if (x == 0) continue;
        CHECK(x > 0);
        break;
      }
    }
}

TEST_CASE("property: basis elements solve the defining system exactly") {
  for (int n = 3; n <= 9; ++n)
    for (const auto& j : invariant_forms(n).basis)
      for (int i = 1; i < n; ++i) {
        const IntegerMatrix g = generator_matrix(n, i, 1);
        CHECK((g.transpose() * j * g - j).is_zero());
      }
}

TEST_CASE("property: invariance extends to sampled words") {
  Rng rng(401);
  std::vector<FormSpace> spaces;
  for (int n = 3; n <= 9; ++n) spaces.push_back(invariant_forms(n));
  for (int c = 0; c < prop::kCases; ++c) {
    const int n = 3 + static_cast<int>(rng.below(7));
    const IntegerMatrix m = burau_int(prop::random_braid(rng, n, 40));
    for (const auto& j : spaces[n - 3].basis) CHECK(preserves_form(m, j));
  }
}
