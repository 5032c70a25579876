#include "braidcg/abelianization.hpp"

#include "doctest.h"
#include "property.hpp"

using namespace braidcg;

TEST_CASE("pair indexing is lexicographic") {
  CHECK(pair_count(3) == 3);
  CHECK(pair_count(5) == 10);
  std::size_t expected = 0;
  for (int i = 1; i <= 6; ++i)
    for (int j = i + 1; j <= 6; ++j) CHECK(pair_index(6, i, j) == expected++);
  CHECK(pair_index(4, 3, 1) == pair_index(4, 1, 3));
  CHECK_THROWS_AS(pair_index(4, 2, 2), Error);
  CHECK_THROWS_AS(pair_index(4, 0, 2), Error);
  CHECK_THROWS_AS(pair_index(4, 1, 5), Error);
}

TEST_CASE("linking_vector examples") {
  CHECK(linking_vector(pure_generator(3, 1, 2)) == ExponentVector::basis(3, 1, 2));
  CHECK(linking_vector(BraidWord(3)).is_zero());
  CHECK(linking_vector(power(pure_generator(3, 1, 3), 3)) == 3 * ExponentVector::basis(3, 1, 3));
  CHECK(linking_vector(power(pure_generator(4, 2, 4), -2)) == -2 * ExponentVector::basis(4, 2, 4));
}

TEST_CASE("non-pure words are rejected") {
  CHECK_THROWS_AS(linking_vector(BraidWord(3, {1})), NotPureBraid);
  CHECK_THROWS_AS(phi_mod2(BraidWord(3, {1, 2})), NotPureBraid);
  CHECK_THROWS_WITH(linking_vector(BraidWord(4, {3})), "not a pure braid");
}

TEST_CASE("phi_mod2 examples") {
  for (int n = 3; n <= 5; ++n)
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        const BraidWord a = pure_generator(n, i, j);
        for (int ell : {1, 3, 5, 7}) CHECK(phi_mod2(power(a, ell)) == Mod2Vector::basis(n, i, j));
        CHECK(phi_mod2(power(a, 2)).is_zero());
      }
  const BraidWord a12 = pure_generator(3, 1, 2), a13 = pure_generator(3, 1, 3);
  const BraidWord comm = compose(compose(a12, a13), compose(inverse(a12), inverse(a13)));
  CHECK(phi_mod2(comm).is_zero());
}

TEST_CASE("vector arithmetic") {
  ExponentVector v = ExponentVector::basis(4, 1, 2) + 3 * ExponentVector::basis(4, 3, 4);
  CHECK(v(1, 2) == 1);
  CHECK(v(3, 4) == 3);
  CHECK(v(2, 3) == 0);
  Mod2Vector b = Mod2Vector::basis(4, 1, 3);
  CHECK((b + b).is_zero());
  CHECK_THROWS_AS(ExponentVector(3) += ExponentVector(4), Error);
}

TEST_CASE("vector JSON lists nonzero pairs") {
  ExponentVector v = 2 * ExponentVector::basis(4, 1, 3) + -1 * ExponentVector::basis(4, 2, 4);
  CHECK(to_json(v).dump() == R"({"n":4,"pairs":[[1,3,2],[2,4,-1]]})");
  CHECK(to_json(Mod2Vector(3)).dump() == R"({"n":3,"pairs":[]})");
  CHECK(to_json(Mod2Vector::basis(3, 2, 3)).dump() == R"({"n":3,"pairs":[[2,3,1]]})");
}

TEST_CASE("basis property for n <= 8") {
  for (int n = 2; n <= 8; ++n)
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        CHECK(linking_vector(pure_generator(n, i, j)) == ExponentVector::basis(n, i, j));
}

TEST_CASE("property: exponent-sum oracle on products of A_ij^{+-1}") {
  Rng rng(301);
  for (int c = 0; c < prop::kCases; ++c) {
    const int n = 2 + static_cast<int>(rng.below(6));
    BraidWord w(n);
    ExponentVector expected(n);
    const auto factors = rng.below(15);
    for (std::uint64_t f = 0; f < factors; ++f) {
      const int i = 1 + static_cast<int>(rng.below(n - 1));
      const int j = i + 1 + static_cast<int>(rng.below(n - i));
      const int e = rng.coin() ? 1 : -1;
      w = compose(w, power(pure_generator(n, i, j), e));
      expected(i, j) += e;
    }
    CHECK(linking_vector(w) == expected);
  }
}

TEST_CASE("property: additivity and conjugation invariance") {
  Rng rng(302);
  for (int c = 0; c < prop::kCases; ++c) {
    const int n = 2 + static_cast<int>(rng.below(6));
    const BraidWord a = prop::random_pure(rng, n, 20);
    const BraidWord b = prop::random_pure(rng, n, 20);
    CHECK(linking_vector(compose(a, b)) == linking_vector(a) + linking_vector(b));
    const BraidWord conj = compose(compose(b, a), inverse(b));
    CHECK(linking_vector(conj) == linking_vector(a));
  }
}

TEST_CASE("property: conjugation by an arbitrary braid relabels strands") {
  // Component (i,j) of L(u w u^-1) is component (p(i), p(j)) of L(w) with
  // p = permutation_of(u): strand i of the conjugate runs through w as the
  // strand starting at position p(i).
  Rng rng(303);
  for (int c = 0; c < prop::kCases; ++c) {
    const int n = 2 + static_cast<int>(rng.below(5));
    const BraidWord u = prop::random_braid(rng, n, 6);
    const BraidWord w = prop::random_pure(rng, n, 10);
    const ExponentVector lw = linking_vector(w);
    const ExponentVector lc = linking_vector(compose(compose(u, w), inverse(u)));
    const Permutation p = permutation_of(u);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) CHECK(lc(i, j) == lw(p(i), p(j)));
  }
}

TEST_CASE("conjugation relabelling on a worked example") {
  // u = sigma_1 sigma_2 sends strand 2 to position 1 and strand 3 to position 2.
  const BraidWord u(3, {1, 2});
  const BraidWord conj = compose(compose(u, pure_generator(3, 1, 2)), inverse(u));
  CHECK(linking_vector(conj) == ExponentVector::basis(3, 2, 3));
}

TEST_CASE("property: well-defined under free reduction and relators") {
  Rng rng(304);
  for (int c = 0; c < prop::kCases; ++c) {
    const int n = 3 + static_cast<int>(rng.below(5));
    const BraidWord w = prop::random_pure(rng, n, 20);
    const ExponentVector v = linking_vector(w);
    CHECK(linking_vector(free_reduce(w)) == v);
    CHECK(linking_vector(prop::insert_relator(rng, w)) == v);
    CHECK(phi_mod2(prop::insert_relator(rng, w)) == phi_mod2(w));
  }
}

TEST_CASE("property: pair counters are even exactly for strands that return") {
  Rng rng(305);
  for (int c = 0; c < prop::kCases; ++c) {
    const int n = 2 + static_cast<int>(rng.below(6));
    const BraidWord w = prop::random_braid(rng, n, 25);
    const auto counts = raw_crossing_counts(w);
    const Permutation p = permutation_of(w);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        // Odd exactly when the pair ends in swapped relative order.
        const bool swapped = p(i) > p(j);
        CHECK((counts[pair_index(n, i, j)] % 2 != 0) == swapped);
        if (p(i) == i && p(j) == j) CHECK(counts[pair_index(n, i, j)] % 2 == 0);
      }
    if (p.is_identity())
      CHECK_NOTHROW(linking_vector(w));
    else
      CHECK_THROWS_AS(linking_vector(w), NotPureBraid);
  }
}
