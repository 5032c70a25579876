#include "braidcg/burau.hpp"

#include <algorithm>

#include "doctest.h"
#include "oracle.hpp"
#include "property.hpp"

using namespace braidcg;

namespace {

IntegerMatrix from_dense(const oracle::Dense& d) { return IntegerMatrix::from_rows(d); }

BraidWord sigma(int n, int i, long long k = 1) { return power(BraidWord::generator(n, i), k); }

}  // namespace

TEST_CASE("generator matrices match the block definition") {
  CHECK(generator_matrix(3, 1, 1) == IntegerMatrix::from_rows({{1, 0}, {1, 1}}));
  CHECK(generator_matrix(3, 2, 1) == IntegerMatrix::from_rows({{1, -1}, {0, 1}}));
  CHECK(generator_matrix(4, 2, 1) == IntegerMatrix::from_rows({{1, -1, 0}, {0, 1, 0}, {0, 1, 1}}));
  CHECK(generator_matrix(2, 1, 1) == IntegerMatrix::from_rows({{1}}));
  CHECK(generator_matrix(5, 3, 1) ==
        IntegerMatrix::from_rows({{1, 0, 0, 0}, {0, 1, -1, 0}, {0, 0, 1, 0}, {0, 0, 1, 1}}));
  CHECK_THROWS_AS(generator_matrix(3, 3, 1), Error);
  CHECK_THROWS_AS(generator_matrix(3, 0, 1), Error);
  CHECK_THROWS_AS(generator_matrix(3, 1, 2), Error);
}

TEST_CASE("generator matrices agree with the dense oracle and invert exactly") {
  for (int n = 2; n <= 8; ++n)
    for (int i = 1; i < n; ++i) {
      CHECK(generator_matrix(n, i, 1) == from_dense(oracle::generator(n, i)));
      CHECK((generator_matrix(n, i, 1) * generator_matrix(n, i, -1)).is_identity());
    }
}

TEST_CASE("burau_int examples") {
  CHECK(burau_int(BraidWord(3)).is_identity());
  CHECK(burau_int(sigma(3, 1, 2)) == IntegerMatrix::from_rows({{1, 0}, {2, 1}}));
  const IntegerMatrix braid = burau_int(BraidWord(3, {1, 2, 1}));
  CHECK(braid == IntegerMatrix::from_rows({{0, -1}, {1, 0}}));
  CHECK(braid == burau_int(BraidWord(3, {2, 1, 2})));
}

TEST_CASE("burau_int enforces the word-length cap") {
  const BraidWord long_word = sigma(3, 1, 50);
  CHECK_THROWS_AS(burau_int(long_word, 49), Error);
  CHECK_NOTHROW(burau_int(long_word, 50));
  CHECK(burau_int(long_word) == IntegerMatrix::from_rows({{1, 0}, {50, 1}}));
}

TEST_CASE("burau_mod examples") {
  CHECK(burau_mod(sigma(3, 1, 2), 2).is_identity());
  const ModularMatrix s1 = burau_mod(sigma(3, 1), 2);
  CHECK(s1 == ModularMatrix(2, 2, {1, 0, 1, 1}));
  CHECK_FALSE(s1.is_identity());
  CHECK(burau_mod(sigma(4, 2, 3), 3).is_identity());
  CHECK_THROWS_AS(burau_mod(sigma(3, 1), 1), Error);
}

TEST_CASE("reduce_mod examples") {
  CHECK(reduce_mod(IntegerMatrix::identity(3), 7).is_identity());
  CHECK(reduce_mod(IntegerMatrix::from_rows({{1, 0}, {2, 1}}), 2) == ModularMatrix::identity(2, 2));
  CHECK(reduce_mod(IntegerMatrix::from_rows({{1, -1}, {0, 1}}), 4) == ModularMatrix(4, 2, {1, 3, 0, 1}));
}

TEST_CASE("congruence levels below 2 are rejected") {
  CHECK_THROWS_AS(CongruenceLevel(1), Error);
  CHECK_THROWS_AS(CongruenceLevel(0), Error);
  CHECK_THROWS_AS(CongruenceLevel(-4), Error);
  CHECK(CongruenceLevel(2).value() == 2);
}

TEST_CASE("sigma_i^m lies in B_n[m]") {
  for (int n = 2; n <= 8; ++n)
    for (int m = 2; m <= 12; ++m)
      for (int i = 1; i < n; ++i) {
        CHECK(is_congruence_member(sigma(n, i, m), CongruenceLevel(m)));
        CHECK(is_congruence_member(sigma(n, i, -m), CongruenceLevel(m)));
      }
}

TEST_CASE("A_ij^m lies in B_n[2m]") {
  for (int n = 3; n <= 7; ++n)
    for (int m = 1; m <= 6; ++m)
      for (const auto& a : pure_generators(n))
        CHECK(is_congruence_member(power(a, m), CongruenceLevel(2 * m)));
}

TEST_CASE("sigma_1 is not in B_3[2]") { CHECK_FALSE(is_congruence_member(sigma(3, 1), CongruenceLevel(2))); }

TEST_CASE("modular matrix basics") {
  const ModularMatrix a(5, 2, {-1, 7, 3, 10});
  CHECK(a == ModularMatrix(5, 2, {4, 2, 3, 0}));
  CHECK(a.determinant() == (4 * 0 - 2 * 3 + 25) % 5);
  CHECK(ModularMatrix(4, 2, {2, 0, 0, 1}).is_invertible() == false);
  CHECK(ModularMatrix(4, 2, {1, 1, 0, 1}).is_invertible());
  CHECK_THROWS_AS(ModularMatrix(4, 2, {1, 2, 3}), Error);
}

TEST_CASE("canonical keys round trip and order numerically") {
  Rng rng(7);
  for (std::uint64_t m : {2ull, 4ull, 255ull, 256ull, 257ull, 100000ull, (1ull << 40) + 3}) {
    std::vector<std::pair<std::string, std::vector<long long>>> keyed;
    for (int c = 0; c < 20; ++c) {
      std::vector<long long> e(9);
      for (auto& x : e) x = static_cast<long long>(rng.below(m));
      const ModularMatrix mm(m, 3, e);
      CHECK(ModularMatrix::from_canonical_key(mm.canonical_key()) == mm);
      keyed.emplace_back(mm.canonical_key(), e);
    }
    std::sort(keyed.begin(), keyed.end());
    for (std::size_t k = 1; k < keyed.size(); ++k) CHECK(keyed[k - 1].second <= keyed[k].second);
  }
  CHECK_THROWS_AS(ModularMatrix::from_canonical_key("short"), Error);
}

TEST_CASE("matrix JSON encoding") {
  const IntegerMatrix m = IntegerMatrix::from_rows({{1, -1}, {0, 1}});
  const auto j = to_json(m);
  CHECK(j.dump() == R"({"d":2,"m":null,"rows":[["1","-1"],["0","1"]]})");
  CHECK(integer_matrix_from_json(j) == m);
  IntegerMatrix big = IntegerMatrix::identity(2);
  big(0, 1) = Integer("123456789012345678901234567890");
  CHECK(integer_matrix_from_json(to_json(big)) == big);

  const ModularMatrix r = reduce_mod(m, 4);
  CHECK(to_json(r).dump() == R"({"d":2,"m":4,"rows":[[1,3],[0,1]]})");
  CHECK(modular_matrix_from_json(to_json(r)) == r);
}

TEST_CASE("determinant") {
  CHECK(IntegerMatrix::from_rows({{2, 1}, {1, 1}}).determinant() == 1);
  CHECK(IntegerMatrix::from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, 5}}).determinant() == -5);
  CHECK(IntegerMatrix::from_rows({{1, 2}, {2, 4}}).determinant() == 0);
  CHECK(IntegerMatrix(0).determinant() == 1);
}

TEST_CASE("property: burau_int matches the dense oracle") {
  Rng rng(201);
  for (int c = 0; c < prop::kCases; ++c) {
    const int n = 2 + static_cast<int>(rng.below(7));
    const BraidWord w = prop::random_braid(rng, n, 12);
    CHECK(burau_int(w) == from_dense(oracle::evaluate(n, {w.letters().begin(), w.letters().end()})));
  }
}

TEST_CASE("property: representation law") {
  Rng rng(202);
  for (int c = 0; c < prop::kCases; ++c) {
    const int n = 2 + static_cast<int>(rng.below(7));
    const BraidWord a = prop::random_braid(rng, n, 30);
    const BraidWord b = prop::random_braid(rng, n, 30);
    CHECK(burau_int(compose(a, b)) == burau_int(a) * burau_int(b));
  }
}

TEST_CASE("property: braid relations hold exactly for n <= 8") {
  for (int n = 3; n <= 8; ++n)
    for (int i = 1; i < n; ++i)
      for (int j = 1; j < n; ++j) {
        if (j == i + 1)
          CHECK(burau_int(BraidWord(n, {i, j, i})) == burau_int(BraidWord(n, {j, i, j})));
        if (std::abs(i - j) >= 2) CHECK(burau_int(BraidWord(n, {i, j})) == burau_int(BraidWord(n, {j, i})));
      }
}

TEST_CASE("property: mod-first agrees with reduce-last") {
  Rng rng(203);
  const std::uint64_t moduli[] = {2, 3, 4, 6, 12, 97, 1u << 20, (1ull << 33) + 1};
  for (int c = 0; c < prop::kCases; ++c) {
    const int n = 2 + static_cast<int>(rng.below(7));
    const BraidWord w = prop::random_braid(rng, n, 200);
    const std::uint64_t m = moduli[rng.below(std::size(moduli))];
    CHECK(burau_mod(w, m) == reduce_mod(burau_int(w), m));
  }
}

TEST_CASE("property: determinant one and exact inverse") {
  Rng rng(204);
  for (int c = 0; c < prop::kCases; ++c) {
    const int n = 2 + static_cast<int>(rng.below(7));
    const BraidWord w = prop::random_braid(rng, n, 60);
    const IntegerMatrix m = burau_int(w);
    CHECK(m.determinant() == 1);
    CHECK((m * burau_int(inverse(w))).is_identity());
  }
}

TEST_CASE("property: membership passes to divisors of the level") {
  Rng rng(205);
  for (int c = 0; c < prop::kCases; ++c) {
    const int n = 3 + static_cast<int>(rng.below(4));
    const long long level = 2 + static_cast<long long>(rng.below(11));
    // Conjugates of sigma_i^level are members; mix with random words too.
    const BraidWord u = prop::random_braid(rng, n, 6);
    const int i = 1 + static_cast<int>(rng.below(n - 1));
    const BraidWord member = compose(compose(u, sigma(n, i, level)), inverse(u));
    const BraidWord other = prop::random_braid(rng, n, 10);
    for (const BraidWord& w : {member, other}) {
      if (!is_congruence_member(w, CongruenceLevel(level))) continue;
      for (long long k = 2; k <= level; ++k)
        if (level % k == 0) CHECK(is_congruence_member(w, CongruenceLevel(k)));
    }
    CHECK(is_congruence_member(member, CongruenceLevel(level)));
  }
}
