#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "braidcg/braid.hpp"
#include "json.hpp"

namespace braidcg {

using Integer = mpz_class;

/// Square matrix over the integers with exact (GMP) entries.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  explicit IntegerMatrix(std::size_t dim);
  IntegerMatrix(std::size_t dim, std::vector<Integer> row_major);
  static IntegerMatrix identity(std::size_t dim);
  static IntegerMatrix from_rows(const std::vector<std::vector<long long>>& rows);

  std::size_t dim() const noexcept { return dim_; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }
  Integer& operator()(std::size_t r, std::size_t c) { return entries_[r * dim_ + c]; }
  const std::vector<Integer>& entries() const noexcept { return entries_; }

  IntegerMatrix transpose() const;
  bool is_identity() const;
  bool is_zero() const;

  /// Fraction-free (Bareiss) determinant.
  Integer determinant() const;

  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
  friend IntegerMatrix operator-(const IntegerMatrix& a, const IntegerMatrix& b);
  friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b);

 private:
  std::size_t dim_ = 0;
  std::vector<Integer> entries_;
};

/// Square matrix over Z/mZ with residues kept in [0, m).
class ModularMatrix {
 public:
  using Residue = std::uint64_t;

  /// Largest supported modulus; products are formed in 128-bit arithmetic.
  static constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 62;

  ModularMatrix() = default;
  ModularMatrix(std::uint64_t modulus, std::size_t dim);
  /// Entries are reduced into [0, m); negative inputs are allowed.
  ModularMatrix(std::uint64_t modulus, std::size_t dim, const std::vector<long long>& row_major);
  static ModularMatrix identity(std::uint64_t modulus, std::size_t dim);

  std::uint64_t modulus() const noexcept { return modulus_; }
  std::size_t dim() const noexcept { return dim_; }
  Residue operator()(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }
  const std::vector<Residue>& entries() const noexcept { return entries_; }

  bool is_identity() const noexcept;

  /// Determinant mod m, computed exactly over Z on the residue lift.
  Residue determinant() const;
  bool is_invertible() const;

  /// Big-endian modulus (8 bytes), dimension (4 bytes), then each residue
  /// big-endian in the fewest bytes that hold m-1. Byte order equals numeric
  /// order, so sorting keys sorts matrices.
  std::string canonical_key() const;
  static ModularMatrix from_canonical_key(const std::string& key);

  friend ModularMatrix operator*(const ModularMatrix& a, const ModularMatrix& b);
  friend bool operator==(const ModularMatrix& a, const ModularMatrix& b) = default;

 private:
  std::uint64_t modulus_ = 0;
  std::size_t dim_ = 0;
  std::vector<Residue> entries_;
};

/// Level of a congruence subgroup; levels 0 and 1 are rejected.
class CongruenceLevel {
 public:
  explicit CongruenceLevel(long long level);
  std::uint64_t value() const noexcept { return level_; }

 private:
  std::uint64_t level_;
};

/// Default bound on word length for exact integer evaluation.
inline constexpr std::size_t kDefaultMaxLetters = 10'000;

/// Image of sigma_i^{sign} under the reduced Burau representation at t = -1.
IntegerMatrix generator_matrix(int strands, int i, int sign);

/// Ordered product of generator images, leftmost letter first.
IntegerMatrix burau_int(const BraidWord& word, std::size_t max_letters = kDefaultMaxLetters);

/// Same product with every intermediate reduced mod m.
ModularMatrix burau_mod(const BraidWord& word, std::uint64_t modulus);

ModularMatrix reduce_mod(const IntegerMatrix& matrix, std::uint64_t modulus);

/// True iff the word lies in B_n[level].
bool is_congruence_member(const BraidWord& word, CongruenceLevel level);

nlohmann::json to_json(const IntegerMatrix& matrix);
nlohmann::json to_json(const ModularMatrix& matrix);
IntegerMatrix integer_matrix_from_json(const nlohmann::json& j);
ModularMatrix modular_matrix_from_json(const nlohmann::json& j);

}  // namespace braidcg
