#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "braidcg/braid.hpp"
#include "json.hpp"

namespace braidcg {

/// Raised when a map defined only on PB_n receives a non-pure braid.
class NotPureBraid : public Error {
 public:
  NotPureBraid() : Error("not a pure braid") {}
};

/// Number of unordered strand pairs, C(n, 2).
std::size_t pair_count(int strands);

/// Flat index of pair (i, j), 1 <= i < j <= n, in lexicographic order.
std::size_t pair_index(int strands, int i, int j);

/// Element of Z^{C(n,2)}, coordinates indexed by strand pairs.
class ExponentVector {
 public:
  explicit ExponentVector(int strands);
  static ExponentVector basis(int strands, int i, int j);

  int strands() const noexcept { return strands_; }
  long long operator()(int i, int j) const { return components_[pair_index(strands_, i, j)]; }
  long long& operator()(int i, int j) { return components_[pair_index(strands_, i, j)]; }
  const std::vector<long long>& components() const noexcept { return components_; }
  bool is_zero() const noexcept;

  ExponentVector& operator+=(const ExponentVector& other);
  friend ExponentVector operator+(ExponentVector a, const ExponentVector& b) { return a += b; }
  friend ExponentVector operator*(long long k, ExponentVector v);
  bool operator==(const ExponentVector&) const = default;

 private:
  int strands_;
  std::vector<long long> components_;
};

/// Element of (Z/2)^{C(n,2)}.
class Mod2Vector {
 public:
  explicit Mod2Vector(int strands);
  static Mod2Vector basis(int strands, int i, int j);

  int strands() const noexcept { return strands_; }
  bool operator()(int i, int j) const { return bits_[pair_index(strands_, i, j)] != 0; }
  void flip(int i, int j) { bits_[pair_index(strands_, i, j)] ^= 1; }
  const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }
  bool is_zero() const noexcept;

  Mod2Vector& operator+=(const Mod2Vector& other);
  friend Mod2Vector operator+(Mod2Vector a, const Mod2Vector& b) { return a += b; }
  bool operator==(const Mod2Vector&) const = default;

 private:
  int strands_;
  std::vector<std::uint8_t> bits_;
};

/// Signed crossing count of every strand pair, before halving. Defined for
/// any word; strands are labelled by starting position.
std::vector<long long> raw_crossing_counts(const BraidWord& word);

/// Image of a pure braid in the abelianization Z^{C(n,2)} of PB_n, with
/// A_{i,j} sent to e_{i,j}. Throws NotPureBraid otherwise.
ExponentVector linking_vector(const BraidWord& word);

/// The mod-2 abelianization phi: PB_n -> (Z/2)^{C(n,2)}.
Mod2Vector phi_mod2(const BraidWord& word);

/// {"n": n, "pairs": [[i, j, value], ...]} with nonzero components only.
nlohmann::json to_json(const ExponentVector& v);
nlohmann::json to_json(const Mod2Vector& v);

}  // namespace braidcg
