#include "braidcg/abelianization.hpp"

#include <cstdlib>
#include <utility>

namespace braidcg {

std::size_t pair_count(int strands) {
  const auto n = static_cast<std::size_t>(strands);
  return n * (n - 1) / 2;
}

std::size_t pair_index(int strands, int i, int j) {
  if (i > j) std::swap(i, j);
  if (i < 1 || j > strands || i == j)
    throw Error("strand pair (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
  // Pairs starting with 1..i-1 come first: sum_{a<i} (n - a).
  const auto n = static_cast<std::size_t>(strands);
  const auto a = static_cast<std::size_t>(i);
  const std::size_t before = (a - 1) * n - (a - 1) * a / 2;
  return before + static_cast<std::size_t>(j - i - 1);
}

ExponentVector::ExponentVector(int strands) : strands_(strands), components_(pair_count(strands), 0) {
  if (strands < 2) throw Error("exponent vectors need at least 2 strands");
}

ExponentVector ExponentVector::basis(int strands, int i, int j) {
  ExponentVector v(strands);
  v(i, j) = 1;
  return v;
}

bool ExponentVector::is_zero() const noexcept {
  for (long long x : components_)
    if (x != 0) return false;
  return true;
}

ExponentVector& ExponentVector::operator+=(const ExponentVector& other) {
  if (other.strands_ != strands_) throw Error("exponent vector size mismatch");
  for (std::size_t k = 0; k < components_.size(); ++k) components_[k] += other.components_[k];
  return *this;
}

ExponentVector operator*(long long k, ExponentVector v) {
  for (auto& x : v.components_) x *= k;
  return v;
}

Mod2Vector::Mod2Vector(int strands) : strands_(strands), bits_(pair_count(strands), 0) {
  if (strands < 2) throw Error("mod-2 vectors need at least 2 strands");
}

Mod2Vector Mod2Vector::basis(int strands, int i, int j) {
  Mod2Vector v(strands);
  v.flip(i, j);
  return v;
}

bool Mod2Vector::is_zero() const noexcept {
  for (auto b : bits_)
    if (b != 0) return false;
  return true;
}

Mod2Vector& Mod2Vector::operator+=(const Mod2Vector& other) {
  if (other.strands_ != strands_) throw Error("mod-2 vector size mismatch");
  for (std::size_t k = 0; k < bits_.size(); ++k) bits_[k] ^= other.bits_[k];
  return *this;
}

std::vector<long long> raw_crossing_counts(const BraidWord& word) {
  const int n = word.strands();
  std::vector<int> strand_at(n);
  for (int p = 0; p < n; ++p) strand_at[p] = p + 1;
  std::vector<long long> counts(pair_count(n), 0);
  for (int letter : word.letters()) {
    const int k = std::abs(letter);
    counts[pair_index(n, strand_at[k - 1], strand_at[k])] += letter > 0 ? 1 : -1;
    std::swap(strand_at[k - 1], strand_at[k]);
  }
  return counts;
}

ExponentVector linking_vector(const BraidWord& word) {
  if (!permutation_of(word).is_identity()) throw NotPureBraid();
  const auto counts = raw_crossing_counts(word);
  ExponentVector v(word.strands());
  for (int i = 1; i <= word.strands(); ++i)
    for (int j = i + 1; j <= word.strands(); ++j) {
      const long long c = counts[pair_index(word.strands(), i, j)];
      if (c % 2 != 0) throw Error("odd crossing count on a pure braid");
      v(i, j) = c / 2;
    }
  return v;
}

Mod2Vector phi_mod2(const BraidWord& word) {
  const ExponentVector v = linking_vector(word);
  Mod2Vector out(word.strands());
  for (int i = 1; i <= word.strands(); ++i)
    for (int j = i + 1; j <= word.strands(); ++j)
      if (v(i, j) % 2 != 0) out.flip(i, j);
  return out;
}

nlohmann::json to_json(const ExponentVector& v) {
  nlohmann::json pairs = nlohmann::json::array();
  for (int i = 1; i <= v.strands(); ++i)
    for (int j = i + 1; j <= v.strands(); ++j)
      if (v(i, j) != 0) pairs.push_back({i, j, v(i, j)});
  return {{"n", v.strands()}, {"pairs", std::move(pairs)}};
}

nlohmann::json to_json(const Mod2Vector& v) {
  nlohmann::json pairs = nlohmann::json::array();
  for (int i = 1; i <= v.strands(); ++i)
    for (int j = i + 1; j <= v.strands(); ++j)
      if (v(i, j)) pairs.push_back({i, j, 1});
  return {{"n", v.strands()}, {"pairs", std::move(pairs)}};
}

}  // namespace braidcg
