#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace braidcg {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A word in the Artin generators on `strands` strands.
///
/// Letter `+k` stands for sigma_k and `-k` for its inverse, 1 <= k <= n-1.
/// Words are never reduced implicitly; the empty word is the identity braid.
class BraidWord {
 public:
  explicit BraidWord(int strands, std::vector<int> letters = {});

  /// The single-letter word sigma_i^{sign}.
  static BraidWord generator(int strands, int i, int sign = 1);

  int strands() const noexcept { return strands_; }
  std::span<const int> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  bool operator==(const BraidWord&) const = default;

 private:
  int strands_;
  std::vector<int> letters_;
};

BraidWord compose(const BraidWord& first, const BraidWord& second);
BraidWord inverse(const BraidWord& word);

/// Cancels adjacent (k, -k) pairs until none remain.
BraidWord free_reduce(const BraidWord& word);

/// k-fold concatenation; negative k concatenates the inverse.
BraidWord power(const BraidWord& word, long long k);

/// A_{i,j} = sigma_{j-1} ... sigma_{i+1} sigma_i^2 sigma_{i+1}^{-1} ... sigma_{j-1}^{-1}.
BraidWord pure_generator(int strands, int i, int j);

/// sigma_1, ..., sigma_{n-1}.
std::vector<BraidWord> artin_generators(int strands);

/// All A_{i,j}, 1 <= i < j <= n, in lexicographic pair order.
std::vector<BraidWord> pure_generators(int strands);

/// Whitespace-separated signed integers, e.g. "1 -2 1".
std::string format_word(const BraidWord& word);
BraidWord parse_word(int strands, std::string_view text);

/// Element of S_n stored as 1-based images: images()[x-1] is the image of x.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int size);
  static Permutation transposition(int size, int a, int b);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  std::span<const int> images() const noexcept { return images_; }
  int operator()(int point) const { return images_.at(point - 1); }

  /// Apply *this first, then `next`.
  Permutation then(const Permutation& next) const;
  Permutation inverse() const;
  bool is_identity() const noexcept;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

/// Image under sigma_k -> (k k+1), leftmost letter acting first. Point i is
/// sent to the final position of the strand that starts at position i.
Permutation permutation_of(const BraidWord& word);

/// Adjacent-transposition indices k_1, k_2, ... such that following `perm`
/// by (k_1 k_1+1)(k_2 k_2+1)... gives the identity.
std::vector<int> unscramble(const Permutation& perm);

/// Seeded generator shared by one harness invocation. Draws use rejection
/// sampling on the raw mt19937_64 output so streams are identical across
/// standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound);
  bool coin() { return below(2) == 1; }

 private:
  std::mt19937_64 engine_;
};

/// Concatenation of `length` uniform picks from alphabet ∪ inverse(alphabet).
BraidWord random_word(int strands, std::size_t length,
                      std::span<const BraidWord> alphabet, Rng& rng);
BraidWord random_word(int strands, std::size_t length,
                      std::span<const BraidWord> alphabet, std::uint64_t seed);

}  // namespace braidcg
