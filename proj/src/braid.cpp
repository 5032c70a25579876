#include "braidcg/braid.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <limits>
#include <sstream>

namespace braidcg {

namespace {

void require_strands(int strands) {
  if (strands < 2)
    throw Error("braid words need at least 2 strands, got " + std::to_string(strands));
}

void require_same_strands(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands())
    throw Error("strand-count mismatch: " + std::to_string(a.strands()) + " vs " +
                std::to_string(b.strands()));
}

}  // namespace

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  require_strands(strands_);
  for (int letter : letters_) {
    const int k = std::abs(letter);
    if (k < 1 || k > strands_ - 1)
      throw Error("letter " + std::to_string(letter) + " out of range for " +
                  std::to_string(strands_) + " strands");
  }
}

BraidWord BraidWord::generator(int strands, int i, int sign) {
  if (sign != 1 && sign != -1) throw Error("generator sign must be +1 or -1");
  return BraidWord(strands, {sign * i});
}

BraidWord compose(const BraidWord& first, const BraidWord& second) {
  require_same_strands(first, second);
  std::vector<int> letters(first.letters().begin(), first.letters().end());
  letters.insert(letters.end(), second.letters().begin(), second.letters().end());
  return BraidWord(first.strands(), std::move(letters));
}

BraidWord inverse(const BraidWord& word) {
  std::vector<int> letters;
  letters.reserve(word.size());
  for (auto it = word.letters().rbegin(); it != word.letters().rend(); ++it)
    letters.push_back(-*it);
  return BraidWord(word.strands(), std::move(letters));
}

BraidWord free_reduce(const BraidWord& word) {
  // A single stack pass yields the unique free normal form.
  std::vector<int> stack;
  stack.reserve(word.size());
  for (int letter : word.letters()) {
    if (!stack.empty() && stack.back() == -letter)
      stack.pop_back();
    else
      stack.push_back(letter);
  }
  return BraidWord(word.strands(), std::move(stack));
}

BraidWord power(const BraidWord& word, long long k) {
  const BraidWord base = k < 0 ? inverse(word) : word;
  const auto reps = static_cast<std::size_t>(k < 0 ? -k : k);
  std::vector<int> letters;
  letters.reserve(reps * base.size());
  for (std::size_t r = 0; r < reps; ++r)
    letters.insert(letters.end(), base.letters().begin(), base.letters().end());
  return BraidWord(word.strands(), std::move(letters));
}

BraidWord pure_generator(int strands, int i, int j) {
  require_strands(strands);
  if (i < 1 || j > strands || i >= j)
    throw Error("pure generator A_{" + std::to_string(i) + "," + std::to_string(j) +
                "} needs 1 <= i < j <= " + std::to_string(strands));
  std::vector<int> letters;
  for (int k = j - 1; k > i; --k) letters.push_back(k);
  letters.push_back(i);
  letters.push_back(i);
  for (int k = i + 1; k <= j - 1; ++k) letters.push_back(-k);
  return BraidWord(strands, std::move(letters));
}

std::vector<BraidWord> artin_generators(int strands) {
  require_strands(strands);
  std::vector<BraidWord> gens;
  for (int i = 1; i < strands; ++i) gens.push_back(BraidWord::generator(strands, i));
  return gens;
}

std::vector<BraidWord> pure_generators(int strands) {
  std::vector<BraidWord> gens;
  for (int i = 1; i <= strands; ++i)
    for (int j = i + 1; j <= strands; ++j) gens.push_back(pure_generator(strands, i, j));
  return gens;
}

std::string format_word(const BraidWord& word) {
  std::string out;
  for (int letter : word.letters()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(letter);
  }
  return out;
}

BraidWord parse_word(int strands, std::string_view text) {
  std::vector<int> letters;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    std::string_view token = text.substr(pos, end - pos);
    if (!token.empty() && token.front() == '+') token.remove_prefix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || value == 0)
      throw Error("bad braid letter '" + std::string(text.substr(pos, end - pos)) + "'");
    letters.push_back(value);
    pos = end;
  }
  return BraidWord(strands, std::move(letters));
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int x : images_) {
    if (x < 1 || x > size() || seen[x]) throw Error("images do not form a permutation");
    seen[x] = true;
  }
}

Permutation Permutation::identity(int size) {
  std::vector<int> images(size);
  for (int i = 0; i < size; ++i) images[i] = i + 1;
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(int size, int a, int b) {
  auto images = identity(size).images_;
  std::swap(images.at(a - 1), images.at(b - 1));
  return Permutation(std::move(images));
}

Permutation Permutation::then(const Permutation& next) const {
  if (next.size() != size()) throw Error("permutation size mismatch");
  std::vector<int> images(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) images[i] = next(images_[i]);
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> images(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    images[images_[i] - 1] = static_cast<int>(i) + 1;
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i) + 1) return false;
  return true;
}

Permutation permutation_of(const BraidWord& word) {
  // strand_at[p] is the strand currently at position p+1.
  const int n = word.strands();
  std::vector<int> strand_at(n);
  for (int p = 0; p < n; ++p) strand_at[p] = p + 1;
  for (int letter : word.letters()) {
    const int k = std::abs(letter);
    std::swap(strand_at[k - 1], strand_at[k]);
  }
  std::vector<int> images(n);
  for (int p = 0; p < n; ++p) images[strand_at[p] - 1] = p + 1;
  return Permutation(std::move(images));
}

std::vector<int> unscramble(const Permutation& perm) {
  const int n = perm.size();
  std::vector<int> strand_at(n);
  for (int i = 1; i <= n; ++i) strand_at[perm(i) - 1] = i;
  std::vector<int> swaps;
  for (int pass = 0; pass < n; ++pass) {
    bool moved = false;
    for (int p = 0; p + 1 < n; ++p) {
      if (strand_at[p] > strand_at[p + 1]) {
        std::swap(strand_at[p], strand_at[p + 1]);
        swaps.push_back(p + 1);
        moved = true;
      }
    }
    if (!moved) break;
  }
  return swaps;
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw Error("Rng::below needs a positive bound");
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t draw;
  do {
    draw = engine_();
  } while (draw >= limit);
  return draw % bound;
}

BraidWord random_word(int strands, std::size_t length, std::span<const BraidWord> alphabet,
                      Rng& rng) {
  if (alphabet.empty()) throw Error("random_word needs a nonempty alphabet");
  for (const auto& w : alphabet)
    if (w.strands() != strands) throw Error("alphabet word on wrong number of strands");
  std::vector<int> letters;
  for (std::size_t step = 0; step < length; ++step) {
    const auto pick = rng.below(2 * alphabet.size());
    const BraidWord& base = alphabet[pick / 2];
    if (pick % 2 == 0) {
      letters.insert(letters.end(), base.letters().begin(), base.letters().end());
    } else {
      for (auto it = base.letters().rbegin(); it != base.letters().rend(); ++it)
        letters.push_back(-*it);
    }
  }
  return BraidWord(strands, std::move(letters));
}

BraidWord random_word(int strands, std::size_t length, std::span<const BraidWord> alphabet,
                      std::uint64_t seed) {
  Rng rng(seed);
  return random_word(strands, length, alphabet, rng);
}

}  // namespace braidcg
