#include "braidcg/burau.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>

namespace braidcg {

namespace {

using u128 = unsigned __int128;

// Every generator image is Id + s*N with N^2 = 0 and N supported in a single
// column. Right-multiplying by it is one column operation.
struct ColumnAction {
  std::size_t column = 0;
  std::vector<std::pair<std::size_t, int>> terms;  // (row of N, entry)
};

ColumnAction column_action(int strands, int i) {
  if (strands < 2) throw Error("Burau representation needs at least 2 strands");
  if (i < 1 || i > strands - 1)
    throw Error("generator index " + std::to_string(i) + " out of range for " +
                std::to_string(strands) + " strands");
  const std::size_t d = static_cast<std::size_t>(strands - 1);
  ColumnAction action;
  if (d == 1) return action;  // B_2: rho(sigma_1) = (1)
  if (i == 1) {
    action.column = 0;
    action.terms = {{1, 1}};
  } else if (i == strands - 1) {
    action.column = d - 1;
    action.terms = {{d - 2, -1}};
  } else {
    const auto c = static_cast<std::size_t>(i - 1);
    action.column = c;
    action.terms = {{c - 1, -1}, {c + 1, 1}};
  }
  return action;
}

std::size_t residue_width(std::uint64_t modulus) {
  std::size_t width = 1;
  for (std::uint64_t top = modulus - 1; top > 0xff; top >>= 8) ++width;
  return width;
}

void require_modulus(std::uint64_t modulus) {
  if (modulus < 2) throw Error("modulus must be at least 2");
  if (modulus > ModularMatrix::kMaxModulus) throw Error("modulus too large");
}

std::uint64_t reduce_signed(long long value, std::uint64_t modulus) {
  const auto m = static_cast<long long>(modulus);
  long long r = value % m;
  if (r < 0) r += m;
  return static_cast<std::uint64_t>(r);
}

}  // namespace

// ---------------------------------------------------------------- IntegerMatrix

IntegerMatrix::IntegerMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

IntegerMatrix::IntegerMatrix(std::size_t dim, std::vector<Integer> row_major)
    : dim_(dim), entries_(std::move(row_major)) {
  if (entries_.size() != dim_ * dim_) throw Error("matrix entry count does not match dimension");
}

IntegerMatrix IntegerMatrix::identity(std::size_t dim) {
  IntegerMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
  IntegerMatrix m(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.size()) throw Error("matrix rows must be square");
    for (std::size_t c = 0; c < rows.size(); ++c) m(r, c) = Integer(static_cast<long>(rows[r][c]));
  }
  return m;
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix t(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool IntegerMatrix::is_identity() const {
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c)
      if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

bool IntegerMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Integer& x) { return x == 0; });
}

Integer IntegerMatrix::determinant() const {
  if (dim_ == 0) return 1;
  std::vector<Integer> a = entries_;
  const std::size_t n = dim_;
  auto at = [&](std::size_t r, std::size_t c) -> Integer& { return a[r * n + c]; };
  Integer previous = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && at(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(at(k, c), at(swap_row, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        at(i, j) = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        mpz_divexact(at(i, j).get_mpz_t(), at(i, j).get_mpz_t(), previous.get_mpz_t());
      }
    }
    previous = at(k, k);
  }
  return sign * at(n - 1, n - 1);
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.dim_ != b.dim_) throw Error("matrix dimension mismatch");
  const std::size_t n = a.dim_;
  IntegerMatrix out(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) {
      const Integer& x = a(r, k);
      if (x == 0) continue;
      for (std::size_t c = 0; c < n; ++c) out(r, c) += x * b(k, c);
    }
  return out;
}

IntegerMatrix operator-(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.dim_ != b.dim_) throw Error("matrix dimension mismatch");
  IntegerMatrix out(a.dim_);
  for (std::size_t i = 0; i < a.entries_.size(); ++i) out.entries_[i] = a.entries_[i] - b.entries_[i];
  return out;
}

bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) {
  return a.dim_ == b.dim_ && a.entries_ == b.entries_;
}

// ---------------------------------------------------------------- ModularMatrix

ModularMatrix::ModularMatrix(std::uint64_t modulus, std::size_t dim)
    : modulus_(modulus), dim_(dim), entries_(dim * dim, 0) {
  require_modulus(modulus);
}

ModularMatrix::ModularMatrix(std::uint64_t modulus, std::size_t dim,
                             const std::vector<long long>& row_major)
    : ModularMatrix(modulus, dim) {
  if (row_major.size() != dim * dim) throw Error("matrix entry count does not match dimension");
  for (std::size_t i = 0; i < row_major.size(); ++i)
    entries_[i] = reduce_signed(row_major[i], modulus);
}

ModularMatrix ModularMatrix::identity(std::uint64_t modulus, std::size_t dim) {
  ModularMatrix m(modulus, dim);
  for (std::size_t i = 0; i < dim; ++i) m.entries_[i * dim + i] = 1;
  return m;
}

bool ModularMatrix::is_identity() const noexcept {
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c)
      if (entries_[r * dim_ + c] != (r == c ? 1u : 0u)) return false;
  return true;
}

ModularMatrix::Residue ModularMatrix::determinant() const {
  std::vector<Integer> lifted;
  lifted.reserve(entries_.size());
  for (Residue x : entries_) lifted.emplace_back(static_cast<unsigned long>(x));
  Integer det = IntegerMatrix(dim_, std::move(lifted)).determinant();
  Integer m(static_cast<unsigned long>(modulus_));
  Integer r = det % m;
  if (r < 0) r += m;
  return r.get_ui();
}

bool ModularMatrix::is_invertible() const {
  Integer det(static_cast<unsigned long>(determinant()));
  Integer g;
  Integer m(static_cast<unsigned long>(modulus_));
  mpz_gcd(g.get_mpz_t(), det.get_mpz_t(), m.get_mpz_t());
  return g == 1;
}

std::string ModularMatrix::canonical_key() const {
  const std::size_t width = residue_width(modulus_);
  std::string key;
  key.reserve(12 + width * entries_.size());
  for (int shift = 56; shift >= 0; shift -= 8) key.push_back(static_cast<char>((modulus_ >> shift) & 0xff));
  const auto d = static_cast<std::uint32_t>(dim_);
  for (int shift = 24; shift >= 0; shift -= 8) key.push_back(static_cast<char>((d >> shift) & 0xff));
  for (Residue x : entries_)
    for (int b = static_cast<int>(width) - 1; b >= 0; --b)
      key.push_back(static_cast<char>((x >> (8 * b)) & 0xff));
  return key;
}

ModularMatrix ModularMatrix::from_canonical_key(const std::string& key) {
  if (key.size() < 12) throw Error("canonical key too short");
  auto byte = [&](std::size_t i) { return static_cast<std::uint64_t>(static_cast<unsigned char>(key[i])); };
  std::uint64_t modulus = 0;
  for (std::size_t i = 0; i < 8; ++i) modulus = (modulus << 8) | byte(i);
  std::uint64_t dim = 0;
  for (std::size_t i = 8; i < 12; ++i) dim = (dim << 8) | byte(i);
  ModularMatrix m(modulus, dim);
  const std::size_t width = residue_width(modulus);
  if (key.size() != 12 + width * dim * dim) throw Error("canonical key has wrong length");
  std::size_t pos = 12;
  for (auto& x : m.entries_) {
    Residue v = 0;
    for (std::size_t b = 0; b < width; ++b) v = (v << 8) | byte(pos++);
    if (v >= modulus) throw Error("canonical key residue out of range");
    x = v;
  }
  return m;
}

ModularMatrix operator*(const ModularMatrix& a, const ModularMatrix& b) {
  if (a.modulus_ != b.modulus_ || a.dim_ != b.dim_) throw Error("modular matrix shape mismatch");
  const std::size_t n = a.dim_;
  const std::uint64_t m = a.modulus_;
  ModularMatrix out(m, n);
  const u128 bound = static_cast<u128>(m - 1) * (m - 1) * n;
  if (bound <= UINT64_MAX) {
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < n; ++k) acc += a.entries_[r * n + k] * b.entries_[k * n + c];
        out.entries_[r * n + c] = acc % m;
      }
  } else {
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < n; ++k) {
          const u128 prod = static_cast<u128>(a.entries_[r * n + k]) * b.entries_[k * n + c];
          acc = static_cast<std::uint64_t>((static_cast<u128>(acc) + prod % m) % m);
        }
        out.entries_[r * n + c] = acc;
      }
  }
  return out;
}

// -------------------------------------------------------------- representation

CongruenceLevel::CongruenceLevel(long long level) {
  if (level < 2)
    throw Error("congruence level must be at least 2, got " + std::to_string(level));
  if (static_cast<std::uint64_t>(level) > ModularMatrix::kMaxModulus)
    throw Error("congruence level too large");
  level_ = static_cast<std::uint64_t>(level);
}

IntegerMatrix generator_matrix(int strands, int i, int sign) {
  if (sign != 1 && sign != -1) throw Error("generator sign must be +1 or -1");
  const ColumnAction action = column_action(strands, i);
  IntegerMatrix m = IntegerMatrix::identity(static_cast<std::size_t>(strands - 1));
  for (auto [row, entry] : action.terms) m(row, action.column) = sign * entry;
  return m;
}

IntegerMatrix burau_int(const BraidWord& word, std::size_t max_letters) {
  if (word.size() > max_letters)
    throw Error("word of length " + std::to_string(word.size()) + " exceeds the cap of " +
                std::to_string(max_letters) + " letters");
  const int n = word.strands();
  const std::size_t d = static_cast<std::size_t>(n - 1);
  std::vector<ColumnAction> actions;
  for (int i = 1; i < n; ++i) actions.push_back(column_action(n, i));

  IntegerMatrix m = IntegerMatrix::identity(d);
  Integer update;
  for (int letter : word.letters()) {
    const ColumnAction& act = actions[std::abs(letter) - 1];
    const int sign = letter > 0 ? 1 : -1;
    for (std::size_t r = 0; r < d; ++r) {
      update = 0;
      for (auto [row, entry] : act.terms) {
        if (entry * sign > 0)
          update += m(r, row);
        else
          update -= m(r, row);
      }
      m(r, act.column) += update;
    }
  }
  return m;
}

ModularMatrix burau_mod(const BraidWord& word, std::uint64_t modulus) {
  require_modulus(modulus);
  const int n = word.strands();
  const std::size_t d = static_cast<std::size_t>(n - 1);
  std::vector<ColumnAction> actions;
  for (int i = 1; i < n; ++i) actions.push_back(column_action(n, i));

  // Residues stay below 2^62, so one addition never overflows.
  std::vector<std::uint64_t> e(d * d, 0);
  for (std::size_t i = 0; i < d; ++i) e[i * d + i] = 1;
  for (int letter : word.letters()) {
    const ColumnAction& act = actions[std::abs(letter) - 1];
    const int sign = letter > 0 ? 1 : -1;
    for (std::size_t r = 0; r < d; ++r) {
      std::uint64_t value = e[r * d + act.column];
      for (auto [row, entry] : act.terms) {
        const std::uint64_t x = e[r * d + row];
        if (entry * sign > 0) {
          value += x;
          if (value >= modulus) value -= modulus;
        } else {
          value = value >= x ? value - x : value + modulus - x;
        }
      }
      e[r * d + act.column] = value;
    }
  }
  std::vector<long long> signed_entries(e.begin(), e.end());
  return ModularMatrix(modulus, d, signed_entries);
}

ModularMatrix reduce_mod(const IntegerMatrix& matrix, std::uint64_t modulus) {
  require_modulus(modulus);
  const std::size_t d = matrix.dim();
  Integer m(static_cast<unsigned long>(modulus));
  std::vector<long long> residues(d * d);
  for (std::size_t i = 0; i < d * d; ++i) {
    Integer r = matrix.entries()[i] % m;
    if (r < 0) r += m;
    residues[i] = static_cast<long long>(r.get_ui());
  }
  return ModularMatrix(modulus, d, residues);
}

bool is_congruence_member(const BraidWord& word, CongruenceLevel level) {
  return burau_mod(word, level.value()).is_identity();
}

// ------------------------------------------------------------------------ JSON

nlohmann::json to_json(const IntegerMatrix& matrix) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < matrix.dim(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < matrix.dim(); ++c) row.push_back(matrix(r, c).get_str());
    rows.push_back(std::move(row));
  }
  return {{"m", nullptr}, {"d", matrix.dim()}, {"rows", std::move(rows)}};
}

nlohmann::json to_json(const ModularMatrix& matrix) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < matrix.dim(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < matrix.dim(); ++c) row.push_back(matrix(r, c));
    rows.push_back(std::move(row));
  }
  return {{"m", matrix.modulus()}, {"d", matrix.dim()}, {"rows", std::move(rows)}};
}

IntegerMatrix integer_matrix_from_json(const nlohmann::json& j) {
  if (!j.at("m").is_null()) throw Error("expected an integer matrix (m = null)");
  const auto d = j.at("d").get<std::size_t>();
  const auto& rows = j.at("rows");
  if (rows.size() != d) throw Error("row count does not match d");
  IntegerMatrix m(d);
  for (std::size_t r = 0; r < d; ++r) {
    if (rows[r].size() != d) throw Error("column count does not match d");
    for (std::size_t c = 0; c < d; ++c) {
      const auto& cell = rows[r][c];
      if (cell.is_string())
        m(r, c) = Integer(cell.get<std::string>());
      else
        m(r, c) = Integer(static_cast<long>(cell.get<long long>()));
    }
  }
  return m;
}

ModularMatrix modular_matrix_from_json(const nlohmann::json& j) {
  const auto modulus = j.at("m").get<std::uint64_t>();
  const auto d = j.at("d").get<std::size_t>();
  const auto& rows = j.at("rows");
  if (rows.size() != d) throw Error("row count does not match d");
  std::vector<long long> entries;
  for (const auto& row : rows) {
    if (row.size() != d) throw Error("column count does not match d");
    for (const auto& cell : row) entries.push_back(cell.get<long long>());
  }
  return ModularMatrix(modulus, d, entries);
}

}  // namespace braidcg
