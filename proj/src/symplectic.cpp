#include "braidcg/symplectic.hpp"

#include <gmpxx.h>

#include <functional>

namespace braidcg {

namespace {

using Rational = mpq_class;

// Reduced row echelon form in place; returns the pivot column of each
// nonzero row.
std::vector<std::size_t> row_reduce(std::vector<std::vector<Rational>>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pick = r;
    while (pick < rows.size() && rows[pick][c] == 0) ++pick;
    if (pick == rows.size()) continue;
    std::swap(rows[r], rows[pick]);
    const Rational lead = rows[r][c];
    for (auto& x : rows[r]) x /= lead;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

IntegerMatrix to_primitive_integer(const std::vector<Rational>& v, std::size_t dim) {
  Integer denom_lcm = 1;
  for (const auto& x : v) mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Integer> entries;
  entries.reserve(v.size());
  for (const auto& x : v) entries.push_back(x.get_num() * (denom_lcm / x.get_den()));
  Integer content = 0;
  for (const auto& x : entries) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
  if (content != 0)
    for (auto& x : entries) x /= content;
  for (const auto& x : entries) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : entries) y = -y;
    break;
  }
  return IntegerMatrix(dim, std::move(entries));
}

}  // namespace

bool preserves_form(const IntegerMatrix& g, const IntegerMatrix& form) {
  return g.transpose() * form * g == form;
}

FormSpace invariant_forms(int strands) {
  if (strands < 3) throw Error("invariant forms need at least 3 strands");
  const auto d = static_cast<std::size_t>(strands - 1);
  const std::size_t unknowns = d * d;

  // Unknown a*d+b is J(a,b). Equation (p,q) for generator G reads
  // sum_{a,b} (G(a,p) G(b,q) - [a==p][b==q]) J(a,b) = 0.
  std::vector<std::vector<Rational>> rows;
  for (int i = 1; i < strands; ++i) {
    const IntegerMatrix g = generator_matrix(strands, i, 1);
    for (std::size_t p = 0; p < d; ++p)
      for (std::size_t q = 0; q < d; ++q) {
        std::vector<Rational> row(unknowns);
        bool nonzero = false;
        for (std::size_t a = 0; a < d; ++a)
          for (std::size_t b = 0; b < d; ++b) {
            Integer coeff = g(a, p) * g(b, q);
            if (a == p && b == q) coeff -= 1;
            if (coeff != 0) nonzero = true;
            row[a * d + b] = Rational(coeff);
          }
        if (nonzero) rows.push_back(std::move(row));
      }
  }

  const auto pivots = row_reduce(rows, unknowns);
  std::vector<bool> is_pivot(unknowns, false);
  for (auto c : pivots) is_pivot[c] = true;

  FormSpace space;
  space.dim = d;
  for (std::size_t free = 0; free < unknowns; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(unknowns);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][free];
    space.basis.push_back(to_primitive_integer(v, d));
  }
  return space;
}

bool is_alternating_nondegenerate(const IntegerMatrix& form) {
  const std::size_t d = form.dim();
  if (d == 0) return false;
  for (std::size_t r = 0; r < d; ++r) {
    if (form(r, r) != 0) return false;
    for (std::size_t c = r + 1; c < d; ++c)
      if (form(r, c) != -form(c, r)) return false;
  }
  return form.determinant() != 0;
}

std::optional<IntegerMatrix> find_symplectic_form(const FormSpace& space) {
  auto check = [](const IntegerMatrix& j) -> std::optional<IntegerMatrix> {
    if (is_alternating_nondegenerate(j)) return j;
    const IntegerMatrix skew = j - j.transpose();
    if (is_alternating_nondegenerate(skew)) return skew;
    return std::nullopt;
  };
  for (const auto& j : space.basis)
    if (auto found = check(j)) return found;

  // Small combinations when the space has several generators.
  const std::size_t k = space.basis.size();
  if (k < 2 || k > 4) return std::nullopt;
  std::vector<long> coeffs(k, -2);
  std::function<std::optional<IntegerMatrix>(std::size_t)> search =
      [&](std::size_t pos) -> std::optional<IntegerMatrix> {
    if (pos == k) {
      IntegerMatrix sum(space.dim);
      for (std::size_t t = 0; t < k; ++t)
        for (std::size_t r = 0; r < space.dim; ++r)
          for (std::size_t c = 0; c < space.dim; ++c) sum(r, c) += coeffs[t] * space.basis[t](r, c);
      if (sum.is_zero()) return std::nullopt;
      return check(sum);
    }
    for (long x = -2; x <= 2; ++x) {
      coeffs[pos] = x;
      if (auto found = search(pos + 1)) return found;
    }
    return std::nullopt;
  };
  return search(0);
}

}  // namespace braidcg
