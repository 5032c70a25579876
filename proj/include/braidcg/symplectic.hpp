#pragma once

#include <optional>
#include <vector>

#include "braidcg/burau.hpp"

namespace braidcg {

/// Integral basis of { J : G^T J G = J for every generator image G } in
/// dimension n-1. Each basis element has content 1 and a positive first
/// nonzero entry (row-major).
struct FormSpace {
  std::size_t dim = 0;
  std::vector<IntegerMatrix> basis;
};

/// Solves the invariance system for sigma_1..sigma_{n-1} by exact rational
/// elimination.
FormSpace invariant_forms(int strands);

/// J^T = -J, zero diagonal and det(J) != 0.
bool is_alternating_nondegenerate(const IntegerMatrix& form);

/// True iff G^T J G == J exactly.
bool preserves_form(const IntegerMatrix& g, const IntegerMatrix& form);

/// A nondegenerate alternating element of the space, if one is found among
/// the basis elements and small integer combinations of them.
std::optional<IntegerMatrix> find_symplectic_form(const FormSpace& space);

}  // namespace braidcg
