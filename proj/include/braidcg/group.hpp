#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "braidcg/burau.hpp"
#include "json.hpp"

namespace braidcg {

inline constexpr std::size_t kDefaultGroupCap = 10'000'000;

/// Raised when a closure would exceed its element cap.
class GroupTooLarge : public Error {
 public:
  explicit GroupTooLarge(std::size_t cap)
      : Error("group exceeds the cap of " + std::to_string(cap) + " elements"), cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

/// Raised when the complement probe cannot be exhaustive for the request.
class ProbeNotExhaustive : public Error {
 public:
  ProbeNotExhaustive() : Error("probe not exhaustive") {}
};

/// Enumerated subgroup of GL(d, Z/mZ). Elements are sorted by canonical key.
class FiniteMatrixGroup {
 public:
  FiniteMatrixGroup(std::uint64_t modulus, std::size_t dim, std::vector<ModularMatrix> generators,
                    std::vector<ModularMatrix> elements);

  std::uint64_t modulus() const noexcept { return modulus_; }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<ModularMatrix>& elements() const noexcept { return elements_; }
  const std::vector<ModularMatrix>& generators() const noexcept { return generators_; }

  /// Throws on a modulus or dimension mismatch.
  bool contains(const ModularMatrix& m) const;
  std::optional<std::size_t> index_of(const ModularMatrix& m) const;
  ModularMatrix identity() const { return ModularMatrix::identity(modulus_, dim_); }

 private:
  std::uint64_t modulus_;
  std::size_t dim_;
  std::vector<ModularMatrix> generators_;
  std::vector<ModularMatrix> elements_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Breadth-first closure under right multiplication by the generators and
/// their inverses.
FiniteMatrixGroup close(std::uint64_t modulus, std::size_t dim,
                        std::span<const ModularMatrix> generators,
                        std::size_t cap = kDefaultGroupCap);
/// Shape taken from the generators, which must be nonempty.
FiniteMatrixGroup close(std::span<const ModularMatrix> generators,
                        std::size_t cap = kDefaultGroupCap);

/// Multiplicative order of an invertible matrix.
std::uint64_t element_order(const ModularMatrix& m);

/// Isomorphism-class fingerprint of a finite group.
struct StructureInvariants {
  std::uint64_t order = 0;
  bool abelian = true;
  std::uint64_t exponent = 1;
  std::map<std::uint64_t, std::uint64_t> order_histogram;
  std::uint64_t center_order = 0;
  std::uint64_t commutator_order = 0;

  bool operator==(const StructureInvariants&) const = default;
};

StructureInvariants structure_invariants(const FiniteMatrixGroup& group);
nlohmann::json to_json(const StructureInvariants& inv);

bool contains(const FiniteMatrixGroup& group, const ModularMatrix& m);

/// Subgroup generated by the given elements inside the same ambient shape.
FiniteMatrixGroup subgroup(const FiniteMatrixGroup& ambient, std::span<const ModularMatrix> gens,
                           std::size_t cap = kDefaultGroupCap);

/// Looks for H <= G with |H| = q and H ∩ K = {1}. Complements are searched
/// among subgroups generated by at most two elements, which is exhaustive
/// only for q <= 6; larger q throws ProbeNotExhaustive unless K is trivial.
std::optional<FiniteMatrixGroup> complement_search(const FiniteMatrixGroup& group,
                                                   const FiniteMatrixGroup& kernel,
                                                   std::size_t q);

inline constexpr std::size_t kIsomorphismSearchLimit = 100;

/// Images of `from.generators()` in `to` defining an isomorphism, if one
/// exists. Both groups must have order at most kIsomorphismSearchLimit.
std::optional<std::vector<ModularMatrix>> find_isomorphism(const FiniteMatrixGroup& from,
                                                           const FiniteMatrixGroup& to);

/// On-disk store of enumerated groups keyed by (modulus, dimension,
/// generator keys). Files start with a versioned header followed by the
/// sorted canonical element keys in hex.
class GroupCache {
 public:
  static constexpr int kFormatVersion = 1;

  explicit GroupCache(std::filesystem::path directory);

  const std::filesystem::path& directory() const noexcept { return directory_; }
  std::filesystem::path path_for(std::uint64_t modulus, std::size_t dim,
                                 std::span<const ModularMatrix> generators) const;

  std::optional<FiniteMatrixGroup> load(std::uint64_t modulus, std::size_t dim,
                                        std::span<const ModularMatrix> generators) const;
  void store(const FiniteMatrixGroup& group) const;

  /// Cached closure; computes and stores on a miss or an unreadable entry.
  FiniteMatrixGroup close(std::uint64_t modulus, std::size_t dim,
                          std::span<const ModularMatrix> generators,
                          std::size_t cap = kDefaultGroupCap) const;

 private:
  std::filesystem::path directory_;
};

}  // namespace braidcg
