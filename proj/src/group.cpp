#include "braidcg/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace braidcg {

namespace {

void require_shape(const ModularMatrix& m, std::uint64_t modulus, std::size_t dim) {
  if (m.modulus() != modulus || m.dim() != dim)
    throw Error("matrix shape (m=" + std::to_string(m.modulus()) + ", d=" +
                std::to_string(m.dim()) + ") does not match group (m=" + std::to_string(modulus) +
                ", d=" + std::to_string(dim) + ")");
}

ModularMatrix inverse_by_order(const ModularMatrix& m) {
  const std::uint64_t ord = element_order(m);
  ModularMatrix inv = ModularMatrix::identity(m.modulus(), m.dim());
  for (std::uint64_t k = 1; k < ord; ++k) inv = inv * m;
  return inv;
}

ModularMatrix commutator(const ModularMatrix& a, const ModularMatrix& b) {
  return inverse_by_order(a) * inverse_by_order(b) * a * b;
}

}  // namespace

FiniteMatrixGroup::FiniteMatrixGroup(std::uint64_t modulus, std::size_t dim,
                                     std::vector<ModularMatrix> generators,
                                     std::vector<ModularMatrix> elements)
    : modulus_(modulus), dim_(dim), generators_(std::move(generators)) {
  std::vector<std::pair<std::string, ModularMatrix>> keyed;
  keyed.reserve(elements.size());
  for (auto& e : elements) {
    require_shape(e, modulus_, dim_);
    keyed.emplace_back(e.canonical_key(), std::move(e));
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  elements_.reserve(keyed.size());
  index_.reserve(keyed.size());
  for (auto& [key, e] : keyed) {
    if (!index_.emplace(key, elements_.size()).second) throw Error("duplicate group element");
    elements_.push_back(std::move(e));
  }
}

std::optional<std::size_t> FiniteMatrixGroup::index_of(const ModularMatrix& m) const {
  require_shape(m, modulus_, dim_);
  auto it = index_.find(m.canonical_key());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool FiniteMatrixGroup::contains(const ModularMatrix& m) const { return index_of(m).has_value(); }

bool contains(const FiniteMatrixGroup& group, const ModularMatrix& m) { return group.contains(m); }

std::uint64_t element_order(const ModularMatrix& m) {
  if (!m.is_invertible()) throw Error("matrix is not invertible");
  std::uint64_t k = 1;
  ModularMatrix power = m;
  while (!power.is_identity()) {
    power = power * m;
    ++k;
  }
  return k;
}

FiniteMatrixGroup close(std::uint64_t modulus, std::size_t dim,
                        std::span<const ModularMatrix> generators, std::size_t cap) {
  std::vector<ModularMatrix> steps;
  for (const auto& g : generators) {
    require_shape(g, modulus, dim);
    if (!g.is_invertible()) throw Error("generator is not invertible mod " + std::to_string(modulus));
  }
  for (const auto& g : generators) steps.push_back(g);
  for (const auto& g : generators) steps.push_back(inverse_by_order(g));

  std::vector<ModularMatrix> elements{ModularMatrix::identity(modulus, dim)};
  std::unordered_map<std::string, std::size_t> seen;
  seen.emplace(elements.front().canonical_key(), 0);
  if (cap < 1) throw GroupTooLarge(cap);
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& s : steps) {
      ModularMatrix next = elements[head] * s;
      if (seen.emplace(next.canonical_key(), elements.size()).second) {
        if (elements.size() >= cap) throw GroupTooLarge(cap);
        elements.push_back(std::move(next));
      }
    }
  }
  return FiniteMatrixGroup(modulus, dim, std::vector<ModularMatrix>(generators.begin(), generators.end()),
                           std::move(elements));
}

FiniteMatrixGroup close(std::span<const ModularMatrix> generators, std::size_t cap) {
  if (generators.empty()) throw Error("cannot infer the group shape from no generators");
  return close(generators.front().modulus(), generators.front().dim(), generators, cap);
}

FiniteMatrixGroup subgroup(const FiniteMatrixGroup& ambient, std::span<const ModularMatrix> gens,
                           std::size_t cap) {
  return close(ambient.modulus(), ambient.dim(), gens, cap);
}

StructureInvariants structure_invariants(const FiniteMatrixGroup& group) {
  StructureInvariants inv;
  inv.order = group.order();
  const auto& gens = group.generators();

  for (std::size_t a = 0; a < gens.size() && inv.abelian; ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b)
      if (!(gens[a] * gens[b] == gens[b] * gens[a])) {
        inv.abelian = false;
        break;
      }

  for (const auto& e : group.elements()) {
    const std::uint64_t ord = element_order(e);
    ++inv.order_histogram[ord];
    inv.exponent = std::lcm(inv.exponent, ord);
  }

  inv.center_order = 0;
  for (const auto& e : group.elements()) {
    bool central = true;
    for (const auto& g : gens)
      if (!(e * g == g * e)) {
        central = false;
        break;
      }
    if (central) ++inv.center_order;
  }

  // [G,G] is the normal closure of the commutators of the generators.
  std::vector<ModularMatrix> normal_gens;
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      ModularMatrix c = commutator(gens[a], gens[b]);
      if (!c.is_identity()) normal_gens.push_back(std::move(c));
    }
  FiniteMatrixGroup derived = close(group.modulus(), group.dim(), normal_gens);
  std::vector<ModularMatrix> gen_inverses;
  for (const auto& g : gens) gen_inverses.push_back(inverse_by_order(g));
  for (std::size_t k = 0; k < normal_gens.size(); ++k) {
    for (std::size_t t = 0; t < gens.size(); ++t) {
      ModularMatrix conj = gen_inverses[t] * normal_gens[k] * gens[t];
      if (!derived.contains(conj)) {
        normal_gens.push_back(std::move(conj));
        derived = close(group.modulus(), group.dim(), normal_gens);
      }
    }
  }
  inv.commutator_order = derived.order();
  return inv;
}

nlohmann::json to_json(const StructureInvariants& inv) {
  nlohmann::json histogram = nlohmann::json::array();
  for (auto [ord, count] : inv.order_histogram) histogram.push_back({ord, count});
  return {{"order", inv.order},
          {"abelian", inv.abelian},
          {"exponent", inv.exponent},
          {"order_histogram", std::move(histogram)},
          {"center_order", inv.center_order},
          {"commutator_order", inv.commutator_order}};
}

std::optional<FiniteMatrixGroup> complement_search(const FiniteMatrixGroup& group,
                                                   const FiniteMatrixGroup& kernel,
                                                   std::size_t q) {
  if (kernel.modulus() != group.modulus() || kernel.dim() != group.dim())
    throw Error("kernel and group have different shapes");
  for (const auto& k : kernel.elements())
    if (!group.contains(k)) throw Error("kernel is not contained in the group");
  if (group.order() != q * kernel.order())
    throw Error("|G| = " + std::to_string(group.order()) + " is not q*|K| = " +
                std::to_string(q) + "*" + std::to_string(kernel.order()));

  if (q == 1) return close(group.modulus(), group.dim(), {});
  if (kernel.order() == 1) return group;
  if (q > 6) throw ProbeNotExhaustive();

  // Candidate generators: outside K (apart from 1) with order dividing q.
  std::vector<const ModularMatrix*> candidates;
  for (const auto& e : group.elements()) {
    if (e.is_identity()) continue;
    if (kernel.contains(e)) continue;
    if (q % element_order(e) != 0) continue;
    candidates.push_back(&e);
  }
  for (std::size_t a = 0; a < candidates.size(); ++a) {
    for (std::size_t b = a; b < candidates.size(); ++b) {
      const std::vector<ModularMatrix> gens{*candidates[a], *candidates[b]};
      std::optional<FiniteMatrixGroup> h;
      try {
        h = subgroup(group, gens, q);
      } catch (const GroupTooLarge&) {
        continue;
      }
      if (h->order() != q) continue;
      const bool meets_trivially = std::none_of(
          h->elements().begin(), h->elements().end(),
          [&](const ModularMatrix& x) { return !x.is_identity() && kernel.contains(x); });
      if (meets_trivially) return h;
    }
  }
  return std::nullopt;
}

std::optional<std::vector<ModularMatrix>> find_isomorphism(const FiniteMatrixGroup& from,
                                                           const FiniteMatrixGroup& to) {
  if (from.order() > kIsomorphismSearchLimit || to.order() > kIsomorphismSearchLimit)
    throw Error("isomorphism search is limited to groups of order <= " +
                std::to_string(kIsomorphismSearchLimit));
  if (from.order() != to.order()) return std::nullopt;
  const auto& gens = from.generators();
  const std::size_t n = from.order();

  // Spanning tree over `from`: every element is parent * gens[via].
  std::vector<std::size_t> parent(n, n), via(n, 0), bfs_order;
  const std::size_t root = *from.index_of(from.identity());
  parent[root] = root;
  bfs_order.push_back(root);
  for (std::size_t h = 0; h < bfs_order.size(); ++h) {
    const std::size_t x = bfs_order[h];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const std::size_t y = *from.index_of(from.elements()[x] * gens[k]);
      if (parent[y] == n) {
        parent[y] = x;
        via[y] = k;
        bfs_order.push_back(y);
      }
    }
  }
  if (bfs_order.size() != n) throw Error("group generators do not generate the element set");

  std::vector<std::vector<const ModularMatrix*>> candidates(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const std::uint64_t ord = element_order(gens[k]);
    for (const auto& e : to.elements())
      if (element_order(e) == ord) candidates[k].push_back(&e);
    if (candidates[k].empty()) return std::nullopt;
  }

  std::vector<std::size_t> choice(gens.size(), 0);
  std::vector<ModularMatrix> images(gens.size());
  std::vector<ModularMatrix> image_of(n);
  while (true) {
    for (std::size_t k = 0; k < gens.size(); ++k) images[k] = *candidates[k][choice[k]];

    image_of[root] = to.identity();
    for (std::size_t h = 1; h < bfs_order.size(); ++h) {
      const std::size_t y = bfs_order[h];
      image_of[y] = image_of[parent[y]] * images[via[y]];
    }
    bool ok = true;
    std::set<std::string> hit;
    for (std::size_t x = 0; x < n && ok; ++x) {
      if (!hit.insert(image_of[x].canonical_key()).second) ok = false;
      for (std::size_t k = 0; k < gens.size() && ok; ++k) {
        const std::size_t y = *from.index_of(from.elements()[x] * gens[k]);
        if (!(image_of[y] == image_of[x] * images[k])) ok = false;
      }
    }
    if (ok) return images;

    std::size_t k = 0;
    while (k < gens.size() && ++choice[k] == candidates[k].size()) choice[k++] = 0;
    if (k == gens.size()) return std::nullopt;
  }
}

}  // namespace braidcg
