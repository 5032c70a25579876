#include <fstream>
#include <sstream>

#include "braidcg/group.hpp"

namespace braidcg {

namespace {

constexpr const char* kMagic = "braidcg-group-cache";

std::string to_hex(const std::string& bytes) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 0xf]);
  }
  return out;
}

std::string from_hex(const std::string& hex) {
  if (hex.size() % 2 != 0) throw Error("odd-length hex string in cache");
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    throw Error("bad hex digit in cache");
  };
  std::string out;
  out.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2)
    out.push_back(static_cast<char>(nibble(hex[i]) * 16 + nibble(hex[i + 1])));
  return out;
}

// 64-bit FNV-1a; stable across platforms, unlike std::hash.
std::uint64_t fnv1a(const std::string& data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string lookup_key(std::uint64_t modulus, std::size_t dim,
                       std::span<const ModularMatrix> generators) {
  std::string key = std::to_string(modulus) + ":" + std::to_string(dim);
  for (const auto& g : generators) key += ":" + to_hex(g.canonical_key());
  return key;
}

}  // namespace

GroupCache::GroupCache(std::filesystem::path directory) : directory_(std::move(directory)) {}

std::filesystem::path GroupCache::path_for(std::uint64_t modulus, std::size_t dim,
                                           std::span<const ModularMatrix> generators) const {
  std::ostringstream name;
  name << "group-m" << modulus << "-d" << dim << "-" << std::hex
       << fnv1a(lookup_key(modulus, dim, generators)) << ".txt";
  return directory_ / name.str();
}

std::optional<FiniteMatrixGroup> GroupCache::load(std::uint64_t modulus, std::size_t dim,
                                                  std::span<const ModularMatrix> generators) const {
  std::ifstream in(path_for(modulus, dim, generators));
  if (!in) return std::nullopt;
  try {
    std::string magic, word;
    int version = 0;
    std::uint64_t file_modulus = 0;
    std::size_t file_dim = 0, gen_count = 0, element_count = 0;
    if (!(in >> magic >> version) || magic != kMagic || version != kFormatVersion) return std::nullopt;
    if (!(in >> word >> file_modulus) || word != "modulus" || file_modulus != modulus) return std::nullopt;
    if (!(in >> word >> file_dim) || word != "dimension" || file_dim != dim) return std::nullopt;
    if (!(in >> word >> gen_count) || word != "generators" || gen_count != generators.size())
      return std::nullopt;
    for (const auto& g : generators) {
      if (!(in >> word) || from_hex(word) != g.canonical_key()) return std::nullopt;
    }
    if (!(in >> word >> element_count) || word != "elements") return std::nullopt;
    std::vector<ModularMatrix> elements;
    elements.reserve(element_count);
    for (std::size_t i = 0; i < element_count; ++i) {
      if (!(in >> word)) return std::nullopt;
      elements.push_back(ModularMatrix::from_canonical_key(from_hex(word)));
    }
    return FiniteMatrixGroup(modulus, dim,
                             std::vector<ModularMatrix>(generators.begin(), generators.end()),
                             std::move(elements));
  } catch (const Error&) {
    return std::nullopt;
  }
}

void GroupCache::store(const FiniteMatrixGroup& group) const {
  std::filesystem::create_directories(directory_);
  const auto target = path_for(group.modulus(), group.dim(), group.generators());
  auto tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error("cannot write cache file " + tmp.string());
    out << kMagic << ' ' << kFormatVersion << '\n';
    out << "modulus " << group.modulus() << '\n';
    out << "dimension " << group.dim() << '\n';
    out << "generators " << group.generators().size() << '\n';
    for (const auto& g : group.generators()) out << to_hex(g.canonical_key()) << '\n';
    out << "elements " << group.order() << '\n';
    for (const auto& e : group.elements()) out << to_hex(e.canonical_key()) << '\n';
  }
  std::filesystem::rename(tmp, target);
}

FiniteMatrixGroup GroupCache::close(std::uint64_t modulus, std::size_t dim,
                                    std::span<const ModularMatrix> generators,
                                    std::size_t cap) const {
  if (auto cached = load(modulus, dim, generators); cached && cached->order() <= cap) return *cached;
  FiniteMatrixGroup group = braidcg::close(modulus, dim, generators, cap);
  store(group);
  return group;
}

}  // namespace braidcg
