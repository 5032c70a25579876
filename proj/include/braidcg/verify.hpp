#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "braidcg/group.hpp"
#include "json.hpp"

namespace braidcg {

inline constexpr const char* kToolkitVersion = "0.1.0";

struct Check {
  std::string name;
  nlohmann::json expected;
  nlohmann::json observed;
  bool pass = false;
};

/// Outcome of one harness command. A check passes iff its observed value
/// equals the expected one; the report passes iff every check does.
struct VerificationReport {
  std::string command;
  nlohmann::json parameters = nlohmann::json::object();
  std::vector<Check> checks;
  nlohmann::json data = nlohmann::json::object();
  double runtime_seconds = 0.0;
  std::string version = kToolkitVersion;

  void add_check(std::string name, nlohmann::json expected, nlohmann::json observed);
  bool pass() const;
  const Check* find(const std::string& name) const;
  nlohmann::json to_json() const;
};

struct VerifyOptions {
  std::uint64_t seed = 0;
  std::size_t samples = 500;
  /// Number of alphabet picks per sampled word.
  std::size_t word_length = 40;
  std::size_t cap = kDefaultGroupCap;
  std::optional<std::filesystem::path> cache_dir;
};

VerificationReport verify_arnold(int strands, const VerifyOptions& options = {});
VerificationReport verify_symquot(int strands, long long ell, const VerifyOptions& options = {});
VerificationReport verify_abquot(int strands, long long ell, const VerifyOptions& options = {});
VerificationReport verify_fivelem(int strands, long long ell, const VerifyOptions& options = {});
VerificationReport verify_nonsplit(int strands, const VerifyOptions& options = {});
VerificationReport verify_crt(int strands, long long a, long long b,
                              const VerifyOptions& options = {});
VerificationReport verify_symplectic(int strands, const VerifyOptions& options = {});

/// Number of sampled words the symplectic check re-tests invariance on.
inline constexpr std::size_t kSymplecticSamples = 100;

std::uint64_t factorial(int n);
/// 2^{C(n,2)}.
std::uint64_t pair_power_of_two(int n);

}  // namespace braidcg
