#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>

namespace braidcg::cli {

/// Defaults read from an optional `key = value` file. Recognised keys:
/// cache_dir, group_cap, word_cap. Blank lines and `#` comments are ignored.
struct Config {
  std::optional<std::filesystem::path> cache_dir;
  std::optional<std::size_t> group_cap;
  std::optional<std::size_t> word_cap;
};

Config load_config(const std::filesystem::path& path);

}  // namespace braidcg::cli
