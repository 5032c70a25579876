#include "config.hpp"

#include <fstream>
#include <string>

#include "braidcg/braid.hpp"

namespace braidcg::cli {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  std::string out = s.substr(first, last - first + 1);
  if (out.size() >= 2 && out.front() == '"' && out.back() == '"') out = out.substr(1, out.size() - 2);
  return out;
}

std::size_t parse_size(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(value, &used);
    if (used != value.size()) throw Error("");
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw Error("config: " + key + " expects a non-negative integer, got '" + value + "'");
  }
}

}  // namespace

Config load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read config file " + path.string());
  Config config;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw Error("config line " + std::to_string(line_no) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "cache_dir")
      config.cache_dir = value;
    else if (key == "group_cap")
      config.group_cap = parse_size(key, value);
    else if (key == "word_cap")
      config.word_cap = parse_size(key, value);
    else
      throw Error("config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
  }
  return config;
}

}  // namespace braidcg::cli
