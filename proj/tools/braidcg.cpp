// braidcg: reproducible verification runs for congruence quotients of braid
// groups under the integral Burau representation.
//
//   braidcg <command> --n <int> [--ell <int>] [--samples <int>] [--seed <int>]
//           [--out <path>] [--cache-dir <path>] [--no-cache] [--config <path>]
//
// Commands: arnold, symquot, abquot, fivelem, nonsplit, crt (--a/--b),
// symplectic, burau (--word "1 -2 1" [--mod m]).

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "braidcg/burau.hpp"
#include "braidcg/verify.hpp"
#include "config.hpp"

namespace {

struct CommonArgs {
  int n = 0;
  long long ell = 1;
  std::size_t samples = 500;
  std::uint64_t seed = 0;
  std::size_t word_length = 40;
  std::string out;
  std::string cache_dir;
  bool no_cache = false;
  std::string config;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_ell) {
  cmd->add_option("--n", args.n, "number of strands")->required();
  if (with_ell) cmd->add_option("--ell", args.ell, "odd level");
  cmd->add_option("--samples", args.samples, "sampled words per check")->capture_default_str();
  cmd->add_option("--seed", args.seed, "random seed")->capture_default_str();
  cmd->add_option("--word-length", args.word_length, "alphabet picks per sampled word")
      ->capture_default_str();
  cmd->add_option("--out", args.out, "write the JSON report here instead of stdout");
  cmd->add_option("--cache-dir", args.cache_dir, "directory for enumerated groups");
  cmd->add_flag("--no-cache", args.no_cache, "ignore the group cache");
  cmd->add_option("--config", args.config, "key = value defaults file");
}

braidcg::VerifyOptions make_options(const CommonArgs& args, const braidcg::cli::Config& config) {
  braidcg::VerifyOptions opts;
  opts.seed = args.seed;
  opts.samples = args.samples;
  opts.word_length = args.word_length;
  if (config.group_cap) opts.cap = *config.group_cap;
  if (!args.no_cache) {
    if (!args.cache_dir.empty())
      opts.cache_dir = args.cache_dir;
    else if (config.cache_dir)
      opts.cache_dir = config.cache_dir;
  }
  return opts;
}

int emit(const nlohmann::json& doc, const std::string& out) {
  const std::string text = doc.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream file(out, std::ios::binary | std::ios::trunc);
  if (!file) {
    std::cerr << "braidcg: cannot write " << out << "\n";
    return 2;
  }
  file << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Congruence subgroups of braid groups: exact Burau checks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", braidcg::kToolkitVersion);

  CommonArgs args;
  long long crt_a = 2, crt_b = 3;
  std::string word_text;
  std::optional<std::uint64_t> modulus;

  auto* arnold = app.add_subcommand("arnold", "B_n / B_n[2] against S_n");
  add_common(arnold, args, false);
  auto* symquot = app.add_subcommand("symquot", "B_n[l] / B_n[2l] against S_n, l odd");
  add_common(symquot, args, true);
  auto* abquot = app.add_subcommand("abquot", "B_n[2l] / B_n[4l] against (Z/2)^C(n,2), l odd");
  add_common(abquot, args, true);
  auto* fivelem = app.add_subcommand("fivelem", "B_n[l] / B_n[4l] against B_n / B_n[4], l odd");
  add_common(fivelem, args, true);
  auto* nonsplit = app.add_subcommand("nonsplit", "complement probe in B_3 / B_3[4]");
  add_common(nonsplit, args, false);
  auto* crt = app.add_subcommand("crt", "B_n[a] ∩ B_n[b] = B_n[lcm(a,b)] on samples");
  add_common(crt, args, false);
  crt->add_option("--a", crt_a, "first level")->required();
  crt->add_option("--b", crt_b, "second level")->required();
  auto* symplectic = app.add_subcommand("symplectic", "invariant symplectic form, n odd");
  add_common(symplectic, args, false);
  auto* burau = app.add_subcommand("burau", "print the Burau matrix of a word");
  burau->add_option("--n", args.n, "number of strands")->required();
  burau->add_option("--word", word_text, "letters, e.g. \"1 -2 1\"")->required();
  burau->add_option("--mod", modulus, "reduce mod m");
  burau->add_option("--out", args.out, "write the JSON matrix here instead of stdout");
  burau->add_option("--config", args.config, "key = value defaults file");

  CLI11_PARSE(app, argc, argv);

  try {
    braidcg::cli::Config config;
    if (!args.config.empty()) config = braidcg::cli::load_config(args.config);

    if (burau->parsed()) {
      const auto word = braidcg::parse_word(args.n, word_text);
      if (modulus) return emit(braidcg::to_json(braidcg::burau_mod(word, *modulus)), args.out);
      const std::size_t word_cap = config.word_cap.value_or(braidcg::kDefaultMaxLetters);
      return emit(braidcg::to_json(braidcg::burau_int(word, word_cap)), args.out);
    }

    const auto opts = make_options(args, config);
    braidcg::VerificationReport report;
    if (arnold->parsed())
      report = braidcg::verify_arnold(args.n, opts);
    else if (symquot->parsed())
      report = braidcg::verify_symquot(args.n, args.ell, opts);
    else if (abquot->parsed())
      report = braidcg::verify_abquot(args.n, args.ell, opts);
    else if (fivelem->parsed())
      report = braidcg::verify_fivelem(args.n, args.ell, opts);
    else if (nonsplit->parsed())
      report = braidcg::verify_nonsplit(args.n, opts);
    else if (crt->parsed())
      report = braidcg::verify_crt(args.n, crt_a, crt_b, opts);
    else
      report = braidcg::verify_symplectic(args.n, opts);

    if (const int rc = emit(report.to_json(), args.out); rc != 0) return rc;
    return report.pass() ? 0 : 1;
  } catch (const braidcg::Error& e) {
    std::cerr << "braidcg: " << e.what() << "\n";
    return 2;
  }
}
