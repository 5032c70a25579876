#include "braidcg/verify.hpp"

#include <chrono>
#include <functional>
#include <numeric>

#include "braidcg/abelianization.hpp"
#include "braidcg/braid.hpp"
#include "braidcg/burau.hpp"
#include "braidcg/symplectic.hpp"

namespace braidcg {

using nlohmann::json;

void VerificationReport::add_check(std::string name, json expected, json observed) {
  const bool ok = expected == observed;
  checks.push_back({std::move(name), std::move(expected), std::move(observed), ok});
}

bool VerificationReport::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

const Check* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

json VerificationReport::to_json() const {
  json list = json::array();
  for (const auto& c : checks)
    list.push_back({{"name", c.name}, {"expected", c.expected}, {"observed", c.observed}, {"pass", c.pass}});
  return {{"command", command},
          {"parameters", parameters},
          {"checks", std::move(list)},
          {"data", data},
          {"runtime_seconds", runtime_seconds},
          {"version", version},
          {"pass", pass()}};
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

std::uint64_t pair_power_of_two(int n) { return std::uint64_t{1} << pair_count(n); }

namespace {

using Clock = std::chrono::steady_clock;

// Records a check whose observed value may fail to compute; the error text
// becomes the observed value so later checks still run.
void run_check(VerificationReport& report, const std::string& name, json expected,
               const std::function<json()>& observe) {
  json observed;
  try {
    observed = observe();
  } catch (const std::exception& e) {
    observed = std::string("error: ") + e.what();
  }
  report.add_check(name, std::move(expected), std::move(observed));
}

VerificationReport start_report(std::string command, const VerifyOptions& options, json params) {
  VerificationReport report;
  report.command = std::move(command);
  report.parameters = std::move(params);
  report.parameters["seed"] = options.seed;
  report.parameters["samples"] = options.samples;
  report.parameters["word_length"] = options.word_length;
  return report;
}

void finish(VerificationReport& report, Clock::time_point started) {
  report.runtime_seconds = std::chrono::duration<double>(Clock::now() - started).count();
}

void require_range(int n, int lo, int hi) {
  if (n < lo || n > hi)
    throw Error("n = " + std::to_string(n) + " outside the supported range " + std::to_string(lo) +
                ".." + std::to_string(hi));
}

void require_odd(long long ell, long long minimum) {
  if (ell % 2 == 0) throw Error("theorem requires odd ℓ");
  if (ell < minimum) throw Error("ℓ must be at least " + std::to_string(minimum));
}

std::vector<ModularMatrix> images_mod(const std::vector<BraidWord>& words, std::uint64_t modulus) {
  std::vector<ModularMatrix> out;
  out.reserve(words.size());
  for (const auto& w : words) out.push_back(burau_mod(w, modulus));
  return out;
}

FiniteMatrixGroup close_images(const VerifyOptions& options, int strands,
                               const std::vector<BraidWord>& words, std::uint64_t modulus) {
  const auto gens = images_mod(words, modulus);
  const auto dim = static_cast<std::size_t>(strands - 1);
  if (options.cache_dir) return GroupCache(*options.cache_dir).close(modulus, dim, gens, options.cap);
  return close(modulus, dim, gens, options.cap);
}

std::vector<BraidWord> powers(const std::vector<BraidWord>& words, long long k) {
  std::vector<BraidWord> out;
  out.reserve(words.size());
  for (const auto& w : words) out.push_back(power(w, k));
  return out;
}

// Appends letters (sigma_k)^{exponent} undoing the permutation of `word`.
BraidWord make_pure(const BraidWord& word, long long exponent) {
  BraidWord out = word;
  for (int k : unscramble(permutation_of(word)))
    out = compose(out, power(BraidWord::generator(word.strands(), k), exponent));
  return out;
}

}  // namespace

VerificationReport verify_arnold(int strands, const VerifyOptions& options) {
  require_range(strands, 3, 6);
  const auto started = Clock::now();
  auto report = start_report("arnold", options, {{"n", strands}});
  Rng rng(options.seed);
  const auto sigmas = artin_generators(strands);
  const auto pures = pure_generators(strands);

  run_check(report, "closure_order_mod_2", factorial(strands),
            [&] { return close_images(options, strands, sigmas, 2).order(); });

  run_check(report, "level_2_iff_trivial_permutation", 0, [&] {
    std::size_t failures = 0, pure_samples = 0;
    for (std::size_t s = 0; s < options.samples; ++s) {
      const BraidWord w = s % 2 == 0 ? random_word(strands, options.word_length, sigmas, rng)
                                     : random_word(strands, options.word_length, pures, rng);
      const bool pure = permutation_of(w).is_identity();
      if (pure) ++pure_samples;
      if (pure != burau_mod(w, 2).is_identity()) ++failures;
    }
    report.data["pure_samples"] = pure_samples;
    return failures;
  });

  finish(report, started);
  return report;
}

VerificationReport verify_symquot(int strands, long long ell, const VerifyOptions& options) {
  require_odd(ell, 1);
  require_range(strands, 3, 5);
  if (ell == 1) {
    auto report = verify_arnold(strands, options);
    report.command = "symquot";
    report.parameters["ell"] = 1;
    return report;
  }
  const auto started = Clock::now();
  auto report = start_report("symquot", options, {{"n", strands}, {"ell", ell}});
  Rng rng(options.seed);
  const auto sigma_powers = powers(artin_generators(strands), ell);
  const auto level = static_cast<std::uint64_t>(ell);

  run_check(report, "sigma_powers_in_level_l", true, [&] {
    for (const auto& w : sigma_powers)
      if (!is_congruence_member(w, CongruenceLevel(ell))) return false;
    return true;
  });

  run_check(report, "sigma_powers_map_to_transpositions", true, [&] {
    for (int i = 1; i < strands; ++i)
      if (!(permutation_of(sigma_powers[i - 1]) == Permutation::transposition(strands, i, i + 1)))
        return false;
    return true;
  });

  run_check(report, "closure_order_mod_2l", factorial(strands),
            [&] { return close_images(options, strands, sigma_powers, 2 * level).order(); });

  run_check(report, "trivial_permutation_words_in_level_2l", 0, [&] {
    std::size_t failures = 0;
    for (std::size_t s = 0; s < options.samples; ++s) {
      const BraidWord w =
          make_pure(random_word(strands, options.word_length, sigma_powers, rng), ell);
      if (!permutation_of(w).is_identity() || !burau_mod(w, 2 * level).is_identity()) ++failures;
    }
    return failures;
  });

  finish(report, started);
  return report;
}

VerificationReport verify_abquot(int strands, long long ell, const VerifyOptions& options) {
  require_odd(ell, 1);
  require_range(strands, 3, 5);
  const auto started = Clock::now();
  auto report = start_report("abquot", options, {{"n", strands}, {"ell", ell}});
  Rng rng(options.seed);
  const auto pure_powers = powers(pure_generators(strands), ell);
  const auto level = static_cast<std::uint64_t>(ell);
  const auto sigmas = artin_generators(strands);

  run_check(report, "pure_powers_in_level_2l", true, [&] {
    for (const auto& w : pure_powers)
      if (!is_congruence_member(w, CongruenceLevel(2 * ell))) return false;
    return true;
  });

  run_check(report, "phi_of_pure_powers_is_basis", true, [&] {
    std::size_t k = 0;
    for (int i = 1; i <= strands; ++i)
      for (int j = i + 1; j <= strands; ++j)
        if (!(phi_mod2(pure_powers[k++]) == Mod2Vector::basis(strands, i, j))) return false;
    return true;
  });

  const json expected_shape = {{"order", pair_power_of_two(strands)}, {"abelian", true}, {"exponent", 2}};
  run_check(report, "pure_power_closure_mod_4l", expected_shape, [&] {
    const auto group = close_images(options, strands, pure_powers, 4 * level);
    const auto inv = structure_invariants(group);
    report.data["pure_power_closure_invariants"] = to_json(inv);
    return json{{"order", inv.order}, {"abelian", inv.abelian}, {"exponent", inv.exponent}};
  });

  run_check(report, "phi_trivial_words_in_level_4", 0, [&] {
    std::size_t failures = 0;
    for (std::size_t s = 0; s < options.samples; ++s) {
      BraidWord w = make_pure(random_word(strands, options.word_length, sigmas, rng), 1);
      const Mod2Vector v = phi_mod2(w);
      for (int i = 1; i <= strands; ++i)
        for (int j = i + 1; j <= strands; ++j)
          if (v(i, j)) w = compose(w, inverse(pure_generator(strands, i, j)));
      if (!phi_mod2(w).is_zero() || !burau_mod(w, 4).is_identity()) ++failures;
    }
    return failures;
  });

  finish(report, started);
  return report;
}

VerificationReport verify_fivelem(int strands, long long ell, const VerifyOptions& options) {
  require_odd(ell, 3);
  require_range(strands, 3, 4);
  const auto started = Clock::now();
  auto report = start_report("fivelem", options, {{"n", strands}, {"ell", ell}});
  const auto level = static_cast<std::uint64_t>(ell);
  const std::uint64_t expected_order = factorial(strands) * pair_power_of_two(strands);

  std::optional<FiniteMatrixGroup> full, level_image;
  run_check(report, "order_B_n_mod_4", expected_order, [&] {
    full = close_images(options, strands, artin_generators(strands), 4);
    return full->order();
  });
  run_check(report, "order_level_l_image_mod_4l", expected_order, [&] {
    auto gens = powers(artin_generators(strands), ell);
    for (auto& a : powers(pure_generators(strands), ell)) gens.push_back(std::move(a));
    level_image = close_images(options, strands, gens, 4 * level);
    return level_image->order();
  });

  if (full && level_image) {
    const auto inv_full = structure_invariants(*full);
    const auto inv_level = structure_invariants(*level_image);
    report.data["invariants_B_n_mod_4"] = to_json(inv_full);
    report.data["invariants_level_l_image"] = to_json(inv_level);
    report.add_check("structure_invariants_equal", to_json(inv_full), to_json(inv_level));
    if (full->order() <= kIsomorphismSearchLimit) {
      run_check(report, "exact_isomorphism", true,
                [&] { return find_isomorphism(*full, *level_image).has_value(); });
    }
  } else {
    report.add_check("structure_invariants_equal", "computed", "skipped: closure failed");
  }

  finish(report, started);
  return report;
}

VerificationReport verify_nonsplit(int strands, const VerifyOptions& options) {
  if (strands != 3) throw ProbeNotExhaustive();
  const auto started = Clock::now();
  auto report = start_report("nonsplit", options, {{"n", strands}});
  const auto group = close_images(options, strands, artin_generators(strands), 4);
  const auto kernel = close_images(options, strands, pure_generators(strands), 4);
  report.add_check("order_B_n_mod_4", factorial(strands) * pair_power_of_two(strands), group.order());
  report.add_check("order_PB_n_mod_4", pair_power_of_two(strands), kernel.order());

  run_check(report, "complement_of_pure_image", "none", [&]() -> json {
    const auto h = complement_search(group, kernel, factorial(strands));
    if (!h) return "none";
    report.data["complement_generators"] = json::array();
    for (const auto& g : h->generators()) report.data["complement_generators"].push_back(to_json(g));
    return "found";
  });

  run_check(report, "control_complement_of_trivial_subgroup", "found", [&]() -> json {
    const auto trivial = close(group.modulus(), group.dim(), {});
    const auto h = complement_search(group, trivial, group.order());
    return h && h->order() == group.order() ? "found" : "none";
  });

  finish(report, started);
  return report;
}

VerificationReport verify_crt(int strands, long long a, long long b, const VerifyOptions& options) {
  if (a < 2 || b < 2) throw Error("crt needs a, b >= 2");
  const auto started = Clock::now();
  auto report = start_report("crt", options, {{"n", strands}, {"a", a}, {"b", b}});
  const long long l = std::lcm(a, b);
  report.parameters["lcm"] = l;
  Rng rng(options.seed);
  const auto sigmas = artin_generators(strands);
  const CongruenceLevel level_a(a), level_b(b), level_l(l);

  auto memberships = [&](const BraidWord& w) {
    return json::array({is_congruence_member(w, level_a), is_congruence_member(w, level_b),
                        is_congruence_member(w, level_l)});
  };

  run_check(report, "sigma_1_power_lcm_member_of_all", json::array({true, true, true}),
            [&] { return memberships(power(sigmas.front(), l)); });

  // Products of three conjugates u sigma_i^k u^{-1} lie in B_n[k].
  auto conjugate_product = [&](long long k) {
    BraidWord w(strands);
    for (int f = 0; f < 3; ++f) {
      const BraidWord u = random_word(strands, 5, sigmas, rng);
      const auto i = static_cast<std::size_t>(rng.below(sigmas.size()));
      const long long e = rng.coin() ? k : -k;
      w = compose(w, compose(compose(u, power(sigmas[i], e)), inverse(u)));
    }
    return w;
  };

  run_check(report, "biconditional_failures", 0, [&] {
    std::size_t failures = 0;
    std::size_t in_a = 0, in_b = 0, in_l = 0, total = 0;
    auto test = [&](const BraidWord& w) {
      const bool ma = is_congruence_member(w, level_a);
      const bool mb = is_congruence_member(w, level_b);
      const bool ml = is_congruence_member(w, level_l);
      in_a += ma;
      in_b += mb;
      in_l += ml;
      ++total;
      if ((ma && mb) != ml) ++failures;
    };
    for (std::size_t s = 0; s < options.samples; ++s) {
      test(random_word(strands, options.word_length, sigmas, rng));
      test(conjugate_product(l));
      test(conjugate_product(a));
      test(conjugate_product(b));
    }
    report.data["sampled_words"] = total;
    report.data["members_a"] = in_a;
    report.data["members_b"] = in_b;
    report.data["members_lcm"] = in_l;
    return failures;
  });

  finish(report, started);
  return report;
}

VerificationReport verify_symplectic(int strands, const VerifyOptions& options) {
  if (strands % 2 == 0) throw Error("b=2 case out of scope");
  require_range(strands, 3, 9);
  const auto started = Clock::now();
  auto report = start_report("symplectic", options, {{"n", strands}});
  Rng rng(options.seed);

  const FormSpace space = invariant_forms(strands);
  report.data["form_space_dimension"] = space.basis.size();
  report.data["form_space_basis"] = json::array();
  for (const auto& j : space.basis) report.data["form_space_basis"].push_back(to_json(j));

  run_check(report, "basis_invariant_under_generators", true, [&] {
    for (const auto& j : space.basis)
      for (int i = 1; i < strands; ++i)
        if (!preserves_form(generator_matrix(strands, i, 1), j)) return false;
    return true;
  });

  const auto form = find_symplectic_form(space);
  report.add_check("nondegenerate_alternating_form_found", true, form.has_value());
  if (form) {
    report.data["form"] = to_json(*form);
    run_check(report, "invariance_on_sampled_words", 0, [&] {
      const auto sigmas = artin_generators(strands);
      std::size_t failures = 0;
      for (std::size_t s = 0; s < kSymplecticSamples; ++s)
        if (!preserves_form(burau_int(random_word(strands, options.word_length, sigmas, rng)), *form))
          ++failures;
      return failures;
    });
  }

  finish(report, started);
  return report;
}

}  // namespace braidcg
