#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "twist/avoidance.hpp"
#include "twist/complexity.hpp"
#include "twist/descent.hpp"
#include "twist/morphism.hpp"
#include "twist/report_io.hpp"
#include "twist/word_io.hpp"

namespace {

using namespace twist;

struct CommonOpts {
  int alphabet_size = 3;
  long long j_raw = 1;
  std::string sigma_cycles;  // empty = canonical cycle
  std::string seed_letter = "a";
  std::string format = "tsv";
  std::string output;  // empty = stdout
  bool no_timestamp = false;
};

Alphabet make_alphabet(int n) {
  if (n < 2 || n > 26)
    throw Error("--N must be between 2 and 26 (letters a..z)");
  return Alphabet(n);
}

Permutation make_sigma(const CommonOpts& opts, const Alphabet& alphabet) {
  if (opts.sigma_cycles.empty()) return Permutation::cyclic(alphabet);
  std::string cycles = opts.sigma_cycles;
  for (char& c : cycles)
    if (c == ',') c = ' ';
  return Permutation::parse_cycles(cycles, alphabet);
}

Symbol make_seed(const CommonOpts& opts, const Alphabet& alphabet) {
  if (opts.seed_letter.size() != 1)
    throw Error("--seed must be a single letter");
  return alphabet.symbol(opts.seed_letter[0]);
}

// j is accepted unbounded and reduced mod N; j = 0 (mod N) degenerates the
// twist to the identity, i.e. classical k-power search.
int reduce_j(long long j_raw, int n) {
  if (j_raw < 0) throw Error("--j must be non-negative");
  int j = static_cast<int>(j_raw % n);
  if (j_raw % n == 0 && j_raw != 0)
    std::cerr << "warning: j = " << j_raw << " is 0 mod N; the twist is the "
              << "identity and the scan looks for classical powers\n";
  else if (j_raw == 0)
    std::cerr << "warning: j = 0; the twist is the identity and the scan "
              << "looks for classical powers\n";
  return j;
}

std::string sigma_param(const Permutation& sigma) {
  std::string s = sigma.cycle_string();
  for (char& c : s)
    if (c == ' ') c = ',';
  return s;
}

ReportMeta make_meta(const CommonOpts& opts) {
  ReportMeta meta;
  if (!opts.no_timestamp) meta.generated_at = utc_timestamp_now();
  return meta;
}

void emit_formatted(const CommonOpts& opts, const std::string& tsv,
                    const nlohmann::ordered_json& json) {
  if (opts.format == "json")
    emit(json.dump(2) + "\n", opts.output);
  else
    emit(tsv, opts.output);
}

struct ScanArgs {
  CommonOpts common;
  int k = 3;
  std::size_t length = 0;
  std::size_t m_min = 1;
  std::size_t m_max = 0;
  std::string algo = "fast";
  std::string input;  // word file instead of a generated prefix
};

int run_scan(const ScanArgs& args) {
  Alphabet alphabet = make_alphabet(args.common.alphabet_size);
  Permutation sigma = make_sigma(args.common, alphabet);
  int j = reduce_j(args.common.j_raw, alphabet.size());
  Symbol seed = make_seed(args.common, alphabet);

  Word w(alphabet);
  if (!args.input.empty()) {
    w = read_word_file(args.input, alphabet);
  } else {
    if (args.length == 0) throw Error("--length must be positive");
    CyclicShiftMorphism psi(sigma, seed);
    w = psi.prefix(args.length);
  }

  RepetitionQuery q{args.k, power(sigma, static_cast<std::uint64_t>(j)),
                    args.m_min, args.m_max};
  ScanAlgorithm algo =
      args.algo == "naive" ? ScanAlgorithm::naive : ScanAlgorithm::fast;
  FreenessReport report = verify_freeness(w, q, algo);

  ReportMeta meta = make_meta(args.common);
  meta.add_param("N", std::to_string(alphabet.size()));
  meta.add_param("j", std::to_string(j));
  meta.add_param("sigma", sigma_param(sigma));
  meta.add_param("seed", args.common.seed_letter);
  if (args.input.empty()) {
    meta.add_param("length", std::to_string(w.size()));
    meta.add_param("source", "generated");
  } else {
    meta.add_param("length", std::to_string(w.size()));
    meta.add_param("source", "file");
    meta.add_param("input", args.input);
  }
  meta.add_param("k", std::to_string(args.k));
  meta.add_param("m_min", std::to_string(args.m_min));
  meta.add_param("m_max", std::to_string(args.m_max));
  meta.add_param("algo", args.algo);

  emit_formatted(args.common, to_tsv(report, meta), to_json(report, meta));
  return 0;
}

struct VerifyArgs {
  std::string recheck_path;
  std::string input;  // optional word override
  int alphabet_size = 0;
};

int run_verify(const VerifyArgs& args) {
  ParsedReport parsed = parse_report_file(args.recheck_path);
  std::optional<Word> override_word;
  if (!args.input.empty()) {
    if (args.alphabet_size == 0)
      throw Error("--input needs --N to read the word");
    override_word =
        read_word_file(args.input, make_alphabet(args.alphabet_size));
  }
  RecheckResult result = recheck_report(parsed, override_word);
  std::cout << "rechecked " << result.rows_checked << " occurrence row"
            << (result.rows_checked == 1 ? "" : "s") << ", "
            << result.failures.size() << " failure"
            << (result.failures.size() == 1 ? "" : "s") << "\n";
  for (const std::string& f : result.failures) std::cout << "  " << f << "\n";
  if (!result.ok()) {
    std::cerr << "self-check failed: emitted occurrences do not re-verify\n";
    return 3;
  }
  return 0;
}

struct CampaignArgs {
  CommonOpts common;
  std::string n_values = "3,4,5";
  std::string policy = "theorem_only";
  std::size_t length = 0;
  std::size_t m_max = 0;
  int k = 3;
  unsigned threads = 0;
};

int run_campaign(const CampaignArgs& args) {
  CampaignParams params;
  std::istringstream in(args.n_values);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    params.alphabet_sizes.push_back(std::stoi(tok));
  }
  if (params.alphabet_sizes.empty())
    throw Error("--N-values must name at least one alphabet size");
  for (int n : params.alphabet_sizes) make_alphabet(n);
  if (args.policy == "theorem_only")
    params.policy = JPolicy::theorem_only;
  else if (args.policy == "all_j")
    params.policy = JPolicy::all_j;
  else
    throw Error("--policy must be theorem_only or all_j");
  params.prefix_length = args.length;
  params.m_max = args.m_max;
  params.k = args.k;
  params.max_threads = args.threads;
  {
    Alphabet widest(*std::max_element(params.alphabet_sizes.begin(),
                                      params.alphabet_sizes.end()));
    params.seed = make_seed(args.common, widest);
    for (int n : params.alphabet_sizes)
      if (params.seed >= n)
        throw Error("--seed letter must fit the smallest alphabet");
  }

  CampaignReport report = theorem_campaign(params);

  ReportMeta meta = make_meta(args.common);
  meta.add_param("policy", args.policy);
  meta.add_param("N_values", args.n_values);
  meta.add_param("length", std::to_string(params.prefix_length));
  meta.add_param("m_max", std::to_string(params.m_max));
  meta.add_param("k", std::to_string(params.k));
  meta.add_param("seed", args.common.seed_letter);

  emit_formatted(args.common, to_tsv(report, meta), to_json(report, meta));
  return 0;
}

struct ComplexityArgs {
  CommonOpts common;
  std::size_t length = 0;
  std::size_t k_max = 0;
  std::string window;  // "lo:hi", default [8, stable_upto]
  std::string input;
};

int run_complexity(const ComplexityArgs& args) {
  Alphabet alphabet = make_alphabet(args.common.alphabet_size);
  Permutation sigma = make_sigma(args.common, alphabet);
  Symbol seed = make_seed(args.common, alphabet);

  Word w(alphabet);
  if (!args.input.empty()) {
    w = read_word_file(args.input, alphabet);
  } else {
    if (args.length == 0) throw Error("--length must be positive");
    CyclicShiftMorphism psi(sigma, seed);
    w = psi.prefix(args.length);
  }
  if (args.k_max == 0) throw Error("--k-max must be positive");

  ComplexityProfile profile = complexity_profile(w, args.k_max);

  std::size_t window_lo = 8, window_hi = profile.stable_upto;
  bool explicit_window = !args.window.empty();
  if (explicit_window) {
    auto colon = args.window.find(':');
    if (colon == std::string::npos)
      throw Error("--window must look like lo:hi");
    window_lo = std::stoull(args.window.substr(0, colon));
    window_hi = std::stoull(args.window.substr(colon + 1));
  }
  std::optional<LinearFit> fit;
  if (window_hi > window_lo && window_hi <= profile.stable_upto &&
      window_hi <= profile.k_max()) {
    fit = fit_linear(profile, window_lo, window_hi);
  } else if (explicit_window) {
    throw Error("fit window exceeds the stable horizon of the profile");
  }
  double entropy = profile.stable_upto >= 2 ? entropy_estimate(profile) : -1.0;

  ReportMeta meta = make_meta(args.common);
  meta.add_param("N", std::to_string(alphabet.size()));
  meta.add_param("sigma", sigma_param(sigma));
  meta.add_param("seed", args.common.seed_letter);
  meta.add_param("length", std::to_string(w.size()));
  if (!args.input.empty()) meta.add_param("input", args.input);
  meta.add_param("k_max", std::to_string(args.k_max));
  if (explicit_window)
    meta.add_param("window", args.window);
  else
    meta.add_param("window", "auto");

  emit_formatted(args.common, to_tsv(profile, fit, entropy, meta),
                 to_json(profile, fit, entropy, meta));
  return 0;
}

struct DescendArgs {
  CommonOpts common;
  std::size_t length = 0;
  std::size_t start = 0;
  std::size_t m = 0;
  int k = 3;
  std::string input;  // host word file instead of a generated prefix
};

int run_descend(const DescendArgs& args) {
  Alphabet alphabet = make_alphabet(args.common.alphabet_size);
  Permutation sigma = make_sigma(args.common, alphabet);
  int j = reduce_j(args.common.j_raw, alphabet.size());
  Symbol seed = make_seed(args.common, alphabet);
  if (args.m == 0) throw Error("--m must be positive");

  CyclicShiftMorphism psi(sigma, seed);
  Word host(alphabet);
  if (!args.input.empty()) {
    host = read_word_file(args.input, alphabet);
  } else {
    if (args.length == 0) throw Error("--length must be positive");
    host = psi.prefix(args.length);
  }
  Permutation delta = power(sigma, static_cast<std::uint64_t>(j));
  Occurrence occ{args.start, args.m, args.k};
  DescentReport report = descend_occurrence(psi, host, occ, delta);

  ReportMeta meta = make_meta(args.common);
  meta.add_param("N", std::to_string(alphabet.size()));
  meta.add_param("j", std::to_string(j));
  meta.add_param("sigma", sigma_param(sigma));
  meta.add_param("seed", args.common.seed_letter);
  meta.add_param("length", std::to_string(host.size()));
  if (!args.input.empty()) {
    meta.add_param("source", "file");
    meta.add_param("input", args.input);
  }
  meta.add_param("start", std::to_string(args.start));
  meta.add_param("m", std::to_string(args.m));
  meta.add_param("k", std::to_string(args.k));

  emit_formatted(args.common, to_tsv(report, meta), to_json(report, meta));
  return 0;
}

struct AuditArgs {
  CommonOpts common;
  std::size_t length = 0;
};

int run_audit(const AuditArgs& args) {
  Alphabet alphabet = make_alphabet(args.common.alphabet_size);
  Permutation sigma = make_sigma(args.common, alphabet);
  Symbol seed = make_seed(args.common, alphabet);
  if (args.length == 0) throw Error("--length must be positive");

  CyclicShiftMorphism psi(sigma, seed);
  StructureAuditReport report = audit_length3_structure(psi, args.length);

  ReportMeta meta = make_meta(args.common);
  meta.add_param("N", std::to_string(alphabet.size()));
  meta.add_param("sigma", sigma_param(sigma));
  meta.add_param("seed", args.common.seed_letter);
  meta.add_param("length", std::to_string(args.length));

  emit_formatted(args.common, to_tsv(report, meta), to_json(report, meta));
  return 0;
}

struct GenerateArgs {
  CommonOpts common;
  std::size_t length = 0;
};

int run_generate(const GenerateArgs& args) {
  Alphabet alphabet = make_alphabet(args.common.alphabet_size);
  Permutation sigma = make_sigma(args.common, alphabet);
  Symbol seed = make_seed(args.common, alphabet);
  if (args.length == 0) throw Error("--length must be positive");

  CyclicShiftMorphism psi(sigma, seed);
  Word w = psi.prefix(args.length);
  if (args.common.output.empty() || args.common.output == "-")
    emit(render_word_text(w), args.common.output);
  else
    write_word_file(args.common.output, w);
  return 0;
}

struct TwistArgs {
  CommonOpts common;
  std::string input_word;
  std::string input;
};

int run_twist(const TwistArgs& args) {
  Alphabet alphabet = make_alphabet(args.common.alphabet_size);
  Permutation sigma = make_sigma(args.common, alphabet);
  int j = reduce_j(args.common.j_raw, alphabet.size());

  Word w(alphabet);
  if (!args.input_word.empty())
    w = Word::parse(args.input_word, alphabet);
  else if (!args.input.empty())
    w = read_word_file(args.input, alphabet);
  else
    throw Error("twist needs --input-word or --input");

  Word out = twist::twist(w, power(sigma, static_cast<std::uint64_t>(j)));
  if (args.common.output.empty() || args.common.output == "-")
    emit(render_word_text(out), args.common.output);
  else
    write_word_file(args.common.output, out);
  return 0;
}

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_j = true,
                bool with_format = true) {
  cmd->add_option("--N", opts.alphabet_size, "alphabet size (2..26)");
  if (with_j)
    cmd->add_option("--j", opts.j_raw,
                    "twist exponent; delta = sigma^j, reduced mod N");
  cmd->add_option("--sigma", opts.sigma_cycles,
                  "permutation in cycle notation, e.g. \"(0 2 1)\"; default "
                  "is the cycle 0->1->...->0");
  cmd->add_option("--seed", opts.seed_letter, "seed letter (default a)");
  cmd->add_option("--output", opts.output, "output path (default stdout)");
  if (with_format) {
    cmd->add_option("--format", opts.format, "tsv or json")
        ->check(CLI::IsMember({"tsv", "json"}));
    cmd->add_flag("--no-timestamp", opts.no_timestamp,
                  "omit generated_at so identical runs emit identical bytes");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fixed points of the cyclic shift substitution: generation, "
               "twisted-repetition scanning, complexity profiling"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  GenerateArgs generate_args;
  auto* generate_cmd = app.add_subcommand(
      "generate", "print a prefix of the fixed point");
  add_common(generate_cmd, generate_args.common, true, false);
  generate_cmd->add_option("--length", generate_args.length, "prefix length")
      ->required();

  TwistArgs twist_args;
  auto* twist_cmd =
      app.add_subcommand("twist", "apply the letterwise twist sigma^j");
  add_common(twist_cmd, twist_args.common, true, false);
  twist_cmd->add_option("--input-word", twist_args.input_word,
                        "word given inline as letters");
  twist_cmd->add_option("--input", twist_args.input, "word file");

  ScanArgs scan_args;
  auto* scan_cmd = app.add_subcommand(
      "scan", "find k-block twisted repetitions in a prefix or word file");
  add_common(scan_cmd, scan_args.common);
  scan_cmd->add_option("--k", scan_args.k, "block count (default 3)");
  scan_cmd->add_option("--length", scan_args.length, "prefix length");
  scan_cmd->add_option("--m-min", scan_args.m_min, "smallest block length");
  scan_cmd->add_option("--m-max", scan_args.m_max, "largest block length")
      ->required();
  scan_cmd->add_option("--algo", scan_args.algo, "fast or naive")
      ->check(CLI::IsMember({"fast", "naive"}));
  scan_cmd->add_option("--input", scan_args.input,
                       "scan this word file instead of a generated prefix");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand(
      "verify", "re-verify every occurrence row of an emitted report");
  verify_cmd->add_option("--recheck", verify_args.recheck_path,
                         "report file (tsv or json)")
      ->required();
  verify_cmd->add_option("--input", verify_args.input,
                         "word file the report was scanned from, for reports "
                         "not generated from parameters");
  verify_cmd->add_option("--N", verify_args.alphabet_size,
                         "alphabet size of --input");

  CampaignArgs campaign_args;
  auto* campaign_cmd = app.add_subcommand(
      "campaign", "scan a grid of (N, j) cells and classify each against the "
                  "freeness prediction");
  campaign_cmd->add_option("--N-values", campaign_args.n_values,
                           "comma-separated alphabet sizes (default 3,4,5)");
  campaign_cmd->add_option("--policy", campaign_args.policy,
                           "theorem_only (j != 1 mod N) or all_j");
  campaign_cmd->add_option("--length", campaign_args.length, "prefix length")
      ->required();
  campaign_cmd->add_option("--m-max", campaign_args.m_max,
                           "largest block length")
      ->required();
  campaign_cmd->add_option("--k", campaign_args.k, "block count (default 3)");
  campaign_cmd->add_option("--threads", campaign_args.threads,
                           "cap on parallel cells (TW_THREADS also caps)");
  campaign_cmd->add_option("--seed", campaign_args.common.seed_letter,
                           "seed letter (default a)");
  campaign_cmd->add_option("--output", campaign_args.common.output,
                           "output path (default stdout)");
  campaign_cmd->add_option("--format", campaign_args.common.format,
                           "tsv or json")
      ->check(CLI::IsMember({"tsv", "json"}));
  campaign_cmd->add_flag("--no-timestamp", campaign_args.common.no_timestamp,
                         "omit generated_at for byte-identical reruns");

  ComplexityArgs complexity_args;
  auto* complexity_cmd = app.add_subcommand(
      "complexity", "distinct-factor counts, linear fit, entropy estimate");
  add_common(complexity_cmd, complexity_args.common, false);
  complexity_cmd->add_option("--length", complexity_args.length,
                             "prefix length");
  complexity_cmd->add_option("--k-max", complexity_args.k_max,
                             "largest factor length to count")
      ->required();
  complexity_cmd->add_option("--window", complexity_args.window,
                             "fit window lo:hi (default 8:stable_upto)");
  complexity_cmd->add_option("--input", complexity_args.input,
                             "profile this word file instead of a prefix");

  DescendArgs descend_args;
  auto* descend_cmd = app.add_subcommand(
      "descend", "pull one repetition back through the substitution");
  add_common(descend_cmd, descend_args.common);
  descend_cmd->add_option("--length", descend_args.length, "prefix length");
  descend_cmd->add_option("--start", descend_args.start,
                          "occurrence start position")
      ->required();
  descend_cmd->add_option("--m", descend_args.m, "occurrence block length")
      ->required();
  descend_cmd->add_option("--k", descend_args.k, "block count (default 3)");
  descend_cmd->add_option("--input", descend_args.input,
                          "host word file instead of a generated prefix");

  AuditArgs audit_args;
  auto* audit_cmd = app.add_subcommand(
      "audit3", "classify every distinct length-3 factor of a prefix against "
                "the shape x sigma(x) sigma^2(x)");
  add_common(audit_cmd, audit_args.common, false);
  audit_cmd->add_option("--length", audit_args.length, "prefix length")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*generate_cmd) return run_generate(generate_args);
    if (*twist_cmd) return run_twist(twist_args);
    if (*scan_cmd) return run_scan(scan_args);
    if (*verify_cmd) return run_verify(verify_args);
    if (*campaign_cmd) return run_campaign(campaign_args);
    if (*complexity_cmd) return run_complexity(complexity_args);
    if (*descend_cmd) return run_descend(descend_args);
    if (*audit_cmd) return run_audit(audit_args);
  } catch (const SelfCheckError& e) {
    std::cerr << "self-check failure: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
