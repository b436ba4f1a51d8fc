// Acceptance gate: one line per criterion, nonzero exit if any fails.
// Each criterion carries its own time budget where one applies.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "twist/avoidance.hpp"
#include "twist/complexity.hpp"
#include "twist/morphism.hpp"
#include "twist/word_io.hpp"

using namespace twist;

namespace {

struct Criterion {
  int number;
  std::string description;
  long budget_ms;  // < 0 means no time budget
  bool passed = false;
  long elapsed_ms = 0;
  std::string detail;
};

CyclicShiftMorphism canonical(int n, Symbol seed = 0) {
  return CyclicShiftMorphism(Permutation::cyclic(Alphabet(n)), seed);
}

bool criterion_worked_example(std::string& detail) {
  Alphabet alphabet(3);
  Permutation delta = Permutation::cyclic(alphabet);
  Word ab = Word::parse("ab", alphabet);
  if (twist::twist(ab, delta).render() != "bc") {
    detail = "twist by the cycle gave " + twist::twist(ab, delta).render();
    return false;
  }
  if (twist::twist(ab, power(delta, 2)).render() != "ca") {
    detail = "twist by the squared cycle gave " +
             twist::twist(ab, power(delta, 2)).render();
    return false;
  }
  auto m = is_strong_repetition(Word::parse("abbcca", alphabet), 3, delta);
  if (!m.has_value() || *m != 2) {
    detail = "abbcca did not verify as a 3-block repetition with m=2";
    return false;
  }
  return true;
}

bool criterion_two_letter_counts(std::string& detail) {
  Word w = canonical(2).prefix(1 << 12);
  ComplexityProfile profile = complexity_profile(w, 5);
  const std::vector<std::uint64_t> expected = {2, 4, 6, 10, 12};
  for (std::size_t k = 1; k <= 5; ++k) {
    if (profile.count(k) != expected[k - 1]) {
      detail = "count(" + std::to_string(k) + ") = " +
               std::to_string(profile.count(k)) + ", expected " +
               std::to_string(expected[k - 1]);
      return false;
    }
  }
  return true;
}

bool criterion_scanner_equivalence(std::string& detail) {
  std::mt19937 rng(20250811);
  std::uniform_int_distribution<std::size_t> pick_len(1, 200);
  std::size_t words = 0;
  for (int n = 2; n <= 5; ++n) {
    Alphabet alphabet(n);
    Permutation sigma = Permutation::cyclic(alphabet);
    for (int trial = 0; trial < 250; ++trial) {
      Word w = oracles::random_word(rng, alphabet, pick_len(rng));
      ++words;
      for (int k = 2; k <= 3; ++k) {
        for (int j = 0; j < n; ++j) {
          RepetitionQuery q{k, power(sigma, static_cast<std::uint64_t>(j)), 1,
                            w.size() / static_cast<std::size_t>(k)};
          if (q.m_max == 0) continue;
          if (scan_fast(w, q) != scan_naive(w, q)) {
            detail = "mismatch on a random word (N=" + std::to_string(n) +
                     ", k=" + std::to_string(k) + ", j=" + std::to_string(j) +
                     ")";
            return false;
          }
        }
      }
    }
  }
  for (int n : {3, 4}) {
    Word w = canonical(n).prefix(4096);
    Permutation sigma = Permutation::cyclic(Alphabet(n));
    for (int j = 0; j < n; ++j) {
      RepetitionQuery q{3, power(sigma, static_cast<std::uint64_t>(j)), 1,
                        w.size() / 3};
      if (scan_fast(w, q) != scan_naive(w, q)) {
        detail = "mismatch on the N=" + std::to_string(n) +
                 " prefix with j=" + std::to_string(j);
        return false;
      }
    }
  }
  detail = std::to_string(words) + " random words plus two prefixes";
  return true;
}

bool criterion_complexity_equivalence(std::string& detail) {
  for (int n : {2, 3, 4}) {
    Word w = canonical(n).prefix(1024);
    ComplexityProfile profile = complexity_profile(w, 12);
    for (std::size_t k = 1; k <= 12; ++k) {
      if (profile.count(k) != factor_count_naive(w, k)) {
        detail = "automaton and naive counts differ at N=" +
                 std::to_string(n) + ", k=" + std::to_string(k);
        return false;
      }
    }
  }
  return true;
}

bool criterion_grid_experiment(std::string& detail) {
  CampaignParams params;
  params.alphabet_sizes = {3, 4, 5};
  params.policy = JPolicy::theorem_only;
  params.prefix_length = 1 << 15;
  params.m_max = 512;
  params.k = 3;
  CampaignReport report = theorem_campaign(params);

  std::size_t nonempty = 0;
  for (const CampaignCell& cell : report.cells) {
    if (cell.status == CellStatus::cell_error) {
      detail = "cell (N=" + std::to_string(cell.alphabet_size) +
               ", j=" + std::to_string(cell.j) + ") failed: " + cell.error;
      return false;
    }
    if (cell.occurrences.empty()) continue;
    ++nonempty;
    Word w = canonical(cell.alphabet_size).prefix(params.prefix_length);
    Permutation delta =
        power(Permutation::cyclic(Alphabet(cell.alphabet_size)),
              static_cast<std::uint64_t>(cell.j));
    for (const Occurrence& occ : cell.occurrences) {
      auto m =
          is_strong_repetition(w.factor(occ.start, occ.m * 3), 3, delta);
      if (!m.has_value() || *m != occ.m) {
        detail = "an occurrence in cell (N=" +
                 std::to_string(cell.alphabet_size) +
                 ", j=" + std::to_string(cell.j) + ") does not re-verify";
        return false;
      }
    }
  }
  detail = std::to_string(report.cells.size()) + " cells, " +
           std::to_string(nonempty) + " non-empty (all re-verified)";
  return true;
}

bool criterion_excluded_case(std::string& detail) {
  Word w = canonical(3).prefix(1 << 10);
  Permutation sigma = Permutation::cyclic(Alphabet(3));
  RepetitionQuery q{3, sigma, 1, w.size() / 3};
  FreenessReport report = verify_freeness(w, q);
  for (const Occurrence& occ : report.occurrences)
    if (occ.start == 6 && occ.m == 1) return true;
  detail = "the occurrence (start 6, m 1) is missing";
  return false;
}

bool criterion_direct_access(std::string& detail) {
  for (int n : {2, 3, 5}) {
    CyclicShiftMorphism psi = canonical(n);
    Word w = psi.prefix(1 << 16);
    for (std::uint64_t i = 0; i < (1 << 16); ++i) {
      if (psi.letter_at(i) != w[static_cast<std::size_t>(i)]) {
        detail = "letter_at(" + std::to_string(i) + ") disagrees at N=" +
                 std::to_string(n);
        return false;
      }
    }
  }
  return true;
}

bool criterion_roundtrip_determinism(std::string& detail) {
  std::mt19937 rng(992761);
  std::uniform_int_distribution<std::size_t> pick_len(0, 64);
  for (int trial = 0; trial < 500; ++trial) {
    int n = 2 + trial % 4;
    Alphabet alphabet(n);
    Permutation sigma = oracles::random_permutation(rng, alphabet);
    Word w = oracles::random_word(rng, alphabet, pick_len(rng));
    Symbol seed = w.empty() ? 0 : w[0];
    CyclicShiftMorphism psi(sigma, seed);
    auto back = psi.desubstitute(psi.apply(w), 0);
    if (!back.has_value() || !(*back == w)) {
      detail = "desubstitution failed to invert on trial " +
               std::to_string(trial);
      return false;
    }
  }

  const char* bin = std::getenv("TWISTWORD_BIN");
  if (bin == nullptr) {
    detail = "TWISTWORD_BIN is not set";
    return false;
  }
  auto out_path = [](int run) {
    return (std::filesystem::temp_directory_path() /
            ("twistword_accept_" + std::to_string(::getpid()) + "_" +
             std::to_string(run) + ".tsv"))
        .string();
  };
  std::string outs[2];
  for (int run = 0; run < 2; ++run) {
    std::string path = out_path(run);
    std::string cmd = std::string("\"") + bin +
                      "\" scan --N 3 --j 1 --k 3 --length 512 --m-max 64 "
                      "--no-timestamp --output " + path + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) {
      detail = "the scan run exited abnormally";
      return false;
    }
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    outs[run] = buf.str();
    std::filesystem::remove(path);
  }
  if (outs[0].empty() || outs[0] != outs[1]) {
    detail = "two identical runs emitted different bytes";
    return false;
  }
  return true;
}

bool criterion_shape_audit(std::string& detail) {
  CyclicShiftMorphism psi = canonical(3);
  StructureAuditReport report = audit_length3_structure(psi, 1 << 10);
  Word w = psi.prefix(1 << 10);
  const Permutation& sigma = psi.sigma();

  bool saw_abb = false;
  for (const StructureAuditEntry& e : report.entries) {
    if (e.factor.render() == "abb") {
      saw_abb = true;
      if (e.matches_shape) {
        detail = "abb was classified as conforming";
        return false;
      }
    }
    bool shape = e.factor[1] == sigma(e.factor[0]) &&
                 e.factor[2] == sigma(sigma(e.factor[0]));
    if (shape != e.matches_shape) {
      detail = "the shape flag for " + e.factor.render() + " does not re-check";
      return false;
    }
    if (!(w.factor(e.first_pos, 3) == e.factor)) {
      detail = "first_pos of " + e.factor.render() + " does not re-check";
      return false;
    }
    for (std::size_t p = 0; p < e.first_pos; ++p) {
      if (w.factor(p, 3) == e.factor) {
        detail = e.factor.render() + " occurs before its recorded first_pos";
        return false;
      }
    }
  }
  if (!saw_abb) {
    detail = "abb is missing from the report";
    return false;
  }
  if (report.conforming + report.nonconforming != report.entries.size()) {
    detail = "the conforming/nonconforming tallies do not add up";
    return false;
  }
  detail = std::to_string(report.entries.size()) + " factors re-checked";
  return true;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "letterwise twist and shortest-repetition worked example", 1},
      {2, "two-letter fixed point has factor counts 2,4,6,10,12", 1000},
      {3, "fast scanner agrees with the naive scanner", 30000},
      {4, "automaton factor counts agree with naive counting", 5000},
      {5, "freeness grid at desk scale is clean or re-verified", 60000},
      {6, "excluded twist exponent shows the early occurrence (6,1)", 1000},
      {7, "direct letter access matches generated prefixes", 5000},
      {8, "desubstitution inverts; identical runs emit identical bytes", -1},
      {9, "length-3 factor audit is correct and self-consistent", -1},
  };

  using clock = std::chrono::steady_clock;
  int failures = 0;
  for (Criterion& c : criteria) {
    auto before = clock::now();
    switch (c.number) {
      case 1: c.passed = criterion_worked_example(c.detail); break;
      case 2: c.passed = criterion_two_letter_counts(c.detail); break;
      case 3: c.passed = criterion_scanner_equivalence(c.detail); break;
      case 4: c.passed = criterion_complexity_equivalence(c.detail); break;
      case 5: c.passed = criterion_grid_experiment(c.detail); break;
      case 6: c.passed = criterion_excluded_case(c.detail); break;
      case 7: c.passed = criterion_direct_access(c.detail); break;
      case 8: c.passed = criterion_roundtrip_determinism(c.detail); break;
      case 9: c.passed = criterion_shape_audit(c.detail); break;
    }
    c.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       clock::now() - before)
                       .count();
    if (c.budget_ms >= 0 && c.elapsed_ms > c.budget_ms) {
      c.passed = false;
      if (!c.detail.empty()) c.detail += "; ";
      c.detail += "over budget";
    }
    if (!c.passed) ++failures;

    std::ostringstream line;
    line << (c.passed ? "PASS" : "FAIL") << " criterion " << c.number << ": "
         << c.description << " (" << c.elapsed_ms << " ms";
    if (c.budget_ms >= 0) line << ", budget " << c.budget_ms << " ms";
    line << ")";
    if (!c.detail.empty()) line << " -- " << c.detail;
    std::cout << line.str() << "\n";
  }

  if (failures > 0) {
    std::cout << failures << " criterion" << (failures == 1 ? "" : "s")
              << " failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
