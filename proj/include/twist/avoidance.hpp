#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twist/morphism.hpp"
#include "twist/permutation.hpp"
#include "twist/word.hpp"

namespace twist {

// What to look for: k equal-length blocks, block i the delta^i-twist of block
// 0, with block length m in [m_min, m_max].
struct RepetitionQuery {
  int k;
  Permutation delta;
  std::size_t m_min = 1;
  std::size_t m_max = 1;

  void validate() const;
};

// A located repetition: the factor of length k*m at `start` whose blocks obey
// the twist law.
struct Occurrence {
  std::size_t start = 0;
  std::size_t m = 0;
  int k = 0;

  bool operator==(const Occurrence&) const = default;
  auto operator<=>(const Occurrence&) const = default;
};

// Block length m if U splits into k blocks with block i = twist(block 0,
// delta^i); nothing otherwise. Requires k >= 2.
std::optional<std::size_t> is_strong_repetition(const Word& u, int k,
                                                const Permutation& delta);

// Every occurrence within the query bounds by direct symbol comparison,
// sorted by (start, m). The reference detector.
std::vector<Occurrence> scan_naive(const Word& w, const RepetitionQuery& q);

// Same output as scan_naive on every input. Block comparisons become O(1)
// longest-common-extension queries against the precomputed twists of w,
// answered by one shared suffix structure.
std::vector<Occurrence> scan_fast(const Word& w, const RepetitionQuery& q);

enum class ScanAlgorithm { naive, fast };

struct FreenessReport {
  RepetitionQuery query;
  std::size_t word_length = 0;
  // Sorted by (m, start); minimal block lengths first.
  std::vector<Occurrence> occurrences;
  ScanAlgorithm scan_algorithm = ScanAlgorithm::fast;

  bool free_within_range() const { return occurrences.empty(); }
  std::optional<std::size_t> minimal_m() const;
};

// Scans with scan_fast and re-verifies every occurrence with
// is_strong_repetition before listing it; a verification miss throws
// SelfCheckError. An empty list means free within (word length, m bounds)
// only, never absolutely.
FreenessReport verify_freeness(const Word& w, const RepetitionQuery& q,
                               ScanAlgorithm algorithm = ScanAlgorithm::fast);

enum class JPolicy { theorem_only, all_j };

enum class CellStatus {
  theorem_free,            // j != 1 (mod N): predicted free, none found
  theorem_counterexample,  // j != 1 (mod N) but repetitions found
  excluded_found,          // j == 1 (mod N): outside the prediction, found some
  excluded_none,           // j == 1 (mod N), none found
  cell_error,
};

std::string to_string(CellStatus status);
// The long per-cell phrasing used in report summaries.
std::string status_text(CellStatus status);

struct CampaignParams {
  std::vector<int> alphabet_sizes;
  JPolicy policy = JPolicy::theorem_only;
  std::size_t prefix_length = 0;
  std::size_t m_max = 1;
  int k = 3;
  Symbol seed = 0;
  unsigned max_threads = 0;  // 0 = hardware concurrency
};

struct CampaignCell {
  int alphabet_size = 0;
  int j = 0;
  bool theorem_applies = false;
  CellStatus status = CellStatus::cell_error;
  std::vector<Occurrence> occurrences;  // sorted by (m, start)
  std::string error;                    // set iff status == cell_error
};

struct CampaignReport {
  CampaignParams params;
  std::vector<CampaignCell> cells;  // sorted by (alphabet_size, j)

  std::size_t counterexample_cells() const;
};

// For each alphabet size N and each j in 1..N-1 admitted by the policy:
// build the canonical N-cycle sigma, generate the fixed-point prefix, and run
// verify_freeness with delta = sigma^j. Cells may run concurrently; the
// report order is always (N, j). Individual cell failures are recorded in
// the cell, not thrown.
CampaignReport theorem_campaign(const CampaignParams& params);

struct StructureAuditEntry {
  Word factor;
  std::size_t first_pos = 0;
  bool matches_shape = false;  // factor == x sigma(x) sigma^2(x)
};

// Classification of every distinct length-3 factor of a fixed-point prefix
// against the shape x sigma(x) sigma^2(x). Reports what is there; asserts
// nothing.
struct StructureAuditReport {
  int alphabet_size = 0;
  std::size_t prefix_length = 0;
  std::vector<StructureAuditEntry> entries;  // lexicographic by factor
  std::size_t conforming = 0;
  std::size_t nonconforming = 0;
};

StructureAuditReport audit_length3_structure(const CyclicShiftMorphism& psi,
                                             std::size_t prefix_length);

}  // namespace twist
