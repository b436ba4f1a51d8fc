#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "twist/avoidance.hpp"
#include "twist/morphism.hpp"
#include "twist/word.hpp"

namespace twist {

// One halving step: does a repetition with even block length pull back
// through psi to a repetition half the size?
struct DescentReport {
  Occurrence occurrence;
  int start_parity = 0;       // occurrence.start mod 2
  bool m_even = false;        // block length even
  bool aligned = false;       // start_parity == 0 && m_even
  bool blocks_desubstitute = false;   // every block is a psi-image
  bool preimage_is_repetition = false;
  std::optional<Occurrence> preimage;  // within the concatenated preimage
  std::vector<Word> preimage_blocks;
  std::string note;
};

// Re-verifies `occ` inside `host` (throws Error if it is not a strong
// (k, delta)-repetition there), then attempts the pullback. Only occurrences
// at even positions with even block length can be pulled back block by
// block; the report records which precondition failed otherwise.
DescentReport descend_occurrence(const CyclicShiftMorphism& psi,
                                 const Word& host, const Occurrence& occ,
                                 const Permutation& delta);

}  // namespace twist
