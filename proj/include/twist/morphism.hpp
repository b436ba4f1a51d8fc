#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "twist/permutation.hpp"
#include "twist/word.hpp"

namespace twist {

// The 2-uniform substitution a -> a sigma(a). Every image starts with its
// preimage letter, so iterating from any seed converges to a unique infinite
// fixed point; `prefix` materializes its prefixes and `letter_at` gives
// random access to single letters.
class CyclicShiftMorphism {
 public:
  CyclicShiftMorphism(Permutation sigma, Symbol seed);

  const Permutation& sigma() const { return sigma_; }
  Symbol seed() const { return seed_; }
  Alphabet alphabet() const { return sigma_.alphabet(); }

  // Image of a finite word; doubles the length.
  Word apply(const Word& w) const;

  // First `length` letters of the fixed point, via the index recurrence
  // W[2i] = W[i], W[2i+1] = sigma(W[i]) (no whole-word resubstitution).
  Word prefix(std::size_t length) const;

  // Letter n of the fixed point in O(1): sigma^popcount(n) applied to the
  // seed.
  Symbol letter_at(std::uint64_t n) const;

  // Inverse of `apply` on an aligned factor. `phase` says whether w[0] sits
  // at an even (0) or odd (1) position of an image; an odd leading letter and
  // a dangling trailing letter are dropped, then each aligned pair (x, y)
  // must satisfy y = sigma(x) and contributes x. Returns nothing if a pair
  // violates that.
  std::optional<Word> desubstitute(const Word& w, int phase) const;

 private:
  Permutation sigma_;
  Symbol seed_;
  std::vector<Permutation> sigma_powers_;  // sigma^0 .. sigma^64, for letter_at
};

}  // namespace twist
