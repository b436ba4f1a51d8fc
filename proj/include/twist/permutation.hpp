#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "twist/word.hpp"

namespace twist {

// A bijection on the symbols of an alphabet, stored as its image table.
class Permutation {
 public:
  // `image[i]` is the image of symbol i; must be a bijection on 0..N-1.
  explicit Permutation(std::vector<Symbol> image);

  static Permutation identity(Alphabet alphabet);
  // The canonical N-cycle i -> i+1 (mod N).
  static Permutation cyclic(Alphabet alphabet);
  // Cycle notation, e.g. "(0 2 1)" or "(0 1)(2 3)"; unmentioned points are
  // fixed.
  static Permutation parse_cycles(std::string_view text, Alphabet alphabet);

  Symbol operator()(Symbol s) const { return image_[static_cast<std::size_t>(s)]; }
  Alphabet alphabet() const { return Alphabet(static_cast<int>(image_.size())); }
  int degree() const { return static_cast<int>(image_.size()); }
  const std::vector<Symbol>& image() const { return image_; }

  bool is_identity() const;
  std::string cycle_string() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<Symbol> image_;
};

// p after q: the result maps x to p(q(x)).
Permutation compose(const Permutation& p, const Permutation& q);

// e-fold composition; power(p, 0) is the identity. The exponent is reduced
// modulo order(p) first, so large exponents cost the same as small ones.
Permutation power(const Permutation& p, std::uint64_t e);

// True iff p is a single cycle covering all N symbols (explicit cycle walk).
bool is_cyclic(const Permutation& p);

// Least e >= 1 with power(p, e) == identity; the lcm of the cycle lengths.
std::uint64_t order(const Permutation& p);

// The letterwise image of w under delta.
Word twist(const Word& w, const Permutation& delta);

}  // namespace twist
