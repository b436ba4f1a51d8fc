#include "twist/morphism.hpp"

#include <bit>
#include <utility>

namespace twist {

CyclicShiftMorphism::CyclicShiftMorphism(Permutation sigma, Symbol seed)
    : sigma_(std::move(sigma)), seed_(seed) {
  if (!sigma_.alphabet().contains(seed_))
    throw Error("seed symbol outside the alphabet");
  sigma_powers_.reserve(65);
  Permutation acc = Permutation::identity(sigma_.alphabet());
  sigma_powers_.push_back(acc);
  for (int e = 1; e <= 64; ++e) {
    acc = compose(sigma_, acc);
    sigma_powers_.push_back(acc);
  }
}

Word CyclicShiftMorphism::apply(const Word& w) const {
  if (w.alphabet() != alphabet())
    throw Error("word alphabet does not match the morphism");
  std::vector<Symbol> out;
  out.reserve(2 * w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    out.push_back(w[i]);
    out.push_back(sigma_(w[i]));
  }
  return Word(alphabet(), std::move(out));
}

Word CyclicShiftMorphism::prefix(std::size_t length) const {
  std::vector<Symbol> out;
  out.reserve(length);
  if (length > 0) out.push_back(seed_);
  // grow by the recurrence W[2i] = W[i], W[2i+1] = sigma(W[i])
  for (std::size_t i = 0; out.size() < length; ++i) {
    Symbol x = out[i];
    std::size_t even = 2 * i, odd = 2 * i + 1;
    if (even >= out.size() && even < length) out.push_back(x);
    if (odd >= out.size() && odd < length) out.push_back(sigma_(x));
  }
  return Word(alphabet(), std::move(out));
}

Symbol CyclicShiftMorphism::letter_at(std::uint64_t n) const {
  int ones = std::popcount(n);
  return sigma_powers_[static_cast<std::size_t>(ones)](seed_);
}

std::optional<Word> CyclicShiftMorphism::desubstitute(const Word& w,
                                                      int phase) const {
  if (w.alphabet() != alphabet())
    throw Error("word alphabet does not match the morphism");
  if (phase != 0 && phase != 1) throw Error("phase must be 0 or 1");
  std::vector<Symbol> out;
  std::size_t i = static_cast<std::size_t>(phase);  // drop the odd leading letter
  for (; i + 1 < w.size(); i += 2) {
    if (w[i + 1] != sigma_(w[i])) return std::nullopt;
    out.push_back(w[i]);
  }
  // a dangling trailing letter (i == w.size() - 1) is dropped
  return Word(alphabet(), std::move(out));
}

}  // namespace twist
