#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace twist {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when an emitted result fails its own re-verification.
struct SelfCheckError : Error {
  using Error::Error;
};

using Symbol = std::int32_t;

// N symbols, valued 0..N-1. Text rendering (symbol i <-> 'a'+i) is defined
// for N <= 26; the algorithms themselves are size-generic.
class Alphabet {
 public:
  explicit Alphabet(int size);

  int size() const { return size_; }
  bool contains(Symbol s) const { return s >= 0 && s < size_; }

  char letter(Symbol s) const;
  Symbol symbol(char letter) const;

  bool operator==(const Alphabet&) const = default;

 private:
  int size_;
};

// A finite sequence of symbols over a fixed alphabet. Immutable after
// construction; the empty word is valid.
class Word {
 public:
  explicit Word(Alphabet alphabet) : alphabet_(alphabet) {}
  Word(Alphabet alphabet, std::vector<Symbol> symbols);

  static Word parse(std::string_view text, Alphabet alphabet);
  std::string render() const;

  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  Alphabet alphabet() const { return alphabet_; }
  const std::vector<Symbol>& symbols() const { return symbols_; }

  // The factor of length `len` starting at `pos`.
  Word factor(std::size_t pos, std::size_t len) const;

  friend Word operator+(const Word& u, const Word& v);
  bool operator==(const Word&) const = default;

 private:
  Alphabet alphabet_;
  std::vector<Symbol> symbols_;
};

}  // namespace twist
