#include "twist/word.hpp"

#include <utility>

namespace twist {

Alphabet::Alphabet(int size) : size_(size) {
  if (size < 1) throw Error("alphabet size must be at least 1");
}

char Alphabet::letter(Symbol s) const {
  if (!contains(s)) throw Error("symbol out of alphabet range");
  if (size_ > 26) throw Error("text rendering needs alphabet size <= 26");
  return static_cast<char>('a' + s);
}

Symbol Alphabet::symbol(char letter) const {
  if (size_ > 26) throw Error("text parsing needs alphabet size <= 26");
  if (letter < 'a' || letter >= static_cast<char>('a' + size_))
    throw Error(std::string("letter '") + letter + "' outside alphabet");
  return static_cast<Symbol>(letter - 'a');
}

Word::Word(Alphabet alphabet, std::vector<Symbol> symbols)
    : alphabet_(alphabet), symbols_(std::move(symbols)) {
  for (Symbol s : symbols_)
    if (!alphabet_.contains(s)) throw Error("symbol out of alphabet range");
}

Word Word::parse(std::string_view text, Alphabet alphabet) {
  std::vector<Symbol> symbols;
  symbols.reserve(text.size());
  for (char c : text) symbols.push_back(alphabet.symbol(c));
  return Word(alphabet, std::move(symbols));
}

std::string Word::render() const {
  std::string out;
  out.reserve(symbols_.size());
  for (Symbol s : symbols_) out.push_back(alphabet_.letter(s));
  return out;
}

Word Word::factor(std::size_t pos, std::size_t len) const {
  if (pos > symbols_.size() || len > symbols_.size() - pos)
    throw Error("factor out of bounds");
  return Word(alphabet_, std::vector<Symbol>(symbols_.begin() + static_cast<std::ptrdiff_t>(pos),
                                             symbols_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
}

Word operator+(const Word& u, const Word& v) {
  if (u.alphabet_ != v.alphabet_)
    throw Error("cannot concatenate words over different alphabets");
  std::vector<Symbol> symbols = u.symbols_;
  symbols.insert(symbols.end(), v.symbols_.begin(), v.symbols_.end());
  return Word(u.alphabet_, std::move(symbols));
}

}  // namespace twist
