#include "twist/permutation.hpp"

#include <numeric>
#include <sstream>
#include <utility>

namespace twist {

Permutation::Permutation(std::vector<Symbol> image) : image_(std::move(image)) {
  if (image_.empty()) throw Error("permutation must act on at least one symbol");
  std::vector<bool> seen(image_.size(), false);
  for (Symbol s : image_) {
    if (s < 0 || static_cast<std::size_t>(s) >= image_.size())
      throw Error("permutation image out of range");
    if (seen[static_cast<std::size_t>(s)])
      throw Error("permutation image repeats a symbol");
    seen[static_cast<std::size_t>(s)] = true;
  }
}

Permutation Permutation::identity(Alphabet alphabet) {
  std::vector<Symbol> image(static_cast<std::size_t>(alphabet.size()));
  std::iota(image.begin(), image.end(), 0);
  return Permutation(std::move(image));
}

Permutation Permutation::cyclic(Alphabet alphabet) {
  int n = alphabet.size();
  std::vector<Symbol> image(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    image[static_cast<std::size_t>(i)] = static_cast<Symbol>((i + 1) % n);
  return Permutation(std::move(image));
}

Permutation Permutation::parse_cycles(std::string_view text, Alphabet alphabet) {
  int n = alphabet.size();
  std::vector<Symbol> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 0);
  std::vector<bool> mentioned(static_cast<std::size_t>(n), false);

  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_space();
  bool any_cycle = false;
  while (i < text.size()) {
    if (text[i] != '(') throw Error("cycle notation must look like (0 2 1)(...)");
    ++i;
    std::vector<Symbol> cycle;
    for (;;) {
      skip_space();
      if (i >= text.size()) throw Error("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (text[i] < '0' || text[i] > '9') throw Error("cycle entries must be symbol numbers");
      long v = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        v = v * 10 + (text[i] - '0');
        if (v > n) break;
        ++i;
      }
      if (v >= n) throw Error("cycle entry out of alphabet range");
      if (mentioned[static_cast<std::size_t>(v)])
        throw Error("symbol appears twice in cycle notation");
      mentioned[static_cast<std::size_t>(v)] = true;
      cycle.push_back(static_cast<Symbol>(v));
    }
    for (std::size_t c = 0; c < cycle.size(); ++c)
      image[static_cast<std::size_t>(cycle[c])] = cycle[(c + 1) % cycle.size()];
    any_cycle = true;
    skip_space();
  }
  if (!any_cycle) throw Error("empty cycle notation");
  return Permutation(std::move(image));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (image_[i] != static_cast<Symbol>(i)) return false;
  return true;
}

std::string Permutation::cycle_string() const {
  std::ostringstream out;
  std::vector<bool> seen(image_.size(), false);
  bool wrote = false;
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (seen[i] || image_[i] == static_cast<Symbol>(i)) {
      seen[i] = true;
      continue;
    }
    out << '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out << ' ';
      out << j;
      first = false;
      j = static_cast<std::size_t>(image_[j]);
    }
    out << ')';
    wrote = true;
  }
  if (!wrote) return "()";
  return out.str();
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw Error("cannot compose permutations of different degree");
  std::vector<Symbol> image(static_cast<std::size_t>(p.degree()));
  for (int x = 0; x < p.degree(); ++x)
    image[static_cast<std::size_t>(x)] = p(q(static_cast<Symbol>(x)));
  return Permutation(std::move(image));
}

Permutation power(const Permutation& p, std::uint64_t e) {
  e %= order(p);
  Permutation result = Permutation::identity(p.alphabet());
  Permutation base = p;
  while (e > 0) {
    if (e & 1) result = compose(base, result);
    e >>= 1;
    if (e > 0) base = compose(base, base);
  }
  return result;
}

bool is_cyclic(const Permutation& p) {
  std::size_t n = static_cast<std::size_t>(p.degree());
  std::size_t steps = 0;
  Symbol x = 0;
  do {
    x = p(x);
    ++steps;
  } while (x != 0 && steps <= n);
  return steps == n;
}

std::uint64_t order(const Permutation& p) {
  std::size_t n = static_cast<std::size_t>(p.degree());
  std::vector<bool> seen(n, false);
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = static_cast<std::size_t>(p(static_cast<Symbol>(j)));
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

Word twist(const Word& w, const Permutation& delta) {
  if (w.alphabet().size() != delta.degree())
    throw Error("twist permutation degree must match the word alphabet");
  std::vector<Symbol> symbols;
  symbols.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) symbols.push_back(delta(w[i]));
  return Word(w.alphabet(), std::move(symbols));
}

}  // namespace twist
