#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "twist/word.hpp"

namespace twist {

// Online suffix automaton over Symbol sequences. Each state recognizes an
// interval of factor lengths (link_len, len]; summing interval sizes per
// length yields the number of distinct factors of each length in one sweep.
class SuffixAutomaton {
 public:
  explicit SuffixAutomaton(const Word& w);

  std::size_t state_count() const { return states_.size(); }

  // counts[k] = number of distinct factors of length k, for k in 1..max_len.
  std::vector<std::uint64_t> distinct_factor_counts(std::size_t max_len) const;

 private:
  struct State {
    std::size_t len = 0;
    int link = -1;
    std::vector<std::pair<Symbol, int>> next;
  };

  int transition(int state, Symbol c) const;
  void set_transition(int state, Symbol c, int to);
  void extend(Symbol c);

  std::vector<State> states_;
  int last_ = 0;
};

}  // namespace twist
