#include "twist/suffix_automaton.hpp"

#include <algorithm>

namespace twist {

SuffixAutomaton::SuffixAutomaton(const Word& w) {
  states_.reserve(2 * w.size() + 2);
  states_.push_back(State{});  // initial state, len 0, link -1
  last_ = 0;
  for (std::size_t i = 0; i < w.size(); ++i) extend(w[i]);
}

int SuffixAutomaton::transition(int state, Symbol c) const {
  for (const auto& [sym, to] : states_[static_cast<std::size_t>(state)].next)
    if (sym == c) return to;
  return -1;
}

void SuffixAutomaton::set_transition(int state, Symbol c, int to) {
  for (auto& [sym, old] : states_[static_cast<std::size_t>(state)].next) {
    if (sym == c) {
      old = to;
      return;
    }
  }
  states_[static_cast<std::size_t>(state)].next.emplace_back(c, to);
}

void SuffixAutomaton::extend(Symbol c) {
  int cur = static_cast<int>(states_.size());
  states_.push_back(State{});
  states_[static_cast<std::size_t>(cur)].len =
      states_[static_cast<std::size_t>(last_)].len + 1;
  int p = last_;
  while (p != -1 && transition(p, c) == -1) {
    set_transition(p, c, cur);
    p = states_[static_cast<std::size_t>(p)].link;
  }
  if (p == -1) {
    states_[static_cast<std::size_t>(cur)].link = 0;
  } else {
    int q = transition(p, c);
    if (states_[static_cast<std::size_t>(p)].len + 1 ==
        states_[static_cast<std::size_t>(q)].len) {
      states_[static_cast<std::size_t>(cur)].link = q;
    } else {
      int clone = static_cast<int>(states_.size());
      State copy = states_[static_cast<std::size_t>(q)];
      copy.len = states_[static_cast<std::size_t>(p)].len + 1;
      states_.push_back(std::move(copy));
      while (p != -1 && transition(p, c) == q) {
        set_transition(p, c, clone);
        p = states_[static_cast<std::size_t>(p)].link;
      }
      states_[static_cast<std::size_t>(q)].link = clone;
      states_[static_cast<std::size_t>(cur)].link = clone;
    }
  }
  last_ = cur;
}

std::vector<std::uint64_t> SuffixAutomaton::distinct_factor_counts(
    std::size_t max_len) const {
  // Each non-initial state contributes one distinct factor per length in
  // (link.len, len]; accumulate the intervals with a difference array.
  std::vector<std::int64_t> diff(max_len + 2, 0);
  for (std::size_t s = 1; s < states_.size(); ++s) {
    std::size_t lo = states_[static_cast<std::size_t>(states_[s].link)].len + 1;
    std::size_t hi = states_[s].len;
    if (lo > max_len) continue;
    hi = std::min(hi, max_len);
    diff[lo] += 1;
    diff[hi + 1] -= 1;
  }
  std::vector<std::uint64_t> counts(max_len + 1, 0);
  std::int64_t run = 0;
  for (std::size_t k = 1; k <= max_len; ++k) {
    run += diff[k];
    counts[k] = static_cast<std::uint64_t>(run);
  }
  return counts;
}

}  // namespace twist
