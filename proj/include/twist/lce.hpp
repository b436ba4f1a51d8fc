#pragma once

#include <cstdint>
#include <vector>

#include "twist/word.hpp"

namespace twist {

// Longest-common-extension queries over a fixed symbol sequence: suffix array
// (prefix-doubling), LCP array (Kasai), and a sparse table for range minima.
class LceIndex {
 public:
  explicit LceIndex(std::vector<Symbol> text);

  std::size_t size() const { return text_.size(); }

  // Length of the longest common prefix of the suffixes starting at a and b.
  std::size_t lce(std::size_t a, std::size_t b) const;

 private:
  std::vector<Symbol> text_;
  std::vector<std::int32_t> sa_;
  std::vector<std::int32_t> rank_;
  std::vector<std::int32_t> lcp_;  // lcp_[r] = LCP(sa_[r-1], sa_[r]), lcp_[0] = 0
  std::vector<std::vector<std::int32_t>> min_table_;
  std::vector<std::int32_t> log2_;

  std::int32_t range_min(std::size_t lo, std::size_t hi) const;  // inclusive
};

}  // namespace twist
