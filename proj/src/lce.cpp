#include "twist/lce.hpp"

#include <algorithm>
#include <utility>

namespace twist {

LceIndex::LceIndex(std::vector<Symbol> text) : text_(std::move(text)) {
  std::size_t n = text_.size();
  sa_.resize(n);
  rank_.resize(n);
  if (n == 0) return;

  // suffix array by prefix doubling; rank pairs (rank[i], rank[i+len])
  std::vector<std::int32_t> tmp(n);
  for (std::size_t i = 0; i < n; ++i) sa_[i] = static_cast<std::int32_t>(i);
  {
    // initial ranks from single symbols
    std::vector<std::int32_t> order(sa_);
    std::sort(order.begin(), order.end(), [&](std::int32_t a, std::int32_t b) {
      return text_[static_cast<std::size_t>(a)] < text_[static_cast<std::size_t>(b)];
    });
    std::int32_t r = 0;
    rank_[static_cast<std::size_t>(order[0])] = 0;
    for (std::size_t i = 1; i < n; ++i) {
      if (text_[static_cast<std::size_t>(order[i])] !=
          text_[static_cast<std::size_t>(order[i - 1])])
        ++r;
      rank_[static_cast<std::size_t>(order[i])] = r;
    }
    sa_ = std::move(order);
  }
  for (std::size_t len = 1;; len *= 2) {
    auto pair_of = [&](std::int32_t i) {
      std::int32_t second = (static_cast<std::size_t>(i) + len < n)
                                ? rank_[static_cast<std::size_t>(i) + len]
                                : -1;
      return std::pair<std::int32_t, std::int32_t>(rank_[static_cast<std::size_t>(i)], second);
    };
    std::sort(sa_.begin(), sa_.end(), [&](std::int32_t a, std::int32_t b) {
      return pair_of(a) < pair_of(b);
    });
    tmp[static_cast<std::size_t>(sa_[0])] = 0;
    for (std::size_t i = 1; i < n; ++i)
      tmp[static_cast<std::size_t>(sa_[i])] =
          tmp[static_cast<std::size_t>(sa_[i - 1])] +
          (pair_of(sa_[i - 1]) < pair_of(sa_[i]) ? 1 : 0);
    rank_ = tmp;
    if (rank_[static_cast<std::size_t>(sa_[n - 1])] == static_cast<std::int32_t>(n - 1))
      break;
  }

  // Kasai LCP: lcp_[r] = LCP(sa_[r-1], sa_[r])
  lcp_.assign(n, 0);
  std::size_t h = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = static_cast<std::size_t>(rank_[i]);
    if (r == 0) {
      h = 0;
      continue;
    }
    std::size_t j = static_cast<std::size_t>(sa_[r - 1]);
    if (h > 0) --h;
    while (i + h < n && j + h < n && text_[i + h] == text_[j + h]) ++h;
    lcp_[r] = static_cast<std::int32_t>(h);
  }

  // sparse table over lcp_ for range minima
  log2_.assign(n + 1, 0);
  for (std::size_t i = 2; i <= n; ++i) log2_[i] = log2_[i / 2] + 1;
  int levels = log2_[n] + 1;
  min_table_.assign(static_cast<std::size_t>(levels), {});
  min_table_[0] = lcp_;
  for (int lvl = 1; lvl < levels; ++lvl) {
    std::size_t span = std::size_t{1} << lvl;
    auto& row = min_table_[static_cast<std::size_t>(lvl)];
    const auto& prev = min_table_[static_cast<std::size_t>(lvl - 1)];
    row.resize(n + 1 - span);
    for (std::size_t i = 0; i + span <= n; ++i)
      row[i] = std::min(prev[i], prev[i + span / 2]);
  }
}

std::int32_t LceIndex::range_min(std::size_t lo, std::size_t hi) const {
  int lvl = log2_[hi - lo + 1];
  std::size_t span = std::size_t{1} << lvl;
  return std::min(min_table_[static_cast<std::size_t>(lvl)][lo],
                  min_table_[static_cast<std::size_t>(lvl)][hi + 1 - span]);
}

std::size_t LceIndex::lce(std::size_t a, std::size_t b) const {
  std::size_t n = text_.size();
  if (a > n || b > n) throw Error("lce position out of range");
  if (a == b) return n - a;
  if (a == n || b == n) return 0;
  std::size_t ra = static_cast<std::size_t>(rank_[a]);
  std::size_t rb = static_cast<std::size_t>(rank_[b]);
  if (ra > rb) std::swap(ra, rb);
  return static_cast<std::size_t>(range_min(ra + 1, rb));
}

}  // namespace twist
