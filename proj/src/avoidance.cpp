#include "twist/avoidance.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <sstream>
#include <thread>
#include <utility>

#include "twist/lce.hpp"

namespace twist {

namespace {

// delta^0 .. delta^(k-1) as image tables, the per-block twists.
std::vector<Permutation> delta_powers(const Permutation& delta, int k) {
  std::vector<Permutation> powers;
  powers.reserve(static_cast<std::size_t>(k));
  powers.push_back(Permutation::identity(delta.alphabet()));
  for (int i = 1; i < k; ++i) powers.push_back(compose(delta, powers.back()));
  return powers;
}

void check_query(const Word& w, const RepetitionQuery& q) {
  q.validate();
  if (w.alphabet().size() != q.delta.degree())
    throw Error("query permutation degree must match the word alphabet");
}

}  // namespace

void RepetitionQuery::validate() const {
  if (k < 2) throw Error("block count k must be at least 2");
  if (m_min < 1) throw Error("m_min must be at least 1");
  if (m_min > m_max) throw Error("m_min must not exceed m_max");
}

std::optional<std::size_t> is_strong_repetition(const Word& u, int k,
                                                const Permutation& delta) {
  if (k < 2) throw Error("block count k must be at least 2");
  if (u.alphabet().size() != delta.degree())
    throw Error("twist permutation degree must match the word alphabet");
  if (u.empty() || u.size() % static_cast<std::size_t>(k) != 0)
    return std::nullopt;
  std::size_t m = u.size() / static_cast<std::size_t>(k);
  auto powers = delta_powers(delta, k);
  for (int i = 1; i < k; ++i) {
    const Permutation& p = powers[static_cast<std::size_t>(i)];
    for (std::size_t t = 0; t < m; ++t)
      if (u[static_cast<std::size_t>(i) * m + t] != p(u[t]))
        return std::nullopt;
  }
  return m;
}

std::vector<Occurrence> scan_naive(const Word& w, const RepetitionQuery& q) {
  check_query(w, q);
  auto powers = delta_powers(q.delta, q.k);
  std::vector<Occurrence> found;
  std::size_t n = w.size();
  for (std::size_t start = 0; start < n; ++start) {
    std::size_t m_cap = (n - start) / static_cast<std::size_t>(q.k);
    std::size_t m_hi = std::min(q.m_max, m_cap);
    for (std::size_t m = q.m_min; m <= m_hi; ++m) {
      bool ok = true;
      for (int i = 1; ok && i < q.k; ++i) {
        const Permutation& p = powers[static_cast<std::size_t>(i)];
        for (std::size_t t = 0; t < m; ++t) {
          if (w[start + static_cast<std::size_t>(i) * m + t] != p(w[start + t])) {
            ok = false;
            break;
          }
        }
      }
      if (ok) found.push_back(Occurrence{start, m, q.k});
    }
  }
  return found;
}

std::vector<Occurrence> scan_fast(const Word& w, const RepetitionQuery& q) {
  check_query(w, q);
  auto powers = delta_powers(q.delta, q.k);
  std::size_t n = w.size();
  Symbol alphabet_size = static_cast<Symbol>(w.alphabet().size());

  // w, then each twisted copy delta^i(w), joined by distinct out-of-alphabet
  // separators so no match crosses a boundary.
  std::vector<Symbol> text;
  text.reserve(static_cast<std::size_t>(q.k) * (n + 1));
  text.insert(text.end(), w.symbols().begin(), w.symbols().end());
  std::vector<std::size_t> offset(static_cast<std::size_t>(q.k), 0);
  for (int i = 1; i < q.k; ++i) {
    text.push_back(alphabet_size + static_cast<Symbol>(i - 1));
    offset[static_cast<std::size_t>(i)] = text.size();
    const Permutation& p = powers[static_cast<std::size_t>(i)];
    for (std::size_t t = 0; t < n; ++t) text.push_back(p(w[t]));
  }
  LceIndex index(std::move(text));

  std::vector<Occurrence> found;
  for (std::size_t start = 0; start < n; ++start) {
    // block i of a candidate must match the twisted copy at the same start:
    // w[start + i*m ..] vs delta^i(w)[start ..], for i*m + m more symbols
    std::size_t m_cap = (n - start) / static_cast<std::size_t>(q.k);
    std::size_t m_hi = std::min(q.m_max, m_cap);
    for (std::size_t m = q.m_min; m <= m_hi; ++m) {
      bool ok = true;
      for (int i = 1; ok && i < q.k; ++i) {
        std::size_t ext = index.lce(offset[static_cast<std::size_t>(i)] + start,
                                    start + static_cast<std::size_t>(i) * m);
        ok = ext >= m;
      }
      if (ok) found.push_back(Occurrence{start, m, q.k});
    }
  }
  return found;
}

std::optional<std::size_t> FreenessReport::minimal_m() const {
  if (occurrences.empty()) return std::nullopt;
  return occurrences.front().m;
}

FreenessReport verify_freeness(const Word& w, const RepetitionQuery& q,
                               ScanAlgorithm algorithm) {
  std::vector<Occurrence> found = algorithm == ScanAlgorithm::fast
                                      ? scan_fast(w, q)
                                      : scan_naive(w, q);
  for (const Occurrence& occ : found) {
    Word u = w.factor(occ.start, static_cast<std::size_t>(occ.k) * occ.m);
    auto m = is_strong_repetition(u, occ.k, q.delta);
    if (!m.has_value() || *m != occ.m) {
      std::ostringstream msg;
      msg << "occurrence (start=" << occ.start << ", m=" << occ.m
          << ") failed re-verification";
      throw SelfCheckError(msg.str());
    }
  }
  std::sort(found.begin(), found.end(),
            [](const Occurrence& a, const Occurrence& b) {
              return std::pair(a.m, a.start) < std::pair(b.m, b.start);
            });
  return FreenessReport{q, w.size(), std::move(found), algorithm};
}

std::string to_string(CellStatus status) {
  switch (status) {
    case CellStatus::theorem_free: return "theorem_free";
    case CellStatus::theorem_counterexample: return "theorem_counterexample";
    case CellStatus::excluded_found: return "excluded_found";
    case CellStatus::excluded_none: return "excluded_none";
    case CellStatus::cell_error: return "cell_error";
  }
  return "unknown";
}

std::string status_text(CellStatus status) {
  switch (status) {
    case CellStatus::theorem_free: return "theorem case, free as predicted";
    case CellStatus::theorem_counterexample: return "theorem case, COUNTEREXAMPLE";
    case CellStatus::excluded_found: return "excluded case, repetitions found";
    case CellStatus::excluded_none: return "excluded case, none found";
    case CellStatus::cell_error: return "cell failed";
  }
  return "unknown";
}

std::size_t CampaignReport::counterexample_cells() const {
  std::size_t count = 0;
  for (const CampaignCell& cell : cells)
    if (cell.status == CellStatus::theorem_counterexample) ++count;
  return count;
}

namespace {

unsigned thread_budget(const CampaignParams& params, std::size_t cells) {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  unsigned want = params.max_threads > 0 ? params.max_threads : hw;
  if (const char* env = std::getenv("TW_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1)
      want = std::min(want, static_cast<unsigned>(v));
  }
  if (cells < want) want = static_cast<unsigned>(cells);
  return want > 0 ? want : 1;
}

void run_cell(const CampaignParams& params, CampaignCell& cell) {
  Alphabet alphabet(cell.alphabet_size);
  Permutation sigma = Permutation::cyclic(alphabet);
  CyclicShiftMorphism psi(sigma, params.seed);
  Word w = psi.prefix(params.prefix_length);
  RepetitionQuery q{params.k, power(sigma, static_cast<std::uint64_t>(cell.j)),
                    1, params.m_max};
  FreenessReport report = verify_freeness(w, q);
  cell.occurrences = std::move(report.occurrences);
  if (cell.theorem_applies)
    cell.status = cell.occurrences.empty() ? CellStatus::theorem_free
                                           : CellStatus::theorem_counterexample;
  else
    cell.status = cell.occurrences.empty() ? CellStatus::excluded_none
                                           : CellStatus::excluded_found;
}

}  // namespace

CampaignReport theorem_campaign(const CampaignParams& params) {
  if (params.alphabet_sizes.empty())
    throw Error("campaign needs at least one alphabet size");
  for (int n : params.alphabet_sizes)
    if (n < 2) throw Error("campaign alphabet sizes must be at least 2");
  if (params.k < 2) throw Error("block count k must be at least 2");
  if (params.m_max < 1) throw Error("m_max must be at least 1");
  if (params.prefix_length <
      static_cast<std::size_t>(params.k) * params.m_max)
    throw Error("prefix_length must be at least k * m_max");

  std::vector<int> sizes = params.alphabet_sizes;
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());

  CampaignReport report;
  report.params = params;
  for (int n : sizes) {
    for (int j = 0; j < n; ++j) {
      bool applies = n >= 3 && j % n != 1 && params.k == 3;
      if (params.policy == JPolicy::theorem_only && !applies) continue;
      CampaignCell cell;
      cell.alphabet_size = n;
      cell.j = j;
      cell.theorem_applies = applies;
      report.cells.push_back(std::move(cell));
    }
  }

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= report.cells.size()) return;
      CampaignCell& cell = report.cells[i];
      try {
        run_cell(params, cell);
      } catch (const std::exception& e) {
        cell.status = CellStatus::cell_error;
        cell.occurrences.clear();
        cell.error = e.what();
      }
    }
  };
  unsigned threads = thread_budget(params, report.cells.size());
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  return report;
}

StructureAuditReport audit_length3_structure(const CyclicShiftMorphism& psi,
                                             std::size_t prefix_length) {
  if (prefix_length < 3) throw Error("audit needs a prefix of length at least 3");
  Word w = psi.prefix(prefix_length);
  const Permutation& sigma = psi.sigma();
  Permutation sigma2 = compose(sigma, sigma);

  std::map<std::vector<Symbol>, std::pair<std::size_t, bool>> seen;
  for (std::size_t p = 0; p + 3 <= w.size(); ++p) {
    std::vector<Symbol> f{w[p], w[p + 1], w[p + 2]};
    if (seen.count(f)) continue;
    bool matches = f[1] == sigma(f[0]) && f[2] == sigma2(f[0]);
    seen.emplace(std::move(f), std::pair(p, matches));
  }

  StructureAuditReport report;
  report.alphabet_size = psi.alphabet().size();
  report.prefix_length = prefix_length;
  for (const auto& [symbols, info] : seen) {
    report.entries.push_back(
        StructureAuditEntry{Word(psi.alphabet(), symbols), info.first,
                            info.second});
    if (info.second)
      ++report.conforming;
    else
      ++report.nonconforming;
  }
  return report;
}

}  // namespace twist
