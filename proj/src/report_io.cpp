#include "twist/report_io.hpp"

#include <algorithm>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "twist/morphism.hpp"

namespace twist {

void ReportMeta::add_param(std::string key, std::string value) {
  params.emplace_back(std::move(key), std::move(value));
}

std::optional<std::string> ReportMeta::param(const std::string& key) const {
  for (const auto& [k, v] : params)
    if (k == key) return v;
  return std::nullopt;
}

std::string utc_timestamp_now() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

namespace {

constexpr const char* kOccurrenceHeader = "start\tm\tk\tj\tN";

std::string params_line(const ReportMeta& meta) {
  std::ostringstream out;
  out << "# params:";
  for (const auto& [k, v] : meta.params) out << ' ' << k << '=' << v;
  out << '\n';
  return out.str();
}

std::string meta_lines(const ReportMeta& meta) {
  std::string out = "# tool_version: " + meta.tool_version + "\n";
  if (meta.generated_at) out += "# generated_at: " + *meta.generated_at + "\n";
  out += params_line(meta);
  return out;
}

int meta_int(const ReportMeta& meta, const std::string& key, int fallback) {
  auto v = meta.param(key);
  if (!v) return fallback;
  try {
    return std::stoi(*v);
  } catch (...) {
    return fallback;
  }
}

void append_occurrence_row(std::string& out, const Occurrence& occ, int j,
                           int alphabet_size) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%zu\t%zu\t%d\t%d\t%d\n", occ.start, occ.m,
                occ.k, j, alphabet_size);
  out += buf;
}

nlohmann::ordered_json occurrence_json(const Occurrence& occ, int j,
                                       int alphabet_size) {
  nlohmann::ordered_json o;
  o["start"] = occ.start;
  o["m"] = occ.m;
  o["k"] = occ.k;
  o["j"] = j;
  o["N"] = alphabet_size;
  return o;
}

nlohmann::ordered_json envelope(const ReportMeta& meta,
                                nlohmann::ordered_json body) {
  nlohmann::ordered_json doc;
  doc["tool_version"] = meta.tool_version;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : meta.params) params[k] = v;
  doc["params"] = std::move(params);
  if (meta.generated_at) doc["generated_at"] = *meta.generated_at;
  doc["body"] = std::move(body);
  return doc;
}

const char* algorithm_name(ScanAlgorithm a) {
  return a == ScanAlgorithm::fast ? "fast" : "naive";
}

}  // namespace

std::string to_tsv(const FreenessReport& report, const ReportMeta& meta) {
  int j = meta_int(meta, "j", -1);
  int n = report.query.delta.degree();
  std::string out = meta_lines(meta);
  out += kOccurrenceHeader;
  out += '\n';
  for (const Occurrence& occ : report.occurrences)
    append_occurrence_row(out, occ, j, n);
  std::ostringstream tail;
  if (report.occurrences.empty()) {
    tail << "# summary: free within range (word_length=" << report.word_length
         << ", m_max=" << report.query.m_max << ")\n";
  } else {
    tail << "# summary: occurrences=" << report.occurrences.size()
         << " word_length=" << report.word_length
         << " minimal_m=" << *report.minimal_m() << "\n";
  }
  out += tail.str();
  return out;
}

std::string to_tsv(const CampaignReport& report, const ReportMeta& meta) {
  std::string out = meta_lines(meta);
  out += kOccurrenceHeader;
  out += '\n';
  for (const CampaignCell& cell : report.cells)
    for (const Occurrence& occ : cell.occurrences)
      append_occurrence_row(out, occ, cell.j, cell.alphabet_size);
  for (const CampaignCell& cell : report.cells) {
    std::ostringstream line;
    line << "# cell: N=" << cell.alphabet_size << " j=" << cell.j
         << " status=" << to_string(cell.status)
         << " occurrences=" << cell.occurrences.size() << " -- "
         << status_text(cell.status);
    if (!cell.error.empty()) line << " (" << cell.error << ")";
    line << '\n';
    out += line.str();
  }
  std::ostringstream tail;
  tail << "# summary: cells=" << report.cells.size()
       << " counterexamples=" << report.counterexample_cells() << "\n";
  out += tail.str();
  return out;
}

std::string to_tsv(const ComplexityProfile& profile,
                   const std::optional<LinearFit>& fit, double entropy,
                   const ReportMeta& meta) {
  std::string out = meta_lines(meta);
  out += "k\tp\tstable\n";
  for (std::size_t k = 1; k <= profile.k_max(); ++k) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%zu\t%llu\t%d\n", k,
                  static_cast<unsigned long long>(profile.count(k)),
                  k <= profile.stable_upto ? 1 : 0);
    out += buf;
  }
  std::ostringstream tail;
  if (fit) {
    tail << "# fit: window=[" << fit->window_lo << "," << fit->window_hi
         << "] slope=" << fit->slope.to_string()
         << " intercept=" << fit->intercept.to_string()
         << " max_residual=" << fit->max_residual.to_string()
         << " exact=" << (fit->exact ? 1 : 0) << "\n";
  } else {
    tail << "# fit: skipped (stable horizon too short for the window)\n";
  }
  if (entropy >= 0.0) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "# entropy: %.6f\n", entropy);
    tail << buf;
  }
  tail << "# summary: word_length=" << profile.word_length
       << " stable_upto=" << profile.stable_upto << "\n";
  out += tail.str();
  return out;
}

std::string to_tsv(const DescentReport& report, const ReportMeta& meta) {
  int j = meta_int(meta, "j", -1);
  int n = meta_int(meta, "N", -1);
  std::string out = meta_lines(meta);
  out += kOccurrenceHeader;
  out += '\n';
  append_occurrence_row(out, report.occurrence, j, n);
  std::ostringstream tail;
  tail << "# descent: start_parity=" << report.start_parity
       << " m_even=" << (report.m_even ? 1 : 0)
       << " aligned=" << (report.aligned ? 1 : 0)
       << " blocks_desubstitute=" << (report.blocks_desubstitute ? 1 : 0)
       << " preimage_is_repetition=" << (report.preimage_is_repetition ? 1 : 0)
       << "\n";
  if (report.preimage) {
    tail << "# preimage: start=" << report.preimage->start
         << " m=" << report.preimage->m << " k=" << report.preimage->k << "\n";
  }
  tail << "# note: " << report.note << "\n";
  out += tail.str();
  return out;
}

std::string to_tsv(const StructureAuditReport& report, const ReportMeta& meta) {
  std::string out = meta_lines(meta);
  out += "factor\tfirst_pos\tmatches_shape\n";
  for (const StructureAuditEntry& e : report.entries) {
    std::ostringstream line;
    line << e.factor.render() << '\t' << e.first_pos << '\t'
         << (e.matches_shape ? 1 : 0) << '\n';
    out += line.str();
  }
  std::ostringstream tail;
  tail << "# summary: distinct_factors=" << report.entries.size()
       << " conforming=" << report.conforming
       << " nonconforming=" << report.nonconforming
       << " prefix_length=" << report.prefix_length << " N=" << report.alphabet_size
       << "\n";
  out += tail.str();
  return out;
}

nlohmann::ordered_json to_json(const FreenessReport& report,
                               const ReportMeta& meta) {
  int j = meta_int(meta, "j", -1);
  int n = report.query.delta.degree();
  nlohmann::ordered_json body;
  body["word_length"] = report.word_length;
  body["k"] = report.query.k;
  body["j"] = j;
  body["N"] = n;
  body["m_min"] = report.query.m_min;
  body["m_max"] = report.query.m_max;
  body["algorithm"] = algorithm_name(report.scan_algorithm);
  body["free_within_range"] = report.free_within_range();
  if (report.minimal_m())
    body["minimal_m"] = *report.minimal_m();
  else
    body["minimal_m"] = nullptr;
  nlohmann::ordered_json occs = nlohmann::ordered_json::array();
  for (const Occurrence& occ : report.occurrences)
    occs.push_back(occurrence_json(occ, j, n));
  body["occurrences"] = std::move(occs);
  return envelope(meta, std::move(body));
}

nlohmann::ordered_json to_json(const CampaignReport& report,
                               const ReportMeta& meta) {
  nlohmann::ordered_json cells = nlohmann::ordered_json::array();
  for (const CampaignCell& cell : report.cells) {
    nlohmann::ordered_json c;
    c["N"] = cell.alphabet_size;
    c["j"] = cell.j;
    c["theorem_applies"] = cell.theorem_applies;
    c["status"] = to_string(cell.status);
    c["status_text"] = status_text(cell.status);
    nlohmann::ordered_json occs = nlohmann::ordered_json::array();
    for (const Occurrence& occ : cell.occurrences)
      occs.push_back(occurrence_json(occ, cell.j, cell.alphabet_size));
    c["occurrences"] = std::move(occs);
    if (!cell.error.empty()) c["error"] = cell.error;
    cells.push_back(std::move(c));
  }
  nlohmann::ordered_json body;
  body["cells"] = std::move(cells);
  body["cell_count"] = report.cells.size();
  body["counterexample_cells"] = report.counterexample_cells();
  return envelope(meta, std::move(body));
}

nlohmann::ordered_json to_json(const ComplexityProfile& profile,
                               const std::optional<LinearFit>& fit,
                               double entropy, const ReportMeta& meta) {
  nlohmann::ordered_json body;
  body["word_length"] = profile.word_length;
  body["k_max"] = profile.k_max();
  body["stable_upto"] = profile.stable_upto;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t k = 1; k <= profile.k_max(); ++k) {
    nlohmann::ordered_json row;
    row["k"] = k;
    row["p"] = profile.count(k);
    row["stable"] = k <= profile.stable_upto;
    rows.push_back(std::move(row));
  }
  body["counts"] = std::move(rows);
  if (fit) {
    nlohmann::ordered_json f;
    f["window_lo"] = fit->window_lo;
    f["window_hi"] = fit->window_hi;
    f["slope"] = fit->slope.to_string();
    f["intercept"] = fit->intercept.to_string();
    f["max_residual"] = fit->max_residual.to_string();
    f["exact"] = fit->exact;
    body["fit"] = std::move(f);
  } else {
    body["fit"] = nullptr;
  }
  if (entropy >= 0.0)
    body["entropy"] = entropy;
  else
    body["entropy"] = nullptr;
  return envelope(meta, std::move(body));
}

nlohmann::ordered_json to_json(const DescentReport& report,
                               const ReportMeta& meta) {
  int j = meta_int(meta, "j", -1);
  int n = meta_int(meta, "N", -1);
  nlohmann::ordered_json body;
  body["occurrence"] = occurrence_json(report.occurrence, j, n);
  body["start_parity"] = report.start_parity;
  body["m_even"] = report.m_even;
  body["aligned"] = report.aligned;
  body["blocks_desubstitute"] = report.blocks_desubstitute;
  body["preimage_is_repetition"] = report.preimage_is_repetition;
  if (report.preimage) {
    nlohmann::ordered_json p;
    p["start"] = report.preimage->start;
    p["m"] = report.preimage->m;
    p["k"] = report.preimage->k;
    body["preimage"] = std::move(p);
  } else {
    body["preimage"] = nullptr;
  }
  nlohmann::ordered_json blocks = nlohmann::ordered_json::array();
  for (const Word& b : report.preimage_blocks) blocks.push_back(b.render());
  body["preimage_blocks"] = std::move(blocks);
  body["note"] = report.note;
  return envelope(meta, std::move(body));
}

nlohmann::ordered_json to_json(const StructureAuditReport& report,
                               const ReportMeta& meta) {
  nlohmann::ordered_json body;
  body["N"] = report.alphabet_size;
  body["prefix_length"] = report.prefix_length;
  body["conforming"] = report.conforming;
  body["nonconforming"] = report.nonconforming;
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (const StructureAuditEntry& e : report.entries) {
    nlohmann::ordered_json o;
    o["factor"] = e.factor.render();
    o["first_pos"] = e.first_pos;
    o["matches_shape"] = e.matches_shape;
    entries.push_back(std::move(o));
  }
  body["entries"] = std::move(entries);
  return envelope(meta, std::move(body));
}

void emit(const std::string& bytes, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << bytes;
    std::cout.flush();
    if (!std::cout) throw Error("failed writing to stdout");
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << bytes;
  out.flush();
  if (!out) throw Error("failed writing '" + path + "'");
}

namespace {

void parse_params_into(ReportMeta& meta, const std::string& text) {
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    auto eq = token.find('=');
    if (eq == std::string::npos) continue;
    meta.add_param(token.substr(0, eq), token.substr(eq + 1));
  }
}

void collect_json_occurrences(const nlohmann::json& node,
                              std::vector<OccurrenceRow>& rows) {
  if (node.is_object()) {
    if (node.contains("start") && node.contains("m") && node.contains("k") &&
        node.contains("j") && node.contains("N")) {
      OccurrenceRow row;
      row.start = node.at("start").get<std::size_t>();
      row.m = node.at("m").get<std::size_t>();
      row.k = node.at("k").get<int>();
      row.j = node.at("j").get<int>();
      row.alphabet_size = node.at("N").get<int>();
      rows.push_back(row);
      return;
    }
    for (const auto& [key, value] : node.items()) {
      (void)key;
      collect_json_occurrences(value, rows);
    }
  } else if (node.is_array()) {
    for (const auto& value : node) collect_json_occurrences(value, rows);
  }
}

ParsedReport parse_json_report(const std::string& bytes) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(bytes);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed JSON report: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("tool_version") || !doc.contains("body"))
    throw Error("JSON report lacks the expected envelope");
  ParsedReport parsed;
  parsed.meta.tool_version = doc.at("tool_version").get<std::string>();
  if (doc.contains("generated_at"))
    parsed.meta.generated_at = doc.at("generated_at").get<std::string>();
  if (doc.contains("params") && doc.at("params").is_object())
    for (const auto& [key, value] : doc.at("params").items())
      parsed.meta.add_param(key, value.is_string()
                                     ? value.get<std::string>()
                                     : value.dump());
  collect_json_occurrences(doc.at("body"), parsed.rows);
  return parsed;
}

ParsedReport parse_tsv_report(const std::string& bytes) {
  ParsedReport parsed;
  std::istringstream in(bytes);
  std::string line;
  bool in_table = false;
  bool saw_meta = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.rfind("# tool_version:", 0) == 0) {
      parsed.meta.tool_version = line.substr(15);
      while (!parsed.meta.tool_version.empty() &&
             parsed.meta.tool_version.front() == ' ')
        parsed.meta.tool_version.erase(0, 1);
      saw_meta = true;
      continue;
    }
    if (line.rfind("# generated_at:", 0) == 0) {
      std::string v = line.substr(15);
      while (!v.empty() && v.front() == ' ') v.erase(0, 1);
      parsed.meta.generated_at = v;
      continue;
    }
    if (line.rfind("# params:", 0) == 0) {
      parse_params_into(parsed.meta, line.substr(9));
      continue;
    }
    if (line[0] == '#') continue;
    if (line == kOccurrenceHeader) {
      in_table = true;
      continue;
    }
    if (!in_table) continue;  // some other table (complexity, audit)
    OccurrenceRow row;
    unsigned long long start = 0, m = 0;
    if (std::sscanf(line.c_str(), "%llu\t%llu\t%d\t%d\t%d", &start, &m, &row.k,
                    &row.j, &row.alphabet_size) != 5)
      throw Error("malformed occurrence row: " + line);
    row.start = static_cast<std::size_t>(start);
    row.m = static_cast<std::size_t>(m);
    parsed.rows.push_back(row);
  }
  if (!saw_meta) throw Error("TSV report lacks a tool_version line");
  return parsed;
}

}  // namespace

ParsedReport parse_report(const std::string& bytes) {
  std::size_t i = 0;
  while (i < bytes.size() &&
         (bytes[i] == ' ' || bytes[i] == '\n' || bytes[i] == '\t' ||
          bytes[i] == '\r'))
    ++i;
  if (i < bytes.size() && bytes[i] == '{') return parse_json_report(bytes);
  return parse_tsv_report(bytes);
}

ParsedReport parse_report_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_report(buf.str());
}

RecheckResult recheck_report(const ParsedReport& report,
                             const std::optional<Word>& word_override) {
  RecheckResult result;
  std::map<int, Word> hosts;
  auto sigma_param = report.meta.param("sigma");
  auto seed_param = report.meta.param("seed");
  auto length_param = report.meta.param("length");
  bool from_file = report.meta.param("source") == std::optional<std::string>("file") ||
                   report.meta.param("input").has_value();

  for (const OccurrenceRow& row : report.rows) {
    ++result.rows_checked;
    std::ostringstream where;
    where << "row (start=" << row.start << ", m=" << row.m << ", k=" << row.k
          << ", j=" << row.j << ", N=" << row.alphabet_size << ")";
    try {
      if (row.alphabet_size < 2 || row.k < 2 || row.m < 1) {
        result.failures.push_back(where.str() + ": malformed fields");
        continue;
      }
      Alphabet alphabet(row.alphabet_size);
      Permutation sigma = Permutation::cyclic(alphabet);
      if (sigma_param) {
        std::string cycles = *sigma_param;
        std::replace(cycles.begin(), cycles.end(), ',', ' ');
        Permutation custom = Permutation::parse_cycles(cycles, alphabet);
        sigma = custom;
      }
      Permutation delta = power(sigma, static_cast<std::uint64_t>(row.j));

      const Word* host = nullptr;
      if (word_override) {
        if (word_override->alphabet().size() != row.alphabet_size) {
          result.failures.push_back(where.str() +
                                    ": supplied word has the wrong alphabet");
          continue;
        }
        host = &*word_override;
      } else {
        auto it = hosts.find(row.alphabet_size);
        if (it == hosts.end()) {
          if (from_file)
            throw Error("report was scanned from a file; supply the word");
          if (!length_param)
            throw Error("report params carry no length; supply the word");
          std::size_t length = std::stoull(*length_param);
          Symbol seed = 0;
          if (seed_param && !seed_param->empty())
            seed = alphabet.symbol((*seed_param)[0]);
          CyclicShiftMorphism psi(sigma, seed);
          it = hosts.emplace(row.alphabet_size, psi.prefix(length)).first;
        }
        host = &it->second;
      }

      std::size_t total = static_cast<std::size_t>(row.k) * row.m;
      if (row.start > host->size() || total > host->size() - row.start) {
        result.failures.push_back(where.str() + ": outside the host word");
        continue;
      }
      auto m = is_strong_repetition(host->factor(row.start, total), row.k, delta);
      if (!m.has_value() || *m != row.m)
        result.failures.push_back(where.str() + ": does not re-verify");
    } catch (const std::exception& e) {
      result.failures.push_back(where.str() + ": " + e.what());
    }
  }
  return result;
}

}  // namespace twist
