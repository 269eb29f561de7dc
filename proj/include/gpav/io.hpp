#pragma once

// Text and JSON interchange: composition parsing with the c^k shorthand,
// schema (de)serialization for the core objects, check-report rendering,
// OEIS-style b-files, and the persistent Kostka cache.
//
// Error taxonomy matters to the CLI exit codes: malformed input of any kind
// throws ParseError, unreadable or unparseable b-files throw BFileError, and
// std::invalid_argument is reserved for structurally valid objects that fall
// outside a bijection's domain.

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iterator>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gpav/bijections.hpp"
#include "gpav/checks.hpp"
#include "gpav/combinat.hpp"
#include "gpav/genperm.hpp"
#include "gpav/paths.hpp"
#include "gpav/tableau.hpp"

namespace gpav {

using Json = nlohmann::json;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BFileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline long long parse_ll(const std::string& token, const char* what) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(token, &used);
  } catch (const std::exception&) {
    throw ParseError(std::string(what) + ": not an integer: '" + token + "'");
  }
  if (used != token.size())
    throw ParseError(std::string(what) + ": trailing junk in '" + token + "'");
  return v;
}

inline std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

inline std::string strip_spaces(const std::string& text) {
  std::string out;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

inline bool is_decimal(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = s[0] == '-' ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

inline std::vector<int> int_array_field(const Json& j, const char* field) {
  if (!j.is_object() || !j.contains(field) || !j[field].is_array())
    throw ParseError(std::string("expected object with integer array '") + field + "'");
  std::vector<int> out;
  for (const auto& v : j[field]) {
    if (!v.is_number_integer())
      throw ParseError(std::string("'") + field + "' must hold integers");
    out.push_back(v.get<int>());
  }
  return out;
}

inline std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace detail

/// Parse "1,2,2,1" or with repetition shorthand "1,2^3" -> (1,2,2,2).
/// Blank input is the empty composition. Parts must be nonnegative.
inline Composition parse_composition(const std::string& text) {
  const std::string clean = detail::strip_spaces(text);
  std::vector<int> parts;
  if (clean.empty()) return Composition(parts);
  for (const std::string& token : detail::split(clean, ',')) {
    if (token.empty()) throw ParseError("composition: empty part in '" + text + "'");
    long long part = 0, copies = 1;
    if (auto caret = token.find('^'); caret != std::string::npos) {
      part = detail::parse_ll(token.substr(0, caret), "composition part");
      copies = detail::parse_ll(token.substr(caret + 1), "composition repeat count");
    } else {
      part = detail::parse_ll(token, "composition part");
    }
    if (part < 0) throw ParseError("composition: negative part in '" + text + "'");
    if (copies < 0) throw ParseError("composition: negative repeat count in '" + text + "'");
    if (part > 1'000'000 || copies > 1'000'000 ||
        static_cast<long long>(parts.size()) + copies > 1'000'000)
      throw ParseError("composition: too large in '" + text + "'");
    parts.insert(parts.end(), copies, static_cast<int>(part));
  }
  return Composition(parts);
}

/// Comma-separated integers, no shorthand; blank input is the empty list.
inline std::vector<int> parse_int_list(const std::string& text) {
  const std::string clean = detail::strip_spaces(text);
  std::vector<int> out;
  if (clean.empty()) return out;
  for (const std::string& token : detail::split(clean, ','))
    out.push_back(static_cast<int>(detail::parse_ll(token, "integer list entry")));
  return out;
}

// --- schema objects --------------------------------------------------------

inline Json to_json(const GeneralizedPermutation& g) {
  return Json{{"alpha", g.alpha().parts()}, {"beta", g.beta().parts()}, {"word", g.word()}};
}

inline GeneralizedPermutation genperm_from_json(const Json& j) {
  const auto alpha = detail::int_array_field(j, "alpha");
  const auto beta = detail::int_array_field(j, "beta");
  const auto word = detail::int_array_field(j, "word");
  GeneralizedPermutation g;
  try {
    g = GeneralizedPermutation::make(Composition(alpha), word,
                                     static_cast<int>(beta.size()));
  } catch (const std::exception& e) {
    throw ParseError(std::string("generalized permutation: ") + e.what());
  }
  if (g.beta().parts() != beta)
    throw ParseError("generalized permutation: beta does not match the word");
  return g;
}

inline Json to_json(const YoungTableau& t) {
  return Json{{"rows", t.rows()}};
}

inline YoungTableau tableau_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rows") || !j["rows"].is_array())
    throw ParseError("tableau: expected object with 'rows' array");
  std::vector<std::vector<int>> rows;
  for (const auto& r : j["rows"]) {
    if (!r.is_array()) throw ParseError("tableau: each row must be an array");
    rows.emplace_back();
    for (const auto& v : r) {
      if (!v.is_number_integer()) throw ParseError("tableau: entries must be integers");
      rows.back().push_back(v.get<int>());
    }
  }
  try {
    return YoungTableau::make(rows);
  } catch (const std::exception& e) {
    throw ParseError(std::string("tableau: ") + e.what());
  }
}

inline Json to_json(const TableauPair& pair) {
  return Json{{"P", to_json(pair.P)}, {"Q", to_json(pair.Q)}};
}

inline TableauPair pair_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("P") || !j.contains("Q"))
    throw ParseError("tableau pair: expected object with 'P' and 'Q'");
  return TableauPair{tableau_from_json(j["P"]), tableau_from_json(j["Q"])};
}

inline Json to_json(const LatticePath& path) {
  Json steps = Json::array();
  for (int dy : path.dy) steps.push_back(Json::array({1, dy}));
  return Json{{"steps", steps}};
}

inline LatticePath path_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("steps") || !j["steps"].is_array())
    throw ParseError("path: expected object with 'steps' array");
  LatticePath path;
  for (const auto& s : j["steps"]) {
    if (!s.is_array() || s.size() != 2 || !s[0].is_number_integer() ||
        !s[1].is_number_integer())
      throw ParseError("path: each step must be a [dx, dy] integer pair");
    if (s[0].get<int>() != 1) throw ParseError("path: steps must advance by dx = 1");
    path.dy.push_back(s[1].get<int>());
  }
  return path;
}

inline Json count_to_json(const BigCount& value) {
  return Json{{"kind", "count"}, {"value", value.str()}};
}

// --- check reports ---------------------------------------------------------

// elapsed_seconds is deliberately absent: serialized reports must be
// byte-identical across runs with equal inputs.
inline Json report_to_json(const CheckReport& rep) {
  Json ces = Json::array();
  for (const auto& ce : rep.counterexamples)
    ces.push_back(Json{{"params", ce.params}, {"lhs", ce.lhs}, {"rhs", ce.rhs}});
  return Json{{"kind", "check_report"},
              {"name", rep.name},
              {"limit", rep.limit},
              {"parameter_range", rep.parameter_range},
              {"pass", rep.pass},
              {"counterexamples", ces}};
}

inline std::string report_csv_header() { return "name,limit,pass,params,lhs,rhs"; }

inline std::vector<std::string> report_csv_rows(const CheckReport& rep) {
  using detail::csv_quote;
  const std::string lead = csv_quote(rep.name) + "," + std::to_string(rep.limit) + "," +
                           (rep.pass ? "true" : "false");
  if (rep.counterexamples.empty()) return {lead + ",,,"};
  std::vector<std::string> rows;
  for (const auto& ce : rep.counterexamples)
    rows.push_back(lead + "," + csv_quote(ce.params) + "," + csv_quote(ce.lhs) + "," +
                   csv_quote(ce.rhs));
  return rows;
}

inline std::string report_to_csv(const CheckReport& rep) {
  std::string out = report_csv_header() + "\n";
  for (const std::string& row : report_csv_rows(rep)) out += row + "\n";
  return out;
}

inline std::string report_to_text(const CheckReport& rep) {
  std::ostringstream out;
  out << rep.name << ": " << (rep.pass ? "PASS" : "FAIL") << " (limit " << rep.limit
      << ", " << rep.elapsed_seconds << "s)\n";
  out << "  range: " << rep.parameter_range << "\n";
  for (const auto& ce : rep.counterexamples)
    out << "  counterexample: " << ce.params << ": " << ce.lhs << " != " << ce.rhs << "\n";
  return out.str();
}

// --- b-files ---------------------------------------------------------------

/// Read "n a(n)" lines; '#' starts a comment, blank lines are skipped.
/// Throws BFileError when the file cannot be read or a line cannot be parsed.
inline std::vector<std::pair<long long, BigCount>> read_bfile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BFileError("cannot read b-file: " + path);
  std::vector<std::pair<long long, BigCount>> out;
  std::string line;
  long long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::string n_tok, v_tok, extra;
    if (!(fields >> n_tok)) continue;  // blank or comment-only line
    if (!(fields >> v_tok) || (fields >> extra))
      throw BFileError(path + ":" + std::to_string(lineno) +
                       ": expected 'n value' per line");
    if (!detail::is_decimal(n_tok) || !detail::is_decimal(v_tok))
      throw BFileError(path + ":" + std::to_string(lineno) + ": malformed integer");
    out.emplace_back(detail::parse_ll(n_tok, "b-file index"), BigCount(v_tok));
  }
  return out;
}

// --- persistent Kostka cache ----------------------------------------------

inline std::string kostka_cache_file(const std::string& dir) {
  return dir + "/kostka_cache.json";
}

/// Serialize the in-process Kostka memo to dir/kostka_cache.json.
inline bool save_kostka_cache(const std::string& dir) {
  Json entries = Json::object();
  for (const auto& [key, value] : kostka_cache_snapshot())
    entries[detail::join_ints(key.first) + "|" + detail::join_ints(key.second)] =
        value.str();
  std::ofstream out(kostka_cache_file(dir));
  if (!out) return false;
  out << Json{{"kind", "kostka_cache"}, {"entries", entries}}.dump() << "\n";
  return bool(out);
}

/// Load a previously saved cache, revalidating a deterministic 1% sample
/// (at least one entry) against a fresh computation. A missing file is not an
/// error; any malformed entry or sample mismatch discards the whole file.
inline bool load_kostka_cache(const std::string& dir) {
  std::ifstream in(kostka_cache_file(dir));
  if (!in) return false;
  Json doc = Json::parse(in, nullptr, false);
  if (doc.is_discarded() || !doc.is_object() || !doc.contains("entries") ||
      !doc["entries"].is_object())
    return false;

  std::vector<std::pair<detail::KostkaKey, BigCount>> entries;
  for (const auto& [key, value] : doc["entries"].items()) {
    const auto bar = key.find('|');
    if (bar == std::string::npos || !value.is_string() ||
        !detail::is_decimal(value.get<std::string>()))
      return false;
    std::vector<int> shape, content;
    try {
      shape = parse_int_list(key.substr(0, bar));
      content = parse_int_list(key.substr(bar + 1));
    } catch (const ParseError&) {
      return false;
    }
    for (std::size_t i = 0; i + 1 < shape.size(); ++i)
      if (shape[i] < shape[i + 1]) return false;
    for (std::size_t i = 0; i + 1 < content.size(); ++i)
      if (content[i] < content[i + 1]) return false;
    for (int x : shape)
      if (x <= 0) return false;
    for (int x : content)
      if (x <= 0) return false;
    entries.emplace_back(detail::KostkaKey{std::move(shape), std::move(content)},
                         BigCount(value.get<std::string>()));
  }
  if (entries.empty()) return true;

  std::vector<std::size_t> indices(entries.size());
  for (std::size_t i = 0; i < indices.size(); ++i) indices[i] = i;
  std::vector<std::size_t> picked;
  std::mt19937 rng(0x6b6c);  // fixed seed: the sample must be reproducible
  std::sample(indices.begin(), indices.end(), std::back_inserter(picked),
              std::max<std::size_t>(1, entries.size() / 100), rng);
  for (std::size_t i : picked) {
    const auto& [key, value] = entries[i];
    if (kostka_fresh(Partition(key.first), Composition(key.second)) != value)
      return false;
  }
  for (const auto& [key, value] : entries) kostka_cache_insert(key, value);
  return true;
}

}  // namespace gpav
