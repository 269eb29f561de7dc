// gpav: command-line front end for the pattern-avoidance library.
//
// Exit codes form the scripting contract:
//   0 success
//   1 usage error, malformed input, or unknown check name
//   2 cross-check, verification, round-trip, or b-file value mismatch
//   3 enumeration refused (too large without --force)
//   4 structurally valid input outside a bijection's domain
//   5 unreadable or unparseable b-file

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gpav/checks.hpp"
#include "gpav/io.hpp"

namespace {

using gpav::BigCount;
using gpav::Composition;
using gpav::Json;
using gpav::Partition;
using gpav::Pattern;

enum class Format { kText, kJson, kCsv };

constexpr long long kEnumerationCap = 10;

struct StopEnumeration {};

Composition comp_arg(const std::string& text, const char* what) {
  try {
    return gpav::parse_composition(text);
  } catch (const std::exception& e) {
    throw gpav::ParseError(std::string(what) + ": " + e.what());
  }
}

Partition partition_arg(const std::string& text, const char* what) {
  try {
    return Partition(gpav::parse_composition(text).parts());
  } catch (const std::exception& e) {
    throw gpav::ParseError(std::string(what) + ": " + e.what());
  }
}

Pattern pattern_arg(const std::string& text) {
  try {
    return Pattern::parse(text);
  } catch (const std::exception& e) {
    throw gpav::ParseError(std::string("pattern: ") + e.what());
  }
}

Json read_input_json(const std::string& path) {
  std::string data;
  if (path == "-") {
    data.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(path);
    if (!in) throw gpav::ParseError("cannot read input: " + path);
    data.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  Json j = Json::parse(data, nullptr, false);
  if (j.is_discarded()) throw gpav::ParseError("input is not valid JSON");
  return j;
}

void emit_count(const BigCount& value, Format fmt) {
  switch (fmt) {
    case Format::kJson:
      std::cout << gpav::count_to_json(value).dump() << "\n";
      break;
    case Format::kCsv:
      std::cout << "value\n" << value.str() << "\n";
      break;
    case Format::kText:
      std::cout << value.str() << "\n";
      break;
  }
}

void emit_object(const Json& obj, Format fmt) {
  if (fmt == Format::kCsv)
    std::cout << "item\n" << gpav::detail::csv_quote(obj.dump()) << "\n";
  else
    std::cout << obj.dump() << "\n";
}

void emit_items(const std::vector<Json>& items, Format fmt) {
  switch (fmt) {
    case Format::kJson: {
      Json doc{{"kind", "enumeration"},
               {"count", items.size()},
               {"items", Json(items)}};
      std::cout << doc.dump() << "\n";
      break;
    }
    case Format::kCsv:
      std::cout << "item\n";
      for (const Json& j : items) std::cout << gpav::detail::csv_quote(j.dump()) << "\n";
      break;
    case Format::kText:
      for (const Json& j : items) std::cout << j.dump() << "\n";
      break;
  }
}

int cross_check_failed(const char* label, const BigCount& primary, const BigCount& other) {
  std::cerr << "cross-check failed (" << label << "): " << primary.str()
            << " != " << other.str() << "\n";
  return 2;
}

void require_equal_weight(const Composition& alpha, const Composition& beta) {
  if (alpha.weight() != beta.weight())
    throw gpav::ParseError("alpha and beta must have equal weight");
}

// --- count -----------------------------------------------------------------

struct CountAvoidArgs {
  std::string alpha, beta, pattern, method = "brute";
  bool cross_check = false;
};

int run_count_avoid(const CountAvoidArgs& a, Format fmt) {
  const Composition alpha = comp_arg(a.alpha, "--alpha");
  const Composition beta = comp_arg(a.beta, "--beta");
  const Pattern pi = pattern_arg(a.pattern);
  require_equal_weight(alpha, beta);
  const bool recursive_ok =
      pi.size() == 3 && (pi.str() == "123" || pi.str() == "213");
  if (a.method == "recursive" && !recursive_ok)
    throw gpav::ParseError("--method recursive supports only patterns 123 and 213");
  const BigCount value = a.method == "recursive"
                             ? gpav::count_avoiding_recursive(alpha, beta, pi)
                             : gpav::count_avoiding(alpha, beta, pi);
  if (a.cross_check) {
    const BigCount brute = a.method == "recursive"
                               ? gpav::count_avoiding(alpha, beta, pi)
                               : value;
    BigCount other;
    const char* label;
    if (recursive_ok) {
      other = gpav::count_avoiding_recursive(alpha, beta, pi);
      label = "enumeration vs recursion";
    } else if (pi.size() == 3) {
      other = gpav::kostka(gpav::rectangle(2, static_cast<int>(alpha.weight())),
                           gpav::concat(alpha, beta));
      label = "enumeration vs two-row Kostka";
    } else {
      throw gpav::ParseError("--cross-check needs a length-3 pattern");
    }
    if (brute != other) return cross_check_failed(label, brute, other);
  }
  emit_count(value, fmt);
  return 0;
}

struct CountSkArgs {
  std::string alpha, beta;
  long long cap = 0;
  bool cross_check = false;
};

int run_count_sk(const CountSkArgs& a, Format fmt) {
  const Composition alpha = comp_arg(a.alpha, "--alpha");
  const Composition beta = comp_arg(a.beta, "--beta");
  require_equal_weight(alpha, beta);
  if (a.cap < 0 || a.cap > 1'000'000)
    throw gpav::ParseError("--cap must be between 0 and 1000000");
  const BigCount value = gpav::count_S_k(alpha, beta, static_cast<int>(a.cap) + 1);
  if (a.cross_check) {
    const int m = static_cast<int>(beta.size());
    std::vector<int> content = alpha.parts();
    for (int j = 0; j < m; ++j) content.push_back(static_cast<int>(a.cap) - beta[j]);
    const BigCount other =
        gpav::kostka(std::vector<int>(m, static_cast<int>(a.cap)), content);
    if (value != other)
      return cross_check_failed("enumeration vs rectangular Kostka", value, other);
  }
  emit_count(value, fmt);
  return 0;
}

struct CountKostkaArgs {
  std::string shape, content, method = "recursion";
  bool cross_check = false;
};

int run_count_kostka(const CountKostkaArgs& a, Format fmt) {
  const Partition shape = partition_arg(a.shape, "--shape");
  const Composition content = comp_arg(a.content, "--content");
  const BigCount value = a.method == "enumeration"
                             ? gpav::kostka_by_enumeration(shape, content)
                             : gpav::kostka(shape, content);
  if (a.cross_check) {
    const BigCount rec = gpav::kostka(shape, content);
    const BigCount enu = gpav::kostka_by_enumeration(shape, content);
    if (rec != enu) return cross_check_failed("recursion vs enumeration", rec, enu);
    if (shape.size() == 2 && shape[0] == shape[1] && content.weight() == shape.weight()) {
      const BigCount two = gpav::kostka_two_row(shape[0], content);
      if (rec != two) return cross_check_failed("recursion vs two-row recursion", rec, two);
    }
  }
  emit_count(value, fmt);
  return 0;
}

struct CountCrArgs {
  long long n = 0, k = 0;
  std::string method = "recurrence";
  bool cross_check = false;
};

gpav::CrMethod cr_method_of(const std::string& name) {
  if (name == "enumerate") return gpav::CrMethod::kEnumerate;
  if (name == "recurrence") return gpav::CrMethod::kRecurrence;
  if (name == "riordan_sum") return gpav::CrMethod::kRiordanSum;
  if (name == "catalan_sum") return gpav::CrMethod::kCatalanSum;
  if (name == "difference") return gpav::CrMethod::kDifference;
  throw gpav::ParseError("unknown cr method: " + name);
}

int run_count_cr(const CountCrArgs& a, Format fmt) {
  if (a.k < 0 || a.k > a.n) throw gpav::ParseError("need 0 <= k <= n");
  if (a.method == "enumerate" && a.n > 14)
    throw gpav::ParseError("--method enumerate is limited to n <= 14");
  const BigCount value = gpav::cr_count(a.n, a.k, cr_method_of(a.method));
  if (a.cross_check) {
    const char* names[] = {"recurrence", "riordan_sum", "catalan_sum", "difference"};
    for (const char* name : names) {
      const BigCount other = gpav::cr_count(a.n, a.k, cr_method_of(name));
      if (other != value) return cross_check_failed(name, value, other);
    }
    if (a.n <= kEnumerationCap) {
      const BigCount enu = gpav::cr_count(a.n, a.k, gpav::CrMethod::kEnumerate);
      if (enu != value) return cross_check_failed("enumerate", value, enu);
    }
  }
  emit_count(value, fmt);
  return 0;
}

struct CountSimpleArgs {
  std::string arg;
  bool cross_check = false;
};

int run_count_multinomial(const CountSimpleArgs& a, Format fmt) {
  const Composition content = comp_arg(a.arg, "--content");
  const BigCount value = gpav::multinomial(content);
  if (a.cross_check) {
    if (content.weight() > 12)
      throw gpav::ParseError("--cross-check is limited to weight <= 12");
    BigCount sum = 0;
    for (const Partition& lambda : gpav::partitions(content.weight()))
      sum += gpav::hook_length_count(lambda) * gpav::kostka(lambda, content);
    if (sum != value)
      return cross_check_failed("multinomial vs hook-Kostka sum", value, sum);
  }
  emit_count(value, fmt);
  return 0;
}

int run_count_hook(const CountSimpleArgs& a, Format fmt) {
  const Partition shape = partition_arg(a.arg, "--shape");
  const BigCount value = gpav::hook_length_count(shape);
  if (a.cross_check) {
    if (shape.weight() > 12)
      throw gpav::ParseError("--cross-check is limited to weight <= 12");
    const Composition standard(std::vector<int>(shape.weight(), 1));
    const BigCount other = gpav::kostka_by_enumeration(shape, standard);
    if (value != other)
      return cross_check_failed("hook lengths vs tableau enumeration", value, other);
  }
  emit_count(value, fmt);
  return 0;
}

// --- enumerate -------------------------------------------------------------

struct EnumArgs {
  std::string alpha, beta, shape, content, avoid;
  long long n = 0, k = 0, limit = 0;
  bool force = false;
};

int refuse_enumeration(const char* what, long long size) {
  std::cerr << "refusing to enumerate: " << what << " " << size << " exceeds "
            << kEnumerationCap << " (use --force)\n";
  return 3;
}

int run_enumerate_genperms(const EnumArgs& a, Format fmt) {
  const Composition alpha = comp_arg(a.alpha, "--alpha");
  const Composition beta = comp_arg(a.beta, "--beta");
  require_equal_weight(alpha, beta);
  if (alpha.weight() > kEnumerationCap && !a.force)
    return refuse_enumeration("class weight", alpha.weight());
  const bool filtered = !a.avoid.empty();
  const Pattern pi = filtered ? pattern_arg(a.avoid) : Pattern{1};
  const auto starts = gpav::GeneralizedPermutation::block_starts_of(alpha);
  std::vector<Json> items;
  try {
    gpav::for_each_word(alpha, beta, [&](const std::vector<int>& w) {
      if (filtered && gpav::word_contains_pattern(w, starts, pi)) return;
      items.push_back(Json{{"alpha", alpha.parts()}, {"beta", beta.parts()}, {"word", w}});
      if (a.limit > 0 && static_cast<long long>(items.size()) >= a.limit)
        throw StopEnumeration{};
    });
  } catch (const StopEnumeration&) {
  }
  emit_items(items, fmt);
  return 0;
}

int run_enumerate_ssyt(const EnumArgs& a, Format fmt) {
  const Partition shape = partition_arg(a.shape, "--shape");
  const Composition content = comp_arg(a.content, "--content");
  if (shape.weight() > kEnumerationCap && !a.force)
    return refuse_enumeration("shape weight", shape.weight());
  if (shape.weight() != content.weight())
    throw gpav::ParseError("shape and content must have equal weight");
  std::vector<Json> items;
  try {
    gpav::for_each_ssyt(shape, content, [&](const std::vector<std::vector<int>>& rows) {
      items.push_back(Json{{"rows", rows}});
      if (a.limit > 0 && static_cast<long long>(items.size()) >= a.limit)
        throw StopEnumeration{};
    });
  } catch (const StopEnumeration&) {
  }
  emit_items(items, fmt);
  return 0;
}

int run_enumerate_paths(const EnumArgs& a, Format fmt) {
  if (a.k < 0 || a.k > a.n) throw gpav::ParseError("need 0 <= k <= n");
  if (a.n > kEnumerationCap && !a.force) return refuse_enumeration("path index n =", a.n);
  std::vector<Json> items;
  try {
    gpav::for_each_cr(a.n, a.k, [&](const gpav::LatticePath& p) {
      items.push_back(gpav::to_json(p));
      if (a.limit > 0 && static_cast<long long>(items.size()) >= a.limit)
        throw StopEnumeration{};
    });
  } catch (const StopEnumeration&) {
  }
  emit_items(items, fmt);
  return 0;
}

// --- map -------------------------------------------------------------------

struct MapArgs {
  std::string in = "-";
  long long d = 0, n = 0, m = 0, k = 0;
  bool verify = false;
  bool n_set = false, m_set = false;
};

int round_trip_failed(const char* what) {
  std::cerr << "round trip failed: " << what << "\n";
  return 2;
}

int run_map_rsk(const MapArgs& a, Format fmt) {
  const auto g = gpav::genperm_from_json(read_input_json(a.in));
  const gpav::TableauPair pair = gpav::rsk_forward(g);
  emit_object(gpav::to_json(pair), fmt);
  if (a.verify) {
    const auto back = gpav::rsk_inverse(pair, g.alphabet_size(), g.block_count());
    if (back.word() != g.word() || !(back.alpha() == g.alpha()))
      return round_trip_failed("inverse insertion does not restore the input");
  }
  return 0;
}

int run_map_rsk_inv(const MapArgs& a, Format fmt) {
  const gpav::TableauPair pair = gpav::pair_from_json(read_input_json(a.in));
  const auto g = gpav::rsk_inverse(pair, static_cast<int>(a.m), static_cast<int>(a.n));
  emit_object(gpav::to_json(g), fmt);
  if (a.verify) {
    const gpav::TableauPair again = gpav::rsk_forward(g);
    if (!(again == pair)) return round_trip_failed("insertion does not restore the pair");
  }
  return 0;
}

int run_map_boxplus(const MapArgs& a, Format fmt) {
  if (a.verify) throw gpav::ParseError("--verify is not available: the join has no inverse");
  const gpav::TableauPair pair = gpav::pair_from_json(read_input_json(a.in));
  const int m = a.m_set ? static_cast<int>(a.m) : pair.P.max_entry();
  const int n = a.n_set ? static_cast<int>(a.n) : pair.Q.max_entry();
  emit_object(gpav::to_json(gpav::boxplus(pair.P, pair.Q, m, n)), fmt);
  return 0;
}

int run_map_theta(const MapArgs& a, Format fmt) {
  if (a.d <= 0) throw gpav::ParseError("--d must be a positive width");
  const gpav::TableauPair pair = gpav::pair_from_json(read_input_json(a.in));
  const int n = a.n_set ? static_cast<int>(a.n) : pair.P.max_entry();
  const int m = a.m_set
                    ? static_cast<int>(a.m)
                    : std::max<int>(pair.Q.max_entry(), static_cast<int>(pair.Q.row_count()));
  const gpav::YoungTableau t =
      gpav::theta(pair.P, pair.Q, static_cast<int>(a.d), n, m);
  emit_object(gpav::to_json(t), fmt);
  if (a.verify) {
    const gpav::TableauPair back = gpav::theta_inverse(t, n, m);
    if (!(back == pair)) return round_trip_failed("unfilling does not restore the pair");
  }
  return 0;
}

int run_map_theta_inv(const MapArgs& a, Format fmt) {
  const gpav::YoungTableau t = gpav::tableau_from_json(read_input_json(a.in));
  const int m = static_cast<int>(t.row_count());
  const int n = a.n_set ? static_cast<int>(a.n) : std::max(t.max_entry() - m, 0);
  const gpav::TableauPair pair = gpav::theta_inverse(t, n, m);
  emit_object(gpav::to_json(pair), fmt);
  if (a.verify && !t.empty()) {
    const int d = static_cast<int>(t.rows()[0].size());
    if (!(gpav::theta(pair.P, pair.Q, d, n, m) == t))
      return round_trip_failed("refilling does not restore the tableau");
  }
  return 0;
}

int run_map_path_to_ssyt(const MapArgs& a, Format fmt) {
  const gpav::LatticePath p = gpav::path_from_json(read_input_json(a.in));
  const gpav::YoungTableau t = gpav::path_to_tableau(p, a.n, a.k);
  emit_object(gpav::to_json(t), fmt);
  if (a.verify) {
    const gpav::CrPathWithSize back = gpav::tableau_to_path(t);
    if (back.path != p || back.n != a.n || back.k != a.k)
      return round_trip_failed("rebuilt path differs");
  }
  return 0;
}

int run_map_ssyt_to_path(const MapArgs& a, Format fmt) {
  const gpav::YoungTableau t = gpav::tableau_from_json(read_input_json(a.in));
  const gpav::CrPathWithSize r = gpav::tableau_to_path(t);
  emit_object(gpav::to_json(r.path), fmt);
  if (a.verify) {
    if (!(gpav::path_to_tableau(r.path, r.n, r.k) == t))
      return round_trip_failed("rebuilt tableau differs");
  }
  return 0;
}

// --- verify ----------------------------------------------------------------

int run_verify(const std::string& name, long long max_n, Format fmt) {
  std::vector<std::string> names;
  if (name == "all") {
    names = gpav::check_names();
  } else {
    const auto all = gpav::check_names();
    if (std::find(all.begin(), all.end(), name) == all.end())
      throw gpav::ParseError("unknown check: " + name);
    names.push_back(name);
  }
  std::vector<gpav::CheckReport> reports;
  bool all_pass = true;
  for (const std::string& check : names) {
    reports.push_back(gpav::run_check(check, static_cast<int>(max_n)));
    all_pass = all_pass && reports.back().pass;
  }
  switch (fmt) {
    case Format::kJson: {
      if (reports.size() == 1) {
        std::cout << gpav::report_to_json(reports[0]).dump() << "\n";
      } else {
        Json docs = Json::array();
        for (const auto& rep : reports) docs.push_back(gpav::report_to_json(rep));
        std::cout << Json{{"kind", "verification"}, {"pass", all_pass}, {"reports", docs}}.dump()
                  << "\n";
      }
      break;
    }
    case Format::kCsv: {
      std::cout << gpav::report_csv_header() << "\n";
      for (const auto& rep : reports)
        for (const std::string& row : gpav::report_csv_rows(rep)) std::cout << row << "\n";
      break;
    }
    case Format::kText: {
      int passed = 0;
      for (const auto& rep : reports) {
        std::cout << gpav::report_to_text(rep);
        passed += rep.pass ? 1 : 0;
      }
      if (reports.size() > 1)
        std::cout << passed << "/" << reports.size() << " checks passed\n";
      break;
    }
  }
  return all_pass ? 0 : 2;
}

// --- table -----------------------------------------------------------------

int run_table_cr(long long rows, Format fmt) {
  if (rows < 1) throw gpav::ParseError("--rows must be positive");
  std::vector<std::vector<BigCount>> triangle;
  for (long long n = 0; n < rows; ++n) {
    triangle.emplace_back();
    for (long long k = 0; k <= n; ++k)
      triangle.back().push_back(gpav::cr_count(n, k, gpav::CrMethod::kRecurrence));
  }
  switch (fmt) {
    case Format::kJson: {
      Json out = Json::array();
      for (const auto& row : triangle) {
        Json r = Json::array();
        for (const BigCount& v : row) r.push_back(v.str());
        out.push_back(r);
      }
      std::cout << Json{{"kind", "table"}, {"name", "cr"}, {"rows", out}}.dump() << "\n";
      break;
    }
    case Format::kCsv:
      std::cout << "n,k,value\n";
      for (std::size_t n = 0; n < triangle.size(); ++n)
        for (std::size_t k = 0; k < triangle[n].size(); ++k)
          std::cout << n << "," << k << "," << triangle[n][k].str() << "\n";
      break;
    case Format::kText:
      for (const auto& row : triangle) {
        for (std::size_t k = 0; k < row.size(); ++k)
          std::cout << (k ? "," : "") << row[k].str();
        std::cout << "\n";
      }
      break;
  }
  return 0;
}

struct TableSeqArgs {
  std::string seq;
  long long count = 0;
  std::string bfile;
};

int run_table_seq(const TableSeqArgs& a, Format fmt) {
  BigCount (*gen)(long long) = nullptr;
  if (a.seq == "catalan")
    gen = [](long long n) { return gpav::catalan(n); };
  else if (a.seq == "motzkin")
    gen = [](long long n) { return gpav::motzkin(n); };
  else if (a.seq == "riordan")
    gen = [](long long n) { return gpav::riordan(n); };
  else
    throw gpav::ParseError("unknown sequence: " + a.seq +
                           " (expected catalan, motzkin, or riordan)");
  if (a.count < 1) throw gpav::ParseError("--count must be positive");
  std::vector<BigCount> values;
  for (long long n = 0; n < a.count; ++n) values.push_back(gen(n));

  if (!a.bfile.empty()) {
    const auto lines = gpav::read_bfile(a.bfile);
    long long checked = 0;
    std::vector<std::string> mismatches;
    for (const auto& [n, v] : lines) {
      if (n < 0 || n >= a.count) continue;
      ++checked;
      if (values[n] != v)
        mismatches.push_back("n=" + std::to_string(n) + ": file " + v.str() +
                             " != computed " + values[n].str());
    }
    const bool pass = mismatches.empty();
    for (const std::string& m : mismatches) std::cerr << "b-file mismatch: " << m << "\n";
    switch (fmt) {
      case Format::kJson:
        std::cout << Json{{"kind", "bfile_check"},
                          {"sequence", a.seq},
                          {"checked", checked},
                          {"pass", pass}}
                         .dump()
                  << "\n";
        break;
      case Format::kCsv:
        std::cout << "sequence,checked,pass\n"
                  << a.seq << "," << checked << "," << (pass ? "true" : "false") << "\n";
        break;
      case Format::kText:
        std::cout << "b-file " << (pass ? "OK" : "MISMATCH") << ": " << checked
                  << " values checked\n";
        break;
    }
    return pass ? 0 : 2;
  }

  switch (fmt) {
    case Format::kJson: {
      Json vals = Json::array();
      for (const BigCount& v : values) vals.push_back(v.str());
      std::cout << Json{{"kind", "sequence"}, {"name", a.seq}, {"values", vals}}.dump()
                << "\n";
      break;
    }
    case Format::kCsv:
      std::cout << "n,value\n";
      for (long long n = 0; n < a.count; ++n)
        std::cout << n << "," << values[n].str() << "\n";
      break;
    case Format::kText:
      for (long long n = 0; n < a.count; ++n)
        std::cout << (n ? "," : "") << values[n].str();
      std::cout << "\n";
      break;
  }
  return 0;
}

template <typename F>
int guarded(F&& action) {
  try {
    return action();
  } catch (const gpav::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const gpav::BFileError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pattern avoidance of generalized permutations"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string cache_dir;
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--cache-dir", cache_dir, "directory for the persistent Kostka cache");

  // count
  auto* count = app.add_subcommand("count", "closed-form and enumerative counts");
  count->require_subcommand(1);

  CountAvoidArgs avoid_args;
  auto* c_avoid = count->add_subcommand("avoid", "elements avoiding a pattern");
  c_avoid->add_option("--alpha", avoid_args.alpha, "block composition")->required();
  c_avoid->add_option("--beta", avoid_args.beta, "letter content")->required();
  c_avoid->add_option("--pattern", avoid_args.pattern, "pattern digits, e.g. 321")->required();
  c_avoid->add_option("--method", avoid_args.method, "brute or recursive")
      ->check(CLI::IsMember({"brute", "recursive"}));
  c_avoid->add_flag("--cross-check", avoid_args.cross_check,
                    "compare independent computations");

  CountSkArgs sk_args;
  auto* c_sk = count->add_subcommand("sk", "elements with bounded weakly increasing runs");
  c_sk->add_option("--alpha", sk_args.alpha, "block composition")->required();
  c_sk->add_option("--beta", sk_args.beta, "letter content")->required();
  c_sk->add_option("--cap", sk_args.cap, "longest allowed weakly increasing subsequence")
      ->required();
  c_sk->add_flag("--cross-check", sk_args.cross_check, "compare with the Kostka form");

  CountKostkaArgs kostka_args;
  auto* c_kostka = count->add_subcommand("kostka", "semistandard tableaux of a shape and content");
  c_kostka->add_option("--shape", kostka_args.shape, "partition")->required();
  c_kostka->add_option("--content", kostka_args.content, "composition")->required();
  c_kostka->add_option("--method", kostka_args.method, "recursion or enumeration")
      ->check(CLI::IsMember({"recursion", "enumeration"}));
  c_kostka->add_flag("--cross-check", kostka_args.cross_check,
                     "compare independent computations");

  CountCrArgs cr_args;
  auto* c_cr = count->add_subcommand("cr", "mixed-step path counts");
  c_cr->add_option("--n", cr_args.n, "row index")->required();
  c_cr->add_option("--k", cr_args.k, "column index")->required();
  c_cr->add_option("--method", cr_args.method,
                   "enumerate, recurrence, riordan_sum, catalan_sum, or difference")
      ->check(CLI::IsMember(
          {"enumerate", "recurrence", "riordan_sum", "catalan_sum", "difference"}));
  c_cr->add_flag("--cross-check", cr_args.cross_check, "compare all methods");

  CountSimpleArgs multinomial_args;
  auto* c_multi = count->add_subcommand("multinomial", "words with a given content");
  c_multi->add_option("--content", multinomial_args.arg, "composition")->required();
  c_multi->add_flag("--cross-check", multinomial_args.cross_check,
                    "compare with the hook-Kostka sum");

  CountSimpleArgs hook_args;
  auto* c_hook = count->add_subcommand("hook", "standard tableaux via hook lengths");
  c_hook->add_option("--shape", hook_args.arg, "partition")->required();
  c_hook->add_flag("--cross-check", hook_args.cross_check,
                   "compare with direct enumeration");

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "list objects explicitly");
  enumerate->require_subcommand(1);

  EnumArgs eg_args;
  auto* e_genperms = enumerate->add_subcommand("genperms", "a class of generalized permutations");
  e_genperms->add_option("--alpha", eg_args.alpha, "block composition")->required();
  e_genperms->add_option("--beta", eg_args.beta, "letter content")->required();
  e_genperms->add_option("--avoid", eg_args.avoid, "keep only elements avoiding this pattern");
  e_genperms->add_option("--limit", eg_args.limit, "emit at most this many items");
  e_genperms->add_flag("--force", eg_args.force, "enumerate beyond the size guard");

  EnumArgs es_args;
  auto* e_ssyt = enumerate->add_subcommand("ssyt", "semistandard tableaux");
  e_ssyt->add_option("--shape", es_args.shape, "partition")->required();
  e_ssyt->add_option("--content", es_args.content, "composition")->required();
  e_ssyt->add_option("--limit", es_args.limit, "emit at most this many items");
  e_ssyt->add_flag("--force", es_args.force, "enumerate beyond the size guard");

  EnumArgs ep_args;
  auto* e_paths = enumerate->add_subcommand("paths", "mixed-step lattice paths");
  e_paths->add_option("--n", ep_args.n, "row index")->required();
  e_paths->add_option("--k", ep_args.k, "column index")->required();
  e_paths->add_option("--limit", ep_args.limit, "emit at most this many items");
  e_paths->add_flag("--force", ep_args.force, "enumerate beyond the size guard");

  // map
  auto* map_cmd = app.add_subcommand("map", "apply a bijection to one object");
  map_cmd->require_subcommand(1);
  MapArgs map_args;
  struct MapSpec {
    const char* name;
    const char* help;
    int (*run)(const MapArgs&, Format);
  };
  const std::vector<MapSpec> map_specs = {
      {"rsk", "generalized permutation -> tableau pair", &run_map_rsk},
      {"rsk-inv", "tableau pair -> generalized permutation", &run_map_rsk_inv},
      {"boxplus", "two-row pair -> joined rectangle", &run_map_boxplus},
      {"theta", "tableau pair -> rectangular tableau", &run_map_theta},
      {"theta-inv", "rectangular tableau -> tableau pair", &run_map_theta_inv},
      {"path-to-ssyt", "lattice path -> two-row tableau", &run_map_path_to_ssyt},
      {"ssyt-to-path", "two-row tableau -> lattice path", &run_map_ssyt_to_path},
  };
  std::map<std::string, int (*)(const MapArgs&, Format)> map_runners;
  for (const MapSpec& spec : map_specs) {
    auto* sub = map_cmd->add_subcommand(spec.name, spec.help);
    sub->add_option("--in", map_args.in, "input file, or - for stdin");
    sub->add_option("--d", map_args.d, "rectangle width");
    sub->add_option("--n", map_args.n, "first alphabet size")
        ->each([&](const std::string&) { map_args.n_set = true; });
    sub->add_option("--m", map_args.m, "second alphabet size")
        ->each([&](const std::string&) { map_args.m_set = true; });
    sub->add_option("--k", map_args.k, "path column index");
    sub->add_flag("--verify", map_args.verify, "round-trip the result");
    map_runners[spec.name] = spec.run;
  }

  // verify
  auto* verify = app.add_subcommand("verify", "run registered identity checks");
  std::string check_name;
  long long max_n = -1;
  verify->add_option("name", check_name, "check name, or all")->required();
  verify->add_option("--max-n", max_n, "override the default size limit");

  // table
  auto* table = app.add_subcommand("table", "print tables and sequences");
  long long table_rows = 0;
  auto* t_cr = table->add_subcommand("cr", "triangle of path counts");
  t_cr->add_option("--rows", table_rows, "number of rows")->required();
  TableSeqArgs seq_args;
  table->add_option("--seq", seq_args.seq, "catalan, motzkin, or riordan");
  table->add_option("--count", seq_args.count, "number of terms");
  table->add_option("--bfile", seq_args.bfile, "compare against an OEIS b-file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  const Format fmt = format == "json"   ? Format::kJson
                     : format == "csv"  ? Format::kCsv
                                        : Format::kText;
  if (!cache_dir.empty()) gpav::load_kostka_cache(cache_dir);

  const int rc = guarded([&]() -> int {
    if (c_avoid->parsed()) return run_count_avoid(avoid_args, fmt);
    if (c_sk->parsed()) return run_count_sk(sk_args, fmt);
    if (c_kostka->parsed()) return run_count_kostka(kostka_args, fmt);
    if (c_cr->parsed()) return run_count_cr(cr_args, fmt);
    if (c_multi->parsed()) return run_count_multinomial(multinomial_args, fmt);
    if (c_hook->parsed()) return run_count_hook(hook_args, fmt);
    if (e_genperms->parsed()) return run_enumerate_genperms(eg_args, fmt);
    if (e_ssyt->parsed()) return run_enumerate_ssyt(es_args, fmt);
    if (e_paths->parsed()) return run_enumerate_paths(ep_args, fmt);
    if (map_cmd->parsed())
      for (const auto& [name, runner] : map_runners)
        if (map_cmd->got_subcommand(name)) return runner(map_args, fmt);
    if (verify->parsed()) return run_verify(check_name, max_n, fmt);
    if (t_cr->parsed()) return run_table_cr(table_rows, fmt);
    if (table->parsed()) {
      if (seq_args.seq.empty())
        throw gpav::ParseError("table needs either the cr subcommand or --seq");
      return run_table_seq(seq_args, fmt);
    }
    throw gpav::ParseError("no subcommand given");
  });

  if (!cache_dir.empty()) gpav::save_kostka_cache(cache_dir);
  return rc;
}
