// Acceptance gate: one PASS/FAIL line per criterion with its wall-clock time.
// Every comparison is exact-integer; the bounded criteria also fail when they
// run past their time budget. Exit status 0 only if all fourteen pass.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "gpav/bijections.hpp"
#include "gpav/checks.hpp"
#include "gpav/combinat.hpp"
#include "gpav/genperm.hpp"
#include "gpav/io.hpp"
#include "gpav/paths.hpp"
#include "gpav/tableau.hpp"

using namespace gpav;

namespace {

void note(std::ostringstream& why, const std::string& what) {
  if (!why.str().empty()) why << "; ";
  why << what;
}

bool eq(std::ostringstream& why, const BigCount& lhs, const BigCount& rhs,
        const std::string& what) {
  if (lhs == rhs) return true;
  note(why, what + ": " + lhs.str() + " != " + rhs.str());
  return false;
}

bool registered(std::ostringstream& why, const char* name, int limit) {
  const CheckReport rep = run_check(name, limit);
  if (rep.pass) return true;
  std::string detail = std::string(name) + " failed";
  if (!rep.counterexamples.empty()) {
    const Counterexample& ce = rep.counterexamples.front();
    detail += " (first: " + ce.params + ": " + ce.lhs + " != " + ce.rhs + ")";
  }
  note(why, detail);
  return false;
}

Composition repeat_part(int part, int copies) {
  return Composition(std::vector<int>(static_cast<std::size_t>(copies), part));
}

}  // namespace

int main() {
  using Clock = std::chrono::steady_clock;
  int failed = 0;

  const auto criterion = [&](int index, const std::string& label, double budget,
                             const std::function<bool(std::ostringstream&)>& body) {
    std::ostringstream why;
    const auto start = Clock::now();
    bool ok = false;
    try {
      ok = body(why);
    } catch (const std::exception& e) {
      ok = false;
      note(why, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (budget > 0 && seconds >= budget) {
      ok = false;
      std::ostringstream over;
      over << "runtime " << std::fixed << std::setprecision(2) << seconds
           << "s exceeds budget " << budget << "s";
      note(why, over.str());
    }
    std::cout << (ok ? "PASS" : "FAIL") << " " << std::setw(2) << index << "  " << label
              << "  (" << std::fixed << std::setprecision(2) << seconds << "s)\n";
    if (!ok) {
      ++failed;
      if (!why.str().empty()) std::cout << "         " << why.str() << "\n";
    }
  };

  criterion(1, "single-entry classes counted by Catalan numbers [thm_1_2]", 60.0,
            [](std::ostringstream& why) {
              bool ok = registered(why, "thm_1_2", 7);
              ok &= eq(why, catalan(7), 429, "catalan(7)");
              ok &= eq(why,
                       count_avoiding(repeat_part(1, 7), repeat_part(1, 7),
                                      Pattern::parse("123")),
                       429, "|S_(1^7)(1^7)(123)|");
              return ok;
            });

  criterion(2, "all six patterns counted by the two-row tableau count [thm_1_3]", 180.0,
            [](std::ostringstream& why) { return registered(why, "thm_1_3", 6); });

  criterion(3, "peeling recursion equals brute force for 123 and 213 [lemma_2_4]", 0,
            [](std::ostringstream& why) { return registered(why, "lemma_2_4", 6); });

  criterion(4, "Catalan, Motzkin, Riordan binomial identities [thm_3_1]", 0,
            [](std::ostringstream& why) { return registered(why, "thm_3_1", 15); });

  criterion(
      5, "path counts: enumeration, tableaux, recurrence, closed forms [thm_3_3, cor_3_4_3_5]",
      0, [](std::ostringstream& why) {
        bool ok = registered(why, "thm_3_3", 8);
        ok &= registered(why, "cor_3_4_3_5", 8);
        for (int n = 0; n <= 8; ++n) {
          for (int k = 0; k <= n; ++k) {
            const std::string at = "(" + std::to_string(n) + "," + std::to_string(k) + ")";
            const BigCount enumerated = cr_count(n, k, CrMethod::kEnumerate);
            std::vector<int> content(static_cast<std::size_t>(2 * k), 1);
            content.insert(content.end(), static_cast<std::size_t>(n - k), 2);
            ok &= eq(why, enumerated, kostka(rectangle(2, n), Composition(content)),
                     at + " vs tableau count");
            ok &= eq(why, enumerated, cr_count(n, k, CrMethod::kRecurrence),
                     at + " vs recurrence");
            ok &= eq(why, enumerated, cr_count(n, k, CrMethod::kRiordanSum),
                     at + " vs Riordan sum");
            ok &= eq(why, enumerated, cr_count(n, k, CrMethod::kCatalanSum),
                     at + " vs Catalan sum");
            ok &= eq(why, enumerated, cr_count(n, k, CrMethod::kDifference),
                     at + " vs difference array");
          }
          ok &= eq(why, cr_count(n, 0, CrMethod::kRecurrence), riordan(n),
                   "left boundary n=" + std::to_string(n));
          ok &= eq(why, cr_count(n, n, CrMethod::kRecurrence), catalan(n),
                   "diagonal n=" + std::to_string(n));
          if (n < 8)
            ok &= eq(why, cr_count(n + 1, 1, CrMethod::kRecurrence), motzkin(n),
                     "second column n=" + std::to_string(n));
        }
        ok &= eq(why, cr_count(4, 2, CrMethod::kRecurrence), 6, "CR(4,2)");
        return ok;
      });

  criterion(6, "doubled-letter families: Riordan and Motzkin values [thm_3_6]", 120.0,
            [](std::ostringstream& why) {
              bool ok = registered(why, "thm_3_6", 3);
              const BigCount riordan_pins[] = {1, 3, 15};
              const BigCount motzkin_pins[] = {2, 9, 51};
              for (int n = 1; n <= 3; ++n) {
                const Composition twos = repeat_part(2, n);
                std::vector<int> mixed{1};
                mixed.insert(mixed.end(), static_cast<std::size_t>(n), 2);
                const Composition one_twos(mixed);
                ok &= eq(why, riordan(2 * n), riordan_pins[n - 1],
                         "riordan(" + std::to_string(2 * n) + ")");
                ok &= eq(why, motzkin(2 * n), motzkin_pins[n - 1],
                         "motzkin(" + std::to_string(2 * n) + ")");
                for (const Pattern& pi : Pattern::all_s3()) {
                  ok &= eq(why, count_avoiding(twos, twos, pi), riordan_pins[n - 1],
                           "|S_(2^" + std::to_string(n) + ")(" + pi.str() + ")|");
                  ok &= eq(why, count_avoiding(one_twos, one_twos, pi),
                           motzkin_pins[n - 1],
                           "|S_(1,2^" + std::to_string(n) + ")(" + pi.str() + ")|");
                }
              }
              return ok;
            });

  criterion(7, "grid filling is a bijection; worked example bit-exact [thm_4_3]", 0,
            [](std::ostringstream& why) {
              bool ok = registered(why, "thm_4_3", 6);
              const auto p = YoungTableau::make({{1, 1, 2, 3}, {2, 3, 4}, {3, 4}});
              const auto q = YoungTableau::make({{1, 1, 1, 5}, {2, 2, 4}, {3, 5}});
              const auto t = YoungTableau::make({{1, 1, 2, 3, 5},
                                                 {2, 3, 4, 6, 6},
                                                 {3, 4, 5, 7, 7},
                                                 {5, 6, 7, 8, 8},
                                                 {6, 7, 8, 9, 9}});
              if (!(theta(p, q, 5, 4, 5) == t)) {
                note(why, "forward golden differs: " + theta(p, q, 5, 4, 5).str());
                ok = false;
              }
              const TableauPair back = theta_inverse(t, 4, 5);
              if (!(back.P == p) || !(back.Q == q)) {
                note(why, "inverse golden differs: " + back.P.str() + " / " + back.Q.str());
                ok = false;
              }
              return ok;
            });

  criterion(8, "class sizes via paired and rectangular tableau counts [thm_1_4]", 0,
            [](std::ostringstream& why) { return registered(why, "thm_1_4", 5); });

  criterion(9, "the join embeds 321-avoiders into two-row tableaux [lemma_2_3]", 0,
            [](std::ostringstream& why) {
              bool ok = registered(why, "lemma_2_3", 6);
              const auto p = YoungTableau::make({{1, 1, 3}, {2, 4}});
              const auto q = YoungTableau::make({{1, 3, 4}, {2, 5}});
              const auto joined = YoungTableau::make({{1, 1, 3, 5, 8}, {2, 4, 6, 7, 9}});
              if (!(boxplus(p, q, 4, 5) == joined)) {
                note(why, "join golden differs: " + boxplus(p, q, 4, 5).str());
                ok = false;
              }
              return ok;
            });

  criterion(10, "bounded-run counts via rectangular tableaux [cor_5_2, cor_5_4, thm_5_1_5_2]",
            0, [](std::ostringstream& why) {
              bool ok = registered(why, "cor_5_2", 6);
              ok &= registered(why, "cor_5_4", 8);
              ok &= registered(why, "thm_5_1_5_2", 3);
              return ok;
            });

  criterion(11, "321-avoiders with short runs: Catalan times Riordan [cor_5_6]", 30.0,
            [](std::ostringstream& why) {
              bool ok = registered(why, "cor_5_6", 4);
              const BigCount pins[] = {2, 5, 42};
              const Pattern pi = Pattern::parse("321");
              for (int n = 2; n <= 4; ++n) {
                const Composition alpha = repeat_part(1, 2 * n);
                const Composition beta = repeat_part(2, n);
                const auto starts = GeneralizedPermutation::block_starts_of(alpha);
                BigCount count = 0;
                for_each_word(alpha, beta, [&](const std::vector<int>& w) {
                  if (!word_contains_pattern(w, starts, pi) && lwis_length(w) <= n)
                    ++count;
                });
                ok &= eq(why, count, pins[n - 2], "n=" + std::to_string(n));
                ok &= eq(why, count, catalan(n) * riordan(n),
                         "n=" + std::to_string(n) + " product form");
              }
              return ok;
            });

  criterion(12, "hook-length Kostka sum equals the multinomial [cor_5_7]", 0,
            [](std::ostringstream& why) { return registered(why, "cor_5_7", 6); });

  criterion(13, "complete homogeneous expansion has rectangular coefficients [cor_5_8]", 0,
            [](std::ostringstream& why) { return registered(why, "cor_5_8", 5); });

  criterion(14, "verify all passes twice with byte-identical reports", 600.0,
            [](std::ostringstream& why) {
              const auto snapshot = [] {
                std::pair<bool, std::string> result{true, ""};
                for (const std::string& name : check_names()) {
                  const CheckReport rep = run_check(name);
                  result.first = result.first && rep.pass;
                  result.second += report_to_json(rep).dump() + "\n";
                }
                return result;
              };
              const auto first = snapshot();
              const auto second = snapshot();
              bool ok = true;
              if (!first.first) {
                note(why, "first run has failing checks");
                ok = false;
              }
              if (!second.first) {
                note(why, "second run has failing checks");
                ok = false;
              }
              if (first.second != second.second) {
                note(why, "serialized reports differ between runs");
                ok = false;
              }
              return ok;
            });

  std::cout << (14 - failed) << "/14 criteria passed\n";
  return failed == 0 ? 0 : 1;
}
