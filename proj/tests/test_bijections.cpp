#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <vector>

#include "gpav/bijections.hpp"
#include "gpav/genperm.hpp"
#include "gpav/tableau.hpp"

using namespace gpav;

TEST_CASE("row insertion pair") {
  auto g = GeneralizedPermutation::make(Composition{1, 2, 2, 1}, {2, 1, 3, 1, 2, 1}, 3);
  TableauPair pair = rsk_forward(g);
  CHECK(pair.P == YoungTableau::make({{1, 1, 1}, {2, 2}, {3}}));
  CHECK(pair.Q == YoungTableau::make({{1, 2, 3}, {2, 3}, {4}}));
  // the pair records both types
  CHECK(pair.P.content(g.alphabet_size()) == g.beta());
  CHECK(pair.Q.content(g.block_count()) == g.alpha());

  auto back = rsk_inverse(pair, g.alphabet_size(), g.block_count());
  CHECK(back.alpha() == g.alpha());
  CHECK(back.word() == g.word());
}

TEST_CASE("insertion is a bijection on every small class") {
  for (long long N = 1; N <= 4; ++N)
    for (int la = 1; la <= N; ++la)
      for (const Composition& alpha : compositions(N, la, false))
        for (int lb = 1; lb <= N; ++lb)
          for (const Composition& beta : compositions(N, lb, false)) {
            const int m = static_cast<int>(beta.size());
            std::set<std::pair<std::vector<std::vector<int>>,
                               std::vector<std::vector<int>>>> images;
            BigCount total = 0;
            for_each_word(alpha, beta, [&](const std::vector<int>& w) {
              ++total;
              auto g = GeneralizedPermutation::make(alpha, w, m);
              TableauPair pair = rsk_forward(g);
              CHECK(pair.P.shape() == pair.Q.shape());
              CHECK(pair.P.content(m) == beta);
              CHECK(pair.Q.content(static_cast<int>(alpha.size())) == alpha);
              auto back = rsk_inverse(pair, m, static_cast<int>(alpha.size()));
              CHECK(back.word() == w);
              images.insert({pair.P.rows(), pair.Q.rows()});
            });
            CHECK(BigCount(images.size()) == total);
          }
}

TEST_CASE("avoiding 321 means at most two insertion rows") {
  const Pattern p321 = Pattern::parse("321");
  const Composition alpha{1, 2, 1, 2}, beta{2, 2, 2};
  const auto starts = GeneralizedPermutation::block_starts_of(alpha);
  for_each_word(alpha, beta, [&](const std::vector<int>& w) {
    auto g = GeneralizedPermutation::make(alpha, w, 3);
    const bool avoids = !word_contains_pattern(w, starts, p321);
    CHECK(avoids == (rsk_forward(g).P.row_count() <= 2));
  });
}

TEST_CASE("two-row join") {
  // worked example: complements taken in the joint alphabet of sizes 4 and 5
  auto P = YoungTableau::make({{1, 1, 3}, {2, 4}});
  auto Q = YoungTableau::make({{1, 3, 4}, {2, 5}});
  CHECK(boxplus(P, Q, 4, 5) == YoungTableau::make({{1, 1, 3, 5, 8}, {2, 4, 6, 7, 9}}));

  // join of a 321-avoider's insertion pair is rectangular with both types
  auto g = GeneralizedPermutation::make(Composition{2, 2}, {1, 2, 1, 2}, 2);
  TableauPair pair = rsk_forward(g);
  REQUIRE(pair.P.row_count() <= 2);
  auto joined = boxplus(pair.P, pair.Q, 2, 2);
  CHECK(joined.shape() == rectangle(2, 4));
  CHECK(joined.content(4) == Composition{2, 2, 2, 2});
}

TEST_CASE("grid filling bijection") {
  auto P = YoungTableau::make({{1, 1, 2, 3}, {2, 3, 4}, {3, 4}});
  auto Q = YoungTableau::make({{1, 1, 1, 5}, {2, 2, 4}, {3, 5}});
  auto T = YoungTableau::make({{1, 1, 2, 3, 5},
                               {2, 3, 4, 6, 6},
                               {3, 4, 5, 7, 7},
                               {5, 6, 7, 8, 8},
                               {6, 7, 8, 9, 9}});
  CHECK(theta(P, Q, 5, 4, 5) == T);
  CHECK(T.content(9) == Composition{2, 2, 3, 2, 3, 4, 4, 3, 2});

  TableauPair back = theta_inverse(T, 4, 5);
  CHECK(back.P == P);
  CHECK(back.Q == Q);

  // width too small for the shape is outside the domain
  CHECK_THROWS_AS(theta(P, Q, 3, 4, 5), std::invalid_argument);
  // non-rectangular input has no preimage
  CHECK_THROWS_AS(theta_inverse(YoungTableau::make({{1, 2}, {2}}), 1, 2),
                  std::invalid_argument);

  // empty pair maps to the empty tableau and back
  CHECK(theta(YoungTableau(), YoungTableau(), 1, 0, 0).empty());
  TableauPair none = theta_inverse(YoungTableau(), 0, 0);
  CHECK(none.P.empty());
  CHECK(none.Q.empty());
}

TEST_CASE("grid filling round-trips an exhaustive sweep") {
  for (int d = 1; d <= 3; ++d)
    for (long long N = 1; N <= 4; ++N)
      for (int la = 1; la <= N; ++la)
        for (const Composition& alpha : compositions(N, la, false))
          for (int lb = 1; lb <= N; ++lb)
            for (const Composition& beta : compositions(N, lb, false)) {
              const int n = static_cast<int>(alpha.size());
              const int m = static_cast<int>(beta.size());
              for (const Partition& lambda : partitions(N, d, std::min(n, m)))
                for (const auto& p : enumerate_ssyt(lambda, alpha))
                  for (const auto& q : enumerate_ssyt(lambda, beta)) {
                    YoungTableau t = theta(p, q, d, n, m);
                    CHECK(t.shape() == rectangle(m, d));
                    TableauPair back = theta_inverse(t, n, m);
                    CHECK(back.P == p);
                    CHECK(back.Q == q);
                  }
            }
}
