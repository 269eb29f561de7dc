#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <vector>

#include "gpav/paths.hpp"
#include "gpav/tableau.hpp"

using namespace gpav;

namespace {
LatticePath path_of(std::vector<int> dy) { return LatticePath{std::move(dy)}; }
}  // namespace

TEST_CASE("path validation") {
  CHECK(validate_cr(path_of({1, 1, -1, -1}), 2, 2));
  CHECK(validate_cr(path_of({1, -1, 1, -1}), 2, 2));
  CHECK(validate_cr(path_of({2, -2}), 2, 0));
  CHECK(validate_cr(path_of({}), 0, 0));
  CHECK(validate_cr(path_of({1, 1, 0, -2}), 3, 1));
  CHECK(validate_cr(path_of({1, -1, 2, -2}), 3, 1));
  CHECK(validate_cr(path_of({2, 0, -2}), 3, 0));  // flat at height 2 is fine

  CHECK_FALSE(validate_cr(path_of({1, -1, -1, 1}), 2, 2));  // dips below the axis
  CHECK_FALSE(validate_cr(path_of({1, 1, -1, 1}), 2, 2));   // does not end at zero
  CHECK_FALSE(validate_cr(path_of({0, 2, -2}), 3, 0));      // flat step on the axis
  CHECK_FALSE(validate_cr(path_of({2, -2, 0}), 3, 0));      // flat after returning to it
  CHECK_FALSE(validate_cr(path_of({2, -2, 1, -1}), 3, 1));  // double steps must come last
  CHECK_FALSE(validate_cr(path_of({2, -2}), 1, 1));         // pair steps expected first
  CHECK_FALSE(validate_cr(path_of({1, 1, -1, -1}), 3, 1));  // wrong length split
}

TEST_CASE("path enumeration is exhaustive and ordered") {
  auto paths = enumerate_cr(2, 2);
  REQUIRE(paths.size() == 2);
  CHECK(paths[0] == path_of({1, 1, -1, -1}));  // rises listed before falls
  CHECK(paths[1] == path_of({1, -1, 1, -1}));

  CHECK(enumerate_cr(0, 0).size() == 1);
  CHECK(enumerate_cr(4, 0).size() == 3);
  CHECK(enumerate_cr(3, 1).size() == 2);
  CHECK(enumerate_cr(4, 2).size() == 6);

  for (auto [n, k] : {std::pair{5, 3}, {6, 2}, {6, 6}})
    for (const auto& p : enumerate_cr(n, k)) CHECK(validate_cr(p, n, k));
}

TEST_CASE("classical path families") {
  std::size_t dyck = 0, motz = 0, rior = 0;
  for_each_dyck(3, [&](const LatticePath&) { ++dyck; });
  for_each_motzkin(3, [&](const LatticePath&) { ++motz; });
  for_each_riordan(4, [&](const LatticePath&) { ++rior; });
  CHECK(dyck == 5);
  CHECK(motz == 4);
  CHECK(rior == 3);
}

TEST_CASE("counting methods agree") {
  for (long long n = 0; n <= 12; ++n)
    for (long long k = 0; k <= n; ++k) {
      const BigCount base = cr_count(n, k, CrMethod::kRecurrence);
      CHECK(base == cr_count(n, k, CrMethod::kRiordanSum));
      CHECK(base == cr_count(n, k, CrMethod::kCatalanSum));
      CHECK(base == cr_count(n, k, CrMethod::kDifference));
      if (n <= 8) CHECK(base == cr_count(n, k, CrMethod::kEnumerate));
    }
  // triangle boundaries
  CHECK(cr_count(4, 4, CrMethod::kRecurrence) == 14);
  CHECK(cr_count(4, 0, CrMethod::kRecurrence) == 3);
  CHECK(cr_count(4, 1, CrMethod::kRecurrence) == 4);
  CHECK(cr_count(4, 2, CrMethod::kRecurrence) == 6);
  CHECK(cr_count(4, 3, CrMethod::kRecurrence) == 9);
  CHECK_THROWS_AS(cr_count(2, 3, CrMethod::kRecurrence), std::invalid_argument);
  CHECK_THROWS_AS(cr_count(-1, 0, CrMethod::kRecurrence), std::invalid_argument);
}

TEST_CASE("paths to tableaux and back") {
  // rises fill the top row, falls the bottom; doubled letters split by height
  CHECK(path_to_tableau(path_of({1, 1, -1, -1}), 2, 2) ==
        YoungTableau::make({{1, 2}, {3, 4}}));
  CHECK(path_to_tableau(path_of({1, -1, 1, -1}), 2, 2) ==
        YoungTableau::make({{1, 3}, {2, 4}}));
  CHECK(path_to_tableau(path_of({2, -2}), 2, 0) ==
        YoungTableau::make({{1, 1}, {2, 2}}));
  CHECK(path_to_tableau(path_of({}), 0, 0).empty());

  auto r = tableau_to_path(YoungTableau::make({{1, 1}, {2, 2}}));
  CHECK(r.path == path_of({2, -2}));
  CHECK(r.n == 2);
  CHECK(r.k == 0);

  CHECK_THROWS_AS(path_to_tableau(path_of({1, 1}), 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(tableau_to_path(YoungTableau::make({{1, 2, 3}})),
                  std::invalid_argument);
  CHECK_THROWS_AS(tableau_to_path(YoungTableau::make({{1, 1}, {2, 3}})),
                  std::invalid_argument);  // letter 3 appears once after doubles

  for (long long n = 0; n <= 6; ++n)
    for (long long k = 0; k <= n; ++k) {
      std::set<std::vector<std::vector<int>>> images;
      for (const auto& p : enumerate_cr(n, k)) {
        YoungTableau t = path_to_tableau(p, n, k);
        auto back = tableau_to_path(t);
        CHECK(back.path == p);
        CHECK(back.n == n);
        CHECK(back.k == k);
        images.insert(t.rows());
      }
      CHECK(BigCount(images.size()) == cr_count(n, k, CrMethod::kRecurrence));
    }
}
