#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "gpav/combinat.hpp"

using namespace gpav;

TEST_CASE("catalan, riordan, and motzkin initial segments") {
  const long long catalans[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862};
  const long long riordans[] = {1, 0, 1, 1, 3, 6, 15, 36, 91, 232};
  const long long motzkins[] = {1, 1, 2, 4, 9, 21, 51, 127, 323, 835};
  for (long long n = 0; n < 10; ++n) {
    CHECK(catalan(n) == catalans[n]);
    CHECK(riordan(n) == riordans[n]);
    CHECK(motzkin(n) == motzkins[n]);
  }
  CHECK_THROWS_AS(catalan(-1), std::invalid_argument);
  CHECK_THROWS_AS(riordan(-2), std::invalid_argument);
  CHECK_THROWS_AS(motzkin(-1), std::invalid_argument);
}

TEST_CASE("factorial, binomial, multinomial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3628800);
  CHECK(binomial(10, 5) == 252);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(60, 30) == BigCount("118264581564861424"));
  CHECK(multinomial(Composition{1, 2, 2, 1}) == 180);
  CHECK(multinomial(Composition{}) == 1);
  // pascal rule on a grid
  for (long long n = 1; n <= 12; ++n)
    for (long long k = 0; k <= n; ++k)
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("difference arrays") {
  std::vector<BigCount> cats;
  for (long long n = 0; n <= 4; ++n) cats.push_back(catalan(n));
  CHECK(difference_array(cats, 0) == cats);
  const std::vector<BigCount> once = {0, 1, 3, 9};
  CHECK(difference_array(cats, 1) == once);
  CHECK(difference_array(cats, 4) == std::vector<BigCount>{3});
  CHECK_THROWS_AS(difference_array(cats, 5), std::invalid_argument);
  CHECK_THROWS_AS(difference_array(cats, -1), std::invalid_argument);
}

TEST_CASE("composition basics") {
  Composition c{1, 2, 2, 1};
  CHECK(c.weight() == 6);
  CHECK(c.size() == 4);
  CHECK(c[1] == 2);
  CHECK(c.str() == "(1,2,2,1)");
  CHECK(c.reversed() == Composition{1, 2, 2, 1});
  CHECK(Composition{3, 1}.reversed() == Composition{1, 3});
  CHECK(concat(Composition{1, 2}, Composition{3}) == Composition{1, 2, 3});
  CHECK(sorted_partition(Composition{1, 3, 2}) == Partition({3, 2, 1}));
}

TEST_CASE("partition basics") {
  Partition p({3, 2});
  CHECK(p.weight() == 5);
  CHECK(p.conjugate() == Partition({2, 2, 1}));
  CHECK(p.conjugate().conjugate() == p);
  CHECK(p.str() == "(3,2)");
  CHECK(p.part_or_zero(5) == 0);
  CHECK(rectangle(2, 6) == Partition({6, 6}));
  CHECK(rectangle(0, 3) == Partition({}));
  CHECK_THROWS_AS(Partition({2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({1, -1}), std::invalid_argument);
}

TEST_CASE("composition enumeration is exhaustive and ordered") {
  std::vector<Composition> pos = compositions(4, 2, false);
  REQUIRE(pos.size() == 3);
  CHECK(pos[0] == Composition{1, 3});
  CHECK(pos[1] == Composition{2, 2});
  CHECK(pos[2] == Composition{3, 1});

  std::vector<Composition> with_zero = compositions(3, 2, true);
  REQUIRE(with_zero.size() == 4);
  CHECK(with_zero.front() == Composition{0, 3});
  CHECK(with_zero.back() == Composition{3, 0});

  for (long long total = 1; total <= 7; ++total) {
    BigCount all = 0;
    for (int len = 1; len <= total; ++len) {
      std::size_t got = compositions(total, len, false).size();
      CHECK(BigCount(got) == binomial(total - 1, len - 1));
      all += got;
    }
    CHECK(all == (BigCount(1) << (total - 1)));
  }
  // zero parts allowed: weak compositions count by stars and bars
  CHECK(BigCount(compositions(5, 3, true).size()) == binomial(7, 2));
}

TEST_CASE("partition enumeration") {
  const std::size_t p_n[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30};
  for (long long n = 0; n < 10; ++n) CHECK(partitions(n).size() == p_n[n]);

  std::vector<Partition> of_six = partitions(6);
  CHECK(of_six.front() == Partition({6}));
  CHECK(of_six.back() == Partition({1, 1, 1, 1, 1, 1}));

  CHECK(partitions(5, 2).size() == 3);
  CHECK(partitions(6, 3, 2).size() == 1);  // only (3,3) fits both bounds
  CHECK(partitions(0).size() == 1);
  CHECK(partitions(0).front() == Partition({}));
}

TEST_CASE("dominance order") {
  CHECK(dominates(Partition({4}), Partition({2, 2})));
  CHECK(dominates(Partition({2, 2}), Partition({2, 1, 1})));
  CHECK(dominates(Partition({2, 1, 1}), Partition({1, 1, 1, 1})));
  CHECK(dominates(Partition({3, 3}), Partition({3, 3})));
  CHECK_FALSE(dominates(Partition({3, 3}), Partition({4, 1, 1})));
  CHECK_FALSE(dominates(Partition({4, 1, 1}), Partition({3, 3})));
  CHECK_THROWS_AS(dominates(Partition({2}), Partition({3})), std::invalid_argument);
  // transitive closure spot check over all pairs of weight 6
  const auto parts = partitions(6);
  for (const auto& a : parts)
    for (const auto& b : parts)
      for (const auto& c : parts)
        if (dominates(a, b) && dominates(b, c)) CHECK(dominates(a, c));
}
