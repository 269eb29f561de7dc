#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "gpav/identities.hpp"

using namespace gpav;

TEST_CASE("monomial polynomial arithmetic") {
  auto one = MonomialPolynomial::one(2);
  auto h1 = MonomialPolynomial::complete_homogeneous(1, 2);
  auto h2 = MonomialPolynomial::complete_homogeneous(2, 2);

  CHECK(one.coefficient({}) == 1);
  CHECK(h1.coefficient({1, 0}) == 1);
  CHECK(h1.coefficient({0, 1}) == 1);
  CHECK(h2.terms().size() == 3);
  CHECK((h1 * one).terms() == h1.terms());

  auto sq = h1 * h1;
  CHECK(sq.coefficient({2, 0}) == 1);
  CHECK(sq.coefficient({1, 1}) == 2);
  CHECK(sq.coefficient({2}) == 1);      // short vectors pad with zeros
  CHECK(sq.coefficient({0, 0, 1}) == 0);  // exponents past the variables
  CHECK((h1 * h2).terms() == (h2 * h1).terms());

  CHECK_THROWS_AS(h1 * MonomialPolynomial::one(3), std::invalid_argument);
}

TEST_CASE("complete homogeneous products in the monomial basis") {
  auto h_2 = h_in_m_direct(Partition({2}), 2);
  CHECK(h_2.coefficient({2}) == 1);
  CHECK(h_2.coefficient({1, 1}) == 1);

  auto h_11 = h_in_m_direct(Partition({1, 1}), 2);
  CHECK(h_11.coefficient({2}) == 1);
  CHECK(h_11.coefficient({1, 1}) == 2);

  // the coefficient of a dominated monomial never vanishes
  auto h_22 = h_in_m_direct(Partition({2, 2}), 4);
  CHECK(h_22.coefficient({2, 2}) == 3);
  CHECK(h_22.coefficient({2, 1, 1}) == 4);
  CHECK(h_22.coefficient({1, 1, 1, 1}) == 6);
}

TEST_CASE("rectangular kostka form of the expansion") {
  CHECK(h_in_m_kostka(Partition({2}), Partition({1, 1})) == 1);
  CHECK(h_in_m_kostka(Partition({1, 1}), Partition({1, 1})) == 2);
  CHECK(h_in_m_kostka(Partition({2, 2}), Partition({2, 1, 1})) == 4);
  CHECK(h_in_m_kostka(Partition({2}), Partition({1, 1, 1})) == 0);  // weight mismatch
  CHECK(h_in_m_kostka(Partition({}), Partition({})) == 1);

  for (long long N = 1; N <= 5; ++N)
    for (const Partition& lambda : partitions(N)) {
      auto direct = h_in_m_direct(lambda, static_cast<int>(N));
      auto wide = h_in_m_direct(lambda, static_cast<int>(N) + 2);
      for (const Partition& mu : partitions(N)) {
        CHECK(direct.coefficient(mu.parts()) == h_in_m_kostka(lambda, mu));
        // adding variables does not disturb existing coefficients
        CHECK(wide.coefficient(mu.parts()) == direct.coefficient(mu.parts()));
      }
    }
}
