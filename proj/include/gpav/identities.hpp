#pragma once

// Symmetric polynomials in finitely many variables, just enough to expand a
// product of complete homogeneous factors in the monomial basis two ways:
// once by literal multiplication, once through Kostka numbers of a rectangle.

#include <map>
#include <stdexcept>
#include <vector>

#include "gpav/combinat.hpp"
#include "gpav/tableau.hpp"

namespace gpav {

/// A polynomial in num_vars variables, stored term by term keyed on the
/// exponent vector. Symmetry is the caller's business; this is plain algebra.
class MonomialPolynomial {
 public:
  explicit MonomialPolynomial(int num_vars) : num_vars_(num_vars) {
    if (num_vars < 0) throw std::invalid_argument("MonomialPolynomial: negative variable count");
  }

  static MonomialPolynomial one(int num_vars) {
    MonomialPolynomial p(num_vars);
    p.terms_[std::vector<int>(num_vars, 0)] = 1;
    return p;
  }

  /// Sum of all monomials of the given total degree.
  static MonomialPolynomial complete_homogeneous(int degree, int num_vars) {
    MonomialPolynomial p(num_vars);
    for_each_composition(degree, num_vars, true,
                         [&](const std::vector<int>& expo) { p.terms_[expo] = 1; });
    return p;
  }

  MonomialPolynomial operator*(const MonomialPolynomial& o) const {
    if (num_vars_ != o.num_vars_)
      throw std::invalid_argument("MonomialPolynomial: variable counts differ");
    MonomialPolynomial out(num_vars_);
    std::vector<int> key(num_vars_);
    for (const auto& [ea, ca] : terms_)
      for (const auto& [eb, cb] : o.terms_) {
        for (int v = 0; v < num_vars_; ++v) key[v] = ea[v] + eb[v];
        out.terms_[key] += ca * cb;
      }
    return out;
  }

  /// Coefficient of the monomial with the given exponents, zero-padded on the
  /// right to the variable count. Too many nonzero exponents means zero.
  BigCount coefficient(const std::vector<int>& exponents) const {
    if (static_cast<int>(exponents.size()) > num_vars_) {
      for (std::size_t i = num_vars_; i < exponents.size(); ++i)
        if (exponents[i] != 0) return 0;
    }
    std::vector<int> key(num_vars_, 0);
    for (int v = 0; v < num_vars_ && v < static_cast<int>(exponents.size()); ++v)
      key[v] = exponents[v];
    auto it = terms_.find(key);
    return it == terms_.end() ? BigCount(0) : it->second;
  }

  int num_vars() const { return num_vars_; }
  const std::map<std::vector<int>, BigCount>& terms() const { return terms_; }

 private:
  int num_vars_;
  std::map<std::vector<int>, BigCount> terms_;
};

/// Expand h_lambda = prod_i h_{lambda_i} in num_vars variables by brute
/// multiplication. With num_vars >= |lambda| the monomial-basis coefficients
/// match the expansion in infinitely many variables.
inline MonomialPolynomial h_in_m_direct(const Partition& lambda, int num_vars) {
  MonomialPolynomial p = MonomialPolynomial::one(num_vars);
  for (int part : lambda.parts())
    p = p * MonomialPolynomial::complete_homogeneous(part, num_vars);
  return p;
}

/// Coefficient of m_mu in h_lambda, computed without polynomial algebra: it
/// counts tableaux of rectangular shape (N^len(lambda)) whose content is mu
/// followed by the complements N - lambda_i, N = |lambda|.
inline BigCount h_in_m_kostka(const Partition& lambda, const Partition& mu) {
  const long long N = lambda.weight();
  if (mu.weight() != N) return 0;
  if (lambda.size() == 0) return mu.size() == 0 ? 1 : 0;
  std::vector<int> content(mu.parts());
  for (int part : lambda.parts()) content.push_back(static_cast<int>(N) - part);
  return kostka(rectangle(static_cast<int>(lambda.size()), static_cast<int>(N)),
                Composition(std::move(content)));
}

}  // namespace gpav
