#pragma once

// Bijections between generalized permutations, tableau pairs, and single
// rectangular tableaux:
//  - rsk_forward / rsk_inverse: row insertion of the bottom row, recording
//    block letters; insertion and recording tableaux share their shape.
//  - boxplus: glues two tableaux of at most two rows into one two-row
//    rectangle, complementing the second through p_alphabet + q_alphabet + 1.
//  - theta / theta_inverse: embeds a same-shape pair into one rectangular
//    tableau of q_alphabet rows by filling each column's empty boxes bottom-up
//    with descending filler letters keyed to the letters absent from Q's
//    columns.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gpav/combinat.hpp"
#include "gpav/genperm.hpp"
#include "gpav/tableau.hpp"

namespace gpav {

struct TableauPair {
  YoungTableau P;  // insertion tableau
  YoungTableau Q;  // recording tableau
  bool operator==(const TableauPair&) const = default;
};

/// Row-insert the bottom row of tau; Q records the block letter at every cell
/// P grows. type(P) = beta, type(Q) = alpha, and both share their shape.
inline TableauPair rsk_forward(const GeneralizedPermutation& tau) {
  std::vector<std::vector<int>> p_rows, q_rows;
  for (int b = 0; b < tau.block_count(); ++b) {
    for (int x : tau.block(b)) {
      int carry = x;
      std::size_t r = 0;
      for (;; ++r) {
        if (r == p_rows.size()) {
          p_rows.emplace_back();
          q_rows.emplace_back();
        }
        auto& row = p_rows[r];
        auto it = std::upper_bound(row.begin(), row.end(), carry);
        if (it == row.end()) {
          row.push_back(carry);
          q_rows[r].push_back(b + 1);
          break;
        }
        std::swap(carry, *it);
      }
    }
  }
  return TableauPair{YoungTableau::make(std::move(p_rows)),
                     YoungTableau::make(std::move(q_rows))};
}

/// Invert row insertion: repeatedly remove the rightmost cell holding the
/// largest letter of Q and reverse-bump the matching entry out of P.
/// Alphabet and block count default to the largest entries present.
inline GeneralizedPermutation rsk_inverse(const TableauPair& pair, int alphabet_size = 0,
                                          int block_count = 0) {
  if (pair.P.shape() != pair.Q.shape())
    throw std::invalid_argument("rsk_inverse: tableaux must share their shape");
  if (alphabet_size == 0) alphabet_size = pair.P.max_entry();
  if (block_count == 0) block_count = pair.Q.max_entry();
  if (pair.P.max_entry() > alphabet_size)
    throw std::invalid_argument("rsk_inverse: insertion entry above alphabet size");
  if (pair.Q.max_entry() > block_count)
    throw std::invalid_argument("rsk_inverse: recording entry above block count");

  std::vector<std::vector<int>> p_rows = pair.P.rows();
  std::vector<std::vector<int>> q_rows = pair.Q.rows();
  std::vector<std::pair<int, int>> biletters;  // (block letter, word letter), reversed

  long long cells = 0;
  for (const auto& r : p_rows) cells += static_cast<long long>(r.size());
  while (cells > 0) {
    // rightmost occurrence of the largest remaining letter of Q sits at the
    // end of its row
    std::size_t best_row = 0;
    int best_letter = 0, best_col = -1;
    for (std::size_t r = 0; r < q_rows.size(); ++r) {
      if (q_rows[r].empty()) continue;
      int letter = q_rows[r].back();
      int col = static_cast<int>(q_rows[r].size()) - 1;
      if (letter > best_letter || (letter == best_letter && col > best_col)) {
        best_letter = letter;
        best_col = col;
        best_row = r;
      }
    }
    q_rows[best_row].pop_back();
    int carry = p_rows[best_row].back();
    p_rows[best_row].pop_back();
    for (std::size_t r = best_row; r-- > 0;) {
      auto& row = p_rows[r];
      auto it = std::lower_bound(row.begin(), row.end(), carry);
      if (it == row.begin())
        throw std::invalid_argument("rsk_inverse: pair is not an insertion image");
      --it;
      std::swap(carry, *it);
    }
    biletters.emplace_back(best_letter, carry);
    --cells;
  }

  std::vector<int> alpha_parts(block_count, 0);
  std::vector<int> word(biletters.size());
  for (std::size_t i = 0; i < biletters.size(); ++i) {
    auto [blk, letter] = biletters[biletters.size() - 1 - i];
    ++alpha_parts[blk - 1];
    word[i] = letter;
  }
  return GeneralizedPermutation::make(Composition(std::move(alpha_parts)),
                                      std::move(word), alphabet_size);
}

/// Join two same-shape tableaux with at most two rows into one two-row
/// rectangle of width equal to the shared weight: row i keeps P's row i and
/// continues with the reversed complement of Q's other row.
inline YoungTableau boxplus(const YoungTableau& P, const YoungTableau& Q,
                            int p_alphabet, int q_alphabet) {
  if (P.shape() != Q.shape())
    throw std::invalid_argument("boxplus: tableaux must share their shape");
  if (P.row_count() > 2)
    throw std::invalid_argument("boxplus: more than two rows");
  if (P.max_entry() > p_alphabet || Q.max_entry() > q_alphabet)
    throw std::invalid_argument("boxplus: entry above declared alphabet");
  const int top = p_alphabet + q_alphabet + 1;
  auto row_of = [](const YoungTableau& t, std::size_t r) {
    static const std::vector<int> none;
    return r < t.row_count() ? t.rows()[r] : none;
  };
  std::vector<std::vector<int>> out(2);
  for (int i = 0; i < 2; ++i) {
    out[i] = row_of(P, i);
    const std::vector<int>& other = row_of(Q, 1 - i);
    for (auto it = other.rbegin(); it != other.rend(); ++it)
      out[i].push_back(top - *it);
  }
  if (out[0].empty()) return YoungTableau();
  std::string why;
  if (!is_ssyt(out, &why))
    throw std::invalid_argument("boxplus: result is not semistandard (" + why + ")");
  return YoungTableau::make(std::move(out));
}

/// Embed a same-shape pair into a rectangle of q_alphabet rows and width d.
/// P occupies its own cells; for each letter k of Q's alphabet in turn, every
/// column of Q lacking k receives the filler p_alphabet + q_alphabet + 1 - k
/// in its lowest empty box.
inline YoungTableau theta(const YoungTableau& P, const YoungTableau& Q, int d,
                          int p_alphabet, int q_alphabet) {
  if (P.shape() != Q.shape())
    throw std::invalid_argument("theta: tableaux must share their shape");
  if (d <= 0) throw std::invalid_argument("theta: d must be positive");
  const Partition lambda = P.shape();
  if (!lambda.empty() && lambda[0] > d)
    throw std::invalid_argument("theta: shape wider than d");
  if (static_cast<int>(lambda.size()) > q_alphabet)
    throw std::invalid_argument("theta: shape taller than Q's alphabet");
  if (P.max_entry() > p_alphabet)
    throw std::invalid_argument("theta: P entry above declared alphabet");
  if (Q.max_entry() > q_alphabet)
    throw std::invalid_argument("theta: Q entry above declared alphabet");

  const int m = q_alphabet;
  std::vector<std::vector<int>> grid(m, std::vector<int>(d, 0));
  for (std::size_t r = 0; r < P.row_count(); ++r)
    for (std::size_t c = 0; c < P.rows()[r].size(); ++c)
      grid[r][c] = P.rows()[r][c];

  for (int k = 1; k <= m; ++k) {
    const int filler = p_alphabet + m + 1 - k;
    for (int c = 0; c < d; ++c) {
      bool q_has_k = false;
      for (std::size_t r = 0; r < Q.row_count(); ++r) {
        const auto& row = Q.rows()[r];
        if (static_cast<std::size_t>(c) < row.size() && row[c] == k) {
          q_has_k = true;
          break;
        }
      }
      if (q_has_k) continue;
      int r = m - 1;
      while (r >= 0 && grid[r][c] != 0) --r;
      if (r < 0)
        throw std::invalid_argument("theta: no empty box left in a column");
      grid[r][c] = filler;
    }
  }
  return YoungTableau::make(std::move(grid));
}

inline YoungTableau theta(const YoungTableau& P, const YoungTableau& Q, int d) {
  return theta(P, Q, d, P.max_entry(), Q.max_entry());
}

/// Invert theta. T must be rectangular with q_alphabet rows and entries in
/// 1..p_alphabet+q_alphabet; P is the restriction to letters <= p_alphabet
/// and Q is reconstructed row by row from counting thresholds. The empty
/// tableau pairs with q_alphabet = 0 and inverts to the empty pair. Inputs
/// outside the image are reported through std::invalid_argument.
inline TableauPair theta_inverse(const YoungTableau& T, int p_alphabet, int q_alphabet) {
  const int n = p_alphabet, m = q_alphabet;
  if (static_cast<int>(T.row_count()) != m)
    throw std::invalid_argument("theta_inverse: row count differs from q_alphabet");
  const int d = T.empty() ? 0 : static_cast<int>(T.rows()[0].size());
  for (const auto& row : T.rows())
    if (static_cast<int>(row.size()) != d)
      throw std::invalid_argument("theta_inverse: tableau is not rectangular");
  if (T.max_entry() > n + m)
    throw std::invalid_argument("theta_inverse: entry above combined alphabet");

  // mu(i, s) = number of entries <= s in row i (1-based rows; 0 outside)
  auto mu = [&](int i, int s) -> int {
    if (i < 1 || i > m) return 0;
    const auto& row = T.rows()[i - 1];
    return static_cast<int>(std::upper_bound(row.begin(), row.end(), s) - row.begin());
  };

  std::vector<std::vector<int>> p_rows;
  for (int i = 1; i <= m; ++i) {
    int len = mu(i, n);
    if (len == 0) break;
    p_rows.emplace_back(T.rows()[i - 1].begin(), T.rows()[i - 1].begin() + len);
  }
  for (int i = static_cast<int>(p_rows.size()) + 1; i <= m; ++i)
    if (mu(i, n) != 0)
      throw std::invalid_argument("theta_inverse: small letters below a gap");

  std::vector<std::vector<int>> q_rows(p_rows.size());
  for (std::size_t r = 0; r < p_rows.size(); ++r) q_rows[r].assign(p_rows[r].size(), 0);
  for (int k = 1; k <= m; ++k) {
    const int letter = m - k + 1;
    for (int i = 1; i <= m - k + 1; ++i) {
      int lo = mu(k + i, n + k);
      int hi = mu(k + i - 1, n + k - 1);
      for (int j = lo + 1; j <= hi; ++j) {
        if (i > static_cast<int>(q_rows.size()) ||
            j > static_cast<int>(q_rows[i - 1].size()) || q_rows[i - 1][j - 1] != 0)
          throw std::invalid_argument("theta_inverse: tableau is outside the image");
        q_rows[i - 1][j - 1] = letter;
      }
    }
  }
  for (const auto& row : q_rows)
    for (int v : row)
      if (v == 0) throw std::invalid_argument("theta_inverse: tableau is outside the image");

  std::string why;
  if (!is_ssyt(p_rows, &why))
    throw std::invalid_argument("theta_inverse: restriction is not semistandard (" + why + ")");
  if (!is_ssyt(q_rows, &why))
    throw std::invalid_argument("theta_inverse: reconstruction is not semistandard (" + why + ")");
  return TableauPair{YoungTableau::make(std::move(p_rows)),
                     YoungTableau::make(std::move(q_rows))};
}

}  // namespace gpav
