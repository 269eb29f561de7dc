#pragma once

// Generalized permutations: two-row arrays whose top row is the weakly
// increasing word of a composition alpha and whose bottom row, split into
// blocks below equal top entries, is weakly increasing inside each block.
// Pattern containment picks at most one bottom entry per block, from blocks
// with strictly increasing indices, order-isomorphic to the pattern.

#include <algorithm>
#include <array>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gpav/combinat.hpp"

namespace gpav {

/// A permutation of 1..k used as an order pattern. Occurrences must reproduce
/// its strict order exactly, so entries realizing it are pairwise distinct.
class Pattern {
 public:
  explicit Pattern(std::vector<int> perm) : perm_(std::move(perm)) {
    if (perm_.empty() || perm_.size() > kMaxLength)
      throw std::invalid_argument("Pattern: length must be 1..16");
    std::vector<bool> seen(perm_.size() + 1, false);
    for (int v : perm_) {
      if (v < 1 || v > static_cast<int>(perm_.size()) || seen[v])
        throw std::invalid_argument("Pattern: not a permutation of 1..k");
      seen[v] = true;
    }
  }

  Pattern(std::initializer_list<int> perm) : Pattern(std::vector<int>(perm)) {}

  /// Parse a digit string such as "231".
  static Pattern parse(const std::string& digits) {
    std::vector<int> perm;
    for (char c : digits) {
      if (c < '1' || c > '9') throw std::invalid_argument("Pattern: expected digits 1-9");
      perm.push_back(c - '0');
    }
    return Pattern(std::move(perm));
  }

  int size() const { return static_cast<int>(perm_.size()); }
  int operator[](int i) const { return perm_[i]; }

  Pattern reversed() const {
    return Pattern(std::vector<int>(perm_.rbegin(), perm_.rend()));
  }

  Pattern complemented() const {
    std::vector<int> p(perm_);
    for (int& v : p) v = size() + 1 - v;
    return Pattern(std::move(p));
  }

  std::string str() const {
    std::string s;
    for (int v : perm_) s += std::to_string(v);
    return s;
  }

  static const std::vector<Pattern>& all_s3() {
    static const std::vector<Pattern> six = {
        Pattern{1, 2, 3}, Pattern{1, 3, 2}, Pattern{2, 1, 3},
        Pattern{2, 3, 1}, Pattern{3, 1, 2}, Pattern{3, 2, 1}};
    return six;
  }

  bool operator==(const Pattern& o) const { return perm_ == o.perm_; }

  static constexpr std::size_t kMaxLength = 16;

 private:
  std::vector<int> perm_;
};

/// Immutable generalized permutation. alpha gives the block sizes, beta the
/// letter multiplicities over the alphabet 1..alphabet_size, and word is the
/// bottom row read left to right.
class GeneralizedPermutation {
 public:
  GeneralizedPermutation() = default;

  static GeneralizedPermutation make(Composition alpha, std::vector<int> word,
                                     int alphabet_size) {
    if (alphabet_size < 0)
      throw std::invalid_argument("GeneralizedPermutation: negative alphabet size");
    if (static_cast<long long>(word.size()) != alpha.weight())
      throw std::invalid_argument("GeneralizedPermutation: word length differs from weight of alpha");
    std::vector<int> counts(alphabet_size, 0);
    std::size_t pos = 0;
    for (std::size_t b = 0; b < alpha.size(); ++b) {
      for (int j = 0; j < alpha[b]; ++j, ++pos) {
        int v = word[pos];
        if (v < 1 || v > alphabet_size)
          throw std::invalid_argument("GeneralizedPermutation: letter outside 1..m");
        if (j > 0 && word[pos - 1] > v)
          throw std::invalid_argument("GeneralizedPermutation: block not weakly increasing");
        ++counts[v - 1];
      }
    }
    GeneralizedPermutation g;
    g.alpha_ = std::move(alpha);
    g.beta_ = Composition(std::move(counts));
    g.word_ = std::move(word);
    g.starts_ = block_starts_of(g.alpha_);
    return g;
  }

  const Composition& alpha() const { return alpha_; }
  const Composition& beta() const { return beta_; }
  const std::vector<int>& word() const { return word_; }
  int alphabet_size() const { return static_cast<int>(beta_.size()); }
  int block_count() const { return static_cast<int>(alpha_.size()); }
  long long length() const { return static_cast<long long>(word_.size()); }

  /// Offsets into word: block b spans [starts[b], starts[b+1]).
  const std::vector<int>& block_starts() const { return starts_; }

  std::span<const int> block(int b) const {
    return std::span<const int>(word_.data() + starts_[b], word_.data() + starts_[b + 1]);
  }

  bool operator==(const GeneralizedPermutation& o) const {
    return alpha_ == o.alpha_ && beta_ == o.beta_ && word_ == o.word_;
  }

  static std::vector<int> block_starts_of(const Composition& alpha) {
    std::vector<int> starts(alpha.size() + 1, 0);
    for (std::size_t i = 0; i < alpha.size(); ++i)
      starts[i + 1] = starts[i] + alpha[i];
    return starts;
  }

 private:
  Composition alpha_;
  Composition beta_;
  std::vector<int> word_;
  std::vector<int> starts_;
};

namespace detail {

inline bool pattern_dfs(const std::vector<int>& word, const std::vector<int>& starts,
                        const Pattern& pi, int s, int min_block,
                        std::array<int, Pattern::kMaxLength>& chosen) {
  const int len = pi.size();
  if (s == len) return true;
  const int n = static_cast<int>(starts.size()) - 1;
  for (int b = min_block; b <= n - (len - s); ++b) {
    int prev = 0;
    for (int pos = starts[b]; pos < starts[b + 1]; ++pos) {
      int v = word[pos];
      if (v == prev) continue;  // block is sorted, skip repeated values
      prev = v;
      bool ok = true;
      for (int t = 0; t < s; ++t) {
        // strict order must match in both directions, so ties never realize a pair
        if (pi[t] < pi[s] ? chosen[t] >= v : chosen[t] <= v) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      chosen[s] = v;
      if (pattern_dfs(word, starts, pi, s + 1, b + 1, chosen)) return true;
    }
  }
  return false;
}

}  // namespace detail

/// Containment test on the raw word plus block offsets (starts has n+1 entries).
inline bool word_contains_pattern(const std::vector<int>& word,
                                  const std::vector<int>& starts, const Pattern& pi) {
  if (static_cast<int>(starts.size()) - 1 < pi.size()) return false;
  std::array<int, Pattern::kMaxLength> chosen{};
  return detail::pattern_dfs(word, starts, pi, 0, 0, chosen);
}

inline bool contains_pattern(const GeneralizedPermutation& tau, const Pattern& pi) {
  return word_contains_pattern(tau.word(), tau.block_starts(), pi);
}

/// Visit the bottom-row word of every element of S_{alpha,beta} in
/// lexicographic order. The buffer is reused between visits; returning false
/// from the visitor stops the walk.
template <class F>
void for_each_word(const Composition& alpha, const Composition& beta, F&& visit) {
  if (alpha.weight() != beta.weight())
    throw std::invalid_argument("for_each_word: weights of alpha and beta differ");
  const long long n_pos = alpha.weight();
  const int m = static_cast<int>(beta.size());
  std::vector<int> avail = beta.parts();
  std::vector<int> word(n_pos, 0);
  std::vector<char> fresh(n_pos, 0);  // position opens a block
  {
    long long pos = 0;
    for (std::size_t b = 0; b < alpha.size(); ++b) {
      if (alpha[b] > 0) fresh[pos] = 1;
      pos += alpha[b];
    }
  }
  auto rec = [&](auto&& self, long long pos) -> bool {
    if (pos == n_pos)
      return detail::call_visitor(visit, const_cast<const std::vector<int>&>(word));
    int lo = fresh[pos] ? 1 : word[pos - 1];
    for (int v = lo; v <= m; ++v) {
      if (avail[v - 1] == 0) continue;
      --avail[v - 1];
      word[pos] = v;
      bool go = self(self, pos + 1);
      ++avail[v - 1];
      if (!go) return false;
    }
    return true;
  };
  rec(rec, 0);
}

inline std::vector<GeneralizedPermutation> enumerate_genperms(const Composition& alpha,
                                                              const Composition& beta) {
  std::vector<GeneralizedPermutation> out;
  const int m = static_cast<int>(beta.size());
  for_each_word(alpha, beta, [&](const std::vector<int>& w) {
    out.push_back(GeneralizedPermutation::make(alpha, w, m));
  });
  return out;
}

/// |S_{alpha,beta}| by direct enumeration.
inline BigCount genperm_count(const Composition& alpha, const Composition& beta) {
  BigCount count = 0;
  for_each_word(alpha, beta, [&](const std::vector<int>&) { ++count; });
  return count;
}

/// Count the elements of S_{alpha,beta} containing no occurrence of `pi`.
inline BigCount count_avoiding(const Composition& alpha, const Composition& beta,
                               const Pattern& pi) {
  BigCount count = 0;
  std::vector<int> starts = GeneralizedPermutation::block_starts_of(alpha);
  for_each_word(alpha, beta, [&](const std::vector<int>& w) {
    if (!word_contains_pattern(w, starts, pi)) ++count;
  });
  return count;
}

/// Reverse the block order; block contents are unchanged, beta is preserved.
inline GeneralizedPermutation block_reverse(const GeneralizedPermutation& tau) {
  std::vector<int> word;
  word.reserve(tau.word().size());
  for (int b = tau.block_count() - 1; b >= 0; --b) {
    auto blk = tau.block(b);
    word.insert(word.end(), blk.begin(), blk.end());
  }
  return GeneralizedPermutation::make(tau.alpha().reversed(), std::move(word),
                                      tau.alphabet_size());
}

/// Complement every letter through m+1 (reversing each block to keep it
/// sorted); alpha is preserved, beta is reversed.
inline GeneralizedPermutation complement_blocks(const GeneralizedPermutation& tau) {
  const int m = tau.alphabet_size();
  std::vector<int> word;
  word.reserve(tau.word().size());
  for (int b = 0; b < tau.block_count(); ++b) {
    auto blk = tau.block(b);
    for (auto it = blk.rbegin(); it != blk.rend(); ++it) word.push_back(m + 1 - *it);
  }
  return GeneralizedPermutation::make(tau.alpha(), std::move(word), m);
}

namespace detail {

using AvoidKey = std::pair<std::vector<int>, std::vector<int>>;

// Peel the final occurrence of the largest letter. Each summand merges the
// first k blocks into one and shortens it by one entry (first term) or by two
// (second term, dropping another copy of the largest letter from the merge).
// Instances with a negative part count zero; a single block admits exactly
// one filling.
inline BigCount avoid_rec(std::vector<int> a, std::vector<int> b,
                          std::map<AvoidKey, BigCount>& memo) {
  for (int x : a)
    if (x < 0) return 0;
  for (int x : b)
    if (x < 0) return 0;
  strip_trailing_zeros(a);
  strip_trailing_zeros(b);
  long long total = 0;
  for (int x : a) total += x;
  if (total == 0) return 1;
  if (a.size() <= 1) return 1;
  AvoidKey key(a, b);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const int n = static_cast<int>(a.size());
  const int m = static_cast<int>(b.size());
  std::vector<int> b1(b), b2(b);
  b1[m - 1] -= 1;
  b2[m - 1] -= 2;
  BigCount sum = 0;
  long long prefix = 0;
  for (int k = 1; k <= n; ++k) {
    std::vector<int> a1;
    a1.reserve(n - k + 2);
    a1.push_back(static_cast<int>(prefix));
    a1.push_back(a[k - 1] - 1);
    a1.insert(a1.end(), a.begin() + k, a.end());
    std::vector<int> a2(a1);
    a2[0] -= 1;
    sum += avoid_rec(a1, b1, memo) - avoid_rec(std::move(a2), b2, memo);
    prefix += a[k - 1];
  }
  memo.emplace(std::move(key), sum);
  return sum;
}

}  // namespace detail

/// Avoidance count through the block-merging recursion. Valid for the
/// patterns 123 and 213 (whose counts coincide); other patterns are rejected.
inline BigCount count_avoiding_recursive(const Composition& alpha, const Composition& beta,
                                         const Pattern& pi) {
  static const Pattern p123{1, 2, 3};
  static const Pattern p213{2, 1, 3};
  if (!(pi == p123 || pi == p213))
    throw std::invalid_argument("count_avoiding_recursive: pattern must be 123 or 213");
  if (alpha.weight() != beta.weight())
    throw std::invalid_argument("count_avoiding_recursive: weights differ");
  std::map<detail::AvoidKey, BigCount> memo;
  return detail::avoid_rec(alpha.parts(), beta.parts(), memo);
}

/// Length of the longest weakly increasing subsequence, by patience sorting
/// on strictly-greater tail values. O(N log N).
inline int lwis_length(const std::vector<int>& word) {
  std::vector<int> tails;
  for (int x : word) {
    auto it = std::upper_bound(tails.begin(), tails.end(), x);
    if (it == tails.end())
      tails.push_back(x);
    else
      *it = x;
  }
  return static_cast<int>(tails.size());
}

/// Count elements of S_{alpha,beta} with no weakly increasing subsequence of
/// length k, i.e. lwis < k.
inline BigCount count_S_k(const Composition& alpha, const Composition& beta, int k) {
  if (k < 1) throw std::invalid_argument("count_S_k: k must be positive");
  BigCount count = 0;
  for_each_word(alpha, beta, [&](const std::vector<int>& w) {
    if (lwis_length(w) < k) ++count;
  });
  return count;
}

}  // namespace gpav
