#pragma once

// Core integer combinatorics: compositions, partitions, exact counting
// sequences, finite difference arrays, and the dominance order.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace gpav {

/// Exact arbitrary-precision integer used for all counts.
using BigCount = boost::multiprecision::cpp_int;

namespace detail {

// Visitors may return void (visit everything) or bool (false stops the walk).
template <class F, class... A>
bool call_visitor(F&& f, A&&... a) {
  if constexpr (std::is_void_v<std::invoke_result_t<F&, A...>>) {
    f(std::forward<A>(a)...);
    return true;
  } else {
    return static_cast<bool>(f(std::forward<A>(a)...));
  }
}

inline void strip_trailing_zeros(std::vector<int>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

inline std::string join_ints(const std::vector<int>& v, char sep = ',') {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out.push_back(sep);
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace detail

/// Finite sequence of nonnegative integer parts. A zero part is legal and
/// denotes an empty block (or an unused letter, depending on context).
class Composition {
 public:
  Composition() = default;

  explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
      if (p < 0) throw std::invalid_argument("Composition: negative part");
      weight_ += p;
    }
  }

  Composition(std::initializer_list<int> parts)
      : Composition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  long long weight() const { return weight_; }

  Composition reversed() const {
    return Composition(std::vector<int>(parts_.rbegin(), parts_.rend()));
  }

  std::string str() const { return "(" + detail::join_ints(parts_) + ")"; }

  bool operator==(const Composition& o) const { return parts_ == o.parts_; }
  auto operator<=>(const Composition& o) const { return parts_ <=> o.parts_; }

 private:
  std::vector<int> parts_;
  long long weight_ = 0;
};

/// Weakly decreasing sequence of strictly positive parts.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0) throw std::invalid_argument("Partition: part must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw std::invalid_argument("Partition: parts must be weakly decreasing");
      weight_ += parts_[i];
    }
  }

  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  long long weight() const { return weight_; }

  /// Part at index i, 0 beyond the last part.
  int part_or_zero(std::size_t i) const {
    return i < parts_.size() ? parts_[i] : 0;
  }

  Partition conjugate() const {
    std::vector<int> c(parts_.empty() ? 0 : parts_[0], 0);
    for (int p : parts_)
      for (int j = 0; j < p; ++j) ++c[j];
    return Partition(std::move(c));
  }

  Composition to_composition() const { return Composition(parts_); }

  std::string str() const { return "(" + detail::join_ints(parts_) + ")"; }

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }

 private:
  std::vector<int> parts_;
  long long weight_ = 0;
};

inline Composition concat(const Composition& a, const Composition& b) {
  std::vector<int> parts = a.parts();
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  return Composition(std::move(parts));
}

/// Rearrange a composition into a partition (sort descending, drop zeros).
inline Partition sorted_partition(const Composition& c) {
  std::vector<int> p = c.parts();
  std::sort(p.begin(), p.end(), std::greater<int>());
  while (!p.empty() && p.back() == 0) p.pop_back();
  return Partition(std::move(p));
}

/// Rectangular shape: `height` rows of length `width`.
inline Partition rectangle(int height, int width) {
  if (height < 0 || width < 0) throw std::invalid_argument("rectangle: negative dimension");
  if (height == 0 || width == 0) return Partition();
  return Partition(std::vector<int>(static_cast<std::size_t>(height), width));
}

inline BigCount factorial(long long n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  BigCount r = 1;
  for (long long i = 2; i <= n; ++i) r *= i;
  return r;
}

inline BigCount binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigCount r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;  // exact at every step
  }
  return r;
}

/// Number of distinct arrangements of the multiset with these multiplicities.
inline BigCount multinomial(const Composition& alpha) {
  BigCount r = factorial(alpha.weight());
  for (int p : alpha.parts()) r /= factorial(p);
  return r;
}

inline BigCount catalan(long long n) {
  if (n < 0) throw std::invalid_argument("catalan: negative index");
  return binomial(2 * n, n) / (n + 1);
}

/// Alternating binomial transform of the Catalan numbers.
inline BigCount riordan(long long n) {
  if (n < 0) throw std::invalid_argument("riordan: negative index");
  BigCount r = 0;
  for (long long i = 0; i <= n; ++i) {
    BigCount term = binomial(n, i) * catalan(i);
    if ((n - i) % 2 == 0)
      r += term;
    else
      r -= term;
  }
  return r;
}

inline BigCount motzkin(long long n) {
  if (n < 0) throw std::invalid_argument("motzkin: negative index");
  return riordan(n) + riordan(n + 1);
}

/// One application maps f to (f_1 - f_0, f_2 - f_1, ...); `order` applications
/// shorten the sequence by `order` terms.
inline std::vector<BigCount> difference_array(std::vector<BigCount> seq, int order) {
  if (order < 0) throw std::invalid_argument("difference_array: negative order");
  if (static_cast<std::size_t>(order) + 1 > seq.size())
    throw std::invalid_argument("difference_array: order exceeds sequence length - 1");
  for (int t = 0; t < order; ++t) {
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) seq[i] = seq[i + 1] - seq[i];
    seq.pop_back();
  }
  return seq;
}

/// Dominance order on partitions of the same weight: every prefix sum of `mu`
/// is at least the matching prefix sum of `nu`.
inline bool dominates(const Partition& mu, const Partition& nu) {
  if (mu.weight() != nu.weight())
    throw std::invalid_argument("dominates: weights differ");
  long long su = 0, sv = 0;
  std::size_t len = std::max(mu.size(), nu.size());
  for (std::size_t i = 0; i < len; ++i) {
    su += mu.part_or_zero(i);
    sv += nu.part_or_zero(i);
    if (su < sv) return false;
  }
  return true;
}

namespace detail {

template <class F>
bool composition_dfs(long long remaining, int parts_left, int lo,
                     std::vector<int>& buf, F&& visit) {
  if (parts_left == 0) {
    if (remaining != 0) return true;
    return call_visitor(visit, const_cast<const std::vector<int>&>(buf));
  }
  long long hi = remaining - static_cast<long long>(lo) * (parts_left - 1);
  for (long long v = lo; v <= hi; ++v) {
    buf.push_back(static_cast<int>(v));
    bool go = composition_dfs(remaining - v, parts_left - 1, lo, buf, visit);
    buf.pop_back();
    if (!go) return false;
  }
  return true;
}

}  // namespace detail

/// Visit every composition of `total` into exactly `num_parts` parts in
/// lexicographic order. Visitor receives the part vector; returning false
/// stops the walk.
template <class F>
void for_each_composition(long long total, int num_parts, bool allow_zero, F&& visit) {
  if (total < 0) throw std::invalid_argument("for_each_composition: negative total");
  if (num_parts < 1) throw std::invalid_argument("for_each_composition: num_parts must be positive");
  std::vector<int> buf;
  buf.reserve(num_parts);
  detail::composition_dfs(total, num_parts, allow_zero ? 0 : 1, buf, visit);
}

inline std::vector<Composition> compositions(long long total, int num_parts, bool allow_zero) {
  std::vector<Composition> out;
  for_each_composition(total, num_parts, allow_zero,
                       [&](const std::vector<int>& p) { out.push_back(Composition(p)); });
  return out;
}

namespace detail {

template <class F>
bool partition_dfs(long long remaining, int max_part, int len_left,
                   std::vector<int>& buf, F&& visit) {
  if (remaining == 0) return call_visitor(visit, const_cast<const std::vector<int>&>(buf));
  if (len_left == 0) return true;
  int hi = static_cast<int>(std::min<long long>(max_part, remaining));
  for (int v = hi; v >= 1; --v) {
    if (static_cast<long long>(v) * len_left < remaining) break;
    buf.push_back(v);
    bool go = partition_dfs(remaining - v, v, len_left - 1, buf, visit);
    buf.pop_back();
    if (!go) return false;
  }
  return true;
}

}  // namespace detail

/// Visit every partition of `total` with parts at most `max_part` and at most
/// `max_len` parts (-1 means unbounded), largest-first order.
template <class F>
void for_each_partition(long long total, int max_part, int max_len, F&& visit) {
  if (total < 0) throw std::invalid_argument("for_each_partition: negative total");
  int mp = max_part < 0 ? static_cast<int>(total) : max_part;
  int ml = max_len < 0 ? static_cast<int>(total) : max_len;
  std::vector<int> buf;
  detail::partition_dfs(total, mp, ml, buf, visit);
}

template <class F>
void for_each_partition(long long total, F&& visit) {
  for_each_partition(total, -1, -1, std::forward<F>(visit));
}

inline std::vector<Partition> partitions(long long total, int max_part = -1, int max_len = -1) {
  std::vector<Partition> out;
  for_each_partition(total, max_part, max_len,
                     [&](const std::vector<int>& p) { out.push_back(Partition(p)); });
  return out;
}

}  // namespace gpav
