#pragma once

// Semistandard Young tableaux: rows weakly increase, columns strictly
// increase. Kostka numbers count fillings of a shape with a given content.

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gpav/combinat.hpp"

namespace gpav {

/// Non-throwing semistandard validity test; optionally reports the reason.
inline bool is_ssyt(const std::vector<std::vector<int>>& rows, std::string* why = nullptr) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].empty()) return fail("empty row");
    if (r > 0 && rows[r].size() > rows[r - 1].size())
      return fail("row lengths must weakly decrease");
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      int v = rows[r][c];
      if (v < 1) return fail("entries must be positive");
      if (c > 0 && rows[r][c - 1] > v) return fail("row not weakly increasing");
      if (r > 0 && rows[r - 1][c] >= v) return fail("column not strictly increasing");
    }
  }
  return true;
}

class YoungTableau {
 public:
  YoungTableau() = default;

  static YoungTableau make(std::vector<std::vector<int>> rows) {
    std::string why;
    if (!is_ssyt(rows, &why))
      throw std::invalid_argument("YoungTableau: " + why);
    YoungTableau t;
    t.rows_ = std::move(rows);
    return t;
  }

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  bool empty() const { return rows_.empty(); }
  std::size_t row_count() const { return rows_.size(); }

  Partition shape() const {
    std::vector<int> s;
    s.reserve(rows_.size());
    for (const auto& r : rows_) s.push_back(static_cast<int>(r.size()));
    return Partition(std::move(s));
  }

  int max_entry() const {
    int m = 0;
    for (const auto& r : rows_)
      for (int v : r) m = std::max(m, v);
    return m;
  }

  /// Letter multiplicities over 1..alphabet_size (defaults to the largest
  /// entry); an explicit size smaller than some entry is rejected.
  Composition content(int alphabet_size = 0) const {
    int m = max_entry();
    if (alphabet_size == 0) alphabet_size = m;
    if (alphabet_size < m)
      throw std::invalid_argument("YoungTableau::content: alphabet smaller than largest entry");
    std::vector<int> counts(alphabet_size, 0);
    for (const auto& r : rows_)
      for (int v : r) ++counts[v - 1];
    return Composition(std::move(counts));
  }

  /// Rows concatenated top to bottom, each read left to right.
  std::vector<int> row_reading_word() const {
    std::vector<int> w;
    for (const auto& r : rows_) w.insert(w.end(), r.begin(), r.end());
    return w;
  }

  std::string str() const {
    std::ostringstream out;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (r) out << '/';
      for (std::size_t c = 0; c < rows_[r].size(); ++c) {
        if (c) out << ' ';
        out << rows_[r][c];
      }
    }
    return "[" + out.str() + "]";
  }

  bool operator==(const YoungTableau& o) const { return rows_ == o.rows_; }
  auto operator<=>(const YoungTableau& o) const { return rows_ <=> o.rows_; }

 private:
  std::vector<std::vector<int>> rows_;
};

namespace detail {

template <class F>
bool ssyt_dfs(const std::vector<int>& shape, const std::vector<int>& below,
              int m, std::vector<int>& avail, std::vector<std::vector<int>>& rows,
              std::size_t r, std::size_t c, F&& visit) {
  if (r == shape.size())
    return call_visitor(visit, const_cast<const std::vector<std::vector<int>>&>(rows));
  std::size_t nr = r, nc = c + 1;
  if (nc >= static_cast<std::size_t>(shape[r])) {
    ++nr;
    nc = 0;
  }
  int lo = 1;
  if (c > 0) lo = std::max(lo, rows[r][c - 1]);
  if (r > 0) lo = std::max(lo, rows[r - 1][c] + 1);
  // the column below this cell needs strictly larger entries
  int hi = m - below[r * static_cast<std::size_t>(shape[0]) + c];
  for (int v = lo; v <= hi; ++v) {
    if (avail[v - 1] == 0) continue;
    --avail[v - 1];
    rows[r][c] = v;
    bool go = ssyt_dfs(shape, below, m, avail, rows, nr, nc, visit);
    ++avail[v - 1];
    if (!go) return false;
  }
  return true;
}

}  // namespace detail

/// Visit every semistandard filling of `shape` with letter multiplicities
/// `content`, ordered lexicographically by row reading word. The row buffer
/// is reused between visits.
template <class F>
void for_each_ssyt(const Partition& shape, const Composition& content, F&& visit) {
  if (shape.weight() != content.weight())
    throw std::invalid_argument("for_each_ssyt: shape and content weights differ");
  if (shape.empty()) {
    std::vector<std::vector<int>> empty_rows;
    detail::call_visitor(visit, const_cast<const std::vector<std::vector<int>>&>(empty_rows));
    return;
  }
  const std::vector<int>& sh = shape.parts();
  const int m = static_cast<int>(content.size());
  std::vector<int> avail = content.parts();
  std::vector<std::vector<int>> rows(sh.size());
  for (std::size_t r = 0; r < sh.size(); ++r) rows[r].assign(sh[r], 0);
  // below[r][c] = number of cells beneath (r, c), flattened over shape[0] columns
  Partition conj = shape.conjugate();
  std::vector<int> below(sh.size() * static_cast<std::size_t>(sh[0]), 0);
  for (std::size_t r = 0; r < sh.size(); ++r)
    for (int c = 0; c < sh[r]; ++c)
      below[r * static_cast<std::size_t>(sh[0]) + c] =
          conj[c] - static_cast<int>(r) - 1;
  detail::ssyt_dfs(sh, below, m, avail, rows, 0, 0, visit);
}

inline std::vector<YoungTableau> enumerate_ssyt(const Partition& shape,
                                                const Composition& content) {
  std::vector<YoungTableau> out;
  for_each_ssyt(shape, content, [&](const std::vector<std::vector<int>>& rows) {
    out.push_back(YoungTableau::make(rows));
  });
  return out;
}

/// Kostka number by direct cell-by-cell enumeration; no cache, content taken
/// verbatim. Serves as the independent route for cross-checks.
inline BigCount kostka_by_enumeration(const Partition& shape, const Composition& content) {
  if (shape.weight() != content.weight()) return 0;
  BigCount count = 0;
  for_each_ssyt(shape, content, [&](const std::vector<std::vector<int>>&) { ++count; });
  return count;
}

namespace detail {

using KostkaKey = std::pair<std::vector<int>, std::vector<int>>;
using KostkaMemo = std::map<KostkaKey, BigCount>;

inline KostkaMemo& kostka_memo() {
  static KostkaMemo memo;
  return memo;
}

inline std::mutex& kostka_mutex() {
  static std::mutex mu;
  return mu;
}

// Fillings whose largest letter occupies a horizontal strip: recurse over all
// ways to trim `take` boxes off the shape, at most lambda_i - lambda_{i+1}
// from row i, then place the previous letter on what remains.
template <class Self>
BigCount kostka_strip_sum(const std::vector<int>& shape, std::size_t row, int take,
                          std::vector<int>& trimmed, Self&& recurse) {
  if (row == shape.size()) {
    if (take != 0) return 0;
    std::vector<int> next(trimmed);
    strip_trailing_zeros(next);
    return recurse(next);
  }
  int next_len = row + 1 < shape.size() ? shape[row + 1] : 0;
  int max_here = shape[row] - next_len;
  BigCount sum = 0;
  for (int t = std::min(max_here, take); t >= 0; --t) {
    trimmed[row] = shape[row] - t;
    sum += kostka_strip_sum(shape, row + 1, take - t, trimmed, recurse);
  }
  trimmed[row] = shape[row];
  return sum;
}

// content must be free of zero parts; processed back to front.
inline BigCount kostka_peel(const std::vector<int>& shape, std::vector<int> content,
                            KostkaMemo* shared_memo, KostkaMemo& local_memo) {
  if (content.empty()) return shape.empty() ? 1 : 0;
  KostkaKey key(shape, content);
  if (shared_memo) {
    std::lock_guard<std::mutex> lock(kostka_mutex());
    if (auto it = shared_memo->find(key); it != shared_memo->end()) return it->second;
  } else if (auto it = local_memo.find(key); it != local_memo.end()) {
    return it->second;
  }
  int take = content.back();
  content.pop_back();
  std::vector<int> trimmed(shape);
  BigCount result =
      kostka_strip_sum(shape, 0, take, trimmed, [&](const std::vector<int>& inner) {
        return kostka_peel(inner, content, shared_memo, local_memo);
      });
  if (shared_memo) {
    std::lock_guard<std::mutex> lock(kostka_mutex());
    shared_memo->emplace(std::move(key), result);
  } else {
    local_memo.emplace(std::move(key), result);
  }
  return result;
}

// Canonical entry point on raw vectors. A negative content part means an
// impossible demand, counted as zero. Content order never changes the value,
// so the memo key uses the decreasing rearrangement.
inline BigCount kostka_raw(const std::vector<int>& shape, std::vector<int> content,
                           bool use_shared_memo) {
  long long sw = 0, cw = 0;
  for (int x : shape) sw += x;
  for (int x : content) {
    if (x < 0) return 0;
    cw += x;
  }
  if (sw != cw) return 0;
  std::sort(content.begin(), content.end(), std::greater<int>());
  strip_trailing_zeros(content);
  KostkaMemo local;
  return kostka_peel(shape, std::move(content),
                     use_shared_memo ? &kostka_memo() : nullptr, local);
}

}  // namespace detail

/// Kostka number K_{shape,content}, memoized on (shape, sorted content).
inline BigCount kostka(const Partition& shape, const Composition& content) {
  return detail::kostka_raw(shape.parts(), content.parts(), true);
}

/// Raw-vector overload; negative content parts give 0.
inline BigCount kostka(const std::vector<int>& shape, const std::vector<int>& content) {
  std::vector<int> s(shape);
  detail::strip_trailing_zeros(s);
  for (std::size_t i = 0; i + 1 < s.size(); ++i)
    if (s[i] < s[i + 1]) throw std::invalid_argument("kostka: shape not weakly decreasing");
  for (int x : s)
    if (x < 0) throw std::invalid_argument("kostka: negative shape part");
  return detail::kostka_raw(s, content, true);
}

/// Same value as kostka() but never touches the process-wide cache.
inline BigCount kostka_fresh(const Partition& shape, const Composition& content) {
  return detail::kostka_raw(shape.parts(), content.parts(), false);
}

inline std::size_t kostka_cache_size() {
  std::lock_guard<std::mutex> lock(detail::kostka_mutex());
  return detail::kostka_memo().size();
}

inline void kostka_cache_clear() {
  std::lock_guard<std::mutex> lock(detail::kostka_mutex());
  detail::kostka_memo().clear();
}

inline std::vector<std::pair<detail::KostkaKey, BigCount>> kostka_cache_snapshot() {
  std::lock_guard<std::mutex> lock(detail::kostka_mutex());
  return {detail::kostka_memo().begin(), detail::kostka_memo().end()};
}

inline void kostka_cache_insert(const detail::KostkaKey& key, const BigCount& value) {
  std::lock_guard<std::mutex> lock(detail::kostka_mutex());
  detail::kostka_memo().emplace(key, value);
}

namespace detail {

// Two equal rows of length n. Merging the first two letters after deleting i
// columns that stack them reduces to the same problem with shape (n-i, n-i).
inline BigCount two_row_rec(std::vector<int> content, long long n) {
  // only the merged leading part can be zero here
  while (!content.empty() && content.front() == 0) content.erase(content.begin());
  if (content.empty()) return n == 0 ? 1 : 0;
  if (content.size() == 1) return 0;  // one letter cannot fill two stacked rows
  BigCount sum = 0;
  int cap = std::min(content[0], content[1]);
  for (int i = 0; i <= cap; ++i) {
    std::vector<int> next;
    next.reserve(content.size() - 1);
    next.push_back(content[0] + content[1] - 2 * i);
    next.insert(next.end(), content.begin() + 2, content.end());
    sum += two_row_rec(std::move(next), n - i);
  }
  return sum;
}

}  // namespace detail

/// K_{(n,n),content} through the column-deletion recursion on the first two
/// letters. Zero parts are skipped; the weight must equal 2n.
inline BigCount kostka_two_row(long long n, const Composition& content) {
  if (n < 0) throw std::invalid_argument("kostka_two_row: negative n");
  if (content.weight() != 2 * n)
    throw std::invalid_argument("kostka_two_row: content weight must be 2n");
  std::vector<int> c;
  c.reserve(content.size());
  for (int x : content.parts())
    if (x > 0) c.push_back(x);
  return detail::two_row_rec(std::move(c), n);
}

/// Number of standard Young tableaux of `shape` by the hook length formula.
inline BigCount hook_length_count(const Partition& shape) {
  Partition conj = shape.conjugate();
  BigCount denom = 1;
  for (std::size_t r = 0; r < shape.size(); ++r)
    for (int c = 0; c < shape[r]; ++c)
      denom *= (shape[r] - c) + (conj[c] - static_cast<int>(r)) - 1;
  return factorial(shape.weight()) / denom;
}

}  // namespace gpav
