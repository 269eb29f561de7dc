#pragma once

// Nonnegative lattice paths with unit horizontal steps, identified by their
// dy sequences. The central family, here called CR paths, has n+k steps: the
// first 2k from {+1,-1}, the rest from {+2,0,-2}, never dipping below the
// axis, never taking a flat step on the axis, and ending at height 0. Their
// counts interpolate between the Riordan (k=0) and Catalan (k=n) numbers.

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gpav/combinat.hpp"
#include "gpav/tableau.hpp"

namespace gpav {

/// A path is its sequence of per-step rises; dx is always 1.
struct LatticePath {
  std::vector<int> dy;
  bool operator==(const LatticePath&) const = default;
  auto operator<=>(const LatticePath&) const = default;
};

inline bool validate_cr(const LatticePath& path, long long n, long long k) {
  if (k < 0 || k > n) return false;
  if (static_cast<long long>(path.dy.size()) != n + k) return false;
  long long h = 0;
  for (long long i = 0; i < n + k; ++i) {
    int d = path.dy[i];
    if (i < 2 * k) {
      if (d != 1 && d != -1) return false;
    } else {
      if (d != 2 && d != 0 && d != -2) return false;
      if (d == 0 && h == 0) return false;  // flat step may not ride the axis
    }
    h += d;
    if (h < 0) return false;
  }
  return h == 0;
}

namespace detail {

// Steps are tried in the listed order; rises first gives the enumeration
// order used throughout (up-steps sort before down-steps).
template <class StepsAt, class F>
bool path_dfs(long long length, StepsAt&& steps_at, bool forbid_flat_on_axis,
              std::vector<int>& buf, long long height, int max_fall, F&& visit) {
  long long pos = static_cast<long long>(buf.size());
  if (pos == length) {
    if (height != 0) return true;
    return call_visitor(visit, buf);
  }
  if (height > static_cast<long long>(max_fall) * (length - pos)) return true;
  for (int d : steps_at(pos)) {
    if (height + d < 0) continue;
    if (d == 0 && height == 0 && forbid_flat_on_axis) continue;
    buf.push_back(d);
    bool go = path_dfs(length, steps_at, forbid_flat_on_axis, buf, height + d,
                       max_fall, visit);
    buf.pop_back();
    if (!go) return false;
  }
  return true;
}

}  // namespace detail

/// Visit every CR path for (n, k) in up-steps-first lexicographic order on
/// dy sequences. The buffer is reused; returning false stops the walk.
template <class F>
void for_each_cr(long long n, long long k, F&& visit) {
  if (k < 0 || k > n) throw std::invalid_argument("for_each_cr: need 0 <= k <= n");
  static const std::vector<int> pair_steps = {1, -1};
  static const std::vector<int> double_steps = {2, 0, -2};
  auto steps_at = [&, k](long long pos) -> const std::vector<int>& {
    return pos < 2 * k ? pair_steps : double_steps;
  };
  std::vector<int> buf;
  buf.reserve(n + k);
  detail::path_dfs(n + k, steps_at, true, buf, 0, 2, [&](const std::vector<int>& dy) {
    return detail::call_visitor(visit, LatticePath{dy});
  });
}

inline std::vector<LatticePath> enumerate_cr(long long n, long long k) {
  std::vector<LatticePath> out;
  for_each_cr(n, k, [&](const LatticePath& p) { out.push_back(p); });
  return out;
}

/// Dyck paths: 2n steps of {+1,-1}, nonnegative, ending at 0.
template <class F>
void for_each_dyck(long long n, F&& visit) {
  if (n < 0) throw std::invalid_argument("for_each_dyck: negative n");
  auto steps_at = [](long long) -> const std::vector<int>& {
    static const std::vector<int> s = {1, -1};
    return s;
  };
  std::vector<int> buf;
  detail::path_dfs(2 * n, steps_at, false, buf, 0, 1, [&](const std::vector<int>& dy) {
    return detail::call_visitor(visit, LatticePath{dy});
  });
}

/// Motzkin paths: n steps of {+1,0,-1}, nonnegative, ending at 0.
template <class F>
void for_each_motzkin(long long n, F&& visit) {
  if (n < 0) throw std::invalid_argument("for_each_motzkin: negative n");
  auto steps_at = [](long long) -> const std::vector<int>& {
    static const std::vector<int> s = {1, 0, -1};
    return s;
  };
  std::vector<int> buf;
  detail::path_dfs(n, steps_at, false, buf, 0, 1, [&](const std::vector<int>& dy) {
    return detail::call_visitor(visit, LatticePath{dy});
  });
}

/// Riordan paths: Motzkin paths with no flat step on the axis.
template <class F>
void for_each_riordan(long long n, F&& visit) {
  if (n < 0) throw std::invalid_argument("for_each_riordan: negative n");
  auto steps_at = [](long long) -> const std::vector<int>& {
    static const std::vector<int> s = {1, 0, -1};
    return s;
  };
  std::vector<int> buf;
  detail::path_dfs(n, steps_at, true, buf, 0, 1, [&](const std::vector<int>& dy) {
    return detail::call_visitor(visit, LatticePath{dy});
  });
}

enum class CrMethod { kEnumerate, kRecurrence, kRiordanSum, kCatalanSum, kDifference };

/// Count CR paths for (n, k) by one of five routes: direct enumeration, the
/// two-term recurrence anchored at the Riordan column, a binomial sum of
/// Riordan numbers, an alternating binomial sum of Catalan numbers, or the
/// repeated difference array of the Catalan sequence.
inline BigCount cr_count(long long n, long long k, CrMethod method) {
  if (k < 0 || k > n) throw std::invalid_argument("cr_count: need 0 <= k <= n");
  switch (method) {
    case CrMethod::kEnumerate: {
      BigCount count = 0;
      for_each_cr(n, k, [&](const LatticePath&) { ++count; });
      return count;
    }
    case CrMethod::kRecurrence: {
      // column j needs rows j..n; roll a single column upward in j
      std::vector<BigCount> col(n + 1);
      for (long long i = 0; i <= n; ++i) col[i] = riordan(i);
      for (long long j = 1; j <= k; ++j)
        for (long long i = n; i >= j; --i) col[i] += col[i - 1];
      return col[n];
    }
    case CrMethod::kRiordanSum: {
      BigCount sum = 0;
      for (long long i = 0; i <= k; ++i) sum += binomial(k, i) * riordan(n - i);
      return sum;
    }
    case CrMethod::kCatalanSum: {
      BigCount sum = 0;
      for (long long i = 0; i <= n - k; ++i) {
        BigCount term = binomial(n - k, i) * catalan(n - i);
        if (i % 2 == 0)
          sum += term;
        else
          sum -= term;
      }
      return sum;
    }
    case CrMethod::kDifference: {
      std::vector<BigCount> seq;
      seq.reserve(n + 1);
      for (long long i = 0; i <= n; ++i) seq.push_back(catalan(i));
      return difference_array(std::move(seq), static_cast<int>(n - k)).back();
    }
  }
  throw std::invalid_argument("cr_count: unknown method");
}

/// Transcribe a CR path into a two-row rectangle: step s of rise y gives
/// letter s, with (mult + y)/2 copies in row one and (mult - y)/2 in row two,
/// where mult is 1 on the first 2k steps and 2 afterwards.
inline YoungTableau path_to_tableau(const LatticePath& path, long long n, long long k) {
  if (!validate_cr(path, n, k))
    throw std::invalid_argument("path_to_tableau: not a valid CR path for (n, k)");
  std::vector<int> row1, row2;
  for (long long s = 0; s < n + k; ++s) {
    int mult = s < 2 * k ? 1 : 2;
    int y = path.dy[s];
    int up = (mult + y) / 2, down = (mult - y) / 2;
    for (int i = 0; i < up; ++i) row1.push_back(static_cast<int>(s) + 1);
    for (int i = 0; i < down; ++i) row2.push_back(static_cast<int>(s) + 1);
  }
  if (row1.empty()) return YoungTableau();
  return YoungTableau::make({std::move(row1), std::move(row2)});
}

struct CrPathWithSize {
  LatticePath path;
  long long n = 0;
  long long k = 0;
  bool operator==(const CrPathWithSize&) const = default;
};

/// Invert path_to_tableau. The tableau must be a two-row rectangle whose
/// letter multiplicities read 1,...,1 (2k times) then 2,...,2.
inline CrPathWithSize tableau_to_path(const YoungTableau& t) {
  if (t.empty()) return CrPathWithSize{LatticePath{}, 0, 0};
  if (t.row_count() != 2 || t.rows()[0].size() != t.rows()[1].size())
    throw std::invalid_argument("tableau_to_path: shape must be a two-row rectangle");
  const long long n = static_cast<long long>(t.rows()[0].size());
  const Composition counts = t.content();
  const int letters = static_cast<int>(counts.size());
  int singles = 0;
  while (singles < letters && counts[singles] == 1) ++singles;
  if (singles % 2 != 0)
    throw std::invalid_argument("tableau_to_path: odd number of singleton letters");
  for (int s = singles; s < letters; ++s)
    if (counts[s] != 2)
      throw std::invalid_argument("tableau_to_path: multiplicities must be ones then twos");
  const long long k = singles / 2;
  if (letters != n + k)
    throw std::invalid_argument("tableau_to_path: letter count must be n + k");

  std::vector<int> dy(letters, 0);
  for (int v : t.rows()[0]) ++dy[v - 1];
  for (int v : t.rows()[1]) --dy[v - 1];
  CrPathWithSize out{LatticePath{std::move(dy)}, n, k};
  if (!validate_cr(out.path, n, k))
    throw std::invalid_argument("tableau_to_path: row counts do not trace a CR path");
  return out;
}

}  // namespace gpav
