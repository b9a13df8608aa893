#pragma once

// Reference computations for small integer matrices, independent of the
// normal-form code: determinantal divisors from explicit minors.

#include <cstdint>
#include <numeric>
#include <vector>

namespace oracle {

using Mat = std::vector<std::vector<long long>>;

inline long long det(const Mat& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  long long total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    Mat minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<long long> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    total += (c % 2 ? -1 : 1) * m[0][c] * det(minor);
  }
  return total;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

/// gcd of all k x k minors, for k = 1 .. min(rows, cols); trailing zeros
/// mark k beyond the rank.
inline std::vector<long long> determinantal_divisors(const Mat& m, std::size_t rows, std::size_t cols) {
  std::vector<long long> out;
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(rows, k, 0, cur, rs);
    subsets(cols, k, 0, cur, cs);
    long long g = 0;
    for (const auto& ri : rs)
      for (const auto& ci : cs) {
        Mat sub;
        for (auto r : ri) {
          std::vector<long long> row;
          for (auto c : ci) row.push_back(m[r][c]);
          sub.push_back(row);
        }
        g = std::gcd(g, det(sub));
      }
    out.push_back(g);
  }
  return out;
}

inline std::size_t rank_of(const std::vector<long long>& divisors) {
  std::size_t r = 0;
  while (r < divisors.size() && divisors[r] != 0) ++r;
  return r;
}

/// Nontrivial invariant factors of Z^rows / col(m), 0 for free summands.
inline std::vector<long long> cokernel(const Mat& m, std::size_t rows, std::size_t cols) {
  const auto d = determinantal_divisors(m, rows, cols);
  const std::size_t r = rank_of(d);
  std::vector<long long> out;
  long long prev = 1;
  for (std::size_t k = 0; k < r; ++k) {
    const long long f = d[k] / prev;
    if (f != 1) out.push_back(f);
    prev = d[k];
  }
  for (std::size_t k = r; k < rows; ++k) out.push_back(0);
  return out;
}

/// b lies in the column lattice of m iff appending it changes neither the
/// rank nor the top determinantal divisor.
inline bool in_lattice(const Mat& m, std::size_t rows, std::size_t cols, const std::vector<long long>& b) {
  Mat ext = m;
  for (std::size_t r = 0; r < rows; ++r) ext[r].push_back(b[r]);
  const auto d = determinantal_divisors(m, rows, cols);
  const auto e = determinantal_divisors(ext, rows, cols + 1);
  const std::size_t rk = rank_of(d), rke = rank_of(e);
  if (rk != rke) return false;
  if (rk == 0) return true;
  return d[rk - 1] == e[rk - 1];
}

}  // namespace oracle
