#include "cocat/abgp/normal_form.hpp"

#include <utility>

#include "cocat/core/error.hpp"

namespace cocat::abgp {

namespace {

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

HermiteForm hnf(const IntMatrix& m) {
  HermiteForm out{m, IntMatrix::identity(m.cols()), {}};
  IntMatrix& h = out.h;
  IntMatrix& u = out.u;
  const std::size_t cols = m.cols();
  std::size_t pc = 0;
  for (std::size_t row = 0; row < m.rows() && pc < cols; ++row) {
    // Euclid across the row until only column pc is nonzero from pc onwards.
    while (true) {
      std::size_t best = cols;
      for (std::size_t j = pc; j < cols; ++j)
        if (h(row, j) != 0 && (best == cols || abs(h(row, j)) < abs(h(row, best)))) best = j;
      if (best == cols) break;
      h.swap_cols(pc, best);
      u.swap_cols(pc, best);
      bool clean = true;
      for (std::size_t j = pc + 1; j < cols; ++j) {
        if (h(row, j) == 0) continue;
        const BigInt q = floor_div(h(row, j), h(row, pc));
        h.add_col_multiple(j, pc, -q);
        u.add_col_multiple(j, pc, -q);
        if (h(row, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h(row, pc) == 0) continue;
    if (h(row, pc) < 0) {
      h.negate_col(pc);
      u.negate_col(pc);
    }
    for (std::size_t k = 0; k < pc; ++k) {
      const BigInt q = floor_div(h(row, k), h(row, pc));
      h.add_col_multiple(k, pc, -q);
      u.add_col_multiple(k, pc, -q);
    }
    out.pivot_rows.push_back(row);
    ++pc;
  }
  return out;
}

std::vector<BigInt> SmithForm::diagonal() const {
  std::vector<BigInt> out;
  for (std::size_t k = 0; k < d.rows() && k < d.cols(); ++k) out.push_back(d(k, k));
  return out;
}

SmithForm snf(const IntMatrix& m) {
  SmithForm out{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
  IntMatrix& d = out.d;
  const std::size_t rows = m.rows(), cols = m.cols();
  for (std::size_t t = 0; t < rows && t < cols; ++t) {
    // smallest nonzero entry of the trailing block becomes the pivot
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (d(i, j) != 0 && (pi == rows || abs(d(i, j)) < abs(d(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi == rows) break;
    d.swap_rows(t, pi);
    out.u.swap_rows(t, pi);
    d.swap_cols(t, pj);
    out.v.swap_cols(t, pj);

    while (true) {
      for (std::size_t i = t + 1; i < rows; ++i) {
        const BigInt q = floor_div(d(i, t), d(t, t));
        d.add_row_multiple(i, t, -q);
        out.u.add_row_multiple(i, t, -q);
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        const BigInt q = floor_div(d(t, j), d(t, t));
        d.add_col_multiple(j, t, -q);
        out.v.add_col_multiple(j, t, -q);
      }
      // any remainder left in row/column t is smaller than the pivot
      std::size_t ri = rows, cj = cols;
      for (std::size_t i = t + 1; i < rows; ++i)
        if (d(i, t) != 0 && (ri == rows || abs(d(i, t)) < abs(d(ri, t)))) ri = i;
      for (std::size_t j = t + 1; j < cols; ++j)
        if (d(t, j) != 0 && (cj == cols || abs(d(t, j)) < abs(d(t, cj)))) cj = j;
      if (ri != rows && (cj == cols || abs(d(ri, t)) <= abs(d(t, cj)))) {
        d.swap_rows(t, ri);
        out.u.swap_rows(t, ri);
        continue;
      }
      if (cj != cols) {
        d.swap_cols(t, cj);
        out.v.swap_cols(t, cj);
        continue;
      }
      // row and column clear; enforce divisibility of the trailing block
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (d(i, j) % d(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      d.add_row_multiple(t, bad, 1);
      out.u.add_row_multiple(t, bad, 1);
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      out.u.negate_row(t);
    }
  }
  return out;
}

std::optional<std::vector<BigInt>> solve_hermite(const HermiteForm& hf, const std::vector<BigInt>& b) {
  const IntMatrix& h = hf.h;
  if (b.size() != h.rows()) throw Error(ErrorKind::TypeMismatch, "right-hand side length");
  std::vector<BigInt> residual = b;
  std::vector<BigInt> y(h.cols());
  std::size_t k = 0;
  for (std::size_t row = 0; row < h.rows(); ++row) {
    if (k < hf.rank() && hf.pivot_rows[k] == row) {
      const BigInt& p = h(row, k);
      if (residual[row] % p != 0) return std::nullopt;
      y[k] = residual[row] / p;
      for (std::size_t i = row; i < h.rows(); ++i) residual[i] -= y[k] * h(i, k);
      ++k;
    } else if (residual[row] != 0) {
      return std::nullopt;
    }
  }
  return y;
}

std::optional<std::vector<BigInt>> solve(const IntMatrix& m, const std::vector<BigInt>& b) {
  const HermiteForm hf = hnf(m);
  auto y = solve_hermite(hf, b);
  if (!y) return std::nullopt;
  return hf.u * *y;
}

bool in_column_lattice(const IntMatrix& m, const std::vector<BigInt>& v) {
  return solve_hermite(hnf(m), v).has_value();
}

IntMatrix kernel_basis(const IntMatrix& m) {
  const HermiteForm hf = hnf(m);
  std::vector<std::size_t> zero_cols;
  for (std::size_t c = hf.rank(); c < m.cols(); ++c) zero_cols.push_back(c);
  return hf.u.select_cols(zero_cols);
}

IntMatrix lattice_basis(const IntMatrix& m) {
  const HermiteForm hf = hnf(m);
  std::vector<std::size_t> cols;
  for (std::size_t c = 0; c < hf.rank(); ++c) cols.push_back(c);
  return hf.h.select_cols(cols);
}

std::vector<BigInt> cokernel(const IntMatrix& m) {
  const auto diag = snf(m).diagonal();
  std::vector<BigInt> out;
  for (const auto& d : diag)
    if (d != 1) out.push_back(d);
  for (std::size_t k = diag.size(); k < m.rows(); ++k) out.emplace_back(0);
  return out;
}

IntMatrix unimodular_inverse(const IntMatrix& u) {
  if (u.rows() != u.cols()) throw Error(ErrorKind::InvalidArgument, "inverse of a non-square matrix");
  const HermiteForm hf = hnf(u);
  IntMatrix inv(u.rows(), u.cols());
  for (std::size_t c = 0; c < u.cols(); ++c) {
    std::vector<BigInt> e(u.rows());
    e[c] = 1;
    auto y = solve_hermite(hf, e);
    if (!y) throw Error(ErrorKind::InvalidArgument, "matrix is not unimodular");
    const auto x = hf.u * *y;
    for (std::size_t r = 0; r < u.rows(); ++r) inv(r, c) = x[r];
  }
  return inv;
}

std::size_t rank(const IntMatrix& m) { return hnf(m).rank(); }

}  // namespace cocat::abgp
