#pragma once

// Integer linear systems whose unknowns are matrices.
//
// Each equation has the form  sum_k A_k * X_{j_k} * B_k = C  over Z.  The
// system is flattened with vec(A X B) = (B^T (x) A) vec(X) (column-major vec)
// and solved exactly through one Hermite form.  Congruences modulo a relation
// lattice are expressed by an extra slack unknown.

#include <cstddef>
#include <optional>
#include <vector>

#include "cocat/abgp/matrix.hpp"

namespace cocat::abgp {

class LinearSystem {
 public:
  struct Term {
    IntMatrix left;
    std::size_t unknown;
    IntMatrix right;
  };

  /// Registers an unknown matrix of the given shape and returns its id.
  std::size_t add_unknown(std::size_t rows, std::size_t cols);

  /// sum of terms == rhs, exactly.
  void add_equation(std::vector<Term> terms, const IntMatrix& rhs);

  /// sum of terms == rhs modulo the column lattice of `modulus`.
  void add_congruence(std::vector<Term> terms, const IntMatrix& rhs, const IntMatrix& modulus);

  /// One solution (every unknown, slack included), or nullopt.
  std::optional<std::vector<IntMatrix>> solve() const;

  /// Basis of the homogeneous solution space, restricted to one unknown.
  std::vector<IntMatrix> homogeneous_part(std::size_t unknown) const;

  std::size_t variable_count() const { return offset_.empty() ? 0 : offset_.back() + size(offset_.size() - 1); }

 private:
  std::size_t size(std::size_t u) const { return shapes_[u].first * shapes_[u].second; }
  IntMatrix assemble(std::vector<BigInt>* rhs) const;
  IntMatrix unflatten(const std::vector<BigInt>& x, std::size_t u) const;

  std::vector<std::pair<std::size_t, std::size_t>> shapes_;
  std::vector<std::size_t> offset_;
  struct Equation {
    std::vector<Term> terms;
    IntMatrix rhs;
  };
  std::vector<Equation> equations_;
};

}  // namespace cocat::abgp
