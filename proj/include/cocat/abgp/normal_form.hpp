#pragma once

// Hermite and Smith normal forms over Z, and the decision procedures built on
// them (integer solve, lattice membership, kernels, cokernels).
//
// Column-style Hermite form: M * U = H with U unimodular.  The nonzero columns
// of H come first; column k has its first nonzero entry (the pivot, > 0) in
// row pivot_rows[k], pivot rows strictly increase, and every entry left of a
// pivot in its row is reduced into [0, pivot).  Zero columns of H mark kernel
// vectors in the matching columns of U.

#include <optional>
#include <vector>

#include "cocat/abgp/matrix.hpp"

namespace cocat::abgp {

struct HermiteForm {
  IntMatrix h;
  IntMatrix u;
  std::vector<std::size_t> pivot_rows;  // one per nonzero column of h
  std::size_t rank() const { return pivot_rows.size(); }
};

HermiteForm hnf(const IntMatrix& m);

/// D = U * M * V, D diagonal with d_k | d_(k+1) and d_k >= 0; U, V unimodular.
struct SmithForm {
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;
  std::vector<BigInt> diagonal() const;
};

SmithForm snf(const IntMatrix& m);

/// An integer x with M * x = b, or nullopt if none exists.
std::optional<std::vector<BigInt>> solve(const IntMatrix& m, const std::vector<BigInt>& b);

/// Coordinates y with H * y = b against a precomputed Hermite form.
std::optional<std::vector<BigInt>> solve_hermite(const HermiteForm& hf, const std::vector<BigInt>& b);

/// Whether v lies in the lattice spanned by the columns of m.
bool in_column_lattice(const IntMatrix& m, const std::vector<BigInt>& v);

/// Columns form a basis of {x : M * x = 0}.
IntMatrix kernel_basis(const IntMatrix& m);

/// Columns form a basis of the column lattice of m.
IntMatrix lattice_basis(const IntMatrix& m);

/// Nontrivial invariant factors of coker(M) = Z^rows / col(M), ascending by
/// divisibility; 0 stands for a free Z summand.
std::vector<BigInt> cokernel(const IntMatrix& m);

/// Inverse of a unimodular matrix; throws InvalidArgument otherwise.
IntMatrix unimodular_inverse(const IntMatrix& u);

std::size_t rank(const IntMatrix& m);

}  // namespace cocat::abgp
