#pragma once

// Finitely presented abelian groups and the homomorphisms between them.

#include <cstddef>
#include <string>
#include <vector>

#include "cocat/abgp/matrix.hpp"

namespace cocat::abgp {

/// Z^n modulo the column lattice of `relations` (an n x k matrix).
class FgAbGroup {
 public:
  FgAbGroup() = default;
  FgAbGroup(std::size_t generators, IntMatrix relations);
  static FgAbGroup free(std::size_t rank);

  std::size_t generators() const { return gens_; }
  const IntMatrix& relations() const { return rel_; }
  /// True when the presentation has no nonzero relator.
  bool is_free_presentation() const { return rel_.cols() == 0; }

  /// Whether v (a length-n coordinate vector) is zero in the group.
  bool is_zero(const std::vector<BigInt>& v) const;
  /// Whether every column of m is zero in the group.
  bool columns_vanish(const IntMatrix& m) const;

  /// Invariant factors of the group (0 for each free summand).
  std::vector<BigInt> invariants() const;

  /// Same generator count and same relation lattice.
  friend bool operator==(const FgAbGroup& a, const FgAbGroup& b);

 private:
  std::size_t gens_ = 0;
  IntMatrix rel_;  // zero columns removed
};

std::string to_string(const FgAbGroup& g);

/// A homomorphism given on generators: column j is the image of generator j.
class AbMap {
 public:
  AbMap() = default;
  /// Throws TypeMismatch on a shape mismatch and InvalidArgument when some
  /// domain relator is not sent into the codomain relation lattice.
  AbMap(FgAbGroup dom, FgAbGroup cod, IntMatrix matrix);

  static AbMap identity(const FgAbGroup& g);
  static AbMap zero(const FgAbGroup& dom, const FgAbGroup& cod);

  const FgAbGroup& dom() const { return dom_; }
  const FgAbGroup& cod() const { return cod_; }
  const IntMatrix& matrix() const { return m_; }

 private:
  FgAbGroup dom_;
  FgAbGroup cod_;
  IntMatrix m_;
};

/// g . f
AbMap compose(const AbMap& g, const AbMap& f);
/// Equality as homomorphisms: columns of f - g vanish in the codomain.
bool equal_maps(const AbMap& f, const AbMap& g);
std::string to_string(const AbMap& f);

/// A presentation together with mutually inverse isomorphisms to the
/// original group: `to` is original -> group, `from` is group -> original.
struct Presentation {
  FgAbGroup group;
  IntMatrix to;
  IntMatrix from;
};

/// Tietze reduction: while some relator has a +-1 coefficient, eliminate the
/// highest-index such generator (lowest-index relator first).  Zero relators
/// are dropped.  Surviving generators keep their relative order.
Presentation simplify(const FgAbGroup& g);

/// A relation-free presentation of g, via Tietze reduction then Smith form
/// for any leftover relators.  Throws NotFree when g has torsion.
Presentation free_presentation(const FgAbGroup& g);

}  // namespace cocat::abgp
