#pragma once

// Bounded chain complexes of finite-rank free abelian groups, chain maps, and
// Ch(AbGp) as a host category.  Degrees run from 0 upwards; a degree past the
// stored range has rank 0.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cocat/abgp/matrix.hpp"
#include "cocat/core/cocategory.hpp"

namespace cocat::chain {

using abgp::BigInt;
using abgp::IntMatrix;

class ChainComplex {
 public:
  ChainComplex() = default;
  /// differentials[k] is the boundary from degree k+1 to degree k, of shape
  /// ranks[k] x ranks[k+1].  Trailing zero degrees are dropped.  Throws
  /// TypeMismatch on a shape error and InvalidArgument when a boundary of a
  /// boundary is nonzero.
  ChainComplex(std::vector<std::size_t> ranks, std::vector<IntMatrix> differentials);

  /// Number of stored degrees (one past the top nonzero degree).
  std::size_t length() const { return ranks_.size(); }
  std::size_t rank(std::size_t d) const { return d < ranks_.size() ? ranks_[d] : 0; }
  const std::vector<std::size_t>& ranks() const { return ranks_; }
  /// Boundary from degree d to d-1 (d >= 1).
  IntMatrix boundary(std::size_t d) const;

  friend bool operator==(const ChainComplex& a, const ChainComplex& b) {
    return a.ranks_ == b.ranks_ && a.diff_ == b.diff_;
  }

 private:
  std::vector<std::size_t> ranks_;
  std::vector<IntMatrix> diff_;  // diff_[k]: degree k+1 -> k
};

std::string to_string(const ChainComplex& x);

class ChainMap {
 public:
  ChainMap() = default;
  /// components[d] has shape cod.rank(d) x dom.rank(d); missing trailing
  /// components are zero.  Throws TypeMismatch on shapes and InvalidArgument
  /// if the map does not commute with the boundaries.
  ChainMap(ChainComplex dom, ChainComplex cod, std::vector<IntMatrix> components);
  static ChainMap identity(const ChainComplex& x);

  const ChainComplex& dom() const { return dom_; }
  const ChainComplex& cod() const { return cod_; }
  /// Number of degrees spanned by dom or cod.
  std::size_t length() const { return comps_.size(); }
  const IntMatrix& component(std::size_t d) const { return comps_[d]; }
  IntMatrix component_or_zero(std::size_t d) const;

  friend bool operator==(const ChainMap& a, const ChainMap& b) {
    return a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.comps_ == b.comps_;
  }

 private:
  ChainComplex dom_;
  ChainComplex cod_;
  std::vector<IntMatrix> comps_;
};

ChainMap compose(const ChainMap& g, const ChainMap& f);
std::string to_string(const ChainMap& f);

using Witness = PushoutWitness<ChainComplex, ChainMap>;

/// Degreewise amalgamated sum, re-freed in each degree (NotFree on torsion),
/// with the induced boundaries.
Witness pushout_chain(const ChainMap& f, const ChainMap& g);

std::optional<ChainMap> copair(const Witness& w, std::span<const ChainMap> maps);

class ChainCategory {
 public:
  using Object = ChainComplex;
  using Morphism = ChainMap;

  ChainComplex dom(const ChainMap& f) const { return f.dom(); }
  ChainComplex cod(const ChainMap& f) const { return f.cod(); }
  bool same_object(const ChainComplex& a, const ChainComplex& b) const { return a == b; }
  bool equal(const ChainMap& f, const ChainMap& g) const { return f == g; }
  ChainMap compose(const ChainMap& g, const ChainMap& f) const { return chain::compose(g, f); }
  ChainMap identity(const ChainComplex& x) const { return ChainMap::identity(x); }
  Witness pushout(const ChainMap& f, const ChainMap& g) const { return pushout_chain(f, g); }
  std::optional<ChainMap> copair(const Witness& w, std::span<const ChainMap> maps) const {
    return chain::copair(w, maps);
  }
  std::string describe(const ChainMap& f) const { return to_string(f); }

  /// Degreewise: l, r jointly epi iff every coker [l_d | r_d] is trivial.
  JointEpiResult joint_epi(const ChainMap& l, const ChainMap& r) const;

  template <class Data>
  std::optional<ChainMap> solve_coinverse(const Data& d) const {
    return solve_coinverse_system(d.q1, d.l, d.r, d.i, d.q, d.double_pushout);
  }
  /// The co-inverse identities degreewise, plus commuting with boundaries.
  static std::optional<ChainMap> solve_coinverse_system(const ChainComplex& q1, const ChainMap& l,
                                                        const ChainMap& r, const ChainMap& i,
                                                        const ChainMap& q, const Witness& dbl);
};

using CoCategory = CoCategoryData<ChainCategory>;

}  // namespace cocat::chain
