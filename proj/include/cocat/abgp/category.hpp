#pragma once

// AbGp as a host category: presented groups, homomorphisms, pushouts by
// amalgamation, pullbacks by kernel lattices, and exact factorization.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cocat/abgp/group.hpp"
#include "cocat/core/cocategory.hpp"

namespace cocat::abgp {

using Witness = PushoutWitness<FgAbGroup, AbMap>;

/// Iterated pullback: left_leg . projections[k] == right_leg . projections[k+1].
struct PullbackWitness {
  FgAbGroup apex;
  std::vector<AbMap> projections;
  AbMap left_leg;
  AbMap right_leg;
};

/// Pushout of f: S -> A and g: S -> B, Tietze-reduced.
Witness pushout(const AbMap& f, const AbMap& g);
/// Pullback of f: A -> C and g: B -> C.
PullbackWitness pullback(const AbMap& f, const AbMap& g);
/// The canonical pullback of `copies` copies chained along (left_leg, right_leg).
PullbackWitness chained_pullback(const AbMap& left_leg, const AbMap& right_leg, std::size_t copies);

/// The map out of the apex restricting to maps[k] on injection k, if any.
std::optional<AbMap> copair(const Witness& w, std::span<const AbMap> maps);
/// The map into the apex whose k-th projection is maps[k], if any.
std::optional<AbMap> pair(const PullbackWitness& w, std::span<const AbMap> maps);
std::optional<AbMap> pair(const PullbackWitness& w, std::initializer_list<AbMap> maps);

/// Decides whether w is a pullback (comparison with the canonical one).
bool is_pullback(const PullbackWitness& w);

class AbGpCategory {
 public:
  using Object = FgAbGroup;
  using Morphism = AbMap;

  FgAbGroup dom(const AbMap& f) const { return f.dom(); }
  FgAbGroup cod(const AbMap& f) const { return f.cod(); }
  bool same_object(const FgAbGroup& a, const FgAbGroup& b) const { return a == b; }
  bool equal(const AbMap& f, const AbMap& g) const { return equal_maps(f, g); }
  AbMap compose(const AbMap& g, const AbMap& f) const { return abgp::compose(g, f); }
  AbMap identity(const FgAbGroup& g) const { return AbMap::identity(g); }
  Witness pushout(const AbMap& f, const AbMap& g) const { return abgp::pushout(f, g); }
  std::optional<AbMap> copair(const Witness& w, std::span<const AbMap> maps) const {
    return abgp::copair(w, maps);
  }
  std::string describe(const AbMap& f) const { return to_string(f); }

  /// l, r are jointly epimorphic iff coker [l | r] is trivial.
  JointEpiResult joint_epi(const AbMap& l, const AbMap& r) const;
  /// Solves the four co-inverse identities as one integer system.
  template <class Data>
  std::optional<AbMap> solve_coinverse(const Data& d) const {
    return solve_coinverse_system(d.q1, d.l, d.r, d.i, d.q, d.double_pushout);
  }

  static std::optional<AbMap> solve_coinverse_system(const FgAbGroup& q1, const AbMap& l, const AbMap& r,
                                                     const AbMap& i, const AbMap& q, const Witness& dbl);
};

using CoCategory = CoCategoryData<AbGpCategory>;

/// Invariant factors of the cokernel of [l | r] (empty iff jointly epi).
std::vector<BigInt> joint_cokernel(const AbMap& l, const AbMap& r);

}  // namespace cocat::abgp
