#pragma once

// Pushouts of finite categories along discrete categories, and Cat as a host.

#include <optional>
#include <span>
#include <string>

#include "cocat/core/cocategory.hpp"
#include "cocat/fincat/category.hpp"

namespace cocat::fincat {

using Witness = PushoutWitness<FinCategory, Functor>;

/// Pushout of f: S -> A and g: S -> B for discrete S.
///
/// Objects are the classes of A + B under f(s) ~ g(s), numbered by smallest
/// member with A first.  Morphisms are identities followed by reduced words
/// of non-identity generators (adjacent letters from one side that compose
/// there are multiplied out), ordered by (length, letters).  Throws
/// ClosureExceeded when a reduced word longer than word_cap appears and
/// UnsupportedCapability when S has non-identity morphisms.
Witness pushout_cats(const Functor& f, const Functor& g, std::size_t word_cap = 8);

/// The functor out of the apex restricting to maps[k] along injection k.
/// Works for any witness whose injections generate the apex under composition.
std::optional<Functor> copair(const Witness& w, std::span<const Functor> maps);

struct FunctorPair {
  FinCategory test;
  Functor first;
  Functor second;
};

/// Searches free categories on directed acyclic multigraphs with at most three
/// objects and at most max_test_size morphisms (smallest first) for F != G
/// out of cod(l) with F.l == G.l and F.r == G.r.
std::optional<FunctorPair> joint_epi_counterexample(const Functor& l, const Functor& r,
                                                    std::size_t max_test_size);

class CatCategory {
 public:
  using Object = FinCategory;
  using Morphism = Functor;

  explicit CatCategory(std::size_t word_cap = 8, std::size_t joint_epi_search = 6)
      : word_cap_(word_cap), search_(joint_epi_search) {}

  FinCategory dom(const Functor& f) const { return f.dom(); }
  FinCategory cod(const Functor& f) const { return f.cod(); }
  bool same_object(const FinCategory& a, const FinCategory& b) const { return a == b; }
  bool equal(const Functor& f, const Functor& g) const { return f == g; }
  Functor compose(const Functor& g, const Functor& f) const { return fincat::compose(g, f); }
  Functor identity(const FinCategory& c) const { return Functor::identity(c); }
  Witness pushout(const Functor& f, const Functor& g) const { return pushout_cats(f, g, word_cap_); }
  std::optional<Functor> copair(const Witness& w, std::span<const Functor> maps) const {
    return fincat::copair(w, maps);
  }
  std::string describe(const Functor& f) const { return to_string(f); }

  /// Never True: either a distinguishing pair of functors or Unknown.
  JointEpiResult joint_epi(const Functor& l, const Functor& r) const;
  std::vector<Functor> endomorphisms(const FinCategory& c) const { return enumerate_functors(c, c); }

  std::size_t joint_epi_bound() const { return search_; }

 private:
  std::size_t word_cap_;
  std::size_t search_;
};

using CoCategory = CoCategoryData<CatCategory>;

}  // namespace cocat::fincat
