#pragma once

// Finite sets {0, ..., n-1} and maps between them, as a coherent host category.

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cocat/core/category.hpp"
#include "cocat/core/cocategory.hpp"

namespace cocat::finset {

struct FinSetObj {
  std::size_t size = 0;
  friend auto operator<=>(const FinSetObj&, const FinSetObj&) = default;
};

/// A total function dom -> cod stored as its table of values.
class FinMap {
 public:
  FinMap() = default;
  /// Throws InvalidArgument unless table.size() == dom.size and every entry < cod.size.
  FinMap(FinSetObj dom, FinSetObj cod, std::vector<std::size_t> table);

  static FinMap identity(FinSetObj obj);
  static FinMap constant(FinSetObj dom, FinSetObj cod, std::size_t value);

  FinSetObj dom() const { return dom_; }
  FinSetObj cod() const { return cod_; }
  const std::vector<std::size_t>& table() const { return table_; }
  std::size_t operator()(std::size_t x) const { return table_[x]; }

  bool injective() const;
  bool surjective() const;
  bool bijective() const { return injective() && surjective(); }

  friend auto operator<=>(const FinMap&, const FinMap&) = default;

 private:
  FinSetObj dom_;
  FinSetObj cod_;
  std::vector<std::size_t> table_;
};

/// g . f
FinMap compose(const FinMap& g, const FinMap& f);

/// Inverse of a bijection; throws InvalidArgument otherwise.
FinMap inverse(const FinMap& f);

std::string to_string(const FinMap& f);

/// A subobject in canonical form: the sorted list of elements it contains.
struct Subobject {
  FinSetObj ambient;
  std::vector<std::size_t> elements;
  friend bool operator==(const Subobject&, const Subobject&) = default;
};

/// The inclusion map of a subobject.
FinMap inclusion(const Subobject& s);

using Witness = PushoutWitness<FinSetObj, FinMap>;

/// Pushout of A <-f- S -g-> B.  The apex is the quotient of A + B by the
/// equivalence generated by f(s) ~ g(s); classes are numbered in order of
/// their smallest member (A's elements first, then B's).
Witness pushout(const FinMap& f, const FinMap& g);

struct Pullback {
  FinSetObj object;
  FinMap p1;
  FinMap p2;
};

/// {(a, b) : f(a) = g(b)} in lexicographic order.
Pullback pullback(const FinMap& f, const FinMap& g);

/// The map X -> P induced by a cone (u: X -> A, v: X -> B); nullopt if f.u != g.v.
std::optional<FinMap> pullback_pair(const Pullback& pb, const FinMap& u, const FinMap& v);

Subobject image(const FinMap& f);
/// Throws TypeMismatch if the ambients differ.
Subobject union_of(const Subobject& a, const Subobject& b);
/// Throws TypeMismatch if the codomains differ.
bool is_jointly_covering(std::span<const FinMap> maps);
/// {a : f(a) = g(a)} as a mono into the common domain; throws TypeMismatch.
FinMap equalizer(const FinMap& f, const FinMap& g);
/// The pullback of a subobject along f.
Subobject preimage(const FinMap& f, const Subobject& s);

/// Calls visit(map) for every map dom -> cod, in lexicographic order of tables.
/// Stops early if visit returns false.
void for_each_map(FinSetObj dom, FinSetObj cod, const std::function<bool(const FinMap&)>& visit);
/// Every bijection n -> n, lexicographic.
std::vector<FinMap> permutations(FinSetObj obj);
/// cod.size ^ dom.size, saturating at SIZE_MAX.
std::size_t map_count(FinSetObj dom, FinSetObj cod);

/// The host-category adapter consumed by cat-core.
class FinSetCategory {
 public:
  using Object = FinSetObj;
  using Morphism = FinMap;

  /// Endomorphism enumeration refuses objects with more than n^n > cap maps.
  explicit FinSetCategory(std::size_t endomorphism_cap = 1u << 20) : cap_(endomorphism_cap) {}

  FinSetObj dom(const FinMap& m) const { return m.dom(); }
  FinSetObj cod(const FinMap& m) const { return m.cod(); }
  bool same_object(FinSetObj a, FinSetObj b) const { return a == b; }
  bool equal(const FinMap& f, const FinMap& g) const { return f == g; }
  FinMap compose(const FinMap& g, const FinMap& f) const { return finset::compose(g, f); }
  FinMap identity(FinSetObj o) const { return FinMap::identity(o); }
  Witness pushout(const FinMap& f, const FinMap& g) const { return finset::pushout(f, g); }
  /// Defined iff the injections jointly cover the apex and the maps agree on overlaps.
  std::optional<FinMap> copair(const Witness& w, std::span<const FinMap> maps) const;
  std::string describe(const FinMap& m) const { return to_string(m); }

  JointEpiResult joint_epi(const FinMap& l, const FinMap& r) const;
  std::vector<FinMap> endomorphisms(FinSetObj obj) const;

 private:
  std::size_t cap_;
};

using CoCategory = CoCategoryData<FinSetCategory>;

}  // namespace cocat::finset
