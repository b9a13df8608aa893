#pragma once

// Capability interface for computable host categories.
//
// A host is a value type exposing `Object`, `Morphism` and a fixed set of
// member functions (see the `Category` concept).  Optional capabilities are
// detected with the `Has*` concepts below; operations in cocategory.hpp pick
// whichever strategy the host offers and fail with UnsupportedCapability
// otherwise.

#include <concepts>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cocat {

/// Three-valued outcome for checks that a host may not be able to decide.
enum class Tri { False, True, Unknown };

constexpr Tri tri_and(Tri a, Tri b) noexcept {
  if (a == Tri::False || b == Tri::False) return Tri::False;
  if (a == Tri::Unknown || b == Tri::Unknown) return Tri::Unknown;
  return Tri::True;
}

constexpr Tri to_tri(bool b) noexcept { return b ? Tri::True : Tri::False; }

constexpr const char* to_string(Tri t) noexcept {
  switch (t) {
    case Tri::False: return "false";
    case Tri::True: return "true";
    case Tri::Unknown: return "unknown";
  }
  return "unknown";
}

/// An iterated pushout Q1 +_{Q0} Q1 +_{Q0} ... +_{Q0} Q1 (n copies).
///
/// For n = 2 this is an ordinary pushout of the span
/// `left_leg: S -> A`, `right_leg: S -> B`.  In general the gluing relations
/// are injections[k] . left_leg == injections[k+1] . right_leg.
template <class Object, class Morphism>
struct PushoutWitness {
  Object apex;
  std::vector<Morphism> injections;
  Morphism left_leg;
  Morphism right_leg;
};

/// Result of a joint-epimorphism test on a pair of maps with common codomain.
struct JointEpiResult {
  Tri holds = Tri::Unknown;
  std::string witness;
};

template <class C>
using WitnessOf = PushoutWitness<typename C::Object, typename C::Morphism>;

template <class C>
concept Category = requires(const C& cat, const typename C::Object& obj,
                            const typename C::Morphism& mor, const WitnessOf<C>& witness,
                            std::span<const typename C::Morphism> cocone) {
  typename C::Object;
  typename C::Morphism;
  { cat.dom(mor) } -> std::convertible_to<typename C::Object>;
  { cat.cod(mor) } -> std::convertible_to<typename C::Object>;
  { cat.same_object(obj, obj) } -> std::convertible_to<bool>;
  { cat.equal(mor, mor) } -> std::convertible_to<bool>;
  { cat.compose(mor, mor) } -> std::same_as<typename C::Morphism>;
  { cat.identity(obj) } -> std::same_as<typename C::Morphism>;
  { cat.pushout(mor, mor) } -> std::same_as<WitnessOf<C>>;
  { cat.copair(witness, cocone) } -> std::same_as<std::optional<typename C::Morphism>>;
  { cat.describe(mor) } -> std::convertible_to<std::string>;
};

/// Host can test whether two maps into a common object are jointly epimorphic.
template <class C>
concept HasJointEpi = Category<C> && requires(const C& cat, const typename C::Morphism& mor) {
  { cat.joint_epi(mor, mor) } -> std::same_as<JointEpiResult>;
};

/// Host can list every endomorphism of a (finite) object.
template <class C>
concept HasEndomorphisms = Category<C> && requires(const C& cat, const typename C::Object& obj) {
  { cat.endomorphisms(obj) } -> std::same_as<std::vector<typename C::Morphism>>;
};

}  // namespace cocat
