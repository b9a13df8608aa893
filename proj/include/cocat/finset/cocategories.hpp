#pragma once

// Co-categories in FinSet: cokernel pairs, the coherent-category argument
// replayed step by step, exhaustive enumeration, and the subobject-classifier
// correspondence.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cocat/finset/finset.hpp"

namespace cocat::finset {

/// Q0 = A, Q1 = A +_S A, l = nu1, r = nu2, i = [1, 1], q = [nu1, nu3].
/// Throws NotMono if m is not injective.
CoCategory cokernel_pair_cocategory(const FinMap& m);

/// The co-category with Q0 = Q1 = 1.
CoCategory trivial_cocategory();

/// Q0 = Q1 = X with l = r = i = id.
CoCategory discrete_cocategory(FinSetObj x);

/// One replayed step of the argument that every co-category in a coherent
/// category is a co-equivalence relation.
struct ProofStep {
  std::string name;
  bool holds = false;
  std::string witness;  // concrete element on failure
};

struct ProofReport {
  // Pullbacks of nu_j along q: P_j with legs m_j: P_j -> Q1 and q_j: P_j -> Q1.
  std::vector<Pullback> p;       // p[j].p1 = m_j, p[j].p2 = q_j
  bool coverage = false;         // m_1 u m_2 = Q1
  bool retraction_1 = false;     // l.i.q_1 = m_1
  bool retraction_2 = false;     // r.i.q_2 = m_2
  bool lr_jointly_covering = false;
  Pullback lr_pullback;          // pullback of (l, r)
  bool projections_equal = false;
  bool square_is_pushout = false;
  std::optional<FinMap> s;       // built from the pushout universal property
  bool s_is_coinverse = false;
  std::vector<ProofStep> steps;

  bool all_hold() const;
  const ProofStep* first_failure() const;
};

/// Replays the proof on a co-category (which must pass check_cocategory).
ProofReport verify_proposition(const CoCategory& data);

struct EnumerationBounds {
  std::size_t max_q0 = 1;
  std::size_t max_q1 = 1;
  bool include_empty = false;  // also yield the vacuous (0, 0) structure
};

struct EnumeratedCoCategory {
  CoCategory data;
  std::size_t q_solutions = 0;  // co-compositions accepted for this (l, r, i)
};

struct EnumerationStats {
  std::size_t lri_candidates = 0;  // (l, r, i) with i.l = i.r = id
  std::size_t q_candidates = 0;    // maps Q1 -> apex examined
  std::size_t structures = 0;
};

/// Streams every co-category within the bounds.  For each (Q0, Q1) the search
/// fixes (l, r, i) with i.l = i.r = id and then tries every q: Q1 -> apex
/// consistent with q.l = nu1.l and q.r = nu2.r.  Returns false from `visit`
/// to stop.  `progress`, if set, is called once per (|Q0|, |Q1|) size pair.
EnumerationStats for_each_cocategory(
    const EnumerationBounds& bounds, const std::function<bool(const EnumeratedCoCategory&)>& visit,
    const std::function<void(std::size_t, std::size_t, const EnumerationStats&)>& progress = {});

/// All co-categories within bounds, canonically ordered.  Work is split over
/// the choice of l across `workers` threads (0 = hardware concurrency).
std::vector<EnumeratedCoCategory> enumerate_cocategories(const EnumerationBounds& bounds,
                                                         unsigned workers = 1,
                                                         EnumerationStats* stats = nullptr);

/// Searches bijections (f0, f1) that form a co-category morphism.
/// Throws SizeLimit when |Q0|! * |Q1|! exceeds `cap`.
std::optional<std::pair<FinMap, FinMap>> iso_cocategories(const CoCategory& a, const CoCategory& b,
                                                          std::size_t cap = 1u << 20);

/// An isomorphism a -> b that is the identity on Q0, as its Q1 component.
/// Throws SizeLimit when |Q1|! exceeds `cap`.
std::optional<FinMap> iso_over_q0(const CoCategory& a, const CoCategory& b, std::size_t cap = 1u << 20);

/// Number of isomorphism classes in a list (pairwise search, grouped by sizes).
std::size_t count_iso_classes(const std::vector<EnumeratedCoCategory>& items);

// ---------------------------------------------------------------------------
// Subobject classifier Omega = {0 = false, 1 = true}, top picks 1.

constexpr FinSetObj kOmega{2};

/// Cokernel pair of top: 1 -> Omega.
CoCategory universal_cocategory();

/// a |-> 1 iff a is in the image of m.  Throws NotMono.
FinMap classifying_map(const FinMap& m);

/// The characteristic map of the (l, r)-equalizer of a co-category.
FinMap characteristic_of(const CoCategory& data);

/// Pulls the universal co-category back along chi: A -> Omega.
/// Q1 = A x_Omega U1 over the co-unit of the universal structure; the double
/// and triple pushout witnesses are the pulled-back ones.
CoCategory pullback_cocategory(const FinMap& chi);

struct ColaxReport {
  std::size_t cocategory_morphisms = 0;
  std::size_t colax_maps = 0;
  bool bijective = false;
};

/// Brute-forces every co-category morphism Q -> R and every colax map
/// (Q0, chi_Q) -> (R0, chi_R), and checks (f0, f1) |-> f0 is a bijection.
/// Throws SizeLimit when |R1|^|Q1| * |R0|^|Q0| exceeds `cap`.
ColaxReport verify_colax_correspondence(const CoCategory& q, const CoCategory& r,
                                        std::size_t cap = 1u << 22);

}  // namespace cocat::finset
