#pragma once

// Transposition between co-categories and internal categories of free
// abelian groups of finite rank.  Transposing swaps pushouts for pullbacks:
// l, r, i, q become source, target, unit and composition.

#include "cocat/abgp/category.hpp"

namespace cocat::abgp {

struct InternalCategoryData {
  FgAbGroup c0;
  FgAbGroup c1;
  AbMap source;       // c1 -> c0
  AbMap target;       // c1 -> c0
  AbMap unit;         // c0 -> c1
  AbMap composition;  // double_pullback.apex -> c1
  PullbackWitness double_pullback;  // target . pi1 == source . pi2
  PullbackWitness triple_pullback;
};

/// Throws NotFree unless every group involved has a relation-free presentation.
InternalCategoryData transpose_dualize(const CoCategory& data);
/// The inverse transposition.
CoCategory transpose_dualize(const InternalCategoryData& data);

/// Source/target of units and composites, associativity over the triple
/// pullback and both unit laws, plus the pullback witnesses themselves.
AxiomReport check_internal_category(const InternalCategoryData& icat);

}  // namespace cocat::abgp
