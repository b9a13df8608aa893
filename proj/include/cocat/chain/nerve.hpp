#pragma once

// From finite categories to chain complexes: nerve, free abelian groups on
// nondegenerate simplices, normalization, and the quotient by everything
// generated in degrees >= 2.

#include <optional>
#include <vector>

#include "cocat/chain/complex.hpp"
#include "cocat/fincat/pushout.hpp"

namespace cocat::chain {

/// Nondegenerate simplices up to a fixed dimension.  simplices[0] holds
/// one-element lists {object}; simplices[k] for k >= 1 holds chains of k
/// composable non-identity morphisms in path order, sorted.
struct NormalizedNerve {
  fincat::FinCategory category;
  std::vector<std::vector<std::vector<std::size_t>>> simplices;
};

NormalizedNerve nerve(const fincat::FinCategory& c, std::size_t max_dim = 3);

/// Index of face j of simplex idx in degree k, or nullopt if that face is
/// degenerate (an inner face whose composite is an identity).
std::optional<std::size_t> face(const NormalizedNerve& n, std::size_t k, std::size_t idx, std::size_t j);

/// Boundary sum over j of (-1)^j d_j; degenerate faces contribute 0.
ChainComplex free_normalized_chains(const NormalizedNerve& n);

/// Degrees 0 and 1 of x, with degree 1 divided by the image of the degree-2
/// boundary and re-freed.  project maps old degree-1 coordinates to new ones;
/// section picks representatives.
struct Truncation {
  ChainComplex complex;
  IntMatrix project;
  IntMatrix section;
};
Truncation truncate_ge2(const ChainComplex& x);

ChainComplex pipeline(const fincat::FinCategory& c);
ChainMap pipeline(const fincat::Functor& f);
/// Applies the pipeline to every object, structure map and pushout witness.
CoCategory pipeline(const fincat::CoCategory& d);

/// Coordinates, in the truncated degree-1 basis, of the class of morphism m.
std::vector<BigInt> degree_one_class(const fincat::FinCategory& c, std::size_t m);

/// An isomorphism of co-categories a -> b whose components are signed
/// permutation matrices in every degree, if one exists.
struct CoCategoryIso {
  ChainMap f0;
  ChainMap f1;
};
std::optional<CoCategoryIso> find_signed_permutation_iso(const CoCategory& a, const CoCategory& b);

}  // namespace cocat::chain
