#pragma once

#include <utility>
#include <vector>

#include "cocat/abgp/category.hpp"
#include "cocat/chain/complex.hpp"

namespace cocat::chain {

/// Q0 = Z<v0> in degree 0; Q1 = Z<v0, v1> in degree 0 and Z<e1> in degree 1
/// with boundary e1 -> v1 - v0; l, r pick v0 and v1, i collapses, and q sends
/// e1 to e1 + e2 in the glued complex.
CoCategory chain_example_cocategory();

/// Q0 = Q1 = x with l = r = i = id and q = nu1.
CoCategory trivial_cocategory(const ChainComplex& x);

/// Basis of the total space as (degree, index) pairs, interleaved: the first
/// generator of each degree, then the second of each, and so on.
std::vector<std::pair<std::size_t, std::size_t>> total_basis(const ChainComplex& x);

abgp::FgAbGroup total_group(const ChainComplex& x);
/// The direct sum of the components in the interleaved bases.
abgp::AbMap total_map(const ChainMap& f);
/// Forgets the boundaries of every object and map of the structure.
abgp::CoCategory total_space(const CoCategory& data);

}  // namespace cocat::chain
