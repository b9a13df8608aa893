#pragma once

#include "cocat/abgp/category.hpp"

namespace cocat::abgp {

/// Q0 = Z<v0>, Q1 = Z<v0, e1, v1>, double pushout Z<v0, e1, v1, e2, v2>:
///   l = (1 0 0)^T, r = (0 0 1)^T, i = (1 0 1),
///   q sends v0 -> v0, e1 -> e1 + e2, v1 -> v2.
/// A co-category whose l, r are not jointly epimorphic.
CoCategory interval_cocategory();

/// Q0 = Q1 = Z^rank with l = r = i = id and q = nu1.
CoCategory trivial_cocategory(std::size_t rank);

}  // namespace cocat::abgp
