#pragma once

#include "cocat/fincat/pushout.hpp"

namespace cocat::fincat {

/// I0 the terminal category, I1 the arrow 0 -> 1; l and r pick 0 and 1, i
/// collapses, and q sends the arrow to the composite of the glued interval.
CoCategory interval_cocategory(const CatCategory& cat = CatCategory());

/// Q0 = Q1 = terminal category.
CoCategory trivial_cocategory(const CatCategory& cat = CatCategory());

/// Q0 = Q1 = discrete category on n objects, l = r = i = id.
CoCategory discrete_cocategory(std::size_t n, const CatCategory& cat = CatCategory());

/// The counterexample search applied to the structure maps l, r.
std::optional<FunctorPair> joint_epi_counterexample(const CoCategory& data, std::size_t max_test_size);

}  // namespace cocat::fincat
