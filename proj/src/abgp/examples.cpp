#include "cocat/abgp/examples.hpp"

namespace cocat::abgp {

CoCategory interval_cocategory() {
  const AbGpCategory cat;
  const FgAbGroup q0 = FgAbGroup::free(1);
  const FgAbGroup q1 = FgAbGroup::free(3);
  const FgAbGroup apex = FgAbGroup::free(5);
  const AbMap l(q0, q1, IntMatrix::from_rows({{1}, {0}, {0}}));
  const AbMap r(q0, q1, IntMatrix::from_rows({{0}, {0}, {1}}));
  const AbMap i(q1, q0, IntMatrix::from_rows({{1, 0, 1}}));
  const AbMap q(q1, apex,
                IntMatrix::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  // first copy spans v0, e1, v1; the second copy's v0 is glued to v1
  const AbMap nu1(q1, apex, IntMatrix::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 0, 0}, {0, 0, 0}}));
  const AbMap nu2(q1, apex, IntMatrix::from_rows({{0, 0, 0}, {0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  Witness dbl{apex, {nu1, nu2}, r, l};
  return make_cocategory_with_witness(cat, q0, q1, l, r, i, q, std::move(dbl));
}

CoCategory trivial_cocategory(std::size_t rank) {
  const AbGpCategory cat;
  const FgAbGroup g = FgAbGroup::free(rank);
  const AbMap id = AbMap::identity(g);
  return make_cocategory(cat, g, g, id, id, id, [](const Witness& w) { return w.injections[0]; });
}

}  // namespace cocat::abgp
