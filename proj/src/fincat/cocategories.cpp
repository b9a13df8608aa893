#include "cocat/fincat/cocategories.hpp"

namespace cocat::fincat {

CoCategory interval_cocategory(const CatCategory& cat) {
  const FinCategory i0 = FinCategory::terminal();
  const FinCategory i1 = FinCategory::arrow();
  const Functor l(i0, i1, {0}, {i1.identity(0)});
  const Functor r(i0, i1, {1}, {i1.identity(1)});
  const Functor i(i1, i0, {0, 0}, {0, 0, 0});
  return make_cocategory(cat, i0, i1, l, r, i, [&](const Witness& w) {
    const FinCategory& d = w.apex;
    const Functor& nu1 = w.injections[0];
    const Functor& nu2 = w.injections[1];
    const std::size_t a = 2;  // the arrow of I1
    const std::size_t start = nu1.object(0), end = nu2.object(1);
    return Functor(i1, d, {start, end},
                   {d.identity(start), d.identity(end), d.compose(nu2.morphism(a), nu1.morphism(a))});
  });
}

CoCategory trivial_cocategory(const CatCategory& cat) { return discrete_cocategory(1, cat); }

CoCategory discrete_cocategory(std::size_t n, const CatCategory& cat) {
  const FinCategory x = FinCategory::discrete(n);
  const Functor id = Functor::identity(x);
  return make_cocategory(cat, x, x, id, id, id, [](const Witness& w) { return w.injections[0]; });
}

std::optional<FunctorPair> joint_epi_counterexample(const CoCategory& data, std::size_t max_test_size) {
  return joint_epi_counterexample(data.l, data.r, max_test_size);
}

}  // namespace cocat::fincat
