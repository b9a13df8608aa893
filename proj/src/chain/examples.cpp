#include "cocat/chain/examples.hpp"

#include <map>

namespace cocat::chain {

CoCategory chain_example_cocategory() {
  const ChainCategory cat;
  const ChainComplex q0({1}, {});
  const ChainComplex q1({2, 1}, {IntMatrix::from_rows({{-1}, {1}})});
  const ChainMap l(q0, q1, {IntMatrix::from_rows({{1}, {0}}), IntMatrix(1, 0)});
  const ChainMap r(q0, q1, {IntMatrix::from_rows({{0}, {1}}), IntMatrix(1, 0)});
  const ChainMap i(q1, q0, {IntMatrix::from_rows({{1, 1}}), IntMatrix(0, 1)});
  return make_cocategory(cat, q0, q1, l, r, i, [&](const Witness& w) {
    const ChainMap& nu1 = w.injections[0];
    const ChainMap& nu2 = w.injections[1];
    // vertices: v0 from the first copy, v1 from the second; edge: both edges
    const IntMatrix v = hstack(nu1.component(0).select_cols({0}), nu2.component(0).select_cols({1}));
    return ChainMap(q1, w.apex, {v, nu1.component(1) + nu2.component(1)});
  });
}

CoCategory trivial_cocategory(const ChainComplex& x) {
  const ChainCategory cat;
  const ChainMap id = ChainMap::identity(x);
  return make_cocategory(cat, x, x, id, id, id, [](const Witness& w) { return w.injections[0]; });
}

std::vector<std::pair<std::size_t, std::size_t>> total_basis(const ChainComplex& x) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::size_t widest = 0;
  for (std::size_t d = 0; d < x.length(); ++d) widest = std::max(widest, x.rank(d));
  for (std::size_t k = 0; k < widest; ++k)
    for (std::size_t d = 0; d < x.length(); ++d)
      if (k < x.rank(d)) out.emplace_back(d, k);
  return out;
}

abgp::FgAbGroup total_group(const ChainComplex& x) { return abgp::FgAbGroup::free(total_basis(x).size()); }

abgp::AbMap total_map(const ChainMap& f) {
  const auto rows = total_basis(f.cod());
  const auto cols = total_basis(f.dom());
  IntMatrix m(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (rows[i].first == cols[j].first) m(i, j) = f.component(rows[i].first)(rows[i].second, cols[j].second);
  return abgp::AbMap(total_group(f.dom()), total_group(f.cod()), m);
}

abgp::CoCategory total_space(const CoCategory& d) {
  auto witness = [](const Witness& w) {
    abgp::Witness out{total_group(w.apex), {}, total_map(w.left_leg), total_map(w.right_leg)};
    for (const auto& inj : w.injections) out.injections.push_back(total_map(inj));
    return out;
  };
  return abgp::CoCategory{total_group(d.q0), total_group(d.q1), total_map(d.l),
                          total_map(d.r),    total_map(d.i),    total_map(d.q),
                          witness(d.double_pushout), witness(d.triple_pushout)};
}

}  // namespace cocat::chain
