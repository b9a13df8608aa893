#include "cocat/abgp/dual.hpp"

#include "cocat/core/error.hpp"

namespace cocat::abgp {

namespace {

void require_free(const FgAbGroup& g, const char* what) {
  if (!g.is_free_presentation())
    throw Error(ErrorKind::NotFree, std::string(what) + " has relations; transposition needs free groups");
}

AbMap transpose(const AbMap& f) { return AbMap(f.cod(), f.dom(), f.matrix().transpose()); }

std::vector<AbMap> transpose_all(const std::vector<AbMap>& maps) {
  std::vector<AbMap> out;
  for (const auto& m : maps) out.push_back(transpose(m));
  return out;
}

}  // namespace

InternalCategoryData transpose_dualize(const CoCategory& d) {
  require_free(d.q0, "Q0");
  require_free(d.q1, "Q1");
  require_free(d.double_pushout.apex, "double pushout");
  require_free(d.triple_pushout.apex, "triple pushout");
  auto dual = [](const Witness& w) {
    return PullbackWitness{w.apex, transpose_all(w.injections), transpose(w.left_leg), transpose(w.right_leg)};
  };
  return InternalCategoryData{d.q0,         d.q1,
                              transpose(d.l), transpose(d.r),
                              transpose(d.i), transpose(d.q),
                              dual(d.double_pushout), dual(d.triple_pushout)};
}

CoCategory transpose_dualize(const InternalCategoryData& c) {
  for (const auto* g : {&c.c0, &c.c1, &c.double_pullback.apex, &c.triple_pullback.apex})
    require_free(*g, "object");
  auto dual = [](const PullbackWitness& w) {
    return Witness{w.apex, transpose_all(w.projections), transpose(w.left_leg), transpose(w.right_leg)};
  };
  return CoCategory{c.c0,
                    c.c1,
                    transpose(c.source),
                    transpose(c.target),
                    transpose(c.unit),
                    transpose(c.composition),
                    dual(c.double_pullback),
                    dual(c.triple_pullback)};
}

AxiomReport check_internal_category(const InternalCategoryData& c) {
  const auto& p2 = c.double_pullback;
  const auto& p3 = c.triple_pullback;
  if (p2.projections.size() != 2 || p3.projections.size() != 3)
    throw Error(ErrorKind::TypeMismatch, "pullback witnesses must carry 2 and 3 projections");
  const AbMap& pi1 = p2.projections[0];
  const AbMap& pi2 = p2.projections[1];
  const AbMap& s = c.source;
  const AbMap& t = c.target;
  const AbMap id0 = AbMap::identity(c.c0);
  const AbMap id1 = AbMap::identity(c.c1);

  AxiomReport rep;
  rep.add("pullback gluing t.pi1 = s.pi2", equal_maps(compose(t, pi1), compose(s, pi2)));
  rep.add("double witness is a pullback", is_pullback(p2));
  rep.add("triple witness is a pullback", is_pullback(p3));
  rep.add("s.e = id", equal_maps(compose(s, c.unit), id0));
  rep.add("t.e = id", equal_maps(compose(t, c.unit), id0));
  rep.add("s.c = s.pi1", equal_maps(compose(s, c.composition), compose(s, pi1)));
  rep.add("t.c = t.pi2", equal_maps(compose(t, c.composition), compose(t, pi2)));

  const auto& pr = p3.projections;
  const auto pi12 = pair(p2, {pr[0], pr[1]});
  const auto pi23 = pair(p2, {pr[1], pr[2]});
  std::optional<AbMap> lhs, rhs;
  if (pi12 && pi23) {
    lhs = pair(p2, {compose(c.composition, *pi12), pr[2]});
    rhs = pair(p2, {pr[0], compose(c.composition, *pi23)});
  }
  if (!lhs || !rhs)
    rep.add("associativity c.<c.pi12, pi3> = c.<pi1, c.pi23>", false, "pairing undefined");
  else
    rep.add("associativity c.<c.pi12, pi3> = c.<pi1, c.pi23>",
            equal_maps(compose(c.composition, *lhs), compose(c.composition, *rhs)));

  auto unit_law = [&](const std::string& name, const AbMap& first, const AbMap& second) {
    const auto h = pair(p2, {first, second});
    if (!h)
      rep.add(name, false, "pairing undefined");
    else
      rep.add(name, equal_maps(compose(c.composition, *h), id1));
  };
  unit_law("unit c.<e.s, 1> = 1", compose(c.unit, s), id1);
  unit_law("unit c.<1, e.t> = 1", id1, compose(c.unit, t));
  return rep;
}

}  // namespace cocat::abgp
