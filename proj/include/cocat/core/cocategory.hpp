#pragma once

// Internal co-categories over an arbitrary host category, and the
// instance-independent axiom checker and classifier.
//
// Conventions: compose(g, f) is g . f.  The double pushout Q1 +_{Q0} Q1 glues
// the r-end of the first copy to the l-end of the second, so its injections
// satisfy nu1 . r == nu2 . l.  The triple pushout carries nu1, nu2, nu3 with
// the same gluing between consecutive copies.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cocat/core/category.hpp"
#include "cocat/core/error.hpp"

namespace cocat {

template <Category C>
struct CoCategoryData {
  using Object = typename C::Object;
  using Morphism = typename C::Morphism;

  Object q0;
  Object q1;
  Morphism l;  // q0 -> q1
  Morphism r;  // q0 -> q1
  Morphism i;  // q1 -> q0
  Morphism q;  // q1 -> double_pushout.apex
  WitnessOf<C> double_pushout;
  WitnessOf<C> triple_pushout;
};

template <class C>
concept HasCoinverseSolver =
    Category<C> && requires(const C& cat, const CoCategoryData<C>& data) {
      { cat.solve_coinverse(data) } -> std::same_as<std::optional<typename C::Morphism>>;
    };

struct AxiomCheck {
  std::string name;
  Tri status = Tri::Unknown;
  std::string detail;
};

/// Outcome of a batch of named equation checks.
struct AxiomReport {
  std::vector<AxiomCheck> checks;

  void add(std::string name, Tri status, std::string detail = {}) {
    checks.push_back({std::move(name), status, std::move(detail)});
  }
  void add(std::string name, bool ok, std::string detail = {}) {
    add(std::move(name), to_tri(ok), std::move(detail));
  }

  bool passed() const {
    for (const auto& c : checks)
      if (c.status != Tri::True) return false;
    return true;
  }

  const AxiomCheck* first_failure() const {
    for (const auto& c : checks)
      if (c.status != Tri::True) return &c;
    return nullptr;
  }

  std::vector<std::string> failed_names() const {
    std::vector<std::string> out;
    for (const auto& c : checks)
      if (c.status != Tri::True) out.push_back(c.name);
    return out;
  }
};

// ---------------------------------------------------------------------------
// Pushout helpers

/// True iff maps[k] . left_leg == maps[k+1] . right_leg for every k.
template <Category C>
bool cocone_holds(const C& cat, const WitnessOf<C>& w,
                  std::span<const typename C::Morphism> maps) {
  if (maps.size() != w.injections.size()) return false;
  for (std::size_t k = 0; k + 1 < maps.size(); ++k) {
    if (!cat.equal(cat.compose(maps[k], w.left_leg), cat.compose(maps[k + 1], w.right_leg)))
      return false;
  }
  return true;
}

/// Copairing through a witness, with the factorization equations re-checked.
template <Category C>
std::optional<typename C::Morphism> factor_through(const C& cat, const WitnessOf<C>& w,
                                                   std::span<const typename C::Morphism> maps) {
  if (maps.size() != w.injections.size()) return std::nullopt;
  auto h = cat.copair(w, maps);
  if (!h) return std::nullopt;
  for (std::size_t k = 0; k < maps.size(); ++k) {
    if (!cat.equal(cat.compose(*h, w.injections[k]), maps[k])) return std::nullopt;
  }
  return h;
}

template <Category C>
std::optional<typename C::Morphism> factor_through(
    const C& cat, const WitnessOf<C>& w, std::initializer_list<typename C::Morphism> maps) {
  std::vector<typename C::Morphism> v(maps);
  return factor_through(cat, w, std::span<const typename C::Morphism>(v));
}

/// Adds one more copy of the glued object: W +_{S} B along (last . left_leg, right_leg).
template <Category C>
WitnessOf<C> extend_pushout(const C& cat, const WitnessOf<C>& w) {
  auto step = cat.pushout(cat.compose(w.injections.back(), w.left_leg), w.right_leg);
  WitnessOf<C> out{step.apex, {}, w.left_leg, w.right_leg};
  for (const auto& inj : w.injections) out.injections.push_back(cat.compose(step.injections[0], inj));
  out.injections.push_back(step.injections[1]);
  return out;
}

/// The canonical n-fold pushout of copies glued along (left_leg, right_leg), n >= 2.
template <Category C>
WitnessOf<C> chained_pushout(const C& cat, const typename C::Morphism& left_leg,
                             const typename C::Morphism& right_leg, std::size_t copies) {
  auto w = cat.pushout(left_leg, right_leg);
  for (std::size_t k = 2; k < copies; ++k) w = extend_pushout(cat, w);
  return w;
}

/// Decides whether w is a pushout by comparing it with the host's canonical one.
/// Unknown when the host cannot compute the canonical pushout of these legs.
template <Category C>
Tri verify_pushout(const C& cat, const WitnessOf<C>& w) {
  std::optional<WitnessOf<C>> canonical;
  try {
    canonical = chained_pushout(cat, w.left_leg, w.right_leg, w.injections.size());
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::UnsupportedCapability) return Tri::Unknown;
    throw;
  }
  auto to_w = factor_through(cat, *canonical, std::span<const typename C::Morphism>(w.injections));
  auto from_w = factor_through(cat, w, std::span<const typename C::Morphism>(canonical->injections));
  if (!to_w || !from_w) return Tri::False;
  return to_tri(cat.equal(cat.compose(*from_w, *to_w), cat.identity(canonical->apex)) &&
                cat.equal(cat.compose(*to_w, *from_w), cat.identity(w.apex)));
}

/// Assembles a co-category whose q targets the host's canonical double pushout.
/// `make_q` receives that witness and returns q.
template <Category C, class MakeQ>
CoCategoryData<C> make_cocategory(const C& cat, typename C::Object q0, typename C::Object q1,
                                  typename C::Morphism l, typename C::Morphism r,
                                  typename C::Morphism i, MakeQ&& make_q) {
  auto dbl = cat.pushout(r, l);
  auto tpl = extend_pushout(cat, dbl);
  auto q = make_q(std::as_const(dbl));
  return CoCategoryData<C>{std::move(q0), std::move(q1), std::move(l), std::move(r), std::move(i),
                           std::move(q),  std::move(dbl), std::move(tpl)};
}

/// Assembles a co-category around a caller-supplied double pushout witness.
template <Category C>
CoCategoryData<C> make_cocategory_with_witness(const C& cat, typename C::Object q0,
                                               typename C::Object q1, typename C::Morphism l,
                                               typename C::Morphism r, typename C::Morphism i,
                                               typename C::Morphism q, WitnessOf<C> dbl) {
  auto tpl = extend_pushout(cat, dbl);
  return CoCategoryData<C>{std::move(q0), std::move(q1), std::move(l),   std::move(r),
                           std::move(i),  std::move(q),  std::move(dbl), std::move(tpl)};
}

// ---------------------------------------------------------------------------
// Axioms

namespace detail {

template <Category C>
void expect_arrow(const C& cat, const typename C::Morphism& m, const typename C::Object& from,
                  const typename C::Object& to, const std::string& name) {
  if (!cat.same_object(cat.dom(m), from) || !cat.same_object(cat.cod(m), to))
    throw Error(ErrorKind::TypeMismatch, name + " has the wrong domain or codomain");
}

template <Category C>
void typecheck(const C& cat, const CoCategoryData<C>& d) {
  const auto& dbl = d.double_pushout;
  const auto& tpl = d.triple_pushout;
  if (dbl.injections.size() != 2 || tpl.injections.size() != 3)
    throw Error(ErrorKind::TypeMismatch, "pushout witnesses must carry 2 and 3 injections");
  expect_arrow(cat, d.l, d.q0, d.q1, "l");
  expect_arrow(cat, d.r, d.q0, d.q1, "r");
  expect_arrow(cat, d.i, d.q1, d.q0, "i");
  expect_arrow(cat, d.q, d.q1, dbl.apex, "q");
  for (std::size_t k = 0; k < 2; ++k)
    expect_arrow(cat, dbl.injections[k], d.q1, dbl.apex, "nu" + std::to_string(k + 1));
  for (std::size_t k = 0; k < 3; ++k)
    expect_arrow(cat, tpl.injections[k], d.q1, tpl.apex, "triple nu" + std::to_string(k + 1));
  for (const auto* w : {&dbl, &tpl}) {
    if (!cat.equal(w->left_leg, d.r) || !cat.equal(w->right_leg, d.l))
      throw Error(ErrorKind::TypeMismatch, "pushout witness legs must be (r, l)");
  }
}

}  // namespace detail

/// Checks every diagram of the co-category definition.
///
/// Throws TypeMismatch on ill-typed data and IllFormedPushout when a supplied
/// witness is provably not a pushout.
template <Category C>
AxiomReport check_cocategory(const C& cat, const CoCategoryData<C>& d) {
  using M = typename C::Morphism;
  detail::typecheck(cat, d);
  const auto& dbl = d.double_pushout;
  const auto& tpl = d.triple_pushout;
  const M& nu1 = dbl.injections[0];
  const M& nu2 = dbl.injections[1];

  AxiomReport rep;
  rep.add("double gluing nu1.r = nu2.l", cat.equal(cat.compose(nu1, d.r), cat.compose(nu2, d.l)));
  rep.add("triple gluing nu_k.r = nu_k+1.l",
          cocone_holds(cat, tpl, std::span<const M>(tpl.injections)));
  for (const auto* w : {&dbl, &tpl}) {
    const Tri is_po = verify_pushout(cat, *w);
    const std::string which = w == &dbl ? "double" : "triple";
    if (is_po == Tri::False)
      throw Error(ErrorKind::IllFormedPushout, "supplied " + which + " witness is not a pushout");
    rep.add(which + " witness is a pushout", is_po);
  }

  rep.add("q.l = nu1.l", cat.equal(cat.compose(d.q, d.l), cat.compose(nu1, d.l)));
  rep.add("q.r = nu2.r", cat.equal(cat.compose(d.q, d.r), cat.compose(nu2, d.r)));

  // Co-associativity: [q, nu3] . q == [nu1, q] . q into the triple pushout.
  auto incl12 = factor_through(cat, dbl, {tpl.injections[0], tpl.injections[1]});
  auto incl23 = factor_through(cat, dbl, {tpl.injections[1], tpl.injections[2]});
  if (!incl12 || !incl23) {
    rep.add("coassociativity [q,nu3].q = [nu1,q].q", false, "triple injections do not factor");
  } else {
    const std::vector<M> left{cat.compose(*incl12, d.q), tpl.injections[2]};
    const std::vector<M> right{tpl.injections[0], cat.compose(*incl23, d.q)};
    const bool left_ok = cocone_holds(cat, dbl, std::span<const M>(left));
    const bool right_ok = cocone_holds(cat, dbl, std::span<const M>(right));
    rep.add("cocone [q,nu3]", left_ok);
    rep.add("cocone [nu1,q]", right_ok);
    if (left_ok && right_ok) {
      auto qnu3 = factor_through(cat, dbl, std::span<const M>(left));
      auto nu1q = factor_through(cat, dbl, std::span<const M>(right));
      if (!qnu3 || !nu1q)
        rep.add("coassociativity [q,nu3].q = [nu1,q].q", false, "copairing does not exist");
      else
        rep.add("coassociativity [q,nu3].q = [nu1,q].q",
                cat.equal(cat.compose(*qnu3, d.q), cat.compose(*nu1q, d.q)));
    } else {
      rep.add("coassociativity [q,nu3].q = [nu1,q].q", false, "cocone condition fails");
    }
  }

  const M id0 = cat.identity(d.q0);
  const M id1 = cat.identity(d.q1);
  rep.add("i.l = id", cat.equal(cat.compose(d.i, d.l), id0));
  rep.add("i.r = id", cat.equal(cat.compose(d.i, d.r), id0));

  auto counit = [&](const std::string& name, std::vector<M> maps) {
    const bool cocone = cocone_holds(cat, dbl, std::span<const M>(maps));
    rep.add("cocone " + name, cocone);
    if (!cocone) {
      rep.add(name + ".q = id", false, "cocone condition fails");
      return;
    }
    auto h = factor_through(cat, dbl, std::span<const M>(maps));
    if (!h)
      rep.add(name + ".q = id", false, "copairing does not exist");
    else
      rep.add(name + ".q = id", cat.equal(cat.compose(*h, d.q), id1));
  };
  counit("[li,1]", {cat.compose(d.l, d.i), id1});
  counit("[1,ri]", {id1, cat.compose(d.r, d.i)});
  return rep;
}

/// Whether l, r are jointly epimorphic, by the host's own strategy.
template <Category C>
JointEpiResult check_copreorder(const C& cat, const CoCategoryData<C>& d) {
  if constexpr (HasJointEpi<C>) {
    return cat.joint_epi(d.l, d.r);
  } else {
    throw Error(ErrorKind::UnsupportedCapability, "host has no joint-epimorphism strategy");
  }
}

/// Checks s . l = r, s . r = l, [1,s] . q = l . i and [s,1] . q = r . i.
template <Category C>
AxiomReport check_coinverse(const C& cat, const CoCategoryData<C>& d,
                            const typename C::Morphism& s) {
  using M = typename C::Morphism;
  detail::expect_arrow(cat, s, d.q1, d.q1, "s");
  AxiomReport rep;
  const bool sl = cat.equal(cat.compose(s, d.l), d.r);
  const bool sr = cat.equal(cat.compose(s, d.r), d.l);
  rep.add("s.l = r", sl);
  rep.add("s.r = l", sr);
  const M id1 = cat.identity(d.q1);
  auto side = [&](const std::string& name, bool defined, std::vector<M> maps, const M& expected) {
    if (!defined) {
      rep.add(name, false, "copairing undefined");
      return;
    }
    auto h = factor_through(cat, d.double_pushout, std::span<const M>(maps));
    rep.add(name, h.has_value() && cat.equal(cat.compose(*h, d.q), expected));
  };
  side("[1,s].q = l.i", sl, {id1, s}, cat.compose(d.l, d.i));
  side("[s,1].q = r.i", sr, {s, id1}, cat.compose(d.r, d.i));
  return rep;
}

template <Category C>
struct CoinverseResult {
  std::optional<typename C::Morphism> s;
  std::size_t candidates = 0;  // endomorphisms examined (enumeration strategy)
  std::size_t solutions = 0;   // how many candidates passed (enumeration strategy)
  bool exhaustive = false;     // None is a proof of non-existence
  std::string method;
};

/// Searches for a co-inverse.  Prefers an exact solver, else exhausts all
/// endomorphisms of Q1 (counting every solution, for uniqueness checks).
template <Category C>
CoinverseResult<C> find_coinverse(const C& cat, const CoCategoryData<C>& d) {
  CoinverseResult<C> out;
  if constexpr (HasCoinverseSolver<C>) {
    out.method = "integer linear solve";
    out.exhaustive = true;
    out.s = cat.solve_coinverse(d);
    if (out.s) {
      if (!check_coinverse(cat, d, *out.s).passed())
        throw std::logic_error("co-inverse solver returned a map failing the identities");
      out.solutions = 1;
    }
  } else if constexpr (HasEndomorphisms<C>) {
    out.method = "exhaustive endomorphism search";
    out.exhaustive = true;
    for (const auto& s : cat.endomorphisms(d.q1)) {
      ++out.candidates;
      if (check_coinverse(cat, d, s).passed()) {
        ++out.solutions;
        if (!out.s) out.s = s;
      }
    }
  } else {
    throw Error(ErrorKind::UnsupportedCapability, "host can neither enumerate nor solve for s");
  }
  return out;
}

template <Category C>
struct Classification {
  Tri is_cocategory = Tri::Unknown;
  Tri is_copreorder = Tri::Unknown;
  Tri is_cogroupoid = Tri::Unknown;
  Tri is_coequivalence = Tri::Unknown;
  std::optional<typename C::Morphism> coinverse;
  std::vector<std::string> failure_witnesses;

  AxiomReport axioms;
  JointEpiResult joint_epi;
  std::size_t coinverse_candidates = 0;
};

/// Runs the whole cascade.  The co-inverse search runs even when the
/// co-preorder test fails; host errors surface as Unknown flags plus a witness.
template <Category C>
Classification<C> classify(const C& cat, const CoCategoryData<C>& d) {
  Classification<C> out;
  try {
    out.axioms = check_cocategory(cat, d);
    out.is_cocategory = to_tri(out.axioms.passed());
    for (const auto& name : out.axioms.failed_names()) out.failure_witnesses.push_back("axiom: " + name);
  } catch (const Error& e) {
    out.is_cocategory = Tri::Unknown;
    out.failure_witnesses.push_back(e.what());
  }
  if (out.is_cocategory != Tri::True) {
    out.is_coequivalence = out.is_cocategory == Tri::False ? Tri::False : Tri::Unknown;
    return out;
  }

  try {
    out.joint_epi = check_copreorder(cat, d);
    out.is_copreorder = out.joint_epi.holds;
    if (out.is_copreorder != Tri::True && !out.joint_epi.witness.empty())
      out.failure_witnesses.push_back("copreorder: " + out.joint_epi.witness);
  } catch (const Error& e) {
    out.is_copreorder = Tri::Unknown;
    out.failure_witnesses.push_back(e.what());
  }

  try {
    auto found = find_coinverse(cat, d);
    out.coinverse_candidates = found.candidates;
    out.coinverse = found.s;
    out.is_cogroupoid = found.s ? Tri::True : (found.exhaustive ? Tri::False : Tri::Unknown);
    if (!found.s)
      out.failure_witnesses.push_back("cogroupoid: no co-inverse (" + found.method + ", " +
                                      std::to_string(found.candidates) + " candidates)");
  } catch (const Error& e) {
    out.is_cogroupoid = Tri::Unknown;
    out.failure_witnesses.push_back(e.what());
  }
  out.is_coequivalence = tri_and(out.is_copreorder, out.is_cogroupoid);
  return out;
}

/// Whether (f0, f1) is a morphism of co-categories src -> dst.
template <Category C>
AxiomReport check_cocat_morphism(const C& cat, const CoCategoryData<C>& src,
                                 const CoCategoryData<C>& dst, const typename C::Morphism& f0,
                                 const typename C::Morphism& f1) {
  using M = typename C::Morphism;
  detail::expect_arrow(cat, f0, src.q0, dst.q0, "f0");
  detail::expect_arrow(cat, f1, src.q1, dst.q1, "f1");
  AxiomReport rep;
  rep.add("f1.l = l'.f0", cat.equal(cat.compose(f1, src.l), cat.compose(dst.l, f0)));
  rep.add("f1.r = r'.f0", cat.equal(cat.compose(f1, src.r), cat.compose(dst.r, f0)));
  rep.add("f0.i = i'.f1", cat.equal(cat.compose(f0, src.i), cat.compose(dst.i, f1)));
  const std::vector<M> maps{cat.compose(dst.double_pushout.injections[0], f1),
                            cat.compose(dst.double_pushout.injections[1], f1)};
  std::optional<M> induced;
  if (cocone_holds(cat, src.double_pushout, std::span<const M>(maps)))
    induced = factor_through(cat, src.double_pushout, std::span<const M>(maps));
  if (!induced)
    rep.add("(f1+f1).q = q'.f1", false, "induced map on pushouts undefined");
  else
    rep.add("(f1+f1).q = q'.f1", cat.equal(cat.compose(*induced, src.q), cat.compose(dst.q, f1)));
  return rep;
}

}  // namespace cocat
