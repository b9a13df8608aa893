#include "cocat/chain/complex.hpp"

#include <algorithm>
#include <sstream>

#include "cocat/abgp/category.hpp"
#include "cocat/abgp/group.hpp"
#include "cocat/abgp/linear_system.hpp"
#include "cocat/abgp/normal_form.hpp"
#include "cocat/core/error.hpp"

namespace cocat::chain {

namespace {

std::string shape(const IntMatrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

abgp::FgAbGroup group(const ChainComplex& x, std::size_t d) { return abgp::FgAbGroup::free(x.rank(d)); }

}  // namespace

ChainComplex::ChainComplex(std::vector<std::size_t> ranks, std::vector<IntMatrix> differentials)
    : ranks_(std::move(ranks)), diff_(std::move(differentials)) {
  if (ranks_.empty() ? !diff_.empty() : diff_.size() + 1 != ranks_.size())
    throw Error(ErrorKind::TypeMismatch, "need one boundary matrix between consecutive degrees");
  for (std::size_t k = 0; k < diff_.size(); ++k)
    if (diff_[k].rows() != ranks_[k] || diff_[k].cols() != ranks_[k + 1])
      throw Error(ErrorKind::TypeMismatch, "boundary from degree " + std::to_string(k + 1) + " is " +
                                               shape(diff_[k]) + ", expected " + std::to_string(ranks_[k]) +
                                               "x" + std::to_string(ranks_[k + 1]));
  for (std::size_t k = 0; k + 1 < diff_.size(); ++k)
    if (!(diff_[k] * diff_[k + 1]).is_zero())
      throw Error(ErrorKind::InvalidArgument,
                  "boundary of a boundary is nonzero at degree " + std::to_string(k + 2));
  while (!ranks_.empty() && ranks_.back() == 0) {
    ranks_.pop_back();
    if (!diff_.empty()) diff_.pop_back();
  }
}

IntMatrix ChainComplex::boundary(std::size_t d) const {
  if (d == 0) throw Error(ErrorKind::InvalidArgument, "degree 0 has no boundary");
  if (d < ranks_.size()) return diff_[d - 1];
  return IntMatrix(rank(d - 1), 0);
}

std::string to_string(const ChainComplex& x) {
  std::ostringstream os;
  os << "ranks (";
  for (std::size_t d = 0; d < x.length(); ++d) os << (d ? ", " : "") << x.rank(d);
  os << ')';
  for (std::size_t d = 1; d < x.length(); ++d) os << " d" << d << " = " << abgp::to_string(x.boundary(d));
  return os.str();
}

ChainMap::ChainMap(ChainComplex dom, ChainComplex cod, std::vector<IntMatrix> components)
    : dom_(std::move(dom)), cod_(std::move(cod)), comps_(std::move(components)) {
  const std::size_t len = std::max(dom_.length(), cod_.length());
  if (comps_.size() > len) {
    for (std::size_t d = len; d < comps_.size(); ++d)
      if (!comps_[d].empty()) throw Error(ErrorKind::TypeMismatch, "component beyond both complexes");
    comps_.resize(len);
  }
  for (std::size_t d = comps_.size(); d < len; ++d) comps_.emplace_back(cod_.rank(d), dom_.rank(d));
  for (std::size_t d = 0; d < len; ++d)
    if (comps_[d].rows() != cod_.rank(d) || comps_[d].cols() != dom_.rank(d))
      throw Error(ErrorKind::TypeMismatch, "component in degree " + std::to_string(d) + " is " +
                                               shape(comps_[d]) + ", expected " + std::to_string(cod_.rank(d)) +
                                               "x" + std::to_string(dom_.rank(d)));
  for (std::size_t d = 1; d < len; ++d)
    if (!(cod_.boundary(d) * comps_[d] == comps_[d - 1] * dom_.boundary(d)))
      throw Error(ErrorKind::InvalidArgument, "map does not commute with the boundary in degree " + std::to_string(d));
}

ChainMap ChainMap::identity(const ChainComplex& x) {
  std::vector<IntMatrix> comps;
  for (std::size_t d = 0; d < x.length(); ++d) comps.push_back(IntMatrix::identity(x.rank(d)));
  return ChainMap(x, x, std::move(comps));
}

IntMatrix ChainMap::component_or_zero(std::size_t d) const {
  return d < comps_.size() ? comps_[d] : IntMatrix(cod_.rank(d), dom_.rank(d));
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
  if (!(f.cod() == g.dom())) throw Error(ErrorKind::TypeMismatch, "chain maps are not composable");
  std::vector<IntMatrix> comps;
  const std::size_t len = std::max({f.length(), g.length()});
  for (std::size_t d = 0; d < len; ++d) comps.push_back(g.component_or_zero(d) * f.component_or_zero(d));
  return ChainMap(f.dom(), g.cod(), std::move(comps));
}

std::string to_string(const ChainMap& f) {
  std::ostringstream os;
  for (std::size_t d = 0; d < f.length(); ++d)
    os << (d ? " " : "") << "f" << d << " = " << abgp::to_string(f.component(d));
  return os.str();
}

Witness pushout_chain(const ChainMap& f, const ChainMap& g) {
  if (!(f.dom() == g.dom())) throw Error(ErrorKind::TypeMismatch, "pushout legs need a common domain");
  const ChainComplex& a = f.cod();
  const ChainComplex& b = g.cod();
  const std::size_t len = std::max({a.length(), b.length(), f.dom().length()});
  std::vector<abgp::Presentation> pres;
  std::vector<std::size_t> ranks;
  for (std::size_t d = 0; d < len; ++d) {
    const IntMatrix glue = vstack(f.component_or_zero(d), -g.component_or_zero(d));
    const abgp::FgAbGroup sum(a.rank(d) + b.rank(d), glue);
    pres.push_back(abgp::free_presentation(sum));
    ranks.push_back(pres.back().group.generators());
  }
  std::vector<IntMatrix> diffs;
  for (std::size_t d = 1; d < len; ++d)
    diffs.push_back(pres[d - 1].to * block_diag(a.boundary(d), b.boundary(d)) * pres[d].from);
  ChainComplex apex(ranks, diffs);
  std::vector<IntMatrix> ia, ib;
  for (std::size_t d = 0; d < len; ++d) {
    const std::size_t na = a.rank(d), nb = b.rank(d);
    ia.push_back(pres[d].to * vstack(IntMatrix::identity(na), IntMatrix(nb, na)));
    ib.push_back(pres[d].to * vstack(IntMatrix(na, nb), IntMatrix::identity(nb)));
  }
  return Witness{apex, {ChainMap(a, apex, ia), ChainMap(b, apex, ib)}, f, g};
}

std::optional<ChainMap> copair(const Witness& w, std::span<const ChainMap> maps) {
  if (maps.size() != w.injections.size() || maps.empty()) return std::nullopt;
  const ChainComplex target = maps.front().cod();
  for (std::size_t k = 0; k < maps.size(); ++k)
    if (!(maps[k].cod() == target) || !(maps[k].dom() == w.injections[k].dom())) return std::nullopt;
  std::size_t len = std::max(w.apex.length(), target.length());
  std::vector<IntMatrix> comps;
  for (std::size_t d = 0; d < len; ++d) {
    const abgp::FgAbGroup apex = group(w.apex, d);
    std::vector<abgp::AbMap> inj, m;
    for (std::size_t k = 0; k < maps.size(); ++k) {
      inj.emplace_back(group(w.injections[k].dom(), d), apex, w.injections[k].component_or_zero(d));
      m.emplace_back(group(maps[k].dom(), d), group(target, d), maps[k].component_or_zero(d));
    }
    const abgp::Witness wd{apex, inj, inj.front(), inj.front()};  // legs unused by copair
    auto h = abgp::copair(wd, m);
    if (!h) return std::nullopt;
    comps.push_back(h->matrix());
  }
  try {
    return ChainMap(w.apex, target, std::move(comps));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InvalidArgument) return std::nullopt;
    throw;
  }
}

JointEpiResult ChainCategory::joint_epi(const ChainMap& l, const ChainMap& r) const {
  if (!(l.cod() == r.cod())) throw Error(ErrorKind::TypeMismatch, "l and r need a common codomain");
  const ChainComplex& x = l.cod();
  for (std::size_t d = 0; d < x.length(); ++d) {
    const auto factors = abgp::cokernel(hstack(l.component_or_zero(d), r.component_or_zero(d)));
    if (!factors.empty()) {
      std::string s = "degree " + std::to_string(d) + ": cokernel of [l | r] has invariant factors [";
      for (std::size_t k = 0; k < factors.size(); ++k) s += (k ? ", " : "") + factors[k].get_str();
      return {Tri::False, s + "]"};
    }
  }
  return {Tri::True, {}};
}

std::optional<ChainMap> ChainCategory::solve_coinverse_system(const ChainComplex& q1, const ChainMap& l,
                                                              const ChainMap& r, const ChainMap& i,
                                                              const ChainMap& q, const Witness& dbl) {
  abgp::LinearSystem sys;
  const std::size_t len = q1.length();
  std::vector<std::size_t> s(len);
  for (std::size_t d = 0; d < len; ++d) {
    const std::size_t n = q1.rank(d), m = dbl.apex.rank(d);
    const IntMatrix id = IntMatrix::identity(n);
    const IntMatrix nu1 = dbl.injections[0].component_or_zero(d);
    const IntMatrix nu2 = dbl.injections[1].component_or_zero(d);
    s[d] = sys.add_unknown(n, n);
    const std::size_t h1 = sys.add_unknown(n, m);
    const std::size_t h2 = sys.add_unknown(n, m);
    sys.add_equation({{id, s[d], l.component_or_zero(d)}}, r.component_or_zero(d));
    sys.add_equation({{id, s[d], r.component_or_zero(d)}}, l.component_or_zero(d));
    sys.add_equation({{id, h1, nu1}}, id);
    sys.add_equation({{id, h1, nu2}, {-id, s[d], id}}, IntMatrix(n, n));
    sys.add_equation({{id, h1, q.component_or_zero(d)}}, l.component_or_zero(d) * i.component_or_zero(d));
    sys.add_equation({{id, h2, nu1}, {-id, s[d], id}}, IntMatrix(n, n));
    sys.add_equation({{id, h2, nu2}}, id);
    sys.add_equation({{id, h2, q.component_or_zero(d)}}, r.component_or_zero(d) * i.component_or_zero(d));
  }
  for (std::size_t d = 1; d < len; ++d) {
    const IntMatrix bd = q1.boundary(d);
    sys.add_equation({{bd, s[d], IntMatrix::identity(q1.rank(d))}, {-IntMatrix::identity(q1.rank(d - 1)), s[d - 1], bd}},
                     IntMatrix(q1.rank(d - 1), q1.rank(d)));
  }
  auto sol = sys.solve();
  if (!sol) return std::nullopt;
  std::vector<IntMatrix> comps;
  for (std::size_t d = 0; d < len; ++d) comps.push_back((*sol)[s[d]]);
  return ChainMap(q1, q1, std::move(comps));
}

}  // namespace cocat::chain
