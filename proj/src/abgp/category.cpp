#include "cocat/abgp/category.hpp"

#include "cocat/abgp/linear_system.hpp"
#include "cocat/abgp/normal_form.hpp"
#include "cocat/core/error.hpp"

namespace cocat::abgp {

namespace {

IntMatrix stack_cols(std::span<const IntMatrix> blocks, std::size_t rows) {
  IntMatrix out(rows, 0);
  for (const auto& b : blocks) out = hstack(out, b);
  return out;
}

std::string render(const std::vector<BigInt>& v) {
  std::string s = "[";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + v[k].get_str();
  return s + "]";
}

}  // namespace

Witness pushout(const AbMap& f, const AbMap& g) {
  if (!(f.dom() == g.dom())) throw Error(ErrorKind::TypeMismatch, "pushout legs need a common domain");
  const FgAbGroup& a = f.cod();
  const FgAbGroup& b = g.cod();
  const std::size_t na = a.generators(), nb = b.generators();
  const IntMatrix glue = vstack(f.matrix(), -g.matrix());
  const FgAbGroup sum(na + nb, hstack(block_diag(a.relations(), b.relations()), glue));
  const Presentation p = simplify(sum);
  const IntMatrix in_a = vstack(IntMatrix::identity(na), IntMatrix(nb, na));
  const IntMatrix in_b = vstack(IntMatrix(na, nb), IntMatrix::identity(nb));
  return Witness{p.group,
                 {AbMap(a, p.group, p.to * in_a), AbMap(b, p.group, p.to * in_b)},
                 f,
                 g};
}

std::optional<AbMap> copair(const Witness& w, std::span<const AbMap> maps) {
  if (maps.size() != w.injections.size() || maps.empty()) return std::nullopt;
  const FgAbGroup target = maps.front().cod();
  for (std::size_t k = 0; k < maps.size(); ++k)
    if (!(maps[k].cod() == target) || !(maps[k].dom() == w.injections[k].dom())) return std::nullopt;
  LinearSystem sys;
  const std::size_t h = sys.add_unknown(target.generators(), w.apex.generators());
  const IntMatrix& mod = target.relations();
  for (std::size_t k = 0; k < maps.size(); ++k)
    sys.add_congruence({{IntMatrix::identity(target.generators()), h, w.injections[k].matrix()}},
                       maps[k].matrix(), mod);
  const IntMatrix& rel = w.apex.relations();
  sys.add_congruence({{IntMatrix::identity(target.generators()), h, rel}},
                     IntMatrix(target.generators(), rel.cols()), mod);
  auto sol = sys.solve();
  if (!sol) return std::nullopt;
  return AbMap(w.apex, target, (*sol)[h]);
}

PullbackWitness pullback(const AbMap& f, const AbMap& g) {
  if (!(f.cod() == g.cod())) throw Error(ErrorKind::TypeMismatch, "pullback legs need a common codomain");
  const FgAbGroup& a = f.dom();
  const FgAbGroup& b = g.dom();
  const std::size_t na = a.generators(), nb = b.generators();
  // (x, y, z) with f x - g y = R_C z; keep (x, y)
  const IntMatrix big = hstack(hstack(f.matrix(), -g.matrix()), f.cod().relations());
  const IntMatrix kernel = kernel_basis(big);
  std::vector<std::size_t> head;
  for (std::size_t k = 0; k < na + nb; ++k) head.push_back(k);
  const IntMatrix basis = lattice_basis(kernel.select_rows(head));

  const IntMatrix sum_rel = block_diag(a.relations(), b.relations());
  const HermiteForm hf = hnf(basis);
  IntMatrix rel(basis.cols(), sum_rel.cols());
  for (std::size_t c = 0; c < sum_rel.cols(); ++c) {
    auto y = solve_hermite(hf, sum_rel.col(c));
    if (!y) throw std::logic_error("domain relator outside the pullback lattice");
    const auto coords = hf.u * *y;
    for (std::size_t r = 0; r < basis.cols(); ++r) rel(r, c) = coords[r];
  }
  const Presentation p = simplify(FgAbGroup(basis.cols(), rel));
  const IntMatrix emb = basis * p.from;  // apex generators inside A (+) B
  std::vector<std::size_t> top, bottom;
  for (std::size_t k = 0; k < na; ++k) top.push_back(k);
  for (std::size_t k = na; k < na + nb; ++k) bottom.push_back(k);
  return PullbackWitness{p.group,
                         {AbMap(p.group, a, emb.select_rows(top)), AbMap(p.group, b, emb.select_rows(bottom))},
                         f,
                         g};
}

PullbackWitness chained_pullback(const AbMap& left_leg, const AbMap& right_leg, std::size_t copies) {
  PullbackWitness w = pullback(left_leg, right_leg);
  for (std::size_t k = 2; k < copies; ++k) {
    const PullbackWitness step = pullback(compose(left_leg, w.projections.back()), right_leg);
    PullbackWitness next{step.apex, {}, left_leg, right_leg};
    for (const auto& p : w.projections) next.projections.push_back(compose(p, step.projections[0]));
    next.projections.push_back(step.projections[1]);
    w = std::move(next);
  }
  return w;
}

std::optional<AbMap> pair(const PullbackWitness& w, std::span<const AbMap> maps) {
  if (maps.size() != w.projections.size() || maps.empty()) return std::nullopt;
  const FgAbGroup source = maps.front().dom();
  for (std::size_t k = 0; k < maps.size(); ++k)
    if (!(maps[k].dom() == source) || !(maps[k].cod() == w.projections[k].cod())) return std::nullopt;
  LinearSystem sys;
  const std::size_t h = sys.add_unknown(w.apex.generators(), source.generators());
  const IntMatrix id = IntMatrix::identity(source.generators());
  for (std::size_t k = 0; k < maps.size(); ++k)
    sys.add_congruence({{w.projections[k].matrix(), h, id}}, maps[k].matrix(), maps[k].cod().relations());
  const IntMatrix& rel = source.relations();
  sys.add_congruence({{IntMatrix::identity(w.apex.generators()), h, rel}},
                     IntMatrix(w.apex.generators(), rel.cols()), w.apex.relations());
  auto sol = sys.solve();
  if (!sol) return std::nullopt;
  AbMap out(source, w.apex, (*sol)[h]);
  // the projections need not be jointly monic for an arbitrary witness
  for (std::size_t k = 0; k < maps.size(); ++k)
    if (!equal_maps(compose(w.projections[k], out), maps[k])) return std::nullopt;
  return out;
}

std::optional<AbMap> pair(const PullbackWitness& w, std::initializer_list<AbMap> maps) {
  const std::vector<AbMap> v(maps);
  return pair(w, std::span<const AbMap>(v));
}

bool is_pullback(const PullbackWitness& w) {
  for (std::size_t k = 0; k + 1 < w.projections.size(); ++k)
    if (!equal_maps(compose(w.left_leg, w.projections[k]), compose(w.right_leg, w.projections[k + 1])))
      return false;
  const PullbackWitness canon = chained_pullback(w.left_leg, w.right_leg, w.projections.size());
  auto into_canon = pair(canon, std::span<const AbMap>(w.projections));
  auto into_w = pair(w, std::span<const AbMap>(canon.projections));
  if (!into_canon || !into_w) return false;
  return equal_maps(compose(*into_w, *into_canon), AbMap::identity(w.apex)) &&
         equal_maps(compose(*into_canon, *into_w), AbMap::identity(canon.apex));
}

std::vector<BigInt> joint_cokernel(const AbMap& l, const AbMap& r) {
  if (!(l.cod() == r.cod())) throw Error(ErrorKind::TypeMismatch, "joint-epi test needs a common codomain");
  const IntMatrix blocks[] = {l.matrix(), r.matrix(), l.cod().relations()};
  return cokernel(stack_cols(blocks, l.cod().generators()));
}

JointEpiResult AbGpCategory::joint_epi(const AbMap& l, const AbMap& r) const {
  const auto factors = joint_cokernel(l, r);
  if (factors.empty()) return {Tri::True, {}};
  return {Tri::False, "cokernel of [l | r] has invariant factors " + render(factors)};
}

std::optional<AbMap> AbGpCategory::solve_coinverse_system(const FgAbGroup& q1, const AbMap& l,
                                                          const AbMap& r, const AbMap& i, const AbMap& q,
                                                          const Witness& dbl) {
  const std::size_t n = q1.generators();
  const FgAbGroup& apex = dbl.apex;
  const IntMatrix& mod = q1.relations();
  const IntMatrix id = IntMatrix::identity(n);
  const IntMatrix& nu1 = dbl.injections[0].matrix();
  const IntMatrix& nu2 = dbl.injections[1].matrix();

  LinearSystem sys;
  const std::size_t s = sys.add_unknown(n, n);
  const std::size_t h1 = sys.add_unknown(n, apex.generators());  // [1, s]
  const std::size_t h2 = sys.add_unknown(n, apex.generators());  // [s, 1]
  sys.add_congruence({{id, s, l.matrix()}}, r.matrix(), mod);
  sys.add_congruence({{id, s, r.matrix()}}, l.matrix(), mod);
  sys.add_congruence({{id, s, mod}}, IntMatrix(n, mod.cols()), mod);
  const IntMatrix& arel = apex.relations();
  for (std::size_t h : {h1, h2}) sys.add_congruence({{id, h, arel}}, IntMatrix(n, arel.cols()), mod);
  sys.add_congruence({{id, h1, nu1}}, id, mod);
  sys.add_congruence({{id, h1, nu2}, {-id, s, id}}, IntMatrix(n, n), mod);
  sys.add_congruence({{id, h1, q.matrix()}}, l.matrix() * i.matrix(), mod);
  sys.add_congruence({{id, h2, nu1}, {-id, s, id}}, IntMatrix(n, n), mod);
  sys.add_congruence({{id, h2, nu2}}, id, mod);
  sys.add_congruence({{id, h2, q.matrix()}}, r.matrix() * i.matrix(), mod);
  auto sol = sys.solve();
  if (!sol) return std::nullopt;
  return AbMap(q1, q1, (*sol)[s]);
}

}  // namespace cocat::abgp
