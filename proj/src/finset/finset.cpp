#include "cocat/finset/finset.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "cocat/core/error.hpp"
#include "cocat/finset/union_find.hpp"

namespace cocat::finset {

FinMap::FinMap(FinSetObj dom, FinSetObj cod, std::vector<std::size_t> table)
    : dom_(dom), cod_(cod), table_(std::move(table)) {
  if (table_.size() != dom_.size)
    throw Error(ErrorKind::InvalidArgument, "map table length " + std::to_string(table_.size()) +
                                                " does not match domain size " +
                                                std::to_string(dom_.size));
  for (std::size_t x = 0; x < table_.size(); ++x) {
    if (table_[x] >= cod_.size)
      throw Error(ErrorKind::InvalidArgument, "map sends " + std::to_string(x) + " to " +
                                                  std::to_string(table_[x]) +
                                                  ", outside codomain of size " +
                                                  std::to_string(cod_.size));
  }
}

FinMap FinMap::identity(FinSetObj obj) {
  std::vector<std::size_t> t(obj.size);
  std::iota(t.begin(), t.end(), std::size_t{0});
  return FinMap(obj, obj, std::move(t));
}

FinMap FinMap::constant(FinSetObj dom, FinSetObj cod, std::size_t value) {
  return FinMap(dom, cod, std::vector<std::size_t>(dom.size, value));
}

bool FinMap::injective() const {
  std::vector<bool> hit(cod_.size, false);
  for (auto y : table_) {
    if (hit[y]) return false;
    hit[y] = true;
  }
  return true;
}

bool FinMap::surjective() const {
  std::vector<bool> hit(cod_.size, false);
  for (auto y : table_) hit[y] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

FinMap compose(const FinMap& g, const FinMap& f) {
  if (f.cod() != g.dom())
    throw Error(ErrorKind::TypeMismatch, "cannot compose " + to_string(g) + " after " + to_string(f));
  std::vector<std::size_t> t(f.dom().size);
  for (std::size_t x = 0; x < t.size(); ++x) t[x] = g(f(x));
  return FinMap(f.dom(), g.cod(), std::move(t));
}

FinMap inverse(const FinMap& f) {
  if (!f.bijective()) throw Error(ErrorKind::InvalidArgument, "inverse of a non-bijection");
  std::vector<std::size_t> t(f.cod().size);
  for (std::size_t x = 0; x < f.dom().size; ++x) t[f(x)] = x;
  return FinMap(f.cod(), f.dom(), std::move(t));
}

std::string to_string(const FinMap& f) {
  std::ostringstream os;
  os << f.dom().size << "->" << f.cod().size << " [";
  for (std::size_t x = 0; x < f.dom().size; ++x) os << (x ? " " : "") << f(x);
  os << "]";
  return os.str();
}

FinMap inclusion(const Subobject& s) {
  return FinMap(FinSetObj{s.elements.size()}, s.ambient, s.elements);
}

Witness pushout(const FinMap& f, const FinMap& g) {
  if (f.dom() != g.dom()) throw Error(ErrorKind::TypeMismatch, "pushout legs need a common domain");
  const std::size_t a = f.cod().size;
  const std::size_t b = g.cod().size;
  UnionFind uf(a + b);
  for (std::size_t s = 0; s < f.dom().size; ++s) uf.unite(f(s), a + g(s));
  std::size_t classes = 0;
  const auto label = uf.canonical_classes(classes);
  const FinSetObj apex{classes};
  std::vector<std::size_t> t1(label.begin(), label.begin() + static_cast<std::ptrdiff_t>(a));
  std::vector<std::size_t> t2(label.begin() + static_cast<std::ptrdiff_t>(a), label.end());
  return Witness{apex, {FinMap(f.cod(), apex, std::move(t1)), FinMap(g.cod(), apex, std::move(t2))},
                 f, g};
}

Pullback pullback(const FinMap& f, const FinMap& g) {
  if (f.cod() != g.cod()) throw Error(ErrorKind::TypeMismatch, "pullback legs need a common codomain");
  std::vector<std::size_t> t1, t2;
  for (std::size_t a = 0; a < f.dom().size; ++a)
    for (std::size_t b = 0; b < g.dom().size; ++b)
      if (f(a) == g(b)) {
        t1.push_back(a);
        t2.push_back(b);
      }
  const FinSetObj obj{t1.size()};
  return Pullback{obj, FinMap(obj, f.dom(), std::move(t1)), FinMap(obj, g.dom(), std::move(t2))};
}

std::optional<FinMap> pullback_pair(const Pullback& pb, const FinMap& u, const FinMap& v) {
  if (u.dom() != v.dom() || u.cod() != pb.p1.cod() || v.cod() != pb.p2.cod())
    throw Error(ErrorKind::TypeMismatch, "cone does not match the pullback");
  std::vector<std::size_t> t(u.dom().size);
  for (std::size_t x = 0; x < t.size(); ++x) {
    bool found = false;
    for (std::size_t p = 0; p < pb.object.size && !found; ++p) {
      if (pb.p1(p) == u(x) && pb.p2(p) == v(x)) {
        t[x] = p;
        found = true;
      }
    }
    if (!found) return std::nullopt;
  }
  return FinMap(u.dom(), pb.object, std::move(t));
}

Subobject image(const FinMap& f) {
  std::vector<std::size_t> e(f.table());
  std::sort(e.begin(), e.end());
  e.erase(std::unique(e.begin(), e.end()), e.end());
  return Subobject{f.cod(), std::move(e)};
}

Subobject union_of(const Subobject& a, const Subobject& b) {
  if (a.ambient != b.ambient) throw Error(ErrorKind::TypeMismatch, "union of subobjects of different sets");
  std::vector<std::size_t> e;
  std::set_union(a.elements.begin(), a.elements.end(), b.elements.begin(), b.elements.end(),
                 std::back_inserter(e));
  return Subobject{a.ambient, std::move(e)};
}

bool is_jointly_covering(std::span<const FinMap> maps) {
  if (maps.empty()) return false;
  const FinSetObj target = maps.front().cod();
  Subobject acc{target, {}};
  for (const auto& m : maps) {
    if (m.cod() != target) throw Error(ErrorKind::TypeMismatch, "jointly covering family needs a common codomain");
    acc = union_of(acc, image(m));
  }
  return acc.elements.size() == target.size;
}

FinMap equalizer(const FinMap& f, const FinMap& g) {
  if (f.dom() != g.dom() || f.cod() != g.cod())
    throw Error(ErrorKind::TypeMismatch, "equalizer of non-parallel maps");
  std::vector<std::size_t> e;
  for (std::size_t a = 0; a < f.dom().size; ++a)
    if (f(a) == g(a)) e.push_back(a);
  const FinSetObj sub{e.size()};
  return FinMap(sub, f.dom(), std::move(e));
}

Subobject preimage(const FinMap& f, const Subobject& s) {
  if (s.ambient != f.cod()) throw Error(ErrorKind::TypeMismatch, "preimage of a subobject of another set");
  std::vector<std::size_t> e;
  for (std::size_t x = 0; x < f.dom().size; ++x)
    if (std::binary_search(s.elements.begin(), s.elements.end(), f(x))) e.push_back(x);
  return Subobject{f.dom(), std::move(e)};
}

void for_each_map(FinSetObj dom, FinSetObj cod, const std::function<bool(const FinMap&)>& visit) {
  if (dom.size > 0 && cod.size == 0) return;
  std::vector<std::size_t> t(dom.size, 0);
  while (true) {
    if (!visit(FinMap(dom, cod, t))) return;
    std::size_t k = dom.size;
    while (k > 0) {
      --k;
      if (++t[k] < cod.size) break;
      t[k] = 0;
      if (k == 0) return;
    }
    if (dom.size == 0) return;
  }
}

std::vector<FinMap> permutations(FinSetObj obj) {
  std::vector<std::size_t> t(obj.size);
  std::iota(t.begin(), t.end(), std::size_t{0});
  std::vector<FinMap> out;
  do {
    out.emplace_back(obj, obj, t);
  } while (std::next_permutation(t.begin(), t.end()));
  return out;
}

std::size_t map_count(FinSetObj dom, FinSetObj cod) {
  if (cod.size == 0) return dom.size == 0 ? 1 : 0;
  std::size_t n = 1;
  for (std::size_t k = 0; k < dom.size; ++k) {
    if (n > std::numeric_limits<std::size_t>::max() / cod.size)
      return std::numeric_limits<std::size_t>::max();
    n *= cod.size;
  }
  return n;
}

std::optional<FinMap> FinSetCategory::copair(const Witness& w, std::span<const FinMap> maps) const {
  if (maps.size() != w.injections.size() || maps.empty()) return std::nullopt;
  const FinSetObj target = maps.front().cod();
  constexpr std::size_t unset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> t(w.apex.size, unset);
  for (std::size_t k = 0; k < maps.size(); ++k) {
    const auto& inj = w.injections[k];
    if (maps[k].dom() != inj.dom() || maps[k].cod() != target) return std::nullopt;
    for (std::size_t x = 0; x < inj.dom().size; ++x) {
      auto& slot = t[inj(x)];
      if (slot != unset && slot != maps[k](x)) return std::nullopt;
      slot = maps[k](x);
    }
  }
  if (std::find(t.begin(), t.end(), unset) != t.end()) return std::nullopt;
  return FinMap(w.apex, target, std::move(t));
}

JointEpiResult FinSetCategory::joint_epi(const FinMap& l, const FinMap& r) const {
  const Subobject covered = union_of(image(l), image(r));
  for (std::size_t x = 0; x < l.cod().size; ++x) {
    if (!std::binary_search(covered.elements.begin(), covered.elements.end(), x))
      return JointEpiResult{Tri::False, "element " + std::to_string(x) + " is in the image of neither l nor r"};
  }
  return JointEpiResult{Tri::True, {}};
}

std::vector<FinMap> FinSetCategory::endomorphisms(FinSetObj obj) const {
  if (map_count(obj, obj) > cap_)
    throw Error(ErrorKind::SizeLimit, "too many endomorphisms of a set of size " + std::to_string(obj.size));
  std::vector<FinMap> out;
  for_each_map(obj, obj, [&](const FinMap& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

}  // namespace cocat::finset
