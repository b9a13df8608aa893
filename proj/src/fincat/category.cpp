#include "cocat/fincat/category.hpp"

#include <algorithm>
#include <sstream>

#include "cocat/core/error.hpp"

namespace cocat::fincat {

std::optional<std::string> validation_error(const CategoryTable& t) {
  const std::size_t n = t.arrows.size();
  if (t.identities.size() != t.objects) return "need one identity per object";
  if (t.table.size() != n * n) return "composition table must be square in the morphism count";
  if (!t.names.empty() && t.names.size() != n) return "one name per morphism";
  for (std::size_t m = 0; m < n; ++m)
    if (t.arrows[m].src >= t.objects || t.arrows[m].tgt >= t.objects)
      return "morphism " + std::to_string(m) + " has an endpoint out of range";
  for (std::size_t o = 0; o < t.objects; ++o) {
    const std::size_t id = t.identities[o];
    if (id >= n || t.arrows[id].src != o || t.arrows[id].tgt != o)
      return "identity of object " + std::to_string(o) + " is not a loop on it";
  }
  auto at = [&](std::size_t g, std::size_t f) { return t.table[g * n + f]; };
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t f = 0; f < n; ++f) {
      const std::size_t c = at(g, f);
      const bool composable = t.arrows[f].tgt == t.arrows[g].src;
      const std::string pair = "(" + std::to_string(g) + ", " + std::to_string(f) + ")";
      if (!composable) {
        if (c != kNone) return "composite defined on non-composable pair " + pair;
        continue;
      }
      if (c >= n) return "composite missing for composable pair " + pair;
      if (t.arrows[c].src != t.arrows[f].src || t.arrows[c].tgt != t.arrows[g].tgt)
        return "composite of " + pair + " has the wrong endpoints";
    }
  for (std::size_t m = 0; m < n; ++m) {
    if (at(t.identities[t.arrows[m].tgt], m) != m || at(m, t.identities[t.arrows[m].src]) != m)
      return "identity law fails at morphism " + std::to_string(m);
  }
  for (std::size_t h = 0; h < n; ++h)
    for (std::size_t g = 0; g < n; ++g) {
      if (at(h, g) == kNone) continue;
      for (std::size_t f = 0; f < n; ++f) {
        if (at(g, f) == kNone) continue;
        if (at(at(h, g), f) != at(h, at(g, f)))
          return "associativity fails at (" + std::to_string(h) + ", " + std::to_string(g) + ", " +
                 std::to_string(f) + ")";
      }
    }
  return std::nullopt;
}

FinCategory::FinCategory() : t_(std::make_shared<const CategoryTable>()) {}

FinCategory::FinCategory(CategoryTable t) {
  if (auto err = validation_error(t)) throw Error(ErrorKind::NonComposable, "invalid category: " + *err);
  if (t.names.empty()) {
    for (std::size_t m = 0; m < t.arrows.size(); ++m) {
      const auto it = std::find(t.identities.begin(), t.identities.end(), m);
      t.names.push_back(it != t.identities.end()
                            ? "id" + std::to_string(it - t.identities.begin())
                            : "m" + std::to_string(m));
    }
  }
  t_ = std::make_shared<const CategoryTable>(std::move(t));
}

FinCategory FinCategory::terminal() { return discrete(1); }

FinCategory FinCategory::arrow() {
  CategoryTable t;
  t.objects = 2;
  t.arrows = {{0, 0}, {1, 1}, {0, 1}};
  t.identities = {0, 1};
  t.table.assign(9, kNone);
  auto set = [&](std::size_t g, std::size_t f, std::size_t c) { t.table[g * 3 + f] = c; };
  set(0, 0, 0);
  set(1, 1, 1);
  set(2, 0, 2);
  set(1, 2, 2);
  t.names = {"id0", "id1", "a"};
  return FinCategory(std::move(t));
}

FinCategory FinCategory::discrete(std::size_t n) {
  CategoryTable t;
  t.objects = n;
  for (std::size_t o = 0; o < n; ++o) {
    t.arrows.push_back({o, o});
    t.identities.push_back(o);
  }
  t.table.assign(n * n, kNone);
  for (std::size_t o = 0; o < n; ++o) t.table[o * n + o] = o;
  return FinCategory(std::move(t));
}

FinCategory FinCategory::free_on_dag(std::size_t objects, const std::vector<Arrow>& edges) {
  for (const auto& e : edges)
    if (e.src >= e.tgt || e.tgt >= objects)
      throw Error(ErrorKind::InvalidArgument, "free_on_dag needs edges with src < tgt < objects");
  // paths as edge lists, grown by length
  std::vector<std::vector<std::size_t>> paths;
  std::vector<std::vector<std::size_t>> frontier;
  for (std::size_t e = 0; e < edges.size(); ++e) frontier.push_back({e});
  while (!frontier.empty()) {
    std::sort(frontier.begin(), frontier.end());
    paths.insert(paths.end(), frontier.begin(), frontier.end());
    std::vector<std::vector<std::size_t>> next;
    for (const auto& p : frontier)
      for (std::size_t e = 0; e < edges.size(); ++e)
        if (edges[e].src == edges[p.back()].tgt) {
          auto q = p;
          q.push_back(e);
          next.push_back(std::move(q));
        }
    frontier = std::move(next);
  }
  CategoryTable t;
  t.objects = objects;
  for (std::size_t o = 0; o < objects; ++o) {
    t.arrows.push_back({o, o});
    t.identities.push_back(o);
    t.names.push_back("id" + std::to_string(o));
  }
  for (const auto& p : paths) {
    t.arrows.push_back({edges[p.front()].src, edges[p.back()].tgt});
    std::string name;
    for (std::size_t k = p.size(); k-- > 0;) name += (name.empty() ? "f" : ".f") + std::to_string(p[k]);
    t.names.push_back(name);
  }
  const std::size_t n = t.arrows.size();
  t.table.assign(n * n, kNone);
  auto path_of = [&](std::size_t m) { return paths[m - objects]; };
  auto index_of = [&](const std::vector<std::size_t>& p) {
    return objects + static_cast<std::size_t>(std::lower_bound(paths.begin(), paths.end(), p,
                                                               [](const auto& a, const auto& b) {
                                                                 if (a.size() != b.size()) return a.size() < b.size();
                                                                 return a < b;
                                                               }) -
                                              paths.begin());
  };
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t f = 0; f < n; ++f) {
      if (t.arrows[f].tgt != t.arrows[g].src) continue;
      std::size_t c;
      if (g < objects) c = f;
      else if (f < objects) c = g;
      else {
        auto p = path_of(f);
        const auto q = path_of(g);
        p.insert(p.end(), q.begin(), q.end());
        c = index_of(p);
      }
      t.table[g * n + f] = c;
    }
  return FinCategory(std::move(t));
}

std::size_t FinCategory::compose(std::size_t g, std::size_t f) const {
  const std::size_t c = try_compose(g, f);
  if (c == kNone)
    throw Error(ErrorKind::NonComposable, "morphisms " + name(g) + " and " + name(f) + " are not composable");
  return c;
}

bool operator==(const FinCategory& a, const FinCategory& b) {
  if (a.t_ == b.t_) return true;
  return a.t_->objects == b.t_->objects && a.t_->arrows == b.t_->arrows &&
         a.t_->identities == b.t_->identities && a.t_->table == b.t_->table;
}

bool validate(const FinCategory& c) { return !validation_error(c.table()).has_value(); }

std::string to_string(const FinCategory& c) {
  std::ostringstream os;
  os << c.objects() << " objects, " << c.morphisms() << " morphisms {";
  for (std::size_t m = 0; m < c.morphisms(); ++m)
    os << (m ? ", " : "") << c.name(m) << ": " << c.src(m) << "->" << c.tgt(m);
  os << '}';
  return os.str();
}

std::optional<std::string> functor_error(const FinCategory& dom, const FinCategory& cod,
                                         const std::vector<std::size_t>& obj,
                                         const std::vector<std::size_t>& mor) {
  if (obj.size() != dom.objects() || mor.size() != dom.morphisms()) return "assignment has the wrong length";
  for (auto o : obj)
    if (o >= cod.objects()) return "object image out of range";
  for (std::size_t m = 0; m < mor.size(); ++m) {
    if (mor[m] >= cod.morphisms()) return "morphism image out of range";
    if (cod.src(mor[m]) != obj[dom.src(m)] || cod.tgt(mor[m]) != obj[dom.tgt(m)])
      return "image of " + dom.name(m) + " has the wrong endpoints";
  }
  for (std::size_t o = 0; o < dom.objects(); ++o)
    if (mor[dom.identity(o)] != cod.identity(obj[o])) return "identity of object " + std::to_string(o) + " not preserved";
  for (std::size_t g = 0; g < dom.morphisms(); ++g)
    for (std::size_t f = 0; f < dom.morphisms(); ++f) {
      const std::size_t c = dom.try_compose(g, f);
      if (c != kNone && cod.try_compose(mor[g], mor[f]) != mor[c])
        return "composite " + dom.name(g) + " . " + dom.name(f) + " not preserved";
    }
  return std::nullopt;
}

Functor::Functor(FinCategory dom, FinCategory cod, std::vector<std::size_t> on_objects,
                 std::vector<std::size_t> on_morphisms)
    : dom_(std::move(dom)), cod_(std::move(cod)), obj_(std::move(on_objects)), mor_(std::move(on_morphisms)) {
  if (auto err = functor_error(dom_, cod_, obj_, mor_)) throw Error(ErrorKind::InvalidArgument, "not a functor: " + *err);
}

Functor Functor::identity(const FinCategory& c) {
  std::vector<std::size_t> obj(c.objects()), mor(c.morphisms());
  for (std::size_t k = 0; k < obj.size(); ++k) obj[k] = k;
  for (std::size_t k = 0; k < mor.size(); ++k) mor[k] = k;
  return Functor(c, c, std::move(obj), std::move(mor));
}

Functor compose(const Functor& g, const Functor& f) {
  if (!(f.cod() == g.dom())) throw Error(ErrorKind::TypeMismatch, "functors are not composable");
  std::vector<std::size_t> obj, mor;
  for (auto o : f.on_objects()) obj.push_back(g.object(o));
  for (auto m : f.on_morphisms()) mor.push_back(g.morphism(m));
  return Functor(f.dom(), g.cod(), std::move(obj), std::move(mor));
}

std::string to_string(const Functor& f) {
  std::ostringstream os;
  os << "objects [";
  for (std::size_t o = 0; o < f.on_objects().size(); ++o) os << (o ? " " : "") << f.object(o);
  os << "] morphisms [";
  for (std::size_t m = 0; m < f.on_morphisms().size(); ++m)
    os << (m ? ", " : "") << f.dom().name(m) << "->" << f.cod().name(f.morphism(m));
  os << ']';
  return os.str();
}

std::vector<Functor> enumerate_functors(const FinCategory& dom, const FinCategory& cod) {
  std::vector<Functor> out;
  const std::size_t n = dom.morphisms();
  // composition constraints, grouped by the largest index they mention
  struct Triple {
    std::size_t g, f, c;
  };
  std::vector<std::vector<Triple>> due(n);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t f = 0; f < n; ++f) {
      const std::size_t c = dom.try_compose(g, f);
      if (c != kNone) due[std::max({g, f, c})].push_back({g, f, c});
    }
  std::vector<std::size_t> obj(dom.objects(), 0), mor(n, 0);
  auto assign = [&](auto&& self, std::size_t m) -> void {
    if (m == n) {
      out.emplace_back(dom, cod, obj, mor);
      return;
    }
    const std::size_t s = obj[dom.src(m)], t = obj[dom.tgt(m)];
    for (std::size_t cand = 0; cand < cod.morphisms(); ++cand) {
      if (cod.src(cand) != s || cod.tgt(cand) != t) continue;
      if (dom.is_identity(m) && cand != cod.identity(s)) continue;
      mor[m] = cand;
      bool ok = true;
      for (const auto& tr : due[m])
        if (cod.try_compose(mor[tr.g], mor[tr.f]) != mor[tr.c]) {
          ok = false;
          break;
        }
      if (ok) self(self, m + 1);
    }
  };
  if (dom.objects() > 0 && cod.objects() == 0) return out;
  while (true) {
    assign(assign, 0);
    std::size_t p = 0;
    while (p < obj.size() && obj[p] + 1 == cod.objects()) obj[p++] = 0;
    if (p == obj.size()) break;
    ++obj[p];
  }
  return out;
}

}  // namespace cocat::fincat
