#include "cocat/fincat/pushout.hpp"

#include <algorithm>
#include <map>

#include "cocat/core/error.hpp"
#include "cocat/finset/union_find.hpp"

namespace cocat::fincat {

namespace {

struct Letter {
  std::size_t side;  // 0 for A, 1 for B
  std::size_t mor;
  auto operator<=>(const Letter&) const = default;
};
using Word = std::vector<Letter>;

bool word_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

Witness pushout_cats(const Functor& f, const Functor& g, std::size_t word_cap) {
  const FinCategory& s = f.dom();
  if (!(g.dom() == s)) throw Error(ErrorKind::TypeMismatch, "pushout legs need a common domain");
  for (std::size_t m = 0; m < s.morphisms(); ++m)
    if (!s.is_identity(m))
      throw Error(ErrorKind::UnsupportedCapability, "Cat pushouts are only computed over discrete categories");
  const FinCategory* side[2] = {&f.cod(), &g.cod()};
  const std::size_t na = side[0]->objects(), nb = side[1]->objects();

  finset::UnionFind uf(na + nb);
  for (std::size_t o = 0; o < s.objects(); ++o) uf.unite(f.object(o), na + g.object(o));
  std::size_t objects = 0;
  const auto cls = uf.canonical_classes(objects);
  auto glued = [&](std::size_t sd, std::size_t obj) { return cls[sd * na + obj]; };
  auto l_src = [&](const Letter& x) { return glued(x.side, side[x.side]->src(x.mor)); };
  auto l_tgt = [&](const Letter& x) { return glued(x.side, side[x.side]->tgt(x.mor)); };

  // letters in path order: w[0] is applied first
  auto reduce = [&](const Word& w) {
    Word out;
    for (const Letter& x : w) {
      if (!out.empty() && out.back().side == x.side) {
        const FinCategory& c = *side[x.side];
        const std::size_t comp = c.try_compose(x.mor, out.back().mor);
        if (comp != kNone) {
          out.pop_back();
          if (!c.is_identity(comp)) out.push_back({x.side, comp});
          continue;
        }
      }
      out.push_back(x);
    }
    return out;
  };

  std::vector<Word> words;
  std::map<Word, std::size_t> seen;
  auto add = [&](const Word& w) {
    if (w.empty() || seen.count(w)) return;
    if (w.size() > word_cap)
      throw Error(ErrorKind::ClosureExceeded,
                  "pushout word closure exceeds length " + std::to_string(word_cap));
    seen.emplace(w, words.size());
    words.push_back(w);
  };
  for (std::size_t sd = 0; sd < 2; ++sd)
    for (std::size_t m = 0; m < side[sd]->morphisms(); ++m)
      if (!side[sd]->is_identity(m)) add(Word{{sd, m}});
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      const Word a = words[i], b = words[j];
      for (const auto* pr : {&a, &b}) {
        const Word& first = *pr;
        const Word& second = pr == &a ? b : a;
        if (l_tgt(first.back()) != l_src(second.front())) continue;
        Word cat = first;
        cat.insert(cat.end(), second.begin(), second.end());
        add(reduce(cat));
      }
    }
  std::sort(words.begin(), words.end(), word_less);

  CategoryTable t;
  t.objects = objects;
  for (std::size_t o = 0; o < objects; ++o) {
    t.arrows.push_back({o, o});
    t.identities.push_back(o);
    t.names.push_back("id" + std::to_string(o));
  }
  seen.clear();
  for (const auto& w : words) {
    seen.emplace(w, t.arrows.size());
    t.arrows.push_back({l_src(w.front()), l_tgt(w.back())});
    std::string name;
    for (std::size_t k = w.size(); k-- > 0;) {
      if (!name.empty()) name += ".";
      name += side[w[k].side]->name(w[k].mor) + (w[k].side == 1 ? "'" : "");
    }
    t.names.push_back(name);
  }
  const std::size_t n = t.arrows.size();
  t.table.assign(n * n, kNone);
  for (std::size_t gi = 0; gi < n; ++gi)
    for (std::size_t fi = 0; fi < n; ++fi) {
      if (t.arrows[fi].tgt != t.arrows[gi].src) continue;
      std::size_t c;
      if (gi < objects) c = fi;
      else if (fi < objects) c = gi;
      else {
        Word w = words[fi - objects];
        const Word& tail = words[gi - objects];
        w.insert(w.end(), tail.begin(), tail.end());
        w = reduce(w);
        c = w.empty() ? t.identities[t.arrows[fi].src] : seen.at(w);
      }
      t.table[gi * n + fi] = c;
    }
  FinCategory apex(std::move(t));

  std::vector<Functor> inj;
  for (std::size_t sd = 0; sd < 2; ++sd) {
    const FinCategory& c = *side[sd];
    std::vector<std::size_t> obj, mor;
    for (std::size_t o = 0; o < c.objects(); ++o) obj.push_back(glued(sd, o));
    for (std::size_t m = 0; m < c.morphisms(); ++m)
      mor.push_back(c.is_identity(m) ? apex.identity(glued(sd, c.src(m))) : seen.at(Word{{sd, m}}));
    inj.emplace_back(c, apex, std::move(obj), std::move(mor));
  }
  return Witness{apex, std::move(inj), f, g};
}

std::optional<Functor> copair(const Witness& w, std::span<const Functor> maps) {
  if (maps.size() != w.injections.size() || maps.empty()) return std::nullopt;
  const FinCategory& apex = w.apex;
  const FinCategory target = maps.front().cod();
  for (std::size_t k = 0; k < maps.size(); ++k)
    if (!(maps[k].cod() == target) || !(maps[k].dom() == w.injections[k].dom())) return std::nullopt;

  std::vector<std::size_t> obj(apex.objects(), kNone), mor(apex.morphisms(), kNone);
  auto put = [](std::vector<std::size_t>& v, std::size_t at, std::size_t val) {
    if (v[at] == kNone) v[at] = val;
    return v[at] == val;
  };
  for (std::size_t k = 0; k < maps.size(); ++k) {
    const Functor& inj = w.injections[k];
    for (std::size_t o = 0; o < inj.dom().objects(); ++o)
      if (!put(obj, inj.object(o), maps[k].object(o))) return std::nullopt;
    for (std::size_t m = 0; m < inj.dom().morphisms(); ++m)
      if (!put(mor, inj.morphism(m), maps[k].morphism(m))) return std::nullopt;
  }
  // close under composition until every morphism is assigned
  for (bool grew = true; grew;) {
    grew = false;
    for (std::size_t gi = 0; gi < apex.morphisms(); ++gi) {
      if (mor[gi] == kNone) continue;
      for (std::size_t fi = 0; fi < apex.morphisms(); ++fi) {
        if (mor[fi] == kNone) continue;
        const std::size_t c = apex.try_compose(gi, fi);
        if (c == kNone) continue;
        const std::size_t img = target.try_compose(mor[gi], mor[fi]);
        if (img == kNone) return std::nullopt;
        if (mor[c] == kNone) grew = true;
        if (!put(mor, c, img)) return std::nullopt;
      }
    }
  }
  for (std::size_t o = 0; o < apex.objects(); ++o) {
    if (obj[o] == kNone) return std::nullopt;
    put(mor, apex.identity(o), target.identity(obj[o]));
  }
  if (std::find(mor.begin(), mor.end(), kNone) != mor.end()) return std::nullopt;
  if (functor_error(apex, target, obj, mor)) return std::nullopt;
  return Functor(apex, target, std::move(obj), std::move(mor));
}

std::optional<FunctorPair> joint_epi_counterexample(const Functor& l, const Functor& r,
                                                    std::size_t max_test_size) {
  if (!(l.cod() == r.cod())) throw Error(ErrorKind::TypeMismatch, "l and r need a common codomain");
  const FinCategory& q1 = l.cod();

  // candidate test categories: one multiplicity per pair i < j of objects
  std::vector<FinCategory> tests;
  for (std::size_t n = 1; n <= 3 && n <= max_test_size; ++n) {
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    std::vector<std::size_t> mult(slots.size(), 0);
    while (true) {
      std::vector<Arrow> edges;
      for (std::size_t k = 0; k < slots.size(); ++k)
        for (std::size_t e = 0; e < mult[k]; ++e) edges.push_back({slots[k].first, slots[k].second});
      if (n + edges.size() <= max_test_size) {
        FinCategory c = FinCategory::free_on_dag(n, edges);
        if (c.morphisms() <= max_test_size) tests.push_back(std::move(c));
      }
      std::size_t p = 0;
      while (p < mult.size() && n + mult[p] + 1 > max_test_size) mult[p++] = 0;
      if (p == mult.size()) break;
      ++mult[p];
    }
  }
  std::stable_sort(tests.begin(), tests.end(),
                   [](const FinCategory& a, const FinCategory& b) { return a.morphisms() < b.morphisms(); });

  for (const auto& test : tests) {
    const auto functors = enumerate_functors(q1, test);
    for (std::size_t a = 0; a < functors.size(); ++a)
      for (std::size_t b = a + 1; b < functors.size(); ++b)
        if (compose(functors[a], l) == compose(functors[b], l) && compose(functors[a], r) == compose(functors[b], r))
          return FunctorPair{test, functors[a], functors[b]};
  }
  return std::nullopt;
}

JointEpiResult CatCategory::joint_epi(const Functor& l, const Functor& r) const {
  auto found = joint_epi_counterexample(l, r, search_);
  if (!found)
    return {Tri::Unknown, "no distinguishing functor pair into test categories with at most " +
                              std::to_string(search_) + " morphisms"};
  return {Tri::False, "F = " + to_string(found->first) + " and G = " + to_string(found->second) +
                          " into " + to_string(found->test) + " agree on l and r"};
}

}  // namespace cocat::fincat
