#include "cocat/finset/cocategories.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>
#include <set>
#include <thread>
#include <tuple>

#include "cocat/core/error.hpp"

namespace cocat::finset {

namespace {

const FinSetCategory kCat;

FinMap copair_or_throw(const Witness& w, std::initializer_list<FinMap> maps, const char* what) {
  auto h = factor_through(kCat, w, maps);
  if (!h) throw std::logic_error(std::string("copairing unexpectedly undefined: ") + what);
  return *h;
}

std::string first_difference(const FinMap& a, const FinMap& b) {
  for (std::size_t x = 0; x < a.dom().size; ++x)
    if (a(x) != b(x))
      return "at element " + std::to_string(x) + ": " + std::to_string(a(x)) + " vs " + std::to_string(b(x));
  return {};
}

}  // namespace

CoCategory cokernel_pair_cocategory(const FinMap& m) {
  if (!m.injective()) throw Error(ErrorKind::NotMono, "cokernel pair needs an injective map, got " + to_string(m));
  const FinSetObj a = m.cod();
  const auto pair = pushout(m, m);
  const FinMap& l = pair.injections[0];
  const FinMap& r = pair.injections[1];
  const FinMap i = copair_or_throw(pair, {FinMap::identity(a), FinMap::identity(a)}, "[1,1]");
  return make_cocategory(kCat, a, pair.apex, l, r, i, [&](const Witness& dbl) {
    // [nu1, nu3]: the first copy of A to the first copy, the second to the last.
    return copair_or_throw(pair, {compose(dbl.injections[0], l), compose(dbl.injections[1], r)},
                           "[nu1,nu3]");
  });
}

CoCategory trivial_cocategory() { return cokernel_pair_cocategory(FinMap::identity(FinSetObj{1})); }

CoCategory discrete_cocategory(FinSetObj x) { return cokernel_pair_cocategory(FinMap::identity(x)); }

// ---------------------------------------------------------------------------

bool ProofReport::all_hold() const { return first_failure() == nullptr; }

const ProofStep* ProofReport::first_failure() const {
  for (const auto& s : steps)
    if (!s.holds) return &s;
  return nullptr;
}

ProofReport verify_proposition(const CoCategory& data) {
  ProofReport rep;
  const auto& dbl = data.double_pushout;
  const FinSetObj q1 = data.q1;
  auto step = [&](std::string name, bool holds, std::string witness = {}) {
    rep.steps.push_back({std::move(name), holds, holds ? std::string{} : std::move(witness)});
    return holds;
  };

  // m_j = q^*(nu_j)
  for (std::size_t j = 0; j < 2; ++j) rep.p.push_back(pullback(data.q, dbl.injections[j]));
  const Subobject covered = union_of(image(rep.p[0].p1), image(rep.p[1].p1));
  std::string uncovered;
  for (std::size_t x = 0; x < q1.size && uncovered.empty(); ++x)
    if (!std::binary_search(covered.elements.begin(), covered.elements.end(), x))
      uncovered = "element " + std::to_string(x) + " of Q1 lies in neither m_1 nor m_2";
  rep.coverage = step("m_1 u m_2 covers Q1", uncovered.empty(), uncovered);

  const FinMap li = compose(data.l, data.i);
  const FinMap ri = compose(data.r, data.i);
  const FinMap liq1 = compose(li, rep.p[0].p2);
  const FinMap riq2 = compose(ri, rep.p[1].p2);
  rep.retraction_1 = step("l.i.q_1 = m_1", liq1 == rep.p[0].p1, first_difference(liq1, rep.p[0].p1));
  rep.retraction_2 = step("r.i.q_2 = m_2", riq2 == rep.p[1].p1, first_difference(riq2, rep.p[1].p1));

  const auto lr = kCat.joint_epi(data.l, data.r);
  rep.lr_jointly_covering = step("l, r jointly covering", lr.holds == Tri::True, lr.witness);

  rep.lr_pullback = pullback(data.l, data.r);
  const auto& pb = rep.lr_pullback;
  rep.projections_equal = step("pullback of (l, r) has pi_1 = pi_2", pb.p1 == pb.p2, first_difference(pb.p1, pb.p2));
  const bool glue = step("r.pi_1 = l.pi_2", compose(data.r, pb.p1) == compose(data.l, pb.p2),
                         first_difference(compose(data.r, pb.p1), compose(data.l, pb.p2)));

  const auto po = pushout(pb.p1, pb.p2);
  const auto comparison = kCat.copair(po, std::vector<FinMap>{data.l, data.r});
  rep.square_is_pushout = step("pullback square of (l, r) is also a pushout",
                               comparison.has_value() && comparison->bijective(),
                               comparison ? "comparison map " + to_string(*comparison) + " is not bijective"
                                          : std::string("l, r do not form a cocone"));

  if (rep.square_is_pushout && glue) {
    const auto swap = kCat.copair(po, std::vector<FinMap>{data.r, data.l});
    if (swap) rep.s = compose(*swap, inverse(*comparison));
  }
  if (rep.s) {
    const auto check = check_coinverse(kCat, data, *rep.s);
    const auto* bad = check.first_failure();
    rep.s_is_coinverse = step("s built from the pushout is a co-inverse", check.passed(), bad ? bad->name : "");
  } else {
    rep.s_is_coinverse = step("s built from the pushout is a co-inverse", false, "s could not be constructed");
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

bool canonical_less(const CoCategory& a, const CoCategory& b) {
  return std::tie(a.q0, a.q1, a.l, a.r, a.i, a.q) < std::tie(b.q0, b.q1, b.l, b.r, b.i, b.q);
}

/// Enumerates co-categories with |Q0| = n0, |Q1| = n1 whose l has index
/// congruent to `worker` modulo `workers`.
bool enumerate_size(std::size_t n0, std::size_t n1, std::size_t worker, std::size_t workers,
                    const std::function<bool(const EnumeratedCoCategory&)>& visit,
                    EnumerationStats& stats) {
  const FinSetObj o0{n0}, o1{n1};
  const FinMap id0 = FinMap::identity(o0);
  std::size_t l_index = 0;
  bool keep_going = true;
  for_each_map(o0, o1, [&](const FinMap& l) {
    if (l_index++ % workers != worker) return true;
    for_each_map(o0, o1, [&](const FinMap& r) {
      for_each_map(o1, o0, [&](const FinMap& i) {
        if (compose(i, l) != id0 || compose(i, r) != id0) return true;
        ++stats.lri_candidates;
        const auto dbl = pushout(r, l);
        const auto tpl = extend_pushout(kCat, dbl);
        const FinSetObj apex = dbl.apex;
        const FinMap id1 = FinMap::identity(o1);
        // Co-unit maps: a co-composition must be a section of both.
        const auto li1 = kCat.copair(dbl, std::vector<FinMap>{compose(l, i), id1});
        const auto ri1 = kCat.copair(dbl, std::vector<FinMap>{id1, compose(r, i)});
        if (!li1 || !ri1) return true;

        std::vector<std::vector<std::size_t>> allowed(n1);
        for (std::size_t x = 0; x < n1; ++x)
          for (std::size_t y = 0; y < apex.size; ++y)
            if ((*li1)(y) == x && (*ri1)(y) == x) allowed[x].push_back(y);
        // q.l = nu1.l and q.r = nu2.r pin some entries.
        for (std::size_t a = 0; a < n0; ++a) {
          for (auto [x, y] : {std::pair{l(a), dbl.injections[0](l(a))}, std::pair{r(a), dbl.injections[1](r(a))}}) {
            auto& opts = allowed[x];
            opts.erase(std::remove_if(opts.begin(), opts.end(), [y = y](std::size_t v) { return v != y; }),
                       opts.end());
          }
        }
        if (std::any_of(allowed.begin(), allowed.end(), [](const auto& v) { return v.empty(); })) return true;

        std::vector<CoCategory> found;
        std::vector<std::size_t> digit(n1, 0);
        while (true) {
          std::vector<std::size_t> table(n1);
          for (std::size_t x = 0; x < n1; ++x) table[x] = allowed[x][digit[x]];
          ++stats.q_candidates;
          CoCategory data{o0, o1, l, r, i, FinMap(o1, apex, std::move(table)), dbl, tpl};
          if (check_cocategory(kCat, data).passed()) found.push_back(std::move(data));
          std::size_t k = n1;
          bool done = true;
          while (k > 0) {
            --k;
            if (++digit[k] < allowed[k].size()) {
              done = false;
              break;
            }
            digit[k] = 0;
          }
          if (done) break;
        }
        for (auto& data : found) {
          ++stats.structures;
          if (!visit(EnumeratedCoCategory{std::move(data), found.size()})) {
            keep_going = false;
            return false;
          }
        }
        return true;
      });
      return keep_going;
    });
    return keep_going;
  });
  return keep_going;
}

}  // namespace

EnumerationStats for_each_cocategory(
    const EnumerationBounds& bounds, const std::function<bool(const EnumeratedCoCategory&)>& visit,
    const std::function<void(std::size_t, std::size_t, const EnumerationStats&)>& progress) {
  EnumerationStats stats;
  for (std::size_t n0 = bounds.include_empty ? 0 : 1; n0 <= bounds.max_q0; ++n0) {
    for (std::size_t n1 = n0 == 0 ? 0 : 1; n1 <= (n0 == 0 ? 0 : bounds.max_q1); ++n1) {
      if (!enumerate_size(n0, n1, 0, 1, visit, stats)) return stats;
      if (progress) progress(n0, n1, stats);
    }
  }
  return stats;
}

std::vector<EnumeratedCoCategory> enumerate_cocategories(const EnumerationBounds& bounds, unsigned workers,
                                                         EnumerationStats* stats) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::vector<EnumeratedCoCategory>> partial(workers);
  std::vector<EnumerationStats> partial_stats(workers);
  auto run = [&](std::size_t w) {
    for (std::size_t n0 = bounds.include_empty ? 0 : 1; n0 <= bounds.max_q0; ++n0)
      for (std::size_t n1 = n0 == 0 ? 0 : 1; n1 <= (n0 == 0 ? 0 : bounds.max_q1); ++n1)
        enumerate_size(n0, n1, w, workers, [&](const EnumeratedCoCategory& e) {
          partial[w].push_back(e);
          return true;
        }, partial_stats[w]);
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }
  std::vector<EnumeratedCoCategory> out;
  EnumerationStats total;
  for (std::size_t w = 0; w < workers; ++w) {
    std::move(partial[w].begin(), partial[w].end(), std::back_inserter(out));
    total.lri_candidates += partial_stats[w].lri_candidates;
    total.q_candidates += partial_stats[w].q_candidates;
    total.structures += partial_stats[w].structures;
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return canonical_less(a.data, b.data); });
  if (stats) *stats = total;
  return out;
}

namespace {

// f1 ranges over bijections of Q1; f1 . l = l' . f0 and f1 . r = r' . f0
// prune most candidates before the full morphism check.
std::optional<FinMap> iso_with_f0(const CoCategory& a, const CoCategory& b, const FinMap& f0,
                                  const std::vector<FinMap>& perms1) {
  for (const auto& f1 : perms1) {
    if (compose(f1, a.l) != compose(b.l, f0) || compose(f1, a.r) != compose(b.r, f0)) continue;
    if (check_cocat_morphism(kCat, a, b, f0, f1).passed()) return f1;
  }
  return std::nullopt;
}

bool same_sizes(const CoCategory& a, const CoCategory& b) {
  return a.q0 == b.q0 && a.q1 == b.q1 && a.double_pushout.apex == b.double_pushout.apex;
}

std::size_t factorial_capped(std::size_t n, std::size_t start, std::size_t cap) {
  std::size_t work = start;
  for (std::size_t k = 2; k <= n; ++k) {
    if (work > cap / k) throw Error(ErrorKind::SizeLimit, "isomorphism search space too large");
    work *= k;
  }
  return work;
}

}  // namespace

std::optional<std::pair<FinMap, FinMap>> iso_cocategories(const CoCategory& a, const CoCategory& b,
                                                          std::size_t cap) {
  if (!same_sizes(a, b)) return std::nullopt;
  factorial_capped(a.q1.size, factorial_capped(a.q0.size, 1, cap), cap);
  const auto perms1 = permutations(a.q1);
  for (const auto& f0 : permutations(a.q0))
    if (auto f1 = iso_with_f0(a, b, f0, perms1)) return std::pair{f0, *f1};
  return std::nullopt;
}

std::optional<FinMap> iso_over_q0(const CoCategory& a, const CoCategory& b, std::size_t cap) {
  if (!same_sizes(a, b)) return std::nullopt;
  factorial_capped(a.q1.size, 1, cap);
  return iso_with_f0(a, b, FinMap::identity(a.q0), permutations(a.q1));
}

std::size_t count_iso_classes(const std::vector<EnumeratedCoCategory>& items) {
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::vector<const CoCategory*>> reps;
  std::size_t classes = 0;
  for (const auto& item : items) {
    const auto& d = item.data;
    auto& bucket = reps[{d.q0.size, d.q1.size, d.double_pushout.apex.size}];
    const bool known = std::any_of(bucket.begin(), bucket.end(),
                                   [&](const CoCategory* rep) { return iso_cocategories(*rep, d).has_value(); });
    if (!known) {
      bucket.push_back(&d);
      ++classes;
    }
  }
  return classes;
}

// ---------------------------------------------------------------------------
// Subobject classifier

CoCategory universal_cocategory() {
  return cokernel_pair_cocategory(FinMap(FinSetObj{1}, kOmega, {1}));
}

FinMap classifying_map(const FinMap& m) {
  if (!m.injective()) throw Error(ErrorKind::NotMono, "classifying map of a non-injective map " + to_string(m));
  std::vector<std::size_t> t(m.cod().size, 0);
  for (auto y : m.table()) t[y] = 1;
  return FinMap(m.cod(), kOmega, std::move(t));
}

FinMap characteristic_of(const CoCategory& data) { return classifying_map(equalizer(data.l, data.r)); }

CoCategory pullback_cocategory(const FinMap& chi) {
  if (chi.cod() != kOmega) throw Error(ErrorKind::TypeMismatch, "characteristic maps land in Omega");
  const CoCategory u = universal_cocategory();
  const FinSetObj a = chi.dom();
  const FinMap id_a = FinMap::identity(a);

  const Pullback p1 = pullback(chi, u.i);
  auto pair1 = [&](const FinMap& to_u) { return *pullback_pair(p1, id_a, compose(to_u, chi)); };
  const FinMap l = pair1(u.l);
  const FinMap r = pair1(u.r);
  const FinMap& i = p1.p1;

  auto pull_witness = [&](const Witness& uw) {
    std::vector<FinMap> counits(uw.injections.size(), u.i);
    const FinMap over = *kCat.copair(uw, counits);
    const Pullback pw = pullback(chi, over);
    Witness w{pw.object, {}, r, l};
    for (const auto& nu : uw.injections) w.injections.push_back(*pullback_pair(pw, p1.p1, compose(nu, p1.p2)));
    return std::pair{w, pw};
  };
  auto [dbl, pd] = pull_witness(u.double_pushout);
  auto [tpl, pt] = pull_witness(u.triple_pushout);
  FinMap q = *pullback_pair(pd, p1.p1, compose(u.q, p1.p2));
  return CoCategory{a, p1.object, l, r, i, std::move(q), std::move(dbl), std::move(tpl)};
}

ColaxReport verify_colax_correspondence(const CoCategory& q, const CoCategory& r, std::size_t cap) {
  const std::size_t n_f0 = map_count(q.q0, r.q0);
  const std::size_t n_f1 = map_count(q.q1, r.q1);
  if (n_f1 != 0 && n_f0 > cap / n_f1) throw Error(ErrorKind::SizeLimit, "colax correspondence search too large");
  const FinMap chi_q = characteristic_of(q);
  const FinMap chi_r = characteristic_of(r);

  std::vector<FinMap> from_morphisms;
  for_each_map(q.q0, r.q0, [&](const FinMap& f0) {
    for_each_map(q.q1, r.q1, [&](const FinMap& f1) {
      if (check_cocat_morphism(kCat, q, r, f0, f1).passed()) from_morphisms.push_back(f0);
      return true;
    });
    return true;
  });
  std::vector<FinMap> colax;
  for_each_map(q.q0, r.q0, [&](const FinMap& f0) {
    bool ok = true;
    for (std::size_t a = 0; a < q.q0.size; ++a) ok = ok && chi_q(a) <= chi_r(f0(a));
    if (ok) colax.push_back(f0);
    return true;
  });

  ColaxReport rep{from_morphisms.size(), colax.size(), false};
  std::set<FinMap> image_set(from_morphisms.begin(), from_morphisms.end());
  const std::set<FinMap> colax_set(colax.begin(), colax.end());
  rep.bijective = image_set.size() == from_morphisms.size() && image_set == colax_set;
  return rep;
}

}  // namespace cocat::finset
