#include "cocat/chain/nerve.hpp"

#include <algorithm>
#include <numeric>

#include "cocat/abgp/group.hpp"
#include "cocat/core/error.hpp"

namespace cocat::chain {

using fincat::FinCategory;

NormalizedNerve nerve(const FinCategory& c, std::size_t max_dim) {
  NormalizedNerve n{c, {}};
  n.simplices.emplace_back();
  for (std::size_t o = 0; o < c.objects(); ++o) n.simplices[0].push_back({o});
  if (max_dim == 0) return n;
  n.simplices.emplace_back();
  for (std::size_t m = 0; m < c.morphisms(); ++m)
    if (!c.is_identity(m)) n.simplices[1].push_back({m});
  for (std::size_t k = 2; k <= max_dim; ++k) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& s : n.simplices[k - 1])
      for (const auto& e : n.simplices[1])
        if (c.src(e[0]) == c.tgt(s.back())) {
          auto t = s;
          t.push_back(e[0]);
          next.push_back(std::move(t));
        }
    n.simplices.push_back(std::move(next));
  }
  return n;
}

std::optional<std::size_t> face(const NormalizedNerve& n, std::size_t k, std::size_t idx, std::size_t j) {
  const FinCategory& c = n.category;
  const auto& s = n.simplices.at(k).at(idx);
  if (k == 0 || j > k) throw Error(ErrorKind::InvalidArgument, "no such face");
  if (k == 1) return j == 0 ? c.tgt(s[0]) : c.src(s[0]);
  std::vector<std::size_t> f;
  if (j == 0) {
    f.assign(s.begin() + 1, s.end());
  } else if (j == k) {
    f.assign(s.begin(), s.end() - 1);
  } else {
    const std::size_t comp = c.compose(s[j], s[j - 1]);
    if (c.is_identity(comp)) return std::nullopt;
    f.assign(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(j - 1));
    f.push_back(comp);
    f.insert(f.end(), s.begin() + static_cast<std::ptrdiff_t>(j + 1), s.end());
  }
  const auto& lower = n.simplices[k - 1];
  const auto it = std::lower_bound(lower.begin(), lower.end(), f);
  if (it == lower.end() || *it != f) throw std::logic_error("face of a nerve simplex is missing");
  return static_cast<std::size_t>(it - lower.begin());
}

ChainComplex free_normalized_chains(const NormalizedNerve& n) {
  std::vector<std::size_t> ranks;
  for (const auto& level : n.simplices) ranks.push_back(level.size());
  std::vector<IntMatrix> diffs;
  for (std::size_t k = 1; k < ranks.size(); ++k) {
    IntMatrix d(ranks[k - 1], ranks[k]);
    for (std::size_t idx = 0; idx < ranks[k]; ++idx)
      for (std::size_t j = 0; j <= k; ++j)
        if (auto f = face(n, k, idx, j)) d(*f, idx) += (j % 2 == 0) ? 1 : -1;
    diffs.push_back(std::move(d));
  }
  return ChainComplex(std::move(ranks), std::move(diffs));
}

Truncation truncate_ge2(const ChainComplex& x) {
  const std::size_t r0 = x.rank(0), r1 = x.rank(1);
  const IntMatrix rel = x.length() > 2 ? x.boundary(2) : IntMatrix(r1, 0);
  const abgp::Presentation p = abgp::free_presentation(abgp::FgAbGroup(r1, rel));
  const std::size_t n1 = p.group.generators();
  ChainComplex out({r0, n1}, {x.boundary(1) * p.from});
  return {std::move(out), p.to, p.from};
}

namespace {

Truncation pipeline_parts(const FinCategory& c) { return truncate_ge2(free_normalized_chains(nerve(c))); }

std::size_t edge_index(const FinCategory& c, std::size_t m) {
  // non-identity morphisms in increasing order are the 1-simplices
  std::size_t idx = 0;
  for (std::size_t k = 0; k < m; ++k)
    if (!c.is_identity(k)) ++idx;
  return idx;
}

std::size_t edge_count(const FinCategory& c) { return edge_index(c, c.morphisms()); }

}  // namespace

ChainComplex pipeline(const FinCategory& c) { return pipeline_parts(c).complex; }

ChainMap pipeline(const fincat::Functor& f) {
  const FinCategory& a = f.dom();
  const FinCategory& b = f.cod();
  const Truncation ta = pipeline_parts(a);
  const Truncation tb = pipeline_parts(b);
  IntMatrix m0(b.objects(), a.objects());
  for (std::size_t o = 0; o < a.objects(); ++o) m0(f.object(o), o) = 1;
  IntMatrix m1(edge_count(b), edge_count(a));
  for (std::size_t m = 0; m < a.morphisms(); ++m) {
    if (a.is_identity(m)) continue;
    const std::size_t img = f.morphism(m);
    if (!b.is_identity(img)) m1(edge_index(b, img), edge_index(a, m)) = 1;
  }
  return ChainMap(ta.complex, tb.complex, {m0, tb.project * m1 * ta.section});
}

CoCategory pipeline(const fincat::CoCategory& d) {
  auto witness = [](const fincat::Witness& w) {
    Witness out{pipeline(w.apex), {}, pipeline(w.left_leg), pipeline(w.right_leg)};
    for (const auto& inj : w.injections) out.injections.push_back(pipeline(inj));
    return out;
  };
  return CoCategory{pipeline(d.q0), pipeline(d.q1), pipeline(d.l), pipeline(d.r), pipeline(d.i),
                    pipeline(d.q),  witness(d.double_pushout), witness(d.triple_pushout)};
}

std::vector<BigInt> degree_one_class(const FinCategory& c, std::size_t m) {
  const Truncation t = pipeline_parts(c);
  if (c.is_identity(m)) return std::vector<BigInt>(t.complex.rank(1));
  return t.project.col(edge_index(c, m));
}

namespace {

std::vector<IntMatrix> signed_permutations(std::size_t n) {
  std::vector<IntMatrix> out;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      IntMatrix m(n, n);
      for (std::size_t k = 0; k < n; ++k) m(perm[k], k) = (mask >> k) & 1 ? -1 : 1;
      out.push_back(std::move(m));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// Every chain map x -> y whose components are signed permutations.
std::vector<ChainMap> signed_permutation_maps(const ChainComplex& x, const ChainComplex& y) {
  std::vector<ChainMap> out;
  if (x.ranks() != y.ranks()) return out;
  std::vector<std::vector<IntMatrix>> per_degree;
  std::size_t total = 1;
  for (std::size_t d = 0; d < x.length(); ++d) {
    if (x.rank(d) > 6) throw Error(ErrorKind::SizeLimit, "iso search limited to rank 6 per degree");
    per_degree.push_back(signed_permutations(x.rank(d)));
    total *= per_degree.back().size();
    if (total > 2'000'000) throw Error(ErrorKind::SizeLimit, "iso search space too large");
  }
  std::vector<std::size_t> pick(per_degree.size(), 0);
  while (true) {
    std::vector<IntMatrix> comps;
    for (std::size_t d = 0; d < pick.size(); ++d) comps.push_back(per_degree[d][pick[d]]);
    try {
      out.emplace_back(x, y, std::move(comps));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::InvalidArgument) throw;
    }
    std::size_t p = 0;
    while (p < pick.size() && pick[p] + 1 == per_degree[p].size()) pick[p++] = 0;
    if (p == pick.size()) break;
    ++pick[p];
  }
  return out;
}

}  // namespace

std::optional<CoCategoryIso> find_signed_permutation_iso(const CoCategory& a, const CoCategory& b) {
  const ChainCategory cat;
  const auto f0s = signed_permutation_maps(a.q0, b.q0);
  const auto f1s = signed_permutation_maps(a.q1, b.q1);
  for (const auto& f0 : f0s)
    for (const auto& f1 : f1s)
      if (check_cocat_morphism(cat, a, b, f0, f1).passed()) return CoCategoryIso{f0, f1};
  return std::nullopt;
}

}  // namespace cocat::chain
