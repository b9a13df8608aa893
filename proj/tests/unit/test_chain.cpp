#include <doctest.h>

#include <random>

#include "cocat/abgp/examples.hpp"
#include "cocat/chain/examples.hpp"
#include "cocat/chain/nerve.hpp"
#include "cocat/fincat/cocategories.hpp"

using namespace cocat;
using namespace cocat::chain;
using fincat::FinCategory;

namespace {

const ChainCategory kCat;

ChainComplex point() { return ChainComplex({1}, {}); }
ChainComplex interval() { return ChainComplex({2, 1}, {IntMatrix::from_rows({{-1}, {1}})}); }

// Counts chains of k composable non-identity morphisms by trying every tuple.
std::size_t brute_simplex_count(const FinCategory& c, std::size_t k) {
  if (k == 0) return c.objects();
  std::size_t count = 0;
  std::vector<std::size_t> t(k, 0);
  while (true) {
    bool ok = true;
    for (std::size_t j = 0; j < k && ok; ++j) {
      ok = !c.is_identity(t[j]);
      if (ok && j > 0) ok = c.tgt(t[j - 1]) == c.src(t[j]);
    }
    if (ok) ++count;
    std::size_t p = 0;
    while (p < k && t[p] + 1 == c.morphisms()) t[p++] = 0;
    if (p == k) break;
    ++t[p];
  }
  return count;
}

FinCategory random_dag_category(std::mt19937& rng) {
  const std::size_t n = 1 + rng() % 4;
  std::vector<fincat::Arrow> edges;
  for (std::size_t k = 0; k < rng() % 5; ++k) {
    std::size_t a = rng() % n, b = rng() % n;
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    edges.push_back({a, b});
  }
  return FinCategory::free_on_dag(n, edges);
}

// Total-space matrix built from arbitrary per-degree blocks.
IntMatrix interleave(const std::vector<IntMatrix>& blocks, const ChainComplex& rows, const ChainComplex& cols) {
  const auto rb = total_basis(rows), cb = total_basis(cols);
  IntMatrix m(rb.size(), cb.size());
  for (std::size_t i = 0; i < rb.size(); ++i)
    for (std::size_t j = 0; j < cb.size(); ++j)
      if (rb[i].first == cb[j].first) m(i, j) = blocks[rb[i].first](rb[i].second, cb[j].second);
  return m;
}

}  // namespace

TEST_SUITE("chain.complexes") {
  TEST_CASE("boundary of a boundary must vanish") {
    CHECK_THROWS_AS(ChainComplex({1, 1, 1}, {IntMatrix::from_rows({{1}}), IntMatrix::from_rows({{1}})}), Error);
    CHECK_NOTHROW(ChainComplex({1, 1, 1}, {IntMatrix::from_rows({{0}}), IntMatrix::from_rows({{1}})}));
  }

  TEST_CASE("chain maps must commute") {
    CHECK_THROWS_AS(ChainMap(interval(), interval(), {IntMatrix::identity(2), IntMatrix::from_rows({{2}})}), Error);
    CHECK_NOTHROW(ChainMap(interval(), interval(), {IntMatrix::from_rows({{0, 1}, {1, 0}}), IntMatrix::from_rows({{-1}})}));
  }

  TEST_CASE("trailing zero degrees are dropped") {
    const ChainComplex x({1, 0}, {IntMatrix(1, 0)});
    CHECK(x == point());
  }

  TEST_CASE("pushout over the zero complex is the direct sum") {
    const ChainComplex zero;
    const auto w = pushout_chain(ChainMap(zero, interval(), {}), ChainMap(zero, interval(), {}));
    CHECK(w.apex.ranks() == std::vector<std::size_t>{4, 2});
  }

  TEST_CASE("gluing two intervals end to start") {
    const ChainMap end(point(), interval(), {IntMatrix::from_rows({{0}, {1}})});
    const ChainMap start(point(), interval(), {IntMatrix::from_rows({{1}, {0}})});
    const auto w = pushout_chain(end, start);
    CHECK(w.apex.ranks() == std::vector<std::size_t>{3, 2});
    CHECK(w.apex.boundary(1) == IntMatrix::from_rows({{-1, 0}, {1, -1}, {0, 1}}));
    CHECK(verify_pushout(kCat, w) == Tri::True);
  }

  TEST_CASE("identity pushout returns the complex") {
    const ChainMap id = ChainMap::identity(interval());
    const auto w = pushout_chain(id, id);
    CHECK(w.apex == interval());
  }

  TEST_CASE("random pushouts keep boundaries squaring to zero and are pushouts") {
    std::mt19937 rng(51);
    for (int trial = 0; trial < 30; ++trial) {
      const auto a = random_dag_category(rng);
      const auto b = random_dag_category(rng);
      const ChainComplex x = pipeline(a), y = pipeline(b);
      // span out of a point into vertices
      const ChainMap f(point(), x, {IntMatrix::column(std::vector<BigInt>(x.rank(0)))});
      std::vector<BigInt> ex(x.rank(0)), ey(y.rank(0));
      ex[rng() % x.rank(0)] = 1;
      ey[rng() % y.rank(0)] = 1;
      const ChainMap g1(point(), x, {IntMatrix::column(ex)});
      const ChainMap g2(point(), y, {IntMatrix::column(ey)});
      const auto w = pushout_chain(g1, g2);
      CHECK(w.apex.rank(0) == x.rank(0) + y.rank(0) - 1);
      CHECK(verify_pushout(kCat, w) == Tri::True);
      (void)f;
    }
  }
}

TEST_SUITE("chain.example") {
  TEST_CASE("axioms pass and l, r are not jointly epi") {
    const auto d = chain_example_cocategory();
    const auto rep = check_cocategory(kCat, d);
    for (const auto& c : rep.checks) {
      INFO(c.name);
      CHECK(c.status == Tri::True);
    }
    const auto je = check_copreorder(kCat, d);
    CHECK(je.holds == Tri::False);
    CHECK(je.witness.find("degree 1") != std::string::npos);
  }

  TEST_CASE("co-inverse negates the edge") {
    const auto d = chain_example_cocategory();
    const auto found = find_coinverse(kCat, d);
    REQUIRE(found.s);
    CHECK(found.s->component(1) == IntMatrix::from_rows({{-1}}));
    CHECK(found.s->component(0) == IntMatrix::from_rows({{0, 1}, {1, 0}}));
  }

  TEST_CASE("total space reproduces the abelian group example entrywise") {
    const auto t = total_space(chain_example_cocategory());
    const auto p = abgp::interval_cocategory();
    CHECK(t.l.matrix() == p.l.matrix());
    CHECK(t.r.matrix() == p.r.matrix());
    CHECK(t.i.matrix() == p.i.matrix());
    CHECK(t.q.matrix() == p.q.matrix());
    CHECK(t.double_pushout.injections[0].matrix() == p.double_pushout.injections[0].matrix());
    CHECK(t.double_pushout.injections[1].matrix() == p.double_pushout.injections[1].matrix());
    CHECK(check_cocategory(abgp::AbGpCategory(), t).passed());
  }

  TEST_CASE("total space of a trivial structure is trivial") {
    const auto t = total_space(trivial_cocategory(point()));
    const auto a = abgp::trivial_cocategory(1);
    CHECK(t.l.matrix() == a.l.matrix());
    CHECK(t.q.matrix() == a.q.matrix());
    CHECK(check_cocategory(abgp::AbGpCategory(), t).passed());
  }

  TEST_CASE("total space commutes with transposition") {
    const auto d = chain_example_cocategory();
    for (const ChainMap* f : {&d.l, &d.r, &d.i, &d.q}) {
      std::vector<IntMatrix> transposed;
      for (std::size_t k = 0; k < f->length(); ++k) transposed.push_back(f->component(k).transpose());
      CHECK(interleave(transposed, f->dom(), f->cod()) == total_map(*f).matrix().transpose());
    }
  }
}

TEST_SUITE("chain.nerve") {
  TEST_CASE("terminal and arrow categories") {
    CHECK(pipeline(FinCategory::terminal()) == point());
    const ChainComplex a = pipeline(FinCategory::arrow());
    CHECK(a.ranks() == std::vector<std::size_t>{2, 1});
    CHECK(a.boundary(1) == IntMatrix::from_rows({{-1}, {1}}));
  }

  TEST_CASE("simplex counts match brute force and boundaries square to zero") {
    std::mt19937 rng(52);
    for (int trial = 0; trial < 40; ++trial) {
      const auto c = random_dag_category(rng);
      const auto n = nerve(c, 3);
      for (std::size_t k = 0; k <= 3; ++k) CHECK(n.simplices[k].size() == brute_simplex_count(c, k));
      const ChainComplex x = free_normalized_chains(n);
      for (std::size_t d = 2; d < x.length(); ++d) CHECK((x.boundary(d - 1) * x.boundary(d)).is_zero());
    }
  }

  TEST_CASE("glued interval: one 2-simplex, composite = sum of the generators") {
    const auto d = fincat::interval_cocategory();
    const FinCategory& glued = d.double_pushout.apex;
    const auto n = nerve(glued);
    CHECK(n.simplices[2].size() == 1);
    const auto t = truncate_ge2(free_normalized_chains(n));
    CHECK(t.complex.rank(1) == 2);
    const std::size_t composite = d.q.morphism(2);
    CHECK(degree_one_class(glued, composite) == std::vector<BigInt>{1, 1});
  }

  TEST_CASE("pipeline is functorial on random functors") {
    std::mt19937 rng(53);
    for (int trial = 0; trial < 20; ++trial) {
      const auto a = random_dag_category(rng), b = random_dag_category(rng), c = random_dag_category(rng);
      const auto fs = fincat::enumerate_functors(a, b);
      const auto gs = fincat::enumerate_functors(b, c);
      if (fs.empty() || gs.empty()) continue;
      const auto& f = fs[rng() % fs.size()];
      const auto& g = gs[rng() % gs.size()];
      CHECK(pipeline(fincat::compose(g, f)) == compose(pipeline(g), pipeline(f)));
    }
  }

  TEST_CASE("interval co-category maps to the chain example") {
    const auto p = pipeline(fincat::interval_cocategory());
    CHECK(check_cocategory(kCat, p).passed());
    const auto iso = find_signed_permutation_iso(p, chain_example_cocategory());
    REQUIRE(iso);
    CHECK(check_cocat_morphism(kCat, p, chain_example_cocategory(), iso->f0, iso->f1).passed());
  }
}
