#include <doctest.h>

#include <random>

#include "cocat/core/cocategory.hpp"
#include "cocat/finset/cocategories.hpp"
#include "cocat/finset/finset.hpp"
#include "finset_oracle.hpp"

using namespace cocat;
using namespace cocat::finset;

namespace {

FinMap map(std::size_t dom, std::size_t cod, std::vector<std::size_t> t) {
  return FinMap(FinSetObj{dom}, FinSetObj{cod}, std::move(t));
}

const FinSetCategory kCat;

}  // namespace

TEST_SUITE("finset.basics") {
  TEST_CASE("FinMap rejects out-of-range tables") {
    CHECK_THROWS_AS(map(2, 2, {0, 2}), Error);
    CHECK_THROWS_AS(map(2, 2, {0}), Error);
  }

  TEST_CASE("pushout examples") {
    // glue one point of each two-point set
    auto w = pushout(map(1, 2, {0}), map(1, 2, {0}));
    CHECK(w.apex.size == 3);
    CHECK(w.injections[0].table() == std::vector<std::size_t>{0, 1});
    CHECK(w.injections[1].table() == std::vector<std::size_t>{0, 2});

    auto coproduct = pushout(map(0, 3, {}), map(0, 2, {}));
    CHECK(coproduct.apex.size == 5);

    auto absorb = pushout(FinMap::identity(FinSetObj{4}), FinMap::identity(FinSetObj{4}));
    CHECK(absorb.apex.size == 4);
    CHECK(absorb.injections[0].bijective());
  }

  TEST_CASE("pullback examples") {
    auto diag = pullback(FinMap::identity(FinSetObj{3}), FinMap::identity(FinSetObj{3}));
    CHECK(diag.object.size == 3);
    CHECK(diag.p1 == diag.p2);

    auto sum = pushout(map(0, 2, {}), map(0, 2, {}));
    CHECK(pullback(sum.injections[0], sum.injections[1]).object.size == 0);

    // (l, r) of the cokernel pair of {0} -> {0,1}: only the glued point.
    auto cp = cokernel_pair_cocategory(map(1, 2, {0}));
    auto pb = pullback(cp.l, cp.r);
    CHECK(pb.object.size == 1);
    CHECK(pb.p1 == pb.p2);
    CHECK(pb.p1(0) == 0);
  }

  TEST_CASE("image, union, covering, equalizer") {
    CHECK(image(FinMap::constant(FinSetObj{3}, FinSetObj{4}, 2)).elements == std::vector<std::size_t>{2});
    Subobject a{FinSetObj{2}, {0}}, b{FinSetObj{2}, {1}};
    CHECK(union_of(a, b).elements == std::vector<std::size_t>{0, 1});
    const std::vector<FinMap> pair{inclusion(a), inclusion(b)};
    CHECK(is_jointly_covering(pair));
    CHECK_THROWS_AS(union_of(a, Subobject{FinSetObj{3}, {}}), Error);
    CHECK_THROWS_AS(equalizer(map(1, 2, {0}), map(1, 3, {0})), Error);

    // equalizer of l, r recovers S
    const FinMap m = map(2, 4, {1, 3});
    auto cp = cokernel_pair_cocategory(m);
    CHECK(image(equalizer(cp.l, cp.r)).elements == std::vector<std::size_t>{1, 3});
  }

  TEST_CASE("pushout universal property on random spans") {
    std::mt19937 rng(7);
    auto rand_map = [&](std::size_t d, std::size_t c) {
      std::vector<std::size_t> t(d);
      for (auto& x : t) x = std::uniform_int_distribution<std::size_t>(0, c - 1)(rng);
      return map(d, c, t);
    };
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t s = rng() % 3, a = 1 + rng() % 3, b = 1 + rng() % 3;
      const FinMap f = rand_map(s, a), g = rand_map(s, b);
      const auto w = pushout(f, g);
      CHECK(compose(w.injections[0], f) == compose(w.injections[1], g));
      CHECK(is_jointly_covering(w.injections));
      const FinSetObj x{1 + rng() % 3};
      for_each_map(w.apex, x, [&](const FinMap& h) {
        const FinMap u = compose(h, w.injections[0]), v = compose(h, w.injections[1]);
        std::size_t factorizations = 0;
        for_each_map(w.apex, x, [&](const FinMap& k) {
          factorizations += compose(k, w.injections[0]) == u && compose(k, w.injections[1]) == v;
          return true;
        });
        CHECK(factorizations == 1);
        CHECK(kCat.copair(w, std::vector<FinMap>{u, v}) == h);
        return true;
      });
    }
  }

  TEST_CASE("image and union are stable under pullback") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
      const std::size_t n = 1 + rng() % 4, m = 1 + rng() % 4, k = rng() % 4;
      std::vector<std::size_t> ft(n), gt(k);
      for (auto& v : ft) v = rng() % m;
      for (auto& v : gt) v = rng() % m;
      const FinMap f = map(n, m, ft);  // pull back along f
      const FinMap g = map(k, m, gt);
      // preimage of image(g) = image of the pulled-back leg
      const Pullback pb = pullback(f, g);
      CHECK(preimage(f, image(g)) == image(pb.p1));
      Subobject a{FinSetObj{m}, {}}, b{FinSetObj{m}, {}};
      for (std::size_t y = 0; y < m; ++y) {
        if (rng() % 2) a.elements.push_back(y);
        if (rng() % 2) b.elements.push_back(y);
      }
      CHECK(preimage(f, union_of(a, b)) == union_of(preimage(f, a), preimage(f, b)));
    }
  }
}

TEST_SUITE("finset.cocategories") {
  TEST_CASE("cokernel pair examples") {
    auto iso = cokernel_pair_cocategory(FinMap::identity(FinSetObj{3}));
    CHECK(iso.q1.size == 3);
    auto disjoint = cokernel_pair_cocategory(map(0, 3, {}));
    CHECK(disjoint.q1.size == 6);
    auto cp = cokernel_pair_cocategory(map(1, 2, {0}));
    CHECK(cp.q1.size == 3);
    CHECK(check_cocategory(kCat, cp).passed());
    auto cls = classify(kCat, cp);
    CHECK(cls.is_cocategory == Tri::True);
    CHECK(cls.is_copreorder == Tri::True);
    CHECK(cls.is_cogroupoid == Tri::True);
    CHECK(cls.is_coequivalence == Tri::True);
    CHECK_THROWS_AS(cokernel_pair_cocategory(map(2, 2, {0, 0})), Error);
  }

  TEST_CASE("cokernel pair size is 2|A| - |S| for every mono with |A| <= 4") {
    for (std::size_t a = 0; a <= 4; ++a)
      for (std::size_t s = 0; s <= a; ++s)
        for_each_map(FinSetObj{s}, FinSetObj{a}, [&](const FinMap& m) {
          if (m.injective()) CHECK(cokernel_pair_cocategory(m).q1.size == 2 * a - s);
          return true;
        });
  }

  TEST_CASE("co-inverse of a cokernel pair swaps the copies") {
    auto cp = cokernel_pair_cocategory(map(1, 2, {0}));
    // elements: 0 = glued 0, 1 = 1 in the left copy, 2 = 1 in the right copy
    auto found = find_coinverse(kCat, cp);
    REQUIRE(found.s);
    CHECK(found.s->table() == std::vector<std::size_t>{0, 2, 1});
    CHECK(found.solutions == 1);
    CHECK(found.candidates == 27);
    const FinMap ss = compose(*found.s, *found.s);
    CHECK(compose(ss, cp.l) == cp.l);
    CHECK(compose(ss, cp.r) == cp.r);
  }

  TEST_CASE("proof replay on the cokernel pair of {0} -> {0,1}") {
    auto cp = cokernel_pair_cocategory(map(1, 2, {0}));
    auto rep = verify_proposition(cp);
    CHECK(rep.all_hold());
    // P_1 = {glued 0, 1_left} and m_1 is the image of l
    CHECK(rep.p[0].object.size == 2);
    CHECK(image(rep.p[0].p1) == image(cp.l));
    CHECK(image(rep.p[1].p1) == image(cp.r));
    REQUIRE(rep.s);
    CHECK(rep.s->table() == std::vector<std::size_t>{0, 2, 1});
  }

  TEST_CASE("proof replay on the trivial co-category") {
    auto rep = verify_proposition(trivial_cocategory());
    CHECK(rep.all_hold());
    CHECK(rep.lr_pullback.object.size == 1);
  }

  TEST_CASE("proof replay reports a failing step with an element witness") {
    // Not a co-category: Q1 has a point outside both images.
    const FinMap l = map(1, 2, {0});
    auto bogus = make_cocategory(kCat, FinSetObj{1}, FinSetObj{2}, l, l, map(2, 1, {0, 0}),
                                 [](const Witness& w) { return w.injections[0]; });
    auto rep = verify_proposition(bogus);
    REQUIRE(rep.first_failure());
    // q = nu1 puts everything in m_1, so coverage holds and the co-unit step breaks
    CHECK(rep.coverage);
    CHECK(rep.first_failure()->name == "l.i.q_1 = m_1");
    CHECK(rep.first_failure()->witness.find("element 1") != std::string::npos);
    CHECK_FALSE(rep.lr_jointly_covering);
  }

  TEST_CASE("co-category morphisms") {
    auto cp = cokernel_pair_cocategory(map(1, 2, {0}));
    const FinMap id0 = FinMap::identity(cp.q0), id1 = FinMap::identity(cp.q1);
    CHECK(check_cocat_morphism(kCat, cp, cp, id0, id1).passed());
    auto triv = trivial_cocategory();
    CHECK(check_cocat_morphism(kCat, cp, triv, FinMap::constant(cp.q0, triv.q0, 0),
                               FinMap::constant(cp.q1, triv.q1, 0))
              .passed());
    // perturb f1 on the right copy's point
    auto rep = check_cocat_morphism(kCat, cp, cp, id0, map(3, 3, {0, 1, 1}));
    CHECK_FALSE(rep.passed());
    CHECK(rep.failed_names() == std::vector<std::string>{"f1.r = r'.f0", "(f1+f1).q = q'.f1"});
    CHECK_THROWS_AS(check_cocat_morphism(kCat, cp, cp, id1, id1), Error);
  }

  TEST_CASE("supplied witness that is not a pushout is rejected") {
    auto cp = cokernel_pair_cocategory(map(1, 2, {0}));
    auto bad = cp;
    // collapse the double pushout onto a single copy of Q1
    bad.double_pushout.apex = cp.q1;
    bad.double_pushout.injections = {FinMap::identity(cp.q1), FinMap::identity(cp.q1)};
    bad.q = FinMap::identity(cp.q1);
    bad.triple_pushout = extend_pushout(kCat, bad.double_pushout);
    CHECK_THROWS_AS(check_cocategory(kCat, bad), Error);
    auto cls = classify(kCat, bad);
    CHECK(cls.is_cocategory == Tri::Unknown);
    CHECK(cls.is_coequivalence == Tri::Unknown);
    CHECK_FALSE(cls.failure_witnesses.empty());
  }
}

TEST_SUITE("finset.enumeration") {
  TEST_CASE("bounds (1, 1) give exactly the trivial co-category") {
    auto all = enumerate_cocategories({1, 1, false});
    REQUIRE(all.size() == 1);
    CHECK(iso_cocategories(all[0].data, trivial_cocategory()));
  }

  TEST_CASE("the empty structure is enumerated on request and is valid") {
    auto all = enumerate_cocategories({1, 1, true});
    REQUIRE(all.size() == 2);
    CHECK(all[0].data.q0.size == 0);
    CHECK(check_cocategory(kCat, all[0].data).passed());
    CHECK(classify(kCat, all[0].data).is_coequivalence == Tri::True);
  }

  TEST_CASE("counts agree with the elementwise oracle") {
    for (auto [m0, m1] : {std::pair<std::size_t, std::size_t>{1, 2}, {2, 3}, {2, 4}}) {
      const auto expected = oracle::count_cocategories(m0, m1);
      EnumerationStats stats;
      const auto all = enumerate_cocategories({m0, m1, false}, 2, &stats);
      CHECK(all.size() == expected.structures);
      CHECK(stats.structures == expected.structures);
      CHECK(expected.max_q_per_lri == 1);
    }
  }

  TEST_CASE("regression constants") {
    // frozen from the oracle above
    CHECK(enumerate_cocategories({1, 2, false}).size() == 3);
    const auto c24 = enumerate_cocategories({2, 4, false}, 0);
    CHECK(c24.size() == 41);
    CHECK(count_iso_classes(enumerate_cocategories({1, 2, false})) == 2);
    // one class per mono S -> A with |A| <= 2 and |A +_S A| <= 4
    CHECK(count_iso_classes(c24) == 5);
  }

  TEST_CASE("parallel and sequential enumeration agree") {
    std::vector<CoCategory> seq;
    for_each_cocategory({2, 3, false}, [&](const EnumeratedCoCategory& e) {
      seq.push_back(e.data);
      return true;
    });
    auto par = enumerate_cocategories({2, 3, false}, 3);
    REQUIRE(seq.size() == par.size());
    std::sort(seq.begin(), seq.end(), [](const CoCategory& a, const CoCategory& b) {
      return std::tie(a.q0, a.q1, a.l, a.r, a.i, a.q) < std::tie(b.q0, b.q1, b.l, b.r, b.i, b.q);
    });
    for (std::size_t k = 0; k < seq.size(); ++k) CHECK(seq[k].q == par[k].data.q);
  }

  TEST_CASE("iso search") {
    auto a = cokernel_pair_cocategory(map(1, 2, {0}));
    auto b = cokernel_pair_cocategory(map(1, 2, {1}));
    CHECK(iso_cocategories(a, a));
    CHECK(iso_cocategories(a, b));
    CHECK_FALSE(iso_cocategories(cokernel_pair_cocategory(FinMap::identity(FinSetObj{2})), a));
  }
}

TEST_SUITE("finset.classifier") {
  TEST_CASE("universal co-category") {
    auto u = universal_cocategory();
    CHECK(u.q0.size == 2);
    REQUIRE(u.q1.size == 3);
    // {0_L, glued 1, 0_R}
    CHECK(u.l.table() == std::vector<std::size_t>{0, 1});
    CHECK(u.r.table() == std::vector<std::size_t>{2, 1});
    CHECK(classify(kCat, u).is_coequivalence == Tri::True);
  }

  TEST_CASE("classifying maps") {
    CHECK(classifying_map(map(1, 3, {2})).table() == std::vector<std::size_t>{0, 0, 1});
    CHECK_THROWS_AS(classifying_map(map(2, 3, {1, 1})), Error);
  }

  TEST_CASE("pullback along constant characteristic maps") {
    auto full = pullback_cocategory(FinMap::constant(FinSetObj{3}, kOmega, 1));
    CHECK(full.q1.size == 3);
    CHECK(check_cocategory(kCat, full).passed());
    auto empty = pullback_cocategory(FinMap::constant(FinSetObj{3}, kOmega, 0));
    CHECK(empty.q1.size == 6);
    CHECK(check_cocategory(kCat, empty).passed());
  }

  TEST_CASE("pullback of the classifying map recovers the cokernel pair") {
    for (std::size_t a = 0; a <= 3; ++a)
      for (std::size_t s = 0; s <= a; ++s)
        for_each_map(FinSetObj{s}, FinSetObj{a}, [&](const FinMap& m) {
          if (!m.injective()) return true;
          auto pulled = pullback_cocategory(classifying_map(m));
          CHECK(check_cocategory(kCat, pulled).passed());
          CHECK(iso_cocategories(pulled, cokernel_pair_cocategory(m)));
          return true;
        });
  }

  TEST_CASE("colax correspondence examples") {
    auto triv = trivial_cocategory();
    auto one = verify_colax_correspondence(triv, triv);
    CHECK(one.cocategory_morphisms == 1);
    CHECK(one.colax_maps == 1);
    CHECK(one.bijective);

    auto from_empty = cokernel_pair_cocategory(map(0, 1, {}));
    auto from_full = cokernel_pair_cocategory(map(1, 1, {0}));
    auto up = verify_colax_correspondence(from_empty, from_full);
    CHECK(up.colax_maps == 1);
    CHECK(up.cocategory_morphisms == 1);
    CHECK(up.bijective);

    auto down = verify_colax_correspondence(from_full, from_empty);
    CHECK(down.colax_maps == 0);
    CHECK(down.cocategory_morphisms == 0);
    CHECK(down.bijective);

    CHECK_THROWS_AS(verify_colax_correspondence(cokernel_pair_cocategory(map(0, 4, {})),
                                                cokernel_pair_cocategory(map(0, 4, {})), 1000),
                    Error);
  }
}
