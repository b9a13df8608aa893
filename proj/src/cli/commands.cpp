#include "cocat/cli/commands.hpp"

#include <map>
#include <sstream>

#include "cocat/abgp/dual.hpp"
#include "cocat/abgp/examples.hpp"
#include "cocat/chain/examples.hpp"
#include "cocat/chain/nerve.hpp"
#include "cocat/core/error.hpp"
#include "cocat/fincat/cocategories.hpp"
#include "cocat/finset/cocategories.hpp"

namespace cocat::cli {

namespace {

/// Classifier flags an example must show; co-equivalence follows from the other two.
struct Manifest {
  Tri copreorder;
  Tri cogroupoid;
};

template <class C>
constexpr bool kJointEpiUndecided = std::is_same_v<C, fincat::CatCategory>;

// Cat never claims joint epimorphy; a refuted flag reads as "disproved".
template <class C>
std::string flag_word(Tri t, bool copreorder_flag) {
  if (kJointEpiUndecided<C> && copreorder_flag && t == Tri::False) return "disproved";
  return cocat::to_string(t);
}

template <class C>
void add_flag(Report& rep, const std::string& name, Tri observed, const std::optional<Tri>& expected,
              std::string witness, bool copreorder_flag = false) {
  if (expected) {
    rep.expect(name, observed, *expected, std::move(witness));
    rep.checks.back().observed = flag_word<C>(observed, copreorder_flag);
    rep.checks.back().expected = flag_word<C>(*expected, copreorder_flag);
  } else {
    rep.info(name, flag_word<C>(observed, copreorder_flag), std::move(witness));
  }
}

/// Adds the axiom checks and the classifier flags.  With a manifest the flags
/// are requirements; without one they are observations.
template <class C>
Classification<C> add_classification(Report& rep, const C& cat, const CoCategoryData<C>& d,
                                     const std::optional<Manifest>& manifest) {
  auto cl = classify(cat, d);
  if (cl.axioms.checks.empty()) {
    rep.require("co-category axioms", false, cl.failure_witnesses.empty() ? "" : cl.failure_witnesses.front());
    return cl;
  }
  for (const auto& c : cl.axioms.checks) {
    Check out{"axiom: " + c.name, Verdict::Pass, cocat::to_string(c.status), "true", c.detail};
    if (c.status == Tri::False) out.verdict = Verdict::Fail;
    if (c.status == Tri::Unknown) out.verdict = Verdict::Info;
    rep.checks.push_back(std::move(out));
  }
  if (cl.is_cocategory != Tri::True) {
    rep.require("co-category", false, "first failed diagram: " + cl.axioms.first_failure()->name);
    return cl;
  }

  std::optional<Tri> want_pre, want_grp, want_eq;
  if (manifest) {
    want_pre = manifest->copreorder;
    want_grp = manifest->cogroupoid;
    want_eq = tri_and(manifest->copreorder, manifest->cogroupoid);
  }
  add_flag<C>(rep, "copreorder (l, r jointly epimorphic)", cl.is_copreorder, want_pre, cl.joint_epi.witness, true);

  std::string grp_witness;
  if (cl.coinverse)
    grp_witness = "s = " + cat.describe(*cl.coinverse);
  else
    for (const auto& w : cl.failure_witnesses)
      if (w.rfind("cogroupoid:", 0) == 0) grp_witness = w;
  add_flag<C>(rep, "cogroupoid (co-inverse exists)", cl.is_cogroupoid, want_grp, grp_witness);
  add_flag<C>(rep, "coequivalence relation", cl.is_coequivalence, want_eq, {});
  return cl;
}

std::string describe_mono(const finset::FinMap& m) {
  return std::to_string(m.dom().size) + " -> " + std::to_string(m.cod().size) + " " + finset::to_string(m);
}

std::vector<finset::FinMap> small_monos(std::size_t max_ambient) {
  std::vector<finset::FinMap> out;
  for (std::size_t a = 0; a <= max_ambient; ++a)
    for (std::size_t mask = 0; mask < (std::size_t{1} << a); ++mask) {
      std::vector<std::size_t> elems;
      for (std::size_t k = 0; k < a; ++k)
        if (mask >> k & 1) elems.push_back(k);
      out.push_back(finset::inclusion({{a}, elems}));
    }
  return out;
}

Report verify_finset_cokernel() {
  Report rep;
  const finset::FinSetCategory cat;
  const finset::FinMap m({2}, {3}, {0, 1});
  const auto d = finset::cokernel_pair_cocategory(m);
  rep.facts["mono"] = describe_mono(m);
  rep.facts["|Q1|"] = d.q1.size;
  add_classification(rep, cat, d, Manifest{Tri::True, Tri::True});

  const auto proof = finset::verify_proposition(d);
  for (const auto& step : proof.steps) rep.require("proof step: " + step.name, step.holds, step.witness);

  rep.require("equalizer of (l, r) recovers the mono",
              finset::image(finset::equalizer(d.l, d.r)) == finset::image(m));

  std::size_t checked = 0;
  std::string first_bad;
  for (const auto& mono : small_monos(3)) {
    ++checked;
    const auto q = finset::cokernel_pair_cocategory(mono);
    const bool round = finset::image(finset::equalizer(q.l, q.r)) == finset::image(mono);
    const bool back = finset::iso_cocategories(q, finset::cokernel_pair_cocategory(finset::equalizer(q.l, q.r))).has_value();
    if ((!round || !back) && first_bad.empty()) first_bad = describe_mono(mono);
  }
  rep.require("mono and co-category round trips for every mono with |A| <= 3", first_bad.empty(),
              first_bad.empty() ? std::to_string(checked) + " monos" : "fails at " + first_bad);
  return rep;
}

Report verify_universal() {
  Report rep;
  const finset::FinSetCategory cat;
  const auto u = finset::universal_cocategory();
  rep.require("universal co-category has |Q1| = 3", u.q1.size == 3, "|Q1| = " + std::to_string(u.q1.size));
  add_classification(rep, cat, u, Manifest{Tri::True, Tri::True});

  std::size_t checked = 0;
  std::string first_bad;
  for (const auto& mono : small_monos(3)) {
    ++checked;
    const auto q = finset::cokernel_pair_cocategory(mono);
    const auto chi = finset::classifying_map(mono);
    std::size_t reproducing = 0;
    bool chi_reproduces = false;
    finset::for_each_map(mono.cod(), finset::kOmega, [&](const finset::FinMap& candidate) {
      if (finset::iso_over_q0(finset::pullback_cocategory(candidate), q)) {
        ++reproducing;
        chi_reproduces = chi_reproduces || candidate == chi;
      }
      return true;
    });
    const bool ok = finset::characteristic_of(q) == chi && reproducing == 1 && chi_reproduces;
    if (!ok && first_bad.empty())
      first_bad = describe_mono(mono) + " (" + std::to_string(reproducing) + " classifying maps reproduce it)";
  }
  rep.require("exactly one map into Omega reproduces each cokernel pair with |A| <= 3", first_bad.empty(),
              first_bad.empty() ? std::to_string(checked) + " monos" : "fails at " + first_bad);
  return rep;
}

std::string vector_text(const std::vector<abgp::BigInt>& v) {
  std::string s = "[";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + v[k].get_str();
  return s + "]";
}

void add_dual_checks(Report& rep, const abgp::CoCategory& d, const std::string& prefix) {
  const auto icat = abgp::transpose_dualize(d);
  for (const auto& c : abgp::check_internal_category(icat).checks)
    rep.require(prefix + c.name, c.status == Tri::True, c.detail);
}

Report verify_abgp_example() {
  Report rep;
  const abgp::AbGpCategory cat;
  const auto d = abgp::interval_cocategory();
  const auto cl = add_classification(rep, cat, d, Manifest{Tri::False, Tri::True});

  const auto coker = abgp::joint_cokernel(d.l, d.r);
  rep.require("cokernel of [l | r] has invariant factors [0]", coker == std::vector<abgp::BigInt>{0},
              "invariant factors " + vector_text(coker));
  if (cl.coinverse) {
    const auto identities = check_coinverse(cat, d, *cl.coinverse);
    for (const auto& c : identities.checks) rep.require("co-inverse: " + c.name, c.status == Tri::True);
    rep.facts["s"] = abgp::to_string(cl.coinverse->matrix());
  }
  const auto canonical = abgp::pushout(d.r, d.l);
  rep.require("double pushout matches the computed pushout entrywise",
              canonical.injections[0].matrix() == d.double_pushout.injections[0].matrix() &&
                  canonical.injections[1].matrix() == d.double_pushout.injections[1].matrix());
  add_dual_checks(rep, d, "dual: ");
  return rep;
}

Report verify_chain_example() {
  Report rep;
  const chain::ChainCategory cat;
  const auto d = chain::chain_example_cocategory();
  add_classification(rep, cat, d, Manifest{Tri::False, Tri::True});

  const auto total = chain::total_space(d);
  const auto reference = abgp::interval_cocategory();
  auto same = [](const abgp::AbMap& a, const abgp::AbMap& b) { return a.matrix() == b.matrix(); };
  rep.require("total space l, r, i, q equal the abelian group example",
              same(total.l, reference.l) && same(total.r, reference.r) && same(total.i, reference.i) && same(total.q, reference.q));
  rep.require("total space double pushout injections equal the abelian group example",
              same(total.double_pushout.injections[0], reference.double_pushout.injections[0]) &&
                  same(total.double_pushout.injections[1], reference.double_pushout.injections[1]));
  rep.require("total space passes the co-category axioms", check_cocategory(abgp::AbGpCategory(), total).passed());
  return rep;
}

Report verify_cat_interval() {
  Report rep;
  const fincat::CatCategory cat;
  const auto d = fincat::interval_cocategory(cat);
  const auto cl = add_classification(rep, cat, d, Manifest{Tri::False, Tri::False});
  rep.require("co-inverse search is exhaustive over 3 endofunctors of the arrow category",
              cl.coinverse_candidates == 3, std::to_string(cl.coinverse_candidates) + " endofunctors examined");
  const auto pair = fincat::joint_epi_counterexample(d, 6);
  rep.require("joint-epi counterexample within test categories of size 6", pair.has_value(),
              pair ? "test category with " + std::to_string(pair->test.morphisms()) + " morphisms" : "");
  return rep;
}

}  // namespace

const std::vector<std::string>& example_names() {
  static const std::vector<std::string> names{"finset-cokernel", "abgp-example", "chain-example", "cat-interval",
                                              "universal"};
  return names;
}

Report cmd_verify(std::string_view example) {
  Report rep;
  if (example == "finset-cokernel")
    rep = verify_finset_cokernel();
  else if (example == "abgp-example")
    rep = verify_abgp_example();
  else if (example == "chain-example")
    rep = verify_chain_example();
  else if (example == "cat-interval")
    rep = verify_cat_interval();
  else if (example == "universal")
    rep = verify_universal();
  else
    throw Error(ErrorKind::UnknownExample, "no example named '" + std::string(example) + "'");
  rep.command = "verify " + std::string(example);
  return rep;
}

Report cmd_enumerate(const EnumerateOptions& opts) {
  if (opts.q0_max > kMaxQ0 || opts.q1_max > kMaxQ1)
    throw Error(ErrorKind::CapExceeded, "bounds (" + std::to_string(opts.q0_max) + ", " +
                                            std::to_string(opts.q1_max) + ") exceed the caps (" +
                                            std::to_string(kMaxQ0) + ", " + std::to_string(kMaxQ1) + ")");
  Report rep;
  rep.command = "enumerate --q0-max " + std::to_string(opts.q0_max) + " --q1-max " + std::to_string(opts.q1_max) +
                (opts.verify_theorem ? " --verify-theorem" : "") + (opts.count_iso ? " --count-iso" : "");

  finset::EnumerationStats stats;
  const auto all = finset::enumerate_cocategories({opts.q0_max, opts.q1_max, opts.include_empty}, opts.workers, &stats);
  rep.facts["structures"] = all.size();
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> by_size;
  for (const auto& e : all) ++by_size[{e.data.q0.size, e.data.q1.size}];
  auto sizes = nlohmann::ordered_json::array();
  for (const auto& [key, n] : by_size)
    sizes.push_back("|Q0| = " + std::to_string(key.first) + ", |Q1| = " + std::to_string(key.second) + ": " +
                    std::to_string(n));
  rep.facts["by size"] = sizes;
  rep.facts["(l, r, i) candidates"] = stats.lri_candidates;
  rep.facts["q candidates"] = stats.q_candidates;
  if (opts.count_iso) rep.facts["iso classes"] = finset::count_iso_classes(all);

  if (opts.verify_theorem) {
    const finset::FinSetCategory cat;
    std::size_t nontrivial = 0, not_coeq = 0, proof_fail = 0, q_not_unique = 0, s_not_unique = 0;
    std::string first_not_coeq, first_proof_fail, first_q, first_s;
    for (const auto& e : all) {
      const auto& d = e.data;
      if (d.q1.size > d.q0.size) ++nontrivial;
      const auto cl = classify(cat, d);
      const bool coeq = cl.is_cocategory == Tri::True && cl.is_copreorder == Tri::True &&
                        cl.is_cogroupoid == Tri::True && cl.is_coequivalence == Tri::True;
      if (!coeq && not_coeq++ == 0) first_not_coeq = write_cocategory(d);
      const auto proof = finset::verify_proposition(d);
      if (!proof.all_hold() && proof_fail++ == 0)
        first_proof_fail = proof.first_failure()->name + ": " + proof.first_failure()->witness;
      if (e.q_solutions != 1 && q_not_unique++ == 0)
        first_q = std::to_string(e.q_solutions) + " co-compositions for " + write_cocategory(d);
      const auto found = find_coinverse(cat, d);
      if (found.solutions != 1 && s_not_unique++ == 0)
        first_s = std::to_string(found.solutions) + " co-inverses for " + write_cocategory(d);
    }
    rep.require("a nontrivial structure (|Q1| > |Q0|) is enumerated", nontrivial > 0,
                std::to_string(nontrivial) + " nontrivial");
    rep.require("every structure is a co-equivalence relation", not_coeq == 0,
                not_coeq ? std::to_string(not_coeq) + " violations; first:\n" + first_not_coeq : "");
    rep.require("every proof step holds on every structure", proof_fail == 0,
                proof_fail ? std::to_string(proof_fail) + " failures; first: " + first_proof_fail : "");
    rep.require("co-composition q is unique for each (l, r, i)", q_not_unique == 0, first_q);
    rep.require("co-inverse is unique", s_not_unique == 0, first_s);
    rep.facts["theorem violations"] = not_coeq + proof_fail;
  }
  return rep;
}

Report cmd_classify(const AnyCoCategory& data) {
  Report rep;
  rep.command = "classify --category " + std::string(host_name(host_of(data)));
  rep.facts["category"] = std::string(host_name(host_of(data)));
  std::visit(
      [&](const auto& d) {
        using D = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<D, finset::CoCategory>) {
          add_classification(rep, finset::FinSetCategory(), d, std::nullopt);
        } else if constexpr (std::is_same_v<D, abgp::CoCategory>) {
          add_classification(rep, abgp::AbGpCategory(), d, std::nullopt);
          rep.facts["joint cokernel"] = vector_text(abgp::joint_cokernel(d.l, d.r));
        } else if constexpr (std::is_same_v<D, chain::CoCategory>) {
          add_classification(rep, chain::ChainCategory(), d, std::nullopt);
        } else {
          add_classification(rep, fincat::CatCategory(), d, std::nullopt);
        }
      },
      data);
  return rep;
}

Report cmd_classify_file(Host declared, const std::string& path) {
  const auto data = read_cocategory_file(path);
  if (host_of(data) != declared)
    throw Error(ErrorKind::ParseError, "field category: file declares '" + std::string(host_name(host_of(data))) +
                                           "' but --category is '" + std::string(host_name(declared)) + "'");
  Report rep = cmd_classify(data);
  rep.command += " --file " + path;
  return rep;
}

Report cmd_pipeline() {
  Report rep;
  rep.command = "pipeline";
  const auto interval = fincat::interval_cocategory();
  const auto image = chain::pipeline(interval);
  const auto target = chain::chain_example_cocategory();
  const chain::ChainCategory cat;
  add_classification(rep, cat, image, Manifest{Tri::False, Tri::True});

  const auto iso = chain::find_signed_permutation_iso(image, target);
  rep.require("isomorphism onto the chain example", iso.has_value());
  if (iso) {
    for (const auto& c : check_cocat_morphism(cat, image, target, iso->f0, iso->f1).checks)
      rep.require("iso: " + c.name, c.status == Tri::True, c.detail);
    rep.facts["f0"] = chain::to_string(iso->f0);
    rep.facts["f1"] = chain::to_string(iso->f1);
  }

  // the arrow a of I1 in the glued interval: its two copies and their composite
  const auto& glued = interval.double_pushout.apex;
  std::size_t a = 0;
  while (interval.q1.is_identity(a)) ++a;
  const auto e1 = chain::degree_one_class(glued, interval.double_pushout.injections[0].morphism(a));
  const auto e2 = chain::degree_one_class(glued, interval.double_pushout.injections[1].morphism(a));
  const auto composite = chain::degree_one_class(glued, interval.q.morphism(a));
  rep.facts["degree 1 class of nu1(a)"] = vector_text(e1);
  rep.facts["degree 1 class of nu2(a)"] = vector_text(e2);
  rep.facts["degree 1 class of the composite"] = vector_text(composite);
  std::vector<abgp::BigInt> sum(e1.size());
  for (std::size_t k = 0; k < sum.size() && k < e2.size(); ++k) sum[k] = e1[k] + e2[k];
  rep.require("composite = e1 + e2 in degree 1", composite == sum && e1 != e2,
              glued.name(interval.q.morphism(a)) + " -> " + vector_text(composite));
  return rep;
}

}  // namespace cocat::cli
