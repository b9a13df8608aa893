#include <doctest.h>

#include <random>
#include <regex>
#include <sstream>

#include "cocat/abgp/examples.hpp"
#include "cocat/chain/examples.hpp"
#include "cocat/cli/commands.hpp"
#include "cocat/fincat/cocategories.hpp"
#include "cocat/finset/cocategories.hpp"

using namespace cocat;
using namespace cocat::cli;

namespace {

std::string data_file(const std::string& name) { return std::string(COCAT_DATA_DIR) + "/" + name; }

template <class C>
bool same_structure(const C& cat, const CoCategoryData<C>& a, const CoCategoryData<C>& b) {
  return cat.same_object(a.q0, b.q0) && cat.same_object(a.q1, b.q1) && cat.equal(a.l, b.l) &&
         cat.equal(a.r, b.r) && cat.equal(a.i, b.i) && cat.equal(a.q, b.q) &&
         cat.same_object(a.double_pushout.apex, b.double_pushout.apex) &&
         cat.equal(a.double_pushout.injections[0], b.double_pushout.injections[0]) &&
         cat.equal(a.double_pushout.injections[1], b.double_pushout.injections[1]);
}

std::string parse_error_of(const std::string& text) {
  try {
    parse_cocategory(text);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ParseError) return e.what();
    return "wrong kind: " + std::string(e.what());
  }
  return "no error";
}

const char* kFinset = "category finset\nq0 3\nq1 4\nl 0 1 2\nr 0 1 3\ni 0 1 2 2\nq 0 1 2 4\n";

// Flags as rendered in a report, keyed by check name.
std::map<std::string, std::string> observed(const Report& r) {
  std::map<std::string, std::string> out;
  for (const auto& c : r.checks) out[c.name] = c.observed;
  return out;
}

}  // namespace

TEST_SUITE("cli.format") {
  TEST_CASE("write then parse reproduces every built-in structure") {
    CHECK(same_structure(finset::FinSetCategory(),
                         std::get<finset::CoCategory>(parse_cocategory(write_cocategory(finset::universal_cocategory()))),
                         finset::universal_cocategory()));
    const auto a = abgp::interval_cocategory();
    CHECK(same_structure(abgp::AbGpCategory(), std::get<abgp::CoCategory>(parse_cocategory(write_cocategory(a))), a));
    const auto c = chain::chain_example_cocategory();
    CHECK(same_structure(chain::ChainCategory(), std::get<chain::CoCategory>(parse_cocategory(write_cocategory(c))), c));
    const auto k = fincat::interval_cocategory();
    CHECK(same_structure(fincat::CatCategory(), std::get<fincat::CoCategory>(parse_cocategory(write_cocategory(k))), k));
  }

  TEST_CASE("round trip over every enumerated FinSet structure") {
    const auto all = finset::enumerate_cocategories({2, 4, true});
    REQUIRE(!all.empty());
    for (const auto& e : all) {
      const auto back = std::get<finset::CoCategory>(parse_cocategory(write_cocategory(e.data)));
      CHECK(same_structure(finset::FinSetCategory(), back, e.data));
    }
  }

  TEST_CASE("round trip of random presented groups") {
    std::mt19937 rng(71);
    for (int trial = 0; trial < 50; ++trial) {
      const std::size_t rank = 1 + rng() % 3;
      abgp::IntMatrix rel(rank, rng() % 3);
      for (std::size_t i = 0; i < rel.rows(); ++i)
        for (std::size_t j = 0; j < rel.cols(); ++j) rel(i, j) = static_cast<long>(rng() % 7) - 3;
      // identity structure on a presented group: l = r = i = id, q = nu1
      const abgp::FgAbGroup g(rank, rel);
      const abgp::AbGpCategory cat;
      const auto id = abgp::AbMap::identity(g);
      const auto s = make_cocategory(cat, g, g, id, id, id, [](const auto& w) { return w.injections[0]; });
      const auto back = std::get<abgp::CoCategory>(parse_cocategory(write_cocategory(s)));
      CHECK(same_structure(cat, back, s));
    }
  }

  TEST_CASE("omitted witness is recomputed and q read against it") {
    const auto parsed = std::get<finset::CoCategory>(parse_cocategory(kFinset));
    const auto expected = finset::cokernel_pair_cocategory(finset::FinMap({2}, {3}, {0, 1}));
    CHECK(same_structure(finset::FinSetCategory(), parsed, expected));
  }

  TEST_CASE("data files parse to the built-in structures") {
    CHECK(same_structure(abgp::AbGpCategory(),
                         std::get<abgp::CoCategory>(read_cocategory_file(data_file("abgp_example.txt"))),
                         abgp::interval_cocategory()));
    CHECK(same_structure(chain::ChainCategory(),
                         std::get<chain::CoCategory>(read_cocategory_file(data_file("chain_example.txt"))),
                         chain::chain_example_cocategory()));
    CHECK(same_structure(fincat::CatCategory(),
                         std::get<fincat::CoCategory>(read_cocategory_file(data_file("cat_interval.txt"))),
                         fincat::interval_cocategory()));
  }

  TEST_CASE("diagnostics name the line and field") {
    struct Case {
      std::string text;
      std::string line;
      std::string field;
    };
    const std::vector<Case> cases{
        {"", "1", "category"},
        {"category groups\n", "1", "category"},
        {"category finset\nq0 3\nq2 4\n", "3", "q1"},
        {"category finset\nq0 3\nq1 4\nl 0 1\n", "4", "l"},
        {"category finset\nq0 3\nq1 4\nl 0 x 2\n", "4", "l"},
        {"category finset\nq0 3\nq1 4\nl 0 1 9\n", "4", "l"},
        {"category finset\nq0 -1\n", "2", "q0"},
        {std::string(kFinset) + "extra\n", "8", "q"},
        {"category finset\nq0 3\nq1 4\nl 0 1 2\nr 0 1 3\ni 0 1 2 2\nq 0 1 2 9\n", "7", "q"},
        {"category abgp\nq0 2 1 0\n", "2", "q0"},
        {"category abgp\nq0 1 1 0\nq1 1 1 0\nl 2 1 1 0\n", "4", "l"},
        {"category abgp\nq0 1 1 1 2\nq1 1 1 0\nl 1 1 1\n", "4", "l"},
        {"category chain\nq0 1 1 1 2 1 1 1\n", "2", "q0"},
        {"category cat\nq0 1 1 0 0 0 0\nq1 2 3 0 0 1 1 0 1 0 2 0\n", "3", "q1"},
        {"category cat\nq0 1 1 0 0 0 0\nq1 1 1 0 0 0 0\nl 0 1\n", "4", "l"},
    };
    for (const auto& c : cases) {
      const std::string msg = parse_error_of(c.text);
      INFO(c.text);
      INFO(msg);
      CHECK(msg.find("ParseError") == 0);
      CHECK(msg.find("line " + c.line + ",") != std::string::npos);
      CHECK(msg.find("field " + c.field + ":") != std::string::npos);
    }
  }

  TEST_CASE("every truncation of a valid document is rejected as a parse error") {
    for (const std::string doc : {std::string(kFinset), write_cocategory(abgp::interval_cocategory()),
                                  write_cocategory(chain::chain_example_cocategory()),
                                  write_cocategory(fincat::interval_cocategory())}) {
      // cut at every token boundary before the end
      for (std::size_t k = 0; k + 1 < doc.size(); ++k) {
        if (!std::isspace(static_cast<unsigned char>(doc[k])) || std::isspace(static_cast<unsigned char>(doc[k + 1])))
          continue;
        const std::string cut = doc.substr(0, k);
        std::string kind;
        try {
          parse_cocategory(cut);
          kind = "none";
        } catch (const Error& e) {
          kind = std::string(to_string(e.kind()));
        }
        // cutting right before the optional witness block leaves a valid document
        if (kind == "none") CHECK(cut.find("double") == std::string::npos);
        else CHECK(kind == "ParseError");
      }
    }
  }
}

TEST_SUITE("cli.commands") {
  TEST_CASE("every example verifies") {
    for (const auto& name : example_names()) {
      const Report r = cmd_verify(name);
      INFO(render_human(r));
      CHECK(r.passed());
      CHECK(r.exit_status() == 0);
    }
  }

  TEST_CASE("unknown example") {
    try {
      cmd_verify("nope");
      FAIL("no exception");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::UnknownExample);
    }
  }

  TEST_CASE("expected failures are encoded as passes") {
    const Report r = cmd_verify("abgp-example");
    const auto flags = observed(r);
    CHECK(flags.at("copreorder (l, r jointly epimorphic)") == "false");
    CHECK(flags.at("cogroupoid (co-inverse exists)") == "true");
    const Report cat = cmd_verify("cat-interval");
    CHECK(observed(cat).at("copreorder (l, r jointly epimorphic)") == "disproved");
    CHECK(observed(cat).at("cogroupoid (co-inverse exists)") == "false");
  }

  TEST_CASE("classifying the data file matches verify") {
    const Report file = cmd_classify_file(Host::AbGp, data_file("abgp_example.txt"));
    const Report builtin = cmd_verify("abgp-example");
    const auto a = observed(file), b = observed(builtin);
    for (const auto& [name, value] : a) {
      INFO(name);
      REQUIRE(b.count(name) == 1);
      CHECK(b.at(name) == value);
    }
    CHECK(file.passed());
  }

  TEST_CASE("corrupted q is caught") {
    const Report r = cmd_classify_file(Host::AbGp, data_file("abgp_bad_q.txt"));
    CHECK(!r.passed());
    CHECK(r.exit_status() == 1);
    bool named = false;
    for (const auto& c : r.checks) named = named || c.witness.find("first failed diagram") != std::string::npos;
    CHECK(named);
    CHECK_THROWS_AS(cmd_classify_file(Host::FinSet, data_file("finset_bad_q.txt")), Error);
    CHECK_THROWS_AS(cmd_classify_file(Host::Chain, data_file("abgp_example.txt")), Error);
  }

  TEST_CASE("enumeration counts and caps") {
    CHECK(cmd_enumerate({1, 1}).facts["structures"] == 1);
    EnumerateOptions opts{2, 4, true, true};
    const Report r = cmd_enumerate(opts);
    CHECK(r.passed());
    CHECK(r.facts["theorem violations"] == 0);
    try {
      cmd_enumerate({kMaxQ0 + 1, 1});
      FAIL("no exception");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::CapExceeded);
    }
    CHECK_THROWS_AS(cmd_enumerate({1, kMaxQ1 + 1}), Error);
  }

  TEST_CASE("enumeration agrees with a direct count") {
    // Direct count: structures with |Q0| = 1 and |Q1| <= 2, by size.
    const auto all = finset::enumerate_cocategories({1, 2, false});
    const Report r = cmd_enumerate({1, 2, false, true});
    CHECK(r.facts["structures"] == all.size());
    CHECK(r.facts["iso classes"] == finset::count_iso_classes(all));
  }

  TEST_CASE("pipeline exhibits the degree-one relation") {
    const Report r = cmd_pipeline();
    CHECK(r.passed());
    CHECK(r.facts["degree 1 class of the composite"] == "[1, 1]");
  }
}

TEST_SUITE("cli.report") {
  TEST_CASE("human and JSON renderings agree") {
    std::vector<Report> reports;
    for (const auto& name : example_names()) reports.push_back(cmd_verify(name));
    reports.push_back(cmd_pipeline());
    reports.push_back(cmd_classify_file(Host::AbGp, data_file("abgp_bad_q.txt")));
    for (const auto& r : reports) {
      const auto j = nlohmann::json::parse(render_json(r));
      const std::string human = render_human(r);
      CHECK(j["checks"].size() == r.checks.size());
      CHECK(j["passed"] == r.passed());
      CHECK(j["exit_status"] == r.exit_status());
      std::size_t k = 0;
      std::istringstream in(human);
      std::string line;
      std::size_t fails = 0;
      while (std::getline(in, line)) {
        static const std::regex check_line(R"(^  (PASS|FAIL|INFO)  (.*)$)");
        std::smatch m;
        if (!std::regex_match(line, m, check_line)) continue;
        REQUIRE(k < j["checks"].size());
        const auto& c = j["checks"][k++];
        const std::string tag = m[1];
        CHECK(tag == (c["verdict"] == "pass" ? "PASS" : c["verdict"] == "fail" ? "FAIL" : "INFO"));
        CHECK(std::string(m[2]).find(c["name"].get<std::string>()) == 0);
        if (tag == "FAIL") ++fails;
      }
      CHECK(k == r.checks.size());
      CHECK(fails == j["failures"]);
      CHECK(human.find(r.passed() ? "result: PASS" : "result: FAIL") != std::string::npos);
    }
  }

  TEST_CASE("reports are deterministic") {
    CHECK(render_json(cmd_verify("cat-interval")) == render_json(cmd_verify("cat-interval")));
    CHECK(render_json(cmd_enumerate({2, 3, true, true, false, 4})) ==
          render_json(cmd_enumerate({2, 3, true, true, false, 1})));
  }
}
