#include <doctest.h>

#include "loccat/errors.hpp"
#include "loccat/s_equivalence.hpp"
#include "support.hpp"

using namespace loccat;
using namespace testing_support;

TEST_SUITE("s-equivalence") {
  TEST_CASE("S-2-arrows and fills on E2") {
    Setting s(load_functor("E2.functor.json"));
    auto arrows = s.two_arrows();
    CHECK(arrows.size() == 2);
    for (auto const& a : arrows) {
      CHECK(s.solve_fill(a).size() == 1);
    }
  }

  TEST_CASE("verdicts and witnesses") {
    Setting e3(load_functor("E3.functor.json"));
    auto faithful = check_s_faithful(e3);
    CHECK(faithful.verdict == Verdict::False);
    CHECK(faithful.witness["phi1"] == "f1");
    CHECK(faithful.witness["phi2"] == "f2");
    CHECK(check_s_full(e3).verdict == Verdict::True);

    Setting e4(load_functor("E4.functor.json"));
    auto dense = check_s_dense(e4);
    CHECK(dense.verdict == Verdict::False);
    CHECK(dense.witness["object"] == "Z");
    CHECK(dense.decidability == "complete");

    Setting disc(load_functor("E1disc.functor.json"));
    CHECK(check_s_full(disc).verdict == Verdict::False);
  }

  TEST_CASE("undecided at tiny limits") {
    RawCategory raw;
    raw.objects    = {"•"};
    raw.generators = {{"d", "•", "•"}};
    auto loop = CategoryModel::make(build_category(raw), {4, 16, 8});
    auto f    = identity_functor(loop);
    Setting s(f);
    auto r = check_s_full(s);
    CHECK(r.verdict == Verdict::Undecided);
    CHECK_FALSE(r.bound.empty());
    CHECK(r.to_json()["verdict"] == "undecided");
  }

  TEST_CASE("multiplicativity is a precondition") {
    Setting s(load_functor("E6.functor.json"));
    CHECK_THROWS_WITH_AS(check_s_equivalence(s), "multiplicativity violated: 1_a",
                         PreconditionError);
    EquivalenceOptions opts;
    opts.experimental_no_mult = true;
    auto r = check_s_equivalence(s, opts);
    CHECK(r.experimental);
  }

  TEST_CASE("total replacement functor on E5") {
    Setting s(load_functor("E5.functor.json"));
    auto rc = std::make_shared<ReplacementCategory const>(s.functor());
    TotalReplacement tr(s, rc);
    auto v = tr.verify();
    CHECK(v["passed"] == true);
    CHECK(v["violations"].empty());
    // d: (•, •, 1) -> (•, •, d) over 1 has value d.
    auto const& gz_c = s.lc_c().model();
    auto d = s.d().cat().word_from_names({"d"});
    auto t0 = *rc->find_triple({0, 0, Word::identity(0)});
    auto t1 = *rc->find_triple({0, 0, d});
    CHECK(gz_c.show(tr.value(t0, t1, Word::identity(0))) == "d");
  }

  TEST_CASE("total replacement needs S-faithfulness") {
    Setting s(load_functor("E3.functor.json"));
    auto rc = std::make_shared<ReplacementCategory const>(s.functor());
    CHECK_THROWS_AS(TotalReplacement(s, rc), PreconditionError);
  }

  TEST_CASE("approximation on E2") {
    Setting s(load_functor("E2.functor.json"));
    auto r = auto_choice(ReplacementCategory(s.functor()));
    auto report = verify_approximation(s, r);
    CHECK(report.passed);
    CHECK(report.body["beta"]["b"]["word"] == "d");
    CHECK(report.body["alpha"]["•"]["word"] == "1_•");
    CHECK(report.body["replacement_category"]["objects"].size() == 2);
  }

  TEST_CASE("choice independence on E7b") {
    Setting s(load_functor("E7b.functor.json"));
    EquivalenceOptions opts;
    opts.alternative = read_choice_file(fixture("E7b.alt.choice.json"), s.functor());
    auto report = verify_approximation(s, auto_choice(ReplacementCategory(s.functor())), opts);
    CHECK(report.passed);
    CHECK(report.body["choice_independence"]["components"]["tl"]["word"] == "i_inv");
  }

  TEST_CASE("classical profile") {
    auto p = classical_profile(load_functor("E1p.functor.json"));
    CHECK_FALSE(p.dense);
    CHECK(p.full);
    CHECK(p.faithful);
    CHECK(check_classical_equivalence(load_functor("E1.functor.json")).verdict
          == Verdict::True);
    CHECK(check_classical_equivalence(load_functor("E3.functor.json")).verdict
          == Verdict::False);
  }
}
