#include <doctest.h>

#include "loccat/errors.hpp"
#include "loccat/replacement.hpp"
#include "support.hpp"

using namespace loccat;
using namespace testing_support;

namespace {

  std::vector<std::string> object_names(ReplacementCategory const& rc) {
    return rc.model().cat().objects();
  }

}  // namespace

TEST_SUITE("s-replacement") {
  TEST_CASE("replacements of each object") {
    auto f = load_functor("E7b.functor.json");
    auto const& d = f.target->cat();
    auto tl = find_s_replacements(f, *d.object_index("tl"));
    REQUIRE(tl.size() == 2);
    CHECK(to_string(f, tl[0]) == "(tl, x0, 1_tl)");
    CHECK(to_string(f, tl[1]) == "(tl, x2, u)");
    auto bl = find_s_replacements(f, *d.object_index("bl"));
    REQUIRE(bl.size() == 2);
    CHECK(to_string(f, bl[1]) == "(bl, x2, u·v_left)");
    CHECK_FALSE(enough_witness(f));
    CHECK_FALSE(trivial_witness(f));
  }

  TEST_CASE("E4 lacks a replacement of Z") {
    auto f = load_functor("E4.functor.json");
    REQUIRE(enough_witness(f));
    CHECK(f.target->cat().object_name(*enough_witness(f)) == "Z");
    ReplacementCategory rc(f);
    CHECK(object_names(rc) == std::vector<std::string>{"(Y, •, 1_Y)"});
    CHECK_THROWS_AS(auto_choice(rc), PreconditionError);
  }

  TEST_CASE("E2 replacement category has two objects") {
    ReplacementCategory rc(load_functor("E2.functor.json"));
    CHECK(object_names(rc) == std::vector<std::string>{"(a, •, 1_a)", "(b, •, d)"});
    CHECK_FALSE(rc.uses_table());
    auto const& dr = rc.model();
    // The lift of d is the only non-identity morphism and is a denominator.
    auto hom = dr.homset(0, 1);
    REQUIRE(hom.size() == 1);
    CHECK(dr.is_denominator(hom.front()));
    CHECK(dr.homset(1, 0).empty());
  }

  TEST_CASE("lifts, underlying morphisms and the forgetful functor") {
    auto f = load_functor("E7b.functor.json");
    ReplacementCategory rc(f);
    auto const& d  = f.target->cat();
    auto const  v  = d.word_from_names({"v_left"});
    auto const  s  = *rc.find_triple({*d.object_index("tl"), 2, d.word_from_names({"u"})});
    auto const  t  = *rc.find_triple({*d.object_index("bl"), 0, v});
    auto const  w  = rc.lift(v, s, t);
    CHECK(f.target->same(rc.underlying(w), v));
    auto u = rc.forgetful();
    CHECK(f.target->same(u(w), v));
    CHECK(rc.model().is_denominator(w));
  }

  TEST_CASE("structure choice functor") {
    auto f = load_functor("E7b.functor.json");
    ReplacementCategory rc(f);
    auto r  = read_choice_file(fixture("E7b.alt.choice.json"), f);
    auto sc = structure_choice_functor(rc, r);
    auto uc = compose(sc.c_r, rc.forgetful());
    auto id = identity_functor(f.target);
    CHECK(uc.object_map == id.object_map);
    CHECK(uc.generator_map == id.generator_map);
    for (std::size_t t = 0; t < sc.alpha_bar.components.size(); ++t) {
      auto const& c = sc.alpha_bar.components[t];
      CHECK(f.target->same(rc.underlying(c), Word::identity(rc.triples()[t].target)));
    }
  }

  TEST_CASE("invalid choices are rejected") {
    auto f = load_functor("E7b.functor.json");
    auto r = auto_choice(ReplacementCategory(f));
    auto bad = r;
    bad[*f.target->cat().object_index("bl")].q = Word::identity(0);
    CHECK_THROWS_AS(validate_choice(f, bad), PreconditionError);
    auto missing = Json::parse(R"({"tl": {"x": "x0", "q": []}})");
    CHECK_THROWS_AS(decode_choice(missing, "inline", f), PreconditionError);
    auto unknown = Json::parse(R"({"tl": {"x": "nowhere", "q": []}})");
    CHECK_THROWS_AS(decode_choice(unknown, "inline", f), PreconditionError);
  }

  TEST_CASE("canonical lift") {
    auto f = load_functor("E7.functor.json");
    ReplacementCategory rc(f);
    auto lift = canonical_lift(rc);
    CHECK(same_on_generators(compose(lift, rc.forgetful()), f));
    CHECK_FALSE(canonical_lift_density_witness(rc, lift));
  }

  TEST_CASE("composition of replacements") {
    // Along id then F on E2: (b, •, d) composed with the trivial replacement.
    auto f  = load_functor("E2.functor.json");
    auto id = identity_functor(f.target);
    SReplacement outer{1, 1, Word::identity(1)};
    auto inner = find_s_replacements(f, 1).front();
    auto r = compose_replacement(outer, inner, f, id);
    CHECK(r.target == 1);
    CHECK(f.target->show(r.q) == "d");
    auto e6 = load_functor("E6.functor.json");
    CHECK_THROWS_AS(compose_replacement(outer, inner, e6, identity_functor(e6.target)),
                    PreconditionError);
  }
}
