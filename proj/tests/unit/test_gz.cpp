#include <doctest.h>

#include "loccat/errors.hpp"
#include "loccat/gz.hpp"
#include "support.hpp"

using namespace loccat;
using namespace testing_support;

TEST_SUITE("gz") {
  TEST_CASE("E2 localisation makes d invertible") {
    auto lc = localise(load_model("E2.cat.json"));
    auto const& m = lc->model();
    auto const& p = m.cat();
    CHECK(lc->number_of_inverse_letters() == 1);
    CHECK(p.generator_name(1) == "d_inv");
    CHECK(p.objects() == lc->base().cat().objects());
    auto d = p.word_from_names({"d"});
    CHECK(m.show(*m.find_inverse(d)) == "d_inv");
    auto const a = *p.object_index("a"), b = *p.object_index("b");
    REQUIRE(m.homset(a, a).size() == 1);
    CHECK(m.show(m.homset(b, a).front()) == "d_inv");
    CHECK(m.homset(b, b).size() == 1);
  }

  TEST_CASE("identity denominators leave hom-sets unchanged") {
    auto base = load_model("E7.source.cat.json");
    auto lc   = localise(base);
    CHECK(lc->number_of_inverse_letters() == 0);
    for (ObjIndex x = 0; x < 2; ++x) {
      for (ObjIndex y = 0; y < 2; ++y) {
        CHECK(lc->model().homset(x, y).size() == base->homset(x, y).size());
      }
    }
  }

  TEST_CASE("composite denominators get one inverse letter") {
    RawCategory raw;
    raw.objects           = {"a", "b", "c"};
    raw.generators        = {{"d", "a", "b"}, {"e", "b", "c"}};
    raw.denominator_words = {{"d", "e"}, {"d", "e"}};
    auto lc = localise(CategoryModel::make(build_category(raw), {}));
    CHECK(lc->number_of_inverse_letters() == 1);
    CHECK(lc->model().cat().generator_name(2) == "inv(d·e)");
    CHECK(lc->inverse_letter(0) == lc->inverse_letter(1));
  }

  TEST_CASE("induced functor and square") {
    auto f    = load_functor("E7b.functor.json");
    auto lc_c = localise(f.source);
    auto lc_d = localise(f.target);
    auto gz   = induced_functor(f, *lc_c, *lc_d);
    CHECK_FALSE(induced_square_witness(f, gz, *lc_c, *lc_d));
    auto i_inv = *lc_c->model().cat().generator_index("i_inv");
    CHECK(lc_d->model().show(gz.generator_map[i_inv]) == "u_inv");
  }

  TEST_CASE("extension fails when a denominator maps to a non-isomorphism") {
    auto f = load_functor("E7.functor.json");
    // Send x0 -> x1 into a category where its image is not inverted.
    RawCategory raw = to_raw(f.source->data());
    raw.denominator_words = {{"h"}};
    auto c = CategoryModel::make(build_category(raw), {});
    FunctorData g{c, f.target, f.object_map, f.generator_map};
    auto lc_c = localise(c);
    auto lc_d = localise(f.target);
    CHECK_THROWS_AS(induced_functor(g, *lc_c, *lc_d), PreconditionError);
  }

  TEST_CASE("induced transformation of the identity") {
    auto f  = load_functor("E5.functor.json");
    auto lc = localise(f.target);
    auto gz = induced_functor(f, *lc, *lc);
    TransformationData t{f, f, {Word::identity(0)}};
    auto out = induced_transformation(t, gz, gz, *lc);
    CHECK(out.components.front().is_identity());
  }

  TEST_CASE("zigzag views recompose") {
    auto lc = localise(load_model("E7.cat.json"));
    auto const& m = lc->model();
    auto const& p = m.cat();
    auto w = p.word_from_names({"v_left", "h_bot", "v_right_inv"});
    auto z = zigzag_view(*lc, w);
    REQUIRE(z.segments.size() == 1);
    CHECK(to_string(*lc, z) == "(v_left·h_bot ; v_right) 1_tr");
    CHECK(recompose(*lc, z) == w);

    auto two = p.word_from_names({"v_left_inv", "v_left"});
    auto z2  = zigzag_view(*lc, two);
    CHECK(to_string(*lc, z2) == "(1_bl ; v_left) v_left");
    CHECK(recompose(*lc, z2) == two);
  }
}
