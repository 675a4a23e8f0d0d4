#include "loccat/replacement.hpp"

#include <set>

#include "loccat/errors.hpp"

namespace loccat {

  std::string to_string(FunctorData const& f, SReplacement const& r) {
    return "(" + f.target->cat().object_name(r.target) + ", "
           + f.source->cat().object_name(r.source) + ", "
           + f.target->show(r.q) + ")";
  }

  std::vector<SReplacement> find_s_replacements(FunctorData const& f,
                                                ObjIndex           y) {
    auto const&               d = *f.target;
    std::vector<SReplacement> out;
    for (ObjIndex x = 0; x < f.source->cat().number_of_objects(); ++x) {
      for (auto const& q : d.homset(f(x), y)) {
        if (d.is_denominator(q)) {
          out.push_back({y, x, q});
        }
      }
    }
    return out;
  }

  std::optional<ObjIndex> enough_witness(FunctorData const& f) {
    for (ObjIndex y = 0; y < f.target->cat().number_of_objects(); ++y) {
      if (find_s_replacements(f, y).empty()) {
        return y;
      }
    }
    return std::nullopt;
  }

  std::optional<ObjIndex> trivial_witness(FunctorData const& f) {
    for (ObjIndex x = 0; x < f.source->cat().number_of_objects(); ++x) {
      if (!f.target->is_denominator(Word::identity(f(x)))) {
        return x;
      }
    }
    return std::nullopt;
  }

  SReplacement compose_replacement(SReplacement const& outer,
                                   SReplacement const& inner,
                                   FunctorData const&  f,
                                   FunctorData const&  g) {
    auto const& e = *g.target;
    if (auto w = multiplicativity_witness(e)) {
      throw PreconditionError("multiplicativity", *w);
    }
    if (inner.target != outer.source || f(inner.source) != inner.q.src()) {
      throw UsageError("replacements do not chain");
    }
    auto q = e.normalize(compose(g(inner.q), outer.q));
    if (!e.is_denominator(q)) {
      throw TheoremViolation("composite replacement " + e.show(q)
                             + " is not a denominator");
    }
    return {outer.target, inner.source, q};
  }

  SReplacement project_replacement(SReplacement const& r,
                                   FunctorData const&  f) {
    return {r.target, f(r.source), r.q};
  }

  ////////////////////////////////////////////////////////////////////////
  // ReplacementCategory
  ////////////////////////////////////////////////////////////////////////

  ReplacementCategory::ReplacementCategory(FunctorData f) : f_(std::move(f)) {
    auto const& d = *f_.target;
    auto const& p = d.cat();
    auto const  n = p.number_of_objects();
    over_.resize(n);
    replaceable_.assign(n, false);
    for (ObjIndex y = 0; y < n; ++y) {
      for (auto& r : find_s_replacements(f_, y)) {
        over_[y].push_back(triples_.size());
        triples_.push_back(std::move(r));
      }
      replaceable_[y] = !over_[y].empty();
    }

    // Objects without replacement that some path from a replaceable object
    // enters. If such a path can come back, the full subcategory on the
    // replaceable objects is not presented by its own generators.
    std::vector<bool> entered(n, false);
    for (bool changed = true; changed;) {
      changed = false;
      for (auto const& g : p.generators()) {
        if ((replaceable_[g.src] || entered[g.src]) && !replaceable_[g.dst]
            && !entered[g.dst]) {
          entered[g.dst] = changed = true;
        }
      }
    }
    for (auto const& g : p.generators()) {
      if (entered[g.src] && replaceable_[g.dst]) {
        table_ = true;
      }
    }

    CatWithDenoms dr;
    auto index = [](std::size_t t) { return std::to_string(t); };
    for (auto const& t : triples_) {
      dr.cat.add_object(to_string(f_, t));
    }
    auto add = [&](std::string name, std::size_t t, std::size_t s, Word u) {
      auto g = dr.cat.add_generator(
          name + "[" + index(t) + "→" + index(s) + "]",
          static_cast<ObjIndex>(t),
          static_cast<ObjIndex>(s));
      underlying_.push_back(std::move(u));
      return g;
    };

    if (!table_) {
      for (GenIndex g = 0; g < p.number_of_generators(); ++g) {
        auto const& gen = p.generator(g);
        auto const  gw  = p.generator_word(g);
        for (auto t : over_[gen.src]) {
          for (auto s : over_[gen.dst]) {
            lifted_[{gw, t, s}] = add(gen.name, t, s, gw);
          }
        }
      }
      for (ObjIndex y = 0; y < n; ++y) {
        for (auto t : over_[y]) {
          for (auto s : over_[y]) {
            if (t != s) {
              transport_[{t, s}]
                  = add("1_" + p.object_name(y), t, s, Word::identity(y));
            }
          }
        }
      }
      auto word = [](std::size_t t, std::size_t s, std::vector<GenIndex> l) {
        return Word(static_cast<ObjIndex>(t), static_cast<ObjIndex>(s), l);
      };
      for (ObjIndex y = 0; y < n; ++y) {
        for (auto t : over_[y]) {
          for (auto s : over_[y]) {
            for (auto u : over_[y]) {
              if (t == s || s == u) {
                continue;
              }
              auto lhs = word(t, u, {transport_[{t, s}], transport_[{s, u}]});
              dr.cat.add_relation(lhs,
                                  t == u ? Word::identity(t)
                                         : word(t, u, {transport_[{t, u}]}));
            }
          }
        }
      }
      for (auto const& [key, g] : lifted_) {
        auto const& [gw, t, s] = key;
        auto const c           = over_[triples_[t].target].front();
        auto const c_prime     = over_[triples_[s].target].front();
        if (t == c && s == c_prime) {
          continue;
        }
        std::vector<GenIndex> letters;
        if (t != c) {
          letters.push_back(transport_[{t, c}]);
        }
        letters.push_back(lifted_[{gw, c, c_prime}]);
        if (s != c_prime) {
          letters.push_back(transport_[{c_prime, s}]);
        }
        dr.cat.add_relation(word(t, s, {g}), word(t, s, letters));
      }
      for (auto const& r : p.relations()) {
        if (!replaceable_[r.lhs.src()] || !replaceable_[r.lhs.dst()]) {
          continue;
        }
        auto const c       = over_[r.lhs.src()].front();
        auto const c_prime = over_[r.lhs.dst()].front();
        dr.cat.add_relation(lift(r.lhs, c, c_prime), lift(r.rhs, c, c_prime));
      }
    } else {
      for (std::size_t t = 0; t < triples_.size(); ++t) {
        for (std::size_t s = 0; s < triples_.size(); ++s) {
          for (auto const& m :
               d.homset(triples_[t].target, triples_[s].target)) {
            if (t == s && m.is_identity()) {
              continue;
            }
            lifted_[{m, t, s}] = add(d.show(m), t, s, m);
          }
        }
      }
      for (GenIndex a = 0; a < underlying_.size(); ++a) {
        for (GenIndex b = 0; b < underlying_.size(); ++b) {
          auto const& ga = dr.cat.generator(a);
          auto const& gb = dr.cat.generator(b);
          if (ga.dst != gb.src) {
            continue;
          }
          auto const m = d.normalize(compose(underlying_[a], underlying_[b]));
          dr.cat.add_relation(Word(ga.src, gb.dst, {a, b}),
                              lift(m, ga.src, gb.dst));
        }
      }
    }

    for (std::size_t t = 0; t < triples_.size(); ++t) {
      for (std::size_t s = 0; s < triples_.size(); ++s) {
        for (auto const& m :
             d.homset(triples_[t].target, triples_[s].target)) {
          if ((t != s || !m.is_identity()) && d.is_denominator(m)) {
            dr.denoms.explicit_words.push_back(lift(m, t, s));
          }
        }
      }
    }
    dr.denoms.include_identities      = d.denoms().include_identities;
    dr.denoms.close_under_composition = d.denoms().close_under_composition;
    model_ = CategoryModel::make(std::move(dr), d.limits());
  }

  std::optional<std::size_t>
  ReplacementCategory::find_triple(SReplacement const& r) const {
    if (r.target >= over_.size()) {
      return std::nullopt;
    }
    for (auto t : over_[r.target]) {
      auto const& c = triples_[t];
      if (c.source == r.source && c.q.parallel_to(r.q)
          && f_.target->same(c.q, r.q)) {
        return t;
      }
    }
    return std::nullopt;
  }

  Word ReplacementCategory::lift(Word const&  m,
                                 std::size_t t,
                                 std::size_t t_prime) const {
    auto const& d = *f_.target;
    if (m.src() != triples_.at(t).target
        || m.dst() != triples_.at(t_prime).target) {
      throw UsageError("lift of " + d.show(m) + " between wrong triples");
    }
    auto const src = static_cast<ObjIndex>(t);
    auto const dst = static_cast<ObjIndex>(t_prime);
    if (table_) {
      auto nf = d.normalize(m);
      if (nf.is_identity() && t == t_prime) {
        return Word::identity(src);
      }
      return Word(src, dst, {lifted_.at({nf, t, t_prime})});
    }
    if (m.is_identity()) {
      if (t == t_prime) {
        return Word::identity(src);
      }
      return Word(src, dst, {transport_.at({t, t_prime})});
    }
    auto const&           p = d.cat();
    std::vector<GenIndex> letters;
    std::size_t           at = t;
    for (std::size_t i = 0; i < m.length(); ++i) {
      auto const g    = m.letters()[i];
      auto const next = i + 1 == m.length()
                            ? t_prime
                            : over_.at(p.generator(g).dst).front();
      letters.push_back(lifted_.at({p.generator_word(g), at, next}));
      at = next;
    }
    return Word(src, dst, std::move(letters));
  }

  Word ReplacementCategory::underlying(Word const& w) const {
    return f_.target->normalize(forgetful()(w));
  }

  FunctorData ReplacementCategory::forgetful() const {
    FunctorData u{model_, f_.target, {}, underlying_};
    for (auto const& t : triples_) {
      u.object_map.push_back(t.target);
    }
    return u;
  }

  ////////////////////////////////////////////////////////////////////////
  // Choices
  ////////////////////////////////////////////////////////////////////////

  ReplacementChoice auto_choice(ReplacementCategory const& rc) {
    auto const&       d = rc.base_functor().target->cat();
    ReplacementChoice r;
    for (ObjIndex y = 0; y < d.number_of_objects(); ++y) {
      auto const& over = rc.triples_over(y);
      if (over.empty()) {
        throw PreconditionError("enough S-replacements", d.object_name(y));
      }
      r.push_back(rc.triples()[over.front()]);
    }
    return r;
  }

  void validate_choice(FunctorData const& f, ReplacementChoice const& r) {
    auto const& d = *f.target;
    auto const& c = f.source->cat();
    if (r.size() != d.cat().number_of_objects()) {
      throw PreconditionError("valid choice",
                              "choice does not cover every object");
    }
    for (ObjIndex y = 0; y < r.size(); ++y) {
      auto const& name = d.cat().object_name(y);
      auto const& e    = r[y];
      if (e.target != y || e.source >= c.number_of_objects()) {
        throw PreconditionError("valid choice", name + ": malformed entry");
      }
      if (e.q.src() != f(e.source) || e.q.dst() != y) {
        throw PreconditionError("valid choice",
                                name + ": " + d.show(e.q)
                                    + " does not run from F "
                                    + c.object_name(e.source));
      }
      if (!d.is_denominator(e.q)) {
        throw PreconditionError(
            "valid choice", name + ": " + d.show(e.q) + " is not a denominator");
      }
    }
  }

  StructureChoice structure_choice_functor(ReplacementCategory const& rc,
                                           ReplacementChoice const&   r) {
    auto const& f = rc.base_functor();
    validate_choice(f, r);
    auto const& d = *f.target;
    auto const& p = d.cat();

    StructureChoice out;
    for (auto const& e : r) {
      auto t = rc.find_triple(e);
      if (!t) {
        throw TheoremViolation("replacement " + to_string(f, e)
                               + " missing from the replacement category");
      }
      out.chosen.push_back(*t);
    }
    out.c_r = FunctorData{f.target, rc.model_ptr(), {}, {}};
    for (auto t : out.chosen) {
      out.c_r.object_map.push_back(static_cast<ObjIndex>(t));
    }
    for (GenIndex g = 0; g < p.number_of_generators(); ++g) {
      auto const& gen = p.generator(g);
      out.c_r.generator_map.push_back(rc.lift(
          p.generator_word(g), out.chosen[gen.src], out.chosen[gen.dst]));
    }

    auto const u    = rc.forgetful();
    auto const back = compose(out.c_r, u);
    for (ObjIndex y = 0; y < p.number_of_objects(); ++y) {
      if (back.object_map[y] != y) {
        throw TheoremViolation("U∘C_R moves object " + p.object_name(y));
      }
    }
    for (GenIndex g = 0; g < p.number_of_generators(); ++g) {
      if (back.generator_map[g] != p.generator_word(g)) {
        throw TheoremViolation("U∘C_R moves generator "
                               + p.generator_name(g));
      }
    }

    out.alpha_bar.from = compose(u, out.c_r);
    out.alpha_bar.to   = identity_functor(rc.model_ptr());
    for (std::size_t t = 0; t < rc.triples().size(); ++t) {
      auto const y = rc.triples()[t].target;
      out.alpha_bar.components.push_back(
          rc.lift(Word::identity(y), out.chosen[y], t));
    }
    if (auto w = naturality_witness(out.alpha_bar)) {
      throw TheoremViolation("C_R∘U -> id is not natural at " + *w);
    }
    return out;
  }

  FunctorData canonical_lift(ReplacementCategory const& rc) {
    auto const& f = rc.base_functor();
    auto const& c = f.source->cat();
    FunctorData lift{f.source, rc.model_ptr(), {}, {}};
    for (ObjIndex x = 0; x < c.number_of_objects(); ++x) {
      SReplacement trivial{f(x), x, Word::identity(f(x))};
      auto         t = rc.find_triple(trivial);
      if (!t) {
        throw PreconditionError("all trivial S-replacements",
                                f.target->show(trivial.q));
      }
      lift.object_map.push_back(static_cast<ObjIndex>(*t));
    }
    for (GenIndex g = 0; g < c.number_of_generators(); ++g) {
      auto const& gen = c.generator(g);
      lift.generator_map.push_back(rc.lift(f.target->normalize(f.generator_map[g]),
                                           lift.object_map[gen.src],
                                           lift.object_map[gen.dst]));
    }
    if (!same_on_generators(compose(lift, rc.forgetful()), f)) {
      throw TheoremViolation("U∘F̄ differs from F");
    }
    return lift;
  }

  std::optional<std::string>
  canonical_lift_density_witness(ReplacementCategory const& rc,
                                 FunctorData const&         lift) {
    for (std::size_t t = 0; t < rc.triples().size(); ++t) {
      auto const& r = rc.triples()[t];
      auto const  m = rc.lift(r.q, lift(r.source), t);
      if (!rc.model().is_denominator(m)) {
        return rc.model().cat().object_name(static_cast<ObjIndex>(t));
      }
    }
    return std::nullopt;
  }

}  // namespace loccat
