#include "loccat/functor.hpp"

#include "loccat/errors.hpp"

namespace loccat {

  Word FunctorData::operator()(Word const& w) const {
    Word out = Word::identity(object_map.at(w.src()));
    for (GenIndex g : w.letters()) {
      out = loccat::compose(out, generator_map.at(g));
    }
    return out;
  }

  ValidationReport validate_functor_shape(RawFunctor const&   raw,
                                          Presentation const& source,
                                          Presentation const& target) {
    ValidationReport report;
    for (auto const& [x, y] : raw.object_map) {
      if (!source.object_index(x)) {
        report.add("unknown object", "object_map key " + x);
      }
      if (!target.object_index(y)) {
        report.add("unknown object", "object_map value " + y);
      }
    }
    for (auto const& x : source.objects()) {
      if (!raw.object_map.count(x)) {
        report.add("partial object map", x);
      }
    }
    for (auto const& [name, word] : raw.generator_map) {
      if (!source.generator_index(name)) {
        report.add("unknown generator", "generator_map key " + name);
      }
      for (auto const& letter : word) {
        if (!target.generator_index(letter)) {
          report.add("unknown generator", name + " image uses " + letter);
        }
      }
    }
    for (auto const& g : source.generators()) {
      if (!raw.generator_map.count(g.name)) {
        report.add("partial generator map", g.name);
      }
    }
    if (!report.ok()) {
      return report;
    }
    for (auto const& g : source.generators()) {
      auto const& names = raw.generator_map.at(g.name);
      auto const  fx    = *target.object_index(raw.object_map.at(
          source.object_name(g.src)));
      auto const fy = *target.object_index(raw.object_map.at(
          source.object_name(g.dst)));
      try {
        auto w = target.word_from_names(names, fx);
        if (w.src() != fx || w.dst() != fy) {
          report.add("endpoint mismatch",
                     g.name + " maps to " + target.to_string(w) + " but needs "
                         + target.object_name(fx) + " -> "
                         + target.object_name(fy));
        }
      } catch (UsageError const&) {
        report.add("endpoint mismatch", g.name + " maps to a non-path");
      }
    }
    return report;
  }

  FunctorData build_functor(RawFunctor const& raw,
                            ModelPtr          source,
                            ModelPtr          target) {
    auto report = validate_functor_shape(raw, source->cat(), target->cat());
    if (!report.ok()) {
      auto const& v = report.violations.front();
      throw PreconditionError(v.kind, v.message);
    }
    FunctorData f{source, target, {}, {}};
    for (auto const& x : source->cat().objects()) {
      f.object_map.push_back(*target->cat().object_index(raw.object_map.at(x)));
    }
    for (auto const& g : source->cat().generators()) {
      f.generator_map.push_back(target->cat().word_from_names(
          raw.generator_map.at(g.name), f.object_map[g.src]));
    }
    return f;
  }

  RawFunctor to_raw(FunctorData const& f) {
    RawFunctor raw;
    auto const& s = f.source->cat();
    auto const& t = f.target->cat();
    for (ObjIndex x = 0; x < s.number_of_objects(); ++x) {
      raw.object_map[s.object_name(x)] = t.object_name(f.object_map[x]);
    }
    for (GenIndex g = 0; g < s.number_of_generators(); ++g) {
      raw.generator_map[s.generator_name(g)] = t.names(f.generator_map[g]);
    }
    return raw;
  }

  FunctorData identity_functor(ModelPtr c) {
    FunctorData f{c, c, {}, {}};
    for (ObjIndex x = 0; x < c->cat().number_of_objects(); ++x) {
      f.object_map.push_back(x);
    }
    for (GenIndex g = 0; g < c->cat().number_of_generators(); ++g) {
      f.generator_map.push_back(c->cat().generator_word(g));
    }
    return f;
  }

  FunctorData compose(FunctorData const& f, FunctorData const& g) {
    FunctorData h{f.source, g.target, {}, {}};
    for (ObjIndex fx : f.object_map) {
      h.object_map.push_back(g(fx));
    }
    for (auto const& w : f.generator_map) {
      h.generator_map.push_back(g.target->normalize(g(w)));
    }
    return h;
  }

  ValidationReport check_relations_preserved(FunctorData const& f) {
    ValidationReport report;
    auto const&      t = *f.target;
    for (auto const& r : f.source->cat().relations()) {
      auto lhs = f(r.lhs);
      auto rhs = f(r.rhs);
      if (!t.same(lhs, rhs)) {
        report.add("relation not preserved",
                   f.source->show(r.lhs) + " = " + f.source->show(r.rhs)
                       + " maps to " + t.show(lhs) + " != " + t.show(rhs));
      }
    }
    return report;
  }

  ValidationReport check_denominators_preserved(FunctorData const& f) {
    ValidationReport report;
    auto const&      s = *f.source;
    auto const&      t = *f.target;
    auto check = [&](Word const& w) {
      if (!t.is_denominator(f(w))) {
        report.add("denominator not preserved",
                   s.show(w) + " maps to " + t.show(f(w)));
      }
    };
    if (s.denoms().include_identities) {
      for (ObjIndex x = 0; x < s.cat().number_of_objects(); ++x) {
        check(Word::identity(x));
      }
    }
    for (auto const& w : s.denoms().explicit_words) {
      check(w);
    }
    bool const target_closes = t.denoms().close_under_composition;
    if (s.denoms().close_under_composition && !target_closes) {
      if (!s.denominator_closure_complete()) {
        throw UndecidedError("closure of the source denominators",
                             "max_homset");
      }
      for (auto const& w : s.denominator_closure()) {
        check(w);
      }
    }
    return report;
  }

  ValidationReport validate_functor(FunctorData const& f) {
    ValidationReport report;
    auto const&      s = f.source->cat();
    auto const&      t = f.target->cat();
    if (f.object_map.size() != s.number_of_objects()
        || f.generator_map.size() != s.number_of_generators()) {
      report.add("partial map", "functor maps do not cover the source");
      return report;
    }
    for (GenIndex g = 0; g < s.number_of_generators(); ++g) {
      auto const& gen = s.generator(g);
      auto const& img = f.generator_map[g];
      if (img.src() != f.object_map[gen.src]
          || img.dst() != f.object_map[gen.dst]) {
        report.add("endpoint mismatch",
                   gen.name + " maps to " + t.to_string(img));
      }
    }
    if (!report.ok()) {
      return report;
    }
    report.append(check_relations_preserved(f));
    report.append(check_denominators_preserved(f));
    return report;
  }

  std::optional<std::string> reflection_witness(FunctorData const& f) {
    auto const& s = *f.source;
    auto const  n = s.cat().number_of_objects();
    for (ObjIndex x = 0; x < n; ++x) {
      for (ObjIndex y = 0; y < n; ++y) {
        for (auto const& w : s.homset(x, y)) {
          if (f.target->is_denominator(f(w)) && !s.is_denominator(w)) {
            return s.show(w);
          }
        }
      }
    }
    return std::nullopt;
  }

  std::optional<std::string> naturality_witness(TransformationData const& t) {
    auto const& src = t.from.source->cat();
    auto const& tgt = *t.from.target;
    if (t.components.size() != src.number_of_objects()) {
      throw UsageError("transformation components do not cover the source");
    }
    for (ObjIndex x = 0; x < src.number_of_objects(); ++x) {
      auto const& c = t.components[x];
      if (c.src() != t.from(x) || c.dst() != t.to(x)) {
        throw UsageError("component at " + src.object_name(x)
                         + " has the wrong endpoints");
      }
    }
    for (GenIndex g = 0; g < src.number_of_generators(); ++g) {
      auto const& gen = src.generator(g);
      auto lhs = compose(t.from.generator_map[g], t.components[gen.dst]);
      auto rhs = compose(t.components[gen.src], t.to.generator_map[g]);
      if (!tgt.same(lhs, rhs)) {
        return gen.name + ": " + tgt.show(lhs) + " != " + tgt.show(rhs);
      }
    }
    return std::nullopt;
  }

  bool same_on_generators(FunctorData const& f, FunctorData const& g) {
    if (f.object_map != g.object_map
        || f.generator_map.size() != g.generator_map.size()) {
      return false;
    }
    for (std::size_t i = 0; i < f.generator_map.size(); ++i) {
      if (!f.target->same(f.generator_map[i], g.generator_map[i])) {
        return false;
      }
    }
    return true;
  }

}  // namespace loccat
