#include "loccat/gz.hpp"

#include <algorithm>

#include "loccat/errors.hpp"

namespace loccat {

  std::string inverse_name(Presentation const& p, Word const& w) {
    std::string name = w.length() == 1 ? p.to_string(w) + "_inv"
                                       : "inv(" + p.to_string(w) + ")";
    while (p.generator_index(name)) {
      name += "'";
    }
    return name;
  }

  LocalisedCategory::LocalisedCategory(ModelPtr base) : base_(std::move(base)) {
    auto const&   c = base_->data();
    CatWithDenoms ext;
    for (auto const& x : c.cat.objects()) {
      ext.cat.add_object(x);
    }
    for (auto const& g : c.cat.generators()) {
      ext.cat.add_generator(g.name, g.src, g.dst);
    }
    for (auto const& r : c.cat.relations()) {
      ext.cat.add_relation(r.lhs, r.rhs);
    }
    std::map<Word, GenIndex> seen;
    for (auto const& w : c.denoms.explicit_words) {
      auto it = seen.find(w);
      if (it == seen.end()) {
        auto const name = inverse_name(ext.cat, w);
        auto const inv  = ext.cat.add_generator(name, w.dst(), w.src());
        auto const iw   = ext.cat.generator_word(inv);
        ext.cat.add_relation(compose(w, iw), Word::identity(w.src()));
        ext.cat.add_relation(compose(iw, w), Word::identity(w.dst()));
        inverted_.push_back(w);
        it = seen.emplace(w, inv).first;
      }
      letter_of_.push_back(it->second);
    }
    ext.denoms = c.denoms;
    model_     = CategoryModel::make(std::move(ext), base_->limits());
  }

  Word const& LocalisedCategory::inverted_word(GenIndex g) const {
    if (!is_inverse_letter(g)) {
      throw UsageError("not an inverse letter");
    }
    return inverted_.at(g - base_->cat().number_of_generators());
  }

  Word LocalisedCategory::loc(Word const& w) const {
    return model_->normalize(w);
  }

  FunctorData LocalisedCategory::loc_functor() const {
    FunctorData f{base_, model_, {}, {}};
    for (ObjIndex x = 0; x < base_->cat().number_of_objects(); ++x) {
      f.object_map.push_back(x);
    }
    for (GenIndex g = 0; g < base_->cat().number_of_generators(); ++g) {
      f.generator_map.push_back(base_->cat().generator_word(g));
    }
    return f;
  }

  FunctorData extend_to_localisation(FunctorData const&       values,
                                     LocalisedCategory const& lc_src) {
    auto const& target = *values.target;
    FunctorData out{lc_src.model_ptr(), values.target, values.object_map, {}};
    for (auto const& w : values.generator_map) {
      out.generator_map.push_back(target.normalize(w));
    }
    auto const n = lc_src.model().cat().number_of_generators();
    for (GenIndex g = lc_src.base().cat().number_of_generators(); g < n; ++g) {
      auto const& w   = lc_src.inverted_word(g);
      auto const  img = target.normalize(values(w));
      auto const  inv = target.find_inverse(img);
      if (!inv) {
        throw PreconditionError(
            "denominators become invertible",
            lc_src.base().show(w) + " maps to " + target.show(img)
                + ", which has no inverse");
      }
      out.generator_map.push_back(*inv);
    }
    return out;
  }

  FunctorData induced_functor(FunctorData const&       f,
                              LocalisedCategory const& lc_src,
                              LocalisedCategory const& lc_tgt) {
    FunctorData values{lc_src.base_ptr(), lc_tgt.model_ptr(), f.object_map,
                       f.generator_map};
    return extend_to_localisation(values, lc_src);
  }

  std::optional<std::string>
  induced_square_witness(FunctorData const&       f,
                         FunctorData const&       gz_f,
                         LocalisedCategory const& lc_src,
                         LocalisedCategory const& lc_tgt) {
    auto const& src = lc_src.base().cat();
    for (GenIndex g = 0; g < src.number_of_generators(); ++g) {
      auto const lhs = lc_tgt.loc(f.generator_map[g]);
      auto const rhs = gz_f(lc_src.loc(src.generator_word(g)));
      if (!lc_tgt.model().same(lhs, rhs)) {
        return src.generator_name(g) + ": " + lc_tgt.model().show(lhs)
               + " != " + lc_tgt.model().show(rhs);
      }
    }
    return std::nullopt;
  }

  TransformationData induced_transformation(TransformationData const& t,
                                            FunctorData const&        gz_from,
                                            FunctorData const&        gz_to,
                                            LocalisedCategory const&  lc_tgt) {
    TransformationData out{gz_from, gz_to, {}};
    for (auto const& c : t.components) {
      out.components.push_back(lc_tgt.loc(c));
    }
    if (auto w = naturality_witness(out)) {
      throw TheoremViolation("induced transformation is not natural at " + *w);
    }
    return out;
  }

  ZigzagView zigzag_view(LocalisedCategory const& lc, Word const& w) {
    auto const& p = lc.model().cat();
    ZigzagView  z;
    std::vector<GenIndex> forward;
    ObjIndex              at    = w.src();
    ObjIndex              start = w.src();
    auto const&           letters = w.letters();
    for (std::size_t i = 0; i < letters.size();) {
      if (!lc.is_inverse_letter(letters[i])) {
        forward.push_back(letters[i]);
        at = p.generator(letters[i]).dst;
        ++i;
        continue;
      }
      ZigzagSegment seg;
      seg.forward = Word(start, at, forward);
      forward.clear();
      // inv(d1)·inv(d2) is the inverse of d2·d1.
      Word den = Word::identity(at);
      while (i < letters.size() && lc.is_inverse_letter(letters[i])) {
        seg.parts.push_back(letters[i]);
        den = compose(lc.inverted_word(letters[i]), den);
        at  = p.generator(letters[i]).dst;
        ++i;
      }
      seg.denominator = den;
      z.segments.push_back(std::move(seg));
      start = at;
    }
    z.tail = Word(start, w.dst(), forward);
    return z;
  }

  Word recompose(LocalisedCategory const& lc, ZigzagView const& z) {
    auto const& p = lc.model().cat();
    std::optional<Word> out;
    auto append = [&](Word const& w) {
      out = out ? compose(*out, w) : w;
    };
    for (auto const& seg : z.segments) {
      append(seg.forward);
      append(p.make_word(seg.forward.dst(), seg.parts));
    }
    append(z.tail);
    return *out;
  }

  std::string to_string(LocalisedCategory const& lc, ZigzagView const& z) {
    auto const& base = lc.base();
    std::string out;
    for (auto const& seg : z.segments) {
      out += "(" + base.show(seg.forward) + " ; " + base.show(seg.denominator)
             + ") ";
    }
    return out + base.show(z.tail);
  }

}  // namespace loccat
