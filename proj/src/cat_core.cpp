#include "loccat/cat_core.hpp"

#include <algorithm>
#include <set>

#include "loccat/errors.hpp"

namespace loccat {

  std::strong_ordering operator<=>(Word const& a, Word const& b) {
    if (auto c = a.length() <=> b.length(); c != 0) {
      return c;
    }
    if (auto c = a.letters_ <=> b.letters_; c != 0) {
      return c;
    }
    if (auto c = a.src_ <=> b.src_; c != 0) {
      return c;
    }
    return a.dst_ <=> b.dst_;
  }

  Word compose(Word const& a, Word const& b) {
    if (a.dst() != b.src()) {
      throw UsageError("cannot compose words with mismatched endpoints");
    }
    std::vector<GenIndex> letters;
    letters.reserve(a.length() + b.length());
    letters.insert(letters.end(), a.letters().begin(), a.letters().end());
    letters.insert(letters.end(), b.letters().begin(), b.letters().end());
    return Word(a.src(), b.dst(), std::move(letters));
  }

  ////////////////////////////////////////////////////////////////////////
  // Presentation
  ////////////////////////////////////////////////////////////////////////

  ObjIndex Presentation::add_object(std::string name) {
    if (name.empty()) {
      throw UsageError("object names must be nonempty");
    }
    auto const index = static_cast<ObjIndex>(objects_.size());
    if (!object_lookup_.emplace(name, index).second) {
      throw UsageError("duplicate object " + name);
    }
    objects_.push_back(std::move(name));
    return index;
  }

  GenIndex Presentation::add_generator(std::string name,
                                       ObjIndex    src,
                                       ObjIndex    dst) {
    if (name.empty()) {
      throw UsageError("generator names must be nonempty");
    }
    if (src >= objects_.size() || dst >= objects_.size()) {
      throw UsageError("generator " + name + " has an unknown endpoint");
    }
    auto const index = static_cast<GenIndex>(generators_.size());
    if (!generator_lookup_.emplace(name, index).second) {
      throw UsageError("duplicate generator " + name);
    }
    generators_.push_back({std::move(name), src, dst});
    return index;
  }

  void Presentation::add_relation(Word lhs, Word rhs) {
    if (!lhs.parallel_to(rhs)) {
      throw UsageError("relation sides are not parallel");
    }
    relations_.push_back({std::move(lhs), std::move(rhs)});
  }

  std::optional<ObjIndex>
  Presentation::object_index(std::string const& name) const {
    auto it = object_lookup_.find(name);
    if (it == object_lookup_.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  std::optional<GenIndex>
  Presentation::generator_index(std::string const& name) const {
    auto it = generator_lookup_.find(name);
    if (it == generator_lookup_.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  std::string const& Presentation::object_name(ObjIndex x) const {
    return objects_.at(x);
  }

  std::string const& Presentation::generator_name(GenIndex g) const {
    return generators_.at(g).name;
  }

  Generator const& Presentation::generator(GenIndex g) const {
    return generators_.at(g);
  }

  Word Presentation::make_word(ObjIndex                  src,
                               std::span<GenIndex const> letters) const {
    if (src >= objects_.size()) {
      throw UsageError("unknown object index");
    }
    ObjIndex at = src;
    for (GenIndex g : letters) {
      auto const& gen = generator(g);
      if (gen.src != at) {
        throw UsageError("letters do not compose at " + gen.name);
      }
      at = gen.dst;
    }
    return Word(src, at, {letters.begin(), letters.end()});
  }

  Word Presentation::generator_word(GenIndex g) const {
    auto const& gen = generator(g);
    return Word(gen.src, gen.dst, {g});
  }

  Word Presentation::word_from_names(std::vector<std::string> const& names,
                                     std::optional<ObjIndex> identity_at) const {
    if (names.empty()) {
      if (!identity_at) {
        throw UsageError("empty word without an object");
      }
      return Word::identity(*identity_at);
    }
    std::vector<GenIndex> letters;
    letters.reserve(names.size());
    for (auto const& n : names) {
      auto g = generator_index(n);
      if (!g) {
        throw UsageError("unknown generator " + n);
      }
      letters.push_back(*g);
    }
    return make_word(generator(letters.front()).src, letters);
  }

  std::vector<std::string> Presentation::names(Word const& w) const {
    std::vector<std::string> out;
    out.reserve(w.length());
    for (GenIndex g : w.letters()) {
      out.push_back(generator_name(g));
    }
    return out;
  }

  std::string Presentation::to_string(Word const& w) const {
    if (w.is_identity()) {
      return "1_" + object_name(w.src());
    }
    std::string out;
    for (GenIndex g : w.letters()) {
      if (!out.empty()) {
        out += "·";
      }
      out += generator_name(g);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Raw syntax
  ////////////////////////////////////////////////////////////////////////

  namespace {

    std::string join(std::vector<std::string> const& names) {
      std::string out = "[";
      for (std::size_t i = 0; i < names.size(); ++i) {
        out += (i == 0 ? "" : ", ") + names[i];
      }
      return out + "]";
    }

    struct Endpoints {
      std::string src;
      std::string dst;
    };

    // Endpoints of a nonempty word, or nullopt with a violation recorded.
    std::optional<Endpoints>
    check_word(std::vector<std::string> const&            word,
               std::map<std::string, RawGenerator> const& gens,
               std::string const&                         where,
               ValidationReport&                          report) {
      std::optional<Endpoints> ends;
      for (auto const& letter : word) {
        auto it = gens.find(letter);
        if (it == gens.end()) {
          report.add("unknown generator", where + ": " + letter);
          return std::nullopt;
        }
        if (ends && ends->dst != it->second.src) {
          report.add("endpoint mismatch",
                     where + ": " + join(word) + " does not compose at "
                         + letter);
          return std::nullopt;
        }
        if (!ends) {
          ends = Endpoints{it->second.src, it->second.dst};
        } else {
          ends->dst = it->second.dst;
        }
      }
      return ends;
    }

  }  // namespace

  ValidationReport validate_presentation(RawCategory const& raw) {
    ValidationReport      report;
    std::set<std::string> objects;
    for (auto const& x : raw.objects) {
      if (x.empty()) {
        report.add("empty name", "object with empty name");
      } else if (!objects.insert(x).second) {
        report.add("duplicate object", x);
      }
    }
    std::map<std::string, RawGenerator> gens;
    for (auto const& g : raw.generators) {
      if (g.name.empty()) {
        report.add("empty name", "generator with empty name");
        continue;
      }
      if (!objects.count(g.src) || !objects.count(g.dst)) {
        report.add("unknown object",
                   "generator " + g.name + ": " + g.src + " -> " + g.dst);
        continue;
      }
      if (!gens.emplace(g.name, g).second) {
        report.add("duplicate generator", g.name);
      }
    }
    for (std::size_t i = 0; i < raw.relations.size(); ++i) {
      auto const& r     = raw.relations[i];
      auto const  where = "relation " + std::to_string(i);
      if (r.lhs.empty() && r.rhs.empty()) {
        report.add("ambiguous identity relation",
                   where + ": both sides are empty");
        continue;
      }
      std::size_t const before = report.violations.size();
      auto              lhs    = check_word(r.lhs, gens, where, report);
      auto              rhs    = check_word(r.rhs, gens, where, report);
      if (report.violations.size() != before) {
        continue;
      }
      bool parallel = true;
      if (lhs && rhs) {
        parallel = lhs->src == rhs->src && lhs->dst == rhs->dst;
      } else {
        auto const& e = lhs ? *lhs : *rhs;  // the other side is an identity
        parallel      = e.src == e.dst;
      }
      if (!parallel) {
        report.add("non-parallel relation",
                   where + ": " + join(r.lhs) + " = " + join(r.rhs));
      }
    }
    for (std::size_t i = 0; i < raw.denominator_words.size(); ++i) {
      auto const& w     = raw.denominator_words[i];
      auto const  where = "denominator " + std::to_string(i);
      if (w.empty()) {
        report.add("ambiguous identity denominator",
                   where + ": use include_identities for identities");
        continue;
      }
      check_word(w, gens, where, report);
    }
    return report;
  }

  CatWithDenoms build_category(RawCategory const& raw) {
    if (auto report = validate_presentation(raw); !report.ok()) {
      auto const& v = report.violations.front();
      throw PreconditionError(v.kind, v.message);
    }
    CatWithDenoms c;
    for (auto const& x : raw.objects) {
      c.cat.add_object(x);
    }
    for (auto const& g : raw.generators) {
      c.cat.add_generator(
          g.name, *c.cat.object_index(g.src), *c.cat.object_index(g.dst));
    }
    for (auto const& r : raw.relations) {
      if (r.lhs.empty()) {
        auto rhs = c.cat.word_from_names(r.rhs);
        c.cat.add_relation(Word::identity(rhs.src()), rhs);
      } else {
        auto lhs = c.cat.word_from_names(r.lhs);
        c.cat.add_relation(lhs, c.cat.word_from_names(r.rhs, lhs.src()));
      }
    }
    for (auto const& w : raw.denominator_words) {
      c.denoms.explicit_words.push_back(c.cat.word_from_names(w));
    }
    c.denoms.include_identities      = raw.include_identities;
    c.denoms.close_under_composition = raw.close_under_composition;
    return c;
  }

  RawCategory to_raw(CatWithDenoms const& c) {
    RawCategory raw;
    raw.objects = c.cat.objects();
    for (auto const& g : c.cat.generators()) {
      raw.generators.push_back(
          {g.name, c.cat.object_name(g.src), c.cat.object_name(g.dst)});
    }
    for (auto const& r : c.cat.relations()) {
      raw.relations.push_back({c.cat.names(r.lhs), c.cat.names(r.rhs)});
    }
    for (auto const& w : c.denoms.explicit_words) {
      raw.denominator_words.push_back(c.cat.names(w));
    }
    raw.include_identities      = c.denoms.include_identities;
    raw.close_under_composition = c.denoms.close_under_composition;
    return raw;
  }

  namespace {
    Word reversed(Word const& w) {
      std::vector<GenIndex> letters(w.letters().rbegin(), w.letters().rend());
      return Word(w.dst(), w.src(), std::move(letters));
    }
  }  // namespace

  CatWithDenoms opposite(CatWithDenoms const& c) {
    CatWithDenoms op;
    for (auto const& x : c.cat.objects()) {
      op.cat.add_object(x);
    }
    for (auto const& g : c.cat.generators()) {
      op.cat.add_generator(g.name, g.dst, g.src);
    }
    for (auto const& r : c.cat.relations()) {
      op.cat.add_relation(reversed(r.lhs), reversed(r.rhs));
    }
    for (auto const& w : c.denoms.explicit_words) {
      op.denoms.explicit_words.push_back(reversed(w));
    }
    op.denoms.include_identities      = c.denoms.include_identities;
    op.denoms.close_under_composition = c.denoms.close_under_composition;
    return op;
  }

  bool structurally_equal(CatWithDenoms const& a, CatWithDenoms const& b) {
    auto same_gens = [](Generator const& x, Generator const& y) {
      return x.name == y.name && x.src == y.src && x.dst == y.dst;
    };
    auto same_rel = [](Relation const& x, Relation const& y) {
      return x.lhs == y.lhs && x.rhs == y.rhs;
    };
    return a.cat.objects() == b.cat.objects()
           && std::equal(a.cat.generators().begin(),
                         a.cat.generators().end(),
                         b.cat.generators().begin(),
                         b.cat.generators().end(),
                         same_gens)
           && std::equal(a.cat.relations().begin(),
                         a.cat.relations().end(),
                         b.cat.relations().begin(),
                         b.cat.relations().end(),
                         same_rel)
           && a.denoms.explicit_words == b.denoms.explicit_words
           && a.denoms.include_identities == b.denoms.include_identities
           && a.denoms.close_under_composition
                  == b.denoms.close_under_composition;
  }

}  // namespace loccat
