#pragma once

// Finite presentations of categories with denominators.
//
// A category is given by objects, generating arrows and relations between
// parallel paths. All paths are written in diagrammatic order: the word
// `f g` means "first f, then g". Every word carries its endpoints, so the
// empty word at X (the identity 1_X) is distinct from the empty word at Y.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace loccat {

  using ObjIndex = std::uint32_t;
  using GenIndex = std::uint32_t;

  struct Generator {
    std::string name;
    ObjIndex    src;
    ObjIndex    dst;
  };

  // A path in a presented category. Words are totally ordered by shortlex
  // (length, then letters by generator index), ties broken by endpoints.
  class Word {
   public:
    Word() = default;
    Word(ObjIndex src, ObjIndex dst, std::vector<GenIndex> letters)
        : src_(src), dst_(dst), letters_(std::move(letters)) {}

    static Word identity(ObjIndex x) {
      return Word(x, x, {});
    }

    ObjIndex src() const noexcept {
      return src_;
    }
    ObjIndex dst() const noexcept {
      return dst_;
    }
    std::vector<GenIndex> const& letters() const noexcept {
      return letters_;
    }
    std::size_t length() const noexcept {
      return letters_.size();
    }
    bool is_identity() const noexcept {
      return letters_.empty();
    }
    bool parallel_to(Word const& other) const noexcept {
      return src_ == other.src_ && dst_ == other.dst_;
    }

    friend bool operator==(Word const&, Word const&) = default;
    friend std::strong_ordering operator<=>(Word const& a, Word const& b);

   private:
    ObjIndex              src_ = 0;
    ObjIndex              dst_ = 0;
    std::vector<GenIndex> letters_;
  };

  // Diagrammatic composite `a b`; throws UsageError unless a.dst == b.src.
  Word compose(Word const& a, Word const& b);

  struct Relation {
    Word lhs;
    Word rhs;
  };

  class Presentation {
   public:
    // Each throws UsageError on an empty or duplicate name, an unknown
    // endpoint, or a non-parallel relation.
    ObjIndex add_object(std::string name);
    GenIndex add_generator(std::string name, ObjIndex src, ObjIndex dst);
    void     add_relation(Word lhs, Word rhs);

    std::vector<std::string> const& objects() const noexcept {
      return objects_;
    }
    std::vector<Generator> const& generators() const noexcept {
      return generators_;
    }
    std::vector<Relation> const& relations() const noexcept {
      return relations_;
    }
    std::size_t number_of_objects() const noexcept {
      return objects_.size();
    }
    std::size_t number_of_generators() const noexcept {
      return generators_.size();
    }

    std::optional<ObjIndex> object_index(std::string const& name) const;
    std::optional<GenIndex> generator_index(std::string const& name) const;
    std::string const&      object_name(ObjIndex x) const;
    std::string const&      generator_name(GenIndex g) const;
    Generator const&        generator(GenIndex g) const;

    // The word for a letter sequence starting at `src`; throws UsageError if
    // consecutive letters do not compose.
    Word make_word(ObjIndex src, std::span<GenIndex const> letters) const;
    Word generator_word(GenIndex g) const;

    // Resolves generator names. An empty list needs `identity_at`.
    Word word_from_names(std::vector<std::string> const& names,
                         std::optional<ObjIndex>          identity_at
                         = std::nullopt) const;
    std::vector<std::string> names(Word const& w) const;

    // "f·g", or "1_X" for identities.
    std::string to_string(Word const& w) const;

   private:
    std::vector<std::string>        objects_;
    std::vector<Generator>          generators_;
    std::vector<Relation>           relations_;
    std::map<std::string, ObjIndex> object_lookup_;
    std::map<std::string, GenIndex> generator_lookup_;
  };

  // Intensional description of the set of denominators: the explicit words,
  // optionally all identities, optionally closed under composition.
  struct DenomSet {
    std::vector<Word> explicit_words;
    bool              include_identities      = true;
    bool              close_under_composition = true;
  };

  struct CatWithDenoms {
    Presentation cat;
    DenomSet     denoms;
  };

  ////////////////////////////////////////////////////////////////////////
  // Name-level syntax, as read from files, before any index is resolved.
  ////////////////////////////////////////////////////////////////////////

  struct RawGenerator {
    std::string name;
    std::string src;
    std::string dst;
  };

  struct RawRelation {
    std::vector<std::string> lhs;
    std::vector<std::string> rhs;
  };

  struct RawCategory {
    std::vector<std::string>              objects;
    std::vector<RawGenerator>             generators;
    std::vector<RawRelation>              relations;
    std::vector<std::vector<std::string>> denominator_words;
    bool                                  include_identities      = true;
    bool                                  close_under_composition = true;
  };

  struct Violation {
    std::string kind;
    std::string message;
  };

  struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const noexcept {
      return violations.empty();
    }
    void add(std::string kind, std::string message) {
      violations.push_back({std::move(kind), std::move(message)});
    }
    void append(ValidationReport const& other) {
      violations.insert(
          violations.end(), other.violations.begin(), other.violations.end());
    }
  };

  ValidationReport validate_presentation(RawCategory const& raw);

  // Throws PreconditionError carrying the first violation if `raw` is invalid.
  CatWithDenoms build_category(RawCategory const& raw);
  RawCategory   to_raw(CatWithDenoms const& c);

  // Reverses every arrow and every word. opposite(opposite(c)) == c.
  CatWithDenoms opposite(CatWithDenoms const& c);

  bool structurally_equal(CatWithDenoms const& a, CatWithDenoms const& b);

}  // namespace loccat
