#pragma once

// Replacements of objects of D along a functor F: C -> D, the category of
// objects with replacement, choices, structure choice functors and the
// canonical lift.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "loccat/functor.hpp"

namespace loccat {

  // A pair (X, q) with q: F X -> Y a denominator of D.
  struct SReplacement {
    ObjIndex target;  // Y, an object of D
    ObjIndex source;  // X, an object of C
    Word     q;

    friend bool operator==(SReplacement const&, SReplacement const&)
        = default;
  };

  // Indexed by the objects of D.
  using ReplacementChoice = std::vector<SReplacement>;

  std::string to_string(FunctorData const& f, SReplacement const& r);

  // All replacements of y, ordered by source index, then shortlex q. Throws
  // UndecidedError if a hom-set cannot be enumerated.
  std::vector<SReplacement> find_s_replacements(FunctorData const& f,
                                                ObjIndex           y);

  // An object of D without replacement, if any.
  std::optional<ObjIndex> enough_witness(FunctorData const& f);
  // An object X of C with 1_{F X} not a denominator, if any.
  std::optional<ObjIndex> trivial_witness(FunctorData const& f);

  // (X, (G q) r) for G∘F, from (Y, r) along G and (X, q) along F. Throws
  // PreconditionError if the category of `g.target` is not multiplicative.
  SReplacement compose_replacement(SReplacement const& outer,
                                   SReplacement const& inner,
                                   FunctorData const&  f,
                                   FunctorData const&  g);
  // (F X, r) along G from (X, r) along G∘F.
  SReplacement project_replacement(SReplacement const& r,
                                   FunctorData const&  f);

  class ReplacementCategory {
   public:
    explicit ReplacementCategory(FunctorData f);

    FunctorData const& base_functor() const noexcept {
      return f_;
    }
    std::vector<SReplacement> const& triples() const noexcept {
      return triples_;
    }
    std::vector<std::size_t> const& triples_over(ObjIndex y) const {
      return over_.at(y);
    }
    ModelPtr const& model_ptr() const noexcept {
      return model_;
    }
    CategoryModel const& model() const noexcept {
      return *model_;
    }
    // True when the category is presented by its multiplication table
    // because paths between replaceable objects leave them.
    bool uses_table() const noexcept {
      return table_;
    }

    std::optional<std::size_t> find_triple(SReplacement const& r) const;

    // The morphism t -> t' of this category over the D-morphism `m`.
    Word lift(Word const& m, std::size_t t, std::size_t t_prime) const;
    // The D-morphism underlying a word of this category.
    Word underlying(Word const& w) const;

    // U: (Y, X, q) |-> Y.
    FunctorData forgetful() const;

   private:
    FunctorData                           f_;
    std::vector<SReplacement>             triples_;
    std::vector<std::vector<std::size_t>> over_;
    std::vector<bool>                     replaceable_;
    bool                                  table_ = false;
    ModelPtr                              model_;
    std::vector<Word>                     underlying_;  // per generator
    // Lifted generator for (D generator or table entry, t, t').
    std::map<std::tuple<Word, std::size_t, std::size_t>, GenIndex> lifted_;
    std::map<std::pair<std::size_t, std::size_t>, GenIndex>        transport_;
  };

  using ReplacementPtr = std::shared_ptr<ReplacementCategory const>;

  // The first replacement of every object; throws PreconditionError naming
  // an object without replacement.
  ReplacementChoice auto_choice(ReplacementCategory const& rc);

  // Throws PreconditionError naming the first invalid entry.
  void validate_choice(FunctorData const& f, ReplacementChoice const& r);

  struct StructureChoice {
    FunctorData        c_r;        // D -> D_R
    TransformationData alpha_bar;  // C_R∘U -> id, components over 1_Y
    std::vector<std::size_t> chosen;  // triple index per object of D
  };

  // Also asserts U∘C_R = id exactly; throws TheoremViolation otherwise.
  StructureChoice structure_choice_functor(ReplacementCategory const& rc,
                                           ReplacementChoice const&   r);

  // X |-> (F X, X, 1_{F X}). Throws PreconditionError when some 1_{F X} is
  // not a denominator. Asserts U∘F̄ = F.
  FunctorData canonical_lift(ReplacementCategory const& rc);

  // A triple t for which the morphism F̄ X -> t over q is not a denominator.
  std::optional<std::string>
  canonical_lift_density_witness(ReplacementCategory const& rc,
                                 FunctorData const&         lift);

}  // namespace loccat
