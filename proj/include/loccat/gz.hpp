#pragma once

// The Gabriel/Zisman localisation as a presentation: the base presentation
// plus one formal inverse letter per explicit denominator word.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "loccat/functor.hpp"

namespace loccat {

  class LocalisedCategory {
   public:
    // Limits are taken from the base model.
    explicit LocalisedCategory(ModelPtr base);

    CategoryModel const& base() const noexcept {
      return *base_;
    }
    ModelPtr const& base_ptr() const noexcept {
      return base_;
    }
    // The localised presentation. Base generators keep their indices.
    CategoryModel const& model() const noexcept {
      return *model_;
    }
    ModelPtr const& model_ptr() const noexcept {
      return model_;
    }

    std::size_t number_of_inverse_letters() const noexcept {
      return inverted_.size();
    }
    bool is_inverse_letter(GenIndex g) const noexcept {
      return g >= base_->cat().number_of_generators();
    }
    // The base word inverted by an inverse letter.
    Word const& inverted_word(GenIndex g) const;
    GenIndex    inverse_letter(std::size_t explicit_index) const {
      return letter_of_.at(explicit_index);
    }

    // loc: the base word read in the localisation, normalized.
    Word loc(Word const& w) const;

    // The localisation functor as functor data.
    FunctorData loc_functor() const;

   private:
    ModelPtr              base_;
    ModelPtr              model_;
    std::vector<Word>     inverted_;   // per inverse letter
    std::vector<GenIndex> letter_of_;  // per explicit denominator word
  };

  using LocalisedPtr = std::shared_ptr<LocalisedCategory const>;

  inline LocalisedPtr localise(ModelPtr base) {
    return std::make_shared<LocalisedCategory const>(std::move(base));
  }

  // Deterministic name for the inverse of a denominator word.
  std::string inverse_name(Presentation const& p, Word const& w);

  // GZ(F): base generators map as under F, each inverse letter maps to the
  // shortlex-least inverse of the image of its word. Throws
  // PreconditionError when an image has no inverse, UndecidedError when the
  // search exceeds the limits.
  FunctorData induced_functor(FunctorData const&       f,
                              LocalisedCategory const& lc_src,
                              LocalisedCategory const& lc_tgt);

  // Base generators map as under `values`, a functor from the base of
  // `lc_src` into some localisation; inverse letters map to inverses found
  // in the target. Used for functors that factor through a localisation.
  FunctorData extend_to_localisation(FunctorData const&       values,
                                     LocalisedCategory const& lc_src);

  // The first base generator whose square loc(F g) = GZ(F)(loc g) fails.
  std::optional<std::string>
  induced_square_witness(FunctorData const&       f,
                         FunctorData const&       gz_f,
                         LocalisedCategory const& lc_src,
                         LocalisedCategory const& lc_tgt);

  // Components read in the target localisation; naturality is then checked
  // over all generators of the source localisation, inverse letters
  // included. Throws TheoremViolation if it fails.
  TransformationData induced_transformation(TransformationData const& t,
                                            FunctorData const&        gz_from,
                                            FunctorData const&        gz_to,
                                            LocalisedCategory const&  lc_tgt);

  struct ZigzagSegment {
    Word                     forward;      // base word
    Word                     denominator;  // base word, traversed backwards
    std::vector<GenIndex>    parts;        // inverse letters, in word order
  };

  struct ZigzagView {
    std::vector<ZigzagSegment> segments;
    Word                       tail;
  };

  // Splits a localised word at its inverse letters, merging runs of
  // consecutive inverse letters into one denominator.
  ZigzagView zigzag_view(LocalisedCategory const& lc, Word const& w);
  Word       recompose(LocalisedCategory const& lc, ZigzagView const& z);
  std::string to_string(LocalisedCategory const& lc, ZigzagView const& z);

}  // namespace loccat
