#pragma once

// Functors between presented categories with denominators, given by an
// object map and a generator-to-path map, and transformations between them.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "loccat/model.hpp"

namespace loccat {

  struct FunctorData {
    ModelPtr              source;
    ModelPtr              target;
    std::vector<ObjIndex> object_map;     // indexed by source object
    std::vector<Word>     generator_map;  // indexed by source generator

    ObjIndex operator()(ObjIndex x) const {
      return object_map.at(x);
    }
    // Image of a source word, concatenated but not normalized.
    Word operator()(Word const& w) const;
  };

  struct TransformationData {
    FunctorData       from;
    FunctorData       to;
    std::vector<Word> components;  // component at X: from(X) -> to(X)
  };

  // Name-level functor description as read from a functor file.
  struct RawFunctor {
    std::map<std::string, std::string>              object_map;
    std::map<std::string, std::vector<std::string>> generator_map;
  };

  // Validates the shape of `raw` against the two categories: totality of both
  // maps, unknown names, endpoint compatibility.
  ValidationReport validate_functor_shape(RawFunctor const&   raw,
                                          Presentation const& source,
                                          Presentation const& target);

  // Throws PreconditionError carrying the first shape violation.
  FunctorData build_functor(RawFunctor const& raw,
                            ModelPtr          source,
                            ModelPtr          target);
  RawFunctor to_raw(FunctorData const& f);

  FunctorData identity_functor(ModelPtr c);
  // Diagrammatic: first f, then g.
  FunctorData compose(FunctorData const& f, FunctorData const& g);

  // Relation preservation: each source relation maps to an equality.
  ValidationReport check_relations_preserved(FunctorData const& f);
  // Every source denominator maps to a target denominator.
  ValidationReport check_denominators_preserved(FunctorData const& f);

  // Endpoints, relations and denominators. Throws UndecidedError when a
  // membership or equality question exhausts the limits.
  ValidationReport validate_functor(FunctorData const& f);

  // A source morphism that is not a denominator but maps to one, if any.
  std::optional<std::string> reflection_witness(FunctorData const& f);

  // The first generator whose naturality square fails, if any. Throws
  // UsageError if a component has the wrong endpoints.
  std::optional<std::string> naturality_witness(TransformationData const& t);

  // Equal images of every generator in the common target.
  bool same_on_generators(FunctorData const& f, FunctorData const& g);

}  // namespace loccat
