#pragma once

// JSON files: categories with denominators, functor bundles and replacement
// choices. Decoding errors throw ParseError with a "file:line:column" or
// "file:/json/pointer" position.

#include <filesystem>
#include <string>

#include <json.hpp>

#include "loccat/functor.hpp"
#include "loccat/replacement.hpp"

namespace loccat {

  using Json = nlohmann::json;

  // Parses text; `where` prefixes positions in errors.
  Json parse_json(std::string const& text, std::string const& where);
  Json read_json_file(std::filesystem::path const& path);

  RawCategory decode_category(Json const& j, std::string const& where);
  Json        encode_category(RawCategory const& raw);
  RawCategory read_category_file(std::filesystem::path const& path);

  // The two model files of a functor file are resolved relative to it.
  struct FunctorFile {
    std::filesystem::path source;
    std::filesystem::path target;
    RawFunctor            raw;
  };
  FunctorFile decode_functor(Json const& j, std::string const& where,
                             std::filesystem::path const& base_dir);
  FunctorFile read_functor_file(std::filesystem::path const& path);
  Json        encode_functor(RawFunctor const& raw, std::string const& source,
                             std::string const& target);

  // A functor file loaded together with both categories. Throws
  // PreconditionError if either category or the functor shape is invalid.
  struct FunctorBundle {
    FunctorFile file;
    FunctorData functor;
  };
  FunctorBundle load_functor_bundle(std::filesystem::path const& path,
                                    ResourceLimits const&        limits);

  // Throws PreconditionError("valid choice", ...) for unknown names or an
  // invalid entry, ParseError for a malformed file.
  ReplacementChoice decode_choice(Json const& j, std::string const& where,
                                  FunctorData const& f);
  ReplacementChoice read_choice_file(std::filesystem::path const& path,
                                     FunctorData const&           f);
  Json encode_choice(ReplacementChoice const& r, FunctorData const& f);

}  // namespace loccat
