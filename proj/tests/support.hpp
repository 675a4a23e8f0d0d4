#pragma once

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "loccat/cli.hpp"
#include "loccat/io.hpp"
#include "oracle/congruence_oracle.hpp"

namespace testing_support {

  inline std::filesystem::path fixture(std::string const& name) {
    return std::filesystem::path(LOCCAT_FIXTURE_DIR) / name;
  }

  inline loccat::ModelPtr load_model(std::string const& name,
                                     loccat::ResourceLimits limits = {}) {
    return loccat::CategoryModel::make(
        loccat::build_category(loccat::read_category_file(fixture(name))),
        limits);
  }

  inline loccat::FunctorData load_functor(std::string const& name,
                                          loccat::ResourceLimits limits = {}) {
    return loccat::load_functor_bundle(fixture(name), limits).functor;
  }

  inline loccat::Word to_word(loccat::Presentation const& p,
                              oracle::Path const&         path) {
    std::vector<loccat::GenIndex> letters(path.letters.begin(),
                                          path.letters.end());
    if (letters.empty()) {
      return loccat::Word::identity(static_cast<loccat::ObjIndex>(path.src));
    }
    return p.make_word(static_cast<loccat::ObjIndex>(path.src), letters);
  }

  inline oracle::Path to_path(loccat::Word const& w) {
    return {static_cast<int>(w.src()), static_cast<int>(w.dst()),
            std::vector<int>(w.letters().begin(), w.letters().end())};
  }

  struct CliResult {
    int         code;
    std::string out;
    std::string err;
  };

  inline CliResult cli(std::vector<std::string> const& args,
                       char const* profile = "default") {
    std::ostringstream out, err;
    int code = loccat::run_cli(args, out, err, profile);
    return {code, out.str(), err.str()};
  }

}  // namespace testing_support
