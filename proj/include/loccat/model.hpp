#pragma once

// A category with denominators together with its completed rewriting system,
// a decision procedure for denominators and a hom-set cache.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "loccat/cat_core.hpp"
#include "loccat/rewrite.hpp"

namespace loccat {

  class CategoryModel {
   public:
    CategoryModel(CatWithDenoms c, ResourceLimits limits);

    static std::shared_ptr<CategoryModel const> make(CatWithDenoms  c,
                                                     ResourceLimits limits) {
      return std::make_shared<CategoryModel const>(std::move(c), limits);
    }

    CatWithDenoms const& data() const noexcept {
      return *data_;
    }
    Presentation const& cat() const noexcept {
      return data_->cat;
    }
    DenomSet const& denoms() const noexcept {
      return data_->denoms;
    }
    RewriteSystem const& rs() const noexcept {
      return rs_;
    }
    ResourceLimits const& limits() const noexcept {
      return rs_.limits();
    }

    Word normalize(Word const& w) const {
      return rs_.normalize(w);
    }
    Equality equal(Word const& a, Word const& b) const {
      return rs_.equal(a, b);
    }
    // Throws UndecidedError when equality cannot be decided.
    bool same(Word const& a, Word const& b) const;

    std::string show(Word const& w) const {
      return cat().to_string(w);
    }

    // Cached; see RewriteSystem::homset.
    std::vector<Word> const& homset(ObjIndex x, ObjIndex y) const;
    std::optional<Word>      find_inverse(Word const& w) const;

    // Throws UndecidedError if the closure of the explicit denominators could
    // not be enumerated and `w` was not found in the enumerated part.
    bool is_denominator(Word const& w) const;

    // Normal forms of the denominators found by closing the explicit words.
    // Identities are listed only when they arise from the closure or the
    // include_identities flag.
    std::set<Word> const& denominator_closure() const noexcept {
      return closure_;
    }
    bool denominator_closure_complete() const noexcept {
      return closure_complete_;
    }

    // hom(x, y) filtered to denominators.
    std::vector<Word> denominators(ObjIndex x, ObjIndex y) const;

   private:
    void close_denominators();

    std::shared_ptr<CatWithDenoms const> data_;
    RewriteSystem                        rs_;
    std::set<Word>                       closure_;
    bool                                 closure_complete_ = true;

    struct Cache {
      std::mutex                                               mutex;
      std::map<std::pair<ObjIndex, ObjIndex>, std::vector<Word>> homsets;
    };
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
  };

  using ModelPtr = std::shared_ptr<CategoryModel const>;

  // Checks (Cat): identities are denominators and composites of denominators
  // are denominators. On failure returns the witness, e.g. "1_a" or "d·e".
  // Throws UndecidedError if the denominators cannot be enumerated.
  std::optional<std::string> multiplicativity_witness(CategoryModel const& m);

  // Checks (Iso) over all hom-sets. Returns a non-denominator isomorphism.
  std::optional<std::string> isosaturation_witness(CategoryModel const& m);

}  // namespace loccat
