#pragma once

// Completion of path-word rewriting systems and the queries built on it:
// normal forms, word equality, hom-set enumeration and inverse search.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "loccat/cat_core.hpp"

namespace loccat {

  struct ResourceLimits {
    std::size_t max_word_len = 16;
    std::size_t max_rules    = 512;
    std::size_t max_homset   = 1024;

    // Throws UsageError unless every field is positive.
    void check() const;

    friend bool operator==(ResourceLimits const&, ResourceLimits const&)
        = default;
  };

  // Named presets: "default", "small", "large". nullopt for unknown names.
  std::optional<ResourceLimits> limits_profile(std::string const& name);

  struct RewriteRule {
    Word lhs;
    Word rhs;
  };

  enum class CompletionStatus { Complete, BoundedIncomplete };
  enum class Equality { Equal, Unequal, Undecided };

  char const* to_string(CompletionStatus s);
  char const* to_string(Equality e);

  // Shortlex comparison of letter sequences, ignoring endpoints.
  bool shortlex_less(Word const& a, Word const& b);

  class RewriteSystem {
   public:
    // Orients the relations of `p` and runs Knuth-Bendix completion.
    // Exceeding a limit yields status BoundedIncomplete, never an error.
    static RewriteSystem complete(std::shared_ptr<Presentation const> p,
                                  ResourceLimits                      limits);

    Presentation const& presentation() const noexcept {
      return *presentation_;
    }
    std::shared_ptr<Presentation const> const& presentation_ptr() const {
      return presentation_;
    }
    std::vector<RewriteRule> const& rules() const noexcept {
      return rules_;
    }
    CompletionStatus status() const noexcept {
      return status_;
    }
    bool is_complete() const noexcept {
      return status_ == CompletionStatus::Complete;
    }
    ResourceLimits const& limits() const noexcept {
      return limits_;
    }
    // Which bound stopped completion; empty when complete.
    std::string const& exhausted_bound() const noexcept {
      return exhausted_;
    }

    Word normalize(Word const& w) const;
    bool is_reducible(Word const& w) const;

    // Throws UsageError if the words are not parallel.
    Equality equal(Word const& a, Word const& b) const;

    // Every normal form from x to y, in shortlex order. Throws UndecidedError
    // when the system is incomplete or a limit is hit.
    std::vector<Word> homset(ObjIndex x, ObjIndex y) const;

    // The shortlex-least v with w·v = 1 and v·w = 1, if any. Throws
    // UndecidedError when hom(dst, src) cannot be enumerated.
    std::optional<Word> find_inverse(Word const& w) const;
    bool                is_isomorphism(Word const& w) const {
      return find_inverse(w).has_value();
    }

   private:
    RewriteSystem() = default;

    // Index of the rule to apply when `stack` ends in a redex, if any.
    std::optional<std::size_t>
    suffix_redex(std::vector<GenIndex> const& stack) const;
    void rebuild_index();

    // Exhaustive congruence class of `w` within the limits, or nullopt.
    std::optional<std::vector<Word>> congruence_class(Word const& w) const;

    std::shared_ptr<Presentation const>   presentation_;
    std::vector<RewriteRule>              rules_;
    std::vector<std::vector<std::size_t>> by_last_letter_;
    CompletionStatus                      status_ = CompletionStatus::Complete;
    ResourceLimits                        limits_;
    std::string                           exhausted_;
  };

}  // namespace loccat
