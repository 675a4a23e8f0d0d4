#pragma once

// Density, fullness and faithfulness along denominators, the total and
// choice replacement functors into GZ(C), and the approximation verifier.

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "loccat/gz.hpp"
#include "loccat/replacement.hpp"

namespace loccat {

  using Json = nlohmann::json;

  enum class Verdict { True, False, Undecided };
  char const* to_string(Verdict v);

  struct CheckReport {
    std::string    check;
    Verdict        verdict = Verdict::Undecided;
    Json           witness;  // null unless False
    std::string    bound;    // exhausted bound, when Undecided
    ResourceLimits bounds_used;
    std::string    decidability;
    bool           experimental = false;
    Json           details      = Json::object();

    Json to_json() const;
  };

  // A cospan g: F x -> Y' <- F x' : b with b a denominator.
  struct STwoArrow {
    Word     g;
    Word     b;
    ObjIndex x;
    ObjIndex x_prime;
  };

  // F: C -> D together with both localisations and GZ(F).
  class Setting {
   public:
    explicit Setting(FunctorData f);

    FunctorData const& functor() const noexcept {
      return f_;
    }
    CategoryModel const& c() const noexcept {
      return *f_.source;
    }
    CategoryModel const& d() const noexcept {
      return *f_.target;
    }
    LocalisedCategory const& lc_c() const noexcept {
      return *lc_c_;
    }
    LocalisedCategory const& lc_d() const noexcept {
      return *lc_d_;
    }
    LocalisedPtr const& lc_c_ptr() const noexcept {
      return lc_c_;
    }
    LocalisedPtr const& lc_d_ptr() const noexcept {
      return lc_d_;
    }
    FunctorData const& gz_f() const noexcept {
      return gz_f_;
    }
    ResourceLimits const& limits() const noexcept {
      return c().limits();
    }
    // "complete" when all four rewriting systems are complete.
    std::string decidability() const;

    // All phi in hom_GZ(C)(x, x') with loc g = GZ(F)(phi)·loc b.
    std::vector<Word> solve_fill(STwoArrow const& a) const;

    // Every S-2-arrow, in a fixed order.
    std::vector<STwoArrow> two_arrows() const;

    Json show(STwoArrow const& a) const;

    // One pass over every S-2-arrow, memoized.
    struct ArrowScan {
      std::size_t                                      arrows = 0;
      std::optional<STwoArrow>                         unfillable;
      std::optional<std::tuple<STwoArrow, Word, Word>> ambiguous;
    };
    ArrowScan const& scan() const;

   private:
    FunctorData  f_;
    LocalisedPtr lc_c_;
    LocalisedPtr lc_d_;
    FunctorData  gz_f_;

    mutable std::mutex               scan_mutex_;
    mutable std::optional<ArrowScan> scan_;
  };

  // Each returns an Undecided report instead of throwing UndecidedError.
  CheckReport check_multiplicative(CategoryModel const& m);
  CheckReport check_isosaturated(CategoryModel const& m);
  CheckReport check_s_dense(Setting const& s);
  CheckReport check_s_full(Setting const& s);
  CheckReport check_s_faithful(Setting const& s);

  struct EquivalenceOptions {
    bool                             experimental_no_mult = false;
    std::optional<ReplacementChoice> alternative;  // for choice independence
  };

  // Throws PreconditionError when D is not multiplicative, unless
  // `experimental_no_mult` is set.
  CheckReport check_s_equivalence(Setting const&            s,
                                  EquivalenceOptions const& opts = {});

  // Dense, full and faithful by enumeration, for any functor whose hom-sets
  // are finite.
  struct ClassicalProfile {
    bool dense    = true;
    bool full     = true;
    bool faithful = true;
    Json witnesses = Json::object();

    bool equivalence() const {
      return dense && full && faithful;
    }
  };
  ClassicalProfile classical_profile(FunctorData const& f);

  // Dense, full and faithful for F itself on the base categories.
  CheckReport check_classical_equivalence(FunctorData const& f);

  // The total replacement functor D_R -> GZ(C). `s` must outlive it.
  class TotalReplacement {
   public:
    // Throws PreconditionError unless F is S-full and S-faithful.
    TotalReplacement(Setting const& s, ReplacementPtr rc);

    ReplacementCategory const& rc() const noexcept {
      return *rc_;
    }
    ReplacementPtr const& rc_ptr() const noexcept {
      return rc_;
    }
    // Generator images in GZ(C).
    FunctorData const& functor() const noexcept {
      return functor_;
    }
    // The unique fill of (q_t·m, q_t') for a D-morphism m.
    Word value(std::size_t t, std::size_t t_prime, Word const& m) const;
    // The value of a D_R word, computed from its underlying D-morphism.
    Word value(Word const& w) const;

    // Functoriality, shortening and denominator checks; the returned block
    // has "passed" false on any violation.
    Json verify() const;

   private:
    Setting const&  s_;
    ReplacementPtr  rc_;
    FunctorData     functor_;
  };

  struct ApproximationReport {
    bool passed = false;
    Json body   = Json::object();
  };

  // Multiplicativity of D (unless experimental), S-fullness and
  // S-faithfulness; throws PreconditionError naming the first violated one.
  // Returns false when D is not multiplicative and the flag allowed it.
  bool check_approximation_hypotheses(Setting const&            s,
                                      EquivalenceOptions const& opts);

  // Throws PreconditionError for a violated hypothesis.
  ApproximationReport verify_approximation(Setting const&            s,
                                           ReplacementChoice const&  r,
                                           EquivalenceOptions const& opts = {});

  // Ř: GZ(D) -> GZ(C) for a choice, extended from R_R F.
  FunctorData induced_replacement_functor(TotalReplacement const& total,
                                          Setting const&          s,
                                          StructureChoice const&  choice);

}  // namespace loccat
