#include "loccat/s_equivalence.hpp"

#include <map>
#include <set>

#include "loccat/errors.hpp"

namespace loccat {

  char const* to_string(Verdict v) {
    switch (v) {
      case Verdict::True:
        return "true";
      case Verdict::False:
        return "false";
      default:
        return "undecided";
    }
  }

  Json CheckReport::to_json() const {
    Json j;
    j["check"]               = check;
    j["verdict"]             = to_string(verdict);
    j["witness"]             = witness;
    j["decidability_status"] = decidability;
    j["bounds_used"]         = {{"max_word_len", bounds_used.max_word_len},
                                {"max_rules", bounds_used.max_rules},
                                {"max_homset", bounds_used.max_homset}};
    if (verdict == Verdict::Undecided) {
      j["bound_exhausted"] = bound;
    }
    if (experimental) {
      j["experimental"] = true;
    }
    if (!details.empty()) {
      j["details"] = details;
    }
    return j;
  }

  namespace {

    std::string status_of(std::initializer_list<CategoryModel const*> models) {
      for (auto const* m : models) {
        if (!m->rs().is_complete()) {
          return to_string(CompletionStatus::BoundedIncomplete);
        }
      }
      return to_string(CompletionStatus::Complete);
    }

    CheckReport start(std::string name, CategoryModel const& m) {
      CheckReport r;
      r.check        = std::move(name);
      r.bounds_used  = m.limits();
      r.decidability = status_of({&m});
      return r;
    }

    CheckReport start(std::string name, Setting const& s) {
      CheckReport r;
      r.check        = std::move(name);
      r.bounds_used  = s.limits();
      r.decidability = s.decidability();
      return r;
    }

    template <typename Body>
    CheckReport guarded(CheckReport r, Body&& body) {
      try {
        body(r);
      } catch (UndecidedError const& e) {
        r.verdict = Verdict::Undecided;
        r.witness = nullptr;
        r.bound   = e.bound();
        r.details["undecided"] = e.what();
      }
      return r;
    }

    bool invertible(CategoryModel const& m, Word const& w) {
      return m.find_inverse(w).has_value();
    }

    // Ordered list of named checks.
    class Checks {
     public:
      void add(std::string name, bool passed, Json detail = nullptr) {
        Json entry{{"name", std::move(name)}, {"passed", passed}};
        if (!detail.is_null()) {
          entry["detail"] = std::move(detail);
        }
        list_.push_back(std::move(entry));
        ok_ = ok_ && passed;
      }
      bool ok() const {
        return ok_;
      }
      Json const& list() const {
        return list_;
      }

     private:
      Json list_ = Json::array();
      bool ok_   = true;
    };

    void add_naturality(Checks&                   checks,
                        std::string const&        name,
                        TransformationData const& t) {
      try {
        auto w = naturality_witness(t);
        checks.add(name, !w.has_value(), w ? Json(*w) : Json(nullptr));
      } catch (UsageError const& e) {
        checks.add(name, false, e.what());
      }
    }

    void add_invertible(Checks&                   checks,
                        std::string const&        name,
                        TransformationData const& t) {
      auto const& m = *t.to.target;
      Json        bad = Json::array();
      for (ObjIndex x = 0; x < t.components.size(); ++x) {
        if (!invertible(m, t.components[x])) {
          bad.push_back(t.from.source->cat().object_name(x));
        }
      }
      checks.add(name, bad.empty(), bad.empty() ? Json(nullptr) : bad);
    }

    Json component(LocalisedCategory const& lc, ObjIndex from, ObjIndex to,
                   Word const& w) {
      auto const& p = lc.model().cat();
      return {{"from", p.object_name(from)},
              {"to", p.object_name(to)},
              {"word", lc.model().show(w)},
              {"zigzag", to_string(lc, zigzag_view(lc, w))}};
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Setting
  ////////////////////////////////////////////////////////////////////////

  Setting::Setting(FunctorData f)
      : f_(std::move(f)),
        lc_c_(localise(f_.source)),
        lc_d_(localise(f_.target)),
        gz_f_(induced_functor(f_, *lc_c_, *lc_d_)) {
    if (auto w = induced_square_witness(f_, gz_f_, *lc_c_, *lc_d_)) {
      throw TheoremViolation("loc∘F differs from GZ(F)∘loc at " + *w);
    }
  }

  std::string Setting::decidability() const {
    return status_of({&c(), &d(), &lc_c().model(), &lc_d().model()});
  }

  std::vector<Word> Setting::solve_fill(STwoArrow const& a) const {
    auto const&       gz_d = lc_d().model();
    auto const        lhs  = lc_d().loc(a.g);
    std::vector<Word> out;
    for (auto const& phi : lc_c().model().homset(a.x, a.x_prime)) {
      if (gz_d.same(lhs, compose(gz_f_(phi), a.b))) {
        out.push_back(phi);
      }
    }
    return out;
  }

  std::vector<STwoArrow> Setting::two_arrows() const {
    std::vector<STwoArrow> out;
    auto const             nc = c().cat().number_of_objects();
    auto const             nd = d().cat().number_of_objects();
    for (ObjIndex x = 0; x < nc; ++x) {
      for (ObjIndex xp = 0; xp < nc; ++xp) {
        for (ObjIndex y = 0; y < nd; ++y) {
          auto const& gs = d().homset(f_(x), y);
          if (gs.empty()) {
            continue;
          }
          for (auto const& b : d().denominators(f_(xp), y)) {
            for (auto const& g : gs) {
              out.push_back({g, b, x, xp});
            }
          }
        }
      }
    }
    return out;
  }

  Json Setting::show(STwoArrow const& a) const {
    return {{"x", c().cat().object_name(a.x)},
            {"x_prime", c().cat().object_name(a.x_prime)},
            {"g", d().show(a.g)},
            {"b", d().show(a.b)}};
  }

  Setting::ArrowScan const& Setting::scan() const {
    std::lock_guard lock(scan_mutex_);
    if (!scan_) {
      ArrowScan out;
      for (auto const& a : two_arrows()) {
        ++out.arrows;
        auto fills = solve_fill(a);
        if (fills.empty() && !out.unfillable) {
          out.unfillable = a;
        }
        if (fills.size() > 1 && !out.ambiguous) {
          out.ambiguous = std::make_tuple(a, fills[0], fills[1]);
        }
      }
      scan_ = std::move(out);
    }
    return *scan_;
  }

  ////////////////////////////////////////////////////////////////////////
  // Checks
  ////////////////////////////////////////////////////////////////////////

  CheckReport check_multiplicative(CategoryModel const& m) {
    return guarded(start("multiplicative", m), [&](CheckReport& r) {
      auto w    = multiplicativity_witness(m);
      r.verdict = w ? Verdict::False : Verdict::True;
      if (w) {
        r.witness = {{"not_a_denominator", *w}};
      }
    });
  }

  CheckReport check_isosaturated(CategoryModel const& m) {
    return guarded(start("isosaturated", m), [&](CheckReport& r) {
      auto w    = isosaturation_witness(m);
      r.verdict = w ? Verdict::False : Verdict::True;
      if (w) {
        r.witness = {{"isomorphism_not_a_denominator", *w}};
      }
    });
  }

  CheckReport check_s_dense(Setting const& s) {
    return guarded(start("s-dense", s), [&](CheckReport& r) {
      auto const& f = s.functor();
      if (auto y = enough_witness(f)) {
        r.verdict = Verdict::False;
        r.witness = {{"object", s.d().cat().object_name(*y)}};
        return;
      }
      r.verdict = Verdict::True;
      // Every object is then isomorphic in GZ(D) to an image object.
      for (ObjIndex y = 0; y < s.d().cat().number_of_objects(); ++y) {
        auto const r0 = find_s_replacements(f, y).front();
        if (!invertible(s.lc_d().model(), s.lc_d().loc(r0.q))) {
          throw TheoremViolation("loc of replacement "
                                 + to_string(f, r0) + " is not invertible");
        }
      }
      r.details["gz_dense_on_objects"] = true;
    });
  }

  CheckReport check_s_full(Setting const& s) {
    return guarded(start("s-full", s), [&](CheckReport& r) {
      auto const& scan     = s.scan();
      r.details["arrows"]  = scan.arrows;
      r.verdict            = scan.unfillable ? Verdict::False : Verdict::True;
      if (scan.unfillable) {
        r.witness = {{"arrow", s.show(*scan.unfillable)}};
      }
    });
  }

  CheckReport check_s_faithful(Setting const& s) {
    return guarded(start("s-faithful", s), [&](CheckReport& r) {
      auto const& scan    = s.scan();
      r.details["arrows"] = scan.arrows;
      r.verdict           = scan.ambiguous ? Verdict::False : Verdict::True;
      if (scan.ambiguous) {
        auto const& [a, phi1, phi2] = *scan.ambiguous;
        auto const& gz_c            = s.lc_c().model();
        r.witness = {{"arrow", s.show(a)},
                     {"phi1", gz_c.show(phi1)},
                     {"phi2", gz_c.show(phi2)}};
      }
    });
  }

  ClassicalProfile classical_profile(FunctorData const& f) {
    ClassicalProfile out;
    auto const&      src = *f.source;
    auto const&      tgt = *f.target;
    auto const       ns  = src.cat().number_of_objects();
    auto const       nt  = tgt.cat().number_of_objects();
    for (ObjIndex y = 0; y < nt && out.dense; ++y) {
      bool found = false;
      for (ObjIndex x = 0; x < ns && !found; ++x) {
        for (auto const& w : tgt.homset(f(x), y)) {
          if (invertible(tgt, w)) {
            found = true;
            break;
          }
        }
      }
      if (!found) {
        out.dense               = false;
        out.witnesses["dense"] = {{"object", tgt.cat().object_name(y)}};
      }
    }
    for (ObjIndex x = 0; x < ns; ++x) {
      for (ObjIndex xp = 0; xp < ns; ++xp) {
        std::map<Word, Word> image;
        for (auto const& phi : src.homset(x, xp)) {
          auto fw = tgt.normalize(f(phi));
          auto [it, fresh] = image.emplace(fw, phi);
          if (!fresh && out.faithful) {
            out.faithful = false;
            out.witnesses["faithful"] = {{"phi1", src.show(it->second)},
                                         {"phi2", src.show(phi)},
                                         {"image", tgt.show(fw)}};
          }
        }
        if (!out.full) {
          continue;
        }
        for (auto const& psi : tgt.homset(f(x), f(xp))) {
          if (!image.count(psi)) {
            out.full = false;
            out.witnesses["full"] = {{"x", src.cat().object_name(x)},
                                     {"x_prime", src.cat().object_name(xp)},
                                     {"morphism", tgt.show(psi)}};
            break;
          }
        }
      }
    }
    return out;
  }

  CheckReport check_classical_equivalence(FunctorData const& f) {
    auto r = start("classical-equivalence", *f.target);
    r.decidability = status_of({f.source.get(), f.target.get()});
    return guarded(r, [&](CheckReport& r) {
      auto p       = classical_profile(f);
      r.verdict    = p.equivalence() ? Verdict::True : Verdict::False;
      r.details    = {{"dense", p.dense},
                      {"full", p.full},
                      {"faithful", p.faithful}};
      if (!p.equivalence()) {
        r.witness = p.witnesses;
      }
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // Total replacement functor
  ////////////////////////////////////////////////////////////////////////

  TotalReplacement::TotalReplacement(Setting const& s, ReplacementPtr rc)
      : s_(s), rc_(std::move(rc)) {
    auto const& scan = s_.scan();
    if (scan.unfillable) {
      throw PreconditionError("S-fullness",
                              s_.show(*scan.unfillable).dump());
    }
    if (scan.ambiguous) {
      throw PreconditionError(
          "S-faithfulness", s_.show(std::get<0>(*scan.ambiguous)).dump());
    }
    auto const& p = rc_->model().cat();
    functor_      = FunctorData{rc_->model_ptr(), s_.lc_c().model_ptr(), {}, {}};
    for (auto const& t : rc_->triples()) {
      functor_.object_map.push_back(t.source);
    }
    for (GenIndex g = 0; g < p.number_of_generators(); ++g) {
      functor_.generator_map.push_back(value(p.generator_word(g)));
    }
    auto report = check_relations_preserved(functor_);
    if (!report.ok()) {
      throw TheoremViolation("total replacement functor: "
                             + report.violations.front().message);
    }
  }

  Word TotalReplacement::value(std::size_t t,
                               std::size_t t_prime,
                               Word const& m) const {
    auto const& a  = rc_->triples().at(t);
    auto const& ap = rc_->triples().at(t_prime);
    auto fills = s_.solve_fill({compose(a.q, m), ap.q, a.source, ap.source});
    if (fills.size() != 1) {
      throw TheoremViolation(
          "fill for " + s_.d().show(m) + " from "
          + rc_->model().cat().object_name(static_cast<ObjIndex>(t)) + " to "
          + rc_->model().cat().object_name(static_cast<ObjIndex>(t_prime))
          + " has " + std::to_string(fills.size()) + " solutions");
    }
    return fills.front();
  }

  Word TotalReplacement::value(Word const& w) const {
    return value(w.src(), w.dst(), rc_->underlying(w));
  }

  Json TotalReplacement::verify() const {
    auto const& d     = s_.d();
    auto const& gz_c  = s_.lc_c().model();
    auto const& dr    = rc_->model();
    auto const& trips = rc_->triples();
    auto const  n     = trips.size();

    std::size_t fills = 0, functoriality = 0, images = 0, shortening = 0,
                shortening_skipped = 0, denominators = 0;
    Json violations = Json::array();
    auto violate    = [&](std::string what) {
      if (violations.size() < 16) {
        violations.push_back(std::move(what));
      }
    };
    auto name = [&](std::size_t t) {
      return dr.cat().object_name(static_cast<ObjIndex>(t));
    };

    std::map<std::tuple<std::size_t, std::size_t, Word>, Word> vals;
    auto val = [&](std::size_t t, std::size_t tp, Word const& m) {
      auto key = std::make_tuple(t, tp, d.normalize(m));
      auto it  = vals.find(key);
      if (it == vals.end()) {
        it = vals.emplace(key, value(t, tp, std::get<2>(key))).first;
      }
      return it->second;
    };

    for (std::size_t t = 0; t < n; ++t) {
      for (std::size_t tp = 0; tp < n; ++tp) {
        for (auto const& m : d.homset(trips[t].target, trips[tp].target)) {
          val(t, tp, m);
          ++fills;
        }
        for (auto const& w : dr.homset(static_cast<ObjIndex>(t),
                                       static_cast<ObjIndex>(tp))) {
          ++images;
          if (!gz_c.same(functor_(w), value(w))) {
            violate("generator images disagree with fills at "
                    + dr.show(w));
          }
        }
      }
      auto const id = Word::identity(trips[t].target);
      ++functoriality;
      if (!gz_c.same(val(t, t, id), Word::identity(trips[t].source))) {
        violate("identity of " + name(t) + " is not preserved");
      }
    }

    for (std::size_t t = 0; t < n; ++t) {
      for (std::size_t tp = 0; tp < n; ++tp) {
        for (std::size_t tpp = 0; tpp < n; ++tpp) {
          auto const& ab = d.homset(trips[t].target, trips[tp].target);
          auto const& bc = d.homset(trips[tp].target, trips[tpp].target);
          for (auto const& a : ab) {
            for (auto const& b : bc) {
              ++functoriality;
              auto lhs = val(t, tpp, compose(a, b));
              auto rhs = compose(val(t, tp, a), val(tp, tpp, b));
              if (!gz_c.same(lhs, rhs)) {
                violate("composite " + d.show(a) + "·" + d.show(b) + " from "
                        + name(t));
              }
            }
          }
        }
      }
    }

    auto const nd = d.cat().number_of_objects();
    for (std::size_t t = 0; t < n; ++t) {
      for (std::size_t tp = 0; tp < n; ++tp) {
        auto const& [y, x, q]    = trips[t];
        auto const& [yp, xp, qp] = trips[tp];
        for (auto const& g : d.homset(y, yp)) {
          for (ObjIndex yt = 0; yt < nd; ++yt) {
            for (auto const& e : d.denominators(y, yt)) {
              for (ObjIndex ytp = 0; ytp < nd; ++ytp) {
                for (auto const& ep : d.denominators(yp, ytp)) {
                  auto const ge = compose(g, ep);
                  for (auto const& gt : d.homset(yt, ytp)) {
                    if (!d.same(ge, compose(e, gt))) {
                      continue;
                    }
                    auto s  = rc_->find_triple({yt, x, d.normalize(compose(q, e))});
                    auto sp = rc_->find_triple(
                        {ytp, xp, d.normalize(compose(qp, ep))});
                    if (!s || !sp) {
                      ++shortening_skipped;
                      continue;
                    }
                    ++shortening;
                    if (!gz_c.same(val(*s, *sp, gt), val(t, tp, g))) {
                      violate("shortening of " + d.show(g) + " by "
                              + d.show(e) + ", " + d.show(ep));
                    }
                  }
                }
              }
            }
          }
        }
      }
    }

    for (std::size_t t = 0; t < n; ++t) {
      for (std::size_t tp = 0; tp < n; ++tp) {
        auto const& [y, x, q] = trips[t];
        auto const  yp        = trips[tp].target;
        for (auto const& e : d.denominators(y, yp)) {
          ++denominators;
          auto const v = val(t, tp, e);
          if (!invertible(gz_c, v)) {
            violate("value of denominator " + d.show(e) + " from " + name(t)
                    + " is not invertible");
          }
          auto s = rc_->find_triple({yp, x, d.normalize(compose(q, e))});
          if (s && !gz_c.same(v, val(*s, tp, Word::identity(yp)))) {
            violate("value of denominator " + d.show(e) + " from " + name(t)
                    + " differs from the value of 1 after shortening");
          }
        }
      }
    }

    return {{"passed", violations.empty()},
            {"fills_unique", fills},
            {"generator_images_checked", images},
            {"functoriality_checked", functoriality},
            {"shortening_checked", shortening},
            {"shortening_skipped", shortening_skipped},
            {"denominator_values_checked", denominators},
            {"violations", violations}};
  }

  FunctorData induced_replacement_functor(TotalReplacement const& total,
                                          Setting const&          s,
                                          StructureChoice const&  choice) {
    auto const& d = s.d().cat();
    FunctorData values{s.functor().target, s.lc_c().model_ptr(), {}, {}};
    for (auto t : choice.chosen) {
      values.object_map.push_back(total.rc().triples()[t].source);
    }
    for (GenIndex g = 0; g < d.number_of_generators(); ++g) {
      auto const& gen = d.generator(g);
      values.generator_map.push_back(total.value(
          choice.chosen[gen.src], choice.chosen[gen.dst], d.generator_word(g)));
    }
    return extend_to_localisation(values, s.lc_d());
  }

  ////////////////////////////////////////////////////////////////////////
  // Approximation
  ////////////////////////////////////////////////////////////////////////

  bool check_approximation_hypotheses(Setting const&            s,
                                      EquivalenceOptions const& opts) {
    auto const mult = multiplicativity_witness(s.d());
    if (mult && !opts.experimental_no_mult) {
      throw PreconditionError("multiplicativity", *mult);
    }
    auto const& scan = s.scan();
    if (scan.unfillable) {
      throw PreconditionError("S-fullness", s.show(*scan.unfillable).dump());
    }
    if (scan.ambiguous) {
      throw PreconditionError("S-faithfulness",
                              s.show(std::get<0>(*scan.ambiguous)).dump());
    }
    return !mult.has_value();
  }

  ApproximationReport verify_approximation(Setting const&            s,
                                           ReplacementChoice const&  r,
                                           EquivalenceOptions const& opts) {
    auto const& f    = s.functor();
    auto const& c    = s.c();
    auto const& d    = s.d();
    auto const& lc_c = s.lc_c();
    auto const& lc_d = s.lc_d();
    auto const& gz_c = lc_c.model();
    auto const& gz_d = lc_d.model();

    ApproximationReport out;
    Json&               body = out.body;
    body["multiplicative"]   = check_approximation_hypotheses(s, opts);
    if (opts.experimental_no_mult) {
      body["experimental"] = true;
    }
    validate_choice(f, r);

    auto rc = std::make_shared<ReplacementCategory const>(f);
    TotalReplacement total(s, rc);
    auto const       choice = structure_choice_functor(*rc, r);
    auto const       check  = induced_replacement_functor(total, s, choice);
    Checks           checks;

    {
      Json objs = Json::array();
      for (std::size_t t = 0; t < rc->triples().size(); ++t) {
        objs.push_back(rc->model().cat().object_name(static_cast<ObjIndex>(t)));
      }
      body["replacement_category"]
          = {{"objects", objs},
             {"generators", rc->model().cat().number_of_generators()},
             {"multiplication_table", rc->uses_table()},
             {"decidability_status",
              to_string(rc->model().rs().status())}};
      Json ch = Json::object();
      for (ObjIndex y = 0; y < r.size(); ++y) {
        ch[d.cat().object_name(y)] = {{"x", c.cat().object_name(r[y].source)},
                                      {"q", d.show(r[y].q)}};
      }
      body["choice"] = ch;
    }

    // Components of α and β.
    auto const        nc = c.cat().number_of_objects();
    auto const        nd = d.cat().number_of_objects();
    std::vector<Word> alpha, beta;
    Json              alpha_json = Json::object(), beta_json = Json::object();
    for (ObjIndex xp = 0; xp < nc; ++xp) {
      auto const y       = f(xp);
      auto const from    = choice.chosen[y];
      auto const trivial = rc->find_triple({y, xp, Word::identity(y)});
      if (!trivial) {
        throw PreconditionError("all trivial S-replacements",
                                d.show(Word::identity(y)));
      }
      alpha.push_back(total.value(from, *trivial, Word::identity(y)));
      alpha_json[c.cat().object_name(xp)]
          = component(lc_c, rc->triples()[from].source, xp, alpha.back());
    }
    for (ObjIndex y = 0; y < nd; ++y) {
      beta.push_back(lc_d.loc(r[y].q));
      beta_json[d.cat().object_name(y)]
          = component(lc_d, r[y].q.src(), y, beta.back());
    }
    body["alpha"] = alpha_json;
    body["beta"]  = beta_json;

    auto const id_c = identity_functor(lc_c.model_ptr());
    auto const id_d = identity_functor(lc_d.model_ptr());
    TransformationData const alpha_t{compose(s.gz_f(), check), id_c, alpha};
    TransformationData const beta_t{compose(check, s.gz_f()), id_d, beta};

    add_invertible(checks, "alpha components invertible", alpha_t);
    add_invertible(checks, "beta components invertible", beta_t);
    add_naturality(checks, "alpha natural on GZ(C) generators", alpha_t);
    add_naturality(checks, "beta natural on GZ(D) generators", beta_t);
    {
      auto const& l = checks.list();
      bool const  a = l[0]["passed"] && l[2]["passed"];
      bool const  b = l[1]["passed"] && l[3]["passed"];
      checks.add("Ř∘GZ(F) isomorphic to id via alpha", a);
      checks.add("GZ(F)∘Ř isomorphic to id via beta", b);
    }
    {
      Json bad = Json::array();
      for (ObjIndex xp = 0; xp < nc; ++xp) {
        if (!gz_d.same(s.gz_f()(alpha[xp]), beta[f(xp)])) {
          bad.push_back(c.cat().object_name(xp));
        }
      }
      checks.add("GZ(F)*alpha = beta*GZ(F)", bad.empty(),
                 bad.empty() ? Json(nullptr) : bad);
      bad = Json::array();
      for (ObjIndex y = 0; y < nd; ++y) {
        auto const xy = rc->triples()[choice.chosen[y]].source;
        if (!gz_c.same(check(beta[y]), alpha[xy])) {
          bad.push_back(d.cat().object_name(y));
        }
      }
      checks.add("Ř*beta = alpha*Ř", bad.empty(),
                 bad.empty() ? Json(nullptr) : bad);
    }
    {
      // Defining square of the replacement functor on generators of D.
      Json bad = Json::array();
      for (GenIndex g = 0; g < d.cat().number_of_generators(); ++g) {
        auto const& gen = d.cat().generator(g);
        auto lhs = compose(beta[gen.src], d.cat().generator_word(g));
        auto rhs = compose(s.gz_f()(check.generator_map[g]), beta[gen.dst]);
        if (!gz_d.same(lhs, rhs)) {
          bad.push_back(gen.name);
        }
      }
      checks.add("replacement functor square on D generators", bad.empty(),
                 bad.empty() ? Json(nullptr) : bad);

      std::size_t count = 0;
      bad               = Json::array();
      for (ObjIndex y = 0; y < nd; ++y) {
        for (ObjIndex yp = 0; yp < nd; ++yp) {
          for (auto const& psi : gz_d.homset(y, yp)) {
            ++count;
            auto lhs = compose(beta[y], psi);
            auto rhs = compose(s.gz_f()(check(psi)), beta[yp]);
            if (!gz_d.same(lhs, rhs) && bad.size() < 16) {
              bad.push_back(gz_d.show(psi));
            }
          }
        }
      }
      checks.add("Ř square on every GZ(D) morphism", bad.empty(),
                 Json{{"morphisms", count}, {"failures", bad}});
    }

    auto const total_block = total.verify();
    checks.add("total replacement functor", total_block["passed"].get<bool>());
    body["total_replacement_functor"] = total_block;

    // The pair (U, C_R) on localisations.
    auto const lc_dr = localise(rc->model_ptr());
    auto const gz_u  = induced_functor(rc->forgetful(), *lc_dr, lc_d);
    auto const gz_cr = induced_functor(choice.c_r, lc_d, *lc_dr);
    checks.add("GZ(U)∘GZ(C_R) = id", same_on_generators(compose(gz_cr, gz_u), id_d));
    {
      TransformationData abar{compose(gz_u, gz_cr),
                              identity_functor(lc_dr->model_ptr()),
                              {}};
      bool over_identity = true;
      for (std::size_t t = 0; t < choice.alpha_bar.components.size(); ++t) {
        auto const& w = choice.alpha_bar.components[t];
        abar.components.push_back(lc_dr->loc(w));
        over_identity = over_identity
                        && gz_d.same(gz_u(w), Word::identity(
                                                  rc->triples()[t].target));
      }
      add_invertible(checks, "alpha-bar components invertible", abar);
      add_naturality(checks, "alpha-bar natural on GZ(D_R) generators", abar);
      checks.add("alpha-bar components over 1_Y", over_identity);
    }

    // The canonical lift.
    std::optional<FunctorData> fbar;
    try {
      fbar = canonical_lift(*rc);
    } catch (PreconditionError const& e) {
      checks.add("canonical lift", false, e.what());
    }
    if (fbar) {
      Json bad = Json::array();
      for (ObjIndex x = 0; x < nc; ++x) {
        if (rc->triples()[(*fbar)(x)].source != x) {
          bad.push_back(c.cat().object_name(x));
        }
      }
      for (GenIndex g = 0; g < c.cat().number_of_generators(); ++g) {
        auto lhs = total.functor()(fbar->generator_map[g]);
        if (!gz_c.same(lhs, lc_c.loc(c.cat().generator_word(g)))) {
          bad.push_back(c.cat().generator_name(g));
        }
      }
      checks.add("total functor after canonical lift = loc", bad.empty(),
                 bad.empty() ? Json(nullptr) : bad);
      auto dense = canonical_lift_density_witness(*rc, *fbar);
      checks.add("replacements along the canonical lift", !dense.has_value(),
                 dense ? Json(*dense) : Json(nullptr));

      auto const rbar = extend_to_localisation(total.functor(), *lc_dr);
      TransformationData beta_bar{compose(rbar, s.gz_f()), gz_u, {}};
      TransformationData gamma{compose(rbar, induced_functor(*fbar, lc_c, *lc_dr)),
                               identity_functor(lc_dr->model_ptr()),
                               {}};
      for (std::size_t t = 0; t < rc->triples().size(); ++t) {
        auto const& tr = rc->triples()[t];
        beta_bar.components.push_back(lc_d.loc(tr.q));
        gamma.components.push_back(
            lc_dr->loc(rc->lift(tr.q, (*fbar)(tr.source), t)));
      }
      add_invertible(checks, "beta-bar components invertible", beta_bar);
      add_naturality(checks, "beta-bar natural on GZ(D_R) generators", beta_bar);
      add_invertible(checks, "lift transformation components invertible", gamma);
      add_naturality(checks, "lift transformation natural on GZ(D_R) generators",
                     gamma);
    }

    // Comparison with every other replacement of each object.
    {
      Json bad = Json::array();
      for (ObjIndex y = 0; y < nd; ++y) {
        for (auto t : rc->triples_over(y)) {
          auto v = total.value(choice.chosen[y], t, Word::identity(y));
          if (!invertible(gz_c, v)) {
            bad.push_back(rc->model().cat().object_name(static_cast<ObjIndex>(t)));
          }
        }
      }
      checks.add("comparison with other replacements invertible", bad.empty(),
                 bad.empty() ? Json(nullptr) : bad);
    }

    if (opts.alternative) {
      auto const& alt     = *opts.alternative;
      auto const  choice2 = structure_choice_functor(*rc, alt);
      auto const  check2  = induced_replacement_functor(total, s, choice2);
      std::vector<Word> a12, a21;
      Json              comps = Json::object();
      for (ObjIndex y = 0; y < nd; ++y) {
        a12.push_back(total.value(
            choice.chosen[y], choice2.chosen[y], Word::identity(y)));
        a21.push_back(total.value(
            choice2.chosen[y], choice.chosen[y], Word::identity(y)));
        comps[d.cat().object_name(y)]
            = component(lc_c, r[y].source, alt[y].source, a12.back());
      }
      Checks             ci;
      TransformationData iso{check, check2, a12};
      add_invertible(ci, "components invertible", iso);
      add_naturality(ci, "natural on GZ(D) generators", iso);
      Json bad = Json::array();
      for (ObjIndex y = 0; y < nd; ++y) {
        auto inv = gz_c.find_inverse(a12[y]);
        if (!inv || gz_c.normalize(*inv) != gz_c.normalize(a21[y])) {
          bad.push_back(d.cat().object_name(y));
        }
      }
      ci.add("inverse equals the reverse comparison", bad.empty(),
             bad.empty() ? Json(nullptr) : bad);
      Json alt_json = Json::object();
      for (ObjIndex y = 0; y < alt.size(); ++y) {
        alt_json[d.cat().object_name(y)]
            = {{"x", c.cat().object_name(alt[y].source)},
               {"q", d.show(alt[y].q)}};
      }
      body["choice_independence"] = {{"alternative", alt_json},
                                     {"components", comps},
                                     {"checks", ci.list()},
                                     {"passed", ci.ok()}};
      checks.add("choice independence", ci.ok());
    }

    body["checks"] = checks.list();
    body["passed"] = checks.ok();
    if (!checks.ok()) {
      body["severity"] = "fatal";
    }
    out.passed = checks.ok();
    return out;
  }

  CheckReport check_s_equivalence(Setting const&            s,
                                  EquivalenceOptions const& opts) {
    auto r = start("s-equivalence", s);
    if (auto w = multiplicativity_witness(s.d())) {
      if (!opts.experimental_no_mult) {
        throw PreconditionError("multiplicativity", *w);
      }
      r.experimental = true;
    }
    return guarded(r, [&](CheckReport& r) {
      auto const parts = {check_s_dense(s), check_s_full(s), check_s_faithful(s)};
      for (auto const& p : parts) {
        r.details[p.check] = to_string(p.verdict);
      }
      for (auto const& p : parts) {
        if (p.verdict == Verdict::Undecided) {
          r.verdict = Verdict::Undecided;
          r.bound   = p.bound;
          return;
        }
      }
      r.verdict = Verdict::True;
      for (auto const& p : parts) {
        if (p.verdict == Verdict::False) {
          r.verdict = Verdict::False;
          r.witness = {{"failed", p.check}, {"witness", p.witness}};
          break;
        }
      }
      auto const& dense = *parts.begin();
      if (dense.verdict == Verdict::True) {
        auto profile = classical_profile(s.gz_f());
        r.details["gz_f"] = {{"dense", profile.dense},
                             {"full", profile.full},
                             {"faithful", profile.faithful}};
        bool const s_full = (parts.begin() + 1)->verdict == Verdict::True;
        if (!r.experimental && s_full != profile.full) {
          throw TheoremViolation("S-fullness and fullness of GZ(F) disagree");
        }
        if (r.verdict == Verdict::True && !profile.equivalence()) {
          throw TheoremViolation("GZ(F) is not an equivalence");
        }
      }
      if (r.verdict == Verdict::True) {
        ReplacementCategory rc(s.functor());
        auto report = verify_approximation(s, auto_choice(rc), opts);
        r.details["approximation"] = report.body;
        if (!report.passed) {
          r.details["severity"] = "fatal";
        }
      }
    });
  }

}  // namespace loccat
