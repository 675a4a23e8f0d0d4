#include "loccat/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <ostream>

#include <CLI11.hpp>

#include "loccat/errors.hpp"
#include "loccat/gz.hpp"
#include "loccat/io.hpp"
#include "loccat/s_equivalence.hpp"

namespace loccat {

  namespace fs = std::filesystem;

  namespace {

    struct Session {
      ResourceLimits           limits;
      std::string              format = "json";
      std::vector<std::string> choice;  // "auto" or "from-file" PATH [PATH]
      bool                     experimental_no_mult = false;
    };

    Json limits_json(ResourceLimits const& l) {
      return {{"max_word_len", l.max_word_len},
              {"max_rules", l.max_rules},
              {"max_homset", l.max_homset}};
    }

    Json header(std::string const& command, std::vector<std::string> const& inputs,
                Session const& s) {
      return {{"schema", kReportSchema},
              {"command", command},
              {"inputs", inputs},
              {"bounds_used", limits_json(s.limits)}};
    }

    void render_text(std::ostream& os, Json const& j, int depth) {
      auto const pad = std::string(2 * depth, ' ');
      if (j.is_object()) {
        for (auto const& [k, v] : j.items()) {
          if (v.is_structured() && !v.empty()) {
            os << pad << k << ":\n";
            render_text(os, v, depth + 1);
          } else {
            os << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump())
               << "\n";
          }
        }
      } else if (j.is_array()) {
        for (auto const& v : j) {
          if (v.is_structured() && !v.empty()) {
            os << pad << "-\n";
            render_text(os, v, depth + 1);
          } else {
            os << pad << "- " << (v.is_string() ? v.get<std::string>() : v.dump())
               << "\n";
          }
        }
      } else {
        os << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
      }
    }

    void emit(std::ostream& out, Json const& report, Session const& s) {
      if (s.format == "text") {
        render_text(out, report, 0);
      } else {
        out << report.dump(2) << "\n";
      }
    }

    int exit_for(Verdict v) {
      switch (v) {
        case Verdict::True:
          return kExitOk;
        case Verdict::False:
          return kExitFalse;
        default:
          return kExitUndecided;
      }
    }

    bool is_functor_file(fs::path const& path) {
      auto j = read_json_file(path);
      return j.is_object() && j.contains("source");
    }

    ModelPtr load_category(std::string const& path, ResourceLimits const& l) {
      return CategoryModel::make(build_category(read_category_file(path)), l);
    }

    Json violations_json(ValidationReport const& r) {
      Json out = Json::array();
      for (auto const& v : r.violations) {
        out.push_back({{"kind", v.kind}, {"message", v.message}});
      }
      return out;
    }

    // Validation of one category or functor file, without throwing for
    // invalid content.
    Json validate_one(std::string const& path, Session const& s) {
      Json entry{{"path", path}};
      if (!is_functor_file(path)) {
        entry["kind"] = "category";
        auto report   = validate_presentation(read_category_file(path));
        entry["ok"]   = report.ok();
        entry["violations"] = violations_json(report);
        return entry;
      }
      entry["kind"] = "functor";
      auto file     = read_functor_file(path);
      ValidationReport report;
      for (auto const& p : {file.source, file.target}) {
        auto sub = validate_presentation(read_category_file(p));
        for (auto& v : sub.violations) {
          v.message = p.filename().string() + ": " + v.message;
        }
        report.append(sub);
      }
      if (report.ok()) {
        auto src = load_category(file.source.string(), s.limits);
        auto tgt = load_category(file.target.string(), s.limits);
        report.append(validate_functor_shape(file.raw, src->cat(), tgt->cat()));
        if (report.ok()) {
          report.append(validate_functor(build_functor(file.raw, src, tgt)));
        }
      }
      entry["ok"]         = report.ok();
      entry["violations"] = violations_json(report);
      return entry;
    }

    int cmd_validate(std::vector<std::string> const& paths, Session const& s,
                     std::ostream& out) {
      auto report = header("validate", paths, s);
      Json files  = Json::array();
      bool ok     = true;
      for (auto const& p : paths) {
        files.push_back(validate_one(p, s));
        ok = ok && files.back()["ok"].get<bool>();
      }
      report["files"]   = files;
      report["verdict"] = ok ? "ok" : "invalid";
      emit(out, report, s);
      return ok ? kExitOk : kExitPrecondition;
    }

    int cmd_localise(std::string const& path, Session const& s, std::ostream& out) {
      auto base = load_category(path, s.limits);
      auto lc   = localise(base);
      auto report = header("localise", {path}, s);
      Json inverses = Json::object();
      auto const& p = lc->model().cat();
      for (GenIndex g = base->cat().number_of_generators();
           g < p.number_of_generators(); ++g) {
        inverses[p.generator_name(g)] = base->show(lc->inverted_word(g));
      }
      report["localised"]       = encode_category(to_raw(lc->model().data()));
      report["inverse_letters"] = inverses;
      report["rewrite_rules"]   = lc->model().rs().rules().size();
      report["decidability_status"] = to_string(lc->model().rs().status());
      report["verdict"] = "ok";
      emit(out, report, s);
      return kExitOk;
    }

    int cmd_homset(std::string const& path, std::string const& src,
                   std::string const& dst, bool localised, Session const& s,
                   std::ostream& out) {
      auto base = load_category(path, s.limits);
      LocalisedPtr lc;
      if (localised) {
        lc = localise(base);
      }
      auto const& m = localised ? lc->model() : *base;
      auto x        = m.cat().object_index(src);
      auto y        = m.cat().object_index(dst);
      if (!x || !y) {
        throw PreconditionError("known object", !x ? src : dst);
      }
      auto report         = header("homset", {path}, s);
      report["localised"] = localised;
      report["src"]       = src;
      report["dst"]       = dst;
      report["decidability_status"] = to_string(m.rs().status());
      Json morphisms = Json::array();
      for (auto const& w : m.homset(*x, *y)) {
        morphisms.push_back(m.show(w));
      }
      report["count"]     = morphisms.size();
      report["morphisms"] = morphisms;
      report["verdict"]   = "ok";
      emit(out, report, s);
      return kExitOk;
    }

    EquivalenceOptions options_of(Session const& s) {
      EquivalenceOptions o;
      o.experimental_no_mult = s.experimental_no_mult;
      return o;
    }

    int cmd_check(std::string const& path, std::string const& which,
                  Session const& s, std::ostream& out) {
      auto report = header("check", {path}, s);
      report["which"] = which;
      if (which == "axioms") {
        std::vector<std::pair<std::string, ModelPtr>> models;
        if (is_functor_file(path)) {
          auto b = load_functor_bundle(path, s.limits);
          models = {{"source", b.functor.source}, {"target", b.functor.target}};
        } else {
          models = {{"category", load_category(path, s.limits)}};
        }
        Json    checks  = Json::array();
        Verdict verdict = Verdict::True;
        for (auto const& [role, m] : models) {
          for (auto r : {check_multiplicative(*m), check_isosaturated(*m)}) {
            auto j    = r.to_json();
            j["role"] = role;
            checks.push_back(j);
            if (r.verdict == Verdict::Undecided) {
              verdict = Verdict::Undecided;
            } else if (r.verdict == Verdict::False && verdict == Verdict::True) {
              verdict = Verdict::False;
            }
          }
        }
        report["checks"]  = checks;
        report["verdict"] = to_string(verdict);
        emit(out, report, s);
        return exit_for(verdict);
      }

      auto bundle = load_functor_bundle(path, s.limits);
      auto valid  = validate_functor(bundle.functor);
      if (!valid.ok()) {
        auto const& v = valid.violations.front();
        throw PreconditionError(v.kind, v.message);
      }
      Setting     setting(bundle.functor);
      CheckReport r;
      if (which == "s-dense") {
        r = check_s_dense(setting);
      } else if (which == "s-full") {
        r = check_s_full(setting);
      } else if (which == "s-faithful") {
        r = check_s_faithful(setting);
      } else {
        r = check_s_equivalence(setting, options_of(s));
      }
      report.update(r.to_json());
      emit(out, report, s);
      if (r.details.contains("severity")) {
        return kExitFalse;
      }
      return exit_for(r.verdict);
    }

    int cmd_verify(std::string const& path, Session const& s, std::ostream& out) {
      auto bundle = load_functor_bundle(path, s.limits);
      auto valid  = validate_functor(bundle.functor);
      if (!valid.ok()) {
        auto const& v = valid.violations.front();
        throw PreconditionError(v.kind, v.message);
      }
      auto const& f = bundle.functor;
      // Hypotheses first, so that nothing else is computed when they fail.
      if (auto w = multiplicativity_witness(*f.target);
          w && !s.experimental_no_mult) {
        throw PreconditionError("multiplicativity", *w);
      }
      Setting setting(f);
      auto    opts = options_of(s);
      check_approximation_hypotheses(setting, opts);

      ReplacementChoice choice;
      if (s.choice.empty() || s.choice.front() == "auto") {
        choice = auto_choice(ReplacementCategory(f));
      } else {
        choice = read_choice_file(s.choice[1], f);
        opts.alternative = s.choice.size() > 2
                               ? read_choice_file(s.choice[2], f)
                               : auto_choice(ReplacementCategory(f));
      }
      auto result = verify_approximation(setting, choice, opts);
      std::vector<std::string> inputs{path};
      inputs.insert(inputs.end(), s.choice.begin() + std::min<std::size_t>(1, s.choice.size()),
                    s.choice.end());
      auto report = header("verify-approximation", inputs, s);
      report["decidability_status"] = setting.decidability();
      report["verdict"]             = result.passed ? "true" : "false";
      report["theorem"]             = result.body;
      emit(out, report, s);
      return result.passed ? kExitOk : kExitFalse;
    }

    int fail(std::ostream& out, std::ostream& err, Session const& s,
             std::string const& command, std::vector<std::string> const& inputs,
             Json error, int code) {
      auto report     = header(command, inputs, s);
      report["verdict"] = code == kExitUndecided ? "undecided" : "error";
      report["error"] = std::move(error);
      emit(out, report, s);
      err << "loccat: " << report["error"]["message"].get<std::string>() << "\n";
      return code;
    }

  }  // namespace

  int run_cli(std::vector<std::string> const& args,
              std::ostream&                   out,
              std::ostream&                   err,
              char const*                     profile) {
    CLI::App app{"Localisations of finitely presented categories with denominators"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    Session                  s;
    std::optional<std::size_t> word_len, rules, homset;
    std::vector<std::string> paths;
    std::string              src, dst, which;
    bool                     localised = false;

    auto common = [&](CLI::App* sub) {
      sub->add_option("--limits-word-len", word_len, "Maximum word length")
          ->check(CLI::PositiveNumber);
      sub->add_option("--limits-rules", rules, "Maximum number of rewrite rules")
          ->check(CLI::PositiveNumber);
      sub->add_option("--limits-homset", homset, "Maximum hom-set size")
          ->check(CLI::PositiveNumber);
      sub->add_option("--format", s.format, "Report format")
          ->check(CLI::IsMember({"json", "text"}));
      sub->add_flag("--experimental-no-mult", s.experimental_no_mult,
                    "Drop the multiplicativity hypothesis (experimental)");
    };

    auto* validate = app.add_subcommand("validate", "Validate category and functor files");
    validate->add_option("paths", paths, "Files")->required()->check(CLI::ExistingFile);
    common(validate);

    auto* loc = app.add_subcommand("localise", "Print the localised presentation");
    loc->add_option("path", paths, "Category file")->required()->expected(1)
        ->check(CLI::ExistingFile);
    common(loc);

    auto* hom = app.add_subcommand("homset", "Enumerate a hom-set");
    hom->add_option("path", paths, "Category file")->required()->expected(1)
        ->check(CLI::ExistingFile);
    hom->add_option("--src", src, "Source object")->required();
    hom->add_option("--dst", dst, "Target object")->required();
    hom->add_flag("--localised", localised, "Use the localisation");
    common(hom);

    auto* check = app.add_subcommand("check", "Decide a property of a functor");
    check->add_option("args", paths, "Functor file and one of s-dense, s-full, "
                                     "s-faithful, s-equivalence, axioms")
        ->required()
        ->expected(2);
    common(check);

    auto* verify = app.add_subcommand("verify-approximation",
                                      "Verify the approximation theorem componentwise");
    verify->add_option("path", paths, "Functor file")->required()->expected(1)
        ->check(CLI::ExistingFile);
    verify->add_option("--choice", s.choice, "auto | from-file PATH [PATH]")
        ->expected(1, 3);
    common(verify);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (CLI::CallForHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::CallForAllHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::ParseError const& e) {
      app.exit(e, out, err);
      return kExitPrecondition;
    }

    auto* sub         = app.get_subcommands().front();
    auto const command = sub->get_name();

    auto const* env = profile ? profile : std::getenv("LOCCAT_LIMITS_PROFILE");
    auto        preset = limits_profile(env ? env : "");
    if (!preset) {
      err << "loccat: unknown limits profile " << env << "\n";
      return kExitPrecondition;
    }
    s.limits = *preset;
    if (word_len) {
      s.limits.max_word_len = *word_len;
    }
    if (rules) {
      s.limits.max_rules = *rules;
    }
    if (homset) {
      s.limits.max_homset = *homset;
    }

    if (command == "check") {
      static const std::vector<std::string> kinds{
          "s-dense", "s-full", "s-faithful", "s-equivalence", "axioms"};
      auto is_kind = [&](std::string const& a) {
        return std::find(kinds.begin(), kinds.end(), a) != kinds.end();
      };
      if (is_kind(paths[0]) && !is_kind(paths[1])) {
        std::swap(paths[0], paths[1]);
      }
      which = paths[1];
      paths.resize(1);
      if (!is_kind(which)) {
        err << "loccat: unknown check " << which << "\n";
        return kExitPrecondition;
      }
      if (!fs::is_regular_file(paths[0])) {
        err << "loccat: no such file " << paths[0] << "\n";
        return kExitPrecondition;
      }
    }
    if (command == "verify-approximation" && !s.choice.empty()) {
      auto const& mode = s.choice.front();
      bool const  ok   = (mode == "auto" && s.choice.size() == 1)
                      || (mode == "from-file" && s.choice.size() >= 2);
      if (!ok) {
        err << "loccat: --choice takes auto or from-file PATH [PATH]\n";
        return kExitPrecondition;
      }
    }

    try {
      if (command == "validate") {
        return cmd_validate(paths, s, out);
      }
      if (command == "localise") {
        return cmd_localise(paths[0], s, out);
      }
      if (command == "homset") {
        return cmd_homset(paths[0], src, dst, localised, s, out);
      }
      if (command == "check") {
        return cmd_check(paths[0], which, s, out);
      }
      return cmd_verify(paths[0], s, out);
    } catch (ParseError const& e) {
      return fail(out, err, s, command, paths,
                  {{"kind", "parse"}, {"message", e.what()}, {"position", e.position()}},
                  kExitParse);
    } catch (PreconditionError const& e) {
      return fail(out, err, s, command, paths,
                  {{"kind", "precondition"},
                   {"message", e.what()},
                   {"hypothesis", e.hypothesis()},
                   {"witness", e.witness()}},
                  kExitPrecondition);
    } catch (UndecidedError const& e) {
      return fail(out, err, s, command, paths,
                  {{"kind", "undecided"},
                   {"message", std::string("undecided at given limits: ") + e.what()},
                   {"bound_exhausted", e.bound()}},
                  kExitUndecided);
    } catch (TheoremViolation const& e) {
      return fail(out, err, s, command, paths,
                  {{"kind", "theorem violation"}, {"message", e.what()}},
                  kExitFalse);
    } catch (Error const& e) {
      return fail(out, err, s, command, paths,
                  {{"kind", "usage"}, {"message", e.what()}}, kExitPrecondition);
    }
  }

}  // namespace loccat
