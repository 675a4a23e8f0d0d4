#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "loccat/cli.hpp"
#include "loccat/errors.hpp"
#include "loccat/gz.hpp"
#include "loccat/io.hpp"
#include "loccat/s_equivalence.hpp"

namespace py = pybind11;
using namespace loccat;

namespace {

  ResourceLimits limits_of(std::optional<std::string> const& profile) {
    auto l = limits_profile(profile.value_or("default"));
    if (!l) {
      throw UsageError("unknown limits profile " + *profile);
    }
    return *l;
  }

  // Category handle; words cross the boundary as lists of generator names.
  class PyCategory {
   public:
    explicit PyCategory(ModelPtr m) : m_(std::move(m)) {}

    std::vector<std::string> objects() const {
      return m_->cat().objects();
    }
    std::vector<std::string> generators() const {
      std::vector<std::string> out;
      for (auto const& g : m_->cat().generators()) {
        out.push_back(g.name);
      }
      return out;
    }
    std::vector<std::string> normal_form(std::vector<std::string> const& w,
                                         std::optional<std::string> const& at) const {
      return m_->cat().names(m_->normalize(word(w, at)));
    }
    std::string equal(std::vector<std::string> const& a,
                      std::vector<std::string> const& b,
                      std::optional<std::string> const& at) const {
      return to_string(m_->equal(word(a, at), word(b, at)));
    }
    std::vector<std::string> homset(std::string const& x, std::string const& y) const {
      std::vector<std::string> out;
      for (auto const& w : m_->homset(object(x), object(y))) {
        out.push_back(m_->show(w));
      }
      return out;
    }
    bool is_denominator(std::vector<std::string> const& w,
                        std::optional<std::string> const& at) const {
      return m_->is_denominator(word(w, at));
    }
    std::string decidability() const {
      return to_string(m_->rs().status());
    }
    PyCategory localise() const {
      return PyCategory(loccat::localise(m_)->model_ptr());
    }
    std::string to_json() const {
      return encode_category(to_raw(m_->data())).dump();
    }

   private:
    ObjIndex object(std::string const& name) const {
      auto x = m_->cat().object_index(name);
      if (!x) {
        throw UsageError("unknown object " + name);
      }
      return *x;
    }
    Word word(std::vector<std::string> const& w,
              std::optional<std::string> const& at) const {
      std::optional<ObjIndex> x;
      if (at) {
        x = object(*at);
      }
      return m_->cat().word_from_names(w, x);
    }

    ModelPtr m_;
  };

  class PyFunctor {
   public:
    PyFunctor(std::string const& path, std::optional<std::string> const& profile)
        : bundle_(load_functor_bundle(path, limits_of(profile))) {}

    PyCategory source() const {
      return PyCategory(bundle_.functor.source);
    }
    PyCategory target() const {
      return PyCategory(bundle_.functor.target);
    }
    std::string check(std::string const& which) {
      auto& s = setting();
      CheckReport r;
      if (which == "s-dense") {
        r = check_s_dense(s);
      } else if (which == "s-full") {
        r = check_s_full(s);
      } else if (which == "s-faithful") {
        r = check_s_faithful(s);
      } else if (which == "s-equivalence") {
        r = check_s_equivalence(s);
      } else if (which == "classical") {
        r = check_classical_equivalence(bundle_.functor);
      } else {
        throw UsageError("unknown check " + which);
      }
      return r.to_json().dump();
    }
    std::string verify_approximation(std::optional<std::string> const& choice,
                                     std::optional<std::string> const& alternative) {
      auto&              s = setting();
      auto const&        f = bundle_.functor;
      EquivalenceOptions opts;
      check_approximation_hypotheses(s, opts);
      auto r = choice ? read_choice_file(*choice, f)
                      : auto_choice(ReplacementCategory(f));
      if (alternative) {
        opts.alternative = read_choice_file(*alternative, f);
      }
      auto report = loccat::verify_approximation(s, r, opts);
      return report.body.dump();
    }

   private:
    Setting& setting() {
      if (!setting_) {
        setting_ = std::make_unique<Setting>(bundle_.functor);
      }
      return *setting_;
    }

    FunctorBundle            bundle_;
    std::unique_ptr<Setting> setting_;
  };

}  // namespace

PYBIND11_MODULE(_loccat, m) {
  m.doc() = "Localisations of finitely presented categories with denominators";

  auto base = py::register_exception<Error>(m, "LoccatError");
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<UndecidedError>(m, "UndecidedError", base.ptr());
  py::register_exception<TheoremViolation>(m, "TheoremViolation", base.ptr());
  py::register_exception<UsageError>(m, "UsageError", base.ptr());

  py::class_<PyCategory>(m, "Category")
      .def_property_readonly("objects", &PyCategory::objects)
      .def_property_readonly("generators", &PyCategory::generators)
      .def_property_readonly("decidability", &PyCategory::decidability)
      .def("normal_form", &PyCategory::normal_form, py::arg("word"),
           py::arg("at") = py::none())
      .def("equal", &PyCategory::equal, py::arg("a"), py::arg("b"),
           py::arg("at") = py::none())
      .def("homset", &PyCategory::homset, py::arg("src"), py::arg("dst"))
      .def("is_denominator", &PyCategory::is_denominator, py::arg("word"),
           py::arg("at") = py::none())
      .def("localise", &PyCategory::localise)
      .def("to_json", &PyCategory::to_json);

  m.def(
      "load_category",
      [](std::string const& path, std::optional<std::string> const& profile) {
        return PyCategory(CategoryModel::make(
            build_category(read_category_file(path)), limits_of(profile)));
      },
      py::arg("path"), py::arg("profile") = py::none());

  py::class_<PyFunctor>(m, "Functor")
      .def(py::init<std::string const&, std::optional<std::string> const&>(),
           py::arg("path"), py::arg("profile") = py::none())
      .def_property_readonly("source", &PyFunctor::source)
      .def_property_readonly("target", &PyFunctor::target)
      .def("check", &PyFunctor::check, py::arg("which"))
      .def("verify_approximation", &PyFunctor::verify_approximation,
           py::arg("choice") = py::none(), py::arg("alternative") = py::none());

  m.def(
      "run_cli",
      [](std::vector<std::string> const& args) {
        std::ostringstream out, err;
        int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
