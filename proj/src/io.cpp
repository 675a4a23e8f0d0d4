#include "loccat/io.hpp"

#include <fstream>
#include <sstream>

#include "loccat/errors.hpp"

namespace loccat {

  namespace fs = std::filesystem;

  namespace {

    std::string line_column(std::string const& text, std::size_t byte) {
      std::size_t line = 1, col = 1;
      for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
          ++line;
          col = 1;
        } else {
          ++col;
        }
      }
      return std::to_string(line) + ":" + std::to_string(col);
    }

    // A JSON value together with its location, for error messages.
    struct Node {
      Json const& j;
      std::string where;
      std::string pointer;

      [[noreturn]] void fail(std::string const& msg) const {
        throw ParseError(msg, where + ":" + (pointer.empty() ? "/" : pointer));
      }
      Node at(std::string const& key) const {
        if (!j.is_object()) {
          fail("expected an object");
        }
        auto it = j.find(key);
        if (it == j.end()) {
          fail("missing key \"" + key + "\"");
        }
        return {*it, where, pointer + "/" + key};
      }
      std::optional<Node> find(std::string const& key) const {
        if (!j.is_object()) {
          fail("expected an object");
        }
        auto it = j.find(key);
        if (it == j.end()) {
          return std::nullopt;
        }
        return Node{*it, where, pointer + "/" + key};
      }
      Node at(std::size_t i) const {
        return {j[i], where, pointer + "/" + std::to_string(i)};
      }
      std::size_t size_of_array() const {
        if (!j.is_array()) {
          fail("expected an array");
        }
        return j.size();
      }
      std::string str() const {
        if (!j.is_string()) {
          fail("expected a string");
        }
        return j.get<std::string>();
      }
      bool boolean() const {
        if (!j.is_boolean()) {
          fail("expected a boolean");
        }
        return j.get<bool>();
      }
      std::vector<std::string> strings() const {
        std::vector<std::string> out;
        for (std::size_t i = 0, n = size_of_array(); i < n; ++i) {
          out.push_back(at(i).str());
        }
        return out;
      }
      void only(std::initializer_list<char const*> keys) const {
        for (auto const& [k, v] : j.items()) {
          bool known = false;
          for (auto const* key : keys) {
            known = known || k == key;
          }
          if (!known) {
            fail("unknown key \"" + k + "\"");
          }
        }
      }
    };

    std::string slurp(fs::path const& path) {
      std::ifstream in(path, std::ios::binary);
      if (!in) {
        throw ParseError("cannot read file", path.string());
      }
      std::ostringstream ss;
      ss << in.rdbuf();
      return ss.str();
    }

    Json words_json(std::vector<std::string> const& names) {
      return Json(names);
    }

  }  // namespace

  Json parse_json(std::string const& text, std::string const& where) {
    try {
      return Json::parse(text);
    } catch (Json::parse_error const& e) {
      auto const byte = e.byte == 0 ? 0 : e.byte - 1;
      std::string msg = e.what();
      if (auto p = msg.find("parse error"); p != std::string::npos) {
        auto colon = msg.find(": ", p);
        msg = colon == std::string::npos ? msg.substr(p)
                                         : "parse error: " + msg.substr(colon + 2);
      }
      throw ParseError(msg, where + ":" + line_column(text, byte));
    }
  }

  Json read_json_file(fs::path const& path) {
    return parse_json(slurp(path), path.string());
  }

  RawCategory decode_category(Json const& j, std::string const& where) {
    Node root{j, where, ""};
    if (!j.is_object()) {
      root.fail("expected an object");
    }
    root.only({"objects", "generators", "relations", "denominators"});
    RawCategory raw;
    raw.objects = root.at("objects").strings();
    auto gens   = root.at("generators");
    for (std::size_t i = 0, n = gens.size_of_array(); i < n; ++i) {
      auto g = gens.at(i);
      g.only({"name", "src", "dst"});
      raw.generators.push_back(
          {g.at("name").str(), g.at("src").str(), g.at("dst").str()});
    }
    if (auto rels = root.find("relations")) {
      for (std::size_t i = 0, n = rels->size_of_array(); i < n; ++i) {
        auto r = rels->at(i);
        r.only({"lhs", "rhs"});
        raw.relations.push_back({r.at("lhs").strings(), r.at("rhs").strings()});
      }
    }
    if (auto d = root.find("denominators")) {
      d->only({"words", "include_identities", "close_under_composition"});
      if (auto words = d->find("words")) {
        for (std::size_t i = 0, n = words->size_of_array(); i < n; ++i) {
          raw.denominator_words.push_back(words->at(i).strings());
        }
      }
      if (auto b = d->find("include_identities")) {
        raw.include_identities = b->boolean();
      }
      if (auto b = d->find("close_under_composition")) {
        raw.close_under_composition = b->boolean();
      }
    }
    return raw;
  }

  Json encode_category(RawCategory const& raw) {
    Json gens = Json::array();
    for (auto const& g : raw.generators) {
      gens.push_back({{"name", g.name}, {"src", g.src}, {"dst", g.dst}});
    }
    Json rels = Json::array();
    for (auto const& r : raw.relations) {
      rels.push_back({{"lhs", words_json(r.lhs)}, {"rhs", words_json(r.rhs)}});
    }
    Json words = Json::array();
    for (auto const& w : raw.denominator_words) {
      words.push_back(words_json(w));
    }
    return {{"objects", raw.objects},
            {"generators", gens},
            {"relations", rels},
            {"denominators",
             {{"words", words},
              {"include_identities", raw.include_identities},
              {"close_under_composition", raw.close_under_composition}}}};
  }

  RawCategory read_category_file(fs::path const& path) {
    return decode_category(read_json_file(path), path.string());
  }

  FunctorFile decode_functor(Json const&        j,
                             std::string const& where,
                             fs::path const&    base_dir) {
    Node root{j, where, ""};
    if (!j.is_object()) {
      root.fail("expected an object");
    }
    root.only({"source", "target", "object_map", "generator_map"});
    FunctorFile f;
    f.source = base_dir / root.at("source").str();
    f.target = base_dir / root.at("target").str();
    auto om  = root.at("object_map");
    if (!om.j.is_object()) {
      om.fail("expected an object");
    }
    for (auto const& [k, v] : om.j.items()) {
      f.raw.object_map[k] = om.at(k).str();
    }
    auto gm = root.at("generator_map");
    if (!gm.j.is_object()) {
      gm.fail("expected an object");
    }
    for (auto const& [k, v] : gm.j.items()) {
      f.raw.generator_map[k] = gm.at(k).strings();
    }
    return f;
  }

  FunctorFile read_functor_file(fs::path const& path) {
    return decode_functor(
        read_json_file(path), path.string(), path.parent_path());
  }

  Json encode_functor(RawFunctor const&  raw,
                      std::string const& source,
                      std::string const& target) {
    Json gm = Json::object();
    for (auto const& [k, v] : raw.generator_map) {
      gm[k] = words_json(v);
    }
    return {{"source", source},
            {"target", target},
            {"object_map", raw.object_map},
            {"generator_map", gm}};
  }

  FunctorBundle load_functor_bundle(fs::path const&       path,
                                    ResourceLimits const& limits) {
    FunctorBundle b{read_functor_file(path), {}};
    auto src = CategoryModel::make(
        build_category(read_category_file(b.file.source)), limits);
    auto tgt = b.file.target == b.file.source
                   ? src
                   : CategoryModel::make(
                         build_category(read_category_file(b.file.target)),
                         limits);
    b.functor = build_functor(b.file.raw, src, tgt);
    return b;
  }

  ReplacementChoice decode_choice(Json const&        j,
                                  std::string const& where,
                                  FunctorData const& f) {
    Node root{j, where, ""};
    if (!j.is_object()) {
      root.fail("expected an object");
    }
    auto const&       c = f.source->cat();
    auto const&       d = f.target->cat();
    ReplacementChoice r(d.number_of_objects());
    std::vector<bool> seen(d.number_of_objects(), false);
    for (auto const& [key, value] : j.items()) {
      auto entry = root.at(key);
      entry.only({"x", "q"});
      auto const x_name = entry.at("x").str();
      auto const q      = entry.at("q").strings();
      auto const y      = d.object_index(key);
      if (!y) {
        throw PreconditionError("valid choice", "unknown object " + key);
      }
      auto const x = c.object_index(x_name);
      if (!x) {
        throw PreconditionError("valid choice", "unknown object " + x_name);
      }
      Word w = Word::identity(f(*x));
      try {
        w = d.word_from_names(q, f(*x));
      } catch (UsageError const& e) {
        throw PreconditionError("valid choice", key + ": " + e.what());
      }
      r[*y]    = {*y, *x, w};
      seen[*y] = true;
    }
    for (ObjIndex y = 0; y < seen.size(); ++y) {
      if (!seen[y]) {
        throw PreconditionError("valid choice",
                                "no entry for " + d.object_name(y));
      }
    }
    return r;
  }

  ReplacementChoice read_choice_file(fs::path const& path, FunctorData const& f) {
    return decode_choice(read_json_file(path), path.string(), f);
  }

  Json encode_choice(ReplacementChoice const& r, FunctorData const& f) {
    Json out = Json::object();
    for (auto const& e : r) {
      out[f.target->cat().object_name(e.target)]
          = {{"x", f.source->cat().object_name(e.source)},
             {"q", words_json(f.target->cat().names(e.q))}};
    }
    return out;
  }

}  // namespace loccat
