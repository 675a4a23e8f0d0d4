#include "loccat/model.hpp"

#include <deque>

#include "loccat/errors.hpp"

namespace loccat {

  CategoryModel::CategoryModel(CatWithDenoms c, ResourceLimits limits)
      : data_(std::make_shared<CatWithDenoms const>(std::move(c))),
        rs_(RewriteSystem::complete(
            std::shared_ptr<Presentation const>(data_, &data_->cat),
            limits)) {
    close_denominators();
  }

  bool CategoryModel::same(Word const& a, Word const& b) const {
    switch (rs_.equal(a, b)) {
      case Equality::Equal:
        return true;
      case Equality::Unequal:
        return false;
      default:
        throw UndecidedError("equality of " + show(a) + " and " + show(b),
                             rs_.exhausted_bound());
    }
  }

  std::vector<Word> const& CategoryModel::homset(ObjIndex x, ObjIndex y) const {
    {
      std::lock_guard lock(cache_->mutex);
      auto            it = cache_->homsets.find({x, y});
      if (it != cache_->homsets.end()) {
        return it->second;
      }
    }
    auto            words = rs_.homset(x, y);
    std::lock_guard lock(cache_->mutex);
    return cache_->homsets.emplace(std::make_pair(x, y), std::move(words))
        .first->second;
  }

  std::optional<Word> CategoryModel::find_inverse(Word const& w) const {
    auto const src = Word::identity(w.src());
    auto const dst = Word::identity(w.dst());
    if (normalize(w).is_identity()) {
      return dst;
    }
    for (auto const& v : homset(w.dst(), w.src())) {
      if (same(compose(w, v), src) && same(compose(v, w), dst)) {
        return v;
      }
    }
    return std::nullopt;
  }

  void CategoryModel::close_denominators() {
    auto const& d      = denoms();
    auto const& lim    = limits();
    std::size_t budget = lim.max_homset * std::max<std::size_t>(
                             1, cat().number_of_objects());
    std::deque<Word> queue;
    auto             add = [&](Word w) {
      w = normalize(w);
      if (closure_.insert(w).second) {
        queue.push_back(std::move(w));
      }
    };
    if (d.include_identities) {
      for (ObjIndex x = 0; x < cat().number_of_objects(); ++x) {
        add(Word::identity(x));
      }
    }
    for (auto const& w : d.explicit_words) {
      add(w);
    }
    if (!d.close_under_composition) {
      return;
    }
    std::vector<Word> done;
    while (!queue.empty()) {
      Word w = std::move(queue.front());
      queue.pop_front();
      done.push_back(w);
      std::vector<Word> fresh;
      for (auto const& v : done) {
        if (w.dst() == v.src()) {
          fresh.push_back(compose(w, v));
        }
        if (v.dst() == w.src() && !(v == w)) {
          fresh.push_back(compose(v, w));
        }
      }
      for (auto& f : fresh) {
        auto n = normalize(f);
        if (n.length() > lim.max_word_len || closure_.size() >= budget) {
          closure_complete_ = false;
          return;
        }
        add(std::move(n));
      }
    }
    if (!rs_.is_complete()) {
      // Normal forms are not canonical, so the closure may miss members
      // that are equal to found ones.
      closure_complete_ = false;
    }
  }

  bool CategoryModel::is_denominator(Word const& w) const {
    auto n = normalize(w);
    if (closure_.count(n)) {
      return true;
    }
    if (w.is_identity() && denoms().include_identities) {
      return true;
    }
    if (rs_.is_complete() && closure_complete_) {
      return false;
    }
    for (auto const& d : closure_) {
      if (d.parallel_to(n) && equal(d, n) == Equality::Equal) {
        return true;
      }
    }
    throw UndecidedError("denominator membership of " + show(w),
                         rs_.is_complete() ? "max_homset"
                                           : rs_.exhausted_bound());
  }

  std::vector<Word> CategoryModel::denominators(ObjIndex x, ObjIndex y) const {
    std::vector<Word> out;
    for (auto const& w : homset(x, y)) {
      if (is_denominator(w)) {
        out.push_back(w);
      }
    }
    return out;
  }

  std::optional<std::string> multiplicativity_witness(CategoryModel const& m) {
    for (ObjIndex x = 0; x < m.cat().number_of_objects(); ++x) {
      if (!m.is_denominator(Word::identity(x))) {
        return m.show(Word::identity(x));
      }
    }
    if (!m.denominator_closure_complete()) {
      throw UndecidedError("closure of the denominators", "max_homset");
    }
    auto const& all = m.denominator_closure();
    for (auto const& a : all) {
      for (auto const& b : all) {
        if (a.dst() == b.src() && !m.is_denominator(compose(a, b))) {
          return m.show(compose(a, b));
        }
      }
    }
    return std::nullopt;
  }

  std::optional<std::string> isosaturation_witness(CategoryModel const& m) {
    auto const n = m.cat().number_of_objects();
    for (ObjIndex x = 0; x < n; ++x) {
      for (ObjIndex y = 0; y < n; ++y) {
        for (auto const& w : m.homset(x, y)) {
          if (m.find_inverse(w) && !m.is_denominator(w)) {
            return m.show(w);
          }
        }
      }
    }
    return std::nullopt;
  }

}  // namespace loccat
