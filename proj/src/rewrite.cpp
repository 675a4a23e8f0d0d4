#include "loccat/rewrite.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <tuple>

#include "loccat/errors.hpp"

namespace loccat {

  void ResourceLimits::check() const {
    if (max_word_len == 0 || max_rules == 0 || max_homset == 0) {
      throw UsageError("resource limits must be positive");
    }
  }

  std::optional<ResourceLimits> limits_profile(std::string const& name) {
    if (name.empty() || name == "default") {
      return ResourceLimits{};
    }
    if (name == "small") {
      return ResourceLimits{8, 128, 256};
    }
    if (name == "large") {
      return ResourceLimits{24, 4096, 16384};
    }
    return std::nullopt;
  }

  char const* to_string(CompletionStatus s) {
    return s == CompletionStatus::Complete ? "complete" : "bounded-incomplete";
  }

  char const* to_string(Equality e) {
    switch (e) {
      case Equality::Equal:
        return "equal";
      case Equality::Unequal:
        return "unequal";
      default:
        return "undecided";
    }
  }

  bool shortlex_less(Word const& a, Word const& b) {
    if (a.length() != b.length()) {
      return a.length() < b.length();
    }
    return a.letters() < b.letters();
  }

  namespace {

    using Letters = std::vector<GenIndex>;

    bool ends_with(Letters const& s, Letters const& suffix) {
      return s.size() >= suffix.size()
             && std::equal(suffix.rbegin(), suffix.rend(), s.rbegin());
    }

    bool contains_factor(Letters const& s, Letters const& factor) {
      return std::search(s.begin(), s.end(), factor.begin(), factor.end())
             != s.end();
    }

    Word with_letters(Word const& shape, Letters letters) {
      return Word(shape.src(), shape.dst(), std::move(letters));
    }

    // Normal forms by the stack method. A letter is pushed, then while a rule
    // left-hand side is a suffix of the stack, it is popped and the rule's
    // right-hand side is fed back into the input. Among matching rules the
    // shortest left-hand side wins, then the lowest rule index.
    template <typename Candidates>
    Letters reduce(Letters const&                  input,
                   std::vector<RewriteRule> const& rules,
                   Candidates&&                    candidates) {
      Letters stack;
      Letters todo(input.rbegin(), input.rend());
      while (!todo.empty()) {
        stack.push_back(todo.back());
        todo.pop_back();
        std::optional<std::size_t> best;
        for (std::size_t r : candidates(stack.back())) {
          auto const& lhs = rules[r].lhs.letters();
          if (!ends_with(stack, lhs)) {
            continue;
          }
          if (!best || lhs.size() < rules[*best].lhs.length()) {
            best = r;
          }
        }
        if (best) {
          auto const& rule = rules[*best];
          stack.resize(stack.size() - rule.lhs.length());
          todo.insert(todo.end(),
                      rule.rhs.letters().rbegin(),
                      rule.rhs.letters().rend());
        }
      }
      return stack;
    }

    class Completion {
     public:
      Completion(Presentation const& p, ResourceLimits limits)
          : p_(p), limits_(limits) {}

      void run() {
        for (auto const& r : p_.relations()) {
          pending_.emplace_back(r.lhs, r.rhs);
        }
        drain();
        std::set<std::pair<std::size_t, std::size_t>> examined;
        while (!stopped_) {
          std::vector<std::tuple<std::size_t, std::size_t, std::size_t,
                                 std::size_t>>
              queue;
          for (std::size_t i = 0; i < rules_.size(); ++i) {
            for (std::size_t j = 0; j < rules_.size(); ++j) {
              if (!active_[i] || !active_[j]
                  || !examined.emplace(i, j).second) {
                continue;
              }
              auto const& li = rules_[i].lhs.letters();
              auto const& lj = rules_[j].lhs.letters();
              for (std::size_t k = 1; k < std::min(li.size(), lj.size());
                   ++k) {
                if (std::equal(li.end() - k, li.end(), lj.begin())) {
                  queue.emplace_back(li.size() + lj.size() - k, i, j, k);
                }
              }
            }
          }
          if (queue.empty()) {
            break;
          }
          std::sort(queue.begin(), queue.end());
          for (auto const& [len, i, j, k] : queue) {
            if (stopped_) {
              break;
            }
            if (!active_[i] || !active_[j]) {
              continue;
            }
            if (len > limits_.max_word_len) {
              give_up_partially("max_word_len");
              continue;
            }
            auto [a, b] = critical_pair(i, j, k);
            pending_.emplace_back(std::move(a), std::move(b));
            drain();
          }
        }
        if (!incomplete_ && !locally_confluent()) {
          give_up_partially("local confluence");
        }
      }

      std::vector<RewriteRule> result() const {
        std::vector<RewriteRule> out;
        for (std::size_t i = 0; i < rules_.size(); ++i) {
          if (active_[i]) {
            out.push_back(rules_[i]);
          }
        }
        return out;
      }

      bool incomplete() const {
        return incomplete_;
      }
      std::string const& bound() const {
        return bound_;
      }

     private:
      Word normalize(Word const& w) const {
        auto letters = reduce(
            w.letters(),
            rules_,
            [this](GenIndex) -> std::vector<std::size_t> const& {
              return active_indices_;
            });
        return with_letters(w, std::move(letters));
      }

      std::pair<Word, Word>
      critical_pair(std::size_t i, std::size_t j, std::size_t k) const {
        auto const& ri = rules_[i];
        auto const& rj = rules_[j];
        Letters     a  = ri.rhs.letters();
        a.insert(a.end(), rj.lhs.letters().begin() + k, rj.lhs.letters().end());
        Letters b(ri.lhs.letters().begin(), ri.lhs.letters().end() - k);
        b.insert(b.end(), rj.rhs.letters().begin(), rj.rhs.letters().end());
        return {Word(ri.lhs.src(), rj.lhs.dst(), std::move(a)),
                Word(ri.lhs.src(), rj.lhs.dst(), std::move(b))};
      }

      bool locally_confluent() const {
        for (std::size_t i = 0; i < rules_.size(); ++i) {
          for (std::size_t j = 0; j < rules_.size(); ++j) {
            if (!active_[i] || !active_[j]) {
              continue;
            }
            auto const& li = rules_[i].lhs.letters();
            auto const& lj = rules_[j].lhs.letters();
            for (std::size_t k = 1; k < std::min(li.size(), lj.size()); ++k) {
              if (!std::equal(li.end() - k, li.end(), lj.begin())) {
                continue;
              }
              auto [a, b] = critical_pair(i, j, k);
              if (normalize(a) != normalize(b)) {
                return false;
              }
            }
          }
        }
        return true;
      }

      void give_up_partially(std::string const& bound) {
        if (!incomplete_) {
          bound_ = bound;
        }
        incomplete_ = true;
      }

      void stop(std::string const& bound) {
        give_up_partially(bound);
        stopped_ = true;
        pending_.clear();
      }

      void drain() {
        while (!pending_.empty() && !stopped_) {
          auto [u, v] = std::move(pending_.front());
          pending_.pop_front();
          u = normalize(u);
          v = normalize(v);
          if (u.letters() == v.letters()) {
            continue;
          }
          if (shortlex_less(u, v)) {
            std::swap(u, v);
          }
          if (u.length() > limits_.max_word_len) {
            give_up_partially("max_word_len");
            continue;
          }
          add_rule({std::move(u), std::move(v)});
        }
      }

      void add_rule(RewriteRule rule) {
        std::size_t const fresh = rules_.size();
        rules_.push_back(std::move(rule));
        active_.push_back(true);
        refresh_indices();
        if (active_indices_.size() > limits_.max_rules
            || rules_.size() > 4 * limits_.max_rules) {
          stop("max_rules");
          return;
        }
        auto const& lhs = rules_[fresh].lhs.letters();
        for (std::size_t j = 0; j < fresh; ++j) {
          if (!active_[j]) {
            continue;
          }
          if (contains_factor(rules_[j].lhs.letters(), lhs)) {
            active_[j] = false;
            pending_.emplace_back(rules_[j].lhs, rules_[j].rhs);
          }
        }
        refresh_indices();
        for (std::size_t j = 0; j < fresh; ++j) {
          if (active_[j]) {
            rules_[j].rhs = normalize(rules_[j].rhs);
          }
        }
      }

      void refresh_indices() {
        active_indices_.clear();
        for (std::size_t i = 0; i < rules_.size(); ++i) {
          if (active_[i]) {
            active_indices_.push_back(i);
          }
        }
      }

      Presentation const&               p_;
      ResourceLimits                    limits_;
      std::vector<RewriteRule>          rules_;
      std::vector<bool>                 active_;
      std::vector<std::size_t>          active_indices_;
      std::deque<std::pair<Word, Word>> pending_;
      bool                              incomplete_ = false;
      bool                              stopped_    = false;
      std::string                       bound_;
    };

  }  // namespace

  RewriteSystem RewriteSystem::complete(std::shared_ptr<Presentation const> p,
                                        ResourceLimits                      limits) {
    limits.check();
    Completion completion(*p, limits);
    completion.run();
    RewriteSystem rs;
    rs.presentation_ = std::move(p);
    rs.rules_        = completion.result();
    rs.limits_       = limits;
    if (completion.incomplete()) {
      rs.status_    = CompletionStatus::BoundedIncomplete;
      rs.exhausted_ = completion.bound();
    }
    rs.rebuild_index();
    return rs;
  }

  void RewriteSystem::rebuild_index() {
    by_last_letter_.assign(presentation_->number_of_generators(), {});
    for (std::size_t r = 0; r < rules_.size(); ++r) {
      by_last_letter_[rules_[r].lhs.letters().back()].push_back(r);
    }
  }

  std::optional<std::size_t>
  RewriteSystem::suffix_redex(std::vector<GenIndex> const& stack) const {
    if (stack.empty()) {
      return std::nullopt;
    }
    std::optional<std::size_t> best;
    for (std::size_t r : by_last_letter_[stack.back()]) {
      auto const& lhs = rules_[r].lhs.letters();
      if (ends_with(stack, lhs)
          && (!best || lhs.size() < rules_[*best].lhs.length())) {
        best = r;
      }
    }
    return best;
  }

  Word RewriteSystem::normalize(Word const& w) const {
    auto letters = reduce(
        w.letters(),
        rules_,
        [this](GenIndex g) -> std::vector<std::size_t> const& {
          return by_last_letter_[g];
        });
    return with_letters(w, std::move(letters));
  }

  bool RewriteSystem::is_reducible(Word const& w) const {
    Letters prefix;
    for (GenIndex g : w.letters()) {
      prefix.push_back(g);
      if (suffix_redex(prefix)) {
        return true;
      }
    }
    return false;
  }

  Equality RewriteSystem::equal(Word const& a, Word const& b) const {
    if (!a.parallel_to(b)) {
      throw UsageError("equality of non-parallel words");
    }
    auto na = normalize(a);
    auto nb = normalize(b);
    if (na == nb) {
      return Equality::Equal;
    }
    if (is_complete()) {
      return Equality::Unequal;
    }
    auto cls = congruence_class(na);
    if (!cls) {
      return Equality::Undecided;
    }
    return std::find(cls->begin(), cls->end(), nb) == cls->end()
               ? Equality::Unequal
               : Equality::Equal;
  }

  std::optional<std::vector<Word>>
  RewriteSystem::congruence_class(Word const& w) const {
    auto const&    p = *presentation_;
    std::set<Word> seen{w};
    std::deque<Word> queue{w};

    // Objects visited along a word: position i sits before letter i.
    auto objects_along = [&p](Word const& u) {
      std::vector<ObjIndex> objs{u.src()};
      for (GenIndex g : u.letters()) {
        objs.push_back(p.generator(g).dst);
      }
      return objs;
    };
    auto splice = [](Word const& u, std::size_t pos, std::size_t len,
                     Letters const& with) {
      Letters out(u.letters().begin(), u.letters().begin() + pos);
      out.insert(out.end(), with.begin(), with.end());
      out.insert(out.end(), u.letters().begin() + pos + len, u.letters().end());
      return Word(u.src(), u.dst(), std::move(out));
    };

    while (!queue.empty()) {
      Word u = std::move(queue.front());
      queue.pop_front();
      auto const         objs = objects_along(u);
      std::vector<Word>  next;
      for (auto const& rule : rules_) {
        for (int dir = 0; dir < 2; ++dir) {
          auto const& from = dir == 0 ? rule.lhs : rule.rhs;
          auto const& to   = dir == 0 ? rule.rhs : rule.lhs;
          for (std::size_t pos = 0; pos <= u.length(); ++pos) {
            if (objs[pos] != from.src()) {
              continue;
            }
            if (pos + from.length() > u.length()) {
              break;
            }
            if (std::equal(from.letters().begin(), from.letters().end(),
                           u.letters().begin() + pos)) {
              next.push_back(splice(u, pos, from.length(), to.letters()));
            }
          }
        }
      }
      for (auto& v : next) {
        if (v.length() > limits_.max_word_len) {
          return std::nullopt;
        }
        if (seen.insert(v).second) {
          if (seen.size() > limits_.max_homset) {
            return std::nullopt;
          }
          queue.push_back(std::move(v));
        }
      }
    }
    return std::vector<Word>(seen.begin(), seen.end());
  }

  std::vector<Word> RewriteSystem::homset(ObjIndex x, ObjIndex y) const {
    auto const& p = *presentation_;
    if (x >= p.number_of_objects() || y >= p.number_of_objects()) {
      throw UsageError("unknown object in hom-set query");
    }
    auto const what = "hom(" + p.object_name(x) + ", " + p.object_name(y) + ")";
    if (!is_complete()) {
      throw UndecidedError(what + " over an incomplete rewriting system",
                           exhausted_);
    }
    // Objects from which y is reachable in the generator graph.
    std::vector<bool> reaches(p.number_of_objects(), false);
    reaches[y] = true;
    for (bool changed = true; changed;) {
      changed = false;
      for (auto const& g : p.generators()) {
        if (reaches[g.dst] && !reaches[g.src]) {
          reaches[g.src] = changed = true;
        }
      }
    }
    std::vector<Word> out;
    if (!reaches[x]) {
      return out;
    }
    std::vector<std::vector<GenIndex>> outgoing(p.number_of_objects());
    for (GenIndex g = 0; g < p.number_of_generators(); ++g) {
      if (reaches[p.generator(g).dst]) {
        outgoing[p.generator(g).src].push_back(g);
      }
    }
    std::vector<Word> layer{Word::identity(x)};
    std::vector<std::size_t> per_target(p.number_of_objects(), 0);
    for (std::size_t len = 0; !layer.empty(); ++len) {
      for (auto const& w : layer) {
        if (++per_target[w.dst()] > limits_.max_homset) {
          throw UndecidedError(what + " has too many elements", "max_homset");
        }
        if (w.dst() == y) {
          out.push_back(w);
        }
      }
      std::vector<Word> next;
      for (auto const& w : layer) {
        for (GenIndex g : outgoing[w.dst()]) {
          Letters letters = w.letters();
          letters.push_back(g);
          if (suffix_redex(letters)) {
            continue;
          }
          next.emplace_back(x, p.generator(g).dst, std::move(letters));
        }
      }
      if (!next.empty() && len + 1 > limits_.max_word_len) {
        throw UndecidedError(what + " may be infinite", "max_word_len");
      }
      layer = std::move(next);
    }
    return out;
  }

  std::optional<Word> RewriteSystem::find_inverse(Word const& w) const {
    auto const src = Word::identity(w.src());
    auto const dst = Word::identity(w.dst());
    if (normalize(w).is_identity()) {
      return dst;
    }
    for (auto const& v : homset(w.dst(), w.src())) {
      if (normalize(compose(w, v)) == src && normalize(compose(v, w)) == dst) {
        return v;
      }
    }
    return std::nullopt;
  }

}  // namespace loccat
