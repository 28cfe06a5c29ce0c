#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfkit/error.hpp"
#include "hopfkit/ncpoly.hpp"

namespace hopfkit {

/// Oriented relation lhs -> rhs. Every word of rhs lies strictly below lhs.
struct RewriteRule {
  Word lhs;
  NcPoly rhs;
};

/// Where and how a word can be rewritten.
struct Redex {
  std::size_t position;
  std::size_t rule;
};

/// An ambiguity whose two one-step reductions normalize differently.
struct CriticalPair {
  Word word;
  std::size_t first_rule;
  std::size_t second_rule;
  NcPoly first_result;
  NcPoly second_result;
};

/// Terminating rewrite system over one alphabet and field; presents the
/// quotient algebra k<alphabet>/(lhs - rhs).
class RuleSet {
 public:
  RuleSet(Field field, AlphabetPtr alphabet)
      : field_(std::move(field)), alphabet_(std::move(alphabet)), order_(alphabet_), by_first_(alphabet_->size()) {}

  /// Throws TerminationOrderViolation when some rhs word is not below lhs.
  void add(Word lhs, NcPoly rhs) {
    if (lhs.empty()) throw TerminationOrderViolation("relation with empty left-hand side");
    if (!same_field(rhs.field(), field_)) throw FieldMismatch("rule rhs");
    if (!same_alphabet(rhs.alphabet(), alphabet_)) throw AlphabetMismatch();
    for (const auto& [w, c] : rhs.terms()) {
      if (!order_(w, lhs)) {
        throw TerminationOrderViolation("relation " + alphabet_->format(lhs) + " = " + rhs.str() +
                                        " is not oriented: word " + alphabet_->format(w) +
                                        " is not below the left-hand side in the monomial order "
                                        "(grade, then length, then generator order); swap the sides "
                                        "or reorder the generators");
      }
    }
    by_first_[lhs.front()].push_back(rules_.size());
    rules_.push_back({std::move(lhs), std::move(rhs)});
  }

  const Field& field() const noexcept { return field_; }
  const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
  const WordOrder& order() const noexcept { return order_; }
  const std::vector<RewriteRule>& rules() const noexcept { return rules_; }

  NcPoly zero() const { return NcPoly(field_, alphabet_); }
  NcPoly one() const { return NcPoly::constant(field_, alphabet_, Scalar::one(field_)); }
  NcPoly word(Word w) const { return NcPoly::monomial(field_, alphabet_, std::move(w)); }
  NcPoly constant(const Scalar& c) const { return NcPoly::constant(field_, alphabet_, c); }
  Scalar scalar(long long v) const { return Scalar(field_, v); }

  bool matches_at(const Word& w, std::size_t pos, const Word& lhs) const {
    return pos + lhs.size() <= w.size() && std::equal(lhs.begin(), lhs.end(), w.begin() + static_cast<long>(pos));
  }

  /// Leftmost position holding some lhs; the earliest-listed rule wins there.
  std::optional<Redex> find_redex(const Word& w) const {
    for (std::size_t pos = 0; pos < w.size(); ++pos)
      for (std::size_t r : by_first_[w[pos]])
        if (matches_at(w, pos, rules_[r].lhs)) return Redex{pos, r};
    return std::nullopt;
  }
  bool is_normal(const Word& w) const { return !find_redex(w); }

  /// One rewriting step of c*w at the given redex, added into `out`.
  template <class Sink>
  void rewrite_once(const Word& w, const Scalar& c, const Redex& at, Sink&& out) const {
    const RewriteRule& rule = rules_[at.rule];
    for (const auto& [u, d] : rule.rhs.terms()) {
      Word next;
      next.reserve(w.size() - rule.lhs.size() + u.size());
      next.insert(next.end(), w.begin(), w.begin() + static_cast<long>(at.position));
      next.insert(next.end(), u.begin(), u.end());
      next.insert(next.end(), w.begin() + static_cast<long>(at.position + rule.lhs.size()), w.end());
      out(std::move(next), c * d);
    }
  }

  NcPoly rewrite_once(const Word& w, const Redex& at) const {
    NcPoly r = zero();
    rewrite_once(w, Scalar::one(field_), at, [&](Word u, const Scalar& c) { r.add_term(std::move(u), c); });
    return r;
  }

  /// Normal form. Always rewrites the largest pending word, so finished
  /// words never reappear and terms combine as early as possible.
  NcPoly normalize(const NcPoly& p) const {
    NcPoly::Terms pending = p.terms();
    NcPoly result = zero();
    auto add = [&](Word u, const Scalar& c) {
      if (c.is_zero()) return;
      auto [it, inserted] = pending.try_emplace(std::move(u), c);
      if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) pending.erase(it);
      }
    };
    while (!pending.empty()) {
      auto node = pending.extract(std::prev(pending.end()));
      auto redex = find_redex(node.key());
      if (!redex) {
        result.add_term(std::move(node.key()), node.mapped());
        continue;
      }
      rewrite_once(node.key(), node.mapped(), *redex, add);
    }
    return result;
  }
  NcPoly normalize_word(const Word& w) const { return normalize(word(w)); }

  NcPoly mul(const NcPoly& a, const NcPoly& b) const { return normalize(concat_mul(a, b)); }

  NcPoly power(const NcPoly& a, unsigned e) const {
    NcPoly r = one();
    for (unsigned i = 0; i < e; ++i) r = mul(r, a);
    return r;
  }

  /// Slot-wise product in the N-fold tensor power, slots renormalized.
  template <std::size_t N>
  Tensor<N> tensor_mul(const Tensor<N>& a, const Tensor<N>& b) const {
    a.check_compatible(b);
    Tensor<N> r(field_, alphabet_);
    for (const auto& [ka, ca] : a.terms()) {
      for (const auto& [kb, cb] : b.terms()) {
        std::array<NcPoly, N> slots{zero_array<N>()};
        for (std::size_t i = 0; i < N; ++i) slots[i] = normalize_word(concat(ka[i], kb[i]));
        r += Tensor<N>::pure(slots).scaled(ca * cb);
      }
    }
    return r;
  }

  template <std::size_t N>
  Tensor<N> normalize(const Tensor<N>& t) const {
    Tensor<N> r(field_, alphabet_);
    for (const auto& [k, c] : t.terms()) {
      std::array<NcPoly, N> slots{zero_array<N>()};
      for (std::size_t i = 0; i < N; ++i) slots[i] = normalize_word(k[i]);
      r += Tensor<N>::pure(slots).scaled(c);
    }
    return r;
  }

  /// Overlap and inclusion ambiguities of length <= depth whose two
  /// reductions have different normal forms. Empty means locally confluent
  /// up to that length.
  std::vector<CriticalPair> confluence_report(std::size_t depth) const {
    std::vector<CriticalPair> bad;
    auto check = [&](const Word& w, std::size_t i, Redex a, std::size_t j, Redex b) {
      NcPoly ra = normalize(rewrite_once(w, a));
      NcPoly rb = normalize(rewrite_once(w, b));
      if (!(ra == rb)) bad.push_back({w, i, j, std::move(ra), std::move(rb)});
    };
    for (std::size_t i = 0; i < rules_.size(); ++i) {
      const Word& li = rules_[i].lhs;
      for (std::size_t j = 0; j < rules_.size(); ++j) {
        const Word& lj = rules_[j].lhs;
        // suffix of li equals prefix of lj
        for (std::size_t k = 1; k < std::min(li.size(), lj.size()); ++k) {
          if (!std::equal(li.end() - static_cast<long>(k), li.end(), lj.begin())) continue;
          Word w = li;
          w.insert(w.end(), lj.begin() + static_cast<long>(k), lj.end());
          if (w.size() > depth) continue;
          check(w, i, Redex{0, i}, j, Redex{li.size() - k, j});
        }
        // lj occurs inside li
        if (i != j && lj.size() <= li.size() && li.size() <= depth) {
          for (std::size_t pos = 0; pos + lj.size() <= li.size(); ++pos)
            if (matches_at(li, pos, lj)) check(li, i, Redex{0, i}, j, Redex{pos, j});
        }
      }
    }
    return bad;
  }

  /// Normal words of weight <= bound, in ascending monomial order. Words
  /// longer than `length_cap` are not enumerated; weight-0 symbols (the
  /// group-likes) otherwise make the set infinite.
  std::vector<Word> word_basis(unsigned bound, Weight weight, std::optional<std::size_t> length_cap = {}) const {
    const std::size_t cap = length_cap.value_or(weight == Weight::Length ? bound : 2 * bound + 4);
    std::vector<Word> out{Word{}};
    std::vector<Word> frontier{Word{}};
    while (!frontier.empty()) {
      std::vector<Word> next;
      for (const Word& w : frontier) {
        if (w.size() >= cap) continue;
        for (std::size_t s = 0; s < alphabet_->size(); ++s) {
          Word u = w;
          u.push_back(static_cast<Symbol>(s));
          if (alphabet_->weight(u, weight) > bound) continue;
          if (!suffix_normal(u)) continue;
          next.push_back(u);
        }
      }
      out.insert(out.end(), next.begin(), next.end());
      frontier = std::move(next);
    }
    std::sort(out.begin(), out.end(), order_);
    return out;
  }

 private:
  template <std::size_t N>
  std::array<NcPoly, N> zero_array() const {
    return [&]<std::size_t... I>(std::index_sequence<I...>) {
      return std::array<NcPoly, N>{((void)I, zero())...};
    }(std::make_index_sequence<N>{});
  }

  // w's proper prefix is already normal, so only lhs's ending at the last
  // symbol need checking.
  bool suffix_normal(const Word& w) const {
    for (const auto& rule : rules_)
      if (rule.lhs.size() <= w.size() && matches_at(w, w.size() - rule.lhs.size(), rule.lhs)) return false;
    return true;
  }

  Field field_;
  AlphabetPtr alphabet_;
  WordOrder order_;
  std::vector<RewriteRule> rules_;
  std::vector<std::vector<std::size_t>> by_first_;
};

/// Normal form of p under the rule set.
inline NcPoly normalize(const NcPoly& p, const RuleSet& rules) { return rules.normalize(p); }
inline NcPoly quotient_mul(const NcPoly& a, const NcPoly& b, const RuleSet& rules) { return rules.mul(a, b); }

}  // namespace hopfkit
