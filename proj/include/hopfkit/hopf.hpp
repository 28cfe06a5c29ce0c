#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfkit/error.hpp"
#include "hopfkit/report.hpp"
#include "hopfkit/rewrite.hpp"

namespace hopfkit {

/// Which words form a finite basis window and how large it is.
struct WindowSpec {
  Weight weight = Weight::Length;
  unsigned bound = 2;
  std::optional<std::size_t> length_cap;
};

inline const char* weight_name(Weight w) {
  switch (w) {
    case Weight::Grade: return "grade";
    case Weight::Filtration: return "filtration";
    case Weight::Length: return "length";
  }
  return "length";
}

/// Metadata carried alongside the algebraic data. None of it affects
/// verification.
struct PresentationInfo {
  std::string name;
  std::string description;
  /// Smallest n with H generated by H_n, when known.
  std::optional<unsigned> generation_degree;
  /// Group-likes over which m_H is computed.
  std::vector<Word> representatives;
  /// Whether `representatives` determine m_H exactly.
  bool exhaustive_representatives = false;
  bool grading_declared = false;
  bool filtration_declared = false;
  WindowSpec window;
};

/// A finitely presented Hopf algebra: the quotient algebra given by a rule
/// set together with Delta, epsilon and S on generators. Structural
/// operations refuse the presentation until `verify()` succeeds.
class HopfPresentation {
 public:
  explicit HopfPresentation(RuleSet rules)
      : rules_(std::move(rules)),
        coproduct_(alphabet().size()),
        counit_(alphabet().size()),
        antipode_(alphabet().size()) {}

  const RuleSet& rules() const noexcept { return rules_; }
  const Field& field() const noexcept { return rules_.field(); }
  const Alphabet& alphabet() const noexcept { return *rules_.alphabet(); }
  const AlphabetPtr& alphabet_ptr() const noexcept { return rules_.alphabet(); }
  PresentationInfo& info() noexcept { return info_; }
  const PresentationInfo& info() const noexcept { return info_; }

  void set_coproduct(Symbol s, const TensorPoly& t) {
    coproduct_.at(s) = rules_.normalize(t);
    invalidate();
  }
  void set_counit(Symbol s, const Scalar& c) {
    counit_.at(s) = c;
    invalidate();
  }
  void set_antipode(Symbol s, const NcPoly& p) {
    antipode_.at(s) = rules_.normalize(p);
    invalidate();
  }
  void add_group_like(Word w) {
    group_likes_.push_back(std::move(w));
    invalidate();
  }

  const std::optional<TensorPoly>& coproduct(Symbol s) const { return coproduct_.at(s); }
  const std::optional<Scalar>& counit_of(Symbol s) const { return counit_.at(s); }
  const std::optional<NcPoly>& antipode_of(Symbol s) const { return antipode_.at(s); }
  const std::vector<Word>& group_likes() const noexcept { return group_likes_; }

  bool trusted() const noexcept { return trusted_; }
  void require_trusted() const {
    if (!trusted_) throw UntrustedPresentation();
  }

  // Elements

  NcPoly zero() const { return rules_.zero(); }
  NcPoly one() const { return rules_.one(); }
  NcPoly word(const Word& w) const { return rules_.normalize_word(w); }
  NcPoly mul(const NcPoly& a, const NcPoly& b) const { return rules_.mul(a, b); }
  TensorPoly tensor(const NcPoly& a, const NcPoly& b) const { return TensorPoly::pure({a, b}); }

  /// Multiplicative extension of the generator coproducts, slots normalized.
  TensorPoly delta(const NcPoly& h) const {
    TensorPoly out(field(), alphabet_ptr());
    for (const auto& [w, c] : h.terms()) out += delta_word(w).scaled(c);
    return out;
  }
  TensorPoly delta_word(const Word& w) const {
    TensorPoly acc = TensorPoly::unit(field(), alphabet_ptr());
    for (Symbol s : w) acc = rules_.tensor_mul(acc, require(coproduct_[s], s, "coproduct"));
    return acc;
  }

  Scalar counit(const NcPoly& h) const {
    Scalar out = Scalar::zero(field());
    for (const auto& [w, c] : h.terms()) out += c * counit_word(w);
    return out;
  }
  Scalar counit_word(const Word& w) const {
    Scalar acc = Scalar::one(field());
    for (Symbol s : w) acc *= require(counit_[s], s, "counit");
    return acc;
  }

  /// Anti-multiplicative extension: S(s1...sk) = S(sk)...S(s1).
  NcPoly antipode(const NcPoly& h) const {
    NcPoly out = zero();
    for (const auto& [w, c] : h.terms()) out += antipode_word(w).scaled(c);
    return out;
  }
  NcPoly antipode_word(const Word& w) const {
    NcPoly acc = one();
    for (auto it = w.rbegin(); it != w.rend(); ++it) acc = rules_.mul(acc, require(antipode_[*it], *it, "antipode"));
    return acc;
  }

  /// The two-sided inverse of a group-like word among normal words, if found
  /// among the declared group-likes, 1 and the formal-inverse word.
  std::optional<Word> inverse_of(const Word& g) const {
    std::vector<Word> candidates = group_likes_;
    candidates.push_back(Word{});
    Word formal;
    bool all_invertible = true;
    for (auto it = g.rbegin(); it != g.rend(); ++it) {
      const auto& inv = alphabet().info(*it).inverse;
      if (!inv) {
        all_invertible = false;
        break;
      }
      formal.push_back(*inv);
    }
    if (all_invertible) {
      NcPoly n = word(formal);
      if (n.size() == 1 && n.terms().begin()->second.is_one()) candidates.push_back(n.terms().begin()->first);
    }
    for (const Word& c : candidates) {
      NcPoly cw = word(c);
      if (mul(word(g), cw) == one() && mul(cw, word(g)) == one()) {
        if (cw.size() == 1 && cw.terms().begin()->second.is_one()) return cw.terms().begin()->first;
        return c;
      }
    }
    return std::nullopt;
  }

  /// Rule well-definedness of Delta and epsilon, coassociativity and the
  /// counit law on generators, and the declared group-likes.
  CheckReport verify_bialgebra() {
    trusted_ = false;
    bialgebra_ok_ = false;
    CheckReport report("bialgebra axioms (well-definedness, coassociativity, counit, group-likes)");
    const Alphabet& a = alphabet();
    for (Symbol s = 0; s < a.size(); ++s) {
      if (!coproduct_[s]) report.fail("missing coproduct for " + a.name(s));
      if (!counit_[s]) report.fail("missing counit for " + a.name(s));
      if (!antipode_[s]) report.fail("missing antipode for " + a.name(s));
    }
    if (!report.passed) return report;

    for (const auto& rule : rules_.rules()) {
      const std::string rel = a.format(rule.lhs) + " = " + rule.rhs.str();
      if (!(delta_word(rule.lhs) == delta(rule.rhs)))
        report.fail("coproduct not well defined on relation " + rel + ": Delta(lhs) = " + delta_word(rule.lhs).str() +
                    ", Delta(rhs) = " + delta(rule.rhs).str());
      if (!(counit_word(rule.lhs) == counit(rule.rhs)))
        report.fail("counit not well defined on relation " + rel);
    }
    for (Symbol s = 0; s < a.size(); ++s) {
      const Word g{s};
      const TensorPoly& d = *coproduct_[s];
      const Tensor3 left = delta_left(d);
      const Tensor3 right = delta_right(d);
      if (!(left == right))
        report.fail("coassociativity fails on " + a.name(s) + ": (Delta x id)Delta = " + left.str() +
                    ", (id x Delta)Delta = " + right.str());
      NcPoly eps_left = zero(), eps_right = zero();
      for (const auto& [k, c] : d.terms()) {
        eps_left += word(k[1]).scaled(c * counit_word(k[0]));
        eps_right += word(k[0]).scaled(c * counit_word(k[1]));
      }
      const NcPoly gen = word(g);
      if (!(eps_left == gen)) report.fail("counit law (eps x id)Delta fails on " + a.name(s) + ": got " + eps_left.str());
      if (!(eps_right == gen)) report.fail("counit law (id x eps)Delta fails on " + a.name(s) + ": got " + eps_right.str());
    }
    for (const Word& g : group_likes_) {
      const NcPoly gp = word(g);
      if (!(delta(gp) == tensor(gp, gp))) report.fail("declared group-like " + a.format(g) + " has Delta = " + delta(gp).str());
      if (!counit(gp).is_one()) report.fail("declared group-like " + a.format(g) + " has counit " + counit(gp).str());
      if (!inverse_of(g)) report.fail("declared group-like " + a.format(g) + " has no inverse among normal words");
    }
    add_confluence_warning(report);
    bialgebra_ok_ = report.passed;
    return report;
  }

  /// m(S x id)Delta = eps 1 = m(id x S)Delta on generators and S(lhs) = S(rhs)
  /// on relations. Marks the presentation TRUSTED on success.
  CheckReport verify_antipode() {
    CheckReport report("antipode axiom m(S x id)Delta = eps 1 = m(id x S)Delta and S well defined");
    if (!bialgebra_ok_) {
      report.fail("bialgebra axioms have not been verified");
      return report;
    }
    const Alphabet& a = alphabet();
    for (Symbol s = 0; s < a.size(); ++s) {
      const TensorPoly& d = *coproduct_[s];
      NcPoly left = zero(), right = zero();
      for (const auto& [k, c] : d.terms()) {
        left += mul(antipode_word(k[0]), word(k[1])).scaled(c);
        right += mul(word(k[0]), antipode_word(k[1])).scaled(c);
      }
      const NcPoly expected = rules_.constant(*counit_[s]);
      if (!(left == expected)) report.fail("m(S x id)Delta(" + a.name(s) + ") = " + left.str() + ", expected " + expected.str());
      if (!(right == expected)) report.fail("m(id x S)Delta(" + a.name(s) + ") = " + right.str() + ", expected " + expected.str());
    }
    for (const auto& rule : rules_.rules()) {
      const NcPoly l = antipode_word(rule.lhs);
      const NcPoly r = antipode(rule.rhs);
      if (!(l == r))
        report.fail("antipode not well defined on relation " + a.format(rule.lhs) + " = " + rule.rhs.str() +
                    ": S(lhs) = " + l.str() + ", S(rhs) = " + r.str());
    }
    add_confluence_warning(report);
    trusted_ = report.passed;
    return report;
  }

  /// Both verifications in order.
  std::vector<CheckReport> verify() {
    std::vector<CheckReport> out{verify_bialgebra()};
    out.push_back(verify_antipode());
    return out;
  }

  std::size_t confluence_depth() const {
    std::size_t longest = 1;
    for (const auto& r : rules_.rules()) longest = std::max(longest, r.lhs.size());
    return std::max<std::size_t>(6, 2 * longest - 1);
  }

 private:
  template <class T>
  static const T& require(const std::optional<T>& v, Symbol s, const char* what) {
    if (!v) throw Error(std::string("missing ") + what + " for generator #" + std::to_string(s));
    return *v;
  }

  Tensor3 delta_left(const TensorPoly& d) const {
    Tensor3 out(field(), alphabet_ptr());
    for (const auto& [k, c] : d.terms()) {
      const TensorPoly inner = delta_word(k[0]);
      for (const auto& [k2, c2] : inner.terms()) out.add_term({k2[0], k2[1], k[1]}, c * c2);
    }
    return out;
  }
  Tensor3 delta_right(const TensorPoly& d) const {
    Tensor3 out(field(), alphabet_ptr());
    for (const auto& [k, c] : d.terms()) {
      const TensorPoly inner = delta_word(k[1]);
      for (const auto& [k2, c2] : inner.terms()) out.add_term({k[0], k2[0], k2[1]}, c * c2);
    }
    return out;
  }

  void add_confluence_warning(CheckReport& report) const {
    const auto pairs = rules_.confluence_report(confluence_depth());
    if (!pairs.empty())
      report.warn(std::to_string(pairs.size()) +
                  " non-joinable overlaps; rule well-definedness checks are only sound up to confluence");
  }

  void invalidate() {
    trusted_ = false;
    bialgebra_ok_ = false;
  }

  RuleSet rules_;
  std::vector<std::optional<TensorPoly>> coproduct_;
  std::vector<std::optional<Scalar>> counit_;
  std::vector<std::optional<NcPoly>> antipode_;
  std::vector<Word> group_likes_;
  PresentationInfo info_;
  bool bialgebra_ok_ = false;
  bool trusted_ = false;
};

inline TensorPoly delta(const NcPoly& h, const HopfPresentation& H) { return H.delta(h); }
inline Scalar counit(const NcPoly& h, const HopfPresentation& H) { return H.counit(h); }
inline NcPoly antipode(const NcPoly& h, const HopfPresentation& H) { return H.antipode(h); }

}  // namespace hopfkit
