#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfkit/error.hpp"
#include "hopfkit/scalar.hpp"

namespace hopfkit {

using Symbol = std::uint16_t;
/// A monomial of the free algebra; the empty word is the unit 1.
using Word = std::vector<Symbol>;

enum class Weight { Grade, Filtration, Length };

struct SymbolInfo {
  std::string name;
  std::optional<Symbol> inverse;
  /// Set on the second member of an inverse pair (K^-1 for K).
  bool formal_inverse = false;
  unsigned grade = 0;
  unsigned filtration = 0;
};

/// Ordered generator symbols. Position in the alphabet is the precedence
/// used by the monomial order.
class Alphabet {
 public:
  Symbol add(std::string name, unsigned grade = 0, unsigned filtration = 0) {
    check_new(name);
    symbols_.push_back({std::move(name), std::nullopt, false, grade, filtration});
    return static_cast<Symbol>(symbols_.size() - 1);
  }

  /// Adds g and its formal inverse; both carry weight 0.
  std::pair<Symbol, Symbol> add_invertible(std::string name, std::string inverse_name) {
    check_new(name);
    check_new(inverse_name);
    if (name == inverse_name) throw Error("a symbol cannot be its own formal inverse");
    const auto g = static_cast<Symbol>(symbols_.size());
    const auto gi = static_cast<Symbol>(g + 1);
    symbols_.push_back({std::move(name), gi, false, 0, 0});
    symbols_.push_back({std::move(inverse_name), g, true, 0, 0});
    return {g, gi};
  }

  void set_weights(Symbol s, unsigned grade, unsigned filtration) {
    auto& info = symbols_.at(s);
    if (info.inverse && (grade != 0 || filtration != 0))
      throw Error("invertible symbol '" + info.name + "' must carry weight 0");
    info.grade = grade;
    info.filtration = filtration;
  }

  std::size_t size() const noexcept { return symbols_.size(); }
  const SymbolInfo& info(Symbol s) const { return symbols_.at(s); }
  const std::string& name(Symbol s) const { return symbols_.at(s).name; }
  const std::vector<SymbolInfo>& symbols() const noexcept { return symbols_; }

  std::optional<Symbol> find(const std::string& name) const {
    for (std::size_t i = 0; i < symbols_.size(); ++i)
      if (symbols_[i].name == name) return static_cast<Symbol>(i);
    return std::nullopt;
  }
  Symbol at(const std::string& name) const {
    auto s = find(name);
    if (!s) throw UnknownSymbol(name);
    return *s;
  }

  unsigned weight(Symbol s, Weight w) const {
    switch (w) {
      case Weight::Grade: return symbols_[s].grade;
      case Weight::Filtration: return symbols_[s].filtration;
      case Weight::Length: return 1;
    }
    return 0;
  }
  unsigned weight(const Word& word, Weight w) const {
    unsigned total = 0;
    for (Symbol s : word) total += weight(s, w);
    return total;
  }

  /// Words render as "E*K^2*K^-1"; runs of a formal inverse print as
  /// negative powers of its partner.
  std::string format(const Word& word) const {
    if (word.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < word.size();) {
      std::size_t j = i;
      while (j < word.size() && word[j] == word[i]) ++j;
      const auto run = static_cast<long>(j - i);
      const SymbolInfo& info = symbols_[word[i]];
      if (!out.empty()) out += "*";
      if (info.formal_inverse) {
        out += symbols_[*info.inverse].name + "^-" + std::to_string(run);
      } else {
        out += info.name;
        if (run > 1) out += "^" + std::to_string(run);
      }
      i = j;
    }
    return out;
  }

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    if (a.symbols_.size() != b.symbols_.size()) return false;
    for (std::size_t i = 0; i < a.symbols_.size(); ++i) {
      const auto& x = a.symbols_[i];
      const auto& y = b.symbols_[i];
      if (x.name != y.name || x.inverse != y.inverse || x.grade != y.grade || x.filtration != y.filtration)
        return false;
    }
    return true;
  }

 private:
  void check_new(const std::string& name) const {
    if (name.empty()) throw Error("empty generator name");
    if (find(name)) throw Error("duplicate generator name '" + name + "'");
  }

  std::vector<SymbolInfo> symbols_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

inline bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) { return a == b || (a && b && *a == *b); }

inline Word concat(const Word& a, const Word& b) {
  Word w;
  w.reserve(a.size() + b.size());
  w.insert(w.end(), a.begin(), a.end());
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

inline unsigned weighted_degree(const Alphabet& alphabet, const Word& w, Weight weights) {
  return alphabet.weight(w, weights);
}

/// Weighted degree-lexicographic order: total grade weight, then length, then
/// leftmost differing symbol by alphabet position. Compatible with
/// concatenation on both sides and well-founded.
class WordOrder {
 public:
  WordOrder() = default;
  explicit WordOrder(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}

  bool operator()(const Word& a, const Word& b) const { return compare(a, b) < 0; }

  int compare(const Word& a, const Word& b) const {
    if (alphabet_) {
      const unsigned ga = alphabet_->weight(a, Weight::Grade);
      const unsigned gb = alphabet_->weight(b, Weight::Grade);
      if (ga != gb) return ga < gb ? -1 : 1;
    }
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }

 private:
  AlphabetPtr alphabet_;
};

/// Element of the free algebra k<alphabet>: a finite map word -> nonzero
/// coefficient, iterated in ascending monomial order.
class NcPoly {
 public:
  using Terms = std::map<Word, Scalar, WordOrder>;

  NcPoly(Field field, AlphabetPtr alphabet)
      : field_(std::move(field)), alphabet_(std::move(alphabet)), terms_(WordOrder(alphabet_)) {}

  static NcPoly constant(const Field& f, const AlphabetPtr& a, const Scalar& c) {
    NcPoly p(f, a);
    p.add_term({}, c);
    return p;
  }
  static NcPoly monomial(const Field& f, const AlphabetPtr& a, Word w, const Scalar& c) {
    NcPoly p(f, a);
    p.add_term(std::move(w), c);
    return p;
  }
  static NcPoly monomial(const Field& f, const AlphabetPtr& a, Word w) {
    return monomial(f, a, std::move(w), Scalar::one(f));
  }

  const Field& field() const noexcept { return field_; }
  const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Scalar coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar::zero(field_) : it->second;
  }
  /// Largest word in the monomial order; requires a nonzero polynomial.
  const Word& leading_word() const { return std::prev(terms_.end())->first; }

  /// Adds c*w in place, dropping the entry if it cancels.
  void add_term(Word w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(w), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  NcPoly operator-() const {
    NcPoly r = *this;
    for (auto& [w, c] : r.terms_) c = -c;
    return r;
  }
  NcPoly& operator+=(const NcPoly& b) {
    check_compatible(b);
    for (const auto& [w, c] : b.terms_) add_term(w, c);
    return *this;
  }
  NcPoly& operator-=(const NcPoly& b) {
    check_compatible(b);
    for (const auto& [w, c] : b.terms_) add_term(w, -c);
    return *this;
  }
  friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
  friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }

  NcPoly scaled(const Scalar& c) const {
    NcPoly r(field_, alphabet_);
    if (c.is_zero()) return r;
    for (const auto& [w, a] : terms_) r.terms_.emplace_hint(r.terms_.end(), w, a * c);
    return r;
  }

  friend bool operator==(const NcPoly& a, const NcPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto it = b.terms_.begin();
    for (const auto& [w, c] : a.terms_) {
      if (w != it->first || !(c == it->second)) return false;
      ++it;
    }
    return true;
  }

  /// Leading term first, e.g. "X*Y - 1/2*X^2 + (q + 1)*E".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const Word& w = it->first;
      Scalar c = it->second;
      std::string cs = c.str();
      bool negative = !c.needs_parens() && !cs.empty() && cs[0] == '-';
      if (negative) {
        c = -c;
        cs = c.str();
      }
      if (out.empty()) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      if (w.empty()) {
        out += c.needs_parens() && !out.empty() ? "(" + cs + ")" : cs;
      } else if (c.is_one()) {
        out += alphabet_->format(w);
      } else {
        out += (c.needs_parens() ? "(" + cs + ")" : cs) + "*" + alphabet_->format(w);
      }
    }
    return out;
  }

  void check_compatible(const NcPoly& b) const {
    if (!same_field(field_, b.field_)) throw FieldMismatch(field_->name() + " vs " + b.field_->name());
    if (!same_alphabet(alphabet_, b.alphabet_)) throw AlphabetMismatch();
  }

 private:
  Field field_;
  AlphabetPtr alphabet_;
  Terms terms_;
};

/// Free (relation-free) product: concatenates words pairwise.
inline NcPoly concat_mul(const NcPoly& a, const NcPoly& b) {
  a.check_compatible(b);
  NcPoly r(a.field(), a.alphabet());
  for (const auto& [u, c] : a.terms())
    for (const auto& [v, d] : b.terms()) r.add_term(concat(u, v), c * d);
  return r;
}

template <std::size_t N>
using TensorKey = std::array<Word, N>;

template <std::size_t N>
class TensorOrder {
 public:
  TensorOrder() = default;
  explicit TensorOrder(AlphabetPtr alphabet) : order_(std::move(alphabet)) {}
  bool operator()(const TensorKey<N>& a, const TensorKey<N>& b) const {
    for (std::size_t i = 0; i < N; ++i) {
      const int c = order_.compare(a[i], b[i]);
      if (c != 0) return c < 0;
    }
    return false;
  }

 private:
  WordOrder order_;
};

/// Element of the N-fold tensor power of the free algebra in the word basis.
/// Normalization of slots is the caller's job (see `rewrite.hpp`); every
/// public operation there keeps slots in normal form.
template <std::size_t N>
class Tensor {
 public:
  using Key = TensorKey<N>;
  using Terms = std::map<Key, Scalar, TensorOrder<N>>;

  Tensor(Field field, AlphabetPtr alphabet)
      : field_(std::move(field)), alphabet_(std::move(alphabet)), terms_(TensorOrder<N>(alphabet_)) {}

  static Tensor unit(const Field& f, const AlphabetPtr& a) {
    Tensor t(f, a);
    t.add_term(Key{}, Scalar::one(f));
    return t;
  }
  /// Pure tensor of polynomials, expanded in the word basis.
  static Tensor pure(const std::array<NcPoly, N>& slots) {
    Tensor t(slots[0].field(), slots[0].alphabet());
    t.expand_into(slots, 0, Key{}, Scalar::one(t.field_));
    return t;
  }

  const Field& field() const noexcept { return field_; }
  const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Scalar coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Scalar::zero(field_) : it->second;
  }

  void add_term(Key k, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(k), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Tensor operator-() const {
    Tensor r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
  }
  Tensor& operator+=(const Tensor& b) {
    check_compatible(b);
    for (const auto& [k, c] : b.terms_) add_term(k, c);
    return *this;
  }
  Tensor& operator-=(const Tensor& b) {
    check_compatible(b);
    for (const auto& [k, c] : b.terms_) add_term(k, -c);
    return *this;
  }
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }

  Tensor scaled(const Scalar& c) const {
    Tensor r(field_, alphabet_);
    if (c.is_zero()) return r;
    for (const auto& [k, a] : terms_) r.terms_.emplace_hint(r.terms_.end(), k, a * c);
    return r;
  }

  friend bool operator==(const Tensor& a, const Tensor& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto it = b.terms_.begin();
    for (const auto& [k, c] : a.terms_) {
      if (k != it->first || !(c == it->second)) return false;
      ++it;
    }
    return true;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      Scalar c = it->second;
      std::string cs = c.str();
      const bool negative = !c.needs_parens() && cs[0] == '-';
      if (negative) {
        c = -c;
        cs = c.str();
      }
      if (out.empty()) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      if (!c.is_one()) out += (c.needs_parens() ? "(" + cs + ")" : cs) + "*";
      for (std::size_t i = 0; i < N; ++i) {
        if (i) out += "@";
        out += alphabet_->format(it->first[i]);
      }
    }
    return out;
  }

  void check_compatible(const Tensor& b) const {
    if (!same_field(field_, b.field_)) throw FieldMismatch(field_->name() + " vs " + b.field_->name());
    if (!same_alphabet(alphabet_, b.alphabet_)) throw AlphabetMismatch();
  }

 private:
  void expand_into(const std::array<NcPoly, N>& slots, std::size_t i, Key key, const Scalar& c) {
    if (i == N) {
      add_term(std::move(key), c);
      return;
    }
    for (const auto& [w, d] : slots[i].terms()) {
      key[i] = w;
      expand_into(slots, i + 1, key, c * d);
    }
  }

  Field field_;
  AlphabetPtr alphabet_;
  Terms terms_;
};

using TensorPoly = Tensor<2>;
using Tensor3 = Tensor<3>;

}  // namespace hopfkit
