#pragma once

#include <cctype>
#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "hopfkit/error.hpp"
#include "hopfkit/ncpoly.hpp"

namespace hopfkit {

/// Recursive-descent parser for the expression grammar shared by the
/// presentation files and the CLI:
///
///   sum     := term (('+' | '-') term)*
///   term    := product ('@' product)?
///   product := unary (('*' | '/') unary)*
///   unary   := '-' unary | power
///   power   := primary ('^' ['-'] INT | '^' '(' ['-'] INT ')')?
///   primary := INT | IDENT | '(' sum ')'
///
/// Products are free concatenations; the caller normalizes. Division and
/// negative exponents are allowed on scalars, and negative exponents on a
/// single invertible generator map to its formal inverse.
class ExpressionParser {
 public:
  using Value = std::variant<NcPoly, TensorPoly>;

  ExpressionParser(Field field, AlphabetPtr alphabet, std::string_view text)
      : field_(std::move(field)), alphabet_(std::move(alphabet)), text_(text) {}

  Value parse() {
    skip_space();
    if (pos_ >= text_.size()) fail("empty expression", "an expression");
    Value v = sum();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'", "'+', '-', '*', '/', '^', '@' or end of input");
    return v;
  }

 private:
  NcPoly zero() const { return NcPoly(field_, alphabet_); }
  NcPoly constant(const Scalar& c) const { return NcPoly::constant(field_, alphabet_, c); }

  [[noreturn]] void fail(const std::string& what, const std::string& expected) const {
    throw SyntaxError(what + "; expected " + expected, 1, pos_ + 1);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  static bool is_scalar(const NcPoly& p) {
    return p.is_zero() || (p.size() == 1 && p.terms().begin()->first.empty());
  }
  Scalar scalar_of(const NcPoly& p) const { return p.coeff(Word{}); }

  Value add(Value a, const Value& b, bool subtract) {
    if (auto* pa = std::get_if<NcPoly>(&a)) {
      if (auto* pb = std::get_if<NcPoly>(&b)) return subtract ? *pa - *pb : *pa + *pb;
      if (!pa->is_zero()) fail("cannot add a polynomial and a tensor", "matching operands");
      const auto& tb = std::get<TensorPoly>(b);
      return subtract ? -tb : tb;
    }
    auto& ta = std::get<TensorPoly>(a);
    if (auto* pb = std::get_if<NcPoly>(&b)) {
      if (!pb->is_zero()) fail("cannot add a tensor and a polynomial", "matching operands");
      return ta;
    }
    const auto& tb = std::get<TensorPoly>(b);
    return subtract ? ta - tb : ta + tb;
  }

  Value multiply(const Value& a, const Value& b) {
    const auto* pa = std::get_if<NcPoly>(&a);
    const auto* pb = std::get_if<NcPoly>(&b);
    if (pa && pb) return concat_mul(*pa, *pb);
    if (pa) {
      if (!is_scalar(*pa)) fail("cannot multiply a polynomial by a tensor", "a scalar factor");
      return std::get<TensorPoly>(b).scaled(scalar_of(*pa));
    }
    if (pb) {
      if (!is_scalar(*pb)) fail("cannot multiply a tensor by a polynomial", "a scalar factor");
      return std::get<TensorPoly>(a).scaled(scalar_of(*pb));
    }
    const auto& ta = std::get<TensorPoly>(a);
    const auto& tb = std::get<TensorPoly>(b);
    TensorPoly r(field_, alphabet_);
    for (const auto& [ka, ca] : ta.terms())
      for (const auto& [kb, cb] : tb.terms()) r.add_term({concat(ka[0], kb[0]), concat(ka[1], kb[1])}, ca * cb);
    return r;
  }

  Value sum() {
    Value v = term();
    for (;;) {
      if (accept('+')) {
        v = add(std::move(v), term(), false);
      } else if (accept('-')) {
        v = add(std::move(v), term(), true);
      } else {
        return v;
      }
    }
  }

  Value term() {
    Value left = product();
    if (!accept('@')) return left;
    Value right = product();
    auto* l = std::get_if<NcPoly>(&left);
    auto* r = std::get_if<NcPoly>(&right);
    if (!l || !r) fail("nested tensor product", "polynomial slots around '@'");
    return TensorPoly::pure({*l, *r});
  }

  Value product() {
    Value v = unary();
    for (;;) {
      if (accept('*')) {
        v = multiply(v, unary());
      } else if (peek() == '/') {
        ++pos_;
        Value d = unary();
        auto* pd = std::get_if<NcPoly>(&d);
        if (!pd || !is_scalar(*pd)) fail("division by a non-scalar", "a scalar divisor");
        if (pd->is_zero()) throw DivisionByZero();
        v = multiply(v, constant(scalar_of(*pd).inverse()));
      } else {
        return v;
      }
    }
  }

  Value unary() {
    if (accept('-')) {
      Value v = unary();
      if (auto* p = std::get_if<NcPoly>(&v)) return -*p;
      return -std::get<TensorPoly>(v);
    }
    return power();
  }

  long long exponent() {
    const bool paren = accept('(');
    const bool negative = accept('-');
    skip_space();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("missing exponent", "an integer exponent");
    long long e = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      e = e * 10 + (text_[pos_++] - '0');
      if (e > 1'000'000) fail("exponent too large", "an exponent below 10^6");
    }
    if (paren && !accept(')')) fail("unbalanced parenthesis", "')'");
    return negative ? -e : e;
  }

  Value power() {
    Value base = primary();
    if (!accept('^')) return base;
    const long long e = exponent();
    auto* p = std::get_if<NcPoly>(&base);
    if (!p) fail("exponent on a tensor", "a polynomial base");
    if (is_scalar(*p)) {
      const Scalar s = scalar_of(*p);
      if (e < 0 && s.is_zero()) throw DivisionByZero();
      return constant(s.pow(e));
    }
    if (e >= 0) {
      NcPoly r = constant(Scalar::one(field_));
      for (long long i = 0; i < e; ++i) r = concat_mul(r, *p);
      return r;
    }
    if (p->size() == 1 && p->terms().begin()->second.is_one() && p->terms().begin()->first.size() == 1) {
      const Symbol s = p->terms().begin()->first.front();
      const auto& info = alphabet_->info(s);
      if (info.inverse) return NcPoly::monomial(field_, alphabet_, Word(static_cast<std::size_t>(-e), *info.inverse));
    }
    fail("negative exponent on a non-invertible base", "a scalar or an invertible generator");
  }

  Value primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input", "a number, a name or '('");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Value v = sum();
      if (!accept(')')) fail("unbalanced parenthesis", "')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      Integer value(std::string(text_.substr(start, pos_ - start)));
      return constant(Scalar(field_, Rational(value)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' || text_[pos_] == '\''))
        ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      if (!field_->variable().empty() && name == field_->variable()) return constant(Scalar::generator(field_));
      if (alphabet_) {
        if (auto s = alphabet_->find(name)) return NcPoly::monomial(field_, alphabet_, Word{*s});
      }
      pos_ = start;
      throw UnknownSymbol(name, start + 1);
    }
    fail("unexpected '" + std::string(1, c) + "'", "a number, a name or '('");
  }

  Field field_;
  AlphabetPtr alphabet_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

inline NcPoly parse_poly(std::string_view text, const Field& field, const AlphabetPtr& alphabet) {
  auto v = ExpressionParser(field, alphabet, text).parse();
  if (auto* p = std::get_if<NcPoly>(&v)) return *p;
  throw SyntaxError("expected a polynomial, got a tensor", 1, 1);
}

/// A plain scalar expression is accepted as that multiple of 1@1.
inline TensorPoly parse_tensor(std::string_view text, const Field& field, const AlphabetPtr& alphabet) {
  auto v = ExpressionParser(field, alphabet, text).parse();
  if (auto* t = std::get_if<TensorPoly>(&v)) return *t;
  const auto& p = std::get<NcPoly>(v);
  if (p.is_zero()) return TensorPoly(field, alphabet);
  if (p.size() == 1 && p.terms().begin()->first.empty())
    return TensorPoly::unit(field, alphabet).scaled(p.coeff(Word{}));
  throw SyntaxError("expected a tensor (use '@' between the factors)", 1, 1);
}

inline Scalar parse_scalar(std::string_view text, const Field& field) {
  auto alphabet = std::make_shared<const Alphabet>();
  const NcPoly p = parse_poly(text, field, alphabet);
  return p.coeff(Word{});
}

}  // namespace hopfkit
