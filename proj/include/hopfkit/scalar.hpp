#pragma once

#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hopfkit/error.hpp"
#include "hopfkit/qpoly.hpp"

namespace hopfkit {

enum class FieldKind { Rationals, PrimeField, RationalFunctions, Cyclotomic };

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

/// One of the four coefficient fields: Q, GF(p), Q(var), or Q(zeta_n)
/// presented as Q[var]/Phi_n.
class FieldDescriptor {
 public:
  static std::shared_ptr<const FieldDescriptor> rationals() {
    return std::shared_ptr<const FieldDescriptor>(new FieldDescriptor(FieldKind::Rationals, 0, 0, ""));
  }
  static std::shared_ptr<const FieldDescriptor> prime_field(std::uint64_t p) {
    if (!is_prime(p)) throw InvalidField("GF(p) requires a prime, got " + std::to_string(p));
    if (p >= (std::uint64_t{1} << 31)) throw InvalidField("prime too large for this kernel");
    return std::shared_ptr<const FieldDescriptor>(new FieldDescriptor(FieldKind::PrimeField, p, 0, ""));
  }
  static std::shared_ptr<const FieldDescriptor> rational_functions(std::string variable) {
    if (variable.empty()) throw InvalidField("rational function field needs a variable name");
    return std::shared_ptr<const FieldDescriptor>(
        new FieldDescriptor(FieldKind::RationalFunctions, 0, 0, std::move(variable)));
  }
  static std::shared_ptr<const FieldDescriptor> cyclotomic(unsigned n, std::string variable) {
    if (n == 0) throw InvalidField("cyclotomic index must be positive");
    if (variable.empty()) throw InvalidField("cyclotomic field needs a name for the root");
    return std::shared_ptr<const FieldDescriptor>(
        new FieldDescriptor(FieldKind::Cyclotomic, 0, n, std::move(variable)));
  }

  FieldKind kind() const noexcept { return kind_; }
  std::uint64_t prime() const noexcept { return p_; }
  unsigned cyclotomic_index() const noexcept { return n_; }
  const std::string& variable() const noexcept { return var_; }
  /// Phi_n for cyclotomic fields, empty otherwise.
  const QPoly& modulus() const noexcept { return modulus_; }
  std::uint64_t characteristic() const noexcept { return kind_ == FieldKind::PrimeField ? p_ : 0; }

  std::string name() const {
    switch (kind_) {
      case FieldKind::Rationals: return "QQ";
      case FieldKind::PrimeField: return "GF(" + std::to_string(p_) + ")";
      case FieldKind::RationalFunctions: return "QQ(" + var_ + ")";
      case FieldKind::Cyclotomic: return "QQ(" + var_ + ") with Phi_" + std::to_string(n_) + "(" + var_ + ") = 0";
    }
    return {};
  }

  friend bool operator==(const FieldDescriptor& a, const FieldDescriptor& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_ && a.n_ == b.n_ && a.var_ == b.var_;
  }

 private:
  FieldDescriptor(FieldKind kind, std::uint64_t p, unsigned n, std::string var)
      : kind_(kind), p_(p), n_(n), var_(std::move(var)) {
    if (kind_ == FieldKind::Cyclotomic) modulus_ = cyclotomic_polynomial(n_);
  }

  FieldKind kind_;
  std::uint64_t p_;
  unsigned n_;
  std::string var_;
  QPoly modulus_;
};

using Field = std::shared_ptr<const FieldDescriptor>;

inline bool same_field(const Field& a, const Field& b) { return a == b || (a && b && *a == *b); }

inline std::uint64_t characteristic(const FieldDescriptor& f) { return f.characteristic(); }

/// Reduced fraction num/den of polynomials over Q with monic denominator.
struct RationalFunction {
  QPoly num;
  QPoly den{Rational(1)};

  static RationalFunction make(QPoly num, QPoly den) {
    if (den.is_zero()) throw DivisionByZero();
    if (num.is_zero()) return {QPoly{}, QPoly(Rational(1))};
    QPoly g = QPoly::gcd(num, den);
    if (!(g == QPoly(Rational(1)))) {
      num = QPoly::divmod(num, g).first;
      den = QPoly::divmod(den, g).first;
    }
    const Rational lead = den.lead();
    return {num.scaled(Rational(1) / lead), den.scaled(Rational(1) / lead)};
  }
  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;
};

/// An exact field element in canonical form. Two scalars of the same field
/// are equal iff their representations are identical.
class Scalar {
 public:
  using Value = std::variant<Rational, std::int64_t, RationalFunction, QPoly>;

  Scalar(Field field, const Rational& value) : field_(std::move(field)) { value_ = embed(value); }
  Scalar(Field field, long long value) : Scalar(std::move(field), Rational(value)) {}

  static Scalar zero(const Field& f) { return Scalar(f, 0LL); }
  static Scalar one(const Field& f) { return Scalar(f, 1LL); }
  /// The transcendental q of Q(q), or the primitive root of Q(zeta_n).
  static Scalar generator(const Field& f) {
    Scalar s = zero(f);
    switch (f->kind()) {
      case FieldKind::RationalFunctions: s.value_ = RationalFunction{QPoly::x(), QPoly(Rational(1))}; break;
      case FieldKind::Cyclotomic: s.value_ = reduce_cyclotomic(QPoly::x(), *f); break;
      default: throw InvalidField(f->name() + " has no distinguished generator");
    }
    return s;
  }
  /// Cyclotomic element from coordinates in the power basis of the root.
  static Scalar from_cyclotomic(const Field& f, const QPoly& p) {
    Scalar s = zero(f);
    s.value_ = reduce_cyclotomic(p, *f);
    return s;
  }
  static Scalar from_rational_function(const Field& f, QPoly num, QPoly den) {
    Scalar s = zero(f);
    s.value_ = RationalFunction::make(std::move(num), std::move(den));
    return s;
  }

  const Field& field() const noexcept { return field_; }
  const Value& value() const noexcept { return value_; }

  bool is_zero() const {
    return std::visit(
        [](const auto& v) -> bool {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, Rational>) return v == 0;
          if constexpr (std::is_same_v<T, std::int64_t>) return v == 0;
          if constexpr (std::is_same_v<T, RationalFunction>) return v.num.is_zero();
          if constexpr (std::is_same_v<T, QPoly>) return v.is_zero();
        },
        value_);
  }
  bool is_one() const { return *this == one(field_); }

  /// True when the element lies in the prime subfield (Q or GF(p)).
  bool is_constant() const {
    if (auto* rf = std::get_if<RationalFunction>(&value_)) return rf->num.is_constant() && rf->den.is_constant();
    if (auto* cy = std::get_if<QPoly>(&value_)) return cy->is_constant();
    return true;
  }
  /// Value of a constant element in Q; only meaningful in characteristic 0.
  std::optional<Rational> as_rational() const {
    if (!is_constant() || field_->kind() == FieldKind::PrimeField) return std::nullopt;
    if (auto* r = std::get_if<Rational>(&value_)) return *r;
    if (auto* rf = std::get_if<RationalFunction>(&value_)) return rf->num.constant_term();
    return std::get<QPoly>(value_).constant_term();
  }

  Scalar operator-() const {
    Scalar r = *this;
    std::visit(
        [&](auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, Rational>) v = -v;
          if constexpr (std::is_same_v<T, std::int64_t>) v = v == 0 ? 0 : static_cast<std::int64_t>(field_->prime()) - v;
          if constexpr (std::is_same_v<T, RationalFunction>) v.num = -v.num;
          if constexpr (std::is_same_v<T, QPoly>) v = -v;
        },
        r.value_);
    return r;
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    check_same(a, b);
    Scalar r = a;
    const std::uint64_t p = a.field_->prime();
    std::visit(
        [&](auto& v) {
          using T = std::decay_t<decltype(v)>;
          const T& w = std::get<T>(b.value_);
          if constexpr (std::is_same_v<T, Rational>) v += w;
          if constexpr (std::is_same_v<T, std::int64_t>) v = static_cast<std::int64_t>((v + w) % static_cast<std::int64_t>(p));
          if constexpr (std::is_same_v<T, RationalFunction>) {
            if (v.den == w.den) {
              v = RationalFunction::make(v.num + w.num, v.den);
            } else {
              v = RationalFunction::make(v.num * w.den + w.num * v.den, v.den * w.den);
            }
          }
          if constexpr (std::is_same_v<T, QPoly>) v = v + w;
        },
        r.value_);
    return r;
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    check_same(a, b);
    Scalar r = a;
    const FieldDescriptor& f = *a.field_;
    std::visit(
        [&](auto& v) {
          using T = std::decay_t<decltype(v)>;
          const T& w = std::get<T>(b.value_);
          if constexpr (std::is_same_v<T, Rational>) v *= w;
          if constexpr (std::is_same_v<T, std::int64_t>) v = static_cast<std::int64_t>((v * w) % static_cast<std::int64_t>(f.prime()));
          if constexpr (std::is_same_v<T, RationalFunction>) {
            if (v.num.is_zero() || w.num.is_zero()) {
              v = RationalFunction{};
            } else if (v.den == QPoly(Rational(1)) && w.den == QPoly(Rational(1))) {
              v = RationalFunction{v.num * w.num, v.den};
            } else {
              v = RationalFunction::make(v.num * w.num, v.den * w.den);
            }
          }
          if constexpr (std::is_same_v<T, QPoly>) v = reduce_cyclotomic(v * w, f);
        },
        r.value_);
    return r;
  }

  Scalar inverse() const {
    if (is_zero()) throw DivisionByZero();
    Scalar r = *this;
    const FieldDescriptor& f = *field_;
    std::visit(
        [&](auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, Rational>) v = Rational(1) / v;
          if constexpr (std::is_same_v<T, std::int64_t>) v = inverse_mod(v, static_cast<std::int64_t>(f.prime()));
          if constexpr (std::is_same_v<T, RationalFunction>) v = RationalFunction::make(v.den, v.num);
          if constexpr (std::is_same_v<T, QPoly>) {
            auto [g, s, t] = QPoly::extended_gcd(v, f.modulus());
            (void)t;
            // Phi_n is irreducible, so any nonzero reduced element is coprime to it.
            v = reduce_cyclotomic(s, f);
          }
        },
        r.value_);
    return r;
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    check_same(a, b);
    return a * b.inverse();
  }

  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  /// Negative exponents invert.
  Scalar pow(long long e) const {
    Scalar base = e < 0 ? inverse() : *this;
    unsigned long long k = e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1 : static_cast<unsigned long long>(e);
    Scalar acc = one(field_);
    while (k > 0) {
      if (k & 1) acc *= base;
      k >>= 1;
      if (k) base *= base;
    }
    return acc;
  }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return same_field(a.field_, b.field_) && a.value_ == b.value_;
  }

  /// Exact textual form, parseable back by the expression parser.
  std::string str() const {
    const std::string& var = field_->variable();
    return std::visit(
        [&](const auto& v) -> std::string {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, Rational>) return v.str();
          if constexpr (std::is_same_v<T, std::int64_t>) return std::to_string(v);
          if constexpr (std::is_same_v<T, RationalFunction>) {
            if (v.den == QPoly(Rational(1))) return v.num.str(var);
            if (v.den.term_count() == 1 && v.num.is_constant()) {
              const std::string power = var + "^-" + std::to_string(v.den.degree());
              const Rational c = v.num.constant_term();
              if (c == 1) return power;
              if (c == -1) return "-" + power;
              return c.str() + "*" + power;
            }
            std::string num = v.num.str(var);
            if (v.num.term_count() > 1) num = "(" + num + ")";
            std::string den = v.den.str(var);
            if (v.den.term_count() > 1) den = "(" + den + ")";
            return num + "/" + den;
          }
          if constexpr (std::is_same_v<T, QPoly>) return v.str(var);
        },
        value_);
  }
  /// True when str() contains a top-level sum and needs parentheses as a factor.
  bool needs_parens() const {
    const std::string s = str();
    return s.find(" + ") != std::string::npos || s.find(" - ") != std::string::npos;
  }

 private:
  Value embed(const Rational& value) const {
    switch (field_->kind()) {
      case FieldKind::Rationals: return value;
      case FieldKind::PrimeField: {
        const auto p = static_cast<std::int64_t>(field_->prime());
        const std::int64_t num = mod_integer(boost::multiprecision::numerator(value), p);
        const std::int64_t den = mod_integer(boost::multiprecision::denominator(value), p);
        if (den == 0) throw DivisionByZero();
        return static_cast<std::int64_t>((num * inverse_mod(den, p)) % p);
      }
      case FieldKind::RationalFunctions: return RationalFunction{QPoly(value), QPoly(Rational(1))};
      case FieldKind::Cyclotomic: return QPoly(value);
    }
    return value;
  }

  static std::int64_t mod_integer(const Integer& v, std::int64_t p) {
    Integer r = v % p;
    if (r < 0) r += p;
    return r.convert_to<std::int64_t>();
  }
  static std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
    if (a % p == 0) throw DivisionByZero();
    std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
    while (new_r != 0) {
      const std::int64_t q = r / new_r;
      t = std::exchange(new_t, t - q * new_t);
      r = std::exchange(new_r, r - q * new_r);
    }
    return t < 0 ? t + p : t;
  }
  static QPoly reduce_cyclotomic(const QPoly& v, const FieldDescriptor& f) {
    if (v.degree() < f.modulus().degree()) return v;
    return QPoly::divmod(v, f.modulus()).second;
  }
  static void check_same(const Scalar& a, const Scalar& b) {
    if (!same_field(a.field_, b.field_)) throw FieldMismatch(a.field_->name() + " vs " + b.field_->name());
  }

  Field field_;
  Value value_;
};

/// Multiplicative order with a certificate of infinitude where applicable.
struct MultOrder {
  enum class Kind { Finite, InfiniteCertified, Zero };
  Kind kind = Kind::Zero;
  std::uint64_t order = 0;

  static MultOrder finite(std::uint64_t m) { return {Kind::Finite, m}; }
  static MultOrder infinite() { return {Kind::InfiniteCertified, 0}; }
  bool is_finite() const noexcept { return kind == Kind::Finite; }
  bool is_infinite() const noexcept { return kind == Kind::InfiniteCertified; }
  friend bool operator==(const MultOrder&, const MultOrder&) = default;
  std::string str() const {
    switch (kind) {
      case Kind::Finite: return "Finite(" + std::to_string(order) + ")";
      case Kind::InfiniteCertified: return "InfiniteCertified";
      case Kind::Zero: return "Zero";
    }
    return {};
  }
};

namespace detail {

inline MultOrder rational_order(const Rational& r) {
  if (r == 1) return MultOrder::finite(1);
  if (r == -1) return MultOrder::finite(2);
  return MultOrder::infinite();
}

inline MultOrder order_among_divisors(const Scalar& s, std::uint64_t bound) {
  for (std::uint64_t d : divisors(bound))
    if (s.pow(static_cast<long long>(d)).is_one()) return MultOrder::finite(d);
  return MultOrder::infinite();
}

}  // namespace detail

/// Minimal m >= 1 with s^m = 1, or a certified verdict that none exists.
///
/// Q admits only +-1 as roots of unity. In GF(p) every nonzero element has
/// order dividing p-1. Every root of unity in Q(zeta_n) has order dividing
/// lcm(2, n), so testing the divisors of that number is exhaustive. A
/// non-constant rational function is never a root of unity.
inline MultOrder mult_order(const Scalar& s) {
  if (s.is_zero()) return {};
  const FieldDescriptor& f = *s.field();
  switch (f.kind()) {
    case FieldKind::Rationals: return detail::rational_order(std::get<Rational>(s.value()));
    case FieldKind::PrimeField: return detail::order_among_divisors(s, f.prime() - 1);
    case FieldKind::RationalFunctions:
      if (!s.is_constant()) return MultOrder::infinite();
      return detail::rational_order(*s.as_rational());
    case FieldKind::Cyclotomic: {
      const std::uint64_t n = f.cyclotomic_index();
      return detail::order_among_divisors(s, std::lcm<std::uint64_t>(2, n));
    }
  }
  return MultOrder::infinite();
}

}  // namespace hopfkit
