#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hopfkit/error.hpp"

namespace hopfkit {

using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

/// Dense univariate polynomial over the rationals. Coefficients are stored
/// from the constant term upwards with no trailing zeros, so the zero
/// polynomial is the empty vector and equality is structural.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(Rational c) {
    if (c != 0) coeffs_.push_back(std::move(c));
  }
  explicit QPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static QPoly monomial(Rational c, std::size_t degree) {
    if (c == 0) return {};
    std::vector<Rational> v(degree + 1);
    v[degree] = std::move(c);
    return QPoly(std::move(v));
  }
  static QPoly x() { return monomial(Rational(1), 1); }

  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  const Rational& lead() const { return coeffs_.back(); }
  Rational constant_term() const { return coeff(0); }

  QPoly operator-() const {
    QPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend QPoly operator+(const QPoly& a, const QPoly& b) {
    std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
    return QPoly(std::move(v));
  }
  friend QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }
  friend QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return QPoly(std::move(v));
  }
  QPoly scaled(const Rational& c) const {
    if (c == 0) return {};
    QPoly r = *this;
    for (auto& a : r.coeffs_) a *= c;
    return r;
  }
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.coeffs_ == b.coeffs_; }

  QPoly monic() const { return is_zero() ? QPoly{} : scaled(Rational(1) / lead()); }

  /// Euclidean division; throws DivisionByZero for a zero divisor.
  static std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) throw DivisionByZero();
    if (a.degree() < b.degree()) return {QPoly{}, a};
    std::vector<Rational> rem = a.coeffs_;
    std::vector<Rational> quot(a.coeffs_.size() - b.coeffs_.size() + 1);
    const Rational inv_lead = Rational(1) / b.lead();
    for (int i = a.degree(); i >= b.degree(); --i) {
      const Rational c = rem[i] * inv_lead;
      if (c == 0) continue;
      const std::size_t shift = static_cast<std::size_t>(i - b.degree());
      quot[shift] = c;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) rem[shift + j] -= c * b.coeffs_[j];
    }
    rem.resize(b.coeffs_.size() - 1);
    return {QPoly(std::move(quot)), QPoly(std::move(rem))};
  }

  /// Monic gcd; gcd(0, 0) = 0.
  static QPoly gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
      QPoly r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  /// Returns (g, s, t) with s*a + t*b = g and g monic.
  static std::tuple<QPoly, QPoly, QPoly> extended_gcd(const QPoly& a, const QPoly& b) {
    QPoly r0 = a, r1 = b;
    QPoly s0(Rational(1)), s1;
    QPoly t0, t1(Rational(1));
    while (!r1.is_zero()) {
      auto [q, r] = divmod(r0, r1);
      r0 = std::move(r1);
      r1 = std::move(r);
      QPoly s2 = s0 - q * s1;
      s0 = std::move(s1);
      s1 = std::move(s2);
      QPoly t2 = t0 - q * t1;
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    const Rational inv = Rational(1) / r0.lead();
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
  }

  /// Renders with descending powers, e.g. "q^2 - 1/2*q + 3".
  std::string str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      const Rational& c = coeffs_[static_cast<std::size_t>(i)];
      if (c == 0) continue;
      const bool negative = c < 0;
      const Rational mag = negative ? Rational(-c) : c;
      if (out.empty()) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      std::string power;
      if (i == 1) power = var;
      if (i > 1) power = var + "^" + std::to_string(i);
      if (power.empty()) {
        out += mag.str();
      } else if (mag == 1) {
        out += power;
      } else {
        out += mag.str() + "*" + power;
      }
    }
    return out;
  }

  std::size_t term_count() const {
    std::size_t n = 0;
    for (const auto& c : coeffs_) n += c != 0;
    return n;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

/// The n-th cyclotomic polynomial, by dividing x^n - 1 by Phi_d for the
/// proper divisors d of n.
inline QPoly cyclotomic_polynomial(unsigned n) {
  if (n == 0) throw InvalidField("cyclotomic index must be positive");
  QPoly result = QPoly::monomial(Rational(1), n) - QPoly(Rational(1));
  for (unsigned d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    result = QPoly::divmod(result, cyclotomic_polynomial(d)).first;
  }
  return result;
}

}  // namespace hopfkit
