#pragma once

#include <cstdint>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "hopfkit/hopfkit.hpp"

namespace hopfkit {

// gtest printers
inline void PrintTo(const Scalar& s, std::ostream* os) { *os << s.str(); }
inline void PrintTo(const NcPoly& p, std::ostream* os) { *os << p.str(); }
inline void PrintTo(const TensorPoly& t, std::ostream* os) { *os << t.str(); }
inline void PrintTo(const OrderValue& v, std::ostream* os) { *os << v.str(); }
inline void PrintTo(const MultOrder& m, std::ostream* os) { *os << m.str(); }

}  // namespace hopfkit

namespace testing_support {

using namespace hopfkit;

inline constexpr std::uint64_t kSeed = 0x5eed'2026'1015ULL;

inline Rational random_rational(std::mt19937_64& rng, int span = 9) {
  std::uniform_int_distribution<int> num(-span, span), den(1, span);
  return Rational(num(rng), den(rng));
}

inline QPoly random_qpoly(std::mt19937_64& rng, int max_degree, int span = 5) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::vector<Rational> c;
  const int d = deg(rng);
  for (int i = 0; i <= d; ++i) c.push_back(random_rational(rng, span));
  return QPoly(c);
}

/// A random element of f with small coefficients; zero shows up occasionally.
inline Scalar random_scalar(std::mt19937_64& rng, const Field& f) {
  switch (f->kind()) {
    case FieldKind::Rationals: return Scalar(f, random_rational(rng));
    case FieldKind::PrimeField: {
      std::uniform_int_distribution<long long> r(0, static_cast<long long>(f->prime()) - 1);
      return Scalar(f, r(rng));
    }
    case FieldKind::RationalFunctions: {
      QPoly den = random_qpoly(rng, 2);
      if (den.is_zero()) den = QPoly(Rational(1));
      return Scalar::from_rational_function(f, random_qpoly(rng, 3), den);
    }
    case FieldKind::Cyclotomic:
      return Scalar::from_cyclotomic(f, random_qpoly(rng, static_cast<int>(f->modulus().degree()) + 1));
  }
  return Scalar::zero(f);
}

inline Scalar random_nonzero(std::mt19937_64& rng, const Field& f) {
  for (;;) {
    Scalar s = random_scalar(rng, f);
    if (!s.is_zero()) return s;
  }
}

/// Random combination of up to `terms` window words.
inline NcPoly random_element(std::mt19937_64& rng, const HopfPresentation& H, const std::vector<Word>& words,
                             int terms = 3) {
  std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
  std::uniform_int_distribution<int> count(1, terms);
  NcPoly p = H.zero();
  const int k = count(rng);
  for (int i = 0; i < k; ++i) p += H.word(words[pick(rng)]).scaled(random_nonzero(rng, H.field()));
  return p;
}

/// Random word over the first `letters` symbols.
inline Word random_word(std::mt19937_64& rng, std::size_t letters, std::size_t max_length) {
  std::uniform_int_distribution<std::size_t> len(0, max_length), sym(0, letters - 1);
  Word w(len(rng));
  for (auto& s : w) s = static_cast<Symbol>(sym(rng));
  return w;
}

inline std::vector<Field> all_test_fields() {
  return {FieldDescriptor::rationals(),          FieldDescriptor::prime_field(5),
          FieldDescriptor::prime_field(7),       FieldDescriptor::rational_functions("q"),
          FieldDescriptor::cyclotomic(5, "q"),   FieldDescriptor::cyclotomic(12, "q")};
}

}  // namespace testing_support
