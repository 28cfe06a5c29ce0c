#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "hopfkit/error.hpp"
#include "hopfkit/hopf.hpp"

namespace hopfkit::examples {

enum class Family { UqBorel, TaftWilsonR, GroupAlgebraCyclic, GroupAlgebraLaurent };

/// Parameters of a built-in presentation.
struct ExampleSpec {
  Family family = Family::UqBorel;
  Field field;
  /// Cyclotomic index for UqBorel over Q(zeta_n), order of the group for
  /// GroupAlgebraCyclic; unused otherwise.
  unsigned n = 0;
  /// The parameter q of UqBorel; defaults to the field's distinguished generator.
  std::optional<Scalar> q;

  static ExampleSpec uq_borel_cyclotomic(unsigned n) {
    return {Family::UqBorel, FieldDescriptor::cyclotomic(n, "q"), n, std::nullopt};
  }
  static ExampleSpec uq_borel_generic() {
    return {Family::UqBorel, FieldDescriptor::rational_functions("q"), 0, std::nullopt};
  }
  static ExampleSpec uq_borel(Field field, Scalar q) { return {Family::UqBorel, std::move(field), 0, std::move(q)}; }
  static ExampleSpec taft_wilson(std::uint64_t p) {
    return {Family::TaftWilsonR, FieldDescriptor::prime_field(p), 0, std::nullopt};
  }
  static ExampleSpec group_cyclic(unsigned n, Field field = FieldDescriptor::rationals()) {
    return {Family::GroupAlgebraCyclic, std::move(field), n, std::nullopt};
  }
  static ExampleSpec group_laurent(Field field = FieldDescriptor::rationals()) {
    return {Family::GroupAlgebraLaurent, std::move(field), 0, std::nullopt};
  }

  Scalar q_value() const { return q ? *q : Scalar::generator(field); }

  std::string label() const {
    switch (family) {
      case Family::UqBorel: return "uq-borel over " + field->name() + (q ? " with q = " + q->str() : "");
      case Family::TaftWilsonR: return "taft-wilson R over " + field->name();
      case Family::GroupAlgebraCyclic: return "group algebra of C_" + std::to_string(n) + " over " + field->name();
      case Family::GroupAlgebraLaurent: return "group algebra of Z over " + field->name();
    }
    return {};
  }
};

/// Predicted values; nullopt stands for infinity (m_H, order) or "no bound"
/// (characteristic zero).
struct ExpectedResults {
  std::optional<std::uint64_t> m_h;
  std::optional<std::uint64_t> order;
  std::optional<std::uint64_t> bound;
};

namespace detail {

inline void finish(HopfPresentation& H) {
  for (const auto& r : H.verify())
    if (!r.passed) throw Error("built-in presentation failed verification: " + r.to_text());
}

inline std::shared_ptr<Alphabet> uq_alphabet() {
  auto a = std::make_shared<Alphabet>();
  a->add("E", 1, 1);
  a->add_invertible("K", "Ki");
  return a;
}

}  // namespace detail

/// U_q(b+): generators E, K, K^-1 with KE = qEK. The rule K^-1 E -> q^-1 E K^-1
/// follows from multiplying KE = qEK by K^-1 on both sides and completes the
/// system. Normal words are E^a K^b with b in Z. Grade and filtration both
/// count E. Generated in degree 1; m_H is read off from K and K^-1, since
/// conjugation by K^a scales EK^-1 by q^a.
inline HopfPresentation build_uq_borel(const ExampleSpec& spec) {
  const Field& f = spec.field;
  const Scalar q = spec.q_value();
  if (q.is_zero() || q.is_one()) throw SpecInvariantViolated("U_q(b+) requires q different from 0 and 1");
  auto alphabet = detail::uq_alphabet();
  const AlphabetPtr a = alphabet;
  const Symbol E = a->at("E"), K = a->at("K"), Ki = a->at("Ki");
  auto w = [&](Word word, const Scalar& c) { return NcPoly::monomial(f, a, std::move(word), c); };
  const Scalar one = Scalar::one(f);

  RuleSet rules(f, a);
  rules.add({K, Ki}, w({}, one));
  rules.add({Ki, K}, w({}, one));
  rules.add({K, E}, w({E, K}, q));
  rules.add({Ki, E}, w({E, Ki}, q.inverse()));

  HopfPresentation H(std::move(rules));
  const NcPoly e = w({E}, one), k = w({K}, one), ki = w({Ki}, one), u = w({}, one);
  H.set_coproduct(E, TensorPoly::pure({e, u}) + TensorPoly::pure({k, e}));
  H.set_coproduct(K, TensorPoly::pure({k, k}));
  H.set_coproduct(Ki, TensorPoly::pure({ki, ki}));
  H.set_counit(E, Scalar::zero(f));
  H.set_counit(K, one);
  H.set_counit(Ki, one);
  H.set_antipode(E, -w({Ki, E}, one));
  H.set_antipode(K, ki);
  H.set_antipode(Ki, k);
  H.add_group_like({K});
  H.add_group_like({Ki});

  auto& info = H.info();
  info.name = "uq_borel";
  info.description = "U_q(b+) over " + f->name() + (spec.q ? " with q = " + q.str() : std::string{});
  info.generation_degree = 1;
  info.representatives = {{K}, {Ki}};
  info.exhaustive_representatives = true;
  info.grading_declared = true;
  info.filtration_declared = true;
  info.window = {Weight::Grade, 2, std::nullopt};
  detail::finish(H);
  return H;
}

/// The p^3-dimensional connected algebra R in characteristic p >= 3:
/// [X,Y] = X, [Y,Z] = -Z, [X,Z] = X^2/2, X^p = 0, Y^p = Y, Z^p = 0, with the
/// commutators oriented towards the normal words X^a Y^b Z^c. X and Y are
/// primitive, Z lies in filtration degree 2, and R is generated in degree 2.
inline HopfPresentation build_taft_wilson(const ExampleSpec& spec) {
  const Field& f = spec.field;
  if (f->kind() != FieldKind::PrimeField || f->prime() < 3)
    throw SpecInvariantViolated("R requires a prime field of characteristic p >= 3");
  const auto p = static_cast<std::size_t>(f->prime());
  auto alphabet = std::make_shared<Alphabet>();
  const Symbol X = alphabet->add("X", 1, 1);
  const Symbol Y = alphabet->add("Y", 1, 1);
  const Symbol Z = alphabet->add("Z", 2, 2);
  const AlphabetPtr a = alphabet;
  auto w = [&](Word word, long long c) { return NcPoly::monomial(f, a, std::move(word), Scalar(f, c)); };
  const Scalar half = Scalar(f, 1LL) / Scalar(f, 2LL);

  RuleSet rules(f, a);
  rules.add({Y, X}, w({X, Y}, 1) - w({X}, 1));
  rules.add({Z, Y}, w({Y, Z}, 1) + w({Z}, 1));
  rules.add({Z, X}, w({X, Z}, 1) - NcPoly::monomial(f, a, {X, X}, half));
  rules.add(Word(p, X), NcPoly(f, a));
  rules.add(Word(p, Y), w({Y}, 1));
  rules.add(Word(p, Z), NcPoly(f, a));

  HopfPresentation H(std::move(rules));
  const NcPoly x = w({X}, 1), y = w({Y}, 1), z = w({Z}, 1), u = w({}, 1);
  H.set_coproduct(X, TensorPoly::pure({x, u}) + TensorPoly::pure({u, x}));
  H.set_coproduct(Y, TensorPoly::pure({y, u}) + TensorPoly::pure({u, y}));
  H.set_coproduct(Z, TensorPoly::pure({u, z}) + TensorPoly::pure({x, y}) + TensorPoly::pure({z, u}));
  for (Symbol s : {X, Y, Z}) H.set_counit(s, Scalar::zero(f));
  H.set_antipode(X, -x);
  H.set_antipode(Y, -y);
  H.set_antipode(Z, -z + w({X, Y}, 1));
  H.add_group_like({});

  auto& info = H.info();
  info.name = "taft_wilson_r";
  info.description = "connected Hopf algebra R of dimension p^3 over " + f->name();
  info.generation_degree = 2;
  info.representatives = {{}};
  info.exhaustive_representatives = true;
  info.grading_declared = true;
  info.filtration_declared = true;
  info.window = {Weight::Filtration, 2, std::nullopt};
  detail::finish(H);
  return H;
}

/// kC_n = k[g]/(g^n - 1) with S(g) = g^(n-1). No formal inverse symbol: the
/// rule g^n -> 1 already makes g invertible, and adding g^-1 would need the
/// non-terminating rule g^-1 -> g^(n-1).
inline HopfPresentation build_group_cyclic(const ExampleSpec& spec) {
  const Field& f = spec.field;
  const unsigned n = spec.n;
  if (n == 0) throw SpecInvariantViolated("C_n requires n >= 1");
  auto alphabet = std::make_shared<Alphabet>();
  const Symbol g = alphabet->add("g", 0, 0);
  const AlphabetPtr a = alphabet;
  const Scalar one = Scalar::one(f);
  RuleSet rules(f, a);
  rules.add(Word(n, g), NcPoly::constant(f, a, one));

  HopfPresentation H(std::move(rules));
  const NcPoly gp = NcPoly::monomial(f, a, {g});
  H.set_coproduct(g, TensorPoly::pure({gp, gp}));
  H.set_counit(g, one);
  H.set_antipode(g, NcPoly::monomial(f, a, Word(n - 1, g)));
  auto& info = H.info();
  for (unsigned k = 0; k < n; ++k) {
    H.add_group_like(Word(k, g));
    info.representatives.push_back(Word(k, g));
  }
  info.name = "group_cyclic_" + std::to_string(n);
  info.description = "group algebra of C_" + std::to_string(n) + " over " + f->name();
  info.generation_degree = 0;
  info.exhaustive_representatives = true;
  info.grading_declared = true;
  info.filtration_declared = true;
  info.window = {Weight::Length, n - 1, std::nullopt};
  detail::finish(H);
  return H;
}

/// k[Z] = k[g, g^-1].
inline HopfPresentation build_group_laurent(const ExampleSpec& spec) {
  const Field& f = spec.field;
  auto alphabet = std::make_shared<Alphabet>();
  const auto [g, gi] = alphabet->add_invertible("g", "gi");
  const AlphabetPtr a = alphabet;
  const Scalar one = Scalar::one(f);
  RuleSet rules(f, a);
  rules.add({g, gi}, NcPoly::constant(f, a, one));
  rules.add({gi, g}, NcPoly::constant(f, a, one));

  HopfPresentation H(std::move(rules));
  const NcPoly gp = NcPoly::monomial(f, a, {g}), gip = NcPoly::monomial(f, a, {gi});
  H.set_coproduct(g, TensorPoly::pure({gp, gp}));
  H.set_coproduct(gi, TensorPoly::pure({gip, gip}));
  H.set_counit(g, one);
  H.set_counit(gi, one);
  H.set_antipode(g, gip);
  H.set_antipode(gi, gp);
  H.add_group_like({g});
  H.add_group_like({gi});
  auto& info = H.info();
  info.name = "group_laurent";
  info.description = "group algebra of Z over " + f->name();
  info.generation_degree = 0;
  info.representatives = {{g}, {gi}};
  info.exhaustive_representatives = true;
  info.grading_declared = true;
  info.filtration_declared = true;
  info.window = {Weight::Length, 3, std::nullopt};
  detail::finish(H);
  return H;
}

/// Builds and verifies; the result is TRUSTED.
inline HopfPresentation build(const ExampleSpec& spec) {
  switch (spec.family) {
    case Family::UqBorel: return build_uq_borel(spec);
    case Family::TaftWilsonR: return build_taft_wilson(spec);
    case Family::GroupAlgebraCyclic: return build_group_cyclic(spec);
    case Family::GroupAlgebraLaurent: return build_group_laurent(spec);
  }
  throw SpecInvariantViolated("unknown family");
}

inline ExpectedResults expected_results(const ExampleSpec& spec) {
  const std::uint64_t p = spec.field->characteristic();
  switch (spec.family) {
    case Family::UqBorel: {
      // m_H is the multiplicative order of q and |S| = 2 m_H. In
      // characteristic p the generation degree is 1, so l = 1.
      const MultOrder m = mult_order(spec.q_value());
      if (!m.is_finite()) return {std::nullopt, std::nullopt, std::nullopt};
      std::optional<std::uint64_t> bound;
      if (p) bound = 2 * m.order * p;
      return {m.order, 2 * m.order, bound};
    }
    case Family::TaftWilsonR: return {1, 2 * p, 2 * p};
    case Family::GroupAlgebraCyclic: {
      std::optional<std::uint64_t> bound;
      if (p) bound = 2;
      return {1, spec.n <= 2 ? 1 : 2, bound};
    }
    case Family::GroupAlgebraLaurent: {
      std::optional<std::uint64_t> bound;
      if (p) bound = 2;
      return {1, 2, bound};
    }
  }
  return {};
}

}  // namespace hopfkit::examples
