#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfkit/error.hpp"
#include "hopfkit/hopf.hpp"
#include "hopfkit/report.hpp"
#include "hopfkit/structure.hpp"

namespace hopfkit {

/// S^k(h), normalizing after every step.
inline NcPoly antipode_power(const HopfPresentation& H, const NcPoly& h, std::uint64_t k) {
  H.require_trusted();
  NcPoly r = h;
  for (std::uint64_t i = 0; i < k; ++i) r = H.antipode(r);
  return r;
}

/// Witness that S has infinite order.
struct DriftCertificate {
  enum class Kind { GeometricDrift, ArithmeticDrift };
  Kind kind = Kind::GeometricDrift;
  NcPoly element;
  /// S^step(element) = ratio * element.
  std::optional<Scalar> ratio;
  /// S^(step*t)(element) = element + t * residual for all t.
  std::optional<NcPoly> residual;
  std::uint64_t step = 2;

  std::string str() const {
    if (kind == Kind::GeometricDrift) return "GeometricDrift(" + element.str() + ", " + ratio->str() + ")";
    return "ArithmeticDrift(" + element.str() + ", " + residual->str() + ", step " + std::to_string(step) + ")";
  }

  Json to_json() const {
    Json j;
    j["kind"] = kind == Kind::GeometricDrift ? "GeometricDrift" : "ArithmeticDrift";
    j["element"] = element.str();
    if (ratio) j["ratio"] = ratio->str();
    if (residual) j["residual"] = residual->str();
    j["step"] = step;
    return j;
  }
};

struct OrderResult {
  OrderValue value;
  std::optional<DriftCertificate> certificate;
  std::vector<std::string> warnings;

  bool is_finite() const noexcept { return value.is_finite(); }
  std::string str() const {
    if (certificate) return value.str() + ": " + certificate->str();
    return value.str();
  }
  Json to_json() const {
    Json j;
    j["verdict"] = value.str();
    if (value.is_finite()) j["order"] = value.value;
    if (value.kind == OrderValue::Kind::UnknownBeyond) j["cutoff"] = value.value;
    if (certificate) j["certificate"] = certificate->to_json();
    if (!warnings.empty()) j["warnings"] = warnings;
    return j;
  }
};

/// Shape of the sequence h, S^2(h), S^4(h), ...
struct OrbitClass {
  enum class Kind { Periodic, Geometric, Arithmetic, Unclassified };
  Kind kind = Kind::Unclassified;
  /// Minimal even k with S^k(h) = h, for Periodic.
  std::uint64_t period = 0;
  std::optional<Scalar> ratio;
  std::optional<NcPoly> residual;
  std::uint64_t step = 2;
};

inline OrbitClass classify_orbit(const HopfPresentation& H, const NcPoly& h, unsigned iterates = 8) {
  H.require_trusted();
  std::vector<NcPoly> seq{h};
  for (unsigned j = 1; j <= iterates; ++j) seq.push_back(antipode_power(H, seq.back(), 2));
  OrbitClass c;
  for (unsigned j = 1; j <= iterates; ++j)
    if (seq[j] == h) {
      c.kind = OrbitClass::Kind::Periodic;
      c.period = 2 * j;
      return c;
    }
  if (!h.is_zero()) {
    const Word& lead = h.leading_word();
    const Scalar lambda = seq[1].coeff(lead) / h.coeff(lead);
    bool geometric = true;
    Scalar power = lambda;
    for (unsigned j = 1; j <= iterates && geometric; ++j, power *= lambda) geometric = seq[j] == h.scaled(power);
    if (geometric) {
      c.kind = OrbitClass::Kind::Geometric;
      c.ratio = lambda;
      return c;
    }
  }
  for (unsigned j = 1; 2 * j <= iterates; ++j) {
    const NcPoly r = seq[j] - h;
    if (r.is_zero()) continue;
    bool arithmetic = true;
    for (unsigned t = 2; t * j <= iterates && arithmetic; ++t)
      arithmetic = seq[t * j] == h + r.scaled(Scalar(H.field(), static_cast<long long>(t)));
    if (arithmetic && antipode_power(H, r, 2 * j) == r) {
      c.kind = OrbitClass::Kind::Arithmetic;
      c.residual = r;
      c.step = 2 * j;
      return c;
    }
  }
  return c;
}

/// Re-checks a certificate by direct evaluation.
inline CheckReport verify_certificate(const HopfPresentation& H, const DriftCertificate& cert) {
  CheckReport report("infinite-order certificate " + cert.str() + " re-verifies");
  if (cert.kind == DriftCertificate::Kind::GeometricDrift) {
    if (!(antipode_power(H, cert.element, cert.step) == cert.element.scaled(*cert.ratio)))
      report.fail("S^" + std::to_string(cert.step) + " does not scale " + cert.element.str() + " by " + cert.ratio->str());
    if (!mult_order(*cert.ratio).is_infinite()) report.fail("ratio " + cert.ratio->str() + " has finite order");
    return report;
  }
  if (characteristic(*H.field()) != 0) report.fail("arithmetic drift certifies nothing in positive characteristic");
  if (cert.residual->is_zero()) report.fail("residual is zero");
  NcPoly current = cert.element;
  for (long long t = 1; t <= 5; ++t) {
    current = antipode_power(H, current, cert.step);
    if (!(current == cert.element + cert.residual->scaled(Scalar(H.field(), t))))
      report.fail("progression breaks at t = " + std::to_string(t));
  }
  return report;
}

/// Order of S. Generators with a certifiable infinite orbit are examined
/// before the even-power scan, which otherwise runs up to `cutoff`.
inline OrderResult antipode_order(const HopfPresentation& H, std::uint64_t cutoff = kDefaultCutoff) {
  H.require_trusted();
  OrderResult result;
  const std::size_t n = H.alphabet().size();
  std::vector<NcPoly> gens;
  for (Symbol s = 0; s < n; ++s) gens.push_back(H.word({s}));

  bool fixed = true;
  for (const auto& g : gens) fixed = fixed && H.antipode(g) == g;
  if (fixed) {
    bool commutative = true;
    for (std::size_t i = 0; i < n && commutative; ++i)
      for (std::size_t j = i + 1; j < n && commutative; ++j)
        commutative = H.mul(gens[i], gens[j]) == H.mul(gens[j], gens[i]);
    if (!H.rules().confluence_report(H.confluence_depth()).empty())
      result.warnings.push_back("rules are not confluent; the commutativity probe is unreliable");
    if (commutative) {
      result.value = OrderValue::finite(1);
      return result;
    }
  }

  const bool char0 = characteristic(*H.field()) == 0;
  for (const auto& g : gens) {
    const OrbitClass c = classify_orbit(H, g);
    if (c.kind == OrbitClass::Kind::Geometric && mult_order(*c.ratio).is_infinite()) {
      result.value = OrderValue::infinite();
      result.certificate = DriftCertificate{DriftCertificate::Kind::GeometricDrift, g, c.ratio, std::nullopt, 2};
      return result;
    }
    if (c.kind == OrbitClass::Kind::Arithmetic && char0) {
      result.value = OrderValue::infinite();
      result.certificate = DriftCertificate{DriftCertificate::Kind::ArithmeticDrift, g, std::nullopt, c.residual, c.step};
      return result;
    }
  }

  std::vector<NcPoly> current = gens;
  for (std::uint64_t k = 2; k <= cutoff; k += 2) {
    bool identity = true;
    for (std::size_t i = 0; i < n; ++i) {
      current[i] = antipode_power(H, current[i], 2);
      identity = identity && current[i] == gens[i];
    }
    if (identity) {
      result.value = OrderValue::finite(k);
      return result;
    }
  }
  result.value = OrderValue::unknown(cutoff);
  return result;
}

/// A finite order is 1 or even. Throws ParityViolation otherwise.
inline CheckReport check_order_parity(const HopfPresentation& H, const OrderResult& result) {
  (void)H;
  CheckReport report("finite antipode order is 1 or even");
  if (!result.is_finite()) {
    report.warn("order is not finite (" + result.str() + "); nothing to check");
    return report;
  }
  const std::uint64_t m = result.value.value;
  report.details["order"] = m;
  if (m != 1 && m % 2 != 0) throw ParityViolation("antipode order " + std::to_string(m) + " is odd and not 1");
  return report;
}

/// S(h) = -h x^-1 and S^(2j)(h) = x^j h x^-j for j <= m on a P_{x,1} basis.
inline CheckReport check_conjugation_law(const HopfPresentation& H, const Word& x, const SkewPrimitiveSpace& space,
                                        unsigned m) {
  H.require_trusted();
  const Alphabet& a = H.alphabet();
  CheckReport report("S(h) = -h x^-1 and S^{2j}(h) = x^j h x^-j on P_{" + a.format(x) + ",1}, j <= " +
                     std::to_string(m));
  const auto xinv = H.inverse_of(x);
  if (!xinv) {
    report.fail(a.format(x) + " has no inverse");
    return report;
  }
  const NcPoly xp = H.word(x), xip = H.word(*xinv);
  for (const NcPoly& h : space.basis) {
    if (!(H.antipode(h) == -H.mul(h, xip))) report.fail("S(" + h.str() + ") = " + H.antipode(h).str());
    NcPoly s = h, left = H.one(), right = H.one();
    for (unsigned j = 1; j <= m; ++j) {
      s = antipode_power(H, s, 2);
      left = H.mul(left, xp);
      right = H.mul(right, xip);
      const NcPoly conj = H.mul(H.mul(left, h), right);
      if (!(s == conj)) report.fail("S^" + std::to_string(2 * j) + "(" + h.str() + ") = " + s.str() + " but conjugate is " + conj.str());
    }
  }
  report.details["basis_size"] = space.basis.size();
  return report;
}

namespace detail {

inline NcPoly drift_operator(const HopfPresentation& H, const NcPoly& h, std::uint64_t m) {
  return antipode_power(H, h, 2 * m) - h;
}

inline unsigned max_degree(const HopfPresentation& H, const NcPoly& p) {
  unsigned d = 0;
  for (const auto& [w, c] : p.terms()) d = std::max(d, H.alphabet().weight(w, Weight::Filtration));
  return d;
}

}  // namespace detail

/// (S^{2m} - id)(H_n) lies in H_{n-1}, and vanishes on H_1.
inline CheckReport check_taft_wilson_step(const HopfPresentation& H, std::uint64_t m, unsigned n,
                                          const BasisWindow& window) {
  H.require_trusted();
  const Alphabet& a = H.alphabet();
  CheckReport report("(S^" + std::to_string(2 * m) + " - id)(H_" + std::to_string(n) + ") ⊆ H_" +
                     std::to_string(static_cast<int>(n) - 1));
  std::size_t checked = 0;
  for (const Word& b : window.words()) {
    const unsigned d = a.weight(b, Weight::Filtration);
    if (d > n) continue;
    ++checked;
    const NcPoly image = detail::drift_operator(H, H.word(b), m);
    if (image.is_zero()) continue;
    if (n <= 1 || detail::max_degree(H, image) + 1 > n)
      report.fail(a.format(b) + " maps to " + image.str());
  }
  report.details["words_checked"] = checked;
  return report;
}

/// (S^{2m} - id)^n(H_n) = 0.
inline CheckReport check_nilpotence(const HopfPresentation& H, std::uint64_t m, unsigned n, const BasisWindow& window) {
  H.require_trusted();
  if (n == 0) throw Error("nilpotence needs a filtration degree n >= 1");
  const Alphabet& a = H.alphabet();
  CheckReport report("(S^" + std::to_string(2 * m) + " - id)^" + std::to_string(n) + "(H_" + std::to_string(n) +
                     ") = 0");
  std::size_t checked = 0;
  for (const Word& b : window.words()) {
    if (a.weight(b, Weight::Filtration) > n) continue;
    ++checked;
    NcPoly v = H.word(b);
    for (unsigned i = 0; i < n; ++i) v = detail::drift_operator(H, v, m);
    if (!v.is_zero()) report.fail(a.format(b) + " leaves " + v.str());
  }
  report.details["words_checked"] = checked;
  return report;
}

/// S^{2mt}(h) = h + t r for t = 1..t_max with r = S^{2m}(h) - h.
inline CheckReport check_linear_drift(const HopfPresentation& H, const NcPoly& h, std::uint64_t m, unsigned t_max) {
  H.require_trusted();
  const NcPoly r = detail::drift_operator(H, h, m);
  CheckReport report("S^{" + std::to_string(2 * m) + "t}(" + h.str() + ") = " + h.str() + " + t*(" + r.str() +
                     ") for t <= " + std::to_string(t_max));
  report.details["residual"] = r.str();
  NcPoly current = h;
  for (unsigned t = 1; t <= t_max; ++t) {
    current = antipode_power(H, current, 2 * m);
    const NcPoly expected = h + r.scaled(Scalar(H.field(), static_cast<long long>(t)));
    if (!(current == expected)) report.fail("t = " + std::to_string(t) + ": got " + current.str());
  }
  return report;
}

/// l minimal with p^l >= n, taking l >= 1 whenever n >= 1.
inline unsigned char_p_exponent(std::uint64_t p, std::uint64_t n) {
  if (n == 0) return 0;
  unsigned l = 1;
  for (std::uint64_t pl = p; pl < n; pl *= p) ++l;
  return l;
}

/// S^{2 m p^l} = id on generators, and the antipode order divides 2 m p^l.
inline CheckReport check_char_p_bound(const HopfPresentation& H, std::uint64_t m, unsigned n,
                                      const std::optional<OrderResult>& order = std::nullopt,
                                      std::uint64_t cutoff = kDefaultCutoff) {
  H.require_trusted();
  const std::uint64_t p = characteristic(*H.field());
  if (p == 0) throw Error("characteristic-p bound needs a field of positive characteristic");
  const unsigned l = char_p_exponent(p, n);
  std::uint64_t bound = 2 * m;
  for (unsigned i = 0; i < l; ++i) bound *= p;
  CheckReport report("S^" + std::to_string(bound) + " = id with bound 2*m_H*p^l, l = " + std::to_string(l));
  for (Symbol s = 0; s < H.alphabet().size(); ++s) {
    const NcPoly g = H.word({s});
    if (!(antipode_power(H, g, bound) == g)) report.fail("S^" + std::to_string(bound) + " moves " + g.str());
  }
  const OrderResult o = order ? *order : antipode_order(H, cutoff);
  report.details["l"] = l;
  report.details["bound"] = bound;
  report.details["order"] = o.str();
  if (!o.is_finite()) {
    report.fail("antipode order is not finite: " + o.str());
  } else if (bound % o.value.value != 0) {
    report.fail("order " + std::to_string(o.value.value) + " does not divide " + std::to_string(bound));
  } else {
    report.details["attained"] = o.value.value == bound;
  }
  return report;
}

/// (S^{2m} - id)^N(h) = S^{2mN}(h) - h, expanded term by term.
inline CheckReport check_binomial_identity(const HopfPresentation& H, const NcPoly& h, std::uint64_t m,
                                           std::uint64_t N) {
  H.require_trusted();
  CheckReport report("(S^" + std::to_string(2 * m) + " - id)^" + std::to_string(N) + "(h) = S^" +
                     std::to_string(2 * m * N) + "(h) - h for h = " + h.str());
  NcPoly lhs = h;
  for (std::uint64_t i = 0; i < N; ++i) lhs = detail::drift_operator(H, lhs, m);
  const NcPoly rhs = antipode_power(H, h, 2 * m * N) - h;
  if (!(lhs == rhs)) report.fail("left " + lhs.str() + ", right " + rhs.str());
  return report;
}

/// Witnesses against H being a Hopf algebra grading by the declared grade
/// weights: inhomogeneous rules, non-graded coproducts or antipodes of window
/// words, and degree-0 generators that are not group-like.
inline std::vector<std::string> grading_witnesses(const HopfPresentation& H, const BasisWindow& window) {
  const Alphabet& a = H.alphabet();
  std::vector<std::string> out;
  auto deg = [&](const Word& w) { return a.weight(w, Weight::Grade); };
  for (const auto& rule : H.rules().rules()) {
    const unsigned d = deg(rule.lhs);
    for (const auto& [w, c] : rule.rhs.terms())
      if (deg(w) != d) {
        out.push_back("relation " + a.format(rule.lhs) + " = " + rule.rhs.str() + " is inhomogeneous: " +
                      a.format(rule.lhs) + " has degree " + std::to_string(d) + ", " + (w.empty() ? "1" : a.format(w)) +
                      " has degree " + std::to_string(deg(w)));
        break;
      }
  }
  for (const Word& b : window.words()) {
    const unsigned d = deg(b);
    const TensorPoly d_b = H.delta_word(b);
    for (const auto& [k, c] : d_b.terms())
      if (deg(k[0]) + deg(k[1]) != d) {
        out.push_back("Delta(" + a.format(b) + ") has a term of degree " + std::to_string(deg(k[0]) + deg(k[1])));
        break;
      }
    const NcPoly s_b = H.antipode_word(b);
    for (const auto& [w, c] : s_b.terms())
      if (deg(w) != d) {
        out.push_back("S(" + a.format(b) + ") has a term of degree " + std::to_string(deg(w)));
        break;
      }
  }
  for (Symbol s = 0; s < a.size(); ++s)
    if (a.info(s).grade == 0 && !detail::is_group_like_word(H, {s}))
      out.push_back("degree-0 generator " + a.name(s) + " is not group-like");
  return out;
}

/// For a Hopf algebra grading with m_H finite, S = id or |S| = 2 m_H; with
/// m_H infinite the order is infinite. Throws GradingViolation when the
/// grading pre-check fails.
inline CheckReport check_graded_order_law(const HopfPresentation& H, const BasisWindow& window,
                                          std::uint64_t cutoff = kDefaultCutoff) {
  H.require_trusted();
  if (auto w = grading_witnesses(H, window); !w.empty()) throw GradingViolation(std::move(w));
  CheckReport report("graded case: S = id or |S| = 2 m_H");
  if (!H.info().grading_declared) report.warn("grade weights were not declared explicitly");
  const MhResult mh = m_H(H, H.info().representatives, window, cutoff, H.info().exhaustive_representatives);
  const OrderResult order = antipode_order(H, cutoff);
  report.details["m_H"] = mh.value.str();
  report.details["order"] = order.str();
  if (mh.lower_bound) report.warn("m_H computed from a non-exhaustive set of group-likes");
  if (mh.value.is_finite()) {
    if (!order.is_finite()) {
      if (order.value.is_infinite()) report.fail("m_H finite but order " + order.str());
      else report.warn("order undetermined below the cutoff");
    } else if (order.value.value != 1 && order.value.value != 2 * mh.value.value) {
      report.fail("order " + std::to_string(order.value.value) + " differs from 1 and 2*m_H = " +
                  std::to_string(2 * mh.value.value));
    }
  } else if (mh.value.is_infinite()) {
    if (order.is_finite()) report.fail("m_H infinite but order " + order.str());
  } else {
    report.warn("m_H undetermined below the cutoff");
  }
  return report;
}

}  // namespace hopfkit
