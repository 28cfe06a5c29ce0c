// Acceptance run: one [PASS]/[FAIL] line per criterion, nonzero exit on any failure.
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hopfkit/cli.hpp"
#include "hopfkit/hopfkit.hpp"

using namespace hopfkit;
using examples::ExampleSpec;

namespace {

constexpr std::uint64_t kSeed = 20240611;

// Collects failure messages for one criterion.
struct Check {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

bool all_passed(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports)
    if (!r.passed) return false;
  return true;
}

bool has_witness(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports)
    if (!r.passed && !r.witnesses.empty()) return true;
  return false;
}

bool antipode_power_is_identity(const HopfPresentation& H, std::uint64_t k) {
  for (Symbol s = 0; s < H.alphabet().size(); ++s) {
    const NcPoly g = H.word({s});
    NcPoly v = g;
    for (std::uint64_t i = 0; i < k; ++i) v = H.antipode(v);
    if (!(v == g)) return false;
  }
  return true;
}

std::vector<ExampleSpec> every_builder() {
  const Field f7 = FieldDescriptor::prime_field(7);
  std::vector<ExampleSpec> out;
  for (std::uint64_t n : {2, 3, 4, 5, 7, 12}) out.push_back(ExampleSpec::uq_borel_cyclotomic(n));
  out.push_back(ExampleSpec::uq_borel_generic());
  out.push_back(ExampleSpec::uq_borel(f7, Scalar(f7, 2LL)));
  for (std::uint64_t p : {3, 5, 7}) out.push_back(ExampleSpec::taft_wilson(p));
  for (std::uint64_t n : {1, 2, 3, 6}) out.push_back(ExampleSpec::group_cyclic(n));
  out.push_back(ExampleSpec::group_laurent());
  return out;
}

void ac1(Check& c) {
  for (std::uint64_t n : {2, 3, 4, 5, 7, 12}) {
    const HopfPresentation H = examples::build(ExampleSpec::uq_borel_cyclotomic(n));
    const std::string tag = "n=" + std::to_string(n);
    c.expect(m_H(H).value == OrderValue::finite(n), tag + ": m_H = " + m_H(H).value.str());
    const OrderResult o = antipode_order(H);
    c.expect(o.value == OrderValue::finite(2 * n), tag + ": order " + o.str());
    c.expect(antipode_power_is_identity(H, 2 * n), tag + ": S^(2n) is not the identity");
    for (std::uint64_t k = 1; k < 2 * n; ++k)
      if ((2 * n) % k == 0) c.expect(!antipode_power_is_identity(H, k), tag + ": S^" + std::to_string(k) + " = id");
  }
}

void ac2(Check& c) {
  const HopfPresentation H = examples::build(ExampleSpec::uq_borel_generic());
  c.expect(m_H(H).value.is_infinite(), "m_H = " + m_H(H).value.str());
  const OrderResult o = antipode_order(H);
  c.expect(o.value.is_infinite(), "order " + o.str());
  if (!o.certificate) {
    c.expect(false, "no certificate");
    return;
  }
  const DriftCertificate& cert = *o.certificate;
  const Scalar q = Scalar::generator(H.field());
  const NcPoly E = H.word({H.alphabet().at("E")});
  c.expect(cert.kind == DriftCertificate::Kind::GeometricDrift, "certificate is not geometric");
  c.expect(cert.ratio && *cert.ratio == q.inverse(), "ratio is not q^-1");
  c.expect(verify_certificate(H, cert).passed, "certificate does not re-verify");
  // Independent evaluation: S^2(E) = q^-1 E, and q^-1 is a non-constant rational function.
  c.expect(antipode_power(H, cert.element, 2) == cert.element.scaled(q.inverse()), "S^2 of the certificate element");
  c.expect(antipode_power(H, E, 2) == E.scaled(q.inverse()), "S^2(E) != q^-1 E");
  const auto& rf = std::get<RationalFunction>(q.inverse().value());
  c.expect(rf.num.degree() != rf.den.degree(), "q^-1 evaluated as a constant");
  c.expect(mult_order(q.inverse()).is_infinite(), "mult_order(q^-1) is not infinite");
  NcPoly s = E;
  Scalar factor = Scalar::one(H.field());
  for (int j = 1; j <= 8; ++j) {
    s = antipode_power(H, s, 2);
    factor = factor * q.inverse();
    c.expect(s == E.scaled(factor), "S^" + std::to_string(2 * j) + "(E)");
    c.expect(!(s == E), "S^" + std::to_string(2 * j) + "(E) = E");
  }
}

void ac3(Check& c) {
  for (std::uint64_t p : {3, 5, 7}) {
    const HopfPresentation R = examples::build(ExampleSpec::taft_wilson(p));
    const std::string tag = "p=" + std::to_string(p);
    const Field f = R.field();
    const MhResult mh = m_H(R);
    c.expect(mh.value == OrderValue::finite(1), tag + ": m_R = " + mh.value.str());
    const NcPoly X = R.word({R.alphabet().at("X")}), Z = R.word({R.alphabet().at("Z")});
    for (std::uint64_t t = 1; t <= 2 * p; ++t)
      c.expect(antipode_power(R, Z, 2 * t) == Z - X.scaled(Scalar(f, static_cast<long long>(t))),
               tag + ": S^{2t}(Z) at t=" + std::to_string(t));
    const OrderResult o = antipode_order(R);
    c.expect(o.value == OrderValue::finite(2 * p), tag + ": order " + o.str());
    const unsigned top = static_cast<unsigned>(4 * (p - 1));
    const std::size_t dim = R.rules().word_basis(top + 1, Weight::Filtration, 3 * p).size();
    c.expect(dim == p * p * p, tag + ": normal words " + std::to_string(dim));
    const CheckReport b = check_char_p_bound(R, 1, 2, o);
    c.expect(b.passed, tag + ": char-p bound fails");
    c.expect(b.details.value("bound", std::uint64_t{0}) == 2 * p, tag + ": bound is not 2p");
    c.expect(b.details.value("attained", false), tag + ": bound not attained");
  }
}

void ac4(Check& c) {
  std::vector<std::pair<ExampleSpec, std::uint64_t>> cases;
  for (std::uint64_t n : {1, 2, 3, 6}) cases.emplace_back(ExampleSpec::group_cyclic(n), n <= 2 ? 1 : 2);
  cases.emplace_back(ExampleSpec::group_laurent(), 2);
  for (const auto& [spec, order] : cases) {
    const HopfPresentation H = examples::build(spec);
    c.expect(m_H(H).value == OrderValue::finite(1), spec.label() + ": m_H = " + m_H(H).value.str());
    const OrderResult o = antipode_order(H);
    c.expect(o.value == OrderValue::finite(order), spec.label() + ": order " + o.str());
    c.expect(antipode_power_is_identity(H, 2), spec.label() + ": S^2 != id");
  }
}

void ac5(Check& c) {
  for (const auto& spec : every_builder()) {
    HopfPresentation H = examples::build(spec);
    c.expect(all_passed(H.verify()) && H.trusted(), spec.label() + " does not verify");
  }
  struct Mutation {
    ExampleSpec spec;
    std::string generator;
    bool coproduct;
    std::string value;
  };
  const Field f7 = FieldDescriptor::prime_field(7);
  const std::vector<Mutation> mutations{
      {ExampleSpec::uq_borel_cyclotomic(5), "E", false, "-E"},
      {ExampleSpec::uq_borel_generic(), "E", true, "E@1 + 1@E"},
      {ExampleSpec::uq_borel(f7, Scalar(f7, 2LL)), "K", true, "K@1 + 1@K"},
      {ExampleSpec::taft_wilson(3), "X", false, "X"},
      {ExampleSpec::group_cyclic(6), "g", true, "g@1"},
      {ExampleSpec::group_laurent(), "g", false, "g"}};
  for (const auto& m : mutations) {
    HopfPresentation H = examples::build(m.spec);
    const Symbol s = H.alphabet().at(m.generator);
    if (m.coproduct) {
      H.set_coproduct(s, parse_tensor(m.value, H.field(), H.alphabet_ptr()));
    } else {
      H.set_antipode(s, parse_poly(m.value, H.field(), H.alphabet_ptr()));
    }
    const auto reports = H.verify();
    const std::string tag = m.spec.label() + " with " + (m.coproduct ? "Delta(" : "S(") + m.generator + ") = " + m.value;
    c.expect(!all_passed(reports) && !H.trusted(), tag + " passes");
    c.expect(has_witness(reports), tag + " has no witness");
  }
}

void ac6(Check& c) {
  for (const auto& spec : every_builder()) {
    const HopfPresentation H = examples::build(spec);
    const BasisWindow window(H);
    std::vector<Word> xs = H.info().representatives;
    for (const Word& g : H.group_likes()) xs.push_back(g);
    for (const Word& x : xs) {
      const SkewPrimitiveSpace space = skew_primitives(H, x, {}, window);
      const CheckReport r = check_conjugation_law(H, x, space, 6);
      c.expect(r.passed, spec.label() + ": " + r.to_text());
    }
  }
}

void ac7(Check& c) {
  for (std::uint64_t p : {3, 5, 7}) {
    const HopfPresentation R = examples::build(ExampleSpec::taft_wilson(p));
    const BasisWindow window(R);
    const std::uint64_t m = m_H(R).value.value;
    for (const CheckReport& r : {check_taft_wilson_step(R, m, 1, window), check_taft_wilson_step(R, m, 2, window),
                                 check_nilpotence(R, m, 2, window)}) {
      c.expect(r.passed, "p=" + std::to_string(p) + ": " + r.to_text());
      c.expect(r.details.value("words_checked", std::size_t{0}) > 0, "p=" + std::to_string(p) + ": empty check");
    }
  }
}

void ac8(Check& c) {
  std::mt19937_64 rng(kSeed);
  for (std::uint64_t p : {3, 5}) {
    const HopfPresentation R = examples::build(ExampleSpec::taft_wilson(p));
    const BasisWindow window(R);
    const Field f = R.field();
    std::uniform_int_distribution<std::size_t> pick(0, window.size() - 1);
    std::uniform_int_distribution<long long> coeff(1, static_cast<long long>(p) - 1);
    for (int i = 0; i < 20; ++i) {
      NcPoly h = R.zero();
      for (int k = 0; k < 3; ++k) h += R.word(window.words()[pick(rng)]).scaled(Scalar(f, coeff(rng)));
      // (S^2 - id)^p expanded here independently of the kernel.
      NcPoly lhs = h;
      for (std::uint64_t j = 0; j < p; ++j) lhs = antipode_power(R, lhs, 2) - lhs;
      c.expect(lhs == antipode_power(R, h, 2 * p) - h, "p=" + std::to_string(p) + ": h = " + h.str());
      c.expect(check_binomial_identity(R, h, 1, p).passed, "kernel check p=" + std::to_string(p) + ": h = " + h.str());
    }
  }
}

void ac9(Check& c) {
  for (std::uint64_t n : {2, 3, 4, 5, 7, 12}) {
    const HopfPresentation H = examples::build(ExampleSpec::uq_borel_cyclotomic(n));
    const CheckReport r = check_graded_order_law(H, BasisWindow(H));
    c.expect(r.passed, "n=" + std::to_string(n) + ": " + r.to_text());
  }
  for (std::uint64_t p : {3, 5, 7}) {
    const HopfPresentation R = examples::build(ExampleSpec::taft_wilson(p));
    const NcPoly X = R.word({R.alphabet().at("X")}), Z = R.word({R.alphabet().at("Z")});
    const NcPoly rhs = R.mul(X, Z) - R.mul(X, X).scaled(Scalar(R.field(), 2LL).inverse());
    const std::string expected = "relation Z*X = " + rhs.str() + " is inhomogeneous";
    try {
      check_graded_order_law(R, BasisWindow(R));
      c.expect(false, "p=" + std::to_string(p) + ": no GradingViolation");
    } catch (const GradingViolation& e) {
      bool found = false;
      for (const auto& w : e.witnesses()) found = found || w.rfind(expected, 0) == 0;
      c.expect(found, "p=" + std::to_string(p) + ": missing witness '" + expected + "'");
    }
  }
}

void ac10(Check& c) {
  for (const char* family : {"uq-borel", "taft-wilson", "group-cyclic", "group-laurent"}) {
    std::string first;
    for (int run = 0; run < 2; ++run) {
      const char* argv[] = {"hopfkit", "sweep", "--family", family, "--json"};
      std::ostringstream out, err;
      const int code = cli::run(5, argv, out, err);
      c.expect(code == cli::kExitPass, std::string(family) + ": sweep exited " + std::to_string(code));
      if (run == 0) {
        first = out.str();
      } else {
        c.expect(!first.empty() && out.str() == first, std::string(family) + ": reports differ");
      }
    }
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"AC1 U_q(b+) at n-th roots of unity: m_H = n, |S| = 2n", ac1},
      {"AC2 U_q(b+) at generic q: infinite order, certificate re-verified", ac2},
      {"AC3 Taft-Wilson R: m_R = 1, S^{2t}(Z) = Z - tX, |S| = 2p, dim p^3, bound attained", ac3},
      {"AC4 group algebras: m_H = 1, orders 1 and 2, S^2 = id", ac4},
      {"AC5 axiom suite on all builders and six mutations", ac5},
      {"AC6 S(h) = -h x^-1 and S^{2m}(h) = x^m h x^-m on every P_{x,1}, m <= 6", ac6},
      {"AC7 filtration steps and nilpotence on R", ac7},
      {"AC8 (S^2 - id)^p = S^{2p} - id on 20 random elements of R, p = 3, 5", ac8},
      {"AC9 graded order law on U_q(b+), GradingViolation on R", ac9},
      {"AC10 sweep reports are byte-identical across runs", ac10}};
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Check c;
    try {
      run(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    std::cout << (c.failures.empty() ? "[PASS] " : "[FAIL] ") << name << "\n";
    for (const auto& f : c.failures) std::cout << "    " << f << "\n";
    if (!c.failures.empty()) ++failed;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
