#include <gtest/gtest.h>

#include <memory>
#include <random>

#include "hopfkit/hopfkit.hpp"
#include "support.hpp"

using namespace hopfkit;
using namespace testing_support;

namespace {

std::vector<Word> all_words(std::size_t letters, std::size_t max_length) {
  std::vector<Word> out{Word{}};
  std::vector<Word> frontier{Word{}};
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::vector<Word> next;
    for (const Word& w : frontier)
      for (std::size_t s = 0; s < letters; ++s) {
        Word u = w;
        u.push_back(static_cast<Symbol>(s));
        next.push_back(u);
      }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

struct Occurrence {
  std::size_t pos;
  std::size_t rule;
};

std::vector<Occurrence> occurrences(const RuleSet& rules, const Word& w) {
  std::vector<Occurrence> out;
  for (std::size_t r = 0; r < rules.rules().size(); ++r) {
    const Word& l = rules.rules()[r].lhs;
    for (std::size_t pos = 0; pos + l.size() <= w.size(); ++pos)
      if (std::equal(l.begin(), l.end(), w.begin() + static_cast<long>(pos))) out.push_back({pos, r});
  }
  return out;
}

NcPoly apply(const RuleSet& rules, const Word& w, const Scalar& c, Occurrence o) {
  NcPoly out = rules.zero();
  const auto& rule = rules.rules()[o.rule];
  for (const auto& [u, d] : rule.rhs.terms()) {
    Word next(w.begin(), w.begin() + static_cast<long>(o.pos));
    next.insert(next.end(), u.begin(), u.end());
    next.insert(next.end(), w.begin() + static_cast<long>(o.pos + rule.lhs.size()), w.end());
    out.add_term(next, c * d);
  }
  return out;
}

// Reduction with a randomly chosen term and redex at every step.
NcPoly random_strategy_normal_form(const RuleSet& rules, NcPoly p, std::mt19937_64& rng) {
  for (int steps = 0; steps < 100000; ++steps) {
    std::vector<std::pair<Word, Scalar>> reducible;
    for (const auto& [w, c] : p.terms())
      if (!occurrences(rules, w).empty()) reducible.emplace_back(w, c);
    if (reducible.empty()) return p;
    const auto& [w, c] = reducible[std::uniform_int_distribution<std::size_t>(0, reducible.size() - 1)(rng)];
    const auto occ = occurrences(rules, w);
    const Occurrence o = occ[std::uniform_int_distribution<std::size_t>(0, occ.size() - 1)(rng)];
    NcPoly next = p;
    next.add_term(w, -c);
    next += apply(rules, w, c, o);
    p = std::move(next);
  }
  ADD_FAILURE() << "reduction did not terminate";
  return p;
}

RuleSet non_confluent_rules() {
  auto a = std::make_shared<Alphabet>();
  const Symbol x = a->add("a"), y = a->add("b");
  const Field f = FieldDescriptor::rationals();
  RuleSet rules(f, a);
  rules.add({x, x}, NcPoly::monomial(f, a, {y}));
  rules.add({x, y}, NcPoly::monomial(f, a, {x}));
  return rules;
}

}  // namespace

TEST(RuleSet, RejectsRulesThatDoNotDecrease) {
  auto a = std::make_shared<Alphabet>();
  const Symbol x = a->add("X", 1, 1), z = a->add("Z", 2, 2);
  const Field f = FieldDescriptor::rationals();
  RuleSet rules(f, a);
  EXPECT_THROW(rules.add({x, z}, NcPoly::monomial(f, a, {z, x})), TerminationOrderViolation);
  EXPECT_THROW(rules.add({x}, NcPoly::monomial(f, a, {x, x})), TerminationOrderViolation);
  EXPECT_THROW(rules.add({x}, NcPoly::monomial(f, a, {x})), TerminationOrderViolation);
  EXPECT_THROW(rules.add({}, NcPoly(f, a)), TerminationOrderViolation);
  EXPECT_NO_THROW(rules.add({z, x}, NcPoly::monomial(f, a, {x, z})));
  try {
    rules.add({x, x}, NcPoly::monomial(f, a, {x, x}) + NcPoly::monomial(f, a, {z, x}));
    FAIL();
  } catch (const TerminationOrderViolation& e) {
    EXPECT_NE(std::string(e.what()).find("not oriented"), std::string::npos);
  }
}

TEST(RuleSet, LeftmostRedexEarliestRule) {
  const RuleSet rules = non_confluent_rules();
  auto r = rules.find_redex({1, 0, 0, 1});
  ASSERT_TRUE(r);
  EXPECT_EQ(r->position, 1u);
  EXPECT_EQ(r->rule, 0u);
  r = rules.find_redex({1, 0, 1});
  ASSERT_TRUE(r);
  EXPECT_EQ(r->rule, 1u);
  EXPECT_FALSE(rules.find_redex({1, 1, 0}));
}

TEST(RuleSet, NormalFormsAreNormalIdempotentAndLinear) {
  const std::vector<HopfPresentation> algebras{examples::build(examples::ExampleSpec::taft_wilson(5)),
                                               examples::build(examples::ExampleSpec::uq_borel_cyclotomic(5))};
  std::mt19937_64 rng(kSeed);
  for (const auto& H : algebras) {
    const RuleSet& rules = H.rules();
    for (int i = 0; i < 100; ++i) {
      NcPoly p = rules.zero(), q = rules.zero();
      for (int t = 0; t < 3; ++t) {
        p.add_term(random_word(rng, H.alphabet().size(), 6), random_nonzero(rng, H.field()));
        q.add_term(random_word(rng, H.alphabet().size(), 6), random_nonzero(rng, H.field()));
      }
      const NcPoly np = rules.normalize(p);
      for (const auto& [w, c] : np.terms()) EXPECT_TRUE(occurrences(rules, w).empty());
      EXPECT_EQ(rules.normalize(np), np);
      EXPECT_EQ(rules.normalize(p + q), np + rules.normalize(q));
    }
  }
}

// Every reduction path ends in the same normal form on all words up to length 4.
TEST(RuleSet, AllReductionPathsAgreeOnShortWords) {
  const std::vector<HopfPresentation> algebras{
      examples::build(examples::ExampleSpec::taft_wilson(3)),
      examples::build(examples::ExampleSpec::uq_borel_generic()),
      examples::build(examples::ExampleSpec::uq_borel_cyclotomic(4)),
      examples::build(examples::ExampleSpec::group_cyclic(3))};
  std::mt19937_64 rng(kSeed + 1);
  for (const auto& H : algebras) {
    const RuleSet& rules = H.rules();
    for (const Word& w : all_words(H.alphabet().size(), 4)) {
      const NcPoly expected = rules.normalize_word(w);
      for (const Occurrence& o : occurrences(rules, w)) {
        const NcPoly after = apply(rules, w, Scalar::one(H.field()), o);
        EXPECT_EQ(random_strategy_normal_form(rules, after, rng), expected)
            << H.info().name << " word " << H.alphabet().format(w);
      }
    }
    EXPECT_TRUE(rules.confluence_report(6).empty()) << H.info().name;
  }
}

TEST(RuleSet, NonConfluentSystemIsReported) {
  const RuleSet rules = non_confluent_rules();
  const auto report = rules.confluence_report(4);
  ASSERT_FALSE(report.empty());
  bool saw_aab = false;
  for (const auto& cp : report) {
    EXPECT_FALSE(cp.first_result == cp.second_result);
    if (cp.word == Word{0, 0, 1}) saw_aab = true;
  }
  EXPECT_TRUE(saw_aab);
  // The oracle agrees that aab has two normal forms.
  const Field f = rules.field();
  const NcPoly via_first = rules.normalize(apply(rules, {0, 0, 1}, Scalar::one(f), {0, 0}));
  const NcPoly via_second = rules.normalize(apply(rules, {0, 0, 1}, Scalar::one(f), {1, 1}));
  EXPECT_FALSE(via_first == via_second);
}

TEST(RuleSet, WordBasisMatchesFilteredEnumeration) {
  const HopfPresentation R = examples::build(examples::ExampleSpec::taft_wilson(3));
  EXPECT_EQ(R.rules().word_basis(8, Weight::Filtration).size(), 27u);
  const HopfPresentation R5 = examples::build(examples::ExampleSpec::taft_wilson(5));
  EXPECT_EQ(R5.rules().word_basis(16, Weight::Filtration).size(), 125u);

  const HopfPresentation U = examples::build(examples::ExampleSpec::uq_borel_cyclotomic(3));
  const RuleSet& rules = U.rules();
  const auto basis = rules.word_basis(2, Weight::Grade, 4);
  std::vector<Word> expected;
  for (const Word& w : all_words(U.alphabet().size(), 4))
    if (U.alphabet().weight(w, Weight::Grade) <= 2 && occurrences(rules, w).empty()) expected.push_back(w);
  std::sort(expected.begin(), expected.end(), rules.order());
  EXPECT_EQ(basis, expected);
  // E^a K^b with a <= 2, |b| <= 4 - a.
  EXPECT_EQ(basis.size(), 9u + 7u + 5u);
}

TEST(RuleSet, QuotientProductIsAssociative) {
  const HopfPresentation R = examples::build(examples::ExampleSpec::taft_wilson(3));
  const auto words = R.rules().word_basis(8, Weight::Filtration);
  std::mt19937_64 rng(kSeed + 2);
  for (int i = 0; i < 100; ++i) {
    const NcPoly a = random_element(rng, R, words), b = random_element(rng, R, words), c = random_element(rng, R, words);
    EXPECT_EQ(quotient_mul(quotient_mul(a, b, R.rules()), c, R.rules()),
              quotient_mul(a, quotient_mul(b, c, R.rules()), R.rules()));
  }
}

TEST(RuleSet, TensorNormalizationIsSlotwise) {
  const HopfPresentation U = examples::build(examples::ExampleSpec::uq_borel_generic());
  const Symbol E = U.alphabet().at("E"), K = U.alphabet().at("K"), Ki = U.alphabet().at("Ki");
  const NcPoly raw_left = NcPoly::monomial(U.field(), U.alphabet_ptr(), {K, E});
  const NcPoly raw_right = NcPoly::monomial(U.field(), U.alphabet_ptr(), {Ki, K, E});
  const TensorPoly t = U.rules().normalize(TensorPoly::pure({raw_left, raw_right}));
  EXPECT_EQ(t, TensorPoly::pure({U.word({K, E}), U.word({Ki, K, E})}));
  EXPECT_EQ(t.coeff({Word{E, K}, Word{E}}), Scalar::generator(U.field()));
}
