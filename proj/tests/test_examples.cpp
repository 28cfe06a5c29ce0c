#include <gtest/gtest.h>

#include "hopfkit/hopfkit.hpp"
#include "support.hpp"

using namespace hopfkit;
using examples::ExampleSpec;

namespace {

constexpr std::uint64_t kInf = 0;

// Hand-derived values: m_H, |S| (0 = infinite) and the char-p bound (0 = none).
struct Row {
  ExampleSpec spec;
  std::uint64_t m_h;
  std::uint64_t order;
  std::uint64_t bound;
};

std::vector<Row> table() {
  const Field f7 = FieldDescriptor::prime_field(7), f5 = FieldDescriptor::prime_field(5);
  return {
      {ExampleSpec::uq_borel_cyclotomic(2), 2, 4, 0},
      {ExampleSpec::uq_borel_cyclotomic(3), 3, 6, 0},
      {ExampleSpec::uq_borel_cyclotomic(4), 4, 8, 0},
      {ExampleSpec::uq_borel_cyclotomic(5), 5, 10, 0},
      {ExampleSpec::uq_borel_cyclotomic(6), 6, 12, 0},
      {ExampleSpec::uq_borel_cyclotomic(7), 7, 14, 0},
      {ExampleSpec::uq_borel_cyclotomic(12), 12, 24, 0},
      {ExampleSpec::uq_borel_generic(), kInf, kInf, 0},
      {ExampleSpec::uq_borel(f7, Scalar(f7, 2LL)), 3, 6, 42},
      {ExampleSpec::uq_borel(f7, Scalar(f7, 6LL)), 2, 4, 28},
      {ExampleSpec::uq_borel(f5, Scalar(f5, 2LL)), 4, 8, 40},
      {ExampleSpec::taft_wilson(3), 1, 6, 6},
      {ExampleSpec::taft_wilson(5), 1, 10, 10},
      {ExampleSpec::taft_wilson(7), 1, 14, 14},
      {ExampleSpec::group_cyclic(1), 1, 1, 0},
      {ExampleSpec::group_cyclic(2), 1, 1, 0},
      {ExampleSpec::group_cyclic(6), 1, 2, 0},
      {ExampleSpec::group_cyclic(4, f5), 1, 2, 2},
      {ExampleSpec::group_laurent(), 1, 2, 0},
  };
}

}  // namespace

TEST(Examples, ComputedValuesMatchTheTable) {
  for (const auto& row : table()) {
    const HopfPresentation H = examples::build(row.spec);
    ASSERT_TRUE(H.trusted()) << row.spec.label();
    const MhResult m = m_H(H);
    const OrderResult o = antipode_order(H);
    if (row.m_h == kInf) {
      EXPECT_TRUE(m.value.is_infinite()) << row.spec.label();
    } else {
      EXPECT_EQ(m.value, OrderValue::finite(row.m_h)) << row.spec.label();
    }
    if (row.order == kInf) {
      EXPECT_TRUE(o.value.is_infinite()) << row.spec.label();
    } else {
      EXPECT_EQ(o.value, OrderValue::finite(row.order)) << row.spec.label();
    }
    if (row.bound) {
      const CheckReport b = check_char_p_bound(H, row.m_h, *H.info().generation_degree, o);
      EXPECT_TRUE(b.passed) << b.to_text();
      EXPECT_EQ(b.details["bound"], row.bound) << row.spec.label();
    }
  }
}

TEST(Examples, ExpectedResultsAgreeWithTheTable) {
  for (const auto& row : table()) {
    const auto e = examples::expected_results(row.spec);
    EXPECT_EQ(e.m_h.value_or(kInf), row.m_h) << row.spec.label();
    EXPECT_EQ(e.order.value_or(kInf), row.order) << row.spec.label();
    EXPECT_EQ(e.bound.value_or(0), row.bound) << row.spec.label();
  }
}

TEST(Examples, TaftWilsonHasDimensionPCubed) {
  for (std::uint64_t p : {3ULL, 5ULL, 7ULL}) {
    const HopfPresentation R = examples::build(ExampleSpec::taft_wilson(p));
    const unsigned top = static_cast<unsigned>(4 * (p - 1));
    EXPECT_EQ(R.rules().word_basis(top + 1, Weight::Filtration, 3 * p).size(), p * p * p);
    EXPECT_EQ(R.info().generation_degree, 2u);
  }
}

TEST(Examples, UqBorelRelationsHoldInTheQuotient) {
  const HopfPresentation H = examples::build(ExampleSpec::uq_borel_cyclotomic(7));
  const Symbol E = H.alphabet().at("E"), K = H.alphabet().at("K"), Ki = H.alphabet().at("Ki");
  const Scalar q = Scalar::generator(H.field());
  EXPECT_EQ(H.word({K, E}), H.word({E, K}).scaled(q));
  EXPECT_EQ(H.word({Ki, E}), H.word({E, Ki}).scaled(q.inverse()));
  EXPECT_EQ(H.word({K, Ki}), H.one());
  EXPECT_EQ(H.word({K, K, Ki, E, Ki}), H.word({E}).scaled(q));
}

TEST(Examples, InvalidParametersAreRejected) {
  const Field q = FieldDescriptor::rationals();
  EXPECT_THROW(examples::build(ExampleSpec::uq_borel(q, Scalar::one(q))), SpecInvariantViolated);
  EXPECT_THROW(examples::build(ExampleSpec::uq_borel(q, Scalar::zero(q))), SpecInvariantViolated);
  EXPECT_THROW(examples::build(ExampleSpec::uq_borel_cyclotomic(1)), SpecInvariantViolated);
  EXPECT_THROW(examples::build(ExampleSpec::taft_wilson(2)), SpecInvariantViolated);
  ExampleSpec over_q = ExampleSpec::taft_wilson(3);
  over_q.field = q;
  EXPECT_THROW(examples::build(over_q), SpecInvariantViolated);
  EXPECT_THROW(examples::build(ExampleSpec::group_cyclic(0)), SpecInvariantViolated);
  EXPECT_THROW(FieldDescriptor::prime_field(9), InvalidField);
}

TEST(Examples, LabelsAndMetadata) {
  EXPECT_EQ(ExampleSpec::uq_borel_cyclotomic(5).label(), "uq-borel over " + FieldDescriptor::cyclotomic(5, "q")->name());
  EXPECT_EQ(ExampleSpec::taft_wilson(5).label(), "taft-wilson R over GF(5)");
  const HopfPresentation C = examples::build(ExampleSpec::group_cyclic(4));
  EXPECT_EQ(C.info().representatives.size(), 4u);
  EXPECT_TRUE(C.info().exhaustive_representatives);
  EXPECT_EQ(C.group_likes().size(), 4u);
  const HopfPresentation U = examples::build(ExampleSpec::uq_borel_generic());
  EXPECT_EQ(U.info().generation_degree, 1u);
  EXPECT_EQ(U.info().window.weight, Weight::Grade);
}
