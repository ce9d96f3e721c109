#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pnspan/construct.hpp"
#include "pnspan/counterexample.hpp"
#include "pnspan/errors.hpp"

namespace pnspan {
namespace {

const FamilyIndex kInf = FamilyIndex::infinity();
FamilyIndex f(std::uint32_t k) { return FamilyIndex::finite(k); }
Rational q(long p, unsigned long d) { return make_rational(p, d); }

TEST(FamilyIndex, TotalOrderWithInfinityOnTop) {
  EXPECT_LT(f(0), f(1));
  EXPECT_LT(f(1'000'000), kInf);
  EXPECT_EQ(kInf, FamilyIndex::infinity());
  EXPECT_EQ(kInf.name(), "f_inf");
  EXPECT_EQ(f(3).name(), "f_3");
}

TEST(PiecewiseConstFn, AssignSplitsAndMerges) {
  PiecewiseConstFn g(Rational(0));
  g.assign(q(1, 4), q(1, 2), Rational(1));
  EXPECT_EQ(g.piece_count(), 3u);
  EXPECT_EQ(g(q(1, 4)), 0);  // left-open piece
  EXPECT_EQ(g(q(1, 2)), 1);  // right-closed piece
  g.assign(q(1, 4), q(1, 2), Rational(0));
  EXPECT_EQ(g, PiecewiseConstFn(Rational(0)));
  EXPECT_THROW(g(q(3, 2)), ParameterError);
}

TEST(FamilyFunction, PaperSpotValues) {
  const Rational eps = q(1, 1000);
  EXPECT_EQ(family_function(f(0), 5, eps), PiecewiseConstFn(Rational(0)));
  EXPECT_EQ(family_function(kInf, 5, eps), PiecewiseConstFn(Rational(1)));
  EXPECT_EQ(family_function(f(1), 5, eps)(q(3, 4)), q(1, 2));
  EXPECT_EQ(family_function(f(2), 5, eps)(q(7, 10)), q(1, 3));
}

TEST(FamilyFunction, AgreesWithDirectRecursiveDefinition) {
  const Rational eps = q(1, 997);
  for (std::uint32_t k = 0; k <= 12; ++k) {
    const auto fn = family_function(f(k), 12, eps);
    // Probe every breakpoint of f_k and the midpoints between them, plus a
    // regular grid.
    std::vector<Rational> probes;
    const auto& b = fn.breakpoints();
    for (std::size_t j = 0; j + 1 < b.size(); ++j) {
      probes.push_back(b[j]);
      probes.push_back((b[j] + b[j + 1]) / 2);
    }
    for (int s = 0; s <= 200; ++s) probes.push_back(q(s, 200));
    for (const auto& x : probes) {
      EXPECT_EQ(fn(x), testing::family_value_direct(k, x, eps)) << "k=" << k << " x=" << x.get_str();
    }
  }
}

TEST(FamilyFunction, ParameterErrors) {
  EXPECT_THROW(family_function(f(4), 3, q(1, 1000)), ParameterError);
  EXPECT_THROW(family_function(f(2), 3, q(1, 2)), ParameterError);
  EXPECT_THROW(family_function(f(1), 3, Rational(0)), ParameterError);
}

TEST(ClosedForm, TableOneEntries) {
  const Rational eps = q(1, 1000);
  EXPECT_EQ(dx_closed_form(f(0), f(1), eps), q(1, 2) + eps);
  EXPECT_EQ(dx_closed_form(f(0), f(2), eps), q(1, 2) + 2 * eps);
  EXPECT_EQ(dx_closed_form(f(0), f(3), eps), q(1, 2) + 3 * eps);
  EXPECT_EQ(dx_closed_form(f(1), f(2), eps), q(1, 3) + eps);
  EXPECT_EQ(dx_closed_form(f(1), f(3), eps), q(1, 3) + 2 * eps);
  EXPECT_EQ(dx_closed_form(f(2), f(3), eps), q(1, 4) + eps);
  EXPECT_EQ(dx_closed_form(f(3), kInf, eps), 1 - 3 * eps);
  EXPECT_EQ(dx_closed_form(kInf, f(1), eps), 1 - eps);
  EXPECT_EQ(dx_closed_form(f(0), kInf, eps), 1);
  EXPECT_EQ(dx_closed_form(f(3), f(3), eps), 0);
  EXPECT_EQ(dx_closed_form(f(3), f(1), eps), dx_closed_form(f(1), f(3), eps));
}

TEST(MeasureOracle, TableOneEntries) {
  const Rational eps = q(1, 1000);
  const auto f1 = family_function(f(1), 3, eps);
  const auto f2 = family_function(f(2), 3, eps);
  const auto f3 = family_function(f(3), 3, eps);
  EXPECT_EQ(dx_measure_oracle(f2, f2), 0);
  EXPECT_EQ(dx_measure_oracle(f1, f2), q(1, 3) + eps);
  EXPECT_EQ(dx_measure_oracle(f1, f3), q(1, 3) + 2 * eps);
}

TEST(MeasureOracle, MatchesClosedFormOnAllPairs) {
  for (const Rational& eps : {default_epsilon(20), q(1, 100'000)}) {
    std::vector<std::pair<FamilyIndex, PiecewiseConstFn>> fns;
    for (std::uint32_t k = 0; k <= 20; ++k) fns.emplace_back(f(k), family_function(f(k), 20, eps));
    fns.emplace_back(kInf, family_function(kInf, 20, eps));
    for (const auto& [a, fa] : fns) {
      for (const auto& [b, fb] : fns) {
        EXPECT_EQ(dx_measure_oracle(fa, fb), dx_closed_form(a, b, eps)) << a.name() << " " << b.name();
      }
    }
  }
}

// Row of distances from f_i in the order f_0, f_1, ..., f_inf as listed
// explicitly: 1/2+i eps, 1/3+(i-1) eps, ..., 1/(i+1)+eps, 0, 1/(i+2)+eps,
// 1/(i+2)+2 eps, ..., 1-i eps. Compared against the measure oracle.
TEST(MeasureOracle, RowEnumerationFromEachMember) {
  const std::uint32_t top = 15;
  const Rational eps = default_epsilon(top);
  std::vector<PiecewiseConstFn> fns;
  for (std::uint32_t k = 0; k <= top; ++k) fns.push_back(family_function(f(k), top, eps));
  const auto finf = family_function(kInf, top, eps);
  for (std::uint32_t i = 0; i <= top; ++i) {
    std::vector<Rational> listed;
    for (std::uint32_t k = 0; k < i; ++k) listed.push_back(Rational(1, k + 2) + (i - k) * eps);
    listed.push_back(Rational(0));
    for (std::uint32_t k = i + 1; k <= top; ++k) listed.push_back(Rational(1, i + 2) + (k - i) * eps);
    listed.push_back(1 - i * eps);
    for (std::uint32_t k = 0; k <= top; ++k) EXPECT_EQ(dx_measure_oracle(fns[i], fns[k]), listed[k]);
    EXPECT_EQ(dx_measure_oracle(fns[i], finf), listed.back());
  }
}

TEST(Harmonic, KnownValues) {
  EXPECT_EQ(harmonic(0), 0);
  EXPECT_EQ(harmonic(1), 1);
  EXPECT_EQ(harmonic(2), q(3, 2));
  EXPECT_EQ(harmonic(4), q(25, 12));
  EXPECT_EQ(harmonic(11), q(83711, 27720));
}

TEST(CounterexampleSpace, MemberIdsAndValidation) {
  const CounterexampleSpace space(3, default_epsilon(3));
  EXPECT_EQ(space.size(), 5u);
  EXPECT_EQ(space.infinity_id(), 4u);
  EXPECT_TRUE(space.member(4).is_infinite());
  EXPECT_EQ(space.member(2), f(2));
  EXPECT_THROW(CounterexampleSpace(4, q(1, 8)), ParameterError);
  EXPECT_THROW(CounterexampleSpace(4, Rational(-1)), ParameterError);
}

TEST(VerifyFamily, AllClaimsHoldUpToTen) {
  const auto report = verify_family(10, q(1, 2000));
  ASSERT_EQ(report.checks.size(), 11u);
  for (const auto& c : report.checks) {
    EXPECT_TRUE(c.passed()) << "i=" << c.i << ": " << (c.failures.empty() ? "" : c.failures.front());
    EXPECT_EQ(c.pair_ratio, harmonic(c.i + 1));
    EXPECT_GE(c.stretch, c.pair_ratio);
  }
  EXPECT_TRUE(report.passed());
}

TEST(VerifyFamily, SingleEdgeAtZero) {
  const auto report = verify_family(0, default_epsilon(0));
  ASSERT_EQ(report.checks.size(), 1u);
  EXPECT_TRUE(report.passed());
  EXPECT_EQ(report.checks[0].stretch, 1);
}

TEST(VerifyFamily, RejectsCollidingPieces) {
  EXPECT_THROW(verify_family(3, q(1, 2)), ParameterError);
  EXPECT_THROW(verify_family(10, q(1, 1000)), ParameterError);  // above 1/1320
}

}  // namespace
}  // namespace pnspan
