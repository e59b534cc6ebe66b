#include <gtest/gtest.h>

#include "hall.hpp"
#include "oracles.hpp"
#include "random.hpp"
#include "text.hpp"

using namespace lcf;

namespace {

std::vector<Residue> frac(const LaurentSeries& x) {
  return std::vector<Residue>(x.frac().begin(), x.frac().end());
}

using Rs = std::vector<Residue>;

// Every Hankel determinant of the prefix, by the permutation-sum oracle.
std::vector<oracle::Int> oracle_deltas(const LaurentSeries& x, oracle::Int p) {
  const std::vector<oracle::Int> c(x.frac().begin(), x.frac().end());
  std::vector<oracle::Int> out;
  for (std::size_t h = 1; 2 * h - 1 <= c.size(); ++h) out.push_back(oracle::hankel_det(c, h, p));
  return out;
}

}  // namespace

TEST(HallDecompose, WorkedExampleOverF3) {
  const Field f(3);
  const HallResult r = hall_decompose(parse_series(f, "0 ; 1 0 0 @3"));
  EXPECT_EQ(r.mode, HallMode::Generic);
  EXPECT_EQ(frac(r.beta), (Rs{2, 0, 1}));
  EXPECT_EQ(frac(r.gamma), (Rs{2, 0, 2}));
  ASSERT_EQ(r.steps.size(), 2u);
  EXPECT_EQ(r.steps[0].forbidden, (Rs{0, 1}));
  EXPECT_EQ(r.steps[1].beta_free, 0u);
  EXPECT_EQ(r.steps[1].forbidden, (Rs{0}));
  EXPECT_EQ(r.steps[1].delta_beta, 2u);
  EXPECT_EQ(hankel_delta(f, r.beta.frac(), 2), 2u);
}

TEST(HallDecompose, ZeroInputOverF5) {
  const Field f(5);
  const LaurentSeries alpha = LaurentSeries::zero(f, 5);
  const HallResult r = hall_decompose(alpha);
  EXPECT_EQ(r.beta, -r.gamma);
  EXPECT_TRUE(f_class_check(f, r.beta.frac(), 5, 1).ok);
  EXPECT_TRUE(f_class_check(f, r.gamma.frac(), 5, 1).ok);
  for (oracle::Int d : oracle_deltas(r.beta, 5)) EXPECT_NE(d, 0);
}

TEST(HallDecompose, RationalInputOverF3) {
  const Field f(3);
  const LaurentSeries alpha =
      series_from_rational(parse_polynomial(f, "t"), parse_polynomial(f, "t^2+1"), 9);
  const HallResult r = hall_decompose(alpha);
  const DecompositionReport rep = hall_verify(alpha, r.beta, r.gamma, HallMode::Generic);
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(rep.beta_delta_nonzero, (std::vector<std::size_t>{1, 2, 3, 4, 5}));
  EXPECT_EQ(rep.gamma_delta_nonzero, (std::vector<std::size_t>{1, 2, 3, 4, 5}));
}

TEST(HallDecompose, FieldRequirements) {
  try {
    hall_decompose(LaurentSeries::zero(Field(2), 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::FieldTooSmall);
  }
  try {
    hall_decompose_f2(LaurentSeries::zero(Field(3), 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::WrongField);
  }
}

TEST(HallDecompose, PolynomialPartGoesToBeta) {
  const Field f(5);
  const LaurentSeries alpha = parse_series(f, "t^2+3 ; 1 2 3 @3");
  const HallResult r = hall_decompose(alpha);
  EXPECT_EQ(r.beta.poly_part(), parse_polynomial(f, "t^2+3"));
  EXPECT_TRUE(r.gamma.poly_part().is_zero());
  EXPECT_TRUE(hall_verify(alpha, r.beta, r.gamma, HallMode::Generic).passed());
}

TEST(HallDecomposeF2, WorkedExampleInverseT) {
  const Field f(2);
  const HallResult r = hall_decompose_f2(parse_series(f, "0 ; 1 0 0 @3"));
  EXPECT_EQ(frac(r.beta), (Rs{0, 1, 0}));
  EXPECT_EQ(frac(r.gamma), (Rs{1, 1, 0}));
  ASSERT_EQ(r.steps.size(), 2u);
  EXPECT_EQ(r.steps[0].delta_beta, 0u);
  EXPECT_EQ(r.steps[1].branch, "case1");
  EXPECT_EQ(r.steps[1].forbidden_free, (Rs{0}));
  EXPECT_EQ(r.steps[1].forbidden, (Rs{1}));
  EXPECT_EQ(r.steps[1].delta_beta, 1u);
  EXPECT_EQ(r.steps[1].delta_gamma, 1u);
}

TEST(HallDecomposeF2, ZeroInput) {
  const Field f(2);
  const HallResult r = hall_decompose_f2(LaurentSeries::zero(f, 3));
  EXPECT_EQ(frac(r.beta), (Rs{1, 0, 1}));
  EXPECT_EQ(frac(r.gamma), (Rs{1, 0, 1}));
  EXPECT_EQ(r.steps[1].branch, "generic");
  EXPECT_EQ(r.steps[1].beta_free, 0u);
}

TEST(HallVerify, DetectsBadSplits) {
  const Field f(3);
  const LaurentSeries alpha = parse_series(f, "0 ; 1 2 0 1 1 @5");
  const DecompositionReport degenerate =
      hall_verify(alpha, alpha, LaurentSeries::zero(f, 5), HallMode::Generic);
  EXPECT_TRUE(degenerate.sum_ok);
  EXPECT_FALSE(degenerate.gamma_check.ok);
  EXPECT_EQ(degenerate.gamma_check.witness, 1u);
  EXPECT_FALSE(degenerate.passed());

  const HallResult r = hall_decompose(alpha);
  std::vector<Residue> tampered = frac(r.beta);
  tampered[3] = f.add(tampered[3], 1);
  const DecompositionReport bad =
      hall_verify(alpha, LaurentSeries(Polynomial(f), tampered), r.gamma, HallMode::Generic);
  EXPECT_FALSE(bad.sum_ok);
  EXPECT_EQ(bad.sum_mismatch, 4u);

  EXPECT_THROW(hall_verify(alpha, r.beta.truncated(4), r.gamma, HallMode::Generic), Error);
}

TEST(HallCounterexample, InverseTIsNotASumOfTwoF1OverF2) {
  const CounterexampleReport r = f1_counterexample_f2();
  ASSERT_EQ(r.branches.size(), 2u);
  EXPECT_TRUE(r.all_refuted);
  for (const auto& b : r.branches) {
    EXPECT_EQ(b.refuted_at_h, 1u);
    EXPECT_EQ((b.beta1 + b.gamma1) % 2, 1u);
  }
  // The same input is fine over F3 and with the F2 construction.
  EXPECT_TRUE(hall_verify(parse_series(Field(3), "0 ; 1 0 0 @3"),
                          hall_decompose(parse_series(Field(3), "0 ; 1 0 0 @3")).beta,
                          hall_decompose(parse_series(Field(3), "0 ; 1 0 0 @3")).gamma,
                          HallMode::Generic)
                  .passed());
  const LaurentSeries a2 = parse_series(Field(2), "0 ; 1 0 0 @3");
  const HallResult r2 = hall_decompose_f2(a2);
  EXPECT_TRUE(hall_verify(a2, r2.beta, r2.gamma, HallMode::F2).passed());
}

TEST(HallDecompose, ChooserIndependenceAndOracleDeterminants) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    const Field f(p);
    Rng rng(p * 101);
    for (int trial = 0; trial < 100; ++trial) {
      const LaurentSeries alpha = random_series(f, rng, 13);
      const Chooser chooser = Chooser::seeded(rng.next());
      const HallResult r = p == 2 ? hall_decompose_f2(alpha, chooser) : hall_decompose(alpha, chooser);
      EXPECT_TRUE(hall_verify(alpha, r.beta, r.gamma, r.mode).passed());
      const auto db = oracle_deltas(r.beta, p);
      const auto dg = oracle_deltas(r.gamma, p);
      for (oracle::Int d : dg) EXPECT_NE(d, 0);
      for (std::size_t h = 0; h < db.size(); ++h) {
        if (p != 2) {
          EXPECT_NE(db[h], 0);
        } else if (h > 0) {
          EXPECT_FALSE(db[h] == 0 && db[h - 1] == 0) << "h=" << h + 1;
        }
      }
    }
  }
}

TEST(HallDecompose, ExtendingTheInputExtendsTheOutput) {
  for (std::uint32_t p : {2u, 5u}) {
    const Field f(p);
    Rng rng(p);
    const LaurentSeries long_alpha = random_series(f, rng, 41);
    const LaurentSeries short_alpha = long_alpha.truncated(20);
    auto run = [&](const LaurentSeries& a) {
      return p == 2 ? hall_decompose_f2(a, Chooser::seeded(9)) : hall_decompose(a, Chooser::seeded(9));
    };
    const HallResult full = run(long_alpha);
    const HallResult part = run(short_alpha);
    EXPECT_EQ(full.beta.truncated(20), part.beta);
    EXPECT_EQ(full.gamma.truncated(20), part.gamma);
  }
}

TEST(HallState, FeedsOneCoefficientAtATime) {
  const Field f(3);
  HallState s(f, HallMode::Generic);
  for (Residue a : {1u, 0u, 0u, 2u}) s.feed(a);
  EXPECT_EQ(s.consumed(), 4u);
  EXPECT_EQ(s.steps().size(), 3u);
  EXPECT_FALSE(s.steps().back().beta.has_value());  // trailing even slot only
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(f.add(s.beta()[i], s.gamma()[i]), (Rs{1, 0, 0, 2})[i]);
  }
}
