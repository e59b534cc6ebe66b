#include <gtest/gtest.h>

#include "contfrac.hpp"
#include "hankel.hpp"
#include "oracles.hpp"
#include "random.hpp"

using namespace lcf;

namespace {

std::vector<oracle::Int> widen(const std::vector<Residue>& x) {
  return std::vector<oracle::Int>(x.begin(), x.end());
}

std::vector<Residue> bits(std::uint64_t v, std::size_t len) {
  std::vector<Residue> x(len);
  for (std::size_t i = 0; i < len; ++i) x[i] = static_cast<Residue>((v >> i) & 1);
  return x;
}

}  // namespace

TEST(Determinant, AgreesWithPermutationAndCofactorOracles) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    const Field f(p);
    Rng rng(p + 1000);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t n = static_cast<std::size_t>(rng.between(1, 6));
      std::vector<Residue> m(n * n);
      // Bias towards zeros so singular matrices show up.
      for (auto& e : m) e = rng.uniform(3) == 0 ? 0 : random_residue(f, rng);
      std::vector<std::vector<oracle::Int>> rows(n, std::vector<oracle::Int>(n));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) rows[i][j] = m[i * n + j];
      }
      const oracle::Int expected = oracle::det_leibniz(rows, p);
      EXPECT_EQ(oracle::det_cofactor(rows, p), expected);
      EXPECT_EQ(determinant(f, m, n), static_cast<Residue>(expected));
    }
  }
}

TEST(HankelDelta, Examples) {
  const Field f3(3), f5(5);
  const std::vector<Residue> one{2};
  EXPECT_EQ(hankel_delta(f3, one, 1), 2u);
  const std::vector<Residue> swap{0, 1, 0};
  EXPECT_EQ(hankel_delta(f5, swap, 2), 4u);
  EXPECT_EQ(hankel_delta(f3, swap, 2), 2u);

  const std::vector<Residue> x{1, 0, 2, 0, 1};
  const oracle::Int leibniz = oracle::hankel_det(widen(x), 3, 3);
  const oracle::Int cofactor = oracle::det_cofactor(oracle::hankel(widen(x), 3), 3);
  EXPECT_EQ(leibniz, cofactor);
  EXPECT_EQ(leibniz, 0);
  EXPECT_EQ(hankel_delta(f3, x, 3), 0u);

  EXPECT_EQ(hankel_delta(f3, {}, 0), 1u);
  try {
    hankel_delta(f3, x, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InsufficientCoefficients);
  }
}

TEST(DeltaProfile, Examples) {
  const Field f3(3);
  const std::vector<Residue> inv_t{1, 0, 0, 0, 0};
  const DeltaProfile a = delta_profile(f3, inv_t, 5);
  EXPECT_EQ(a.delta[0], 1u);
  EXPECT_EQ(a.delta[1], 1u);
  EXPECT_EQ(a.nonzero, (std::vector<std::size_t>{1}));

  const std::vector<Residue> inv_t2{0, 1, 0, 0, 0};
  const DeltaProfile b = delta_profile(f3, inv_t2, 5);
  EXPECT_EQ(b.delta[1], 0u);
  EXPECT_EQ(b.delta[2], 2u);
  EXPECT_EQ(b.nonzero.front(), 2u);
  EXPECT_EQ(cf_expand_series(LaurentSeries(Polynomial(f3), inv_t2)).certified_degrees(),
            (std::vector<int>{2}));

  const LaurentSeries s = series_from_rational(Polynomial(f3, {0, 1}), Polynomial(f3, {1, 0, 1}), 5);
  const DeltaProfile c = delta_profile(f3, s.frac(), 5);
  EXPECT_EQ(c.max_order(), 3u);
  EXPECT_EQ(c.nonzero, (std::vector<std::size_t>{1, 2}));
}

TEST(DeltaProfile, NonzeroOrdersAreDenominatorDegrees) {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const Field f(p);
    Rng rng(p * 17);
    for (int trial = 0; trial < 500; ++trial) {
      const auto [num, den] = random_proper_rational(f, rng, 10);
      const std::size_t n = static_cast<std::size_t>(2 * den.degree() - 1);
      const LaurentSeries x = LaurentSeries::from_rational(num, den, n);
      std::vector<std::size_t> expected;
      for (const auto& row : convergents(cf_expand_rational(num, den))) {
        if (row.n >= 1 && static_cast<std::size_t>(row.deg_q()) <= (n + 1) / 2) {
          expected.push_back(static_cast<std::size_t>(row.deg_q()));
        }
      }
      EXPECT_EQ(delta_profile(f, x.frac(), n).nonzero, expected);
    }
  }
}

TEST(PhEval, Examples) {
  const Field f3(3), f2(2);
  const std::vector<Residue> ones{1, 1};
  EXPECT_EQ(p_h_eval(f3, ones, 1), 2u);
  for (Residue x1 : {0u, 1u, 2u}) {
    const std::vector<Residue> pt{x1, 0};
    EXPECT_EQ(p_h_eval(f3, pt, 1), 0u);
  }
  const std::vector<Residue> four{1, 1, 1, 1};
  EXPECT_EQ(p_h_eval(f2, four, 2),
            static_cast<Residue>(oracle::hankel_det({1, 1, 1, 1, 0}, 3, 2)));
  EXPECT_EQ(p_h_eval(f2, four, 2), 0u);
  EXPECT_THROW(p_h_eval(f2, four, 3), Error);
}

TEST(QhEval, Examples) {
  const Field f2(2), f3(3);
  for (Residue x1 : {0u, 1u}) {
    const std::vector<Residue> pt{x1};
    EXPECT_EQ(q_h_eval(f2, pt, 1), 0u);
  }
  const std::vector<Residue> pt{1, 0, 1};
  EXPECT_EQ(q_h_eval(f2, pt, 2), static_cast<Residue>(oracle::hankel_det({1, 0, 1, 0, 0}, 3, 2)));
  EXPECT_EQ(q_h_eval(f2, pt, 2), 1u);
  try {
    q_h_eval(f3, pt, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::WrongField);
  }
}

TEST(HankelIdentities, QuadraticTermExhaustiveOverF2) {
  const Field f2(2);
  for (std::size_t h = 1; h <= 4; ++h) {
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << (2 * h)); ++v) {
      const auto x = bits(v, 2 * h);
      const oracle::Int d_prev = h == 1 ? 1 : oracle::hankel_det(widen(x), h - 1, 2);
      const Residue expected = f2.add(static_cast<Residue>(x[2 * h - 1] * x[2 * h - 1] * d_prev),
                                      q_h_eval(f2, std::span(x).first(2 * h - 1), h));
      EXPECT_EQ(p_h_eval(f2, x, h), expected) << "h=" << h << " v=" << v;
    }
  }
}

TEST(HankelIdentities, AffineInLastCoefficient) {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const Field f(p);
    Rng rng(p);
    for (std::size_t h = 1; h <= 5; ++h) {
      for (int trial = 0; trial < 60; ++trial) {
        std::vector<Residue> x(2 * h + 1);
        for (auto& r : x) r = random_residue(f, rng);
        const Residue lhs = static_cast<Residue>(oracle::hankel_det(widen(x), h + 1, p));
        const Residue rhs = f.add(f.mul(x[2 * h], hankel_delta(f, x, h)),
                                  p_h_eval(f, std::span(x).first(2 * h), h));
        EXPECT_EQ(lhs, rhs);
      }
    }
  }
}

TEST(HankelIdentities, F2NoOddPowerOfSecondToLast) {
  // With x_{2h+1} = 0, flipping x_{2h} from 0 to 1 changes D_{h+1} by D_{h-1}.
  const Field f2(2);
  for (std::size_t h = 1; h <= 4; ++h) {
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << (2 * h - 1)); ++v) {
      auto x = bits(v, 2 * h + 1);
      x[2 * h] = 0;
      x[2 * h - 1] = 0;
      const Residue at0 = hankel_delta(f2, x, h + 1);
      x[2 * h - 1] = 1;
      const Residue at1 = hankel_delta(f2, x, h + 1);
      const Residue d_prev = h == 1 ? 1 : hankel_delta(f2, x, h - 1);
      EXPECT_EQ(f2.sub(at1, at0), d_prev);
    }
  }
}

TEST(FClassCheck, Examples) {
  const Field f3(3), f2(2);
  const std::vector<Residue> a{1, 0, 0, 0, 0};
  const FClassCheck r = f_class_check(f3, a, 5, 1);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.witness, 2u);

  const std::vector<Residue> b{0, 1, 0};
  EXPECT_TRUE(f_class_check(f2, b, 3, 2).ok);
  EXPECT_FALSE(f_class_check(f2, b, 3, 1).ok);
  EXPECT_THROW(f_class_check(f2, b, 3, 0), Error);
}

TEST(FClassCheck, MatchesDefinitionOnRandomPrefixes) {
  const Field f(2);
  Rng rng(8);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.between(1, 11));
    std::vector<Residue> x(n);
    for (auto& r : x) r = random_residue(f, rng);
    for (int k = 1; k <= 3; ++k) {
      bool ok = true;
      for (std::size_t h = static_cast<std::size_t>(k); h <= (n + 1) / 2 && ok; ++h) {
        bool gap = true;
        for (int i = 1; i < k; ++i) gap = gap && oracle::hankel_det(widen(x), h - i, 2) == 0;
        if (gap && oracle::hankel_det(widen(x), h, 2) == 0) ok = false;
      }
      EXPECT_EQ(f_class_check(f, x, n, k).ok, ok);
    }
  }
}
