#include <gtest/gtest.h>

#include <cmath>

#include "contfrac.hpp"
#include "oracles.hpp"
#include "random.hpp"
#include "text.hpp"

using namespace lcf;

namespace {

Polynomial P(const Field& f, const char* s) { return parse_polynomial(f, s); }

oracle::Poly to_oracle(const Polynomial& a) {
  return oracle::Poly(a.coeffs().begin(), a.coeffs().end());
}

std::vector<std::string> texts(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(format_polynomial(p));
  return out;
}

using Strings = std::vector<std::string>;

}  // namespace

TEST(CfExpandRational, Examples) {
  const Field f3(3);
  const ContinuedFraction a = cf_expand_rational(P(f3, "t"), P(f3, "t^2+1"));
  EXPECT_TRUE(a.a0.is_zero());
  EXPECT_EQ(texts(a.partials), (Strings{"t", "t"}));
  EXPECT_EQ(a.certified, 2u);
  EXPECT_TRUE(a.exact);

  for (std::uint32_t p : {2u, 5u, 7u}) {
    const Field f(p);
    EXPECT_EQ(texts(cf_expand_rational(P(f, "1"), P(f, "t")).partials), (Strings{"t"}));
  }

  // Euclid by hand: t^3 = t (t^2+1) + 2t, t^2+1 = 2t * 2t + 1, 2t = 2t * 1.
  const ContinuedFraction b = cf_expand_rational(P(f3, "t^2+1"), P(f3, "t^3"));
  EXPECT_EQ(texts(b.partials), (Strings{"t", "2t", "2t"}));
  EXPECT_EQ(cf_value(b), RationalFunction(P(f3, "t^2+1"), P(f3, "t^3")));

  EXPECT_THROW(cf_expand_rational(P(f3, "1"), Polynomial(f3)), Error);
}

TEST(CfExpandRational, AgreesWithEuclidOracleAndEvaluatesBack) {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const Field f(p);
    Rng rng(31 * p);
    for (int i = 0; i < 300; ++i) {
      const Polynomial den = random_polynomial(f, rng, static_cast<int>(rng.between(0, 10)));
      const Polynomial num = random_polynomial(f, rng, static_cast<int>(rng.between(0, 12)));
      const ContinuedFraction cf = cf_expand_rational(num, den);
      const auto expected = oracle::cf(to_oracle(num), to_oracle(den), p);
      ASSERT_EQ(cf.length() + 1, expected.size());
      EXPECT_EQ(to_oracle(cf.a0), expected[0]);
      for (std::size_t k = 0; k < cf.length(); ++k) {
        EXPECT_EQ(to_oracle(cf.partials[k]), expected[k + 1]);
        EXPECT_GE(cf.partials[k].degree(), 1);
      }
      std::vector<oracle::Poly> all{to_oracle(cf.a0)};
      for (const auto& a : cf.partials) all.push_back(to_oracle(a));
      const auto [vn, vd] = oracle::cf_value(all, p);
      // vn/vd == num/den  <=>  vn*den == num*vd
      EXPECT_EQ(oracle::mul(vn, to_oracle(den), p), oracle::mul(to_oracle(num), vd, p));
    }
  }
}

TEST(CfExpandSeries, Examples) {
  const Field f3(3);
  const ContinuedFraction a = cf_expand_series(parse_series(f3, "0 ; 1 0 2 0 1 0 @6"));
  EXPECT_EQ(texts(a.partials), (Strings{"t", "t"}));
  EXPECT_EQ(a.certified, 2u);
  EXPECT_FALSE(a.exact);

  const ContinuedFraction b = cf_expand_series(parse_series(f3, "0 ; 1 0 @2"));
  EXPECT_EQ(texts(b.partials), (Strings{"t"}));
  EXPECT_EQ(b.certified, 1u);

  const ContinuedFraction c = cf_expand_series(LaurentSeries::zero(f3, 5));
  EXPECT_EQ(c.length(), 0u);
  EXPECT_EQ(c.certified, 0u);
  EXPECT_EQ(format_cf(c), "[0;]");

  // t^-1 with one known coefficient: 2 * 1 > 1, nothing is certified.
  EXPECT_EQ(cf_expand_series(parse_series(f3, "0 ; 1 @1")).certified, 0u);
  // Polynomial part becomes a0.
  EXPECT_EQ(cf_expand_series(parse_series(f3, "t+2 ; 1 0 @2")).a0, P(f3, "t+2"));
}

TEST(CfExpandSeries, CertifiedPrefixMatchesExactExpansion) {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const Field f(p);
    Rng rng(p);
    for (int i = 0; i < 1000; ++i) {
      const auto [num, den] = random_proper_rational(f, rng, 12);
      const ContinuedFraction exact = cf_expand_rational(num, den);
      const RationalFunction r(num, den);
      const std::size_t n = static_cast<std::size_t>(rng.between(0, 2 * r.den().degree()));
      const ContinuedFraction series = cf_expand_series(LaurentSeries::from_rational(num, den, n));
      ASSERT_LE(series.certified, exact.length());
      for (std::size_t k = 0; k < series.certified; ++k) {
        EXPECT_EQ(series.partials[k], exact.partials[k]);
      }
      // The rule 2 deg q_n <= N, computed independently from the exact degrees.
      std::size_t expect_certified = 0;
      int deg_q = 0;
      for (const auto& a : exact.partials) {
        deg_q += a.degree();
        if (2 * static_cast<std::size_t>(deg_q) > n) break;
        ++expect_certified;
      }
      EXPECT_EQ(series.certified, expect_certified);
    }
  }
}

TEST(CfExpandSeries, TailIndependence) {
  const Field f(3);
  Rng rng(77);
  for (int i = 0; i < 300; ++i) {
    const LaurentSeries x = random_series(f, rng, 12);
    const ContinuedFraction base = cf_expand_series(x);
    std::vector<Residue> longer(x.frac().begin(), x.frac().end());
    for (int k = 0; k < 30; ++k) longer.push_back(random_residue(f, rng));
    const ContinuedFraction ext = cf_expand_series(LaurentSeries(x.poly_part(), longer));
    ASSERT_GE(ext.certified, base.certified);
    for (std::size_t k = 0; k < base.certified; ++k) EXPECT_EQ(ext.partials[k], base.partials[k]);
  }
}

TEST(Convergents, Examples) {
  const Field f3(3);
  const auto rows = convergents(parse_cf(f3, "[0; t, t]"));
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0].p, P(f3, "0"));
  EXPECT_EQ(rows[0].q, P(f3, "1"));
  EXPECT_EQ(rows[1].p, P(f3, "1"));
  EXPECT_EQ(rows[1].q, P(f3, "t"));
  EXPECT_EQ(rows[2].p, P(f3, "t"));
  EXPECT_EQ(rows[2].q, P(f3, "t^2+1"));

  const auto rows2 = convergents(parse_cf(f3, "[0; t, t^5]"));
  EXPECT_EQ(rows2[2].deg_q(), 6);
}

TEST(CfEval, Examples) {
  const Field f3(3);
  EXPECT_EQ(cf_eval(parse_cf(f3, "[0; t]"), 3), parse_series(f3, "0 ; 1 0 0 @3"));
  EXPECT_EQ(cf_eval(parse_cf(f3, "[0; t, t]"), 6), parse_series(f3, "0 ; 1 0 2 0 1 0 @6"));
  EXPECT_EQ(cf_eval(parse_cf(f3, "[0;]"), 4), LaurentSeries::zero(f3, 4));
  EXPECT_EQ(cf_eval(parse_cf(f3, "[t+1;]"), 1), parse_series(f3, "t+1 ; 0 @1"));
}

TEST(ApproxErrorCheck, Examples) {
  const Field f3(3);
  const LaurentSeries x = series_from_rational(P(f3, "t"), P(f3, "t^2+1"), 6);
  const ContinuedFraction cf = cf_expand_series(x);
  EXPECT_TRUE(approx_error_check(x, cf, 1));
  EXPECT_TRUE(approx_error_check(x, cf, 0));

  const LaurentSeries inv_t = parse_series(f3, "0 ; 1 0 @2");
  EXPECT_TRUE(approx_error_check(inv_t, cf_expand_series(inv_t), 0));

  // alpha_3 zeroed: x - 1/t drops to degree -5 instead of -(1 + 2).
  const LaurentSeries bad = parse_series(f3, "0 ; 1 0 0 0 1 0 @6");
  EXPECT_FALSE(approx_error_check(bad, cf, 1));

  EXPECT_THROW(approx_error_check(x, cf, 2), Error);
}

TEST(ApproxErrorCheck, HoldsAtEveryCertifiedIndex) {
  const Field f(5);
  Rng rng(9);
  for (int i = 0; i < 300; ++i) {
    const auto [num, den] = random_proper_rational(f, rng, 8);
    const RationalFunction r(num, den);
    const std::size_t n = static_cast<std::size_t>(2 * r.den().degree() + 4);
    const LaurentSeries x = LaurentSeries::from_rational(num, den, n);
    const ContinuedFraction cf = cf_expand_series(x);
    for (std::size_t k = 0; k + 1 <= cf.certified; ++k) {
      const auto rows = convergents(cf);
      if (rows[k].deg_q() + rows[k + 1].deg_q() > static_cast<int>(n)) break;
      EXPECT_TRUE(approx_error_check(x, cf, k)) << k;
    }
  }
}

TEST(Convergents, ConverseLegendreOnSmallRationals) {
  // Every p/q in lowest terms with |x - p/q| < |q|^-2 is a convergent.
  const Field f(3);
  Rng rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    const auto [num, den] = random_proper_rational(f, rng, 6);
    const RationalFunction x(num, den);
    const ContinuedFraction cf = cf_expand_rational(x);
    const auto rows = convergents(cf);
    const std::size_t n = 40;
    const LaurentSeries xs = LaurentSeries::from_rational(x, n);
    for (int dq = 0; dq <= 3; ++dq) {
      // Enumerate monic q of degree dq and p with deg p < deg q (x has a0 = 0).
      const std::size_t q_count = static_cast<std::size_t>(std::pow(3, dq));
      for (std::size_t qi = 0; qi < q_count; ++qi) {
        std::vector<Residue> qc;
        for (std::size_t v = qi, k = 0; k < static_cast<std::size_t>(dq); ++k, v /= 3) qc.push_back(v % 3);
        qc.push_back(1);
        const Polynomial q(f, qc);
        const std::size_t p_count = static_cast<std::size_t>(std::pow(3, dq));
        for (std::size_t pi = 0; pi < p_count; ++pi) {
          std::vector<Residue> pc;
          for (std::size_t v = pi, k = 0; k < static_cast<std::size_t>(dq); ++k, v /= 3) pc.push_back(v % 3);
          const Polynomial pp(f, pc);
          if (poly_gcd(pp, q).degree() > 0) continue;
          if (pp.is_zero() && dq > 0) continue;
          const LaurentSeries diff = xs - LaurentSeries::from_rational(pp, q, n);
          const SeriesDegree d = series_degree(diff);
          const bool close = std::holds_alternative<BelowPrecision>(d) || std::get<int>(d) < -2 * dq;
          if (!close) continue;
          const RationalFunction target(pp, q);
          bool found = false;
          for (const auto& row : rows) found = found || RationalFunction(row.p, row.q) == target;
          EXPECT_TRUE(found) << format_polynomial(pp) << "/" << format_polynomial(q);
        }
      }
    }
  }
}

TEST(Classify, Examples) {
  const Field f3(3);
  const Classification a = classify(parse_cf(f3, "[0; t, t]"), 1);
  EXPECT_TRUE(a.in_F_k);
  EXPECT_FALSE(a.is_G_prime);
  EXPECT_FALSE(classify(parse_cf(f3, "[0; t, t]"), 2).in_S_k);
  EXPECT_TRUE(classify(parse_cf(f3, "[0; t, t^5, t^9]"), 1).is_G_prime);
  EXPECT_TRUE(classify(parse_cf(f3, "[0; t^3, t^7]"), 3).in_S_k);
  EXPECT_EQ(classify(parse_cf(f3, "[0; t^3, t^7]"), 3).degrees, (std::vector<int>{3, 7}));

  ContinuedFraction exact = cf_expand_rational(P(f3, "1"), P(f3, "t"));
  EXPECT_EQ(classify(exact, 1).g, GMembership::Member);
  EXPECT_EQ(classify(cf_expand_series(parse_series(f3, "0 ; 1 0 @2")), 1).g,
            GMembership::ConsistentSoFar);
}
