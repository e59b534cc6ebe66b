#include "fuzz.hpp"

#include <algorithm>
#include <functional>

#include "contfrac.hpp"
#include "hall.hpp"
#include "hankel.hpp"
#include "random.hpp"
#include "shulga.hpp"
#include "text.hpp"

namespace lcf {
namespace {

struct Trial {
  std::string input;
  std::optional<std::string> failure;
};

struct Suite {
  std::string name;
  std::size_t default_precision;
  int default_max_degree;
  std::function<Trial(const Field&, Rng&, const FuzzConfig&, FuzzSummary&)> run;
};

std::string rational_text(const Polynomial& num, const Polynomial& den) {
  return "(" + format_polynomial(num) + ")/(" + format_polynomial(den) + ")";
}

void bump_max(FuzzSummary& s, const std::string& key, long long value) {
  for (auto& [k, v] : s.stats) {
    if (k == key) {
      v = std::max(v, value);
      return;
    }
  }
  s.stats.emplace_back(key, value);
}

void bump_sum(FuzzSummary& s, const std::string& key, long long value) {
  for (auto& [k, v] : s.stats) {
    if (k == key) {
      v += value;
      return;
    }
  }
  s.stats.emplace_back(key, value);
}

std::size_t precision_of(const FuzzConfig& c, const Suite& s) {
  return c.precision.value_or(s.default_precision);
}
int max_degree_of(const FuzzConfig& c, const Suite& s) {
  return std::max(1, c.max_degree.value_or(s.default_max_degree));
}

const std::vector<Suite>& suites();

Trial hall_trial(const Field& f, Rng& rng, const FuzzConfig& c, FuzzSummary&) {
  const LaurentSeries alpha = random_series(f, rng, precision_of(c, suites()[0]));
  Trial t{format_series(alpha), std::nullopt};
  const Chooser chooser = Chooser::seeded(rng.next());
  const bool f2 = f.characteristic() == 2;
  const HallResult r = f2 ? hall_decompose_f2(alpha, chooser) : hall_decompose(alpha, chooser);
  const DecompositionReport rep = hall_verify(alpha, r.beta, r.gamma, r.mode);
  if (!rep.sum_ok) {
    t.failure = "beta + gamma differs from alpha at index " + std::to_string(*rep.sum_mismatch);
  } else if (!rep.beta_check.ok) {
    t.failure = "beta fails the F(" + std::to_string(rep.beta_k) + ") Hankel test at h = " +
                std::to_string(*rep.beta_check.witness);
  } else if (!rep.gamma_check.ok) {
    t.failure = "gamma fails the F(1) Hankel test at h = " + std::to_string(*rep.gamma_check.witness);
  } else if (!rep.beta_cf_ok || !rep.gamma_cf_ok) {
    t.failure = "a certified partial quotient exceeds the degree bound";
  }
  return t;
}

Trial detlem_trial(const Field& f, Rng& rng, const FuzzConfig& c, FuzzSummary& s) {
  const auto [num, den] = random_proper_rational(f, rng, max_degree_of(c, suites()[1]));
  Trial t{rational_text(num, den), std::nullopt};
  const std::size_t n = static_cast<std::size_t>(2 * den.degree() - 1);
  const std::size_t hmax = (n + 1) / 2;
  const DeltaProfile profile = delta_profile(f, LaurentSeries::from_rational(num, den, n).frac(), n);
  std::vector<std::size_t> expected;
  for (const Convergent& row : convergents(cf_expand_rational(num, den))) {
    if (row.n >= 1 && static_cast<std::size_t>(row.deg_q()) <= hmax) {
      expected.push_back(static_cast<std::size_t>(row.deg_q()));
    }
  }
  bump_sum(s, "nonzero_deltas", static_cast<long long>(expected.size()));
  if (profile.nonzero != expected) t.failure = "nonzero Hankel orders differ from deg q_n";
  return t;
}

Trial shulga_trial(const Field& f, Rng& rng, const FuzzConfig& c, FuzzSummary& s) {
  const auto [num, den] = random_proper_rational(f, rng, max_degree_of(c, suites()[2]));
  Trial t{rational_text(num, den), std::nullopt};
  const RationalFunction alpha(num, den);
  const ShulgaResult r = shulga_decompose_rational(num, den);
  const std::size_t rounds = r.trace.rounds();
  bump_max(s, "max_rounds", static_cast<long long>(rounds));
  const GapReport gaps = shulga_verify_gaps(r.trace);
  if (r.trace.stop != StopReason::ExactSumAfterB && r.trace.stop != StopReason::ExactSumAfterC) {
    t.failure = std::string("did not terminate: ") + to_string(r.trace.stop);
  } else if (2 * rounds > static_cast<std::size_t>(alpha.den().degree())) {
    t.failure = std::to_string(rounds) + " rounds exceed deg(den)/2 with deg(den) = " +
                std::to_string(alpha.den().degree());
  } else if (!gaps.ok()) {
    const GapViolation& v = gaps.violations.front();
    t.failure = "gap rule " + v.rule + " fails at " + std::to_string(v.index);
  } else if (!(cf_value(r.beta) + cf_value(r.gamma) == alpha)) {
    t.failure = "beta + gamma does not reconstruct alpha";
  } else if (!shulga_verify_well_defined(alpha, r.trace).ok) {
    t.failure = "a partial quotient is not reproduced from its defining difference";
  }
  return t;
}

Trial certification_trial(const Field& f, Rng& rng, const FuzzConfig& c, FuzzSummary& s) {
  const auto [num, den] = random_proper_rational(f, rng, max_degree_of(c, suites()[3]));
  const auto n = static_cast<std::size_t>(rng.between(1, 2 * den.degree() + 2));
  Trial t{rational_text(num, den) + " @" + std::to_string(n), std::nullopt};
  const LaurentSeries x = LaurentSeries::from_rational(num, den, n);
  const ContinuedFraction cf = cf_expand_series(x);

  // Extended value: x's prefix followed by `tail` random coefficients, as P / t^M.
  const std::size_t total = n + c.tail;
  std::vector<Residue> top(total + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) top[total - i] = x.frac_coeff(i);
  for (std::size_t i = n + 1; i <= total; ++i) top[total - i] = random_residue(f, rng);
  const Polynomial ext_num = x.poly_part().shifted(static_cast<unsigned>(total)) +
                             Polynomial(f, std::move(top));
  const Polynomial ext_den = Polynomial::monomial(f, 1, static_cast<unsigned>(total));
  const std::vector<Polynomial> oracle = euclid_partials(ext_num, ext_den, cf.certified + 1);

  bump_sum(s, "certified_partials", static_cast<long long>(cf.certified));
  if (poly_divmod(ext_num, ext_den).quotient != cf.a0) {
    t.failure = "a0 changed";
  } else if (oracle.size() < cf.certified + 1) {
    t.failure = "extended series has fewer partial quotients than certified";
  } else {
    for (std::size_t i = 0; i < cf.certified; ++i) {
      if (oracle[i + 1] != cf.partials[i]) {
        t.failure = "certified partial quotient " + std::to_string(i + 1) + " changed";
        break;
      }
    }
  }
  return t;
}

Trial cf_oracle_trial(const Field& f, Rng& rng, const FuzzConfig& c, FuzzSummary&) {
  const auto [num, den] = random_proper_rational(f, rng, max_degree_of(c, suites()[4]));
  Trial t{rational_text(num, den), std::nullopt};
  const RationalFunction alpha(num, den);
  const ContinuedFraction exact = cf_expand_rational(num, den);
  const std::size_t n = static_cast<std::size_t>(2 * alpha.den().degree());
  const ContinuedFraction series = cf_expand_series(LaurentSeries::from_rational(num, den, n));
  const std::vector<Polynomial> euclid = euclid_partials(num, den, exact.length() + 2);
  if (!(cf_value(exact) == alpha)) {
    t.failure = "exact expansion does not evaluate back to alpha";
  } else if (euclid.size() != exact.length() + 1 ||
             !std::equal(exact.partials.begin(), exact.partials.end(), euclid.begin() + 1)) {
    t.failure = "exact expansion disagrees with plain Euclidean division";
  } else if (series.certified != exact.length() ||
             !std::equal(exact.partials.begin(), exact.partials.end(), series.partials.begin())) {
    t.failure = "series expansion at N = 2 deg(den) is not the full exact expansion";
  } else {
    (void)convergents(exact);  // throws on non-additive degrees
  }
  return t;
}

Trial skm_trial(const Field& f, Rng& rng, const FuzzConfig& c, FuzzSummary& s) {
  const std::size_t zeros = skm_required_zeros(c.k, c.m);
  const std::size_t n = std::max(precision_of(c, suites()[5]), zeros + 1);
  LaurentSeries raw = random_series(f, rng, n);
  std::vector<Residue> frac(raw.frac().begin(), raw.frac().end());
  std::fill(frac.begin(), frac.begin() + static_cast<std::ptrdiff_t>(zeros), 0);
  const LaurentSeries alpha(Polynomial(f), std::move(frac));
  Trial t{format_series(alpha), std::nullopt};
  const SkmReport r = skm_check(alpha, c.k, c.m);
  bump_sum(s, "certified_b", static_cast<long long>(r.result.beta.certified));
  bump_sum(s, "certified_c", static_cast<long long>(r.result.gamma.certified));
  if (!r.beta_class.in_S_k) {
    t.failure = "beta has a certified partial quotient of degree < " + std::to_string(c.k);
  } else if (!r.gamma_class.in_S_k) {
    t.failure = "gamma has a certified partial quotient of degree < " + std::to_string(c.m);
  } else if (!r.beta_class.is_G_prime || !r.gamma_class.is_G_prime) {
    t.failure = "partial-quotient degrees are not strictly increasing";
  } else if (!r.gaps.ok()) {
    t.failure = "gap rule " + r.gaps.violations.front().rule + " fails";
  }
  return t;
}

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all{
      {"hall", 41, 0, hall_trial},
      {"detlem", 0, 10, detlem_trial},
      {"shulga-termination", 0, 20, shulga_trial},
      {"certification", 0, 10, certification_trial},
      {"cf-oracle", 0, 10, cf_oracle_trial},
      {"skm", 41, 0, skm_trial},
  };
  return all;
}

}  // namespace

const std::vector<std::string>& fuzz_suites() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const Suite& s : suites()) out.push_back(s.name);
    out.push_back("lemma");
    return out;
  }();
  return names;
}

FuzzSummary run_fuzz(const Field& field, const FuzzConfig& config) {
  FuzzSummary summary;
  summary.suite = config.suite;

  if (config.suite == "lemma") {
    if (field.characteristic() != 2) {
      throw Error(ErrorCode::WrongField, "the lemma suite enumerates F_2 points");
    }
    const LemmaReport r = lemma_exhaustive_f2(4);
    summary.trials = r.points;
    summary.failed = r.affine_failures + r.quadratic_failures;
    summary.passed = r.points - std::min(r.points, summary.failed);
    summary.stats = {{"max_h", static_cast<long long>(r.max_h)},
                     {"affine_failures", static_cast<long long>(r.affine_failures)},
                     {"quadratic_failures", static_cast<long long>(r.quadratic_failures)}};
    return summary;
  }

  const auto it = std::find_if(suites().begin(), suites().end(),
                               [&](const Suite& s) { return s.name == config.suite; });
  if (it == suites().end()) {
    throw Error(ErrorCode::InvalidArgument, "unknown fuzz suite '" + config.suite + "'");
  }
  if (config.k < 1 || config.m < config.k) {
    throw Error(ErrorCode::InvalidArgument, "need 1 <= k <= m");
  }

  for (std::size_t i = 0; i < config.trials; ++i) {
    const std::uint64_t seed = trial_seed(config.seed, i);
    Rng rng(seed);
    Trial t;
    try {
      t = it->run(field, rng, config, summary);
    } catch (const Error& e) {
      t.failure = std::string(to_string(e.code())) + ": " + e.what();
    }
    ++summary.trials;
    if (!t.failure) {
      ++summary.passed;
      continue;
    }
    ++summary.failed;
    if (summary.failures.size() < config.max_failures_reported) {
      summary.failures.push_back({i, seed, std::move(t.input), std::move(*t.failure)});
    }
  }
  return summary;
}

LemmaReport lemma_exhaustive_f2(std::size_t max_h) {
  const Field f2(2);
  LemmaReport r{max_h};
  for (std::size_t h = 1; h <= max_h; ++h) {
    const std::size_t len = 2 * h + 1;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
      std::vector<Residue> x(len);
      for (std::size_t i = 0; i < len; ++i) x[i] = static_cast<Residue>((bits >> i) & 1);
      const std::span<const Residue> xs(x);
      ++r.points;

      const Residue d_next = hankel_delta(f2, xs, h + 1);
      const Residue d_h = hankel_delta(f2, xs.first(2 * h - 1), h);
      const Residue p_h = p_h_eval(f2, xs.first(2 * h), h);
      if (d_next != f2.add(f2.mul(x[2 * h], d_h), p_h)) ++r.affine_failures;

      const Residue d_prev = h == 1 ? 1 : hankel_delta(f2, xs.first(2 * h - 3), h - 1);
      const Residue x_even = x[2 * h - 1];
      const Residue q_h = q_h_eval(f2, xs.first(2 * h - 1), h);
      if (p_h != f2.add(f2.mul(f2.mul(x_even, x_even), d_prev), q_h)) ++r.quadratic_failures;
    }
  }
  return r;
}

std::vector<Polynomial> euclid_partials(Polynomial num, Polynomial den, std::size_t count) {
  std::vector<Polynomial> out;
  while (out.size() < count && !den.is_zero()) {
    DivMod qr = poly_divmod(num, den);
    out.push_back(std::move(qr.quotient));
    num = std::move(den);
    den = std::move(qr.remainder);
  }
  return out;
}

}  // namespace lcf
