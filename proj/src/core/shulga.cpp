#include "shulga.hpp"

#include <algorithm>
#include <functional>

namespace lcf {
namespace {

ContinuedFraction zero_cf(const Field& f, const std::vector<Polynomial>& partials) {
  return ContinuedFraction(Polynomial(f), partials, partials.size());
}

std::vector<int> cumulative_degrees(const std::vector<Polynomial>& partials) {
  std::vector<int> out{0};
  for (const auto& a : partials) out.push_back(out.back() + a.degree());
  return out;
}

ShulgaResult finish(const Field& f, ShulgaTrace trace, bool exact) {
  ContinuedFraction beta = zero_cf(f, trace.b);
  ContinuedFraction gamma = zero_cf(f, trace.c);
  const bool terminated =
      trace.stop == StopReason::ExactSumAfterB || trace.stop == StopReason::ExactSumAfterC;
  beta.exact = gamma.exact = exact && terminated;
  auto beta_rows = convergents(beta);
  auto gamma_rows = convergents(gamma);
  return {std::move(beta), std::move(gamma), std::move(trace), std::move(beta_rows),
          std::move(gamma_rows)};
}

}  // namespace

const char* to_string(StopReason reason) noexcept {
  switch (reason) {
    case StopReason::ExactSumAfterB: return "exact_sum_after_b";
    case StopReason::ExactSumAfterC: return "exact_sum_after_c";
    case StopReason::PrecisionExhausted: return "precision_exhausted";
    case StopReason::MaxRounds: return "max_rounds";
  }
  return "unknown";
}

std::vector<int> ShulgaTrace::deg_q() const { return cumulative_degrees(b); }
std::vector<int> ShulgaTrace::deg_t() const { return cumulative_degrees(c); }

ShulgaResult shulga_decompose_rational(const Polynomial& num, const Polynomial& den,
                                       std::size_t max_rounds) {
  require_same_field(num.field(), den.field());
  if (den.is_zero()) throw Error(ErrorCode::DivisionByZeroPolynomial, "zero denominator");
  if (num.degree() >= den.degree()) {
    throw Error(ErrorCode::PreconditionViolated,
                "the decomposition needs a0(alpha) = 0 (deg num < deg den); split first");
  }
  const Field& f = num.field();
  const RationalFunction alpha(num, den);
  RationalFunction beta(f), gamma(f);
  ShulgaTrace trace;

  auto partial = [](const RationalFunction& x, std::size_t index) {
    ContinuedFraction cf = cf_expand_rational(x);
    if (cf.partials.size() < index) {
      throw Error(ErrorCode::Internal, "difference has fewer partial quotients than expected");
    }
    return cf.partials[index - 1];
  };

  for (;;) {
    if (alpha == beta + gamma) {
      trace.stop = StopReason::ExactSumAfterC;
      break;
    }
    if (trace.c.size() >= max_rounds) {
      trace.stop = StopReason::MaxRounds;
      break;
    }
    const std::size_t n = trace.b.size();
    trace.b.push_back(partial(alpha - gamma, n + 1));
    beta = cf_value(zero_cf(f, trace.b));
    if (alpha == beta + gamma) {
      trace.stop = StopReason::ExactSumAfterB;
      break;
    }
    trace.c.push_back(partial(alpha - beta, n + 1));
    gamma = cf_value(zero_cf(f, trace.c));
  }
  return finish(f, std::move(trace), true);
}

ShulgaResult shulga_decompose_series(const LaurentSeries& alpha, std::size_t max_rounds) {
  if (!alpha.poly_part().is_zero()) {
    throw Error(ErrorCode::PreconditionViolated,
                "the decomposition needs a0(alpha) = 0; split the polynomial part first");
  }
  const Field& f = alpha.field();
  const std::size_t n_prec = alpha.precision();
  ShulgaTrace trace;
  trace.stop = StopReason::PrecisionExhausted;

  // Partial quotient `index` of alpha - [0; partials], if certified.
  auto partial = [&](const std::vector<Polynomial>& partials,
                     std::size_t index) -> std::optional<Polynomial> {
    const LaurentSeries diff = alpha - cf_eval(zero_cf(f, partials), n_prec);
    ContinuedFraction cf = cf_expand_series(diff, index);
    if (cf.certified < index) return std::nullopt;
    return cf.partials[index - 1];
  };

  for (;;) {
    if (trace.c.size() >= max_rounds) {
      trace.stop = StopReason::MaxRounds;
      break;
    }
    const std::size_t n = trace.b.size();
    auto b = partial(trace.c, n + 1);
    if (!b) break;
    trace.b.push_back(std::move(*b));
    auto c = partial(trace.b, n + 1);
    if (!c) break;
    trace.c.push_back(std::move(*c));
  }
  return finish(f, std::move(trace), false);
}

GapReport shulga_verify_gaps(const ShulgaTrace& trace) {
  GapReport r;
  const auto dq = trace.deg_q();
  const auto dt = trace.deg_t();
  const std::size_t nb = trace.b.size();
  const std::size_t nc = trace.c.size();
  auto require_ge = [&](const char* rule, std::size_t idx, int lhs, int rhs) {
    if (lhs < rhs) r.violations.push_back({rule, idx, lhs, rhs});
  };

  if (nc >= 1) {
    require_ge("deg(c_1) >= 2 deg(b_1) + 1", 1, trace.c[0].degree(), 2 * trace.b[0].degree() + 1);
  }
  for (std::size_t n = 2; n <= nb; ++n) {
    if (n - 1 <= nc) {
      require_ge("deg(b_n) >= deg(c_{n-1}) + 2", n, trace.b[n - 1].degree(),
                 trace.c[n - 2].degree() + 2);
    }
    if (n <= nc) {
      require_ge("deg(c_n) >= deg(b_n) + 2", n, trace.c[n - 1].degree(),
                 trace.b[n - 1].degree() + 2);
    }
  }
  for (std::size_t j = 1; j <= nb; ++j) {
    if (j - 1 > nc) break;
    InterlacingSides s{j, dt[j - 1] - dq[j - 1], dq[j] - dt[j - 1]};
    r.b_sides.push_back(s);
    if (!(s.left < s.right)) {
      r.violations.push_back({"deg t_{j-1} - deg q_{j-1} < deg q_j - deg t_{j-1}", j, s.left, s.right});
    }
  }
  for (std::size_t j = 1; j <= nc; ++j) {
    InterlacingSides s{j, dq[j] - dt[j - 1], dt[j] - dq[j]};
    r.c_sides.push_back(s);
    if (!(s.left < s.right)) {
      r.violations.push_back({"deg q_j - deg t_{j-1} < deg t_j - deg q_j", j, s.left, s.right});
    }
    require_ge("deg t_j - deg q_j >= 2j", j, dt[j] - dq[j], static_cast<int>(2 * j));
  }
  return r;
}

namespace {

// `expand(partials, count)` returns the first `count` partial quotients of
// alpha - [0; partials], or nullopt if they are not all determined.
using Expander = std::function<std::optional<std::vector<Polynomial>>(
    const std::vector<Polynomial>&, std::size_t)>;

WellDefinedReport check_well_defined(const ShulgaTrace& trace, const Expander& expand) {
  WellDefinedReport r;
  auto prefix = [](const std::vector<Polynomial>& v, std::size_t n) {
    return std::vector<Polynomial>(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n));
  };
  auto check = [&](std::size_t round, const std::vector<Polynomial>& subtract,
                   const std::vector<Polynomial>& expected) {
    const auto got = expand(subtract, expected.size());
    if (!got) {
      ++r.unverifiable;
      return;
    }
    if (*got != expected && r.ok) {
      r.ok = false;
      r.first_failure = round;
    }
  };
  for (std::size_t n = 1; n <= trace.b.size(); ++n) {
    const auto bs = prefix(trace.b, n);
    check(n, bs, prefix(trace.c, std::min(n - 1, trace.c.size())));
    if (n <= trace.c.size()) {
      const auto cs = prefix(trace.c, n);
      check(n, cs, bs);
      check(n, bs, cs);
    }
  }
  return r;
}

}  // namespace

WellDefinedReport shulga_verify_well_defined(const RationalFunction& alpha,
                                             const ShulgaTrace& trace) {
  const Field& f = alpha.field();
  return check_well_defined(
      trace, [&](const std::vector<Polynomial>& partials,
                 std::size_t count) -> std::optional<std::vector<Polynomial>> {
        ContinuedFraction cf = cf_expand_rational(alpha - cf_value(zero_cf(f, partials)));
        if (cf.partials.size() < count) return std::vector<Polynomial>(cf.partials);
        cf.partials.resize(count, Polynomial(f));
        return cf.partials;
      });
}

WellDefinedReport shulga_verify_well_defined(const LaurentSeries& alpha, const ShulgaTrace& trace) {
  const Field& f = alpha.field();
  return check_well_defined(
      trace, [&](const std::vector<Polynomial>& partials,
                 std::size_t count) -> std::optional<std::vector<Polynomial>> {
        const LaurentSeries diff = alpha - cf_eval(zero_cf(f, partials), alpha.precision());
        ContinuedFraction cf = cf_expand_series(diff, count);
        if (cf.certified < count) return std::nullopt;
        return cf.partials;
      });
}

std::size_t skm_required_zeros(int k, int m) {
  // n < x with x = max{k, (m-1)/2}; work with 2x to stay in integers.
  const int twice = std::max(2 * k, m - 1);
  const int ceil_x = (twice + 1) / 2;
  return ceil_x > 1 ? static_cast<std::size_t>(ceil_x - 1) : 0;
}

SkmReport skm_check(const LaurentSeries& alpha, int k, int m) {
  if (k < 1 || m < k) throw Error(ErrorCode::InvalidArgument, "need 1 <= k <= m");
  const std::size_t zeros = skm_required_zeros(k, m);
  if (alpha.precision() < zeros) {
    throw Error(ErrorCode::InsufficientPrecision,
                "precision " + std::to_string(alpha.precision()) + " is below the " +
                    std::to_string(zeros) + " coefficients that must vanish");
  }
  for (std::size_t n = 1; n <= zeros; ++n) {
    if (alpha.frac_coeff(n) != 0) {
      throw Error(ErrorCode::PreconditionViolated,
                  "alpha_" + std::to_string(n) + " must vanish for (k, m) = (" +
                      std::to_string(k) + ", " + std::to_string(m) + ")");
    }
  }
  auto [a0, frac] = series_split(alpha);
  ShulgaResult result = shulga_decompose_series(frac);
  result.beta.a0 = a0;
  result.beta_convergents = convergents(result.beta);
  SkmReport r{k,
              m,
              zeros,
              result,
              classify(result.beta, k),
              classify(result.gamma, m),
              shulga_verify_gaps(result.trace)};
  return r;
}

std::size_t canonical_required_precision(std::size_t rounds) noexcept {
  return (2 * rounds + 1) * (2 * rounds + 1);
}

CanonicalExample canonical_example(const Field& field, std::size_t rounds,
                                   std::size_t precision) {
  if (rounds == 0) throw Error(ErrorCode::InvalidArgument, "rounds must be at least 1");
  const std::size_t needed = canonical_required_precision(rounds);
  if (precision < needed) {
    throw Error(ErrorCode::InsufficientPrecision,
                std::to_string(rounds) + " rounds need precision N >= " + std::to_string(needed));
  }
  std::vector<Polynomial> b, c;
  for (std::size_t i = 1; i <= rounds; ++i) {
    b.push_back(Polynomial::monomial(field, 1, static_cast<unsigned>(4 * i - 3)));
    c.push_back(Polynomial::monomial(field, 1, static_cast<unsigned>(4 * i - 1)));
  }
  LaurentSeries alpha = cf_eval(zero_cf(field, b), precision) + cf_eval(zero_cf(field, c), precision);
  return {std::move(alpha), std::move(b), std::move(c)};
}

}  // namespace lcf
