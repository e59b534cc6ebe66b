#include "hall.hpp"

#include <algorithm>

#include "contfrac.hpp"

namespace lcf {

Residue Chooser::pick(const Field& field, std::span<const Residue> forbidden) {
  auto allowed = [&](Residue r) {
    return std::find(forbidden.begin(), forbidden.end(), r) == forbidden.end();
  };
  const std::uint32_t p = field.characteristic();
  std::vector<Residue> barred(forbidden.begin(), forbidden.end());
  std::sort(barred.begin(), barred.end());
  barred.erase(std::unique(barred.begin(), barred.end()), barred.end());
  if (barred.size() >= p) throw Error(ErrorCode::Internal, "every residue is forbidden");

  if (!rng_) {
    Residue r = 0;
    while (!allowed(r)) ++r;
    return r;
  }
  for (;;) {
    const Residue r = random_residue(field, *rng_);
    if (allowed(r)) return r;
  }
}

const char* to_string(HallMode mode) noexcept {
  return mode == HallMode::Generic ? "generic" : "f2";
}

HallState::HallState(const Field& field, HallMode mode, Chooser chooser)
    : field_(field), mode_(mode), chooser_(std::move(chooser)) {
  if (mode == HallMode::Generic && field.characteristic() == 2) {
    throw Error(ErrorCode::FieldTooSmall,
                "the F(1)+F(1) construction needs at least 3 field elements; use the F_2 mode");
  }
  if (mode == HallMode::F2 && field.characteristic() != 2) {
    throw Error(ErrorCode::WrongField, "the F(2)+F(1) construction is specific to F_2");
  }
}

void HallState::feed(Residue alpha_i) {
  alpha_i = field_.reduce(alpha_i);
  const std::size_t i = consumed() + 1;
  if (i == 1) {
    feed_first(alpha_i);
  } else if (i % 2 == 0) {
    feed_even(alpha_i);
  } else {
    feed_odd(alpha_i);
  }
}

void HallState::feed_first(Residue alpha_1) {
  HallStep step;
  step.n = 1;
  step.branch = "generic";
  Residue b, g;
  if (mode_ == HallMode::Generic) {
    step.forbidden = {0};
    if (alpha_1 != 0) step.forbidden.push_back(alpha_1);
    b = chooser_.pick(field_, step.forbidden);
    g = field_.sub(alpha_1, b);
  } else {
    step.forbidden = {0};
    g = chooser_.pick(field_, step.forbidden);
    b = field_.sub(alpha_1, g);
  }
  beta_.push_back(b);
  gamma_.push_back(g);
  delta_beta_.push_back(b);
  delta_gamma_.push_back(g);
  step.beta = b;
  step.gamma = g;
  step.delta_beta = b;
  step.delta_gamma = g;
  steps_.push_back(std::move(step));
}

void HallState::feed_even(Residue alpha_i) {
  const std::size_t n = (consumed() + 1) / 2;  // filling index 2n; D_n is known
  HallStep step;
  step.n = n + 1;
  step.branch = "generic";
  if (mode_ == HallMode::F2 && delta_beta_[n] == 0) {
    step.branch = "case1";
    const Residue d_prev = delta_beta_[n - 1];
    if (d_prev == 0) throw Error(ErrorCode::Internal, "two consecutive vanishing D(beta)");
    const Residue q = q_h_eval(field_, beta_, n);
    step.forbidden_free = {field_.div(q, d_prev)};
  }
  const Residue b = chooser_.pick(field_, step.forbidden_free);
  const Residue g = field_.sub(alpha_i, b);
  beta_.push_back(b);
  gamma_.push_back(g);
  step.beta_free = b;
  step.gamma_free = g;
  steps_.push_back(std::move(step));
}

void HallState::feed_odd(Residue alpha_i) {
  const std::size_t n = consumed() / 2;  // filling index 2n+1; D_{n+1} becomes known
  HallStep& step = steps_.back();
  const Residue d_beta = delta_beta_[n];
  const Residue d_gamma = delta_gamma_[n];
  const Residue p_beta = p_h_eval(field_, beta_, n);
  const Residue p_gamma = p_h_eval(field_, gamma_, n);

  Residue b, g;
  if (mode_ == HallMode::Generic) {
    const Residue kill_beta = field_.neg(field_.div(p_beta, d_beta));
    const Residue kill_gamma = field_.add(alpha_i, field_.div(p_gamma, d_gamma));
    step.forbidden = {kill_beta};
    if (kill_gamma != kill_beta) step.forbidden.push_back(kill_gamma);
    b = chooser_.pick(field_, step.forbidden);
    g = field_.sub(alpha_i, b);
  } else {
    step.forbidden = {field_.neg(field_.div(p_gamma, d_gamma))};
    g = chooser_.pick(field_, step.forbidden);
    b = field_.sub(alpha_i, g);
  }
  beta_.push_back(b);
  gamma_.push_back(g);

  // D_{n+1} = x_{2n+1} * D_n + P_n
  const Residue next_beta = field_.add(field_.mul(b, d_beta), p_beta);
  const Residue next_gamma = field_.add(field_.mul(g, d_gamma), p_gamma);
  delta_beta_.push_back(next_beta);
  delta_gamma_.push_back(next_gamma);
  step.beta = b;
  step.gamma = g;
  step.delta_beta = next_beta;
  step.delta_gamma = next_gamma;

  if (next_gamma == 0 || (mode_ == HallMode::Generic && next_beta == 0) ||
      (mode_ == HallMode::F2 && d_beta == 0 && next_beta == 0)) {
    throw Error(ErrorCode::Internal, "construction produced a forbidden vanishing determinant");
  }
}

namespace {

HallResult run_decomposition(const LaurentSeries& alpha, HallMode mode, Chooser chooser) {
  HallState state(alpha.field(), mode, std::move(chooser));
  for (Residue a : alpha.frac()) state.feed(a);
  const Field& f = alpha.field();
  LaurentSeries beta(alpha.poly_part(),
                     std::vector<Residue>(state.beta().begin(), state.beta().end()));
  LaurentSeries gamma(Polynomial(f),
                      std::vector<Residue>(state.gamma().begin(), state.gamma().end()));
  return {mode, std::move(beta), std::move(gamma), state.steps()};
}

}  // namespace

HallResult hall_decompose(const LaurentSeries& alpha, Chooser chooser) {
  return run_decomposition(alpha, HallMode::Generic, std::move(chooser));
}

HallResult hall_decompose_f2(const LaurentSeries& alpha, Chooser chooser) {
  return run_decomposition(alpha, HallMode::F2, std::move(chooser));
}

DecompositionReport hall_verify(const LaurentSeries& alpha, const LaurentSeries& beta,
                                const LaurentSeries& gamma, HallMode mode) {
  require_same_field(alpha.field(), beta.field());
  require_same_field(alpha.field(), gamma.field());
  if (beta.precision() != alpha.precision() || gamma.precision() != alpha.precision()) {
    throw Error(ErrorCode::PreconditionViolated, "alpha, beta and gamma must share one precision");
  }
  const Field& f = alpha.field();
  const std::size_t n = alpha.precision();

  DecompositionReport r;
  r.mode = mode;
  r.precision = n;
  r.beta_k = mode == HallMode::Generic ? 1 : 2;
  r.gamma_k = 1;

  if (beta.poly_part() + gamma.poly_part() != alpha.poly_part()) {
    r.sum_mismatch = 0;
  } else {
    for (std::size_t i = 1; i <= n; ++i) {
      if (f.add(beta.frac_coeff(i), gamma.frac_coeff(i)) != alpha.frac_coeff(i)) {
        r.sum_mismatch = i;
        break;
      }
    }
  }
  r.sum_ok = !r.sum_mismatch.has_value();

  r.beta_check = f_class_check(f, beta.frac(), n, r.beta_k);
  r.gamma_check = f_class_check(f, gamma.frac(), n, r.gamma_k);
  r.beta_delta_nonzero = delta_profile(f, beta.frac(), n).nonzero;
  r.gamma_delta_nonzero = delta_profile(f, gamma.frac(), n).nonzero;

  const auto [b0, beta_frac] = series_split(beta);
  const auto [g0, gamma_frac] = series_split(gamma);
  r.beta_cf_degrees = cf_expand_series(beta_frac).certified_degrees();
  r.gamma_cf_degrees = cf_expand_series(gamma_frac).certified_degrees();
  auto bounded = [](const std::vector<int>& ds, int k) {
    return std::all_of(ds.begin(), ds.end(), [k](int d) { return d <= k; });
  };
  r.beta_cf_ok = bounded(r.beta_cf_degrees, r.beta_k);
  r.gamma_cf_ok = bounded(r.gamma_cf_degrees, r.gamma_k);
  return r;
}

CounterexampleReport f1_counterexample_f2() {
  const Field f2(2);
  const Residue alpha_1 = 1;
  CounterexampleReport report;
  report.all_refuted = true;
  for (Residue b : {Residue{0}, Residue{1}}) {
    const Residue g = f2.sub(alpha_1, b);
    const char zero_part = b == 0 ? 'b' : 'g';
    const std::vector<Residue> prefix{0};
    const FClassCheck check = f_class_check(f2, prefix, 1, 1);
    const std::size_t h = check.witness.value_or(0);
    report.branches.push_back({b, g, zero_part, h});
    if (check.ok || h != 1) report.all_refuted = false;
  }
  return report;
}

}  // namespace lcf
