#include "commands.hpp"

#include <algorithm>
#include <variant>
#include <vector>

#include "contfrac.hpp"
#include "fuzz.hpp"
#include "hall.hpp"
#include "hankel.hpp"
#include "shulga.hpp"
#include "text.hpp"

namespace lcf {
namespace {

using Input = std::variant<RationalFunction, LaurentSeries>;

Input read_input(const Field& f, const RunConfig& c) {
  const int given = int{c.rational.has_value()} + int{c.series.has_value()} + int{c.cf.has_value()};
  if (given != 1) {
    throw Error(ErrorCode::InvalidArgument, "give exactly one of --rational, --series, --cf");
  }
  if (c.rational) {
    auto [num, den] = parse_rational(f, *c.rational);
    return RationalFunction(std::move(num), std::move(den));
  }
  if (c.cf) return cf_value(parse_cf(f, *c.cf));
  LaurentSeries x = parse_series(f, *c.series);
  if (c.precision && *c.precision < x.precision()) x = x.truncated(*c.precision);
  return x;
}

std::string rational_text(const RationalFunction& r) {
  return "(" + format_polynomial(r.num()) + ")/(" + format_polynomial(r.den()) + ")";
}

Json input_json(const Input& in) {
  if (const auto* r = std::get_if<RationalFunction>(&in)) {
    return Json{{"kind", "rational"}, {"value", rational_text(*r)}};
  }
  return Json{{"kind", "series"}, {"value", format_series(std::get<LaurentSeries>(in))}};
}

Json polys_json(const std::vector<Polynomial>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(format_polynomial(p));
  return out;
}

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json cf_json(const ContinuedFraction& cf) {
  return Json{{"cf", format_cf(cf)},
              {"a0", format_polynomial(cf.a0)},
              {"partials", polys_json(std::vector<Polynomial>(
                               cf.partials.begin(),
                               cf.partials.begin() + static_cast<std::ptrdiff_t>(cf.certified)))},
              {"degrees", cf.certified_degrees()},
              {"certified", cf.certified},
              {"exact", cf.exact}};
}

Json convergents_json(const std::vector<Convergent>& rows) {
  Json out = Json::array();
  for (const auto& row : rows) {
    out.push_back(Json{{"n", row.n},
                       {"p", format_polynomial(row.p)},
                       {"q", format_polynomial(row.q)},
                       {"deg_q", row.deg_q()}});
  }
  return out;
}

Chooser chooser_for(const RunConfig& c) {
  return c.seed ? Chooser::seeded(*c.seed) : Chooser::smallest();
}

std::string canonical_mode(const std::string& mode) {
  if (mode == "f2") return "hall-f2";
  if (mode == "hall" || mode == "hall-f2" || mode == "shulga") return mode;
  throw Error(ErrorCode::InvalidArgument,
              "unknown mode '" + mode + "' (expected hall, hall-f2 or shulga)");
}

HallMode hall_mode(const Field& f, const std::string& mode) {
  if (mode == "hall" && f.characteristic() == 2) {
    throw Error(ErrorCode::FieldTooSmall,
                "the F(1)+F(1) construction needs at least 3 field elements; over F_2 use --mode f2");
  }
  return mode == "hall" ? HallMode::Generic : HallMode::F2;
}

LaurentSeries as_series(const Input& in, const RunConfig& c) {
  if (const auto* x = std::get_if<LaurentSeries>(&in)) return *x;
  const auto& r = std::get<RationalFunction>(in);
  const std::size_t n = c.precision.value_or(static_cast<std::size_t>(2 * r.den().degree() + 1));
  return LaurentSeries::from_rational(r, n);
}

// ----------------------------------------------------------------- expand --

Json delta_json(const DeltaProfile& p) {
  return Json{{"precision", p.prefix_length}, {"delta", p.delta}, {"delta_nonzero", p.nonzero}};
}

}  // namespace

CommandResult cmd_expand(const RunConfig& c) {
  const Field f(c.field);
  const Input in = read_input(f, c);
  ContinuedFraction cf(f);
  LaurentSeries series(Polynomial(f), {});
  std::size_t h_limit;
  if (const auto* r = std::get_if<RationalFunction>(&in)) {
    cf = cf_expand_rational(*r);
    const std::size_t n = c.precision.value_or(static_cast<std::size_t>(2 * r->den().degree()));
    series = LaurentSeries::from_rational(*r, n);
    h_limit = (n + 1) / 2;
  } else {
    series = std::get<LaurentSeries>(in);
    cf = cf_expand_series(series);
    h_limit = series.precision() / 2;
  }

  const auto rows = convergents(cf);
  const DeltaProfile profile = delta_profile(f, series.frac(), series.precision());
  std::vector<std::size_t> from_cf, from_hankel;
  for (const auto& row : rows) {
    if (row.n >= 1 && row.n <= cf.certified && static_cast<std::size_t>(row.deg_q()) <= h_limit) {
      from_cf.push_back(static_cast<std::size_t>(row.deg_q()));
    }
  }
  for (std::size_t h : profile.nonzero) {
    if (h <= h_limit) from_hankel.push_back(h);
  }
  const bool det_lem_ok = from_cf == from_hankel;

  Json report{{"command", "expand"}, {"field", c.field}, {"input", input_json(in)}};
  report["continued_fraction"] = cf_json(cf);
  report["convergents"] = convergents_json(rows);
  report["delta_profile"] = delta_json(profile);
  report["det_lem"] = Json{{"h_max", h_limit},
                           {"deg_q", from_cf},
                           {"delta_nonzero", from_hankel},
                           {"ok", det_lem_ok}};
  report["ok"] = det_lem_ok;
  return {std::move(report), det_lem_ok};
}

// -------------------------------------------------------------- decompose --

namespace {

Json part_json(const char* name, int k, const FClassCheck& check,
               const std::vector<std::size_t>& nonzero, const std::vector<int>& degrees, bool cf_ok) {
  return Json{{"part", name},
              {"k", k},
              {"f_class_ok", check.ok},
              {"witness", optional_json(check.witness)},
              {"delta_nonzero", nonzero},
              {"cf_degrees", degrees},
              {"cf_ok", cf_ok}};
}

Json hall_checks_json(const DecompositionReport& r) {
  return Json{{"sum_ok", r.sum_ok},
              {"sum_mismatch", optional_json(r.sum_mismatch)},
              {"beta", part_json("beta", r.beta_k, r.beta_check, r.beta_delta_nonzero,
                                 r.beta_cf_degrees, r.beta_cf_ok)},
              {"gamma", part_json("gamma", r.gamma_k, r.gamma_check, r.gamma_delta_nonzero,
                                  r.gamma_cf_degrees, r.gamma_cf_ok)},
              {"ok", r.passed()}};
}

Json hall_steps_json(const std::vector<HallStep>& steps) {
  Json out = Json::array();
  for (const auto& s : steps) {
    out.push_back(Json{{"n", s.n},
                       {"beta_free", optional_json(s.beta_free)},
                       {"gamma_free", optional_json(s.gamma_free)},
                       {"forbidden_free", s.forbidden_free},
                       {"forbidden", s.forbidden},
                       {"beta", optional_json(s.beta)},
                       {"gamma", optional_json(s.gamma)},
                       {"delta_beta", optional_json(s.delta_beta)},
                       {"delta_gamma", optional_json(s.delta_gamma)},
                       {"branch", s.branch}});
  }
  return out;
}

Json sides_json(const std::vector<InterlacingSides>& sides) {
  Json out = Json::array();
  for (const auto& s : sides) out.push_back(Json{{"j", s.j}, {"left", s.left}, {"right", s.right}});
  return out;
}

Json gaps_json(const GapReport& g) {
  Json violations = Json::array();
  for (const auto& v : g.violations) {
    violations.push_back(Json{{"rule", v.rule}, {"index", v.index}, {"lhs", v.lhs}, {"rhs", v.rhs}});
  }
  return Json{{"ok", g.ok()},
              {"violations", violations},
              {"b_sides", sides_json(g.b_sides)},
              {"c_sides", sides_json(g.c_sides)}};
}

Json rounds_json(const ShulgaTrace& t) {
  const auto dq = t.deg_q();
  const auto dt = t.deg_t();
  Json out = Json::array();
  for (std::size_t i = 0; i < t.b.size(); ++i) {
    const bool has_c = i < t.c.size();
    out.push_back(Json{{"n", i + 1},
                       {"b", format_polynomial(t.b[i])},
                       {"deg_b", t.b[i].degree()},
                       {"c", has_c ? Json(format_polynomial(t.c[i])) : Json(nullptr)},
                       {"deg_c", has_c ? Json(t.c[i].degree()) : Json(nullptr)},
                       {"deg_q", dq[i + 1]},
                       {"deg_t", has_c ? Json(dt[i + 1]) : Json(nullptr)}});
  }
  return out;
}

Json well_defined_json(const WellDefinedReport& w) {
  return Json{{"ok", w.ok},
              {"first_failure", optional_json(w.first_failure)},
              {"unverifiable", w.unverifiable}};
}

// Agreement of alpha with beta + gamma, as the number of leading fractional
// coefficients that match (series inputs, where equality is not decidable).
std::size_t agreement(const LaurentSeries& alpha, const ContinuedFraction& beta,
                      const ContinuedFraction& gamma) {
  const std::size_t n = alpha.precision();
  const LaurentSeries sum = cf_eval(beta, n) + cf_eval(gamma, n);
  if (sum.poly_part() != alpha.poly_part()) return 0;
  std::size_t i = 0;
  while (i < n && sum.frac_coeff(i + 1) == alpha.frac_coeff(i + 1)) ++i;
  return i;
}

CommandResult shulga_report(const Field& f, const RunConfig& c, const Input& in,
                            const ShulgaTrace* given) {
  Json report{{"command", given ? "verify" : "decompose"},
              {"field", c.field},
              {"mode", "shulga"},
              {"input", input_json(in)}};
  ShulgaResult result{ContinuedFraction(f), ContinuedFraction(f), {}, {}, {}};
  Json checks;
  bool ok = true;

  if (const auto* r = std::get_if<RationalFunction>(&in)) {
    if (!given) {
      result = shulga_decompose_rational(r->num(), r->den());
    } else {
      result.trace = *given;
      result.beta = ContinuedFraction(Polynomial(f), given->b, given->b.size(), true);
      result.gamma = ContinuedFraction(Polynomial(f), given->c, given->c.size(), true);
    }
    const bool reconstruction = cf_value(result.beta) + cf_value(result.gamma) == *r;
    const std::size_t rounds = result.trace.rounds();
    const bool bound = 2 * rounds <= static_cast<std::size_t>(std::max(0, r->den().degree()));
    const WellDefinedReport wd = shulga_verify_well_defined(*r, result.trace);
    checks["reconstruction"] = reconstruction;
    checks["rounds_bound"] = Json{{"rounds", rounds}, {"deg_den", r->den().degree()}, {"ok", bound}};
    checks["well_defined"] = well_defined_json(wd);
    ok = reconstruction && bound && wd.ok;
  } else {
    const auto& x = std::get<LaurentSeries>(in);
    if (!given) {
      result = shulga_decompose_series(x);
    } else {
      result.trace = *given;
      result.beta = ContinuedFraction(Polynomial(f), given->b, given->b.size());
      result.gamma = ContinuedFraction(Polynomial(f), given->c, given->c.size());
    }
    const WellDefinedReport wd = shulga_verify_well_defined(x, result.trace);
    checks["agreement"] = agreement(x, result.beta, result.gamma);
    checks["well_defined"] = well_defined_json(wd);
    ok = wd.ok;
  }
  const GapReport gaps = shulga_verify_gaps(result.trace);
  checks["gaps"] = gaps_json(gaps);
  ok = ok && gaps.ok();

  report["beta"] = format_cf(result.beta);
  report["gamma"] = format_cf(result.gamma);
  report["trace"] = Json{{"rounds", rounds_json(result.trace)},
                         {"stop", to_string(result.trace.stop)},
                         {"checks", checks}};
  report["ok"] = ok;
  return {std::move(report), ok};
}

std::optional<Polynomial> require_zero_a0(const Input& in) {
  if (const auto* r = std::get_if<RationalFunction>(&in)) {
    if (r->num().degree() >= r->den().degree()) return poly_divmod(r->num(), r->den()).quotient;
  } else if (!std::get<LaurentSeries>(in).poly_part().is_zero()) {
    return std::get<LaurentSeries>(in).poly_part();
  }
  return std::nullopt;
}

void reject_polynomial_part(const Input& in) {
  if (auto a0 = require_zero_a0(in)) {
    throw Error(ErrorCode::PreconditionViolated,
                "the Shulga decomposition needs a0(alpha) = 0, got a0 = " + format_polynomial(*a0));
  }
}

}  // namespace

CommandResult cmd_decompose(const RunConfig& c) {
  const Field f(c.field);
  const std::string mode = canonical_mode(c.mode);
  const Input in = read_input(f, c);
  if (mode == "shulga") {
    reject_polynomial_part(in);
    return shulga_report(f, c, in, nullptr);
  }
  const HallMode hm = hall_mode(f, mode);
  const LaurentSeries alpha = as_series(in, c);
  const HallResult r = hm == HallMode::Generic ? hall_decompose(alpha, chooser_for(c))
                                               : hall_decompose_f2(alpha, chooser_for(c));
  const DecompositionReport rep = hall_verify(alpha, r.beta, r.gamma, r.mode);
  Json report{{"command", "decompose"},
              {"field", c.field},
              {"mode", mode},
              {"input", input_json(in)},
              {"alpha", format_series(alpha)},
              {"beta", format_series(r.beta)},
              {"gamma", format_series(r.gamma)},
              {"steps", hall_steps_json(r.steps)},
              {"checks", hall_checks_json(rep)},
              {"ok", rep.passed()}};
  return {std::move(report), rep.passed()};
}

CommandResult cmd_verify(const RunConfig& c) {
  const Field f(c.field);
  const std::string mode = canonical_mode(c.mode);
  if (!c.beta || !c.gamma) throw Error(ErrorCode::InvalidArgument, "verify needs --beta and --gamma");
  const Input in = read_input(f, c);
  if (mode == "shulga") {
    reject_polynomial_part(in);
    const ContinuedFraction beta = parse_cf(f, *c.beta);
    const ContinuedFraction gamma = parse_cf(f, *c.gamma);
    if (!beta.a0.is_zero() || !gamma.a0.is_zero()) {
      throw Error(ErrorCode::PreconditionViolated, "beta and gamma must have a0 = 0");
    }
    if (gamma.length() > beta.length() || gamma.length() + 1 < beta.length()) {
      throw Error(ErrorCode::PreconditionViolated,
                  "gamma must have as many partial quotients as beta, or one fewer");
    }
    ShulgaTrace trace{beta.partials, gamma.partials, StopReason::ExactSumAfterC};
    if (gamma.length() < beta.length()) trace.stop = StopReason::ExactSumAfterB;
    if (std::holds_alternative<LaurentSeries>(in)) trace.stop = StopReason::PrecisionExhausted;
    return shulga_report(f, c, in, &trace);
  }
  const HallMode hm = hall_mode(f, mode);
  const LaurentSeries alpha = as_series(in, c);
  const LaurentSeries beta = parse_series(f, *c.beta);
  const LaurentSeries gamma = parse_series(f, *c.gamma);
  const DecompositionReport rep = hall_verify(alpha, beta, gamma, hm);
  Json report{{"command", "verify"},
              {"field", c.field},
              {"mode", mode},
              {"alpha", format_series(alpha)},
              {"beta", format_series(beta)},
              {"gamma", format_series(gamma)},
              {"checks", hall_checks_json(rep)},
              {"ok", rep.passed()}};
  return {std::move(report), rep.passed()};
}

CommandResult cmd_fuzz(const RunConfig& c) {
  const Field f(c.field);
  FuzzConfig fc;
  fc.suite = c.suite;
  fc.trials = c.trials;
  fc.seed = c.seed.value_or(0);
  fc.precision = c.precision;
  fc.max_degree = c.max_degree;
  fc.k = c.k;
  fc.m = c.m;
  const FuzzSummary s = run_fuzz(f, fc);

  Json stats = Json::object();
  for (const auto& [k, v] : s.stats) stats[k] = v;
  Json failures = Json::array();
  for (const auto& fl : s.failures) {
    failures.push_back(
        Json{{"trial", fl.trial}, {"seed", fl.seed}, {"input", fl.input}, {"reason", fl.reason}});
  }
  Json report{{"command", "fuzz"},
              {"field", c.field},
              {"suite", s.suite},
              {"seed", fc.seed},
              {"trials", s.trials},
              {"passed", s.passed},
              {"failed", s.failed},
              {"stats", stats},
              {"failures", failures},
              {"ok", s.ok()}};
  return {std::move(report), s.ok()};
}

CommandResult cmd_example(const RunConfig& c) {
  const Field f(c.field);
  const std::size_t n = c.precision.value_or(canonical_required_precision(c.rounds));
  const CanonicalExample ex = canonical_example(f, c.rounds, n);
  const ShulgaResult r = shulga_decompose_series(ex.alpha);
  const GapReport gaps = shulga_verify_gaps(r.trace);

  const bool match = r.trace.b == ex.expected_b && r.trace.c == ex.expected_c;
  bool sides_ok = gaps.c_sides.size() == c.rounds;
  for (const auto& s : gaps.c_sides) {
    sides_ok = sides_ok && s.left == static_cast<int>(2 * s.j - 1) && s.right == static_cast<int>(2 * s.j);
  }
  const bool ok = match && sides_ok && gaps.ok();
  Json report{{"command", "example"},
              {"field", c.field},
              {"rounds", c.rounds},
              {"precision", n},
              {"required_precision", canonical_required_precision(c.rounds)},
              {"expected_b", polys_json(ex.expected_b)},
              {"expected_c", polys_json(ex.expected_c)},
              {"b", polys_json(r.trace.b)},
              {"c", polys_json(r.trace.c)},
              {"stop", to_string(r.trace.stop)},
              {"match", match},
              {"interlacing_ok", sides_ok},
              {"gaps", gaps_json(gaps)},
              {"ok", ok}};
  return {std::move(report), ok};
}

}  // namespace lcf
