#include "lcf/lcf.h"

#include <climits>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "commands.hpp"
#include "contfrac.hpp"
#include "hankel.hpp"
#include "laurent.hpp"
#include "text.hpp"

struct lcf_field {
  lcf::Field value;
};
struct lcf_poly {
  lcf::Polynomial value;
};
struct lcf_series {
  lcf::LaurentSeries value;
};
struct lcf_cf {
  lcf::ContinuedFraction value;
};

namespace {

thread_local std::string last_error;

lcf_status status_of(lcf::ErrorCode code) { return static_cast<lcf_status>(code); }

lcf_status fail(lcf_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <class F>
lcf_status guarded(F&& body) {
  try {
    body();
    return LCF_OK;
  } catch (const lcf::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(LCF_OUT_OF_MEMORY, "out of memory");
  } catch (const std::exception& e) {
    return fail(LCF_INTERNAL, e.what());
  }
}

void require(bool condition, const char* what) {
  if (!condition) throw lcf::Error(lcf::ErrorCode::InvalidArgument, what);
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* lcf_version(void) { return "1.0.0"; }

const char* lcf_status_string(lcf_status status) {
  if (status == LCF_OK) return "Ok";
  if (status == LCF_OUT_OF_MEMORY) return "OutOfMemory";
  if (status < LCF_INVALID_ARGUMENT || status > LCF_INTERNAL) return "Unknown";
  return lcf::to_string(static_cast<lcf::ErrorCode>(status));
}

const char* lcf_last_error(void) { return last_error.c_str(); }

void lcf_string_free(char* s) { std::free(s); }

lcf_status lcf_field_new(uint32_t p, lcf_field** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = new lcf_field{lcf::Field(p)};
  });
}

void lcf_field_free(lcf_field* field) { delete field; }

uint32_t lcf_field_characteristic(const lcf_field* field) {
  return field ? field->value.characteristic() : 0;
}

lcf_status lcf_poly_parse(const lcf_field* field, const char* text, lcf_poly** out) {
  return guarded([&] {
    require(field && text && out, "null argument");
    *out = new lcf_poly{lcf::parse_polynomial(field->value, text)};
  });
}

lcf_status lcf_poly_from_coeffs(const lcf_field* field, const int64_t* coeffs, size_t count,
                                lcf_poly** out) {
  return guarded([&] {
    require(field && out && (coeffs || count == 0), "null argument");
    std::vector<lcf::Residue> rs(count);
    for (size_t i = 0; i < count; ++i) rs[i] = field->value.reduce(coeffs[i]);
    *out = new lcf_poly{lcf::Polynomial(field->value, std::move(rs))};
  });
}

void lcf_poly_free(lcf_poly* poly) { delete poly; }

int32_t lcf_poly_degree(const lcf_poly* poly) {
  return poly && !poly->value.is_zero() ? poly->value.degree() : INT32_MIN;
}

uint32_t lcf_poly_coeff(const lcf_poly* poly, size_t k) { return poly ? poly->value.coeff(k) : 0; }

lcf_status lcf_poly_to_string(const lcf_poly* poly, char** out) {
  return guarded([&] {
    require(poly && out, "null argument");
    *out = copy_string(lcf::format_polynomial(poly->value));
  });
}

lcf_status lcf_series_parse(const lcf_field* field, const char* text, lcf_series** out) {
  return guarded([&] {
    require(field && text && out, "null argument");
    *out = new lcf_series{lcf::parse_series(field->value, text)};
  });
}

lcf_status lcf_series_from_rational(const lcf_poly* num, const lcf_poly* den, size_t precision,
                                    lcf_series** out) {
  return guarded([&] {
    require(num && den && out, "null argument");
    *out = new lcf_series{lcf::series_from_rational(num->value, den->value, precision)};
  });
}

void lcf_series_free(lcf_series* series) { delete series; }

size_t lcf_series_precision(const lcf_series* series) {
  return series ? series->value.precision() : 0;
}

lcf_status lcf_series_coeff(const lcf_series* series, size_t n, uint32_t* out) {
  return guarded([&] {
    require(series && out, "null argument");
    require(n >= 1, "coefficients are indexed from 1");
    if (n > series->value.precision()) {
      throw lcf::Error(lcf::ErrorCode::InsufficientPrecision,
                       "coefficient " + std::to_string(n) + " is outside 1.." +
                           std::to_string(series->value.precision()));
    }
    *out = series->value.frac_coeff(n);
  });
}

lcf_status lcf_series_to_string(const lcf_series* series, char** out) {
  return guarded([&] {
    require(series && out, "null argument");
    *out = copy_string(lcf::format_series(series->value));
  });
}

lcf_status lcf_cf_expand_rational(const lcf_poly* num, const lcf_poly* den, lcf_cf** out) {
  return guarded([&] {
    require(num && den && out, "null argument");
    *out = new lcf_cf{lcf::cf_expand_rational(num->value, den->value)};
  });
}

lcf_status lcf_cf_expand_series(const lcf_series* series, lcf_cf** out) {
  return guarded([&] {
    require(series && out, "null argument");
    *out = new lcf_cf{lcf::cf_expand_series(series->value)};
  });
}

void lcf_cf_free(lcf_cf* cf) { delete cf; }

size_t lcf_cf_length(const lcf_cf* cf) { return cf ? cf->value.length() : 0; }

size_t lcf_cf_certified(const lcf_cf* cf) { return cf ? cf->value.certified : 0; }

lcf_status lcf_cf_partial(const lcf_cf* cf, size_t index, lcf_poly** out) {
  return guarded([&] {
    require(cf && out, "null argument");
    require(index <= cf->value.length(), "partial quotient index out of range");
    *out = new lcf_poly{index == 0 ? cf->value.a0 : cf->value.partials[index - 1]};
  });
}

lcf_status lcf_cf_to_string(const lcf_cf* cf, char** out) {
  return guarded([&] {
    require(cf && out, "null argument");
    *out = copy_string(lcf::format_cf(cf->value));
  });
}

lcf_status lcf_hankel_delta(const lcf_field* field, const uint32_t* coeffs, size_t count, size_t h,
                            uint32_t* out) {
  return guarded([&] {
    require(field && out && (coeffs || count == 0), "null argument");
    std::vector<lcf::Residue> rs(coeffs, coeffs + count);
    for (auto& r : rs) r = field->value.reduce(r);
    *out = lcf::hankel_delta(field->value, rs, h);
  });
}

void lcf_run_options_init(lcf_run_options* o) {
  if (!o) return;
  *o = lcf_run_options{};
  o->field = 2;
  o->mode = "hall";
  o->suite = "";
  o->trials = 100;
  o->k = 1;
  o->m = 1;
  o->rounds = 5;
}

lcf_status lcf_run(lcf_command command, const lcf_run_options* o, char** json_out, int* ok_out) {
  return guarded([&] {
    require(o && json_out && ok_out, "null argument");
    lcf::RunConfig c;
    c.field = o->field;
    if (o->rational) c.rational = o->rational;
    if (o->series) c.series = o->series;
    if (o->cf) c.cf = o->cf;
    if (o->has_precision) c.precision = o->precision;
    if (o->has_seed) c.seed = o->seed;
    if (o->mode) c.mode = o->mode;
    if (o->beta) c.beta = o->beta;
    if (o->gamma) c.gamma = o->gamma;
    if (o->suite) c.suite = o->suite;
    c.trials = o->trials;
    if (o->has_max_degree) c.max_degree = o->max_degree;
    c.k = o->k;
    c.m = o->m;
    c.rounds = o->rounds;

    lcf::CommandResult r;
    switch (command) {
      case LCF_CMD_EXPAND: r = lcf::cmd_expand(c); break;
      case LCF_CMD_DECOMPOSE: r = lcf::cmd_decompose(c); break;
      case LCF_CMD_VERIFY: r = lcf::cmd_verify(c); break;
      case LCF_CMD_FUZZ: r = lcf::cmd_fuzz(c); break;
      case LCF_CMD_EXAMPLE: r = lcf::cmd_example(c); break;
      default: throw lcf::Error(lcf::ErrorCode::InvalidArgument, "unknown command");
    }
    *json_out = copy_string(o->pretty ? r.report.dump(2) : r.report.dump());
    *ok_out = r.ok ? 1 : 0;
  });
}

}  // extern "C"
