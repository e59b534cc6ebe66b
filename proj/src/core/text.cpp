#include "text.hpp"

#include <cctype>
#include <cstdint>
#include <limits>
#include <vector>

namespace lcf {
namespace {

constexpr std::int64_t kMaxExponent = 1 << 20;

class Cursor {
 public:
  Cursor(std::string_view text, std::size_t base = 0) : text_(text), base_(base) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  std::int64_t integer() {
    skip_ws();
    const std::size_t start = pos_;
    std::int64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const int digit = text_[pos_] - '0';
      if (v > (std::numeric_limits<std::int64_t>::max() - digit) / 10) {
        pos_ = start;
        fail("integer out of range");
      }
      v = v * 10 + digit;
      ++pos_;
    }
    if (pos_ == start) fail("expected an integer");
    return v;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(base_ + pos_, message);
  }

 private:
  std::string_view text_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

// poly := term (('+' | '-') term)*  with an optional leading sign
Polynomial polynomial(const Field& field, Cursor& in) {
  std::vector<Residue> coeffs;
  bool first = true;
  for (;;) {
    bool negative = false;
    if (in.accept('-')) {
      negative = true;
    } else if (!first && !in.accept('+')) {
      break;
    }
    first = false;

    std::int64_t c = 1;
    bool has_coeff = false;
    if (in.at_digit()) {
      c = in.integer();
      has_coeff = true;
    }
    const bool star = has_coeff && in.accept('*');
    std::int64_t k = 0;
    if (in.accept('t')) {
      k = 1;
      if (in.accept('^')) {
        k = in.integer();
        if (k > kMaxExponent) in.fail("exponent too large");
      }
    } else if (star || !has_coeff) {
      in.fail("expected a term");
    }
    Residue r = field.reduce(c);
    if (negative) r = field.neg(r);
    if (coeffs.size() <= static_cast<std::size_t>(k)) coeffs.resize(k + 1, 0);
    coeffs[k] = field.add(coeffs[k], r);
  }
  return Polynomial(field, std::move(coeffs));
}

Polynomial side(const Field& field, Cursor& in) {
  if (in.accept('(')) {
    Polynomial p = polynomial(field, in);
    in.expect(')');
    return p;
  }
  return polynomial(field, in);
}

void expect_end(Cursor& in) {
  if (!in.at_end()) in.fail("unexpected trailing input");
}

}  // namespace

Polynomial parse_polynomial(const Field& field, std::string_view text) {
  Cursor in(text);
  Polynomial p = polynomial(field, in);
  expect_end(in);
  return p;
}

std::pair<Polynomial, Polynomial> parse_rational(const Field& field, std::string_view text) {
  Cursor in(text);
  Polynomial num = side(field, in);
  Polynomial den = Polynomial::constant(field, 1);
  if (in.accept('/')) den = side(field, in);
  expect_end(in);
  if (den.is_zero()) {
    throw Error(ErrorCode::DivisionByZeroPolynomial, "rational input has a zero denominator");
  }
  return {std::move(num), std::move(den)};
}

LaurentSeries parse_series(const Field& field, std::string_view text) {
  Cursor in(text);
  Polynomial poly = polynomial(field, in);
  in.expect(';');
  std::vector<Residue> frac;
  bool negative = false;
  while (in.peek() != '@') {
    if (in.at_end()) in.fail("expected '@N'");
    negative = in.accept('-');
    Residue r = field.reduce(in.integer());
    frac.push_back(negative ? field.neg(r) : r);
  }
  in.expect('@');
  const std::int64_t n = in.integer();
  if (static_cast<std::size_t>(n) != frac.size()) {
    in.fail("precision @" + std::to_string(n) + " does not match " +
            std::to_string(frac.size()) + " coefficients");
  }
  expect_end(in);
  return LaurentSeries(std::move(poly), std::move(frac));
}

ContinuedFraction parse_cf(const Field& field, std::string_view text) {
  Cursor in(text);
  in.expect('[');
  Polynomial a0 = polynomial(field, in);
  in.expect(';');
  std::vector<Polynomial> partials;
  if (in.peek() != ']') {
    do {
      Polynomial a = polynomial(field, in);
      if (a.degree() < 1) in.fail("partial quotients after a0 must have degree >= 1");
      partials.push_back(std::move(a));
    } while (in.accept(','));
  }
  in.expect(']');
  expect_end(in);
  const std::size_t n = partials.size();
  return ContinuedFraction(std::move(a0), std::move(partials), n);
}

std::string format_polynomial(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    const Residue c = p.coeff(static_cast<std::size_t>(k));
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (c != 1 || k == 0) out += std::to_string(c);
    if (k >= 1) out += 't';
    if (k >= 2) out += '^' + std::to_string(k);
  }
  return out;
}

std::string format_series(const LaurentSeries& x) {
  std::string out = format_polynomial(x.poly_part()) + " ;";
  for (Residue c : x.frac()) out += ' ' + std::to_string(c);
  out += " @" + std::to_string(x.precision());
  return out;
}

std::string format_cf(const ContinuedFraction& cf) {
  std::string out = "[" + format_polynomial(cf.a0) + ";";
  const std::size_t n = std::min(cf.certified, cf.partials.size());
  for (std::size_t i = 0; i < n; ++i) {
    out += i == 0 ? " " : ", ";
    out += format_polynomial(cf.partials[i]);
  }
  return out + "]";
}

}  // namespace lcf
