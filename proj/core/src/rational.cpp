#include "hexagram/rational.hpp"

#include <cmath>
#include <ostream>

#include "hexagram/error.hpp"

namespace hexagram {

namespace {

bool is_integer_literal(std::string_view text) {
  if (text.empty()) return false;
  std::size_t start = text.front() == '-' ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') return false;
  }
  return true;
}

mpz_class pow10(long exponent) {
  mpz_class result;
  mpz_ui_pow_ui(result.get_mpz_t(), 10, static_cast<unsigned long>(exponent));
  return result;
}

}  // namespace

Rational::Rational(std::int64_t value) : value_(static_cast<long>(value)) {}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) {
    throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
  }
  value_ = mpq_class(mpz_class(static_cast<long>(numerator)),
                     mpz_class(static_cast<long>(denominator)));
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  if (sgn(value_.get_den()) == 0) {
    throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
  }
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-') {
    throw Error(ErrorCode::ParseError, "not a rational literal: '" + std::string(text) + "'");
  }
  mpz_class p(std::string(num), 10);
  mpz_class q(std::string(den), 10);
  if (sgn(q) == 0) {
    throw Error(ErrorCode::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
  }
  mpq_class value(p, q);
  value.canonicalize();
  return Rational(std::move(value));
}

Rational Rational::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  return Rational(mpq_class(1 / value_));
}

std::string Rational::to_string() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::to_decimal(int significant_digits) const {
  if (is_zero()) return "0";
  const mpq_class magnitude = ::abs(value_);

  // Decimal exponent e with 10^e <= |v| < 10^(e+1).
  long exponent = static_cast<long>(std::floor(std::log10(magnitude.get_d())));
  auto scaled = [](const mpq_class& v, long shift) {
    return shift >= 0 ? mpq_class(v * pow10(shift)) : mpq_class(v / pow10(-shift));
  };
  while (scaled(magnitude, -exponent) >= 10) ++exponent;
  while (scaled(magnitude, -exponent) < 1) --exponent;

  long shift = significant_digits - 1 - exponent;
  mpq_class digits_q = scaled(magnitude, shift) + mpq_class(1, 2);
  mpz_class digits = digits_q.get_num() / digits_q.get_den();  // round half up
  if (digits >= pow10(significant_digits)) {
    digits /= 10;
    --shift;
  }

  std::string text = digits.get_str();
  if (shift > 0) {
    if (static_cast<long>(text.size()) <= shift) {
      text.insert(0, static_cast<std::size_t>(shift - static_cast<long>(text.size()) + 1), '0');
    }
    text.insert(text.size() - static_cast<std::size_t>(shift), ".");
    while (text.back() == '0') text.pop_back();
    if (text.back() == '.') text.pop_back();
  } else {
    text.append(static_cast<std::size_t>(-shift), '0');
  }
  return sign() < 0 ? "-" + text : text;
}

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  value_ /= other.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
  return os << value.to_string();
}

}  // namespace hexagram
