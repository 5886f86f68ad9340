#include "routh/rational.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <utility>

namespace routh {
namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

}  // namespace

Rational::Rational(std::int64_t value) {
  if constexpr (sizeof(long) >= sizeof(std::int64_t)) {
    value_ = mpq_class(static_cast<long>(value));
  } else {
    value_ = mpq_class(mpz_class(std::to_string(value), 10));
  }
}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw DivisionByZero();
  value_ = (Rational(numerator) / Rational(denominator)).value_;
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  if (value_.get_den() == 0) throw DivisionByZero();
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  std::string_view num = body;
  std::string_view den = "1";
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("not a rational of the form p/q: '" + std::string(text) + "'");
  }
  mpz_class p(std::string(num), 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) throw DivisionByZero();
  if (negative) p = -p;
  mpq_class value(p, q);
  value.canonicalize();
  return Rational(std::move(value));
}

std::string Rational::str() const { return value_.get_str(10); }

bool Rational::is_one() const { return value_ == 1; }

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::reciprocal() const {
  if (is_zero()) throw DivisionByZero();
  return Rational(mpq_class(1 / value_));
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

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
  if (other.is_zero()) throw DivisionByZero();
  value_ /= other.value_;
  return *this;
}

bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.value_.get_mpq_t(), b.value_.get_mpq_t()) != 0; }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  int c = ::cmp(a.value_, b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational pow(const Rational& base, unsigned exponent) {
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), exponent);
  // Powers of coprime integers stay coprime, so no gcd pass is needed.
  mpq_class result;
  mpq_set_num(result.get_mpq_t(), num.get_mpz_t());
  mpq_set_den(result.get_mpq_t(), den.get_mpz_t());
  return Rational(std::move(result));
}

std::strong_ordering cmp(const Rational& a, const Rational& b) { return a <=> b; }

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.str(); }

}  // namespace routh
