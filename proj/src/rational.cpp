#include "arbor/rational.hpp"

#include <cctype>

#include "arbor/errors.hpp"

namespace arbor {

namespace {

bool valid_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den) || den.front() == '-' || den.front() == '+')
    throw ParseError("malformed rational '" + std::string(text) + "'", 0);
  Rational r;
  r.value_.get_num() = mpz_class(std::string(num.front() == '+' ? num.substr(1) : num));
  r.value_.get_den() = mpz_class(std::string(den));
  if (r.value_.get_den() == 0) throw DomainError("rational with zero denominator");
  r.value_.canonicalize();
  return r;
}

bool Rational::is_integer() const { return value_.get_den() == 1; }

std::string Rational::str() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::pretty() const {
  return is_integer() ? value_.get_num().get_str() : str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  value_ /= o.value_;
  return *this;
}

}  // namespace arbor
