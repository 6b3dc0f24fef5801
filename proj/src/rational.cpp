#include "gs/rational.hpp"

#include <ostream>

#include "gs/errors.hpp"

namespace gs {

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) {
    throw DomainError("rational with zero denominator");
  }
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class q) : value_(std::move(q)) {
  if (value_.get_den() == 0) {
    throw DomainError("rational with zero denominator");
  }
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string num_text(text.substr(0, slash));
  mpz_class num;
  mpz_class den = 1;
  auto set = [&](mpz_class& out, const std::string& s) {
    if (s.empty() || s == "-" || s == "+" ||
        s.find_first_not_of("+-0123456789") != std::string::npos ||
        s.find_first_of("+-", 1) != std::string::npos) {
      throw ParseError("invalid rational literal '" + std::string(text) + "'");
    }
    out.set_str(s[0] == '+' ? s.substr(1) : s, 10);
  };
  set(num, num_text);
  if (slash != std::string_view::npos) {
    const std::string den_text(text.substr(slash + 1));
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
      throw ParseError("invalid rational literal '" + std::string(text) + "'");
    }
    set(den, den_text);
    if (den == 0) {
      throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
  }
  return Rational(num, den);
}

Rational Rational::inverse() const {
  if (is_zero()) {
    throw NotAUnit("0 has no inverse in Q");
  }
  return Rational(mpq_class(1 / value_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) {
    throw NotAUnit("division by zero");
  }
  value_ /= o.value_;
  return *this;
}

std::string Rational::to_string() const {
  if (value_.get_den() == 1) {
    return value_.get_num().get_str();
  }
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(mpq_class(f));
}

Rational binomial(unsigned n, unsigned k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(mpq_class(b));
}

Rational pow2_neg(std::uint64_t k) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, k);
  return Rational(mpz_class(1), p);
}

} // namespace gs
