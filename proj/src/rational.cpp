#include "walkhg/rational.hpp"

#include <stdexcept>

namespace walkhg {

Rational::Rational(long long num, long long den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  q_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::parse(const std::string& text) {
  Rational r;
  if (r.q_.set_str(text, 10) != 0)
    throw std::invalid_argument("Rational: cannot parse '" + text + "'");
  if (sgn(r.q_.get_den()) == 0)
    throw std::domain_error("Rational: zero denominator in '" + text + "'");
  r.q_.canonicalize();
  return r;
}

std::string Rational::str() const {
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string to_string(const Rational& r) { return r.str(); }

}  // namespace walkhg
