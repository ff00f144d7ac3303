#ifndef WALKHG_RATIONAL_HPP
#define WALKHG_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace walkhg {

// Exact rational number with arbitrary-precision numerator and denominator,
// kept in canonical form (gcd 1, positive denominator). All probabilities in
// this project are rationals; no floating point enters the core computations.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long long num) : q_(static_cast<long>(num)) {}
  Rational(long long num, long long den);

  static Rational parse(const std::string& text);  // "p/q" or "p"

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_positive() const { return sgn(q_) > 0; }

  std::string numerator() const { return q_.get_num().get_str(); }
  std::string denominator() const { return q_.get_den().get_str(); }

  // Canonical "num/den" form, e.g. "2/3", "1/1", "0/1".
  std::string str() const;

  // Exact conversion for statistical bounds in tests and reports.
  double to_double() const { return q_.get_d(); }

 private:
  mpq_class q_;
};

std::string to_string(const Rational& r);

}  // namespace walkhg

#endif
