#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace geodex {

using Int = mpz_class;
using Rat = mpq_class;

/// Raised when certified interval refinement hits the precision ceiling.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed turn or exact-value literal.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Int floor_div(const Int& a, const Int& b);
Int ceil_div(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);
Rat make_rat(const Int& num, const Int& den);
Rat parse_rational(std::string_view s);
std::string rat_str(const Rat& q);
Int rat_floor(const Rat& q);
Int rat_ceil(const Rat& q);

/// Writes d = f^2 * core with core square-free; returns {f, core}.
std::pair<Int, Int> square_free_split(const Int& d);

/// Ceiling (in bits) for interval refinement; GEODEX_MAX_PRECISION overrides.
unsigned long max_precision_bits();

/**
 * Element of a multiquadratic field Q(sqrt(d1), sqrt(d2), ...): a finite sum
 * of rational multiples of square roots of distinct square-free integers.
 * Radicand 1 holds the rational part. Square roots of distinct square-free
 * integers are linearly independent over Q, so zero testing is exact; signs
 * are certified by refining integer square-root enclosures.
 */
class ExactReal {
 public:
  ExactReal() = default;
  ExactReal(const Rat& q);  // NOLINT: implicit by design
  ExactReal(long v) : ExactReal(Rat(v)) {}  // NOLINT
  ExactReal(const Int& v) : ExactReal(Rat(v)) {}  // NOLINT

  /// q * sqrt(d) for d > 0 (square factors are pulled out).
  static ExactReal sqrt_term(const Rat& q, const Int& d);
  static ExactReal parse(std::string_view s);

  const std::map<Int, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  Rat rational_part() const;
  ExactReal irrational_part() const;

  int sign() const;
  Int floor() const;
  Int ceil() const;
  ExactReal inverse() const;
  /// Rational enclosure [lo, hi] of width at most ~2^-bits * sum|coeff|.
  std::pair<Rat, Rat> enclose(unsigned long bits) const;

  double approx() const;
  std::string str() const;

  ExactReal operator-() const;
  ExactReal& operator+=(const ExactReal& o);
  ExactReal& operator-=(const ExactReal& o);
  ExactReal& operator*=(const ExactReal& o);
  ExactReal& operator/=(const ExactReal& o) { return *this *= o.inverse(); }
  friend ExactReal operator+(ExactReal a, const ExactReal& b) { return a += b; }
  friend ExactReal operator-(ExactReal a, const ExactReal& b) { return a -= b; }
  friend ExactReal operator*(ExactReal a, const ExactReal& b) { return a *= b; }
  friend ExactReal operator/(ExactReal a, const ExactReal& b) { return a /= b; }
  friend bool operator==(const ExactReal& a, const ExactReal& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const ExactReal& a, const ExactReal& b) { return !(a == b); }
  friend bool operator<(const ExactReal& a, const ExactReal& b) { return (a - b).sign() < 0; }
  friend bool operator>(const ExactReal& a, const ExactReal& b) { return (a - b).sign() > 0; }
  friend bool operator<=(const ExactReal& a, const ExactReal& b) { return (a - b).sign() <= 0; }
  friend bool operator>=(const ExactReal& a, const ExactReal& b) { return (a - b).sign() >= 0; }

 private:
  void add_term(const Int& d, const Rat& q);
  std::map<Int, Rat> terms_;
};

/**
 * A turn t = theta / (2 pi): either a reduced rational or a quadratic surd
 * (a + b*sqrt(d)) / c with gcd(a, b, c) = 1, c > 0, b != 0, d square-free > 1.
 */
class Turn {
 public:
  Turn() : q_(0) {}
  static Turn rational(const Rat& q);
  static Turn surd(const Int& a, const Int& b, const Int& c, const Int& d);
  /// "r/s", "r", or "(a+b*sqrt(d))/c" / "(a-b*sqrt(d))/c".
  static Turn parse(std::string_view s);

  bool is_rational() const { return rational_; }
  const Rat& rat() const;
  const Int& a() const { return a_; }
  const Int& b() const { return b_; }
  const Int& c() const { return c_; }
  const Int& d() const { return d_; }

  Int floor() const;
  Int ceil() const;
  int phi() const { return is_rational() && q_.get_den() == 1 ? 0 : 1; }

  Turn scaled(const Int& m) const;
  Turn operator-() const;
  Turn plus(const Int& k) const;

  ExactReal value() const;
  double approx() const { return value().approx(); }
  std::string str() const;

  friend bool operator==(const Turn& x, const Turn& y);
  friend bool operator!=(const Turn& x, const Turn& y) { return !(x == y); }

 private:
  bool rational_ = true;
  Rat q_;
  Int a_, b_, c_, d_;
};

inline Int floor_of(const Turn& t) { return t.floor(); }
inline Int ceil_of(const Turn& t) { return t.ceil(); }
inline int phi_of(const Turn& t) { return t.phi(); }
inline Turn scale(const Turn& t, const Int& m) { return t.scaled(m); }

}  // namespace geodex
