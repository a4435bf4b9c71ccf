#pragma once

#include <gmpxx.h>

#include <string>

#include "qhall/laurent.hpp"

namespace qhall {

/// Exact element a + b*sqrt(q) of Q(sqrt(q)), q a fixed positive integer.
///
/// When q is a perfect square the sqrt(q) part is folded into a, so b is
/// always 0 and the ring degenerates to Q. Values with different q never mix.
class QScalar {
 public:
  explicit QScalar(long q = 1);
  QScalar(long q, const mpq_class& a, const mpq_class& b = 0);

  long q() const noexcept { return q_; }
  const mpq_class& rational_part() const noexcept { return a_; }
  const mpq_class& sqrt_part() const noexcept { return b_; }

  bool is_zero() const noexcept { return a_ == 0 && b_ == 0; }
  bool is_one() const noexcept { return a_ == 1 && b_ == 0; }

  /// sqrt(q)^e for any integer e.
  static QScalar sqrt_q_power(long q, int e);

  QScalar inverse() const;

  QScalar& operator+=(const QScalar& rhs);
  QScalar& operator-=(const QScalar& rhs);
  QScalar& operator*=(const QScalar& rhs);
  QScalar& operator/=(const QScalar& rhs) { return *this *= rhs.inverse(); }

  friend QScalar operator+(QScalar a, const QScalar& b) { return a += b; }
  friend QScalar operator-(QScalar a, const QScalar& b) { return a -= b; }
  friend QScalar operator*(QScalar a, const QScalar& b) { return a *= b; }
  friend QScalar operator/(QScalar a, const QScalar& b) { return a /= b; }
  QScalar operator-() const { return QScalar(q_, -a_, -b_); }

  friend bool operator==(const QScalar& x, const QScalar& y) {
    return x.q_ == y.q_ && x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const QScalar& x, const QScalar& y) { return !(x == y); }

  /// "a" or "a + b*sqrt(q)".
  std::string to_string() const;

 private:
  void check_same(const QScalar& other) const;

  long q_;
  long root_;  // integer sqrt of q when q is a perfect square, else 0
  mpq_class a_;
  mpq_class b_;
};

/// Substitutes v = sqrt(q) into p. Even exponents land in the rational part,
/// odd exponents in the sqrt(q) part.
QScalar eval_sqrt_q(const LaurentPoly& p, long q);

}  // namespace qhall
