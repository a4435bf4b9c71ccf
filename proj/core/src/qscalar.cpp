#include "qhall/qscalar.hpp"

#include <cmath>

#include "qhall/error.hpp"

namespace qhall {

namespace {

long exact_isqrt(long q) {
  long r = static_cast<long>(std::llround(std::sqrt(static_cast<double>(q))));
  while (r * r > q) --r;
  while ((r + 1) * (r + 1) <= q) ++r;
  return r * r == q ? r : 0;
}

mpq_class rational_power(long base, int e) {
  mpz_class p;
  mpz_pow_ui(p.get_mpz_t(), mpz_class(base).get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? mpq_class(mpz_class(1), p) : mpq_class(p);
}

}  // namespace

QScalar::QScalar(long q) : QScalar(q, 0, 0) {}

QScalar::QScalar(long q, const mpq_class& a, const mpq_class& b) : q_(q), root_(0), a_(a), b_(b) {
  if (q <= 0) fail(Errc::InvalidInput, "QScalar needs q > 0");
  root_ = exact_isqrt(q);
  if (root_ != 0 && b_ != 0) {
    a_ += b_ * root_;
    b_ = 0;
  }
  a_.canonicalize();
  b_.canonicalize();
}

QScalar QScalar::sqrt_q_power(long q, int e) {
  const int half = (e >= 0) ? e / 2 : -((-e + 1) / 2);  // floor(e / 2)
  const mpq_class base = rational_power(q, half);
  if (e - 2 * half == 0) return QScalar(q, base, 0);
  return QScalar(q, 0, base);
}

void QScalar::check_same(const QScalar& other) const {
  if (other.q_ != q_) fail(Errc::InvalidInput, "QScalar values over different q");
}

QScalar QScalar::inverse() const {
  if (is_zero()) fail(Errc::InvalidInput, "inverse of zero QScalar");
  // (a + b s)^{-1} = (a - b s) / (a^2 - q b^2); the norm is nonzero since
  // sqrt(q) is irrational whenever b can be nonzero.
  const mpq_class norm = a_ * a_ - b_ * b_ * q_;
  return QScalar(q_, a_ / norm, -b_ / norm);
}

QScalar& QScalar::operator+=(const QScalar& rhs) {
  check_same(rhs);
  a_ += rhs.a_;
  b_ += rhs.b_;
  return *this;
}

QScalar& QScalar::operator-=(const QScalar& rhs) {
  check_same(rhs);
  a_ -= rhs.a_;
  b_ -= rhs.b_;
  return *this;
}

QScalar& QScalar::operator*=(const QScalar& rhs) {
  check_same(rhs);
  const mpq_class a = a_ * rhs.a_ + b_ * rhs.b_ * q_;
  const mpq_class b = a_ * rhs.b_ + b_ * rhs.a_;
  a_ = a;
  b_ = b;
  return *this;
}

std::string QScalar::to_string() const {
  if (b_ == 0) return a_.get_str();
  std::string s;
  if (a_ != 0) s = a_.get_str() + (b_ < 0 ? " - " : " + ");
  else if (b_ < 0) s = "-";
  const mpq_class mag = abs(b_);
  if (mag != 1) s += mag.get_str() + "*";
  return s + "sqrt(" + std::to_string(q_) + ")";
}

QScalar eval_sqrt_q(const LaurentPoly& p, long q) {
  QScalar out(q);
  for (const auto& [e, c] : p.terms()) out += QScalar::sqrt_q_power(q, e) * QScalar(q, c);
  return out;
}

}  // namespace qhall
