#include "qhall/quantum.hpp"

#include <string>

#include "qhall/error.hpp"

namespace qhall {

namespace {

void require_range(int n, int i, const char* what) {
  if (n < 1 || i < 1 || i > n) {
    fail(Errc::InvalidInput, std::string(what) + ": need 1 <= i <= n, got n=" + std::to_string(n) +
                                 " i=" + std::to_string(i));
  }
}

int sign(int k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace

LaurentPoly qint(int m, int d) {
  if (d < 1) fail(Errc::InvalidInput, "qint: symmetrizer exponent must be positive");
  if (m < 0) return -qint(-m, d);
  LaurentPoly out;
  for (int t = 0; t < m; ++t) out += LaurentPoly::v(d * (m - 1 - 2 * t));
  return out;
}

LaurentPoly qfact(int m, int d) {
  if (m < 0) fail(Errc::InvalidInput, "qfact: m must be nonnegative");
  LaurentPoly out(1);
  for (int t = 1; t <= m; ++t) out *= qint(t, d);
  return out;
}

LaurentPoly qbinom(int m, int t, int d) {
  if (t < 0 || m < 0 || t > m) {
    fail(Errc::InvalidInput, "qbinom: need 0 <= t <= m, got m=" + std::to_string(m) + " t=" + std::to_string(t));
  }
  if (2 * t > m) t = m - t;
  // [m-t+s choose s] = [m-t+s-1 choose s-1] * [m-t+s] / [s], each step exact.
  LaurentPoly acc(1);
  for (int s = 1; s <= t; ++s) {
    auto next = divide_exact(acc * qint(m - t + s, d), qint(s, d));
    if (!next) fail(Errc::Internal, "qbinom: inexact division at step " + std::to_string(s));
    acc = std::move(*next);
  }
  if (!acc.has_integer_coeffs()) fail(Errc::Internal, "qbinom: non-integral coefficient");
  return acc;
}

LaurentPoly b_partial_sum(int n, int i) {
  require_range(n, i, "b_partial_sum");
  LaurentPoly out;
  for (int p = n - i + 1; p <= n; ++p) {
    LaurentPoly term = qbinom(2 * n + 1, p) * qint(2 * (n - p) + 1);
    if (sign(p) > 0) out += term;
    else out -= term;
  }
  return out;
}

LaurentPoly b_closed_form(int n, int i) {
  require_range(n, i, "b_closed_form");
  const LaurentPoly numerator = qbinom(2 * n + 1, n - i) * qint(n + i + 1) * qint(i);
  auto quotient = divide_exact(numerator, qint(n));
  if (!quotient) {
    fail(Errc::IdentityViolation, "[n] does not divide the closed form numerator for n=" + std::to_string(n) +
                                      " i=" + std::to_string(i));
  }
  return sign(n - i) > 0 ? -*quotient : *quotient;
}

LaurentPoly serre_residual_sum(int n) {
  if (n < 1) fail(Errc::InvalidInput, "serre_residual_sum: n must be positive");
  LaurentPoly out;
  for (int p = 0; p <= n; ++p) {
    LaurentPoly term = qbinom(2 * n + 1, p) * qint(2 * (n - p) + 1);
    if (sign(p + 1) > 0) out += term;
    else out -= term;
  }
  return out;
}

bool check_identity_4_2(int n, int i) {
  require_range(n, i, "check_identity_4_2");
  const LaurentPoly lhs = qint(2 * i + 1) * qint(n) - qint(n + i + 1) * qint(i);
  return lhs == qint(n - i) * qint(i + 1);
}

}  // namespace qhall
