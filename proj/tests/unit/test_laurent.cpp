#include <gtest/gtest.h>

#include <random>

#include "qhall/error.hpp"
#include "qhall/laurent.hpp"
#include "qhall/qscalar.hpp"
#include "qhall/quantum.hpp"

using qhall::LaurentPoly;

namespace {

LaurentPoly v(int e) { return LaurentPoly::v(e); }

LaurentPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-3, 3), expo(-4, 4), count(0, 4);
  LaurentPoly p;
  for (int k = count(rng); k > 0; --k) p += LaurentPoly::monomial(expo(rng), coef(rng));
  return p;
}

// Pascal-type recursion [m,t] = v^{-t}[m-1,t-1] + v^{m-t}[m-1,t] (balanced form).
LaurentPoly pascal(int m, int t) {
  if (t < 0 || t > m) return 0;
  if (t == 0 || t == m) return 1;
  return v(-(m - t)) * pascal(m - 1, t - 1) + v(t) * pascal(m - 1, t);
}

}  // namespace

TEST(Laurent, RingAxiomsOnRandomSamples) {
  std::mt19937 rng(7);
  for (int k = 0; k < 200; ++k) {
    const auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a - a).is_zero(), true);
    EXPECT_EQ((a * b).bar(), a.bar() * b.bar());
  }
}

TEST(Laurent, ExactDivisionRoundTrip) {
  std::mt19937 rng(11);
  for (int k = 0; k < 200; ++k) {
    const auto a = random_poly(rng), b = random_poly(rng);
    if (b.is_zero()) continue;
    const auto q = qhall::divide_exact(a * b, b);
    ASSERT_TRUE(q.has_value());
    EXPECT_EQ(*q, a);
  }
  EXPECT_FALSE(qhall::divide_exact(v(2) + 1, v(1) + 1).has_value());
}

TEST(Laurent, GcdIsMonicCommonFactor) {
  const LaurentPoly a = (v(1) + 1) * (v(2) + v(1) + 1);
  const LaurentPoly b = (v(1) + 1) * (v(1) - 1) * v(-3);
  EXPECT_EQ(qhall::gcd(a, b), v(1) + 1);
  EXPECT_EQ(qhall::gcd(LaurentPoly(), LaurentPoly()), LaurentPoly());
  EXPECT_EQ(qhall::gcd(v(5), v(1) + 1), LaurentPoly(1));
}

TEST(Laurent, Formatting) {
  EXPECT_EQ((v(2) + 1 + v(-2)).to_string(), "v^2 + 1 + v^-2");
  EXPECT_EQ(LaurentPoly().to_string(), "0");
}

TEST(Quantum, QuantumIntegers) {
  EXPECT_EQ(qhall::qint(0), LaurentPoly());
  EXPECT_EQ(qhall::qint(1), LaurentPoly(1));
  EXPECT_EQ(qhall::qint(3), v(2) + 1 + v(-2));
  EXPECT_EQ(qhall::qint(-2), -(v(1) + v(-1)));
  EXPECT_EQ(qhall::qint(2, 2), v(2) + v(-2));
  for (int m = 1; m < 10; ++m) {
    // Geometric-sum oracle: [m] = sum_{a} v^{m-1-2a}.
    LaurentPoly g;
    for (int a = 0; a < m; ++a) g += v(m - 1 - 2 * a);
    EXPECT_EQ(qhall::qint(m), g);
    EXPECT_EQ(qhall::qint(m) * (v(1) - v(-1)), v(m) - v(-m));
  }
}

TEST(Quantum, FactorialAndBinomialValues) {
  EXPECT_EQ(qhall::qfact(3), v(3) + 2 * v(1) + 2 * v(-1) + v(-3));
  EXPECT_EQ(qhall::qbinom(5, 2), v(6) + v(4) + 2 * v(2) + 2 + 2 * v(-2) + v(-4) + v(-6));
  EXPECT_EQ(qhall::qbinom(3, 1), qhall::qint(3));
  EXPECT_EQ(qhall::qbinom(3, 1, 2), v(4) + 1 + v(-4));
}

TEST(Quantum, BinomialMatchesPascalRecursion) {
  for (int m = 0; m <= 12; ++m) {
    for (int t = 0; t <= m; ++t) {
      EXPECT_EQ(qhall::qbinom(m, t), pascal(m, t)) << m << " " << t;
      EXPECT_EQ(qhall::qbinom(m, t), qhall::qbinom(m, m - t));
      EXPECT_TRUE(qhall::qbinom(m, t).has_integer_coeffs());
      EXPECT_EQ(qhall::qbinom(m, t, 3), pascal(m, t).substitute_power(3));
    }
  }
}

TEST(Quantum, BinomialAtOneIsClassical) {
  for (int m = 0; m <= 10; ++m) {
    long c = 1;
    for (int t = 0; t <= m; ++t) {
      mpq_class s = 0;
      const LaurentPoly b = qhall::qbinom(m, t);
      for (const auto& [e, a] : b.terms()) s += a;
      EXPECT_EQ(s, c);
      c = c * (m - t) / (t + 1);
    }
  }
}

TEST(Quantum, PartialSumsAgreeWithClosedForm) {
  for (int n = 1; n <= 8; ++n) {
    for (int i = 1; i <= n; ++i) EXPECT_EQ(qhall::b_partial_sum(n, i), qhall::b_closed_form(n, i)) << n << "," << i;
    EXPECT_EQ(qhall::b_partial_sum(n, n), -qhall::qint(2 * n + 1));
    EXPECT_TRUE((qhall::serre_residual_sum(n)).is_zero());
  }
}

TEST(Quantum, QuantumIntegerProductIdentity) {
  // Numeric oracle at v = 3/2 with [m] = (v^m - v^-m)/(v - v^-1).
  const mpq_class v(3, 2);
  auto num_qint = [&](int m) {
    mpq_class p = 1, inv = 1;
    for (int k = 0; k < m; ++k) p *= v;
    inv = 1 / p;
    return mpq_class((p - inv) / (v - 1 / v));
  };
  for (int n = 1; n <= 8; ++n) {
    for (int i = 1; i <= n; ++i) {
      EXPECT_TRUE(qhall::check_identity_4_2(n, i));
      EXPECT_EQ(num_qint(2 * i + 1) * num_qint(n) - num_qint(n + i + 1) * num_qint(i), num_qint(n - i) * num_qint(i + 1));
    }
  }
}

TEST(QScalar, ArithmeticInQuadraticField) {
  using qhall::QScalar;
  const QScalar s = QScalar::sqrt_q_power(2, 1);
  EXPECT_EQ(s * s, QScalar(2, 2));
  EXPECT_EQ(QScalar::sqrt_q_power(2, -2), QScalar(2, mpq_class(1, 2)));
  const QScalar x(2, 3, 5);
  EXPECT_EQ(x * x.inverse(), QScalar(2, 1));
  EXPECT_EQ(QScalar::sqrt_q_power(4, 1), QScalar(4, 2));
  EXPECT_THROW(QScalar(2, 1) + QScalar(3, 1), qhall::Error);
  // [3] at v = sqrt 2 is 2 + 1 + 1/2.
  EXPECT_EQ(qhall::eval_sqrt_q(qhall::qint(3), 2), QScalar(2, mpq_class(7, 2)));
  EXPECT_EQ(qhall::eval_sqrt_q(qhall::qint(2), 3), QScalar(3, 0, mpq_class(4, 3)));
}
