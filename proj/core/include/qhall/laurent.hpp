#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>

namespace qhall {

/// Exact Laurent polynomial in one indeterminate v with rational coefficients.
///
/// Stored sparsely as exponent -> coefficient; zero coefficients are never
/// stored, so two polynomials are equal iff their term maps are equal.
class LaurentPoly {
 public:
  using Coeff = mpq_class;
  using Terms = std::map<int, Coeff>;

  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT(google-explicit-constructor)
  explicit LaurentPoly(const Coeff& constant);

  static LaurentPoly monomial(int exponent, const Coeff& coeff = 1);
  /// v^exponent
  static LaurentPoly v(int exponent = 1) { return monomial(exponent); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_one() const;
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  Coeff coeff(int exponent) const;

  /// Lowest / highest exponent; both require a nonzero polynomial.
  int min_exponent() const;
  int max_exponent() const;

  /// Bar involution v -> v^{-1}.
  LaurentPoly bar() const;
  /// Multiplication by v^k.
  LaurentPoly shifted(int k) const;
  /// Substitution v -> v^d.
  LaurentPoly substitute_power(int d) const;

  bool has_integer_coeffs() const;

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const Coeff& scalar);

  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
  friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
  friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
  friend LaurentPoly operator*(LaurentPoly lhs, const Coeff& s) { return lhs *= s; }
  friend LaurentPoly operator*(const Coeff& s, LaurentPoly rhs) { return rhs *= s; }
  friend LaurentPoly operator*(long s, LaurentPoly rhs) { return rhs *= Coeff(s); }
  friend LaurentPoly operator*(LaurentPoly lhs, long s) { return lhs *= Coeff(s); }
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  /// Human-readable form, highest exponent first: "v^2 + 1 + v^-2".
  std::string to_string() const;

 private:
  void add_term(int exponent, const Coeff& c);
  Terms terms_;
};

/// a / b when b divides a exactly in Q[v, v^-1], std::nullopt otherwise.
/// b must be nonzero.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b);

/// Greatest common divisor in Q[v, v^-1], normalized to a monic polynomial
/// with nonzero constant term (units v^k and rational scalars removed).
/// gcd(0, 0) is 0.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace qhall
