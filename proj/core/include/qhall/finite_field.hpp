#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qhall {

/// Element of F_q encoded as the integer whose base-p digits are the
/// coefficients (constant term first) of its polynomial over F_p.
using FElem = std::uint16_t;

/// Polynomial over some F_q, coefficients constant term first.
using FPoly = std::vector<FElem>;

/// F_q with q = p^e, p in {2,3,5,7}, e <= 4, built from a fixed table of
/// irreducible (Conway) moduli. All arithmetic goes through lookup tables.
class FiniteField {
 public:
  explicit FiniteField(long order);

  long order() const noexcept { return q_; }
  long characteristic() const noexcept { return p_; }
  int degree() const noexcept { return e_; }
  /// Modulus over F_p used to build this field (x + 0 style placeholder when e = 1).
  const std::vector<int>& modulus() const noexcept { return modulus_; }

  FElem add(FElem a, FElem b) const { return add_[idx(a, b)]; }
  FElem sub(FElem a, FElem b) const { return add_[idx(a, neg_[b])]; }
  FElem mul(FElem a, FElem b) const { return mul_[idx(a, b)]; }
  FElem neg(FElem a) const { return neg_[a]; }
  /// a != 0
  FElem inv(FElem a) const { return inv_[a]; }
  FElem primitive_element() const noexcept { return primitive_; }

  /// 1, p, p^2, ...: an F_p-basis of F_q.
  std::vector<FElem> prime_field_basis() const;

 private:
  std::size_t idx(FElem a, FElem b) const { return static_cast<std::size_t>(a) * static_cast<std::size_t>(q_) + b; }

  long q_;
  long p_;
  int e_;
  std::vector<int> modulus_;
  std::vector<FElem> add_;
  std::vector<FElem> mul_;
  std::vector<FElem> neg_;
  std::vector<FElem> inv_;
  FElem primitive_ = 1;
};

/// The built-in modulus table entry for F_{p^e} (monic, constant term first).
/// Throws Errc::FieldTableMiss outside p in {2,3,5,7}, 1 <= e <= 4.
const std::vector<int>& conway_modulus(long p, int e);

/// Decomposes q = p^e; throws Errc::InvalidInput if q is not a prime power and
/// Errc::FieldTableMiss if it is outside the table.
std::pair<long, int> prime_power(long q);

/// True iff the monic polynomial f over F is irreducible (trial division).
bool is_irreducible(const FiniteField& field, const FPoly& f);

/// Monic irreducible polynomial of degree d over F defining F_{q^d}: "x" for
/// d = 1, the table entry when q is prime, otherwise the lexicographically
/// first monic irreducible. Throws Errc::FieldTableMiss when q^d is outside
/// the table range.
FPoly extension_modulus(const FiniteField& field, int d);

std::string poly_to_string(const FPoly& f);

}  // namespace qhall
