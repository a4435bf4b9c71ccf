#include "qhall/laurent.hpp"

#include <sstream>
#include <vector>

#include "qhall/error.hpp"

namespace qhall {

namespace {

// Dense coefficient vector of p * v^{-min_exponent(p)}; index = degree.
std::vector<mpq_class> to_dense(const LaurentPoly& p) {
  const int lo = p.min_exponent();
  std::vector<mpq_class> out(static_cast<std::size_t>(p.max_exponent() - lo + 1));
  for (const auto& [e, c] : p.terms()) out[static_cast<std::size_t>(e - lo)] = c;
  return out;
}

LaurentPoly from_dense(const std::vector<mpq_class>& coeffs, int shift) {
  LaurentPoly out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] != 0) out += LaurentPoly::monomial(static_cast<int>(i) + shift, coeffs[i]);
  }
  return out;
}

void trim(std::vector<mpq_class>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of a mod b for dense polynomials; b.back() != 0.
std::vector<mpq_class> poly_rem(std::vector<mpq_class> a, const std::vector<mpq_class>& b) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    const mpq_class factor = a.back() / b.back();
    const std::size_t offset = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[offset + i] -= factor * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

}  // namespace

LaurentPoly::LaurentPoly(long constant) {
  if (constant != 0) terms_.emplace(0, Coeff(constant));
}

LaurentPoly::LaurentPoly(const Coeff& constant) {
  if (constant != 0) terms_.emplace(0, constant);
}

LaurentPoly LaurentPoly::monomial(int exponent, const Coeff& coeff) {
  LaurentPoly p;
  if (coeff != 0) p.terms_.emplace(exponent, coeff);
  return p;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

LaurentPoly::Coeff LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Coeff(0) : it->second;
}

int LaurentPoly::min_exponent() const {
  if (terms_.empty()) fail(Errc::InvalidInput, "min_exponent of zero polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const {
  if (terms_.empty()) fail(Errc::InvalidInput, "max_exponent of zero polynomial");
  return terms_.rbegin()->first;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
  return out;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + k, c);
  return out;
}

LaurentPoly LaurentPoly::substitute_power(int d) const {
  if (d == 0) fail(Errc::InvalidInput, "substitute_power with d = 0");
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e * d, c);
  return out;
}

bool LaurentPoly::has_integer_coeffs() const {
  for (const auto& [e, c] : terms_) {
    if (c.get_den() != 1) return false;
  }
  return true;
}

void LaurentPoly::add_term(int exponent, const Coeff& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Coeff& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  // Dense convolution is much cheaper than repeated map insertion.
  const int lo = lhs.min_exponent() + rhs.min_exponent();
  const int hi = lhs.max_exponent() + rhs.max_exponent();
  std::vector<mpq_class> acc(static_cast<std::size_t>(hi - lo + 1));
  mpq_class tmp;
  for (const auto& [ea, ca] : lhs.terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      tmp = ca * cb;
      acc[static_cast<std::size_t>(ea + eb - lo)] += tmp;
    }
  }
  return from_dense(acc, lo);
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e, -c);
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const int e = it->first;
    mpq_class c = it->second;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const bool unit = (c == 1);
    if (e == 0) {
      os << c.get_str();
      continue;
    }
    if (!unit) os << c.get_str() << "*";
    os << "v";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) fail(Errc::InvalidInput, "division by zero Laurent polynomial");
  if (a.is_zero()) return LaurentPoly{};
  std::vector<mpq_class> num = to_dense(a);
  const std::vector<mpq_class> den = to_dense(b);
  if (num.size() < den.size()) return std::nullopt;
  const std::size_t dd = den.size() - 1;
  std::vector<mpq_class> quot(num.size() - dd);
  for (std::size_t k = num.size(); k-- > dd;) {
    if (num[k] == 0) continue;
    const mpq_class factor = num[k] / den[dd];
    quot[k - dd] = factor;
    for (std::size_t i = 0; i <= dd; ++i) num[k - dd + i] -= factor * den[i];
  }
  for (const auto& c : num) {
    if (c != 0) return std::nullopt;
  }
  return from_dense(quot, a.min_exponent() - b.min_exponent());
}

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  std::vector<mpq_class> x = a.is_zero() ? std::vector<mpq_class>{} : to_dense(a);
  std::vector<mpq_class> y = b.is_zero() ? std::vector<mpq_class>{} : to_dense(b);
  trim(x);
  trim(y);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    std::vector<mpq_class> r = poly_rem(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  const mpq_class lead = x.back();
  for (auto& c : x) c /= lead;
  return from_dense(x, 0);
}

}  // namespace qhall
