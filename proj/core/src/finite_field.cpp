#include "qhall/finite_field.hpp"

#include <map>

#include "qhall/error.hpp"

namespace qhall {

namespace {

// Conway polynomials, constant term first.
const std::map<std::pair<long, int>, std::vector<int>>& table() {
  static const std::map<std::pair<long, int>, std::vector<int>> t = {
      {{2, 1}, {1, 1}},       {{2, 2}, {1, 1, 1}},    {{2, 3}, {1, 1, 0, 1}},    {{2, 4}, {1, 1, 0, 0, 1}},
      {{3, 1}, {1, 1}},       {{3, 2}, {2, 2, 1}},    {{3, 3}, {1, 2, 0, 1}},    {{3, 4}, {2, 0, 0, 2, 1}},
      {{5, 1}, {3, 1}},       {{5, 2}, {2, 4, 1}},    {{5, 3}, {3, 3, 0, 1}},    {{5, 4}, {2, 4, 4, 0, 1}},
      {{7, 1}, {4, 1}},       {{7, 2}, {3, 6, 1}},    {{7, 3}, {4, 0, 6, 1}},    {{7, 4}, {3, 4, 5, 0, 1}},
  };
  return t;
}

long ipow(long b, int e) {
  long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

// Polynomial helpers over a FiniteField.
FPoly poly_mod(FPoly a, const FPoly& m, const FiniteField& f) {
  const std::size_t dm = m.size() - 1;
  const FElem lead_inv = f.inv(m.back());
  while (!a.empty() && a.back() == 0) a.pop_back();
  while (a.size() > dm) {
    const FElem factor = f.mul(a.back(), lead_inv);
    const std::size_t off = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[off + i] = f.sub(a[off + i], f.mul(factor, m[i]));
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

}  // namespace

const std::vector<int>& conway_modulus(long p, int e) {
  auto it = table().find({p, e});
  if (it == table().end()) {
    fail(Errc::FieldTableMiss, "no modulus for F_" + std::to_string(p) + "^" + std::to_string(e));
  }
  return it->second;
}

std::pair<long, int> prime_power(long q) {
  if (q < 2) fail(Errc::InvalidInput, "field order must be >= 2");
  long p = 0;
  for (long d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) p = q;
  int e = 0;
  long r = q;
  while (r % p == 0) {
    r /= p;
    ++e;
  }
  if (r != 1) fail(Errc::InvalidInput, std::to_string(q) + " is not a prime power");
  conway_modulus(p, e);  // range check
  return {p, e};
}

FiniteField::FiniteField(long order) : q_(order) {
  std::tie(p_, e_) = prime_power(order);
  modulus_ = conway_modulus(p_, e_);
  const auto q = static_cast<std::size_t>(q_);
  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  inv_.assign(q, 0);

  auto digits = [&](long a) {
    std::vector<int> d(static_cast<std::size_t>(e_));
    for (int i = 0; i < e_; ++i) {
      d[static_cast<std::size_t>(i)] = static_cast<int>(a % p_);
      a /= p_;
    }
    return d;
  };
  auto encode = [&](const std::vector<int>& d) {
    long a = 0;
    for (int i = e_ - 1; i >= 0; --i) a = a * p_ + d[static_cast<std::size_t>(i)];
    return static_cast<FElem>(a);
  };

  for (long a = 0; a < q_; ++a) {
    const auto da = digits(a);
    std::vector<int> dn(da.size());
    for (std::size_t i = 0; i < da.size(); ++i) dn[i] = static_cast<int>((p_ - da[i]) % p_);
    neg_[static_cast<std::size_t>(a)] = encode(dn);
    for (long b = 0; b < q_; ++b) {
      const auto db = digits(b);
      std::vector<int> s(da.size());
      for (std::size_t i = 0; i < da.size(); ++i) s[i] = static_cast<int>((da[i] + db[i]) % p_);
      add_[idx(static_cast<FElem>(a), static_cast<FElem>(b))] = encode(s);
      // Product of polynomials mod the modulus (degree e, monic).
      std::vector<int> prod(static_cast<std::size_t>(2 * e_), 0);
      for (int i = 0; i < e_; ++i) {
        for (int j = 0; j < e_; ++j) {
          auto& slot = prod[static_cast<std::size_t>(i + j)];
          slot = static_cast<int>((slot + da[static_cast<std::size_t>(i)] * db[static_cast<std::size_t>(j)]) % p_);
        }
      }
      for (int k = 2 * e_ - 1; k >= e_; --k) {
        const int c = prod[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        prod[static_cast<std::size_t>(k)] = 0;
        for (int t = 0; t < e_; ++t) {
          auto& slot = prod[static_cast<std::size_t>(k - e_ + t)];
          slot = static_cast<int>(((slot - c * modulus_[static_cast<std::size_t>(t)]) % p_ + p_) % p_);
        }
      }
      prod.resize(static_cast<std::size_t>(e_));
      mul_[idx(static_cast<FElem>(a), static_cast<FElem>(b))] = encode(prod);
    }
  }
  for (long a = 1; a < q_; ++a) {
    for (long b = 1; b < q_; ++b) {
      if (mul_[idx(static_cast<FElem>(a), static_cast<FElem>(b))] == 1) {
        inv_[static_cast<std::size_t>(a)] = static_cast<FElem>(b);
        break;
      }
    }
    if (inv_[static_cast<std::size_t>(a)] == 0) fail(Errc::Internal, "field table modulus is reducible");
  }
  for (long g = 1; g < q_; ++g) {
    long order_g = 1;
    FElem x = static_cast<FElem>(g);
    while (x != 1) {
      x = mul(x, static_cast<FElem>(g));
      ++order_g;
    }
    if (order_g == q_ - 1) {
      primitive_ = static_cast<FElem>(g);
      break;
    }
  }
}

std::vector<FElem> FiniteField::prime_field_basis() const {
  std::vector<FElem> out;
  long b = 1;
  for (int i = 0; i < e_; ++i, b *= p_) out.push_back(static_cast<FElem>(b));
  return out;
}

bool is_irreducible(const FiniteField& f, const FPoly& poly) {
  const int d = static_cast<int>(poly.size()) - 1;
  if (d < 1) return false;
  if (d == 1) return true;
  const long q = f.order();
  // Trial division by every monic polynomial of degree 1..d/2.
  for (int k = 1; 2 * k <= d; ++k) {
    const long count = ipow(q, k);
    for (long code = 0; code < count; ++code) {
      FPoly g(static_cast<std::size_t>(k + 1));
      long c = code;
      for (int i = 0; i < k; ++i) {
        g[static_cast<std::size_t>(i)] = static_cast<FElem>(c % q);
        c /= q;
      }
      g[static_cast<std::size_t>(k)] = 1;
      if (poly_mod(poly, g, f).empty()) return false;
    }
  }
  return true;
}

FPoly extension_modulus(const FiniteField& f, int d) {
  if (d < 1) fail(Errc::InvalidInput, "extension degree must be positive");
  if (d == 1) return {0, 1};
  const long p = f.characteristic();
  const int total = f.degree() * d;
  conway_modulus(p, total);  // FieldTableMiss when q^d is out of range
  if (f.degree() == 1) {
    const auto& m = conway_modulus(p, d);
    return FPoly(m.begin(), m.end());
  }
  const long q = f.order();
  const long count = ipow(q, d);
  for (long code = 0; code < count; ++code) {
    FPoly g(static_cast<std::size_t>(d + 1));
    long c = code;
    for (int i = 0; i < d; ++i) {
      g[static_cast<std::size_t>(i)] = static_cast<FElem>(c % q);
      c /= q;
    }
    g[static_cast<std::size_t>(d)] = 1;
    if (g[0] != 0 && is_irreducible(f, g)) return g;
  }
  fail(Errc::Internal, "no irreducible polynomial found");
}

std::string poly_to_string(const FPoly& f) {
  std::string s;
  for (std::size_t i = f.size(); i-- > 0;) {
    if (f[i] == 0) continue;
    if (!s.empty()) s += " + ";
    if (i == 0 || f[i] != 1) s += std::to_string(f[i]);
    if (i > 0) {
      if (f[i] != 1) s += "*";
      s += "x";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s.empty() ? "0" : s;
}

}  // namespace qhall
