#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qhall/laurent.hpp"

namespace qhall {

/// Fraction of Laurent polynomials, kept reduced: common factors cancelled and
/// the denominator normalized to a monic polynomial with nonzero constant term.
class RatLaurent {
 public:
  RatLaurent() : den_(1) {}
  RatLaurent(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatLaurent(LaurentPoly num) : num_(std::move(num)), den_(1) { normalize(); }  // NOLINT(google-explicit-constructor)
  RatLaurent(LaurentPoly num, LaurentPoly den);

  const LaurentPoly& numerator() const noexcept { return num_; }
  const LaurentPoly& denominator() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_laurent() const { return den_.is_one(); }

  RatLaurent& operator+=(const RatLaurent& o);
  RatLaurent& operator-=(const RatLaurent& o);
  RatLaurent& operator*=(const RatLaurent& o);
  RatLaurent& operator/=(const RatLaurent& o);
  friend RatLaurent operator+(RatLaurent a, const RatLaurent& b) { return a += b; }
  friend RatLaurent operator-(RatLaurent a, const RatLaurent& b) { return a -= b; }
  friend RatLaurent operator*(RatLaurent a, const RatLaurent& b) { return a *= b; }
  friend RatLaurent operator/(RatLaurent a, const RatLaurent& b) { return a /= b; }
  RatLaurent operator-() const;
  friend bool operator==(const RatLaurent& a, const RatLaurent& b) { return a.num_ * b.den_ == b.num_ * a.den_; }
  friend bool operator!=(const RatLaurent& a, const RatLaurent& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void normalize();
  LaurentPoly num_;
  LaurentPoly den_;
};

using Word = std::vector<std::string>;

/// Element of the free algebra over Q(v): word -> coefficient, no zero terms.
class NCExpr {
 public:
  NCExpr() = default;
  static NCExpr word(Word w, RatLaurent c = 1);
  /// Single letter.
  static NCExpr gen(const std::string& g) { return word({g}); }
  static NCExpr scalar(RatLaurent c) { return word({}, std::move(c)); }

  const std::map<Word, RatLaurent>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  void add_term(const Word& w, const RatLaurent& c);

  NCExpr& operator+=(const NCExpr& o);
  NCExpr& operator-=(const NCExpr& o);
  NCExpr& operator*=(const RatLaurent& c);
  friend NCExpr operator+(NCExpr a, const NCExpr& b) { return a += b; }
  friend NCExpr operator-(NCExpr a, const NCExpr& b) { return a -= b; }
  friend NCExpr operator*(const NCExpr& a, const NCExpr& b);
  friend NCExpr operator*(NCExpr a, const RatLaurent& c) { return a *= c; }
  friend NCExpr operator*(const RatLaurent& c, NCExpr a) { return a *= c; }
  friend bool operator==(const NCExpr& a, const NCExpr& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  std::map<Word, RatLaurent> terms_;
};

/// g^m (m >= 0; g^0 is the unit).
NCExpr power(const NCExpr& g, int m);

/// Normal-form monomial K^a S^eps P^m where P is the power letter and S the
/// single letter of the chosen orientation.
struct NormalKey {
  int torus = 0;
  int single = 0;
  int power = 0;
  auto operator<=>(const NormalKey&) const = default;
};

class NormalElem {
 public:
  const std::map<NormalKey, RatLaurent>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  void add_term(const NormalKey& k, const RatLaurent& c);
  RatLaurent coeff(const NormalKey& k) const;
  friend bool operator==(const NormalElem& a, const NormalElem& b) { return a.terms_ == b.terms_; }
  NormalElem& operator-=(const NormalElem& o);
  NormalElem& operator*=(const RatLaurent& c);
  /// Uses the letter names of the orientation it was reduced in.
  std::string to_string(const std::string& single = "E-", const std::string& power = "E+") const;

 private:
  std::map<NormalKey, RatLaurent> terms_;
};

enum class Orientation {
  PlusPowers,   ///< powers of E+, single E-; normal form K^a (E-)^eps (E+)^m
  MinusPowers,  ///< powers of E-, single E+; normal form K^a (E+)^eps (E-)^m
};

enum class Strategy { Leftmost, Random };

enum class Rule : std::uint8_t {
  PowerPastTorus,   ///< P K -> v^{-wt} K P, P K^-1 -> v^{wt} K^-1 P
  SinglePastTorus,  ///< S K -> v^{-wt} K S, ...
  TorusCancel,      ///< K K^-1 -> 1
  Commutator,       ///< P S -> S P + sigma (K - K^-1)/(v^d - v^-d)
};

struct ReductionTrace {
  std::vector<Rule> steps;
  std::size_t count(Rule r) const;
};

struct ReduceOptions {
  Orientation orientation = Orientation::PlusPowers;
  Strategy strategy = Strategy::Leftmost;
  std::uint64_t seed = 0;
  std::size_t max_steps = 1000000;
};

/// Letters: "E+", "E-", "K", "K-". Relations: K E+ = v^{w} E+ K,
/// K E- = v^{-w} E- K with w = exponent * d, K K^-1 = 1, and
/// E+ E- - E- E+ = (K - K^-1)/(v^d - v^-d).
/// Throws UnsupportedShape for a word with two or more single letters,
/// InvalidInput for unknown letters, CapExceeded past max_steps.
NormalElem reduce_mixed(const NCExpr& e, int d, int exponent, const ReduceOptions& opts = {},
                        ReductionTrace* trace = nullptr);

/// sum_{p=0}^{2n+1} (-1)^p [2n+1 choose p]_d (E+)^p E- (E+)^{2n+1-p}; `mirrored`
/// swaps E+ and E-.
NCExpr serre_mixed_expr(int n, int d, bool mirrored = false);

struct LemmaResult {
  bool ok = false;
  std::size_t trace_len = 0;
};

/// Both mixed Serre sums reduce to zero.
LemmaResult check_lemma_41(int n, int d);
/// x^m y - y x^m = sum_a x^a (xy - yx) x^{m-1-a} in the free algebra.
bool check_s2(int m);
/// The alternating sum equals its paired commutator form (N = 2n+1).
bool check_s2_reduction(int n, int d);
/// sum_{a=0}^{2n-2p} (E+)^{p+a} K (E+)^{2n-p-a} = [2(n-p)+1] (E+)^n K (E+)^n.
bool check_term_A(int n, int p);
/// The first torus term of the mixed Serre argument, reduced, against
/// (1/(v - v^-1)) * serre_residual_sum(n) * (E+)^n K (E+)^n.
bool check_residual_chain(int n);

/// Parses "(1) E+ E- ; (-1) E- E+" with coefficients either "(c)" or
/// exponent:coefficient pairs "(2:1,0:1,-2:1)". Throws InvalidInput.
NCExpr parse_nc_expr(const std::string& text);

}  // namespace qhall
