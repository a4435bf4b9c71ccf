#include "qhall/presver.hpp"

#include <random>
#include <sstream>

#include "qhall/error.hpp"
#include "qhall/quantum.hpp"

namespace qhall {

// ---------------------------------------------------------------- RatLaurent

RatLaurent::RatLaurent(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) fail(Errc::InvalidInput, "zero denominator");
  normalize();
}

void RatLaurent::normalize() {
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  const LaurentPoly g = gcd(num_, den_);
  if (!g.is_one()) {
    num_ = *divide_exact(num_, g);
    den_ = *divide_exact(den_, g);
  }
  const int shift = -den_.min_exponent();
  num_ = num_.shifted(shift);
  den_ = den_.shifted(shift);
  const mpq_class lead_inv = 1 / den_.coeff(den_.max_exponent());
  num_ *= lead_inv;
  den_ *= lead_inv;
}

RatLaurent& RatLaurent::operator+=(const RatLaurent& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

RatLaurent& RatLaurent::operator-=(const RatLaurent& o) { return *this += -o; }

RatLaurent& RatLaurent::operator*=(const RatLaurent& o) {
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RatLaurent& RatLaurent::operator/=(const RatLaurent& o) {
  if (o.is_zero()) fail(Errc::InvalidInput, "division by zero");
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  normalize();
  return *this;
}

RatLaurent RatLaurent::operator-() const {
  RatLaurent r = *this;
  r.num_ = -r.num_;
  return r;
}

std::string RatLaurent::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

// ---------------------------------------------------------------- NCExpr

NCExpr NCExpr::word(Word w, RatLaurent c) {
  NCExpr e;
  e.add_term(w, c);
  return e;
}

void NCExpr::add_term(const Word& w, const RatLaurent& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

NCExpr& NCExpr::operator+=(const NCExpr& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NCExpr& NCExpr::operator-=(const NCExpr& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NCExpr& NCExpr::operator*=(const RatLaurent& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, x] : terms_) x *= c;
  return *this;
}

NCExpr operator*(const NCExpr& a, const NCExpr& b) {
  NCExpr r;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      r.add_term(w, ca * cb);
    }
  }
  return r;
}

std::string NCExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : terms_) {
    if (!s.empty()) s += " ; ";
    s += "(" + c.to_string() + ")";
    for (const auto& g : w) s += " " + g;
  }
  return s;
}

NCExpr power(const NCExpr& g, int m) {
  NCExpr r = NCExpr::scalar(1);
  for (int k = 0; k < m; ++k) r = r * g;
  return r;
}

// ---------------------------------------------------------------- NormalElem

void NormalElem::add_term(const NormalKey& k, const RatLaurent& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

RatLaurent NormalElem::coeff(const NormalKey& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? RatLaurent() : it->second;
}

NormalElem& NormalElem::operator-=(const NormalElem& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

NormalElem& NormalElem::operator*=(const RatLaurent& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, x] : terms_) x *= c;
  return *this;
}

std::string NormalElem::to_string(const std::string& single, const std::string& power) const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [k, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")";
    if (k.torus != 0) s += " K^" + std::to_string(k.torus);
    if (k.single) s += " " + single;
    if (k.power) s += " " + power + "^" + std::to_string(k.power);
  }
  return s;
}

std::size_t ReductionTrace::count(Rule r) const {
  std::size_t n = 0;
  for (Rule x : steps) n += x == r ? 1 : 0;
  return n;
}

// ---------------------------------------------------------------- rewriting

namespace {

enum Letter : std::uint8_t { kEPlus = 0, kEMinus = 1, kK = 2, kKInv = 3 };

Letter letter_of(const std::string& s) {
  if (s == "E+") return kEPlus;
  if (s == "E-") return kEMinus;
  if (s == "K") return kK;
  if (s == "K-") return kKInv;
  fail(Errc::InvalidInput, "unknown letter '" + s + "' (expected E+, E-, K, K-)");
}

bool is_torus(std::uint8_t x) { return x == kK || x == kKInv; }

LaurentPoly lcm(const LaurentPoly& a, const LaurentPoly& b) { return *divide_exact(a * b, gcd(a, b)); }

}  // namespace

NormalElem reduce_mixed(const NCExpr& e, int d, int exponent, const ReduceOptions& opts, ReductionTrace* trace) {
  if (d < 1) fail(Errc::InvalidInput, "d must be positive");
  if (exponent < 1 || exponent % 2 != 0) fail(Errc::InvalidInput, "exponent must be a positive even integer");
  const int w = exponent * d;
  const std::uint8_t P = opts.orientation == Orientation::PlusPowers ? kEPlus : kEMinus;
  const std::uint8_t S = P == kEPlus ? kEMinus : kEPlus;
  const int sigma = P == kEPlus ? 1 : -1;
  auto weight = [&](std::uint8_t x) { return x == kEPlus ? w : -w; };
  const LaurentPoly D = LaurentPoly::v(d) - LaurentPoly::v(-d);

  // Clear denominators: scale by L * D so every intermediate coefficient is Laurent.
  LaurentPoly L = 1;
  for (const auto& [word, c] : e.terms()) L = lcm(L, c.denominator());
  const LaurentPoly scale = L * D;

  std::vector<std::pair<std::vector<std::uint8_t>, LaurentPoly>> stack;
  for (const auto& [word, c] : e.terms()) {
    std::vector<std::uint8_t> ws;
    int singles = 0;
    for (const auto& g : word) {
      ws.push_back(letter_of(g));
      singles += ws.back() == S ? 1 : 0;
    }
    if (singles > 1) fail(Errc::UnsupportedShape, "word with " + std::to_string(singles) + " single letters");
    stack.emplace_back(std::move(ws), c.numerator() * *divide_exact(L, c.denominator()) * D);
  }
  // Later words are popped first; reverse so the first word is handled first.
  std::reverse(stack.begin(), stack.end());

  std::mt19937_64 rng(opts.seed);
  std::map<NormalKey, LaurentPoly> acc;
  std::size_t steps = 0;
  std::vector<std::size_t> redexes;
  while (!stack.empty()) {
    auto [word, coeff] = std::move(stack.back());
    stack.pop_back();
    redexes.clear();
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
      const std::uint8_t a = word[i], b = word[i + 1];
      const bool redex = (!is_torus(a) && is_torus(b)) || (is_torus(a) && is_torus(b) && a != b) || (a == P && b == S);
      if (redex) {
        redexes.push_back(i);
        if (opts.strategy == Strategy::Leftmost) break;
      }
    }
    if (redexes.empty()) {
      NormalKey key;
      for (std::uint8_t x : word) {
        if (x == kK) ++key.torus;
        if (x == kKInv) --key.torus;
        if (x == S) key.single = 1;
        if (x == P) ++key.power;
      }
      acc[key] += coeff;
      continue;
    }
    if (++steps > opts.max_steps) fail(Errc::CapExceeded, "rewrite step cap exceeded");
    const std::size_t i = opts.strategy == Strategy::Leftmost ? redexes.front() : redexes[rng() % redexes.size()];
    const std::uint8_t a = word[i], b = word[i + 1];
    Rule rule;
    if (is_torus(a)) {
      rule = Rule::TorusCancel;
      word.erase(word.begin() + static_cast<long>(i), word.begin() + static_cast<long>(i) + 2);
      stack.emplace_back(std::move(word), std::move(coeff));
    } else if (is_torus(b)) {
      rule = a == P ? Rule::PowerPastTorus : Rule::SinglePastTorus;
      const int shift = b == kK ? -weight(a) : weight(a);
      std::swap(word[i], word[i + 1]);
      stack.emplace_back(std::move(word), coeff.shifted(shift));
    } else {
      rule = Rule::Commutator;
      const auto part = divide_exact(coeff, D);
      if (!part) fail(Errc::Internal, "commutator step on a coefficient not divisible by v^d - v^-d");
      std::vector<std::uint8_t> wk = word, wki = word;
      wk.erase(wk.begin() + static_cast<long>(i));
      wk[i] = kK;
      wki.erase(wki.begin() + static_cast<long>(i));
      wki[i] = kKInv;
      std::swap(word[i], word[i + 1]);
      stack.emplace_back(std::move(wki), *part * LaurentPoly(-sigma));
      stack.emplace_back(std::move(wk), *part * LaurentPoly(sigma));
      stack.emplace_back(std::move(word), std::move(coeff));
    }
    if (trace) trace->steps.push_back(rule);
  }
  NormalElem out;
  for (const auto& [key, c] : acc) {
    if (!c.is_zero()) out.add_term(key, RatLaurent(c, scale));
  }
  return out;
}

NCExpr serre_mixed_expr(int n, int d, bool mirrored) {
  if (n < 1) fail(Errc::InvalidInput, "n must be positive");
  const int N = 2 * n + 1;
  const NCExpr P = NCExpr::gen(mirrored ? "E-" : "E+");
  const NCExpr S = NCExpr::gen(mirrored ? "E+" : "E-");
  NCExpr sum;
  for (int p = 0; p <= N; ++p) {
    const LaurentPoly c = (p % 2 ? -1 : 1) * qbinom(N, p, d);
    sum += (power(P, p) * S * power(P, N - p)) * RatLaurent(c);
  }
  return sum;
}

LemmaResult check_lemma_41(int n, int d) {
  ReductionTrace t;
  const NormalElem plus = reduce_mixed(serre_mixed_expr(n, d, false), d, 2, {Orientation::PlusPowers}, &t);
  const NormalElem minus = reduce_mixed(serre_mixed_expr(n, d, true), d, 2, {Orientation::MinusPowers}, &t);
  return {plus.is_zero() && minus.is_zero(), t.steps.size()};
}

bool check_s2(int m) {
  if (m < 1) fail(Errc::InvalidInput, "m must be positive");
  const NCExpr x = NCExpr::gen("x"), y = NCExpr::gen("y");
  const NCExpr lhs = power(x, m) * y - y * power(x, m);
  NCExpr rhs;
  for (int a = 0; a < m; ++a) rhs += power(x, a) * (x * y - y * x) * power(x, m - 1 - a);
  return lhs == rhs;
}

bool check_s2_reduction(int n, int d) {
  if (n < 1) fail(Errc::InvalidInput, "n must be positive");
  const int N = 2 * n + 1;
  const NCExpr x = NCExpr::gen("x"), y = NCExpr::gen("y");
  NCExpr lhs, rhs;
  for (int p = 0; p <= N; ++p) lhs += (power(x, p) * y * power(x, N - p)) * RatLaurent((p % 2 ? -1 : 1) * qbinom(N, p, d));
  for (int p = 0; p <= n; ++p) {
    const NCExpr inner = power(x, N - 2 * p) * y - y * power(x, N - 2 * p);
    rhs += (power(x, p) * inner * power(x, p)) * RatLaurent((p % 2 ? 1 : -1) * qbinom(N, p, d));
  }
  return lhs == rhs;
}

namespace {

NCExpr e_k_e(int left, int right) {
  const NCExpr E = NCExpr::gen("E+"), K = NCExpr::gen("K");
  return power(E, left) * K * power(E, right);
}

}  // namespace

bool check_term_A(int n, int p) {
  if (n < 1 || p < 0 || p > n) fail(Errc::InvalidInput, "need 0 <= p <= n, n >= 1");
  NCExpr diff;
  for (int a = 0; a <= 2 * n - 2 * p; ++a) diff += e_k_e(p + a, 2 * n - p - a);
  diff -= e_k_e(n, n) * RatLaurent(qint(2 * (n - p) + 1));
  return reduce_mixed(diff, 1, 2).is_zero();
}

bool check_residual_chain(int n) {
  const int N = 2 * n + 1;
  const RatLaurent inv(1, LaurentPoly::v(1) - LaurentPoly::v(-1));
  NCExpr first;
  for (int p = 0; p <= n; ++p) {
    NCExpr inner;
    for (int a = 0; a <= 2 * n - 2 * p; ++a) inner += e_k_e(p + a, 2 * n - p - a);
    first += inner * RatLaurent((p % 2 ? 1 : -1) * qbinom(N, p));
  }
  first *= inv;
  const NCExpr expected = e_k_e(n, n) * (inv * RatLaurent(serre_residual_sum(n)));
  const NormalElem reduced = reduce_mixed(first, 1, 2);
  return reduced == reduce_mixed(expected, 1, 2) && reduced.is_zero() && serre_residual_sum(n).is_zero();
}

// ---------------------------------------------------------------- parsing

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\n\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\n\r");
  return s.substr(b, e - b + 1);
}

long parse_long(const std::string& s) {
  try {
    std::size_t used = 0;
    const long v = std::stol(trim(s), &used);
    if (used != trim(s).size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    fail(Errc::InvalidInput, "bad integer '" + s + "'");
  }
}

}  // namespace

NCExpr parse_nc_expr(const std::string& text) {
  NCExpr out;
  std::stringstream terms(text);
  std::string term;
  while (std::getline(terms, term, ';')) {
    term = trim(term);
    if (term.empty()) continue;
    if (term.front() != '(') fail(Errc::InvalidInput, "term must start with a coefficient in parentheses: '" + term + "'");
    const auto close = term.find(')');
    if (close == std::string::npos) fail(Errc::InvalidInput, "unclosed coefficient in '" + term + "'");
    const std::string coef = term.substr(1, close - 1);
    LaurentPoly c;
    if (coef.find(':') == std::string::npos) {
      c = LaurentPoly(parse_long(coef));
    } else {
      std::stringstream pairs(coef);
      std::string pair;
      while (std::getline(pairs, pair, ',')) {
        const auto colon = pair.find(':');
        if (colon == std::string::npos) fail(Errc::InvalidInput, "expected exponent:coefficient in '" + pair + "'");
        c += LaurentPoly::monomial(static_cast<int>(parse_long(pair.substr(0, colon))), parse_long(pair.substr(colon + 1)));
      }
    }
    Word w;
    std::stringstream letters(term.substr(close + 1));
    std::string g;
    while (letters >> g) w.push_back(g);
    out.add_term(w, RatLaurent(c));
  }
  return out;
}

}  // namespace qhall
