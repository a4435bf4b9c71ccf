#include "qhall/hall.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "qhall/error.hpp"
#include "qhall/quantum.hpp"

namespace qhall {

// ---------------------------------------------------------------- context

HallCtx::HallCtx(SpeciesPtr species, int max_k_total, Caps caps)
    : cat_(std::move(species), caps), max_k_total_(max_k_total) {}

void HallCtx::check_cap(const DimVec& d) const {
  if (d.size() != species().size()) fail(Errc::DimMismatch, "dimension vector length");
  const int k = k_total(species(), d);
  if (k > max_k_total_) {
    fail(Errc::CapExceeded, "dimension " + to_string(d) + " has k-dimension " + std::to_string(k) +
                                " above the grading cap " + std::to_string(max_k_total_));
  }
}

const std::vector<ClassInfo>& HallCtx::classes(const DimVec& d) const {
  check_cap(d);
  return cat_.iso_classes(d);
}

IsoClassId HallCtx::simple_class(std::size_t vertex) const {
  return cat_.classify(simple_rep(species_ptr(), vertex));
}

const HallCtx::Products& HallCtx::products(const DimVec& d) const {
  check_cap(d);
  std::lock_guard lock(mutex_);
  auto it = products_.find(d);
  if (it != products_.end()) return *it->second;
  auto table = std::make_unique<Products>();
  for (const auto& gamma : cat_.iso_classes(d)) {
    for (const auto& [key, g] : cat_.hall_table(gamma.id)) (*table)[key].emplace_back(gamma.id, g);
  }
  return *products_.emplace(d, std::move(table)).first->second;
}

const std::vector<std::pair<IsoClassId, long>>& HallCtx::structure(const IsoClassId& alpha,
                                                                   const IsoClassId& beta) const {
  static const std::vector<std::pair<IsoClassId, long>> none;
  const Products& p = products(alpha.dims + beta.dims);
  auto it = p.find({alpha, beta});
  return it == p.end() ? none : it->second;
}

// ---------------------------------------------------------------- elements

QScalar HallElem::coeff(const IsoClassId& id) const {
  auto it = terms_.find(id);
  return it == terms_.end() ? QScalar(q_) : it->second;
}

void HallElem::add_term(const IsoClassId& id, const QScalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(id);
  if (it == terms_.end()) {
    terms_.emplace(id, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

HallElem& HallElem::operator+=(const HallElem& o) {
  for (const auto& [id, c] : o.terms_) add_term(id, c);
  return *this;
}

HallElem& HallElem::operator-=(const HallElem& o) {
  for (const auto& [id, c] : o.terms_) add_term(id, -c);
  return *this;
}

HallElem& HallElem::operator*=(const QScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [id, x] : terms_) x *= c;
  return *this;
}

std::string HallElem::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [id, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ") u[" + id.to_string() + "]";
  }
  return s;
}

nlohmann::json HallElem::to_json() const {
  auto out = nlohmann::json::array();
  for (const auto& [id, c] : terms_) out.push_back({{"class", id.to_string()}, {"coeff", c.to_string()}});
  return out;
}

HallElem u(const HallCtx& ctx, const IsoClassId& id) {
  ctx.category().info(id);  // throws UnknownClass
  HallElem e(ctx.q());
  e.add_term(id, QScalar(ctx.q(), 1));
  return e;
}

HallElem hall_mul(const HallCtx& ctx, const HallElem& x, const HallElem& y) {
  HallElem out(ctx.q());
  for (const auto& [a, ca] : x.terms()) {
    for (const auto& [b, cb] : y.terms()) {
      const auto& consts = ctx.structure(a, b);
      if (consts.empty()) continue;
      const long e = euler_form(ctx.species(), a.dims, b.dims);
      const QScalar c = ca * cb * QScalar::sqrt_q_power(ctx.q(), static_cast<int>(e));
      for (const auto& [gamma, g] : consts) out.add_term(gamma, c * QScalar(ctx.q(), g));
    }
  }
  return out;
}

namespace {

QScalar class_weight(const HallCtx& ctx, const IsoClassId& id, GreenNormalization norm) {
  const ClassInfo& info = ctx.category().info(id);
  const mpz_class a = norm == GreenNormalization::ExtCard ? ext_self_card(info.rep) : info.aut_order;
  return QScalar(ctx.q(), mpq_class(1, 1) / mpq_class(a));
}

}  // namespace

QScalar green_form(const HallCtx& ctx, const HallElem& x, const HallElem& y, GreenNormalization norm) {
  QScalar s(ctx.q());
  for (const auto& [id, c] : x.terms()) {
    auto it = y.terms().find(id);
    if (it != y.terms().end()) s += c * it->second * class_weight(ctx, id, norm);
  }
  return s;
}

// ---------------------------------------------------------------- linear algebra

namespace {

using Row = std::vector<QScalar>;

std::size_t leading(const Row& r) {
  for (std::size_t i = 0; i < r.size(); ++i)
    if (!r[i].is_zero()) return i;
  return r.size();
}

/// Fully reduced row echelon form; rows sorted by pivot column.
class Echelon {
 public:
  bool insert(Row r) {
    for (const Row& b : rows_) {
      const std::size_t p = leading(b);
      if (!r[p].is_zero()) {
        const QScalar f = r[p];
        for (std::size_t i = p; i < r.size(); ++i) r[i] -= f * b[i];
      }
    }
    const std::size_t p = leading(r);
    if (p == r.size()) return false;
    const QScalar inv = r[p].inverse();
    for (auto& x : r) x *= inv;
    for (Row& b : rows_) {
      if (b[p].is_zero()) continue;
      const QScalar f = b[p];
      for (std::size_t i = 0; i < b.size(); ++i) b[i] -= f * r[i];
    }
    auto pos = std::lower_bound(rows_.begin(), rows_.end(), p,
                                [](const Row& b, std::size_t col) { return leading(b) < col; });
    rows_.insert(pos, std::move(r));
    return true;
  }
  const std::vector<Row>& rows() const { return rows_; }

 private:
  std::vector<Row> rows_;
};

std::vector<DimVec> proper_parts(const DimVec& nu) {
  std::vector<DimVec> out;
  DimVec b(nu.size(), 0);
  while (true) {
    if (total(b) != 0 && b != nu) out.push_back(b);
    std::size_t i = 0;
    while (i < b.size() && b[i] == nu[i]) b[i++] = 0;
    if (i == b.size()) break;
    ++b[i];
  }
  return out;
}

DimVec minus(const DimVec& a, const DimVec& b) {
  DimVec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Row coordinates(const HallElem& e, const std::vector<ClassInfo>& basis, long q) {
  Row r(basis.size(), QScalar(q));
  for (std::size_t i = 0; i < basis.size(); ++i) r[i] = e.coeff(basis[i].id);
  return r;
}

HallElem from_coordinates(const Row& r, const std::vector<ClassInfo>& basis, long q) {
  HallElem e(q);
  for (std::size_t i = 0; i < basis.size(); ++i) e.add_term(basis[i].id, r[i]);
  return e;
}

std::optional<mpq_class> rational_sqrt(const mpq_class& x) {
  if (x < 0) return std::nullopt;
  const mpz_class& n = x.get_num();
  const mpz_class& d = x.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpq_class r(sqrt(n), sqrt(d));
  r.canonicalize();
  return r;
}

bool positive(const mpq_class& c, const mpq_class& d, long q) {
  // sign of c + d sqrt(q)
  if (c >= 0 && d >= 0) return c > 0 || d > 0;
  if (c <= 0 && d <= 0) return false;
  const mpq_class lhs = c * c, rhs = d * d * q;
  return c > 0 ? lhs > rhs : rhs > lhs;
}

}  // namespace

std::optional<QScalar> sqrt_in_field(const QScalar& x) {
  const long q = x.q();
  const mpq_class& a = x.rational_part();
  const mpq_class& b = x.sqrt_part();
  std::optional<std::pair<mpq_class, mpq_class>> root;
  if (b == 0) {
    if (auto c = rational_sqrt(a)) {
      root = {{*c, 0}};
    } else if (auto d = rational_sqrt(a / q)) {
      root = {{0, *d}};
    }
  } else if (auto s = rational_sqrt(a * a - b * b * q)) {
    for (const mpq_class& c2 : {mpq_class((a + *s) / 2), mpq_class((a - *s) / 2)}) {
      auto c = rational_sqrt(c2);
      if (c && *c != 0) {
        root = {{*c, b / (2 * *c)}};
        break;
      }
    }
  }
  if (!root) return std::nullopt;
  auto [c, d] = *root;
  if (!positive(c, d, q) && (c != 0 || d != 0)) {
    c = -c;
    d = -d;
  }
  QScalar r(q, c, d);
  if (r * r != x) return std::nullopt;
  return r;
}

std::vector<HallElem> l_space(const HallCtx& ctx, const DimVec& nu) {
  const auto& basis = ctx.classes(nu);
  Echelon ech;
  for (const DimVec& b : proper_parts(nu)) {
    const DimVec g = minus(nu, b);
    for (const auto& cb : ctx.classes(b)) {
      for (const auto& cg : ctx.classes(g)) {
        ech.insert(coordinates(hall_mul(ctx, u(ctx, cb.id), u(ctx, cg.id)), basis, ctx.q()));
        if (ech.rows().size() == basis.size()) break;
      }
    }
  }
  std::vector<HallElem> out;
  for (const Row& r : ech.rows()) out.push_back(from_coordinates(r, basis, ctx.q()));
  return out;
}

LperpBasis lperp(const HallCtx& ctx, const DimVec& nu, GreenNormalization norm) {
  const auto& basis = ctx.classes(nu);
  const long q = ctx.q();
  Row w;
  for (const auto& c : basis) w.push_back(class_weight(ctx, c.id, norm));

  Echelon ech;
  for (const HallElem& l : l_space(ctx, nu)) {
    Row r = coordinates(l, basis, q);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] *= w[i];
    ech.insert(std::move(r));
  }
  // Nullspace: one vector per free column.
  std::vector<bool> pivot(basis.size(), false);
  for (const Row& r : ech.rows()) pivot[leading(r)] = true;
  std::vector<Row> null;
  for (std::size_t f = 0; f < basis.size(); ++f) {
    if (pivot[f]) continue;
    Row x(basis.size(), QScalar(q));
    x[f] = QScalar(q, 1);
    for (const Row& r : ech.rows()) x[leading(r)] = -r[f];
    null.push_back(std::move(x));
  }

  auto form = [&](const Row& x, const Row& y) {
    QScalar s(q);
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i] * w[i];
    return s;
  };
  std::vector<Row> ortho;
  std::vector<QScalar> norms;
  for (Row x : null) {
    for (std::size_t k = 0; k < ortho.size(); ++k) {
      const QScalar f = form(x, ortho[k]) / norms[k];
      for (std::size_t i = 0; i < x.size(); ++i) x[i] -= f * ortho[k][i];
    }
    norms.push_back(form(x, x));
    ortho.push_back(std::move(x));
  }

  LperpBasis out;
  std::vector<QScalar> roots;
  for (const QScalar& n : norms) {
    auto r = sqrt_in_field(n);
    if (!r) break;
    roots.push_back(*r);
  }
  out.orthonormal = roots.size() == norms.size();
  for (std::size_t k = 0; k < ortho.size(); ++k) {
    Row x = ortho[k];
    if (out.orthonormal) {
      const QScalar inv = roots[k].inverse();
      for (auto& c : x) c *= inv;
      out.norms.emplace_back(q, 1);
    } else {
      out.norms.push_back(norms[k]);
    }
    out.basis.push_back(from_coordinates(x, basis, q));
  }
  return out;
}

// ---------------------------------------------------------------- embeddings

std::string to_string(Sign s) { return s == Sign::Plus ? "+" : "-"; }

std::size_t pm_vertex(const SpeciesSpec& pm, Sign s, const std::string& base_id) {
  return pm.quiver().graph().index_of(product_id(to_string(s), base_id));
}

DimVec embed_dims(const SpeciesSpec& base, const SpeciesSpec& pm, Sign s, const DimVec& d) {
  if (d.size() != base.size()) fail(Errc::DimMismatch, "dimension vector length");
  DimVec out(pm.size(), 0);
  const auto& ids = base.quiver().graph().ids;
  for (std::size_t i = 0; i < ids.size(); ++i) out[pm_vertex(pm, s, ids[i])] = d[i];
  return out;
}

QuiverRep embed_rep(const HallCtx& pm, Sign s, const QuiverRep& m) {
  const SpeciesSpec& ps = pm.species();
  const SpeciesSpec& bs = m.species();
  const auto& ids = bs.quiver().graph().ids;
  const DimVec dims = embed_dims(bs, ps, s, m.dims());
  std::vector<std::vector<FqMatrix>> maps;
  for (std::size_t h = 0; h < ps.arrows().size(); ++h) {
    const auto [rows, cols] = arrow_shape(ps, dims, h);
    maps.emplace_back(static_cast<std::size_t>(ps.arrows()[h].copies), FqMatrix(rows, cols));
  }
  for (std::size_t h = 0; h < bs.arrows().size(); ++h) {
    const auto& ba = bs.arrows()[h];
    const std::size_t src = pm_vertex(ps, s, ids[ba.src]);
    const std::size_t tgt = pm_vertex(ps, s, ids[ba.tgt]);
    std::size_t found = ps.arrows().size();
    for (std::size_t k = 0; k < ps.arrows().size(); ++k)
      if (ps.arrows()[k].src == src && ps.arrows()[k].tgt == tgt) found = k;
    if (found == ps.arrows().size() || ps.arrows()[found].copies != ba.copies) {
      fail(Errc::InvalidInput, "target species is not the doubled quiver of the source");
    }
    for (int c = 0; c < ba.copies; ++c) maps[found][static_cast<std::size_t>(c)] = m.map(h, c);
  }
  return QuiverRep(pm.species_ptr(), dims, std::move(maps));
}

IsoClassId embed_pm(const HallCtx& pm, Sign s, const HallCtx& base, const IsoClassId& id) {
  return pm.category().classify(embed_rep(pm, s, base.category().representative(id)));
}

bool EmbeddingReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const EmbeddingCheck& c) { return c.ok(); });
}

nlohmann::json EmbeddingReport::to_json() const {
  auto arr = nlohmann::json::array();
  for (const auto& c : checks) {
    arr.push_back({{"sign", to_string(c.sign)},
                   {"alpha", c.alpha.to_string()},
                   {"beta", c.beta.to_string()},
                   {"gamma", c.gamma.to_string()},
                   {"euler", {c.euler_base, c.euler_pm}},
                   {"hall", {c.hall_base, c.hall_pm}},
                   {"ok", c.ok()}});
  }
  return {{"checks", arr}, {"ok", ok()}};
}

namespace {

void dimvecs_upto(const SpeciesSpec& s, int max_k, DimVec& cur, std::size_t i, std::vector<DimVec>& out) {
  if (i == cur.size()) {
    out.push_back(cur);
    return;
  }
  for (cur[i] = 0; k_total(s, cur) <= max_k; ++cur[i]) dimvecs_upto(s, max_k, cur, i + 1, out);
  cur[i] = 0;
}

long lookup(const HallTable& t, const IsoClassId& a, const IsoClassId& b) {
  auto it = t.find({a, b});
  return it == t.end() ? 0 : it->second;
}

}  // namespace

EmbeddingReport verify_embedding(const HallCtx& base, const HallCtx& pm, int max_k_total) {
  const SpeciesSpec& bs = base.species();
  std::vector<DimVec> dims;
  DimVec cur(bs.size(), 0);
  dimvecs_upto(bs, max_k_total, cur, 0, dims);
  std::sort(dims.begin(), dims.end());

  EmbeddingReport rep;
  for (Sign s : {Sign::Plus, Sign::Minus}) {
    std::map<IsoClassId, IsoClassId> image;
    auto embed = [&](const IsoClassId& id) {
      auto it = image.find(id);
      if (it == image.end()) it = image.emplace(id, embed_pm(pm, s, base, id)).first;
      return it->second;
    };
    for (const DimVec& a : dims) {
      for (const DimVec& b : dims) {
        const DimVec c = a + b;
        if (k_total(bs, c) > max_k_total) continue;
        const long eb = euler_form(bs, a, b);
        const long ep = euler_form(pm.species(), embed_dims(bs, pm.species(), s, a), embed_dims(bs, pm.species(), s, b));
        for (const auto& gamma : base.classes(c)) {
          const HallTable& tb = base.category().hall_table(gamma.id);
          const HallTable& tp = pm.category().hall_table(embed(gamma.id));
          for (const auto& alpha : base.classes(a)) {
            for (const auto& beta : base.classes(b)) {
              EmbeddingCheck chk;
              chk.sign = s;
              chk.alpha = alpha.id;
              chk.beta = beta.id;
              chk.gamma = gamma.id;
              chk.euler_base = eb;
              chk.euler_pm = ep;
              chk.hall_base = lookup(tb, alpha.id, beta.id);
              chk.hall_pm = lookup(tp, embed(alpha.id), embed(beta.id));
              rep.checks.push_back(std::move(chk));
            }
          }
        }
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------- evaluation

HallElem eval_nc(const HallCtx& ctx, const NCExpr& expr, const Binding& binding) {
  const long q = ctx.q();
  const HallElem one = u(ctx, ctx.category().zero_class());
  HallElem out(q);
  for (const auto& [word, c] : expr.terms()) {
    HallElem x = one;
    for (const auto& g : word) {
      auto it = binding.find(g);
      if (it == binding.end()) fail(Errc::UnboundGenerator, "generator '" + g + "' is not bound");
      x = hall_mul(ctx, x, it->second);
    }
    const QScalar den = eval_sqrt_q(c.denominator(), q);
    if (den.is_zero()) fail(Errc::InvalidInput, "coefficient denominator vanishes at v = sqrt(q)");
    out += x * (eval_sqrt_q(c.numerator(), q) / den);
  }
  return out;
}

// ---------------------------------------------------------------- relations

const std::vector<Relation>& all_relations() {
  static const std::vector<Relation> all = {Relation::OnePlus, Relation::TwoPlus, Relation::OneMinus,
                                            Relation::TwoMinus, Relation::OnePm,  Relation::TwoPm,
                                            Relation::ThreePm};
  return all;
}

std::string to_string(Relation r) {
  switch (r) {
    case Relation::OnePlus: return "1+";
    case Relation::TwoPlus: return "2+";
    case Relation::OneMinus: return "1-";
    case Relation::TwoMinus: return "2-";
    case Relation::OnePm: return "1pm";
    case Relation::TwoPm: return "2pm";
    case Relation::ThreePm: return "3pm";
  }
  return "?";
}

std::vector<Relation> parse_relations(const std::string& text) {
  std::vector<Relation> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::string t;
    for (char ch : tok)
      if (ch != ' ' && ch != '(' && ch != ')' && ch != '^' && ch != '{' && ch != '}' && ch != '\\') t += ch;
    for (const char* alt : {"±", "+-", "pm"}) {
      const auto pos = t.find(alt);
      if (pos != std::string::npos) t = t.substr(0, pos) + "pm";
    }
    if (t == "all") {
      out.insert(out.end(), all_relations().begin(), all_relations().end());
      continue;
    }
    bool hit = false;
    for (Relation r : all_relations()) {
      if (to_string(r) == t) {
        out.push_back(r);
        hit = true;
      }
    }
    if (!hit) fail(Errc::InvalidInput, "unknown relation '" + tok + "'");
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.empty()) fail(Errc::InvalidInput, "empty relation set");
  return out;
}

nlohmann::json RelationResult::to_json() const {
  return {{"relation", relation}, {"instance", instance}, {"status", status}, {"residue_terms", residue_terms},
          {"millis", millis}};
}

namespace {

NCExpr serre_sum(const std::string& p, const std::string& s, int N, int d) {
  const NCExpr P = NCExpr::gen(p), S = NCExpr::gen(s);
  NCExpr e;
  for (int k = 0; k <= N; ++k) e += (power(P, k) * S * power(P, N - k)) * RatLaurent((k % 2 ? -1 : 1) * qbinom(N, k, d));
  return e;
}

NCExpr commutator(const std::string& a, const std::string& b) {
  const NCExpr A = NCExpr::gen(a), B = NCExpr::gen(b);
  return A * B - B * A;
}

std::string gen_name(Sign s, const std::string& id) { return "u" + to_string(s) + "_" + id; }

}  // namespace

std::vector<RelationResult> verify_relations(const HallCtx& pm, const std::vector<Relation>& which,
                                             const RelationOptions& opts) {
  const SpeciesSpec& ps = pm.species();
  const ValuedGraph& graph = ps.quiver().graph();
  const std::string plus_prefix = product_id("+", "");
  std::vector<std::string> ids;
  for (const auto& id : graph.ids)
    if (id.rfind(plus_prefix, 0) == 0) ids.push_back(id.substr(plus_prefix.size()));
  if (ids.empty() || 2 * ids.size() != ps.size()) fail(Errc::InvalidInput, "context is not a doubled quiver");
  const std::size_t n = ids.size();
  const CartanMatrix cartan = cartan_from_graph(graph);

  Binding binding;
  std::vector<DimVec> simple(ps.size());
  for (Sign s : {Sign::Plus, Sign::Minus}) {
    for (const auto& id : ids) {
      const std::size_t v = pm_vertex(ps, s, id);
      binding.emplace(gen_name(s, id), u(pm, pm.simple_class(v)));
      simple[v] = DimVec(ps.size(), 0);
      simple[v][v] = 1;
    }
  }
  auto sym = [&](Sign si, std::size_t i, Sign sj, std::size_t j) {
    const DimVec& a = simple[pm_vertex(ps, si, ids[i])];
    const DimVec& b = simple[pm_vertex(ps, sj, ids[j])];
    return euler_form(ps, a, b) + euler_form(ps, b, a);
  };
  auto a_entry = [&](std::size_t i, std::size_t j) {
    return cartan(pm_vertex(ps, Sign::Plus, ids[i]), pm_vertex(ps, Sign::Plus, ids[j]));
  };
  auto d_of = [&](std::size_t i) { return static_cast<int>(graph.d_vertex[pm_vertex(ps, Sign::Plus, ids[i])]); };

  std::vector<RelationResult> out;
  auto run = [&](Relation r, nlohmann::json instance, const NCExpr& e) {
    const auto t0 = std::chrono::steady_clock::now();
    const HallElem value = eval_nc(pm, e, binding);
    const auto t1 = std::chrono::steady_clock::now();
    RelationResult res;
    res.relation = to_string(r);
    res.instance = std::move(instance);
    res.status = value.is_zero() ? "ok" : "violated";
    res.residue_terms = value.terms().size();
    res.millis = opts.timing ? std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count() : 0;
    out.push_back(std::move(res));
  };
  auto vacuous = [&](Relation r, nlohmann::json instance) {
    RelationResult res;
    res.relation = to_string(r);
    res.instance = std::move(instance);
    res.status = "vacuous";
    out.push_back(std::move(res));
  };

  for (Relation r : which) {
    switch (r) {
      case Relation::OnePlus:
      case Relation::OneMinus: {
        const Sign s = r == Relation::OnePlus ? Sign::Plus : Sign::Minus;
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const int N = static_cast<int>(1 - a_entry(i, j));
            run(r, {{"i", ids[i]}, {"j", ids[j]}, {"exponent", N}},
                serre_sum(gen_name(s, ids[i]), gen_name(s, ids[j]), N, d_of(i)));
          }
        }
        break;
      }
      case Relation::TwoPlus:
      case Relation::TwoMinus: {
        const Sign s = r == Relation::TwoPlus ? Sign::Plus : Sign::Minus;
        bool any = false;
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            if (i == j || sym(s, i, s, j) != 0) continue;
            any = true;
            run(r, {{"i", ids[i]}, {"j", ids[j]}}, commutator(gen_name(s, ids[i]), gen_name(s, ids[j])));
          }
        }
        if (!any) vacuous(r, {{"reason", "no pair with (i,j) = 0"}});
        break;
      }
      case Relation::OnePm:
        for (std::size_t i = 0; i < n; ++i) {
          const std::string p = gen_name(Sign::Plus, ids[i]), m = gen_name(Sign::Minus, ids[i]);
          run(r, {{"i", ids[i]}, {"powers", "+"}}, serre_sum(p, m, 3, d_of(i)));
          run(r, {{"i", ids[i]}, {"powers", "-"}}, serre_sum(m, p, 3, d_of(i)));
        }
        break;
      case Relation::TwoPm: {
        // Imaginary generators are the vectors of L_nu^perp for non-simple nu.
        std::size_t found = 0;
        std::vector<DimVec> scan;
        DimVec cur(n, 0);
        dimvecs_upto(ps, opts.imaginary_scan, cur, 0, scan);
        for (const DimVec& nu : scan) {
          if (total(nu) < 2) continue;
          DimVec full(ps.size(), 0);
          for (std::size_t i = 0; i < n; ++i) full[pm_vertex(ps, Sign::Plus, ids[i])] = nu[i];
          if (k_total(ps, full) > opts.imaginary_scan) continue;
          found += lperp(pm, full).basis.size();
        }
        if (found != 0) {
          fail(Errc::CapExceeded, std::to_string(found) +
                                      " imaginary generators found; their relations need products beyond the caps");
        }
        vacuous(r, {{"reason", "no imaginary generators"}, {"scanned_k_dim", opts.imaginary_scan}});
        break;
      }
      case Relation::ThreePm: {
        bool any = false;
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            if (sym(Sign::Plus, i, Sign::Minus, j) != 0) continue;
            any = true;
            run(r, {{"i", ids[i]}, {"j", ids[j]}, {"form", "+-"}},
                commutator(gen_name(Sign::Plus, ids[i]), gen_name(Sign::Minus, ids[j])));
            run(r, {{"i", ids[i]}, {"j", ids[j]}, {"form", "-+"}},
                commutator(gen_name(Sign::Minus, ids[i]), gen_name(Sign::Plus, ids[j])));
          }
        }
        if (!any) vacuous(r, {{"reason", "no pair with (i+, j-) = 0"}});
        break;
      }
    }
  }
  return out;
}

void require_ok(const std::vector<RelationResult>& results) {
  for (const auto& r : results) {
    if (r.status == "violated") {
      fail(Errc::RelationViolated, "relation " + r.relation + " " + r.instance.dump() + " leaves " +
                                       std::to_string(r.residue_terms) + " residue terms");
    }
  }
}

}  // namespace qhall
