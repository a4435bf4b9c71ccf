#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qhall/modcat.hpp"
#include "qhall/presver.hpp"
#include "qhall/qscalar.hpp"

namespace qhall {

/// Twisted Ringel-Hall algebra of a species at v = sqrt(q). Structure
/// constants are computed on first use and cached.
class HallCtx {
 public:
  /// max_k_total bounds the total k-dimension of every product.
  explicit HallCtx(SpeciesPtr species, int max_k_total = 6, Caps caps = {});
  HallCtx(const HallCtx&) = delete;
  HallCtx& operator=(const HallCtx&) = delete;

  const SpeciesSpec& species() const noexcept { return cat_.species(); }
  const SpeciesPtr& species_ptr() const noexcept { return cat_.species_ptr(); }
  const ModuleCategory& category() const noexcept { return cat_; }
  long q() const noexcept { return species().q(); }
  int max_k_total() const noexcept { return max_k_total_; }

  /// Throws CapExceeded when d is beyond the grading cap.
  void check_cap(const DimVec& d) const;
  const std::vector<ClassInfo>& classes(const DimVec& d) const;
  IsoClassId simple_class(std::size_t vertex) const;
  /// g^gamma_{alpha,beta} for every gamma with nonzero count, in id order.
  const std::vector<std::pair<IsoClassId, long>>& structure(const IsoClassId& alpha, const IsoClassId& beta) const;

 private:
  using Key = std::pair<IsoClassId, IsoClassId>;
  using Products = std::map<Key, std::vector<std::pair<IsoClassId, long>>>;
  const Products& products(const DimVec& d) const;

  ModuleCategory cat_;
  int max_k_total_;
  mutable std::mutex mutex_;
  mutable std::map<DimVec, std::unique_ptr<Products>> products_;
};

/// Finite linear combination of basis elements u_alpha.
class HallElem {
 public:
  explicit HallElem(long q) : q_(q) {}
  long q() const noexcept { return q_; }
  const std::map<IsoClassId, QScalar>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  QScalar coeff(const IsoClassId& id) const;
  void add_term(const IsoClassId& id, const QScalar& c);

  HallElem& operator+=(const HallElem& o);
  HallElem& operator-=(const HallElem& o);
  HallElem& operator*=(const QScalar& c);
  friend HallElem operator+(HallElem a, const HallElem& b) { return a += b; }
  friend HallElem operator-(HallElem a, const HallElem& b) { return a -= b; }
  friend HallElem operator*(HallElem a, const QScalar& c) { return a *= c; }
  friend bool operator==(const HallElem& a, const HallElem& b) { return a.q_ == b.q_ && a.terms_ == b.terms_; }

  std::string to_string() const;
  nlohmann::json to_json() const;

 private:
  long q_;
  std::map<IsoClassId, QScalar> terms_;
};

/// Basis element u_alpha; throws UnknownClass.
HallElem u(const HallCtx& ctx, const IsoClassId& id);
HallElem hall_mul(const HallCtx& ctx, const HallElem& x, const HallElem& y);

enum class GreenNormalization {
  ExtCard,   ///< a_alpha = |Ext^1(M, M)|
  AutOrder,  ///< a_alpha = |Aut M|
};

QScalar green_form(const HallCtx& ctx, const HallElem& x, const HallElem& y,
                   GreenNormalization norm = GreenNormalization::ExtCard);

/// Reduced echelon basis of L_nu (pivot: first nonzero coefficient in id order).
std::vector<HallElem> l_space(const HallCtx& ctx, const DimVec& nu);

struct LperpBasis {
  std::vector<HallElem> basis;
  /// [x, x] for each returned vector (all 1 when orthonormal).
  std::vector<QScalar> norms;
  bool orthonormal = false;
};

/// Orthogonal complement of L_nu in H_nu under the Green form. Orthonormalized
/// when every norm has a square root in Q(sqrt q); otherwise orthogonal.
LperpBasis lperp(const HallCtx& ctx, const DimVec& nu, GreenNormalization norm = GreenNormalization::ExtCard);

/// Square root inside Q(sqrt q) if one exists.
std::optional<QScalar> sqrt_in_field(const QScalar& x);

enum class Sign { Plus, Minus };
std::string to_string(Sign s);

/// Vertex of the doubled quiver carrying copy `s` of base vertex i.
std::size_t pm_vertex(const SpeciesSpec& pm, Sign s, const std::string& base_id);
/// Dimension vector of the doubled quiver supported on the s-copy.
DimVec embed_dims(const SpeciesSpec& base, const SpeciesSpec& pm, Sign s, const DimVec& d);
QuiverRep embed_rep(const HallCtx& pm, Sign s, const QuiverRep& m);
IsoClassId embed_pm(const HallCtx& pm, Sign s, const HallCtx& base, const IsoClassId& id);

struct EmbeddingCheck {
  Sign sign = Sign::Plus;
  IsoClassId alpha, beta, gamma;
  long euler_base = 0, euler_pm = 0;
  long hall_base = 0, hall_pm = 0;
  bool ok() const { return euler_base == euler_pm && hall_base == hall_pm; }
};

struct EmbeddingReport {
  std::vector<EmbeddingCheck> checks;
  bool ok() const;
  nlohmann::json to_json() const;
};

/// All triples alpha, beta, gamma (|alpha| + |beta| = |gamma|) with total
/// k-dimension at most max_k_total, both signs.
EmbeddingReport verify_embedding(const HallCtx& base, const HallCtx& pm, int max_k_total = 3);

using Binding = std::map<std::string, HallElem>;

/// Substitutes generators and evaluates coefficients at v = sqrt(q).
/// Throws UnboundGenerator, CapExceeded.
HallElem eval_nc(const HallCtx& ctx, const NCExpr& expr, const Binding& binding);

/// Relation families asserted to hold inside H of the doubled quiver.
enum class Relation { OnePlus, TwoPlus, OneMinus, TwoMinus, OnePm, TwoPm, ThreePm };

const std::vector<Relation>& all_relations();
std::string to_string(Relation r);
/// Accepts "1+", "(1^+)", "1pm", "(1^pm)", "1±" and the like; "all" expands.
std::vector<Relation> parse_relations(const std::string& text);

struct RelationResult {
  std::string relation;
  nlohmann::json instance;
  std::string status;  ///< "ok", "violated" or "vacuous"
  std::size_t residue_terms = 0;
  long millis = 0;
  nlohmann::json to_json() const;
};

struct RelationOptions {
  bool timing = true;
  /// Largest total k-dimension scanned for imaginary generators (L_nu^perp != 0).
  int imaginary_scan = 3;
};

/// Generators u_i^{+/-} are the simples of the doubled quiver's two copies.
std::vector<RelationResult> verify_relations(const HallCtx& pm, const std::vector<Relation>& which,
                                             const RelationOptions& opts = {});
/// Throws RelationViolated naming the first violated instance.
void require_ok(const std::vector<RelationResult>& results);

}  // namespace qhall
