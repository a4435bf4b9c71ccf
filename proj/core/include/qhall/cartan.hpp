#pragma once

#include <string>
#include <vector>

#include "qhall/int_matrix.hpp"

namespace qhall {

/// Symmetrizable generalized Cartan matrix over an ordered list of vertex ids.
///
/// Construction checks a_ii = 2, a_ij <= 0 off the diagonal, matching zero
/// patterns and symmetrizability; the minimal symmetrizer is kept alongside.
class CartanMatrix {
 public:
  CartanMatrix(std::vector<std::string> ids, IntMatrix entries);
  /// Ids default to "1", "2", ...
  explicit CartanMatrix(IntMatrix entries);

  std::size_t size() const noexcept { return ids_.size(); }
  const std::vector<std::string>& ids() const noexcept { return ids_; }
  const IntMatrix& entries() const noexcept { return entries_; }
  long operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }
  const std::vector<long>& symmetrizer() const noexcept { return symmetrizer_; }

  friend bool operator==(const CartanMatrix& a, const CartanMatrix& b) {
    return a.ids_ == b.ids_ && a.entries_ == b.entries_;
  }

 private:
  std::vector<std::string> ids_;
  IntMatrix entries_;
  std::vector<long> symmetrizer_;
};

/// Symmetrizable Borcherds-Cartan matrix: real indices have a_ii = 2,
/// imaginary ones a_ii <= 0.
struct BorcherdsCartanMatrix {
  std::vector<std::string> ids;
  IntMatrix entries;
  std::vector<bool> real;
};

/// Valued graph (I, d): edge valuations d_ij and a vertex symmetrizer d_i with
/// d_ij * d_i = d_ji * d_j, gcd(d_i) = 1.
struct ValuedGraph {
  std::vector<std::string> ids;
  std::vector<long> d_vertex;
  IntMatrix d_edge;

  std::size_t size() const noexcept { return ids.size(); }
  std::size_t index_of(const std::string& id) const;
  /// Throws Errc::InvalidInput or Errc::NotSymmetrizable on a violated invariant.
  void validate() const;

  friend bool operator==(const ValuedGraph&, const ValuedGraph&) = default;
};

struct Arrow {
  std::size_t src = 0;
  std::size_t tgt = 0;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// A valued graph with one chosen orientation per valued edge.
class ValuedQuiver {
 public:
  /// Arrows must cover exactly the pairs with d_ij != 0, once each. The graph
  /// must be connected; oriented cycles are rejected unless allow_cycles.
  ValuedQuiver(ValuedGraph graph, std::vector<Arrow> arrows, bool allow_cycles = false);

  const ValuedGraph& graph() const noexcept { return graph_; }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  std::size_t size() const noexcept { return graph_.size(); }
  /// d_{src,tgt}: dimension of the arrow bimodule over the source field.
  long src_val(const Arrow& a) const { return graph_.d_edge(a.src, a.tgt); }
  /// d_{tgt,src}: dimension over the target field.
  long dst_val(const Arrow& a) const { return graph_.d_edge(a.tgt, a.src); }
  bool acyclic() const;

  friend bool operator==(const ValuedQuiver&, const ValuedQuiver&) = default;

 private:
  ValuedGraph graph_;
  std::vector<Arrow> arrows_;
};

/// Minimal positive symmetrizer of a square integer matrix: d_i a_ij = d_j a_ji,
/// gcd 1 on each connected component. Throws Errc::NotSymmetrizable.
std::vector<long> symmetrizer(const IntMatrix& entries);
inline std::vector<long> symmetrizer(const CartanMatrix& c) { return c.symmetrizer(); }

CartanMatrix cartan_from_graph(const ValuedGraph& g);
ValuedGraph graph_from_cartan(const CartanMatrix& c);

/// [[C, -2n Id], [-2n Id, C]] with ids "+×i" then "-×i".
CartanMatrix c_2n(const CartanMatrix& c, int n);
inline CartanMatrix c_pm(const CartanMatrix& c) { return c_2n(c, 1); }

/// Product valued quiver on I x I'; vertex "a×b", symmetrizer d_a d'_b.
/// Arrows: Omega x I' first, then I x Omega'.
ValuedQuiver product_quiver(const ValuedQuiver& a, const ValuedQuiver& b);

/// Single arrow "+" -> "-" with valuation (2n, 2n).
ValuedQuiver bridge_quiver(int n = 1);

/// (+ -(2n,2n)-> -) x q; n = 1 gives the doubled quiver.
ValuedQuiver doubled_quiver(const ValuedQuiver& q, int n);
inline ValuedQuiver pm_quiver(const ValuedQuiver& q) { return doubled_quiver(q, 1); }

struct BorcherdsIndex {
  std::string id;
  long self_pairing = 0;
  bool is_simple = false;
};

/// a_ij = 2 (i,j) / (i,i) on real rows, a_ij = (i,j) on imaginary rows.
/// Throws Errc::DivisibilityViolation when a real row is not integral.
BorcherdsCartanMatrix borcherds_from_form(const std::vector<BorcherdsIndex>& index_data,
                                          const IntMatrix& pairings);

/// Id of a product vertex.
std::string product_id(const std::string& a, const std::string& b);

}  // namespace qhall
