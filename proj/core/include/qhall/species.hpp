#pragma once

#include <memory>
#include <vector>

#include "qhall/cartan.hpp"
#include "qhall/fq_matrix.hpp"

namespace qhall {

/// k_i = F_{q^d} realized on k^d by the companion matrix of its modulus.
struct VertexField {
  int degree = 1;
  FPoly modulus;
  FqMatrix companion;
  /// Multiplicative generator of k_i as a d x d matrix in the companion's span.
  FqMatrix primitive;
  /// F_p-basis of k_i (elements b * C^t) as d x d matrices.
  std::vector<FqMatrix> additive_basis;
  /// Order of k_i.
  long order = 0;
};

/// Arrow bimodule: `copies` copies of L = F_{q^l}, l = lcm(d_src, d_tgt).
struct ArrowSpec {
  std::size_t src = 0;
  std::size_t tgt = 0;
  int copies = 1;
  int ext_degree = 1;
  FPoly modulus;
  /// Columns are the L-coordinates of theta_src^t, t < d_src (embedding k_src -> L).
  FqMatrix src_embed;
  /// Multiplication by theta_tgt (image of the target field generator) on L.
  FqMatrix tgt_theta;
  /// Multiplication by x^t on L, t < l.
  std::vector<FqMatrix> basis_mult;
};

class SpeciesSpec {
 public:
  SpeciesSpec(ValuedQuiver quiver, long q);

  const ValuedQuiver& quiver() const noexcept { return quiver_; }
  long q() const noexcept { return field_.order(); }
  const FiniteField& field() const noexcept { return field_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  const VertexField& vertex(std::size_t i) const { return vertices_.at(i); }
  const std::vector<ArrowSpec>& arrows() const noexcept { return arrows_; }
  int degree(std::size_t i) const { return vertices_.at(i).degree; }

  /// J_i on k^{n d_i}.
  FqMatrix vertex_structure(std::size_t i, int n) const;
  /// I_n ⊗ R(theta_tgt) on L^n for arrow h.
  FqMatrix arrow_theta(std::size_t h, int n) const;
  /// Extends a k_src-linear map k_src^{m} -> k_src^{n} (as a k-matrix of size
  /// n d x m d) to L^{m} -> L^{n}.
  FqMatrix lift(std::size_t h, const FqMatrix& f) const;
  /// u ↦ (x^t ⊗ u) as a k-linear map k_src^{n} -> L^{n}; composing with an
  /// arrow map gives the structure operators used for submodule closure.
  FqMatrix scalar_embed(std::size_t h, int n, int t) const;
  /// The element of L with coordinates a, as its multiplication matrix.
  FqMatrix mult_matrix(std::size_t h, const std::vector<FElem>& a) const;

 private:
  ValuedQuiver quiver_;
  FiniteField field_;
  std::vector<VertexField> vertices_;
  std::vector<ArrowSpec> arrows_;
};

using SpeciesPtr = std::shared_ptr<const SpeciesSpec>;

/// Builds the composite-field species of an acyclic valued quiver over F_q.
/// Throws UnsupportedValuation, FieldTableMiss, InvalidInput.
SpeciesPtr species_from_quiver(const ValuedQuiver& quiver, long field_order);

/// k-dimension of the tensor algebra: sum over all paths of the tensor
/// product dimensions.
long tensor_algebra_dim(const SpeciesSpec& s);

/// Matrix of p(C) for a polynomial p over F_q given by its coefficients.
FqMatrix poly_of_matrix(const FiniteField& f, const std::vector<FElem>& p, const FqMatrix& c);
FqMatrix companion_matrix(const FiniteField& f, const FPoly& modulus);

}  // namespace qhall
