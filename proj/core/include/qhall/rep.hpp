#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <vector>

#include "qhall/species.hpp"

namespace qhall {

/// k_i-dimensions per vertex.
using DimVec = std::vector<int>;

DimVec operator+(const DimVec& a, const DimVec& b);
/// Sum of the entries (used for grading order).
int total(const DimVec& d);
/// Sum of n_i * d_i: dimension over the base field.
int k_total(const SpeciesSpec& s, const DimVec& d);
std::string to_string(const DimVec& d);
/// Parses "1,0,2".
DimVec parse_dimvec(const std::string& text);

/// Representation of a species. V_i = k^{n_i d_i} with k_i acting through J_i;
/// arrow h, copy c is a k-matrix L^{n_src} -> V_tgt commuting with the
/// k_tgt-actions.
class QuiverRep {
 public:
  QuiverRep(SpeciesPtr species, DimVec dims, std::vector<std::vector<FqMatrix>> maps);
  static QuiverRep zero(SpeciesPtr species, DimVec dims);
  /// Inverse of tuple(): concatenated row-major arrow matrices.
  static QuiverRep from_tuple(SpeciesPtr species, DimVec dims, const std::vector<FElem>& tuple);

  const SpeciesSpec& species() const noexcept { return *species_; }
  const SpeciesPtr& species_ptr() const noexcept { return species_; }
  const DimVec& dims() const noexcept { return dims_; }
  const FqMatrix& map(std::size_t h, int copy) const { return maps_.at(h).at(static_cast<std::size_t>(copy)); }
  const std::vector<std::vector<FqMatrix>>& maps() const noexcept { return maps_; }
  int k_dim(std::size_t i) const { return dims_.at(i) * species_->degree(i); }
  int k_total() const { return qhall::k_total(*species_, dims_); }
  FqMatrix vertex_structure(std::size_t i) const { return species_->vertex_structure(i, dims_.at(i)); }
  std::vector<FElem> tuple() const;

 private:
  SpeciesPtr species_;
  DimVec dims_;
  std::vector<std::vector<FqMatrix>> maps_;
};

/// Shape of arrow h's matrices for the given dims.
std::pair<int, int> arrow_shape(const SpeciesSpec& s, const DimVec& dims, std::size_t h);
std::size_t tuple_length(const SpeciesSpec& s, const DimVec& dims);

QuiverRep simple_rep(SpeciesPtr species, std::size_t vertex);
QuiverRep direct_sum(const QuiverRep& a, const QuiverRep& b);

/// Isomorphism class id: dims plus canonical arrow-tuple bytes. Ordered by
/// total dimension, then dims, then bytes, so the zero class comes first.
struct IsoClassId {
  DimVec dims;
  std::string canonical;

  std::strong_ordering operator<=>(const IsoClassId& o) const;
  bool operator==(const IsoClassId& o) const = default;
  /// "1,1:0a01" (hex of the canonical bytes).
  std::string to_string() const;
  static IsoClassId parse(const std::string& text);
};

int hom_dim(const QuiverRep& m, const QuiverRep& n);
long euler_form(const SpeciesSpec& s, const DimVec& a, const DimVec& b);
/// hom_dim - euler_form; throws NegativeExt if that is negative.
int ext_dim(const QuiverRep& m, const QuiverRep& n);
mpz_class ext_self_card(const QuiverRep& m);

struct Submodule {
  QuiverRep module;
  QuiverRep quotient;
  /// Per vertex: k-basis of U_i as rows (reduced echelon form).
  std::vector<FqMatrix> basis;
};

struct Caps {
  int enum_dim = 8;   ///< max total k-dimension for enumeration
  int canon_dim = 6;  ///< max total k-dimension for classifying arbitrary modules
  std::uint64_t max_tuples = std::uint64_t{1} << 22;
  std::uint64_t max_submodules = 200000;
};

/// All submodules with their quotients in new bases adapted to U ⊆ V.
/// Deterministic order (by echelon key). Throws CapExceeded.
std::vector<Submodule> submodules(const QuiverRep& m, const Caps& caps = {});

}  // namespace qhall
