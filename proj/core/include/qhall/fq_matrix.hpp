#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "qhall/finite_field.hpp"

namespace qhall {

/// Dense row-major matrix over F_q. Arithmetic needs the field, passed explicitly.
class FqMatrix {
 public:
  FqMatrix() = default;
  FqMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols), 0) {}
  static FqMatrix identity(int n);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  FElem& operator()(int r, int c) { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
  FElem operator()(int r, int c) const { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
  const std::vector<FElem>& data() const noexcept { return data_; }
  std::vector<FElem>& data() noexcept { return data_; }
  bool is_zero() const;

  FqMatrix block(int r0, int c0, int nr, int nc) const;
  void set_block(int r0, int c0, const FqMatrix& b);
  FqMatrix transpose() const;
  std::vector<FElem> row(int r) const;
  std::vector<FElem> col(int c) const;

  auto operator<=>(const FqMatrix&) const = default;

  std::string to_string() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<FElem> data_;
};

FqMatrix mul(const FiniteField& f, const FqMatrix& a, const FqMatrix& b);
FqMatrix add(const FiniteField& f, const FqMatrix& a, const FqMatrix& b);
FqMatrix sub(const FiniteField& f, const FqMatrix& a, const FqMatrix& b);
FqMatrix scale(const FiniteField& f, FElem c, const FqMatrix& a);
std::vector<FElem> apply(const FiniteField& f, const FqMatrix& a, const std::vector<FElem>& x);

/// I_n ⊗ a, i.e. a repeated n times along the diagonal.
FqMatrix repeat_diag(const FqMatrix& a, int n);
FqMatrix vstack(const FqMatrix& a, const FqMatrix& b);
FqMatrix from_rows(const std::vector<std::vector<FElem>>& rows, int cols);

/// Reduces in place to reduced row echelon form; returns pivot columns.
std::vector<int> rref(const FiniteField& f, FqMatrix& m);
int rank(const FiniteField& f, FqMatrix m);
/// Rows form an RREF basis of the right kernel {x : m x = 0}.
FqMatrix nullspace(const FiniteField& f, const FqMatrix& m);
std::optional<FqMatrix> inverse(const FiniteField& f, const FqMatrix& m);

/// Incremental row-echelon span used for subspace closures.
class Span {
 public:
  explicit Span(int dim) : dim_(dim) {}
  int dim() const noexcept { return dim_; }
  int rank() const noexcept { return static_cast<int>(rows_.size()); }
  /// Returns false if v was already in the span.
  bool insert(const FiniteField& f, std::vector<FElem> v);
  bool contains(const FiniteField& f, std::vector<FElem> v) const;
  /// Unique reduced echelon basis.
  FqMatrix basis(const FiniteField& f) const;

 private:
  void reduce(const FiniteField& f, std::vector<FElem>& v) const;
  int dim_;
  std::vector<std::vector<FElem>> rows_;  // echelon, pivot = first nonzero, normalized to 1
  std::vector<int> pivots_;
};

}  // namespace qhall
