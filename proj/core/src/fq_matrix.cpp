#include "qhall/fq_matrix.hpp"

#include "qhall/error.hpp"

namespace qhall {

FqMatrix FqMatrix::identity(int n) {
  FqMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool FqMatrix::is_zero() const {
  for (auto x : data_) {
    if (x != 0) return false;
  }
  return true;
}

FqMatrix FqMatrix::block(int r0, int c0, int nr, int nc) const {
  FqMatrix b(nr, nc);
  for (int r = 0; r < nr; ++r) {
    for (int c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  }
  return b;
}

void FqMatrix::set_block(int r0, int c0, const FqMatrix& b) {
  for (int r = 0; r < b.rows(); ++r) {
    for (int c = 0; c < b.cols(); ++c) (*this)(r0 + r, c0 + c) = b(r, c);
  }
}

FqMatrix FqMatrix::transpose() const {
  FqMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

std::vector<FElem> FqMatrix::row(int r) const {
  return {data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_};
}

std::vector<FElem> FqMatrix::col(int c) const {
  std::vector<FElem> v(static_cast<std::size_t>(rows_));
  for (int r = 0; r < rows_; ++r) v[static_cast<std::size_t>(r)] = (*this)(r, c);
  return v;
}

std::string FqMatrix::to_string() const {
  std::string s = "[";
  for (int r = 0; r < rows_; ++r) {
    s += r ? ",[" : "[";
    for (int c = 0; c < cols_; ++c) {
      if (c) s += ",";
      s += std::to_string((*this)(r, c));
    }
    s += "]";
  }
  return s + "]";
}

FqMatrix mul(const FiniteField& f, const FqMatrix& a, const FqMatrix& b) {
  if (a.cols() != b.rows()) fail(Errc::DimMismatch, "matrix product shape mismatch");
  FqMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      const FElem x = a(i, k);
      if (x == 0) continue;
      for (int j = 0; j < b.cols(); ++j) {
        const FElem y = b(k, j);
        if (y != 0) c(i, j) = f.add(c(i, j), f.mul(x, y));
      }
    }
  }
  return c;
}

FqMatrix add(const FiniteField& f, const FqMatrix& a, const FqMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) fail(Errc::DimMismatch, "matrix sum shape mismatch");
  FqMatrix c = a;
  for (std::size_t i = 0; i < c.data().size(); ++i) c.data()[i] = f.add(a.data()[i], b.data()[i]);
  return c;
}

FqMatrix sub(const FiniteField& f, const FqMatrix& a, const FqMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) fail(Errc::DimMismatch, "matrix difference shape mismatch");
  FqMatrix c = a;
  for (std::size_t i = 0; i < c.data().size(); ++i) c.data()[i] = f.sub(a.data()[i], b.data()[i]);
  return c;
}

FqMatrix scale(const FiniteField& f, FElem s, const FqMatrix& a) {
  FqMatrix c = a;
  for (auto& x : c.data()) x = f.mul(s, x);
  return c;
}

std::vector<FElem> apply(const FiniteField& f, const FqMatrix& a, const std::vector<FElem>& x) {
  std::vector<FElem> y(static_cast<std::size_t>(a.rows()), 0);
  for (int i = 0; i < a.rows(); ++i) {
    FElem s = 0;
    for (int j = 0; j < a.cols(); ++j) {
      if (a(i, j) && x[static_cast<std::size_t>(j)]) s = f.add(s, f.mul(a(i, j), x[static_cast<std::size_t>(j)]));
    }
    y[static_cast<std::size_t>(i)] = s;
  }
  return y;
}

FqMatrix repeat_diag(const FqMatrix& a, int n) {
  FqMatrix m(a.rows() * n, a.cols() * n);
  for (int b = 0; b < n; ++b) m.set_block(b * a.rows(), b * a.cols(), a);
  return m;
}

FqMatrix vstack(const FqMatrix& a, const FqMatrix& b) {
  if (a.rows() == 0) return b;
  if (b.rows() == 0) return a;
  if (a.cols() != b.cols()) fail(Errc::DimMismatch, "vstack width mismatch");
  FqMatrix m(a.rows() + b.rows(), a.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), 0, b);
  return m;
}

FqMatrix from_rows(const std::vector<std::vector<FElem>>& rows, int cols) {
  FqMatrix m(static_cast<int>(rows.size()), cols);
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < cols; ++c) m(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  }
  return m;
}

std::vector<int> rref(const FiniteField& f, FqMatrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int sel = -1;
    for (int r = row; r < m.rows(); ++r) {
      if (m(r, col) != 0) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != row) {
      for (int c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
    }
    const FElem inv = f.inv(m(row, col));
    for (int c = col; c < m.cols(); ++c) m(row, c) = f.mul(inv, m(row, c));
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const FElem factor = m(r, col);
      for (int c = col; c < m.cols(); ++c) m(r, c) = f.sub(m(r, c), f.mul(factor, m(row, c)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int rank(const FiniteField& f, FqMatrix m) { return static_cast<int>(rref(f, m).size()); }

FqMatrix nullspace(const FiniteField& f, const FqMatrix& m) {
  FqMatrix r = m;
  const auto pivots = rref(f, r);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<std::vector<FElem>> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    std::vector<FElem> v(static_cast<std::size_t>(m.cols()), 0);
    v[static_cast<std::size_t>(free)] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      v[static_cast<std::size_t>(pivots[i])] = f.neg(r(static_cast<int>(i), free));
    }
    basis.push_back(std::move(v));
  }
  FqMatrix out = from_rows(basis, m.cols());
  rref(f, out);
  return out;
}

std::optional<FqMatrix> inverse(const FiniteField& f, const FqMatrix& m) {
  if (m.rows() != m.cols()) fail(Errc::DimMismatch, "inverse of non-square matrix");
  const int n = m.rows();
  FqMatrix aug(n, 2 * n);
  aug.set_block(0, 0, m);
  aug.set_block(0, n, FqMatrix::identity(n));
  const auto pivots = rref(f, aug);
  if (static_cast<int>(pivots.size()) < n || (n > 0 && pivots[static_cast<std::size_t>(n - 1)] >= n)) return std::nullopt;
  return aug.block(0, n, n, n);
}

void Span::reduce(const FiniteField& f, std::vector<FElem>& v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const auto p = static_cast<std::size_t>(pivots_[i]);
    const FElem c = v[p];
    if (c == 0) continue;
    for (std::size_t j = p; j < v.size(); ++j) v[j] = f.sub(v[j], f.mul(c, rows_[i][j]));
  }
}

bool Span::insert(const FiniteField& f, std::vector<FElem> v) {
  reduce(f, v);
  std::size_t p = 0;
  while (p < v.size() && v[p] == 0) ++p;
  if (p == v.size()) return false;
  const FElem inv = f.inv(v[p]);
  for (auto& x : v) x = f.mul(inv, x);
  // Keep pivots increasing, and clear the new pivot column from existing rows.
  for (auto& r : rows_) {
    const FElem c = r[p];
    if (c == 0) continue;
    for (std::size_t j = p; j < r.size(); ++j) r[j] = f.sub(r[j], f.mul(c, v[j]));
  }
  std::size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < static_cast<int>(p)) ++pos;
  rows_.insert(rows_.begin() + static_cast<long>(pos), std::move(v));
  pivots_.insert(pivots_.begin() + static_cast<long>(pos), static_cast<int>(p));
  return true;
}

bool Span::contains(const FiniteField& f, std::vector<FElem> v) const {
  reduce(f, v);
  for (auto x : v) {
    if (x != 0) return false;
  }
  return true;
}

FqMatrix Span::basis(const FiniteField&) const { return from_rows(rows_, dim_); }

}  // namespace qhall
