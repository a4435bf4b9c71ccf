#include "qhall/int_matrix.hpp"

#include "qhall/error.hpp"

namespace qhall {

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) fail(Errc::InvalidInput, "ragged matrix rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

std::vector<std::vector<long>> IntMatrix::to_rows() const {
  std::vector<std::vector<long>> out(rows_, std::vector<long>(cols_));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out[r][c] = (*this)(r, c);
  }
  return out;
}

bool IntMatrix::symmetric() const {
  if (!square()) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = r + 1; c < cols_; ++c) {
      if ((*this)(r, c) != (*this)(c, r)) return false;
    }
  }
  return true;
}

std::string IntMatrix::to_string() const {
  std::string s = "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) s += ",";
    s += "[";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) s += ",";
      s += std::to_string((*this)(r, c));
    }
    s += "]";
  }
  return s + "]";
}

}  // namespace qhall
