#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace qhall {

/// Dense row-major integer matrix; used for Cartan-type data.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, long fill = 0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  /// From nested rows; all rows must have equal length.
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  long& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  long operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<std::vector<long>> to_rows() const;
  bool symmetric() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  /// "[[2,-1],[-1,2]]"
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<long> data_;
};

}  // namespace qhall
