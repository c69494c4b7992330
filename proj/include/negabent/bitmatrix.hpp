#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

namespace negabent {

/// Square or rectangular matrix over GF(2) with at most 32 columns.
/// Row i is stored as a bitmask; bit j is the entry (i, j).
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(int rows, int cols) : cols_(cols), rows_(static_cast<size_t>(rows), 0u) {}

  static BitMatrix identity(int n);
  static BitMatrix from_rows(std::vector<std::uint32_t> rows, int cols);

  int rows() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }

  bool get(int i, int j) const { return (rows_[static_cast<size_t>(i)] >> j) & 1u; }
  void set(int i, int j, bool v) {
    auto& r = rows_[static_cast<size_t>(i)];
    r = v ? (r | (1u << j)) : (r & ~(1u << j));
  }
  std::uint32_t row(int i) const { return rows_[static_cast<size_t>(i)]; }
  std::uint32_t& row(int i) { return rows_[static_cast<size_t>(i)]; }
  const std::vector<std::uint32_t>& row_masks() const { return rows_; }

  /// y = M x, x and y as column bit vectors.
  std::uint32_t apply(std::uint32_t x) const {
    std::uint32_t y = 0;
    for (size_t i = 0; i < rows_.size(); ++i)
      y |= static_cast<std::uint32_t>(std::popcount(rows_[i] & x) & 1) << i;
    return y;
  }
  /// y = x^T M, i.e. XOR of the rows selected by x.
  std::uint32_t apply_left(std::uint32_t x) const {
    std::uint32_t y = 0;
    for (size_t i = 0; i < rows_.size(); ++i)
      if ((x >> i) & 1u) y ^= rows_[i];
    return y;
  }

  BitMatrix transpose() const;
  BitMatrix operator*(const BitMatrix& rhs) const;
  BitMatrix operator+(const BitMatrix& rhs) const;
  bool operator==(const BitMatrix& rhs) const = default;

  int rank() const;
  bool is_symmetric() const;
  std::optional<BitMatrix> inverse() const;

 private:
  int cols_ = 0;
  std::vector<std::uint32_t> rows_;
};

/// Rank of the span of a set of bit vectors.
int gf2_rank(std::vector<std::uint32_t> vectors);

}  // namespace negabent
