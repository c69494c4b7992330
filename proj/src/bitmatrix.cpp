#include "negabent/bitmatrix.hpp"

#include <stdexcept>
#include <utility>

namespace negabent {

BitMatrix BitMatrix::identity(int n) {
  BitMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.row(i) = 1u << i;
  return m;
}

BitMatrix BitMatrix::from_rows(std::vector<std::uint32_t> rows, int cols) {
  BitMatrix m;
  m.cols_ = cols;
  m.rows_ = std::move(rows);
  return m;
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows());
  for (int i = 0; i < rows(); ++i)
    for (int j = 0; j < cols_; ++j)
      if (get(i, j)) t.set(j, i, true);
  return t;
}

BitMatrix BitMatrix::operator*(const BitMatrix& rhs) const {
  if (cols_ != rhs.rows()) throw std::invalid_argument("BitMatrix: dimension mismatch in product");
  BitMatrix p(rows(), rhs.cols());
  for (int i = 0; i < rows(); ++i) p.row(i) = rhs.apply_left(row(i));
  return p;
}

BitMatrix BitMatrix::operator+(const BitMatrix& rhs) const {
  if (cols_ != rhs.cols() || rows() != rhs.rows())
    throw std::invalid_argument("BitMatrix: dimension mismatch in sum");
  BitMatrix s = *this;
  for (int i = 0; i < rows(); ++i) s.row(i) ^= rhs.row(i);
  return s;
}

int BitMatrix::rank() const { return gf2_rank(rows_); }

bool BitMatrix::is_symmetric() const {
  if (rows() != cols_) return false;
  return *this == transpose();
}

std::optional<BitMatrix> BitMatrix::inverse() const {
  if (rows() != cols_) return std::nullopt;
  const int n = rows();
  std::vector<std::uint32_t> a = rows_;
  std::vector<std::uint32_t> inv = identity(n).rows_;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if ((a[static_cast<size_t>(r)] >> col) & 1u) {
        pivot = r;
        break;
      }
    if (pivot < 0) return std::nullopt;
    std::swap(a[static_cast<size_t>(col)], a[static_cast<size_t>(pivot)]);
    std::swap(inv[static_cast<size_t>(col)], inv[static_cast<size_t>(pivot)]);
    for (int r = 0; r < n; ++r) {
      if (r != col && ((a[static_cast<size_t>(r)] >> col) & 1u)) {
        a[static_cast<size_t>(r)] ^= a[static_cast<size_t>(col)];
        inv[static_cast<size_t>(r)] ^= inv[static_cast<size_t>(col)];
      }
    }
  }
  return from_rows(std::move(inv), n);
}

int gf2_rank(std::vector<std::uint32_t> vectors) {
  int rank = 0;
  for (size_t i = 0; i < vectors.size(); ++i) {
    std::uint32_t v = vectors[i];
    if (v == 0) continue;
    ++rank;
    const std::uint32_t low = v & (~v + 1u);
    for (size_t j = i + 1; j < vectors.size(); ++j)
      if (vectors[j] & low) vectors[j] ^= v;
  }
  return rank;
}

}  // namespace negabent
