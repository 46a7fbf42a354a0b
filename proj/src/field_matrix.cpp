#include "wpoly/field_matrix.hpp"

#include <bit>

#include "wpoly/errors.hpp"

namespace wpoly {

FieldMatrix::FieldMatrix(FiniteField field, int rows, int cols)
    : field_(std::move(field)), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw Error("matrix dimensions must be nonnegative");
  data_.assign(static_cast<std::size_t>(rows) * cols, 0);
}

FieldMatrix FieldMatrix::transposed() const {
  FieldMatrix out(field_, cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
  return out;
}

FieldMatrix FieldMatrix::times(const FieldMatrix& other) const {
  if (field_ != other.field_) throw Error("matrix product over different fields");
  if (cols_ != other.rows_) throw Error("matrix product dimension mismatch");
  FieldMatrix out(field_, rows_, other.cols_);
  for (int r = 0; r < rows_; ++r)
    for (int k = 0; k < cols_; ++k) {
      const GfElem v = at(r, k);
      if (v == 0) continue;
      for (int c = 0; c < other.cols_; ++c)
        out.at(r, c) = field_.add(out.at(r, c), field_.mul(v, other.at(k, c)));
    }
  return out;
}

FieldMatrix FieldMatrix::restrict_columns(Subset sel) const {
  if (sel.mask() >> cols_) throw ElementOutOfRange("column selection out of range");
  const std::vector<int> keep = sel.elements();
  FieldMatrix out(field_, rows_, static_cast<int>(keep.size()));
  for (int r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < keep.size(); ++c)
      out.at(r, static_cast<int>(c)) = at(r, keep[c] - 1);
  return out;
}

bool FieldMatrix::is_zero() const {
  for (GfElem v : data_)
    if (v != 0) return false;
  return true;
}

bool FieldMatrix::operator==(const FieldMatrix& other) const {
  return field_ == other.field_ && rows_ == other.rows_ && cols_ == other.cols_ &&
         data_ == other.data_;
}

FieldMatrix rref(FieldMatrix a, std::vector<int>* pivots) {
  const FiniteField& f = a.field();
  int row = 0;
  for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
    int pivot = -1;
    for (int r = row; r < a.rows(); ++r)
      if (a.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != row)
      for (int c = 0; c < a.cols(); ++c) std::swap(a.at(pivot, c), a.at(row, c));
    const GfElem scale = f.inv(a.at(row, col));
    for (int c = col; c < a.cols(); ++c) a.at(row, c) = f.mul(a.at(row, c), scale);
    for (int r = 0; r < a.rows(); ++r) {
      if (r == row || a.at(r, col) == 0) continue;
      const GfElem factor = a.at(r, col);
      for (int c = col; c < a.cols(); ++c)
        a.at(r, c) = f.sub(a.at(r, c), f.mul(factor, a.at(row, c)));
    }
    if (pivots) pivots->push_back(col);
    ++row;
  }
  return a;
}

int rank_of(const FieldMatrix& a) {
  std::vector<int> pivots;
  rref(a, &pivots);
  return static_cast<int>(pivots.size());
}

FieldMatrix kernel_basis(const FieldMatrix& a) {
  const FiniteField& f = a.field();
  std::vector<int> pivots;
  const FieldMatrix r = rref(a, &pivots);
  std::vector<bool> is_pivot(a.cols(), false);
  for (int c : pivots) is_pivot[c] = true;
  FieldMatrix out(f, a.cols() - static_cast<int>(pivots.size()), a.cols());
  int row = 0;
  for (int free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    out.at(row, free) = 1;
    for (std::size_t t = 0; t < pivots.size(); ++t)
      out.at(row, pivots[t]) = f.neg(r.at(static_cast<int>(t), free));
    ++row;
  }
  return out;
}

Matroid vector_matroid(const FieldMatrix& a) {
  const int n = a.cols();
  if (n < 1) throw Error("vector matroid needs at least one column");
  if (n > ground_set_cap())
    throw GroundSetCapExceeded("matrix has " + std::to_string(n) +
                               " columns, exceeding cap " +
                               std::to_string(ground_set_cap()));
  const int r = rank_of(a);
  std::vector<Subset> bases;
  const std::uint32_t top = std::uint32_t{1} << n;
  for (std::uint32_t m = 0; m < top; ++m) {
    if (std::popcount(m) != r) continue;
    if (rank_of(a.restrict_columns(Subset::of_mask(m))) == r)
      bases.push_back(Subset::of_mask(m));
  }
  return Matroid::from_bases_unchecked(n, std::move(bases));
}

}  // namespace wpoly
