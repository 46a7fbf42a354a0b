#pragma once

#include <vector>

#include "wpoly/gf.hpp"
#include "wpoly/matroid.hpp"
#include "wpoly/subset.hpp"

namespace wpoly {

// Dense matrix over a finite field, row-major. Zero rows or columns allowed.
class FieldMatrix {
 public:
  FieldMatrix(FiniteField field, int rows, int cols);

  const FiniteField& field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  GfElem at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  GfElem& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  FieldMatrix transposed() const;
  FieldMatrix times(const FieldMatrix& other) const;
  // Keeps the columns whose 1-based index lies in sel, preserving order.
  FieldMatrix restrict_columns(Subset sel) const;
  bool is_zero() const;

  bool operator==(const FieldMatrix& other) const;
  bool operator!=(const FieldMatrix& other) const { return !(*this == other); }

 private:
  FiniteField field_;
  int rows_;
  int cols_;
  std::vector<GfElem> data_;
};

// Reduced row echelon form; pivot column indices appended to *pivots if given.
FieldMatrix rref(FieldMatrix a, std::vector<int>* pivots = nullptr);

int rank_of(const FieldMatrix& a);

// Matrix whose rows span {x : a x^T = 0}; it has cols(a) - rank(a) rows.
FieldMatrix kernel_basis(const FieldMatrix& a);

// Matroid on the columns of a: a subset is independent when the corresponding
// columns are linearly independent.
Matroid vector_matroid(const FieldMatrix& a);

}  // namespace wpoly
