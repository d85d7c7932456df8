#pragma once

#include <optional>
#include <vector>

#include "affq/field.hpp"

namespace affq {

/* Dense matrix over a runtime-selected exact field.  Row-major.  All
   eliminations pick the leftmost nonzero pivot in the first available row, so
   every derived object (rank, kernels, echelon bases) is deterministic. */
class Matrix {
 public:
  Matrix() = default;  // 0x0 over F_2; placeholder only
  Matrix(const Field& f, int rows, int cols);

  static Matrix identity(const Field& f, int n);
  static Matrix from_int_rows(const Field& f, const std::vector<std::vector<std::int64_t>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Field& field() const { return f_; }

  Scalar get(int r, int c) const;
  void set(int r, int c, const Scalar& v);
  /* Reduces v mod p over F_p; exact over the rationals. */
  void set_int(int r, int c, std::int64_t v);

  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }
  bool is_zero() const;

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator-() const;
  Matrix scaled_int(std::int64_t c) const;
  Matrix scaled(const Scalar& c) const;

  Matrix transpose() const;
  Matrix submatrix(int r0, int c0, int h, int w) const;
  static Matrix hstack(const Matrix& a, const Matrix& b);
  static Matrix vstack(const Matrix& a, const Matrix& b);
  /* Row-major Kronecker product: out[i*Br+k][j*Bc+l] = a[i][j]*b[k][l]. */
  static Matrix kron(const Matrix& a, const Matrix& b);

  int rank() const;
  /* Reduced row echelon form; appends pivot column indices if requested. */
  Matrix rref(std::vector<int>* pivot_cols = nullptr) const;
  /* Columns form a basis of the right kernel, one per free column of the
     rref, in ascending free-column order. */
  Matrix kernel_basis() const;
  /* Columns form a basis of the column span (echelon of the transpose). */
  Matrix column_space_basis() const;
  /* P with P*this == 0, full row rank rows()-rank(); ker P = column span of
     this, so P is the quotient map onto a coordinate complement. */
  Matrix cokernel_projection() const;
  /* Particular X with this*X == b, or nullopt if inconsistent. */
  std::optional<Matrix> solve(const Matrix& b) const;
  std::optional<Matrix> inverse() const;
  bool invertible() const;

  std::string to_string() const;

 private:
  void check_same_field(const Matrix& o) const;
  std::size_t idx(int r, int c) const { return static_cast<std::size_t>(r) * cols_ + c; }

  Field f_ = Field::prime(2);
  int rows_ = 0, cols_ = 0;
  std::vector<std::int64_t> pd_;  // prime-field storage, values in [0,p)
  std::vector<Rat> qd_;           // rational storage
};

}  // namespace affq
