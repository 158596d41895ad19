#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "artin/field.hpp"

namespace artin {

/// Dense row-major matrix over an exact field.
///
/// Values are immutable in spirit: every algebraic operation returns a new
/// matrix, and the mutating setters exist only for assembling results.
class Matrix {
 public:
  /// 0x0 over F_2; only useful as a placeholder.
  Matrix();
  Matrix(Field field, std::size_t rows, std::size_t cols);

  static Matrix identity(Field field, std::size_t n);
  static Matrix from_scalars(Field field, std::size_t rows, std::size_t cols,
                             const std::vector<Scalar>& row_major);
  static Matrix from_strings(Field field, std::size_t rows, std::size_t cols,
                             const std::vector<std::string>& row_major);
  /// Uniform entries over F_p; integers in [-3, 3] over Q.
  static Matrix random(Field field, std::size_t rows, std::size_t cols, std::mt19937_64& rng);
  /// Column vector e_i of length n.
  static Matrix unit(Field field, std::size_t n, std::size_t i);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const Scalar& v);
  bool is_zero_at(std::size_t i, std::size_t j) const;
  bool is_zero() const;
  bool operator==(const Matrix& other) const;

  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  Matrix operator*(const Matrix& other) const;
  Matrix operator-() const;
  Matrix& operator+=(const Matrix& other);
  Matrix scaled(const Scalar& s) const;

  Matrix transpose() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
  Matrix column(std::size_t j) const { return block(0, j, rows_, 1); }
  Matrix row(std::size_t i) const { return block(i, 0, 1, cols_); }
  Matrix select_rows(std::span<const std::size_t> idx) const;
  Matrix select_columns(std::span<const std::size_t> idx) const;

  static Matrix hstack(std::span<const Matrix> parts);
  static Matrix vstack(std::span<const Matrix> parts);
  static Matrix direct_sum(std::span<const Matrix> parts);
  static Matrix kron(const Matrix& a, const Matrix& b);

  std::vector<std::string> to_strings() const;

  struct Echelon;
  /// Unique reduced row echelon form; pivots strictly increasing.
  Echelon rref() const;
  std::size_t rank() const;

  struct Kernel;
  Kernel kernel() const;
  Matrix kernel_basis() const;

  /// X with (*this) X = rhs for every column of rhs, or nullopt if any column
  /// lies outside the column space. Throws InputError on row mismatch.
  std::optional<Matrix> solve(const Matrix& rhs) const;
  std::optional<Matrix> inverse() const;
  /// Indices of a maximal independent set of columns, chosen greedily left to right.
  std::vector<std::size_t> independent_columns() const;
  /// Columns of `extra` (indices) that extend the column space of *this, greedily.
  std::vector<std::size_t> extending_columns(const Matrix& extra) const;

  /// Low-level access used by the sparse kernels in this library.
  const std::vector<std::uint32_t>* residues() const { return std::get_if<std::vector<std::uint32_t>>(&data_); }

 private:
  friend Matrix block_diagonal_product(const Matrix&, std::size_t, const Matrix&);
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::variant<std::vector<std::uint32_t>, std::vector<mpq_class>> data_;
};

struct Matrix::Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

struct Matrix::Kernel {
  /// cols() x nullity; column t has a 1 in row free[t] and 0 in the other free rows.
  Matrix basis;
  std::vector<std::size_t> free;
};

inline Matrix Matrix::kernel_basis() const { return kernel().basis; }

/// (I_copies (x) block) * x, computed block by block.
Matrix block_diagonal_product(const Matrix& block, std::size_t copies, const Matrix& x);

}  // namespace artin
