#pragma once

// Dense exact linear algebra over GF(q).

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "socle/ffield.hpp"

namespace socle {

using Vector = std::vector<FieldElement>;

inline Vector zero_vector(const FieldSpec& k, std::size_t n) { return Vector(n, k.zero()); }

bool is_zero(std::span<const FieldElement> v);

/// y[i] += c * x[i] for i >= start.
void axpy(std::span<FieldElement> y, const FieldElement& c, std::span<const FieldElement> x,
          std::size_t start = 0);

/// Row-major dense matrix.
class Matrix {
 public:
  Matrix(const FieldSpec& k, std::size_t rows, std::size_t cols)
      : k_(&k), rows_(rows), cols_(cols), data_(rows * cols, k.zero()) {}

  static Matrix identity(const FieldSpec& k, std::size_t n);
  /// Builds a matrix whose columns are the given vectors (all of equal length).
  static Matrix from_columns(const FieldSpec& k, std::size_t rows, std::span<const Vector> cols);

  const FieldSpec& field() const noexcept { return *k_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  FieldElement& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const FieldElement& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<FieldElement> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const FieldElement> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  Vector column(std::size_t c) const;
  void set_column(std::size_t c, std::span<const FieldElement> v);

  Matrix transpose() const;
  Matrix operator*(const Matrix& b) const;
  Vector operator*(std::span<const FieldElement> v) const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  const FieldSpec* k_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<FieldElement> data_;
};

FieldElement determinant(Matrix a);
std::size_t rank(Matrix a);
/// Throws SingularMatrix.
Matrix inverse(const Matrix& a);
/// Some x with a x = b, or nullopt when the system is inconsistent.
std::optional<Vector> solve(const Matrix& a, std::span<const FieldElement> b);
/// Basis of {x : a x = 0}.
std::vector<Vector> nullspace(const Matrix& a);

/// Reduced row-echelon basis of a subspace of k^n, grown one vector at a time.
/// Rows are kept sorted by pivot, each row is 1 at its pivot and 0 at every
/// other row's pivot.
class EchelonBasis {
 public:
  EchelonBasis(const FieldSpec& k, std::size_t ambient_dim) : k_(&k), n_(ambient_dim) {}

  const FieldSpec& field() const noexcept { return *k_; }
  std::size_t ambient_dim() const noexcept { return n_; }
  std::size_t dimension() const noexcept { return rows_.size(); }
  const std::vector<Vector>& rows() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// Adds v to the span; true iff the dimension grew.
  bool insert(Vector v);
  /// v minus its projection along the rows; zero at every pivot.
  Vector reduce(Vector v) const;
  bool contains(std::span<const FieldElement> v) const;
  /// Coefficients c with v = sum c_i rows()[i], or nullopt if v is outside.
  std::optional<Vector> coordinates(std::span<const FieldElement> v) const;

 private:
  const FieldSpec* k_;
  std::size_t n_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace socle
