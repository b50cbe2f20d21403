#pragma once

// Dense matrices over a Field, with the exact Gaussian-elimination toolkit
// everything else is built on.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "witt/field.hpp"

namespace witt {

using Vector = std::vector<Element>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldRef field, std::size_t rows, std::size_t cols);

  static Matrix identity(FieldRef field, std::size_t n);
  static Matrix from_rows(FieldRef field, const std::vector<Vector>& rows);
  static Matrix from_columns(FieldRef field, std::size_t rows, const std::vector<Vector>& cols);
  static Matrix diagonal(FieldRef field, const Vector& entries);

  FieldRef field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Element& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Element& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;
  Matrix transpose() const;
  Matrix map(FieldRef target, const std::function<Element(const Element&)>& f) const;
  bool is_zero() const;
  bool is_symmetric() const;

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator*(const Element& c) const;
  Vector operator*(const Vector& v) const;
  bool operator==(const Matrix& o) const;

  std::vector<std::vector<std::string>> to_strings() const;

 private:
  FieldRef field_ = nullptr;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Element> data_;
};

struct Echelon {
  Matrix reduced;                   // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

Echelon rref(Matrix m);
std::size_t rank(const Matrix& m);
/// Basis of {v : m v = 0}.
std::vector<Vector> nullspace(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);
Element determinant(const Matrix& m);
/// Some x with m x = b.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

Vector zero_vector(FieldRef field, std::size_t n);
Vector unit_vector(FieldRef field, std::size_t n, std::size_t i);
Element dot(const Vector& u, const Vector& v);
Vector operator+(const Vector& u, const Vector& v);
Vector operator-(const Vector& u, const Vector& v);
Vector operator*(const Element& c, const Vector& v);
bool is_zero(const Vector& v);

/// Extends an independent family to a basis of F^n by unit vectors.
std::vector<Vector> complete_basis(const std::vector<Vector>& family, FieldRef field, std::size_t n);

}  // namespace witt
