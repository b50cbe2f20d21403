#pragma once

// Quadratic forms q(v) = sum_{i<=j} U_ij v_i v_j stored by their
// upper-triangular coefficient matrix U, so characteristic 2 needs no special
// casing; bilinear forms by their Gram matrix; m-fold systems as lists of
// forms on a common space.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "witt/matrix.hpp"

namespace witt {

class SymmetricBilinearForm {
 public:
  explicit SymmetricBilinearForm(Matrix gram);
  static SymmetricBilinearForm diagonal(FieldRef field, const Vector& entries);

  FieldRef field() const noexcept { return gram_.field(); }
  std::size_t dim() const noexcept { return gram_.rows(); }
  const Matrix& gram() const noexcept { return gram_; }
  Element operator()(const Vector& u, const Vector& v) const;
  SymmetricBilinearForm compose(const Matrix& basis) const;
  bool operator==(const SymmetricBilinearForm& o) const { return gram_ == o.gram_; }

 private:
  Matrix gram_;
};

class QuadraticForm {
 public:
  /// Any square matrix; entries below the diagonal are folded into U_ij, i<j.
  explicit QuadraticForm(const Matrix& coefficients);
  static QuadraticForm diagonal(FieldRef field, const Vector& entries);
  static QuadraticForm zero(FieldRef field, std::size_t dim);
  /// The hyperbolic plane xy.
  static QuadraticForm hyperbolic_plane(FieldRef field);
  /// Characteristic != 2: the form with polar form `gram`, q(v) = v^T G v / 2.
  static QuadraticForm from_polar(const Matrix& gram);
  /// The binary form a x^2 + xy + b y^2.
  static QuadraticForm binary(const Element& a, const Element& b);

  FieldRef field() const noexcept { return u_.field(); }
  std::size_t dim() const noexcept { return u_.rows(); }
  const Matrix& coefficients() const noexcept { return u_; }
  const Element& coefficient(std::size_t i, std::size_t j) const { return u_(i, j); }

  Element operator()(const Vector& v) const;
  /// b_q(u, v) = q(u+v) - q(u) - q(v).
  Element polar(const Vector& u, const Vector& v) const;
  Matrix polar_matrix() const;

  /// The form x -> q(B x) for a dim x m matrix B.
  QuadraticForm compose(const Matrix& basis) const;
  QuadraticForm scaled(const Element& c) const;
  QuadraticForm orthogonal_sum(const QuadraticForm& o) const;
  bool is_zero() const { return u_.is_zero(); }
  bool operator==(const QuadraticForm& o) const { return u_ == o.u_; }

 private:
  Matrix u_;
};

SymmetricBilinearForm polar(const QuadraticForm& q);
std::vector<Vector> radical(const QuadraticForm& q);
bool is_regular(const QuadraticForm& q);
QuadraticForm extend_scalars(const QuadraticForm& q, FieldRef extension);
/// Coefficients all lie in the base field of an extension: the form viewed over it.
std::optional<QuadraticForm> restrict_to_base(const QuadraticForm& q);

/// Orthogonal normal form.  In characteristic != 2: `basis` columns are an
/// orthogonal basis and `diagonal` the values.  In characteristic 2: the
/// first 2*pairs columns form symplectic pairs (b(e,f) = 1) with values
/// `pair_values`, the remaining columns span the radical with values
/// `diagonal`.  In both cases q o basis is the normal form exactly.
struct NormalForm {
  Matrix basis;
  std::vector<std::pair<Element, Element>> pair_values;
  Vector diagonal;
};
NormalForm normal_form(const QuadraticForm& q);

class QuadraticSystem {
 public:
  QuadraticSystem(FieldRef field, std::size_t dim, std::vector<QuadraticForm> components);

  FieldRef field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return forms_.size(); }
  const std::vector<QuadraticForm>& components() const noexcept { return forms_; }
  const QuadraticForm& operator[](std::size_t i) const { return forms_[i]; }

  Vector operator()(const Vector& v) const;
  QuadraticSystem compose(const Matrix& basis) const;
  bool operator==(const QuadraticSystem& o) const = default;

 private:
  FieldRef field_;
  std::size_t dim_;
  std::vector<QuadraticForm> forms_;
};

struct SystemRegularity {
  bool regular = false;
  bool totally_regular = false;
};
SystemRegularity system_regularity(const QuadraticSystem& q);
/// Common radical of the polar forms.
std::vector<Vector> system_radical(const QuadraticSystem& q);
QuadraticSystem extend_scalars(const QuadraticSystem& q, FieldRef extension);

}  // namespace witt
