#pragma once

// A division algebra with involution of the first kind (D, theta): either the
// centre itself with theta = id, or a quaternion algebra with an involution.
// Elements of D are stored as quaternion 4-tuples in both cases; for D = F
// only the first coordinate is used.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "witt/quaternion.hpp"
#include "witt/transfer.hpp"

namespace witt {

using DElement = Quaternion;

class AlgebraWithInvolution;
using AlgebraRef = std::shared_ptr<const AlgebraWithInvolution>;

class AlgebraWithInvolution : public std::enable_shared_from_this<AlgebraWithInvolution> {
 public:
  static AlgebraRef commutative(FieldRef center);
  static AlgebraRef quaternion(QuaternionAlgebra q, InvolutionSpec sigma);

  FieldRef center() const noexcept { return center_; }
  bool is_commutative() const noexcept { return !quat_.has_value(); }
  /// Dimension of D over its centre: 1 or 4.
  std::size_t degree() const noexcept { return quat_ ? 4 : 1; }
  const QuaternionAlgebra& quaternion_algebra() const;
  const InvolutionSpec& involution() const noexcept { return sigma_; }
  InvolutionType type() const;
  std::string describe() const;

  DElement scalar(const Element& c) const;
  DElement zero() const { return scalar(center_->zero()); }
  DElement one() const { return scalar(center_->one()); }
  DElement basis(std::size_t k) const;

  DElement add(const DElement& u, const DElement& v) const;
  DElement sub(const DElement& u, const DElement& v) const;
  DElement neg(const DElement& u) const;
  DElement mul(const DElement& u, const DElement& v) const;
  DElement scale(const Element& c, const DElement& u) const;
  DElement inverse(const DElement& u) const;
  DElement theta(const DElement& u) const;
  bool is_zero(const DElement& u) const;
  bool equal(const DElement& u, const DElement& v) const;
  /// Coordinates over the centre (length degree()).
  Vector coordinates(const DElement& u) const;
  DElement from_coordinates(const Vector& c) const;
  std::string format(const DElement& u) const;
  DElement parse(std::string_view text) const;

  std::vector<DElement> symd_basis(int lambda) const;
  std::vector<DElement> sym_basis(int lambda) const;

  /// (D, theta)_K; the result remembers this algebra as its base.
  AlgebraRef extend_scalars(FieldRef extension) const;
  /// The algebra this one was extended from, if any.
  const AlgebraRef& base() const noexcept { return base_; }
  DElement embed(const DElement& base_element) const;
  /// Coordinates in the base algebra when all of them lie in F.
  std::optional<DElement> restrict(const DElement& u) const;
  /// The D-linear extension s_D of a functional on K, coordinatewise.
  DElement s_D(const DElement& u, const Functional& s) const;

 private:
  AlgebraWithInvolution(FieldRef center, std::optional<QuaternionAlgebra> q, InvolutionSpec sigma);

  FieldRef center_;
  std::optional<QuaternionAlgebra> quat_;
  InvolutionSpec sigma_;
  AlgebraRef base_;
};

/// Same underlying algebra (centre, presentation and involution).
bool same_algebra(const AlgebraWithInvolution& a, const AlgebraWithInvolution& b);

}  // namespace witt
