#pragma once

// Transfer along an F-linear functional s : K -> F with s(1) = 0.
//
// The F-space underlying K^n gets the basis e_1..e_n, eta e_1..eta e_n: the
// F-vector (x, y) corresponds to the K-vector x + eta*y.

#include "witt/quadratic_form.hpp"

namespace witt {

/// c * s where s(x + y eta) = y; c must be a nonzero element of F.
class Functional {
 public:
  explicit Functional(const QuadraticExtension& ext);
  Functional(const QuadraticExtension& ext, Element scale);

  const QuadraticExtension& extension() const noexcept { return *ext_; }
  const Element& scale() const noexcept { return scale_; }
  Element operator()(const Element& a) const;

 private:
  const QuadraticExtension* ext_;
  Element scale_;
};

/// The extension of the form's field, or throws std::invalid_argument.
const QuadraticExtension& extension_of(FieldRef field);

/// F-vector of length 2n for a K-vector of length n, and back.
Vector restrict_vector(const QuadraticExtension& ext, const Vector& v);
Vector lift_vector(const QuadraticExtension& ext, const Vector& xy);

QuadraticForm transfer_form(const QuadraticForm& q, const Functional& s);
QuadraticForm transfer_form(const QuadraticForm& q);
SymmetricBilinearForm transfer_bilinear(const SymmetricBilinearForm& b, const Functional& s);
QuadraticSystem system_transfer(const QuadraticSystem& q, const Functional& s);
QuadraticSystem system_transfer(const QuadraticSystem& q);

}  // namespace witt
