#include "witt/transfer.hpp"

#include <stdexcept>

namespace witt {

Functional::Functional(const QuadraticExtension& ext) : Functional(ext, ext.base()->one()) {}

Functional::Functional(const QuadraticExtension& ext, Element scale) : ext_(&ext), scale_(std::move(scale)) {
  if (scale_.field() != ext.base() || scale_.is_zero())
    throw std::invalid_argument("functional scale must be a nonzero element of the base field");
}

Element Functional::operator()(const Element& a) const { return scale_ * ext_->functional_s(a); }

const QuadraticExtension& extension_of(FieldRef field) {
  const auto* ext = field->as_extension();
  if (!ext) throw std::invalid_argument(field->descriptor() + " is not a quadratic extension");
  return *ext;
}

Vector restrict_vector(const QuadraticExtension& ext, const Vector& v) {
  const std::size_t n = v.size();
  Vector out(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    auto [x, y] = ext.coordinates(v[i]);
    out[i] = x;
    out[n + i] = y;
  }
  return out;
}

Vector lift_vector(const QuadraticExtension& ext, const Vector& xy) {
  if (xy.size() % 2) throw std::invalid_argument("lift_vector: odd length");
  const std::size_t n = xy.size() / 2;
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = ext.make(xy[i], xy[n + i]);
  return out;
}

namespace {

// Basis f_a of the underlying F-space as K-vectors.
std::vector<Vector> underlying_basis(const QuadraticExtension& ext, std::size_t n) {
  std::vector<Vector> basis;
  for (std::size_t i = 0; i < 2 * n; ++i) {
    Vector v = zero_vector(&ext, n);
    v[i % n] = i < n ? ext.one() : ext.generator();
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

QuadraticForm transfer_form(const QuadraticForm& q, const Functional& s) {
  const auto& ext = s.extension();
  if (q.field() != &ext) throw std::invalid_argument("transfer_form: form is not over " + ext.descriptor());
  const std::size_t n = q.dim();
  auto basis = underlying_basis(ext, n);
  const Matrix b = q.polar_matrix();
  Matrix out(ext.base(), 2 * n, 2 * n);
  for (std::size_t i = 0; i < 2 * n; ++i) {
    out(i, i) = s(q(basis[i]));
    const Vector bi = b * basis[i];
    for (std::size_t j = i + 1; j < 2 * n; ++j) out(i, j) = s(dot(basis[j], bi));
  }
  return QuadraticForm(out);
}

QuadraticForm transfer_form(const QuadraticForm& q) {
  return transfer_form(q, Functional(extension_of(q.field())));
}

SymmetricBilinearForm transfer_bilinear(const SymmetricBilinearForm& b, const Functional& s) {
  const auto& ext = s.extension();
  const std::size_t n = b.dim();
  auto basis = underlying_basis(ext, n);
  Matrix out(ext.base(), 2 * n, 2 * n);
  for (std::size_t i = 0; i < 2 * n; ++i)
    for (std::size_t j = 0; j < 2 * n; ++j) out(i, j) = s(b(basis[i], basis[j]));
  return SymmetricBilinearForm(out);
}

QuadraticSystem system_transfer(const QuadraticSystem& q, const Functional& s) {
  std::vector<QuadraticForm> out;
  for (const auto& c : q.components()) out.push_back(transfer_form(c, s));
  return QuadraticSystem(s.extension().base(), 2 * q.dim(), std::move(out));
}

QuadraticSystem system_transfer(const QuadraticSystem& q) {
  return system_transfer(q, Functional(extension_of(q.field())));
}

}  // namespace witt
