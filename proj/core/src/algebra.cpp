#include "witt/algebra.hpp"

#include <stdexcept>

namespace witt {

AlgebraWithInvolution::AlgebraWithInvolution(FieldRef center, std::optional<QuaternionAlgebra> q, InvolutionSpec sigma)
    : center_(center), quat_(std::move(q)), sigma_(std::move(sigma)) {}

AlgebraRef AlgebraWithInvolution::commutative(FieldRef center) {
  if (!center) throw std::invalid_argument("algebra over a null field");
  return AlgebraRef(new AlgebraWithInvolution(center, std::nullopt, InvolutionSpec::canonical()));
}

AlgebraRef AlgebraWithInvolution::quaternion(QuaternionAlgebra q, InvolutionSpec sigma) {
  validate_involution(q, sigma);
  FieldRef f = q.field();
  return AlgebraRef(new AlgebraWithInvolution(f, std::move(q), std::move(sigma)));
}

const QuaternionAlgebra& AlgebraWithInvolution::quaternion_algebra() const {
  if (!quat_) throw std::logic_error("commutative algebra has no quaternion presentation");
  return *quat_;
}

InvolutionType AlgebraWithInvolution::type() const {
  // theta = id on D = F is orthogonal, of type +1.
  if (!quat_) return {false, 1};
  return involution_type(*quat_, sigma_);
}

std::string AlgebraWithInvolution::describe() const {
  if (!quat_) return center_->descriptor() + " with identity";
  return quat_->presentation() + " over " + center_->descriptor() + " with " + sigma_.describe(*quat_);
}

DElement AlgebraWithInvolution::scalar(const Element& c) const {
  if (c.field() != center_) throw std::invalid_argument("scalar from another field");
  const Element z = center_->zero();
  return {c, z, z, z};
}

DElement AlgebraWithInvolution::basis(std::size_t k) const {
  if (k >= degree()) throw std::out_of_range("algebra basis index");
  DElement u = zero();
  u[k] = center_->one();
  return u;
}

DElement AlgebraWithInvolution::add(const DElement& u, const DElement& v) const {
  return {u[0] + v[0], u[1] + v[1], u[2] + v[2], u[3] + v[3]};
}

DElement AlgebraWithInvolution::sub(const DElement& u, const DElement& v) const {
  return {u[0] - v[0], u[1] - v[1], u[2] - v[2], u[3] - v[3]};
}

DElement AlgebraWithInvolution::neg(const DElement& u) const { return {-u[0], -u[1], -u[2], -u[3]}; }

DElement AlgebraWithInvolution::mul(const DElement& u, const DElement& v) const {
  if (quat_) return quat_->mul(u, v);
  return scalar(u[0] * v[0]);
}

DElement AlgebraWithInvolution::scale(const Element& c, const DElement& u) const {
  return {c * u[0], c * u[1], c * u[2], c * u[3]};
}

DElement AlgebraWithInvolution::inverse(const DElement& u) const {
  if (quat_) return quat_->inverse(u);
  if (u[0].is_zero()) throw std::domain_error("division by zero in " + center_->descriptor());
  return scalar(u[0].inverse());
}

DElement AlgebraWithInvolution::theta(const DElement& u) const {
  if (quat_) return apply_involution(*quat_, sigma_, u);
  return u;
}

bool AlgebraWithInvolution::is_zero(const DElement& u) const {
  return u[0].is_zero() && u[1].is_zero() && u[2].is_zero() && u[3].is_zero();
}

bool AlgebraWithInvolution::equal(const DElement& u, const DElement& v) const {
  return u[0] == v[0] && u[1] == v[1] && u[2] == v[2] && u[3] == v[3];
}

Vector AlgebraWithInvolution::coordinates(const DElement& u) const {
  return Vector(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(degree()));
}

DElement AlgebraWithInvolution::from_coordinates(const Vector& c) const {
  if (c.size() != degree()) throw std::invalid_argument("wrong number of algebra coordinates");
  DElement u = zero();
  for (std::size_t k = 0; k < c.size(); ++k) u[k] = c[k];
  return u;
}

std::string AlgebraWithInvolution::format(const DElement& u) const {
  if (quat_) return quat_->format(u);
  return u[0].str();
}

DElement AlgebraWithInvolution::parse(std::string_view text) const {
  if (quat_) return parse_quaternion(*quat_, text);
  return scalar(parse_element(center_, text));
}

std::vector<DElement> AlgebraWithInvolution::symd_basis(int lambda) const {
  if (quat_) return witt::symd_basis(*quat_, sigma_, lambda);
  // x + lambda x on a field.
  const Element two = center_->from_int(1 + lambda);
  if (two.is_zero()) return {};
  return {one()};
}

std::vector<DElement> AlgebraWithInvolution::sym_basis(int lambda) const {
  if (quat_) return witt::sym_basis(*quat_, sigma_, lambda);
  if (center_->from_int(1 - lambda).is_zero()) return {one()};
  return {};
}

AlgebraRef AlgebraWithInvolution::extend_scalars(FieldRef extension) const {
  std::optional<QuaternionAlgebra> q;
  InvolutionSpec sigma = sigma_;
  if (quat_) {
    q = witt::extend_scalars(*quat_, extension);
    sigma = witt::extend_scalars(sigma_, extension);
  } else if (extension_of(extension).base() != center_) {
    throw std::invalid_argument("extend_scalars: field mismatch");
  }
  auto out = std::shared_ptr<AlgebraWithInvolution>(new AlgebraWithInvolution(extension, std::move(q), sigma));
  out->base_ = shared_from_this();
  return out;
}

DElement AlgebraWithInvolution::embed(const DElement& u) const {
  const auto& ext = extension_of(center_);
  return {ext.embed(u[0]), ext.embed(u[1]), ext.embed(u[2]), ext.embed(u[3])};
}

std::optional<DElement> AlgebraWithInvolution::restrict(const DElement& u) const {
  const auto& ext = extension_of(center_);
  DElement out;
  for (std::size_t k = 0; k < 4; ++k) {
    auto v = ext.to_base(u[k]);
    if (!v) return std::nullopt;
    out[k] = *v;
  }
  return out;
}

DElement AlgebraWithInvolution::s_D(const DElement& u, const Functional& s) const {
  return {s(u[0]), s(u[1]), s(u[2]), s(u[3])};
}

bool same_algebra(const AlgebraWithInvolution& a, const AlgebraWithInvolution& b) {
  if (a.center() != b.center() || a.is_commutative() != b.is_commutative()) return false;
  if (a.is_commutative()) return true;
  if (!(a.quaternion_algebra() == b.quaternion_algebra())) return false;
  const auto& sa = a.involution();
  const auto& sb = b.involution();
  if (sa.kind != sb.kind) return false;
  if (sa.kind == InvolutionSpec::Kind::canonical) return true;
  return a.quaternion_algebra().equal(*sa.u, *sb.u);
}

}  // namespace witt
