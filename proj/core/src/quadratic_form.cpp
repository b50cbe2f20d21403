#include "witt/quadratic_form.hpp"

#include <stdexcept>

namespace witt {

SymmetricBilinearForm::SymmetricBilinearForm(Matrix gram) : gram_(std::move(gram)) {
  if (!gram_.is_symmetric()) throw std::invalid_argument("bilinear form: Gram matrix is not symmetric");
}

SymmetricBilinearForm SymmetricBilinearForm::diagonal(FieldRef field, const Vector& entries) {
  return SymmetricBilinearForm(Matrix::diagonal(field, entries));
}

Element SymmetricBilinearForm::operator()(const Vector& u, const Vector& v) const {
  return dot(u, gram_ * v);
}

SymmetricBilinearForm SymmetricBilinearForm::compose(const Matrix& basis) const {
  return SymmetricBilinearForm(basis.transpose() * gram_ * basis);
}

QuadraticForm::QuadraticForm(const Matrix& c) : u_(c) {
  if (!c.square()) throw std::invalid_argument("quadratic form: coefficient matrix is not square");
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      u_(j, i) += u_(i, j);
      u_(i, j) = field()->zero();
    }
}

QuadraticForm QuadraticForm::diagonal(FieldRef field, const Vector& entries) {
  return QuadraticForm(Matrix::diagonal(field, entries));
}

QuadraticForm QuadraticForm::zero(FieldRef field, std::size_t dim) {
  return QuadraticForm(Matrix(field, dim, dim));
}

QuadraticForm QuadraticForm::hyperbolic_plane(FieldRef field) {
  Matrix m(field, 2, 2);
  m(0, 1) = field->one();
  return QuadraticForm(m);
}

QuadraticForm QuadraticForm::from_polar(const Matrix& gram) {
  FieldRef f = gram.field();
  if (f->characteristic() == 2) throw std::invalid_argument("from_polar needs characteristic != 2");
  if (!gram.is_symmetric()) throw std::invalid_argument("from_polar: Gram matrix is not symmetric");
  const Element half = f->from_int(2).inverse();
  Matrix m(f, gram.rows(), gram.rows());
  for (std::size_t i = 0; i < gram.rows(); ++i) {
    m(i, i) = gram(i, i) * half;
    for (std::size_t j = i + 1; j < gram.rows(); ++j) m(i, j) = gram(i, j);
  }
  return QuadraticForm(m);
}

QuadraticForm QuadraticForm::binary(const Element& a, const Element& b) {
  FieldRef f = a.field();
  Matrix m(f, 2, 2);
  m(0, 0) = a;
  m(0, 1) = f->one();
  m(1, 1) = b;
  return QuadraticForm(m);
}

Element QuadraticForm::operator()(const Vector& v) const {
  if (v.size() != dim()) throw std::invalid_argument("quadratic form: vector size mismatch");
  Element s = field()->zero();
  for (std::size_t i = 0; i < dim(); ++i) {
    if (v[i].is_zero()) continue;
    Element row = field()->zero();
    for (std::size_t j = i; j < dim(); ++j)
      if (!u_(i, j).is_zero()) row += u_(i, j) * v[j];
    s += v[i] * row;
  }
  return s;
}

Element QuadraticForm::polar(const Vector& u, const Vector& v) const {
  return dot(u, polar_matrix() * v);
}

Matrix QuadraticForm::polar_matrix() const { return u_ + u_.transpose(); }

QuadraticForm QuadraticForm::compose(const Matrix& basis) const {
  if (basis.rows() != dim() || basis.field() != field())
    throw std::invalid_argument("compose: basis has the wrong shape or field");
  const std::size_t m = basis.cols();
  Matrix out(field(), m, m);
  const Matrix b = polar_matrix();
  std::vector<Vector> cols;
  for (std::size_t k = 0; k < m; ++k) cols.push_back(basis.column(k));
  for (std::size_t k = 0; k < m; ++k) {
    out(k, k) = (*this)(cols[k]);
    const Vector bk = b * cols[k];
    for (std::size_t l = k + 1; l < m; ++l) out(k, l) = dot(cols[l], bk);
  }
  return QuadraticForm(out);
}

QuadraticForm QuadraticForm::scaled(const Element& c) const { return QuadraticForm(u_ * c); }

QuadraticForm QuadraticForm::orthogonal_sum(const QuadraticForm& o) const {
  if (o.field() != field()) throw std::invalid_argument("orthogonal sum over different fields");
  Matrix m(field(), dim() + o.dim(), dim() + o.dim());
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j) m(i, j) = u_(i, j);
  for (std::size_t i = 0; i < o.dim(); ++i)
    for (std::size_t j = 0; j < o.dim(); ++j) m(dim() + i, dim() + j) = o.u_(i, j);
  return QuadraticForm(m);
}

SymmetricBilinearForm polar(const QuadraticForm& q) { return SymmetricBilinearForm(q.polar_matrix()); }

std::vector<Vector> radical(const QuadraticForm& q) { return nullspace(q.polar_matrix()); }

bool is_regular(const QuadraticForm& q) { return radical(q).empty(); }

QuadraticForm extend_scalars(const QuadraticForm& q, FieldRef extension) {
  const auto* ext = extension->as_extension();
  if (!ext || ext->base() != q.field())
    throw std::invalid_argument("extend_scalars: " + extension->descriptor() +
                                " is not a quadratic extension of " + q.field()->descriptor());
  return QuadraticForm(q.coefficients().map(extension, [&](const Element& e) { return ext->embed(e); }));
}

std::optional<QuadraticForm> restrict_to_base(const QuadraticForm& q) {
  const auto* ext = q.field()->as_extension();
  if (!ext) throw std::invalid_argument("restrict_to_base: not over a quadratic extension");
  for (std::size_t i = 0; i < q.dim(); ++i)
    for (std::size_t j = i; j < q.dim(); ++j)
      if (!ext->to_base(q.coefficient(i, j))) return std::nullopt;
  return QuadraticForm(q.coefficients().map(ext->base(), [&](const Element& e) { return *ext->to_base(e); }));
}

NormalForm normal_form(const QuadraticForm& q) {
  FieldRef f = q.field();
  const std::size_t n = q.dim();
  const Matrix b = q.polar_matrix();
  auto bil = [&](const Vector& u, const Vector& v) { return dot(u, b * v); };
  std::vector<Vector> rest;
  for (std::size_t i = 0; i < n; ++i) rest.push_back(unit_vector(f, n, i));
  std::vector<Vector> out;
  NormalForm nf;
  if (f->characteristic() != 2) {
    while (!rest.empty()) {
      std::optional<std::size_t> pick;
      Vector v;
      for (std::size_t i = 0; i < rest.size() && !pick; ++i)
        if (!q(rest[i]).is_zero()) {
          pick = i;
          v = rest[i];
        }
      for (std::size_t i = 0; i < rest.size() && !pick; ++i)
        for (std::size_t j = i + 1; j < rest.size() && !pick; ++j)
          if (!bil(rest[i], rest[j]).is_zero()) {
            pick = i;
            v = rest[i] + rest[j];
          }
      if (!pick) break;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(*pick));
      const Element bvv_inv = bil(v, v).inverse();
      for (auto& w : rest) w = w - (bil(w, v) * bvv_inv) * v;
      out.push_back(v);
      nf.diagonal.push_back(q(v));
    }
    for (auto& w : rest) {
      out.push_back(w);
      nf.diagonal.push_back(q(w));
    }
  } else {
    std::vector<Vector> pairs;
    for (;;) {
      std::optional<std::pair<std::size_t, std::size_t>> pick;
      for (std::size_t i = 0; i < rest.size() && !pick; ++i)
        for (std::size_t j = i + 1; j < rest.size() && !pick; ++j)
          if (!bil(rest[i], rest[j]).is_zero()) pick = std::make_pair(i, j);
      if (!pick) break;
      Vector e = rest[pick->first];
      Vector fv = bil(e, rest[pick->second]).inverse() * rest[pick->second];
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pick->second));
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pick->first));
      for (auto& w : rest) w = w - bil(w, fv) * e - bil(w, e) * fv;
      pairs.push_back(e);
      pairs.push_back(fv);
      nf.pair_values.emplace_back(q(e), q(fv));
    }
    out = pairs;
    for (auto& w : rest) {
      out.push_back(w);
      nf.diagonal.push_back(q(w));
    }
  }
  nf.basis = out.empty() ? Matrix(f, n, 0) : Matrix::from_columns(f, n, out);
  return nf;
}

QuadraticSystem::QuadraticSystem(FieldRef field, std::size_t dim, std::vector<QuadraticForm> components)
    : field_(field), dim_(dim), forms_(std::move(components)) {
  for (const auto& q : forms_)
    if (q.field() != field_ || q.dim() != dim_)
      throw std::invalid_argument("system components must share field and dimension");
}

Vector QuadraticSystem::operator()(const Vector& v) const {
  Vector out;
  for (const auto& q : forms_) out.push_back(q(v));
  return out;
}

QuadraticSystem QuadraticSystem::compose(const Matrix& basis) const {
  std::vector<QuadraticForm> out;
  for (const auto& q : forms_) out.push_back(q.compose(basis));
  return QuadraticSystem(field_, basis.cols(), std::move(out));
}

std::vector<Vector> system_radical(const QuadraticSystem& q) {
  if (q.dim() == 0) return {};
  Matrix stacked(q.field(), q.size() * q.dim(), q.dim());
  for (std::size_t k = 0; k < q.size(); ++k) {
    const Matrix b = q[k].polar_matrix();
    for (std::size_t i = 0; i < q.dim(); ++i)
      for (std::size_t j = 0; j < q.dim(); ++j) stacked(k * q.dim() + i, j) = b(i, j);
  }
  if (q.size() == 0) {
    std::vector<Vector> all;
    for (std::size_t i = 0; i < q.dim(); ++i) all.push_back(unit_vector(q.field(), q.dim(), i));
    return all;
  }
  return nullspace(stacked);
}

SystemRegularity system_regularity(const QuadraticSystem& q) {
  SystemRegularity r;
  r.regular = system_radical(q).empty();
  r.totally_regular = true;
  for (const auto& c : q.components()) r.totally_regular = r.totally_regular && is_regular(c);
  return r;
}

QuadraticSystem extend_scalars(const QuadraticSystem& q, FieldRef extension) {
  std::vector<QuadraticForm> out;
  for (const auto& c : q.components()) out.push_back(extend_scalars(c, extension));
  return QuadraticSystem(extension, q.dim(), std::move(out));
}

}  // namespace witt
