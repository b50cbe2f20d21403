#include "witt/hermitian.hpp"

#include <stdexcept>

namespace witt {

DMatrix::DMatrix(const AlgebraWithInvolution& alg, std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, alg.zero()) {}

DMatrix DMatrix::identity(const AlgebraWithInvolution& alg, std::size_t n) {
  DMatrix m(alg, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = alg.one();
  return m;
}

DMatrix DMatrix::from_columns(const AlgebraWithInvolution& alg, std::size_t rows, const std::vector<DVector>& cols) {
  DMatrix m(alg, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw std::invalid_argument("DMatrix::from_columns: ragged columns");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

DVector DMatrix::column(std::size_t j) const {
  DVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

DMatrix multiply(const AlgebraWithInvolution& alg, const DMatrix& a, const DMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("DMatrix multiply: shape mismatch");
  DMatrix out(alg, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      DElement acc = alg.zero();
      for (std::size_t k = 0; k < a.cols(); ++k)
        if (!alg.is_zero(a(i, k)) && !alg.is_zero(b(k, j))) acc = alg.add(acc, alg.mul(a(i, k), b(k, j)));
      out(i, j) = acc;
    }
  return out;
}

std::size_t column_rank(const AlgebraWithInvolution& alg, const DMatrix& input) {
  DMatrix m = input;
  std::size_t r = 0;
  for (std::size_t i = 0; i < m.rows() && r < m.cols(); ++i) {
    std::size_t p = r;
    while (p < m.cols() && alg.is_zero(m(i, p))) ++p;
    if (p == m.cols()) continue;
    if (p != r)
      for (std::size_t k = 0; k < m.rows(); ++k) std::swap(m(k, p), m(k, r));
    const DElement pinv = alg.inverse(m(i, r));
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c == r || alg.is_zero(m(i, c))) continue;
      // col_c -= col_r * (m_ir^-1 m_ic)
      const DElement f = alg.mul(pinv, m(i, c));
      for (std::size_t k = 0; k < m.rows(); ++k) m(k, c) = alg.sub(m(k, c), alg.mul(m(k, r), f));
    }
    ++r;
  }
  return r;
}

HermitianForm::HermitianForm(AlgebraRef algebra, int lambda, DMatrix gram)
    : alg_(std::move(algebra)), lambda_(lambda), gram_(std::move(gram)) {
  if (!alg_) throw std::invalid_argument("hermitian form over a null algebra");
  if (lambda_ != 1 && lambda_ != -1) throw std::invalid_argument("lambda must be +1 or -1");
  if (gram_.rows() != gram_.cols()) throw std::invalid_argument("Gram matrix must be square");
  const Element l = alg_->center()->from_int(lambda_);
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = i; j < dim(); ++j) {
      for (const auto& c : gram_(i, j))
        if (c.field() != alg_->center()) throw std::invalid_argument("Gram entry from another field");
      for (std::size_t k = alg_->degree(); k < 4; ++k)
        if (!gram_(i, j)[k].is_zero()) throw std::invalid_argument("Gram entry outside the algebra");
      if (!alg_->equal(gram_(j, i), alg_->scale(l, alg_->theta(gram_(i, j)))))
        throw std::invalid_argument("Gram matrix is not " + std::string(lambda_ == 1 ? "" : "skew-") +
                                    "hermitian: entry (" + std::to_string(j + 1) + "," + std::to_string(i + 1) + ")");
    }
}

HermitianForm HermitianForm::diagonal(AlgebraRef algebra, int lambda, const DVector& entries) {
  DMatrix g(*algebra, entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) g(i, i) = entries[i];
  return HermitianForm(std::move(algebra), lambda, std::move(g));
}

DElement HermitianForm::operator()(const DVector& x, const DVector& y) const {
  const auto& a = *alg_;
  if (x.size() != dim() || y.size() != dim()) throw std::invalid_argument("hermitian form: wrong vector length");
  DElement acc = a.zero();
  for (std::size_t i = 0; i < dim(); ++i) {
    if (a.is_zero(x[i])) continue;
    const DElement tx = a.theta(x[i]);
    for (std::size_t j = 0; j < dim(); ++j)
      if (!a.is_zero(y[j]) && !a.is_zero(gram_(i, j))) acc = a.add(acc, a.mul(a.mul(tx, gram_(i, j)), y[j]));
  }
  return acc;
}

HermitianForm HermitianForm::compose(const DMatrix& p) const {
  if (p.rows() != dim()) throw std::invalid_argument("compose: shape mismatch");
  DMatrix g(*alg_, p.cols(), p.cols());
  std::vector<DVector> cols;
  for (std::size_t j = 0; j < p.cols(); ++j) cols.push_back(p.column(j));
  for (std::size_t i = 0; i < p.cols(); ++i)
    for (std::size_t j = 0; j < p.cols(); ++j) g(i, j) = (*this)(cols[i], cols[j]);
  return HermitianForm(alg_, lambda_, std::move(g));
}

bool HermitianForm::operator==(const HermitianForm& o) const {
  if (!same_algebra(*alg_, *o.alg_) || lambda_ != o.lambda_ || dim() != o.dim()) return false;
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j)
      if (!alg_->equal(gram_(i, j), o.gram_(i, j))) return false;
  return true;
}

bool is_regular(const HermitianForm& h) { return column_rank(h.algebra(), h.gram()) == h.dim(); }

namespace {

// Coordinates of u in the span of `basis` (over the centre), if it lies there.
std::optional<Vector> span_coordinates(const AlgebraWithInvolution& a, const std::vector<DElement>& basis,
                                       const DElement& u) {
  if (basis.empty()) return a.is_zero(u) ? std::optional<Vector>(Vector{}) : std::nullopt;
  std::vector<Vector> cols;
  for (const auto& b : basis) cols.push_back(a.coordinates(b));
  return solve(Matrix::from_columns(a.center(), a.degree(), cols), a.coordinates(u));
}

}  // namespace

bool is_even(const HermitianForm& h) {
  const auto& a = h.algebra();
  const auto symd = a.symd_basis(h.lambda());
  for (std::size_t i = 0; i < h.dim(); ++i)
    if (!span_coordinates(a, symd, h.gram(i, i))) return false;
  return true;
}

SplitOff split_off(const HermitianForm& h, const DVector& v) {
  const auto& a = h.algebra();
  const std::size_t n = h.dim();
  const DElement alpha = h(v, v);
  if (a.is_zero(alpha) || (!a.is_commutative() && a.quaternion_algebra().nrd(alpha).is_zero()))
    throw std::invalid_argument("split_off: h(v, v) is not invertible");
  std::size_t k = 0;
  while (k < n && a.is_zero(v[k])) ++k;
  const DElement ainv = a.inverse(alpha);
  std::vector<DVector> cols;
  for (std::size_t j = 0; j < n; ++j) {
    if (j == k) continue;
    DVector e(n, a.zero());
    e[j] = a.one();
    const DElement c = a.mul(ainv, h(v, e));
    for (std::size_t i = 0; i < n; ++i) e[i] = a.sub(e[i], a.mul(v[i], c));
    cols.push_back(std::move(e));
  }
  DMatrix basis = DMatrix::from_columns(a, n, cols);
  return SplitOff{alpha, h.compose(basis), std::move(basis)};
}

AssociatedSystem associated_system(const HermitianForm& h, const std::vector<DElement>& basis) {
  const auto& a = h.algebra();
  FieldRef c = a.center();
  const std::size_t d = a.degree(), n = h.dim(), m = basis.size();
  if (m == 0) throw std::invalid_argument("associated system needs a nonempty basis");
  {
    std::vector<Vector> cols;
    for (const auto& b : basis) cols.push_back(a.coordinates(b));
    if (rank(Matrix::from_columns(c, d, cols)) != m) throw std::invalid_argument("associated system: B is not a basis");
  }
  const std::size_t N = n * d;
  auto f = [&](std::size_t idx) {
    DVector v(n, a.zero());
    v[idx / d] = a.basis(idx % d);
    return v;
  };
  std::vector<DVector> fs;
  for (std::size_t i = 0; i < N; ++i) fs.push_back(f(i));
  std::vector<Matrix> coeffs(m, Matrix(c, N, N));
  auto project = [&](const DElement& value, std::size_t r, std::size_t s) {
    auto coords = span_coordinates(a, basis, value);
    if (!coords) throw std::invalid_argument("associated system: value " + a.format(value) + " is not in the span of B");
    for (std::size_t i = 0; i < m; ++i) coeffs[i](r, s) = (*coords)[i];
  };
  for (std::size_t r = 0; r < N; ++r) {
    project(h(fs[r], fs[r]), r, r);
    for (std::size_t s = r + 1; s < N; ++s) project(a.add(h(fs[r], fs[s]), h(fs[s], fs[r])), r, s);
  }
  std::vector<QuadraticForm> forms;
  for (auto& u : coeffs) forms.emplace_back(u);
  return AssociatedSystem{QuadraticSystem(c, N, std::move(forms)), basis};
}

void require_supported_case(const HermitianForm& h) {
  const auto& a = h.algebra();
  const bool char2 = a.center()->characteristic() == 2;
  if (a.is_commutative()) {
    if (h.lambda() == -1 || char2)
      throw std::invalid_argument(
          "excluded case D = F with lambda = -1: Symd_lambda is zero (or, in characteristic 2, the associated "
          "system is totally singular) and carries no information about h");
    return;
  }
  const auto t = a.type();
  if (!char2 && h.lambda() != -t.epsilon)
    throw std::invalid_argument("quaternion case needs lambda = -epsilon (lambda = " + std::to_string(h.lambda()) +
                                ", involution of type " + std::to_string(t.epsilon) + ")");
}

QuadraticForm jacobson_form(const HermitianForm& h) {
  const auto& a = h.algebra();
  if (a.is_commutative() || !a.type().symplectic) throw std::invalid_argument("Jacobson form needs a symplectic quaternion algebra");
  if (a.center()->characteristic() != 2 && h.lambda() != 1) throw std::invalid_argument("Jacobson form needs lambda = +1");
  return associated_system(h, {a.one()}).system[0];
}

QuadraticForm skew_form(const HermitianForm& h, const DElement& u) {
  const auto& a = h.algebra();
  if (a.is_commutative() || a.type().symplectic) throw std::invalid_argument("q_{h,u} needs an orthogonal quaternion algebra");
  require_supported_case(h);
  const auto symd = a.symd_basis(h.lambda());
  if (a.is_zero(u) || !span_coordinates(a, symd, u)) throw std::invalid_argument("u must be a nonzero element of Symd_lambda");
  return associated_system(h, {u}).system[0];
}

QuadraticForm trace_form(const HermitianForm& h) {
  require_supported_case(h);
  const auto symd = h.algebra().symd_basis(h.lambda());
  if (symd.size() != 1) throw std::logic_error("Symd_lambda is not one-dimensional");
  return associated_system(h, symd).system[0];
}

HermitianForm extend_scalars(const HermitianForm& h, FieldRef extension) {
  AlgebraRef ak = h.algebra().extend_scalars(extension);
  DMatrix g(*ak, h.dim(), h.dim());
  for (std::size_t i = 0; i < h.dim(); ++i)
    for (std::size_t j = 0; j < h.dim(); ++j) g(i, j) = ak->embed(h.gram(i, j));
  return HermitianForm(ak, h.lambda(), std::move(g));
}

HermitianForm transfer_hermitian(const HermitianForm& h, const Functional& s) {
  const auto& a = h.algebra();
  if (!a.base()) throw std::invalid_argument("transfer needs an algebra extended from the base field");
  if (a.center() != &s.extension()) throw std::invalid_argument("transfer: functional on another field");
  const auto& base = *a.base();
  const std::size_t n = h.dim();
  const Element eta = s.extension().generator();
  DMatrix g(base, 2 * n, 2 * n);
  for (std::size_t p = 0; p < 2 * n; ++p)
    for (std::size_t r = 0; r < 2 * n; ++r) {
      Element c = s.extension().one();
      if (p >= n) c = c * eta;
      if (r >= n) c = c * eta;
      g(p, r) = a.s_D(a.scale(c, h.gram(p % n, r % n)), s);
    }
  return HermitianForm(a.base(), h.lambda(), std::move(g));
}

HermitianForm transfer_hermitian(const HermitianForm& h) {
  return transfer_hermitian(h, Functional(extension_of(h.algebra().center())));
}

HyperbolicityReport hermitian_hyperbolicity(const HermitianForm& h, const WittOptions& o) {
  require_supported_case(h);
  if (!is_regular(h)) throw std::invalid_argument("hyperbolicity test needs a regular form");
  if (!is_even(h)) throw std::invalid_argument("hyperbolicity test needs an even form");
  HyperbolicityReport r;
  r.form = trace_form(h);
  r.witt = witt_decompose(*r.form, o);
  r.hyperbolic = r.witt.hyperbolic;
  return r;
}

Decision hermitian_is_hyperbolic(const HermitianForm& h, const WittOptions& o) {
  return hermitian_hyperbolicity(h, o).hyperbolic;
}

nlohmann::json to_json(const HermitianForm& h) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < h.dim(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < h.dim(); ++j) row.push_back(h.algebra().format(h.gram(i, j)));
    rows.push_back(row);
  }
  return {{"algebra", h.algebra().describe()}, {"lambda", h.lambda()}, {"dim", h.dim()}, {"gram", rows}};
}

}  // namespace witt
