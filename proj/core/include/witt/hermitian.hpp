#pragma once

// lambda-hermitian forms h(u, v) = theta(x)^T G y over (D, theta) on the right
// D-space D^n, with G = lambda theta(G)^T.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "witt/algebra.hpp"
#include "witt/decision.hpp"
#include "witt/witt.hpp"

namespace witt {

using DVector = std::vector<DElement>;

/// Matrix over D, row-major.
class DMatrix {
 public:
  DMatrix() = default;
  DMatrix(const AlgebraWithInvolution& alg, std::size_t rows, std::size_t cols);
  static DMatrix identity(const AlgebraWithInvolution& alg, std::size_t n);
  static DMatrix from_columns(const AlgebraWithInvolution& alg, std::size_t rows, const std::vector<DVector>& cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  DElement& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const DElement& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  DVector column(std::size_t j) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<DElement> data_;
};

DMatrix multiply(const AlgebraWithInvolution& alg, const DMatrix& a, const DMatrix& b);
/// Rank of the right D-span of the columns.
std::size_t column_rank(const AlgebraWithInvolution& alg, const DMatrix& m);

class HermitianForm {
 public:
  /// Throws std::invalid_argument unless G = lambda theta(G)^T.
  HermitianForm(AlgebraRef algebra, int lambda, DMatrix gram);
  static HermitianForm diagonal(AlgebraRef algebra, int lambda, const DVector& entries);

  const AlgebraWithInvolution& algebra() const noexcept { return *alg_; }
  const AlgebraRef& algebra_ref() const noexcept { return alg_; }
  int lambda() const noexcept { return lambda_; }
  std::size_t dim() const noexcept { return gram_.rows(); }
  const DMatrix& gram() const noexcept { return gram_; }
  const DElement& gram(std::size_t i, std::size_t j) const { return gram_(i, j); }

  DElement operator()(const DVector& x, const DVector& y) const;
  /// The form on the columns of P: Gram theta(P)^T G P.
  HermitianForm compose(const DMatrix& p) const;
  bool operator==(const HermitianForm& o) const;

 private:
  AlgebraRef alg_;
  int lambda_;
  DMatrix gram_;
};

bool is_regular(const HermitianForm& h);
/// Every diagonal Gram entry lies in Symd_lambda(D, theta).
bool is_even(const HermitianForm& h);

struct SplitOff {
  DElement alpha;           // h(v, v)
  HermitianForm complement; // h on v^perp
  DMatrix basis;            // columns span v^perp
};
/// Throws std::invalid_argument when h(v, v) is not invertible.
SplitOff split_off(const HermitianForm& h, const DVector& v);

/// q_{h,B}: the system over the centre on the F-space with basis
/// f_a = e_j delta_k (a = j * deg D + k), component i = pi_i(h(v, v)).
struct AssociatedSystem {
  QuadraticSystem system;
  std::vector<DElement> basis;
};
AssociatedSystem associated_system(const HermitianForm& h, const std::vector<DElement>& basis);
/// Jacobson trace form q_h: quaternion algebra, symplectic, lambda = +1.
QuadraticForm jacobson_form(const HermitianForm& h);
/// q_{h,u}: quaternion algebra, orthogonal, lambda = -epsilon, u spanning Symd_lambda.
QuadraticForm skew_form(const HermitianForm& h, const DElement& u);
/// q_{h,u} for the Symd_lambda generator used by the hyperbolicity test.
QuadraticForm trace_form(const HermitianForm& h);

HermitianForm extend_scalars(const HermitianForm& h, FieldRef extension);
/// s_*(h) over the base algebra on the D-space with basis e_1..e_n, e_1 eta..e_n eta.
HermitianForm transfer_hermitian(const HermitianForm& h, const Functional& s);
HermitianForm transfer_hermitian(const HermitianForm& h);

/// Throws std::invalid_argument for D = F with lambda = -1 (or characteristic 2)
/// and for quaternion algebras with lambda != -epsilon.
void require_supported_case(const HermitianForm& h);

struct HyperbolicityReport {
  Decision hyperbolic = Decision::undecided;
  WittReport witt;
  std::optional<QuadraticForm> form;  // the associated quadratic form that was decided
};
HyperbolicityReport hermitian_hyperbolicity(const HermitianForm& h, const WittOptions& options = {});
Decision hermitian_is_hyperbolic(const HermitianForm& h, const WittOptions& options = {});

nlohmann::json to_json(const HermitianForm& h);

}  // namespace witt
