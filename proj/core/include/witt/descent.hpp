#pragma once

// Descent of hermitian forms from (D, theta)_K to (D, theta): the decision
// through hyperbolicity of the transfer s_*(h), construction by splitting off
// F-rational values, and the quaternion criterion through the corestriction
// and the trace forms q_h / q_{h,u}.

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "witt/hermitian.hpp"
#include "witt/verdict.hpp"

namespace witt {

struct HermitianDescentOptions {
  std::uint64_t budget = 4'000;  // candidate vectors per splitting step
  std::uint64_t restarts = 16;
  std::uint64_t seed = 1;
  std::uint64_t factor_budget = kDefaultFactorBudget;
  /// c in F^x: use c*s instead of s.
  std::optional<Element> functional_scale;
};

/// h ~ <alpha_1, ..., alpha_n>_K: columns of `basis` are an orthogonal basis
/// of V with h(b_i, b_i) = alpha_i, each alpha_i in the base algebra.
struct HermitianCertificate {
  DVector alphas;
  DMatrix basis;
};

DescentVerdict hermitian_descent_decide(const HermitianForm& h, const HermitianDescentOptions& options = {});
std::optional<HermitianCertificate> hermitian_descent_construct(const HermitianForm& h,
                                                                const HermitianDescentOptions& options = {});
/// Exact check: theta(P)^T G P = diag(alpha)_K and P invertible.
bool verify_certificate(const HermitianForm& h, const HermitianCertificate& c);
/// Decision, then for "yes" a constructed and verified certificate.
DescentVerdict hermitian_descent(const HermitianForm& h, const HermitianDescentOptions& options = {});

/// Quaternion algebra with involution over K, not necessarily given as an
/// extension: corestriction split test plus descent of q_h (symplectic) or
/// q_{h,u} with u^2 in F (orthogonal).
DescentVerdict quaternionic_descent_to_F(const HermitianForm& h, const HermitianDescentOptions& options = {});

/// A descent of a symmetric bilinear form forces N(det) to be a square in F.
/// Returns yes when that fails, i.e. when no descent exists.
Decision bilinear_determinant_obstruction(const SymmetricBilinearForm& b);

/// The totally singular example over F = F_2(t), K = F(eta), eta^2 + eta = t,
/// h = <1, 1 + t^2 + t eta>: q_h descends, h does not.
struct RemarkReport {
  std::string norm;                    // N(1 + t^2 + t eta)
  bool norm_is_square = true;
  std::string q_v;                     // q(v)
  std::string q_w;                     // q(eta v + (1+eta) w)
  bool q_w_in_base = false;
  bool q_descends = false;             // explicit F-basis verified
  Decision h_has_no_descent = Decision::undecided;
  bool excluded_case_rejected = false; // the hermitian decision refuses this input
  bool passed = false;
  nlohmann::json to_json() const;
};
RemarkReport remark_counterexample_check();

/// The system (<1>, <3 + 2 sqrt 2>) over Q(sqrt 2): each component descends,
/// the system does not.
struct ErratumReport {
  DescentVerdict first;
  DescentVerdict second;
  DescentVerdict system;
  bool passed = false;
  nlohmann::json to_json() const;
};
ErratumReport erratum_counterexample_check(std::uint64_t seed = 1);

nlohmann::json to_json(const HermitianCertificate& c, const AlgebraWithInvolution& alg);

}  // namespace witt
