#pragma once

// Descent of quadratic forms and systems from K to F: decision through the
// transfer, construction through an explicit F-rational basis.

#include <cstdint>
#include <optional>

#include "witt/quadratic_form.hpp"
#include "witt/verdict.hpp"

namespace witt {

struct DescentOptions {
  std::uint64_t budget = 20'000;  // candidate vectors per search step
  std::uint64_t restarts = 32;
  std::uint64_t seed = 1;
  std::uint64_t factor_budget = kDefaultFactorBudget;
  /// c in F^x: use the functional c*s instead of s.
  std::optional<Element> functional_scale;
};

/// c in K^x with c^2 a in F, when one exists (a != 0).
std::optional<Element> line_descent_scale(const Element& a);

/// Basis P of K^n such that every coefficient of q o P lies in F.
struct FStructure {
  Matrix basis;
  QuadraticForm descended;  // q o P viewed over F
};

DescentVerdict quad_descent_decide(const QuadraticForm& q, const DescentOptions& options = {});
std::optional<FStructure> quad_descent_construct(const QuadraticForm& q, const DescentOptions& options = {});
/// Decision plus, for "yes", a constructed and re-verified descended form.
DescentVerdict quad_descent(const QuadraticForm& q, const DescentOptions& options = {});

/// Basis P on which every component of the system is F-valued.
struct SystemFStructure {
  Matrix basis;
  std::vector<QuadraticForm> descended;
};

/// Exhaustive (finite K) or bounded search for a common F-structure.
Decision find_system_f_structure(const QuadraticSystem& q, std::uint64_t budget, std::uint64_t seed,
                                 std::optional<SystemFStructure>& out);

DescentVerdict system_descent_search(const QuadraticSystem& q, const DescentOptions& options = {});

nlohmann::json form_to_json(const QuadraticForm& q);

}  // namespace witt
