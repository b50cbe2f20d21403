#pragma once

// Quaternion algebras over the supported fields, their involutions of the
// first kind, split tests and descent of an algebra with involution from K to F.
//
// Odd characteristic: (a, b) with i^2 = a, j^2 = b, ji = -ij.
// Characteristic 2:   [a, b) with i^2 + i = a, j^2 = b, j i j^-1 = i + 1.
// Elements are coordinate 4-tuples (w, x, y, z) = w + x i + y j + z ij.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "witt/decision.hpp"
#include "witt/quadratic_form.hpp"

namespace witt {

using Quaternion = std::array<Element, 4>;

class QuaternionAlgebra {
 public:
  QuaternionAlgebra(FieldRef field, Element a, Element b);

  FieldRef field() const noexcept { return field_; }
  const Element& a() const noexcept { return a_; }
  const Element& b() const noexcept { return b_; }
  bool characteristic_two() const noexcept { return field_->characteristic() == 2; }
  /// "(a,b)" or "[a,b)".
  std::string presentation() const;

  Quaternion make(Element w, Element x, Element y, Element z) const;
  Quaternion scalar(const Element& c) const;
  Quaternion zero() const { return scalar(field_->zero()); }
  Quaternion one() const { return scalar(field_->one()); }
  Quaternion basis(std::size_t i) const;

  Quaternion add(const Quaternion& u, const Quaternion& v) const;
  Quaternion sub(const Quaternion& u, const Quaternion& v) const;
  Quaternion neg(const Quaternion& u) const;
  Quaternion mul(const Quaternion& u, const Quaternion& v) const;
  Quaternion scale(const Element& c, const Quaternion& u) const;
  /// Throws std::domain_error for zero divisors.
  Quaternion inverse(const Quaternion& u) const;

  Quaternion gamma(const Quaternion& u) const;
  Element trd(const Quaternion& u) const;
  Element nrd(const Quaternion& u) const;

  bool is_zero(const Quaternion& u) const;
  /// The element as a central scalar, when it is one.
  std::optional<Element> as_scalar(const Quaternion& u) const;
  bool equal(const Quaternion& u, const Quaternion& v) const;

  /// The norm form Nrd as a 4-dimensional quadratic form on the coordinates.
  QuadraticForm norm_form() const;

  std::string format(const Quaternion& u) const;
  bool operator==(const QuaternionAlgebra& o) const { return field_ == o.field_ && a_ == o.a_ && b_ == o.b_; }

 private:
  FieldRef field_;
  Element a_;
  Element b_;
  // table_[r][s] = coordinates of basis(r) * basis(s).
  std::array<std::array<Quaternion, 4>, 4> table_;
};

/// "(a,b)" in odd characteristic or "[a,b)" in characteristic 2.
QuaternionAlgebra parse_quaternion_algebra(FieldRef field, std::string_view text);
/// "w,x,y,z".
Quaternion parse_quaternion(const QuaternionAlgebra& q, std::string_view text);

/// sigma = gamma (canonical) or sigma = Int(u) o gamma (orthogonal).
struct InvolutionSpec {
  enum class Kind { canonical, orthogonal };
  Kind kind = Kind::canonical;
  std::optional<Quaternion> u;

  static InvolutionSpec canonical() { return {}; }
  static InvolutionSpec inner(Quaternion u) { return {Kind::orthogonal, std::move(u)}; }
  std::string describe(const QuaternionAlgebra& q) const;
};

/// Throws std::invalid_argument unless sigma is an involution of the first kind.
void validate_involution(const QuaternionAlgebra& q, const InvolutionSpec& sigma);
Quaternion apply_involution(const QuaternionAlgebra& q, const InvolutionSpec& sigma, const Quaternion& x);

struct InvolutionType {
  bool symplectic = true;
  int epsilon = -1;  // symmetric (+1) or antisymmetric (-1); always +1 in characteristic 2
};
InvolutionType involution_type(const QuaternionAlgebra& q, const InvolutionSpec& sigma);

/// Basis over the centre of Symd_lambda = {x + lambda sigma(x)} and of
/// Sym_lambda = {x : sigma(x) = lambda x}.
std::vector<Quaternion> symd_basis(const QuaternionAlgebra& q, const InvolutionSpec& sigma, int lambda);
std::vector<Quaternion> sym_basis(const QuaternionAlgebra& q, const InvolutionSpec& sigma, int lambda);

struct QuaternionOptions {
  std::uint64_t budget = 20'000;
  std::uint64_t seed = 1;
  std::uint64_t factor_budget = kDefaultFactorBudget;
};

struct SplitReport {
  Decision split = Decision::undecided;
  std::string method;
  std::vector<std::string> ramified;  // places with Hilbert symbol -1 (over Q)
};

SplitReport split_report(const QuaternionAlgebra& q, const QuaternionOptions& options = {});
Decision is_split(const QuaternionAlgebra& q, const QuaternionOptions& options = {});

/// Same constants read in the extension field.
QuaternionAlgebra extend_scalars(const QuaternionAlgebra& q, FieldRef extension);
Quaternion extend_scalars(const Quaternion& u, FieldRef extension);
InvolutionSpec extend_scalars(const InvolutionSpec& sigma, FieldRef extension);
/// Coordinates all in the base field of an extension.
std::optional<Quaternion> restrict_to_base(const Quaternion& u);

struct CorSplitReport {
  Decision verdict = Decision::undecided;
  std::string method;
  /// The F-quaternion algebra whose class is that of the corestriction.
  std::optional<std::pair<Element, Element>> witness_class;
  bool characteristic_two = false;
  SplitReport witness_split;
};

CorSplitReport cor_split_test(const QuaternionAlgebra& q, const QuaternionOptions& options = {});

/// An F-form of Q: Q' = (a', b')_F together with the K-basis {1, x, y, xy}
/// of Q (columns of `basis`, coordinates in the original presentation).
struct FPresentation {
  QuaternionAlgebra descended;
  Matrix basis;
  Quaternion x;
  Quaternion y;

  /// Image of an element of Q'_K in Q.
  Quaternion map(const QuaternionAlgebra& q, const Quaternion& descended_coords) const;
  /// Coordinates in Q'_K of an element of Q.
  Quaternion pull(const QuaternionAlgebra& q, const Quaternion& u) const;
};

struct AlgDescentResult {
  Decision decision = Decision::undecided;
  std::string route;
  std::string summary;
  CorSplitReport cor;
  InvolutionType type;
  /// Orthogonal case: u in Symd_{-1} with u^2 in F.
  std::optional<Quaternion> u;
  std::optional<FPresentation> presentation;
  /// The descended involution on Q' (u in Q'-coordinates for orthogonal).
  std::optional<InvolutionSpec> descended_involution;
};

AlgDescentResult alg_descent(const QuaternionAlgebra& q, const InvolutionSpec& sigma,
                             const QuaternionOptions& options = {});

nlohmann::json to_json(const CorSplitReport& r);
nlohmann::json to_json(const SplitReport& r);
nlohmann::json to_json(const QuaternionAlgebra& q);

}  // namespace witt
