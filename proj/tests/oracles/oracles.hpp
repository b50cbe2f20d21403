#pragma once

// Brute-force oracles.  None of these call the library's decision
// procedures; they only borrow field arithmetic and form evaluation.

#include <cstdint>
#include <optional>
#include <vector>

#include "witt/quadratic_form.hpp"

namespace witt::oracle {

/// GF(9) = GF(3)(eta), eta^2 = 2, in table-free integer arithmetic.
/// Elements are x + 3*y for x + y*eta.
struct Gf9 {
  static int add(int a, int b);
  static int mul(int a, int b);
  static int neg(int a);
  static bool in_base(int a) { return a < 3; }
};

/// Coefficients of a form over GF(3)(sqrt(2)) from the library, as Gf9 codes.
std::vector<std::vector<int>> gf9_coefficients(const QuadraticForm& q);

/// Does some K-basis make every coefficient of q lie in GF(3)?  Exhaustive
/// backtracking over K^n, n <= 3.
bool gf9_has_f_structure(const std::vector<std::vector<int>>& upper);

/// Witt index by repeatedly finding an isotropic vector by enumeration and
/// splitting off a hyperbolic plane.  q regular over a finite field.
std::size_t witt_index_by_stripping(const QuadraticForm& q);

/// Hilbert symbol of nonzero integers at an odd or even prime p via
/// primitive solutions of a x^2 + b y^2 = z^2 modulo p^k (k = 3, or 6 for
/// p = 2).  Intended for |a|, |b| small and p-adic valuations at most 1.
int hilbert_symbol_brute(long a, long b, long p);

/// A polynomial over GF(2) (lowest coefficient first) is a square in
/// GF(2)(t) iff it only has even-degree terms.
bool gf2_poly_is_square(const std::vector<int>& coefficients);

}  // namespace witt::oracle
