#pragma once

// Arbitrary precision integers and rationals (GMP), with a budgeted
// factorisation used by everything that needs the primes of a rational.

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace witt {

using Integer = mpz_class;
using Rational = mpq_class;

/// Default number of Pollard-rho iterations granted per composite cofactor.
inline constexpr std::uint64_t kDefaultFactorBudget = 2'000'000;

/// Prime factorisation of |n| as (prime, exponent) pairs in increasing order.
/// Returns nullopt when some cofactor resists rho within `budget` iterations.
/// n must be nonzero; factor(±1) is empty.
std::optional<std::vector<std::pair<Integer, unsigned>>> factor(
    const Integer& n, std::uint64_t budget = kDefaultFactorBudget);

/// Square class of a nonzero rational: the sign and the set of primes that
/// occur to an odd power.  Two rationals differ by a square iff their classes
/// are equal.
struct SquareClass {
  int sign = 1;
  std::vector<Integer> odd_primes;  // sorted

  /// The unique squarefree integer in this class.
  Integer squarefree() const;
  SquareClass operator*(const SquareClass& other) const;
  bool operator==(const SquareClass&) const = default;
};

std::optional<SquareClass> square_class(const Rational& r,
                                        std::uint64_t budget = kDefaultFactorBudget);

/// p-adic valuation of a nonzero integer.
unsigned valuation(const Integer& n, const Integer& p);

/// Legendre symbol (a/p) for an odd prime p; 0 when p | a.
int legendre(const Integer& a, const Integer& p);

bool is_probable_prime(const Integer& n);

/// Rational r written as the integer num*den, which lies in the same square class.
Integer square_class_representative(const Rational& r);

}  // namespace witt
