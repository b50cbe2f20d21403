#pragma once

// Random inputs shared by the acceptance criteria and the unit tests.

#include <cstddef>

#include "witt/hermitian.hpp"

namespace witt::gen {

Element nonzero(FieldRef f, Rng& rng);
QuadraticForm random_form(FieldRef f, std::size_t n, Rng& rng);
/// Regular q of dimension n (rejection sampling).
QuadraticForm random_regular_form(FieldRef f, std::size_t n, Rng& rng);
/// Regular hermitian form (lambda = 1) with G = theta(G)^T.
HermitianForm random_hermitian(AlgebraRef alg, std::size_t n, Rng& rng);

}  // namespace witt::gen
