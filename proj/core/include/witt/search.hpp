#pragma once

// Candidate generators for the witness searches.  Finite fields are
// enumerated exhaustively when that fits the budget; otherwise candidates come
// from a deterministic small-height sweep followed by seeded random vectors.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "witt/matrix.hpp"

namespace witt {

/// The first `count` elements of a fixed small-height ordering of the field:
/// 0, 1, -1, 2, -2, 1/2, ... over Q, polynomials of low degree over k0(t),
/// x + y*eta with small x, y over an extension, index order over GF(q).
std::vector<Element> small_elements(FieldRef field, std::size_t count);

/// base^exp, or cap + 1 if that exceeds cap.
std::uint64_t capped_power(std::uint64_t base, std::size_t exp, std::uint64_t cap);

/// Visits every vector of F^dim over a finite field; stops early when fn
/// returns false.  Returns false iff stopped early.
bool for_each_vector(FieldRef field, std::size_t dim, const std::function<bool(const Vector&)>& fn);

/// Visits one representative (first nonzero coordinate 1) of every line.
bool for_each_line(FieldRef field, std::size_t dim, const std::function<bool(const Vector&)>& fn);

class VectorSearch {
 public:
  VectorSearch(FieldRef field, std::size_t dim, std::uint64_t seed, std::uint64_t budget);

  /// Next nonzero candidate, or nullopt once the budget is spent or the
  /// exhaustive enumeration is complete.
  std::optional<Vector> next();
  /// True when every nonzero vector has been produced.
  bool exhausted_space() const noexcept { return exhaustive_ && done_; }
  bool exhaustive() const noexcept { return exhaustive_; }
  std::uint64_t produced() const noexcept { return produced_; }

 private:
  std::optional<Vector> next_exhaustive();
  std::optional<Vector> next_sweep();

  FieldRef field_;
  std::size_t dim_;
  std::uint64_t budget_;
  std::uint64_t produced_ = 0;
  Rng rng_;
  bool exhaustive_ = false;
  bool done_ = false;
  std::uint64_t index_ = 0;
  std::uint64_t total_ = 0;
  std::vector<Element> pool_;
  std::vector<std::size_t> digits_;
  std::size_t height_ = 1;
  bool sweep_done_ = false;
};

}  // namespace witt
