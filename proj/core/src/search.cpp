#include "witt/search.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace witt {

namespace {

constexpr std::size_t kPoolSize = 9;

std::vector<Rational> small_rationals(std::size_t count) {
  std::vector<Rational> out{Rational(0)};
  for (long h = 1; out.size() < count; ++h) {
    for (long den = 1; den <= h && out.size() < count; ++den) {
      long num = h - den + 1;
      if (std::gcd(num, den) != 1) continue;
      out.emplace_back(num, den);
      if (out.size() < count) out.emplace_back(-num, den);
    }
  }
  return out;
}

}  // namespace

std::vector<Element> small_elements(FieldRef field, std::size_t count) {
  std::vector<Element> out;
  if (field->is_finite()) {
    const std::uint64_t q = *field->order();
    for (std::uint64_t i = 0; i < q && out.size() < count; ++i) out.push_back(field->element_at(i));
    return out;
  }
  if (field->is_rationals()) {
    for (const auto& r : small_rationals(count)) out.push_back(field->from_integer(r.get_num()) /
                                                                field->from_integer(r.get_den()));
    return out;
  }
  if (const auto* fn = field->as_function_field()) {
    const std::uint64_t q = fn->constants().size();
    for (std::uint64_t w = 0; out.size() < count; ++w) {
      FunctionField::Poly p;
      for (std::uint64_t v = w; v; v /= q) p.push_back(v % q);
      out.push_back(fn->polynomial(p));
    }
    return out;
  }
  if (const auto* ext = field->as_extension()) {
    // Interleave so that low-height pairs come first.
    std::size_t side = 1;
    while (side * side < count) ++side;
    auto base = small_elements(ext->base(), side);
    std::vector<std::pair<std::size_t, std::size_t>> idx;
    for (std::size_t i = 0; i < base.size(); ++i)
      for (std::size_t j = 0; j < base.size(); ++j) idx.emplace_back(i, j);
    std::stable_sort(idx.begin(), idx.end(), [](auto a, auto b) {
      return std::max(a.first, a.second) < std::max(b.first, b.second);
    });
    for (auto [i, j] : idx) {
      if (out.size() == count) break;
      out.push_back(ext->make(base[i], base[j]));
    }
    return out;
  }
  throw std::invalid_argument("small_elements: unsupported field");
}

std::uint64_t capped_power(std::uint64_t base, std::size_t exp, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && r > cap / base) return cap + 1;
    r *= base;
  }
  return r;
}

bool for_each_vector(FieldRef field, std::size_t dim, const std::function<bool(const Vector&)>& fn) {
  if (!field->is_finite()) throw std::invalid_argument("for_each_vector over an infinite field");
  const std::uint64_t q = *field->order();
  std::vector<std::uint64_t> digits(dim, 0);
  std::vector<Element> elems;
  for (std::uint64_t i = 0; i < q; ++i) elems.push_back(field->element_at(i));
  Vector v(dim, elems[0]);
  for (;;) {
    if (!fn(v)) return false;
    std::size_t k = 0;
    while (k < dim && ++digits[k] == q) {
      digits[k] = 0;
      v[k] = elems[0];
      ++k;
    }
    if (k == dim) return true;
    v[k] = elems[digits[k]];
  }
}

bool for_each_line(FieldRef field, std::size_t dim, const std::function<bool(const Vector&)>& fn) {
  for (std::size_t lead = 0; lead < dim; ++lead) {
    const std::size_t tail = dim - lead - 1;
    bool cont = for_each_vector(field, tail, [&](const Vector& rest) {
      Vector v = zero_vector(field, dim);
      v[lead] = field->one();
      for (std::size_t i = 0; i < tail; ++i) v[lead + 1 + i] = rest[i];
      return fn(v);
    });
    if (!cont) return false;
  }
  return true;
}

VectorSearch::VectorSearch(FieldRef field, std::size_t dim, std::uint64_t seed, std::uint64_t budget)
    : field_(field), dim_(dim), budget_(budget), rng_(seed) {
  if (field->is_finite()) {
    total_ = capped_power(*field->order(), dim, budget);
    if (total_ <= budget) {
      exhaustive_ = true;
      index_ = 1;
      return;
    }
  }
  pool_ = small_elements(field, kPoolSize);
  digits_.assign(dim, 0);
}

std::optional<Vector> VectorSearch::next_exhaustive() {
  if (index_ >= total_) {
    done_ = true;
    return std::nullopt;
  }
  const std::uint64_t q = *field_->order();
  Vector v(dim_);
  std::uint64_t w = index_++;
  for (std::size_t i = 0; i < dim_; ++i) {
    v[i] = field_->element_at(w % q);
    w /= q;
  }
  return v;
}

// Tuples over the pool whose largest index equals the current height, in
// increasing height.
std::optional<Vector> VectorSearch::next_sweep() {
  while (!sweep_done_) {
    std::size_t k = 0;
    while (k < dim_ && ++digits_[k] > height_) {
      digits_[k] = 0;
      ++k;
    }
    if (k == dim_) {
      if (++height_ >= pool_.size()) {
        sweep_done_ = true;
        break;
      }
      std::fill(digits_.begin(), digits_.end(), 0);
      continue;
    }
    if (*std::max_element(digits_.begin(), digits_.end()) != height_) continue;
    Vector v(dim_);
    for (std::size_t i = 0; i < dim_; ++i) v[i] = pool_[digits_[i]];
    return v;
  }
  return std::nullopt;
}

std::optional<Vector> VectorSearch::next() {
  if (produced_ >= budget_ || dim_ == 0) return std::nullopt;
  std::optional<Vector> v;
  if (exhaustive_) {
    v = next_exhaustive();
  } else {
    if (produced_ < budget_ / 2) v = next_sweep();
    if (!v) {
      Vector r(dim_);
      do {
        for (auto& e : r) e = (rng_() % 3 == 0) ? pool_[rng_() % pool_.size()] : field_->random(rng_);
      } while (is_zero(r));
      v = std::move(r);
    }
  }
  if (v) ++produced_;
  return v;
}

}  // namespace witt
