#pragma once

#include <string_view>

namespace witt {

/// Three-valued outcome of every decision procedure in the library.
/// `undecided` means a search or factorisation budget ran out; it never
/// stands in for a wrong answer.
enum class Decision { yes, no, undecided };

constexpr std::string_view to_string(Decision d) {
  switch (d) {
    case Decision::yes: return "yes";
    case Decision::no: return "no";
    case Decision::undecided: return "undecided";
  }
  return "undecided";
}

/// Kleene conjunction.
constexpr Decision operator&&(Decision a, Decision b) {
  if (a == Decision::no || b == Decision::no) return Decision::no;
  if (a == Decision::yes && b == Decision::yes) return Decision::yes;
  return Decision::undecided;
}

constexpr Decision from_bool(bool b) { return b ? Decision::yes : Decision::no; }

}  // namespace witt
