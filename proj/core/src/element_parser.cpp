#include <cctype>
#include <charconv>
#include <stdexcept>
#include <string>

#include "witt/field.hpp"

namespace witt {

namespace {

class ExprParser {
 public:
  ExprParser(FieldRef field, std::string_view text) : f_(field), s_(text) {}

  Element parse() {
    Element e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("cannot parse element \"" + std::string(s_) + "\" at offset " +
                                std::to_string(pos_) + ": " + what);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Element expr() {
    Element e = term();
    for (;;) {
      if (eat('+'))
        e = e + term();
      else if (eat('-'))
        e = e - term();
      else
        return e;
    }
  }

  Element term() {
    Element e = unary();
    for (;;) {
      if (eat('*')) {
        e = e * unary();
      } else if (eat('/')) {
        Element d = unary();
        if (d.is_zero()) fail("division by zero");
        e = e / d;
      } else {
        return e;
      }
    }
  }

  Element unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  Element power() {
    Element base = primary();
    if (!eat('^')) return base;
    bool negative = eat('-');
    skip();
    long long e = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), e);
    if (ec != std::errc()) fail("expected an integer exponent");
    pos_ = static_cast<std::size_t>(ptr - s_.data());
    if (negative && base.is_zero()) fail("division by zero");
    return pow(base, negative ? -e : e);
  }

  Element primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    if (eat('(')) {
      Element e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return f_->from_integer(Integer(std::string(s_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string_view name = s_.substr(start, pos_ - start);
      if (auto v = f_->symbol(name)) return *v;
      pos_ = start;
      fail("unknown symbol '" + std::string(name) + "' in " + f_->descriptor());
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  FieldRef f_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void field_error(std::string_view text, const std::string& what) {
  throw std::invalid_argument("cannot parse field \"" + std::string(text) + "\": " + what);
}

std::uint64_t parse_uint(std::string_view whole, std::string_view s) {
  s = strip(s);
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) field_error(whole, "bad integer '" + std::string(s) + "'");
  return v;
}

// Index of the parenthesis matching the '(' at `open`.
std::size_t matching(std::string_view whole, std::string_view s, std::size_t open) {
  int depth = 0;
  for (std::size_t i = open; i < s.size(); ++i) {
    if (s[i] == '(' || s[i] == '[') ++depth;
    if (s[i] == ')' || s[i] == ']') {
      if (--depth == 0) return i;
    }
  }
  field_error(whole, "unbalanced parentheses");
}

FieldRef parse_base(std::string_view whole, std::string_view s, std::size_t& pos) {
  if (s.substr(pos, 1) == "Q" && (pos + 1 == s.size() || s[pos + 1] == '(')) {
    pos += 1;
    return rationals();
  }
  if (s.substr(pos, 3) == "GF(") {
    std::size_t close = matching(whole, s, pos + 2);
    std::string_view inner = s.substr(pos + 3, close - pos - 3);
    pos = close + 1;
    if (auto caret = inner.find('^'); caret != std::string_view::npos)
      return galois_field(parse_uint(whole, inner.substr(0, caret)),
                          static_cast<unsigned>(parse_uint(whole, inner.substr(caret + 1))));
    return prime_field(parse_uint(whole, inner));
  }
  if (s.substr(pos, 3) == "Fq(") {
    std::size_t close = matching(whole, s, pos + 2);
    std::string_view inner = s.substr(pos + 3, close - pos - 3);
    pos = close + 1;
    auto c1 = inner.find(',');
    if (c1 == std::string_view::npos) field_error(whole, "Fq needs p and k");
    std::uint64_t p = parse_uint(whole, inner.substr(0, c1));
    std::string_view rest = inner.substr(c1 + 1);
    auto c2 = rest.find(',');
    unsigned k = static_cast<unsigned>(parse_uint(whole, rest.substr(0, c2)));
    if (c2 == std::string_view::npos) return galois_field(p, k);
    std::string_view opt = strip(rest.substr(c2 + 1));
    if (opt.substr(0, 5) != "poly=") field_error(whole, "expected poly=[...]");
    opt = strip(opt.substr(5));
    if (opt.size() < 2 || opt.front() != '[' || opt.back() != ']')
      field_error(whole, "expected poly=[...]");
    opt = opt.substr(1, opt.size() - 2);
    std::vector<std::uint64_t> coeffs;
    while (!opt.empty()) {
      auto comma = opt.find(',');
      coeffs.push_back(parse_uint(whole, opt.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      opt = opt.substr(comma + 1);
    }
    if (coeffs.size() != k + 1) field_error(whole, "modulus must have k+1 coefficients");
    return galois_field(p, coeffs);
  }
  field_error(whole, "expected Q, GF(...) or Fq(...)");
}

}  // namespace

Element parse_element(FieldRef field, std::string_view text) {
  if (!field) throw std::invalid_argument("parse_element: null field");
  return ExprParser(field, text).parse();
}

FieldRef parse_extension(FieldRef base, std::string_view text) {
  std::string_view s = strip(text);
  auto open = s.find('(');
  if (open == std::string_view::npos || s.back() != ')')
    throw std::invalid_argument("cannot parse extension \"" + std::string(text) + "\"");
  std::string_view name = strip(s.substr(0, open));
  std::string_view arg = s.substr(open + 1, s.size() - open - 2);
  Element e = parse_element(base, arg);
  if (name == "sqrt") return radical_extension(base, e);
  if (name == "artin-schreier") return artin_schreier_extension(base, e);
  throw std::invalid_argument("unknown extension kind \"" + std::string(name) + "\"");
}

FieldRef parse_field(std::string_view text) {
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  std::string_view s = compact;
  std::size_t pos = 0;
  FieldRef f = parse_base(text, s, pos);
  while (pos < s.size()) {
    if (s[pos] != '(') field_error(text, "unexpected trailing text");
    std::size_t close = matching(text, s, pos);
    std::string_view inner = s.substr(pos + 1, close - pos - 1);
    pos = close + 1;
    if (inner == "t")
      f = function_field(f);
    else
      f = parse_extension(f, inner);
  }
  return f;
}

}  // namespace witt
