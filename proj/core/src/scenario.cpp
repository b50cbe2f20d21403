#include "witt/scenario.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace witt {

ScenarioError::ScenarioError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

constexpr std::pair<Task, std::string_view> kTasks[] = {
    {Task::descend, "descend"},
    {Task::cor_split, "cor-split"},
    {Task::witt, "witt"},
    {Task::metabolic, "metabolic"},
    {Task::reproduce_remark, "reproduce-remark"},
    {Task::reproduce_erratum, "reproduce-erratum-counterexample"},
};

struct Value {
  std::string text;
  bool quoted = false;
  std::size_t line = 0;
  std::size_t column = 0;  // of the value
  std::size_t key_column = 0;
};

bool key_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-'; }

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

// Split on `sep` outside parentheses and brackets.
std::vector<std::string> split_entries(const Value& v, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (std::size_t i = 0; i < v.text.size(); ++i) {
    const char c = v.text[i];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (depth < 0) throw ScenarioError(v.line, v.column + i + 1, "unbalanced bracket");
    if (c == sep && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (depth != 0) throw ScenarioError(v.line, v.column, "unbalanced bracket");
  out.push_back(trim(cur));
  for (const auto& e : out)
    if (e.empty()) throw ScenarioError(v.line, v.column, "empty entry");
  return out;
}

std::uint64_t to_u64(const Value& v) {
  std::uint64_t out = 0;
  auto [p, ec] = std::from_chars(v.text.data(), v.text.data() + v.text.size(), out);
  if (ec != std::errc() || p != v.text.data() + v.text.size())
    throw ScenarioError(v.line, v.column, "expected a non-negative integer, got '" + v.text + "'");
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Scenario run() {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text_.size()) {
      std::size_t end = text_.find('\n', pos);
      if (end == std::string_view::npos) end = text_.size();
      ++line_no;
      line(text_.substr(pos, end - pos), line_no);
      pos = end + 1;
    }
    finish_section();
    validate();
    return std::move(s_);
  }

 private:
  void line(std::string_view raw, std::size_t n) {
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    std::size_t i = 0;
    auto skip_ws = [&] {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t')) ++i;
    };
    skip_ws();
    if (i == raw.size() || raw[i] == '#') return;
    if (raw[i] == '[') {
      const std::size_t close = raw.find(']', i);
      if (close == std::string_view::npos) throw ScenarioError(n, i + 1, "missing ']' in section header");
      const std::string name = trim(raw.substr(i + 1, close - i - 1));
      i = close + 1;
      skip_ws();
      if (i < raw.size() && raw[i] != '#') throw ScenarioError(n, i + 1, "unexpected text after section header");
      finish_section();
      open_section(name, n, 2);
      return;
    }
    const std::size_t key_col = i + 1;
    std::size_t k = i;
    while (k < raw.size() && key_char(raw[k])) ++k;
    if (k == i) throw ScenarioError(n, i + 1, "expected a key");
    const std::string key(raw.substr(i, k - i));
    i = k;
    skip_ws();
    if (i == raw.size() || raw[i] != '=') throw ScenarioError(n, i + 1, "expected '=' after '" + key + "'");
    ++i;
    skip_ws();
    Value v;
    v.line = n;
    v.column = i + 1;
    v.key_column = key_col;
    if (i < raw.size() && raw[i] == '"') {
      v.quoted = true;
      ++i;
      bool closed = false;
      while (i < raw.size()) {
        const char c = raw[i++];
        if (c == '\\') {
          if (i == raw.size()) break;
          v.text += raw[i++];
        } else if (c == '"') {
          closed = true;
          break;
        } else {
          v.text += c;
        }
      }
      if (!closed) throw ScenarioError(n, v.column, "unterminated string");
    } else {
      const std::size_t b = i;
      while (i < raw.size() && raw[i] != '#' && raw[i] != ' ' && raw[i] != '\t') ++i;
      v.text = std::string(raw.substr(b, i - b));
      if (v.text.empty()) throw ScenarioError(n, v.column, "missing value for '" + key + "'");
    }
    skip_ws();
    if (i < raw.size() && raw[i] != '#') throw ScenarioError(n, i + 1, "unexpected text after value");
    entry(key, v);
  }

  void open_section(const std::string& name, std::size_t n, std::size_t col) {
    section_ = name;
    section_line_ = n;
    if (name == "form") {
      s_.forms.emplace_back();
    } else if (name == "algebra") {
      if (s_.algebra) throw ScenarioError(n, col, "duplicate [algebra] section");
      s_.algebra.emplace();
    } else if (name == "hermitian") {
      if (s_.hermitian) throw ScenarioError(n, col, "duplicate [hermitian] section");
      s_.hermitian.emplace();
    } else {
      throw ScenarioError(n, col, "unknown section [" + name + "]");
    }
    seen_.clear();
  }

  void finish_section() {
    const auto empty_rows = [&](const auto& spec, const char* what) {
      if (spec.rows.empty())
        throw ScenarioError(section_line_, 1, std::string("[") + what + "] needs 'row' or 'diagonal' entries");
    };
    if (section_ == "form") empty_rows(s_.forms.back(), "form");
    if (section_ == "hermitian") empty_rows(*s_.hermitian, "hermitian");
    if (section_ == "algebra" && s_.algebra->quaternion.empty())
      throw ScenarioError(section_line_, 1, "[algebra] needs 'quaternion'");
  }

  void once(const std::string& key, const Value& v) {
    for (const auto& k : seen_)
      if (k == key) throw ScenarioError(v.line, v.key_column, "duplicate key '" + key + "'");
    seen_.push_back(key);
  }

  template <class Spec>
  void rows_entry(Spec& spec, const std::string& key, const Value& v, char sep) {
    if (key == "diagonal") {
      once(key, v);
      if (!spec.rows.empty()) throw ScenarioError(v.line, v.key_column, "'diagonal' cannot be mixed with 'row'");
      spec.diagonal = true;
      spec.rows.push_back(split_entries(v, sep));
      return;
    }
    if (spec.diagonal) throw ScenarioError(v.line, v.key_column, "'row' cannot be mixed with 'diagonal'");
    auto r = split_entries(v, sep);
    if (!spec.rows.empty() && r.size() != spec.rows.front().size())
      throw ScenarioError(v.line, v.column, "row has " + std::to_string(r.size()) + " entries, expected " +
                                                std::to_string(spec.rows.front().size()));
    spec.rows.push_back(std::move(r));
  }

  void entry(const std::string& key, const Value& v) {
    const auto unknown = [&] {
      throw ScenarioError(v.line, v.key_column,
                          "unknown key '" + key + "'" + (section_.empty() ? "" : " in [" + section_ + "]"));
    };
    if (section_.empty()) {
      if (key == "row" || key == "diagonal") unknown();
      once(key, v);
      if (key == "task") {
        auto t = parse_task(v.text);
        if (!t) throw ScenarioError(v.line, v.column, "unknown task '" + v.text + "'");
        s_.task = *t;
        has_task_ = true;
      } else if (key == "name") {
        s_.name = v.text;
      } else if (key == "field") {
        s_.field = v.text;
      } else if (key == "ext") {
        s_.ext = v.text;
      } else if (key == "seed") {
        s_.seed = to_u64(v);
      } else if (key == "budget") {
        s_.budget = to_u64(v);
      } else if (key == "scale") {
        s_.scale = v.text;
      } else {
        unknown();
      }
      return;
    }
    if (section_ == "form") {
      if (key != "row" && key != "diagonal") unknown();
      rows_entry(s_.forms.back(), key, v, ',');
    } else if (section_ == "hermitian") {
      if (key == "lambda") {
        once(key, v);
        if (v.text == "1" || v.text == "+1") s_.hermitian->lambda = 1;
        else if (v.text == "-1") s_.hermitian->lambda = -1;
        else throw ScenarioError(v.line, v.column, "lambda must be 1 or -1");
      } else if (key == "row" || key == "diagonal") {
        rows_entry(*s_.hermitian, key, v, ';');
      } else {
        unknown();
      }
    } else if (section_ == "algebra") {
      once(key, v);
      auto& a = *s_.algebra;
      if (key == "quaternion") {
        a.quaternion = v.text;
      } else if (key == "over") {
        if (v.text == "base") a.over_base = true;
        else if (v.text == "extension") a.over_base = false;
        else throw ScenarioError(v.line, v.column, "over must be \"base\" or \"extension\"");
      } else if (key == "involution") {
        if (v.text != "canonical" && v.text != "int(u)*gamma")
          throw ScenarioError(v.line, v.column, "involution must be \"canonical\" or \"int(u)*gamma\"");
        a.involution = v.text;
      } else if (key == "u") {
        a.u = v.text;
      } else {
        unknown();
      }
    }
  }

  void validate() {
    const bool reproduce = s_.task == Task::reproduce_remark || s_.task == Task::reproduce_erratum;
    if (!has_task_) throw ScenarioError(1, 1, "missing 'task'");
    if (reproduce) return;
    if (s_.field.empty()) throw ScenarioError(1, 1, "missing 'field'");
    if (s_.algebra) {
      const auto& a = *s_.algebra;
      if (a.involution == "int(u)*gamma" && !a.u) throw ScenarioError(1, 1, "int(u)*gamma needs 'u'");
      if (a.involution == "canonical" && a.u) throw ScenarioError(1, 1, "'u' given with the canonical involution");
    }
    switch (s_.task) {
      case Task::descend:
        if (!s_.ext) throw ScenarioError(1, 1, "task descend needs 'ext'");
        if (s_.forms.empty() && !s_.hermitian && !s_.algebra)
          throw ScenarioError(1, 1, "task descend needs [form], [hermitian] or [algebra]");
        if (!s_.forms.empty() && (s_.hermitian || s_.algebra))
          throw ScenarioError(1, 1, "[form] cannot be combined with [hermitian] or [algebra]");
        break;
      case Task::cor_split:
        if (!s_.ext || !s_.algebra) throw ScenarioError(1, 1, "task cor-split needs 'ext' and [algebra]");
        break;
      case Task::witt:
        if (s_.forms.size() != 1) throw ScenarioError(1, 1, "task witt needs exactly one [form]");
        break;
      case Task::metabolic:
        if (s_.forms.empty()) throw ScenarioError(1, 1, "task metabolic needs at least one [form]");
        break;
      default: break;
    }
  }

  std::string_view text_;
  Scenario s_;
  std::string section_;
  std::size_t section_line_ = 0;
  std::vector<std::string> seen_;
  bool has_task_ = false;
};

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

std::string join(const std::vector<std::string>& v, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += v[i];
  }
  return out;
}

}  // namespace

std::string_view to_string(Task t) {
  for (const auto& [task, name] : kTasks)
    if (task == t) return name;
  return "descend";
}

std::optional<Task> parse_task(std::string_view s) {
  for (const auto& [task, name] : kTasks)
    if (name == s) return task;
  return std::nullopt;
}

Scenario parse_scenario(std::string_view text) { return Parser(text).run(); }

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open scenario file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_scenario(ss.str());
}

std::string print_scenario(const Scenario& s) {
  std::ostringstream o;
  if (!s.name.empty()) o << "name = " << quote(s.name) << "\n";
  o << "task = " << quote(std::string(to_string(s.task))) << "\n";
  if (!s.field.empty()) o << "field = " << quote(s.field) << "\n";
  if (s.ext) o << "ext = " << quote(*s.ext) << "\n";
  if (s.scale) o << "scale = " << quote(*s.scale) << "\n";
  if (s.seed) o << "seed = " << *s.seed << "\n";
  if (s.budget) o << "budget = " << *s.budget << "\n";
  for (const auto& f : s.forms) {
    o << "\n[form]\n";
    for (const auto& r : f.rows) o << (f.diagonal ? "diagonal = " : "row = ") << quote(join(r, ", ")) << "\n";
  }
  if (s.algebra) {
    const auto& a = *s.algebra;
    o << "\n[algebra]\nquaternion = " << quote(a.quaternion) << "\n";
    o << "over = " << quote(a.over_base ? "base" : "extension") << "\n";
    o << "involution = " << quote(a.involution) << "\n";
    if (a.u) o << "u = " << quote(*a.u) << "\n";
  }
  if (s.hermitian) {
    const auto& h = *s.hermitian;
    o << "\n[hermitian]\nlambda = " << h.lambda << "\n";
    for (const auto& r : h.rows) o << (h.diagonal ? "diagonal = " : "row = ") << quote(join(r, "; ")) << "\n";
  }
  return o.str();
}

}  // namespace witt
