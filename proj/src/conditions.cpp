#include "conditions.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace sphclass::conditions {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

bool compare(long long a, const std::string& op, long long b) {
  if (op == ">=") return a >= b;
  if (op == ">") return a > b;
  if (op == "<=") return a <= b;
  if (op == "<") return a < b;
  if (op == "=") return a == b;
  if (op == "!=") return a != b;
  throw std::logic_error("unknown comparison " + op);
}

}  // namespace

long long Linear::eval(const Bindings& b) const {
  long long v = constant;
  for (const auto& [var, c] : coef) v += c * b.at(var);
  return v;
}

std::vector<char> Linear::vars() const {
  std::vector<char> out;
  for (const auto& [var, c] : coef)
    if (c != 0) out.push_back(var);
  return out;
}

Linear parse_linear(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) throw std::invalid_argument("empty expression");
  Linear out;
  std::size_t i = 0;
  int sign = 1;
  bool expect_term = true;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '+' || c == '-') {
      if (expect_term && c == '+') throw std::invalid_argument("unexpected '+' in " + std::string(s));
      sign = c == '-' ? -sign : sign;
      expect_term = true;
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c)) || std::islower(static_cast<unsigned char>(c))) {
      if (!expect_term) throw std::invalid_argument("missing operator in " + std::string(s));
      long long k = 1;
      bool has_digits = false;
      if (std::isdigit(static_cast<unsigned char>(c))) {
        k = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) k = k * 10 + (s[i++] - '0');
        has_digits = true;
      }
      if (i < s.size() && std::islower(static_cast<unsigned char>(s[i]))) {
        const char var = s[i++];
        if (i < s.size() && std::isalnum(static_cast<unsigned char>(s[i])))
          throw std::invalid_argument("variables are single letters in " + std::string(s));
        out.coef[var] += sign * k;
      } else if (has_digits) {
        out.constant += sign * k;
      }
      sign = 1;
      expect_term = false;
    } else {
      throw std::invalid_argument("unexpected character in expression " + std::string(s));
    }
  }
  if (expect_term) throw std::invalid_argument("dangling operator in " + std::string(s));
  return out;
}

Condition Condition::parse(std::string_view text) {
  Condition out;
  out.text_ = std::string(trim(text));
  if (out.text_.empty() || out.text_ == "any") return out;
  for (std::string_view part : split(out.text_, ';')) {
    if (part.empty()) throw std::invalid_argument("empty clause in condition " + out.text_);
    Atom atom;
    const auto words = split(part, ' ');
    if (words.size() == 2 && (words[1] == "even" || words[1] == "odd")) {
      atom.kind = words[1] == "even" ? Kind::Even : Kind::Odd;
      atom.exprs.push_back(parse_linear(words[0]));
    } else if (words.size() == 3 && words[1] == "pow") {
      if (words[0].size() != 1 || words[2].size() != 1)
        throw std::invalid_argument("'pow' relates two variables");
      atom.kind = Kind::Pow;
      atom.base = words[2][0];
      atom.power = words[0][0];
    } else {
      std::size_t start = 0, i = 0;
      while (i < part.size()) {
        std::string op;
        if (part.compare(i, 2, ">=") == 0 || part.compare(i, 2, "<=") == 0 || part.compare(i, 2, "!=") == 0)
          op = std::string(part.substr(i, 2));
        else if (part[i] == '>' || part[i] == '<' || part[i] == '=')
          op = std::string(1, part[i]);
        if (op.empty()) {
          ++i;
          continue;
        }
        atom.exprs.push_back(parse_linear(part.substr(start, i - start)));
        atom.ops.push_back(op);
        i += op.size();
        start = i;
      }
      if (atom.ops.empty()) throw std::invalid_argument("clause has no comparison: " + std::string(part));
      atom.exprs.push_back(parse_linear(part.substr(start)));
    }
    out.atoms_.push_back(std::move(atom));
  }
  return out;
}

bool Condition::holds(const Bindings& b) const {
  for (const auto& a : atoms_) {
    switch (a.kind) {
      case Kind::Even:
        if (a.exprs[0].eval(b) % 2 != 0) return false;
        break;
      case Kind::Odd:
        if (a.exprs[0].eval(b) % 2 == 0) return false;
        break;
      case Kind::Pow: {
        const long long base = b.at(a.base);
        long long q = b.at(a.power);
        if (base < 2 || q < base) return false;
        while (q % base == 0) q /= base;
        if (q != 1) return false;
        break;
      }
      case Kind::Chain:
        for (std::size_t i = 0; i < a.ops.size(); ++i)
          if (!compare(a.exprs[i].eval(b), a.ops[i], a.exprs[i + 1].eval(b))) return false;
        break;
    }
  }
  return true;
}

std::vector<char> Condition::vars() const {
  std::set<char> vs;
  for (const auto& a : atoms_) {
    for (const auto& e : a.exprs)
      for (char v : e.vars()) vs.insert(v);
    if (a.kind == Kind::Pow) {
      vs.insert(a.base);
      vs.insert(a.power);
    }
  }
  return {vs.begin(), vs.end()};
}

}  // namespace sphclass::conditions
