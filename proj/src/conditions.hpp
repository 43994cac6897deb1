#pragma once

// Constraint language of the embedded dataset.
//
//   expr := term (("+"|"-") term)*      term := [int][var] | int
//   atom := expr (op expr)+             op   := >= > <= < = !=
//         | expr "even" | expr "odd"
//         | var "pow" var              (first is a positive power of the second)
//         | "any"
//   cond := atom (";" atom)*
//
// Variables are single lowercase letters; `p` is the characteristic.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sphclass::conditions {

using Bindings = std::map<char, long long>;

struct Linear {
  std::map<char, long long> coef;
  long long constant = 0;

  /// Throws std::out_of_range on an unbound variable.
  long long eval(const Bindings& b) const;
  std::vector<char> vars() const;
};

/// Throws std::invalid_argument on malformed input.
Linear parse_linear(std::string_view text);

class Condition {
 public:
  Condition() = default;
  /// Throws std::invalid_argument on malformed input.
  static Condition parse(std::string_view text);

  bool holds(const Bindings& b) const;
  std::vector<char> vars() const;
  const std::string& text() const { return text_; }

 private:
  enum class Kind { Chain, Even, Odd, Pow };
  struct Atom {
    Kind kind = Kind::Chain;
    std::vector<Linear> exprs;
    std::vector<std::string> ops;
    char base = 0, power = 0;
  };
  std::vector<Atom> atoms_;
  std::string text_;
};

}  // namespace sphclass::conditions
