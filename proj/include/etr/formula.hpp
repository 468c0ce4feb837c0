#pragma once

#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "etr/error.hpp"

namespace etr::logic {

// A term of the logic language: a variable or a constant symbol. Constants
// are quoted in concrete syntax, which keeps the namespaces apart.
class LogicTerm {
 public:
  static LogicTerm variable(std::string name) { return LogicTerm(true, std::move(name)); }
  static LogicTerm constant(std::string symbol) { return LogicTerm(false, std::move(symbol)); }

  bool is_variable() const { return is_variable_; }
  const std::string& text() const { return text_; }

  friend bool operator==(const LogicTerm&, const LogicTerm&) = default;

 private:
  LogicTerm(bool is_variable, std::string text)
      : is_variable_(is_variable), text_(std::move(text)) {}

  bool is_variable_;
  std::string text_;
};

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Atom {
  std::string predicate;
  std::vector<LogicTerm> args;
};

struct Conjunction {
  std::vector<FormulaPtr> conjuncts;  // length >= 1
};

struct Exists {
  std::vector<std::string> bound;  // non-empty, pairwise distinct
  FormulaPtr body;
};

struct Negation {
  FormulaPtr body;
};

struct Formula {
  std::variant<Atom, Conjunction, Exists, Negation> node;
};

FormulaPtr make_atom(std::string predicate, std::vector<LogicTerm> args);
FormulaPtr make_conjunction(std::vector<FormulaPtr> conjuncts);
FormulaPtr make_exists(std::vector<std::string> bound, FormulaPtr body);
FormulaPtr make_negation(FormulaPtr body);

bool equal(const Formula& a, const Formula& b);

std::set<std::string> free_vars(const Formula& f);

// Canonical concrete syntax; parse_formula(print_formula(f)) reproduces f.
std::string print_formula(const Formula& f);

// Grammar (precedence: "!" over "&" over "exists"):
//   formula     := quantified
//   quantified  := "exists" var+ "." quantified | conjunction
//   conjunction := negation ( "&" negation )*
//   negation    := "!" negation | primary
//   primary     := atom | "(" formula ")"
//   atom        := predsym "(" term ("," term)* ")"
//   term        := var | "'" literal "'"
//   var, predsym := [a-z][a-zA-Z0-9_]*
FormulaPtr parse_formula(std::string_view text);

}  // namespace etr::logic
