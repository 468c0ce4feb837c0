#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "etr/interpretation.hpp"
#include "etr/relation.hpp"

namespace etr::algebra {

// A pattern component before resolution against a signature: an
// indeterminate, a raw literal (CLI syntax), or an already-resolved value
// (emitted by the formula compiler after applying the constant map).
class SynTerm {
 public:
  static SynTerm var(Index name) { return SynTerm(Kind::Var, std::move(name), {}); }
  static SynTerm lit(std::string text) {
    return SynTerm(Kind::Lit, {}, Value{{}, std::move(text)});
  }
  static SynTerm ground(Value value) {
    return SynTerm(Kind::Ground, {}, std::move(value));
  }

  bool is_var() const { return kind_ == Kind::Var; }
  bool is_lit() const { return kind_ == Kind::Lit; }
  const Index& name() const { return name_; }
  const std::string& literal() const { return value_.literal; }
  const Value& value() const { return value_; }

 private:
  enum class Kind { Var, Lit, Ground };
  SynTerm(Kind kind, Index name, Value value)
      : kind_(kind), name_(std::move(name)), value_(std::move(value)) {}

  Kind kind_;
  Index name_;
  Value value_;
};

// Filtering pattern as written: typing is either explicit (set by the
// formula compiler) or derived from the child signature at evaluation time.
// A positional pattern "[t0,...,tk-1]" binds its terms to the child's
// columns in canonical order (declared attribute order for catalog
// relations, index order otherwise) once that child is known.
struct PatternSpec {
  FiniteMap<Index, SynTerm> entries;
  std::optional<std::vector<SynTerm>> positional;
  std::optional<FiniteMap<Index, DomainId>> typing;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Base {
  std::string name;
};
struct Filter {
  ExprPtr child;
  PatternSpec pattern;
};
struct Join {
  std::vector<ExprPtr> children;  // length >= 2
};
struct Project {
  ExprPtr child;
  IndexSet indexes;
};
struct Complement {
  ExprPtr child;
};
enum class SetOpKind { Intersect, Union, Difference };
struct SetOp {
  SetOpKind kind;
  ExprPtr left, right;
};
struct Cylinder {
  ExprPtr child;
  std::vector<Index> attrs;  // extension indexes, typed by the catalog
};

struct Expr {
  std::variant<Base, Filter, Join, Project, Complement, SetOp, Cylinder> node;
};

ExprPtr make_base(std::string name);
ExprPtr make_filter(ExprPtr child, PatternSpec pattern);
ExprPtr make_join(std::vector<ExprPtr> children);
ExprPtr make_project(ExprPtr child, IndexSet indexes);
ExprPtr make_complement(ExprPtr child);
ExprPtr make_set_op(SetOpKind kind, ExprPtr left, ExprPtr right);
ExprPtr make_cylinder(ExprPtr child, std::vector<Index> attrs);

enum class JoinMode { Direct, ByCylinders };

struct EvalContext {
  // Resolves a base name to its relation; throws UnknownRelationName,
  // UnknownPredicate, or MixedDomains depending on the front end.
  std::function<const Relation&(const std::string&)> resolve;
  const DomainRegistry* registry = nullptr;
  // Types cylinder extension attributes; null when cyl{} is unavailable
  // (logic front end).
  std::function<Signature(const std::vector<Index>&)> cylinder_signature;
  // Declared column order of a named relation, for positional patterns;
  // null falls back to index order.
  std::function<std::optional<std::vector<Index>>(const std::string&)> column_order;
  JoinMode join_mode = JoinMode::Direct;
};

Relation evaluate(const Expr& expr, const EvalContext& ctx);

// Denotation by compilation: an atom becomes its predicate's relation
// filtered by the argument pattern, a conjunction the join of its conjuncts,
// an existential quantification a projection onto the remaining free
// variables, and a negation a complement within cart(free vars -> D).
ExprPtr compile(const logic::Formula& f, const logic::Interpretation& m);

Relation evaluate_logic(const logic::Formula& f, const logic::Interpretation& m,
                        JoinMode join_mode = JoinMode::Direct);

// Concrete algebra syntax over catalog relation names:
//   expr     := joinexpr ( ("&" | "+" | "-") joinexpr )*
//   joinexpr := unary ( "|x|" unary )*
//   unary    := "~" unary | postfix
//   postfix  := primary ( ":" pattern )*
//   primary  := name | "project" "{" names "}" "(" expr ")"
//             | "cyl" "{" names "}" "(" expr ")" | "(" expr ")"
//   pattern  := "[" term ("," term)* "]"
//             | "{" name ":" term ("," name ":" term)* "}"
//   term     := name | "'" literal "'"
// Names are bare [A-Za-z0-9_]+ words; numerals name numeric indexes.
ExprPtr parse_algebra(std::string_view text);

}  // namespace etr::algebra
