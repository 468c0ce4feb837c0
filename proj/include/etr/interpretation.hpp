#pragma once

#include <map>
#include <set>
#include <string>

#include "etr/formula.hpp"
#include "etr/relation.hpp"

namespace etr::logic {

// An interpretation: the single domain D, predicate meanings (relations over
// numeric indexes, every column typed by D), and the constant map. Constant
// symbols default to the identically named literal of D; `constants` entries
// override that. `mixed` lists catalog relations that span several domains
// and are therefore unavailable to the logic front end.
class Interpretation {
 public:
  static Interpretation make(Domain domain,
                             std::map<std::string, Relation> predicates,
                             std::map<std::string, Value> constants = {},
                             std::set<std::string> mixed = {});

  const Domain& domain() const { return domain_; }
  const DomainRegistry& registry() const { return registry_; }
  const std::map<std::string, Relation>& predicates() const { return predicates_; }

  const Relation& predicate(const std::string& name) const;
  Value constant(const std::string& symbol) const;

 private:
  Interpretation() = default;

  Domain domain_;
  DomainRegistry registry_;
  std::map<std::string, Relation> predicates_;
  std::map<std::string, Value> constants_;
  std::set<std::string> mixed_;
};

// An assignment of domain elements to variables: a tuple keyed by variable
// names.
using Assignment = Tuple;

// Tarski satisfaction. The assignment must bind every free variable of f.
bool satisfies(const Interpretation& m, const Assignment& a, const Formula& f);

// ℳ(F): the relation over the free variables of f, computed by brute-force
// enumeration of all assignments. The independent oracle the compiled algebra
// route is checked against.
Relation denote_oracle(const Interpretation& m, const Formula& f);

}  // namespace etr::logic
