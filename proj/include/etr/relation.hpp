#pragma once

#include <optional>
#include <set>
#include <string>

#include "etr/core.hpp"

namespace etr {

// A signature/extent pair. Every tuple of the extent is sorted by the
// signature; the extent is a set, so duplicates collapse.
class Relation {
 public:
  Relation(Signature signature, std::set<Tuple> extent);

  static Relation empty(Signature signature) {
    return Relation(std::move(signature), {});
  }

  const Signature& signature() const { return signature_; }
  const std::set<Tuple>& extent() const { return extent_; }
  std::size_t size() const { return extent_.size(); }
  IndexSet indexes() const { return signature_.key_set(); }

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  Signature signature_;
  std::set<Tuple> extent_;
};

// Boolean operations over a shared signature.
Relation intersect(const Relation& r0, const Relation& r1);
Relation unite(const Relation& r0, const Relation& r1);
Relation difference(const Relation& r0, const Relation& r1);

// cart(τ) ∖ E.
Relation complement(const Relation& r, const DomainRegistry& registry);

// π_J: restrict every tuple to J (intersected with the index set).
Relation project(const Relation& r, const IndexSet& j);

// π⁻¹_τ1: the largest relation over τ0+τ1 whose projection back onto the
// original indexes is r.
Relation cylinder(const Relation& r, const Signature& tau1,
                  const DomainRegistry& registry);

// Natural join over summable signatures, built by probing on the shared-index
// subtuple. Extensionally equal to join_by_cylinders.
Relation join(const Relation& r0, const Relation& r1);

// The definitional form, intersect(cylinder(r0, τ1), cylinder(r1, τ0)); kept
// as the oracle the direct join is checked against.
Relation join_by_cylinders(const Relation& r0, const Relation& r1,
                           const DomainRegistry& registry);

// A pattern component: an indeterminate to be substituted or a fixed value
// the tuple must equal.
class Term {
 public:
  static Term indeterminate(Index var) { return Term(std::move(var), {}); }
  static Term ground(Value value) { return Term({}, std::move(value)); }

  bool is_indeterminate() const { return !value_.has_value(); }
  const Index& var() const { return var_; }
  const Value& value() const { return *value_; }

  friend bool operator==(const Term&, const Term&) = default;

 private:
  Term(Index var, std::optional<Value> value)
      : var_(std::move(var)), value_(std::move(value)) {}

  Index var_;
  std::optional<Value> value_;
};

// p ∈ I → X together with the variable typing φ ∈ X → T. φ may type
// variables that do not occur in p; filtering lets those range over their
// whole domain.
class Pattern {
 public:
  static Pattern make(FiniteMap<Index, Term> entries,
                      FiniteMap<Index, DomainId> var_typing);

  // Entries over the numeric indexes "0".."k-1".
  static Pattern positional(const std::vector<Term>& terms,
                            FiniteMap<Index, DomainId> var_typing);

  const FiniteMap<Index, Term>& entries() const { return entries_; }
  const FiniteMap<Index, DomainId>& var_typing() const { return var_typing_; }

  // Indeterminates that occur in the entries.
  IndexSet vars() const;

 private:
  Pattern(FiniteMap<Index, Term> entries, FiniteMap<Index, DomainId> var_typing)
      : entries_(std::move(entries)), var_typing_(std::move(var_typing)) {}

  FiniteMap<Index, Term> entries_;
  FiniteMap<Index, DomainId> var_typing_;
};

// Matching substitutions are tuples keyed by variable names.
using Substitution = Tuple;

// τ = φ∘p on indeterminate positions; ground positions carry a value of the
// indexed domain. Throws IncompatiblePattern otherwise.
void check_compatible(const Pattern& p, const Signature& tau);

// The unique s over vars(p) with t = s∘p (ground positions compared
// directly), or nothing if t does not match.
std::optional<Substitution> match_tuple(const Tuple& t, const Pattern& p);

// ⟨τ,E⟩:p, the relation of matching substitutions over φ. Variables typed
// by φ but absent from p take every value of their domain.
Relation filter(const Relation& r, const Pattern& p,
                const DomainRegistry& registry);

// Filtering by a bijective all-indeterminate pattern: a pure index renaming.
Relation rename(const Relation& r, const Pattern& p,
                const DomainRegistry& registry);
Relation rename(const Relation& r, const FiniteMap<Index, Index>& mapping,
                const DomainRegistry& registry);

}  // namespace etr
