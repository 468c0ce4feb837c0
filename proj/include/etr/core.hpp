#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "etr/error.hpp"
#include "etr/finite_map.hpp"

namespace etr {

// A tuple index: attribute name, role name, logic variable, or a numeral
// ("0".."n-1" encodes the numeric index set ι(n)). Numeric indexes order by
// integer value and come before named ones; names order lexicographically.
struct Index {
  std::string name;

  Index() = default;
  Index(std::string n) : name(std::move(n)) {}
  Index(const char* n) : name(n) {}

  bool is_numeric() const;
  friend bool operator==(const Index&, const Index&) = default;
  friend std::strong_ordering operator<=>(const Index& a, const Index& b);
};

inline std::string describe(const Index& i) { return i.name; }

struct DomainId {
  std::string name;

  DomainId() = default;
  DomainId(std::string n) : name(std::move(n)) {}
  DomainId(const char* n) : name(n) {}

  friend bool operator==(const DomainId&, const DomainId&) = default;
  friend auto operator<=>(const DomainId&, const DomainId&) = default;
};

inline std::string describe(const DomainId& d) { return d.name; }

// A domain element: a literal tagged with the domain that owns it. Tagging
// keeps distinct domains disjoint even when their literals collide textually.
struct Value {
  DomainId domain;
  std::string literal;

  friend bool operator==(const Value&, const Value&) = default;
  friend auto operator<=>(const Value&, const Value&) = default;
};

inline std::string describe(const Value& v) {
  return v.literal + " (in " + v.domain.name + ")";
}

using Tuple = FiniteMap<Index, Value>;
using Signature = FiniteMap<Index, DomainId>;
using IndexSet = std::set<Index>;

// τ = σ∘t: the signature a tuple carries through its tagged values.
Signature signature_of(const Tuple& t);

bool is_sorted_by(const Tuple& t, const Signature& tau);

// A finite set of admissible values. Literal order is declaration order and
// fixes the enumeration order of Cartesian products.
struct Domain {
  DomainId id;
  std::vector<std::string> literals;

  bool contains(const std::string& literal) const;
  friend bool operator==(const Domain&, const Domain&) = default;
};

// The set of disjoint domains plus the sorting function over their union.
// Built during catalog load, immutable afterwards.
class DomainRegistry {
 public:
  // Rejects empty domains, duplicate literals within a domain, redeclared
  // domain names, and literals shared across domains.
  void add(Domain domain);

  bool has(const DomainId& id) const;
  const Domain& domain(const DomainId& id) const;
  const std::vector<Domain>& domains() const { return domains_; }

  // σ_T: maps a literal to the unique domain containing it.
  DomainId sort_value(const std::string& literal) const;
  Value value(const std::string& literal) const;
  FiniteMap<std::string, DomainId> sorting_function() const;

  // cart(τ): every tuple sorted by τ. The empty signature yields exactly the
  // empty tuple.
  std::set<Tuple> cart_enumerate(const Signature& tau) const;
  std::uint64_t cart_size(const Signature& tau) const;

  friend bool operator==(const DomainRegistry&, const DomainRegistry&) = default;

 private:
  std::vector<Domain> domains_;
  FiniteMap<std::string, DomainId> owner_;
  FiniteMap<std::string, std::size_t> slot_;
};

}  // namespace etr
