#include "etr/relation.hpp"

#include <functional>
#include <unordered_map>
#include <vector>

namespace etr {

namespace {

struct TupleHash {
  std::size_t operator()(const Tuple& t) const {
    std::size_t h = 1469598103934665603ull;
    auto mix = [&h](const std::string& s) {
      for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
      }
      h ^= 0xff;
      h *= 1099511628211ull;
    };
    for (const auto& [i, v] : t) {
      mix(i.name);
      mix(v.domain.name);
      mix(v.literal);
    }
    return h;
  }
};

void require_same_signature(const Relation& r0, const Relation& r1) {
  if (r0.signature() != r1.signature()) {
    throw Error(ErrorKind::SignatureMismatch,
                "boolean operations require identical signatures");
  }
}

}  // namespace

Relation::Relation(Signature signature, std::set<Tuple> extent)
    : signature_(std::move(signature)), extent_(std::move(extent)) {
  for (const Tuple& t : extent_) {
    if (!is_sorted_by(t, signature_)) {
      throw Error(ErrorKind::TupleNotSorted,
                  "extent tuple is not sorted by the relation signature");
    }
  }
}

Relation intersect(const Relation& r0, const Relation& r1) {
  require_same_signature(r0, r1);
  std::set<Tuple> out;
  for (const Tuple& t : r0.extent()) {
    if (r1.extent().count(t)) out.insert(t);
  }
  return Relation(r0.signature(), std::move(out));
}

Relation unite(const Relation& r0, const Relation& r1) {
  require_same_signature(r0, r1);
  std::set<Tuple> out = r0.extent();
  out.insert(r1.extent().begin(), r1.extent().end());
  return Relation(r0.signature(), std::move(out));
}

Relation difference(const Relation& r0, const Relation& r1) {
  require_same_signature(r0, r1);
  std::set<Tuple> out;
  for (const Tuple& t : r0.extent()) {
    if (!r1.extent().count(t)) out.insert(t);
  }
  return Relation(r0.signature(), std::move(out));
}

Relation complement(const Relation& r, const DomainRegistry& registry) {
  std::set<Tuple> out;
  for (const Tuple& t : registry.cart_enumerate(r.signature())) {
    if (!r.extent().count(t)) out.insert(t);
  }
  return Relation(r.signature(), std::move(out));
}

Relation project(const Relation& r, const IndexSet& j) {
  Signature tau = restrict_to(r.signature(), j);
  std::set<Tuple> out;
  for (const Tuple& t : r.extent()) out.insert(restrict_to(t, j));
  return Relation(std::move(tau), std::move(out));
}

Relation cylinder(const Relation& r, const Signature& tau1,
                  const DomainRegistry& registry) {
  Signature tau = sum(r.signature(), tau1);
  const IndexSet base = r.signature().key_set();
  std::set<Tuple> out;
  for (const Tuple& t : registry.cart_enumerate(tau)) {
    if (r.extent().count(restrict_to(t, base))) out.insert(t);
  }
  return Relation(std::move(tau), std::move(out));
}

Relation join(const Relation& r0, const Relation& r1) {
  Signature tau = sum(r0.signature(), r1.signature());

  IndexSet shared;
  for (const Index& i : r0.signature().key_set()) {
    if (r1.signature().contains(i)) shared.insert(i);
  }

  // Probe r1 by its shared-index subtuple; summability of the signatures
  // makes sum() on matching tuples total.
  std::unordered_map<Tuple, std::vector<const Tuple*>, TupleHash> by_key;
  for (const Tuple& t : r1.extent()) {
    by_key[restrict_to(t, shared)].push_back(&t);
  }

  std::set<Tuple> out;
  for (const Tuple& t0 : r0.extent()) {
    auto hit = by_key.find(restrict_to(t0, shared));
    if (hit == by_key.end()) continue;
    for (const Tuple* t1 : hit->second) out.insert(sum(t0, *t1));
  }
  return Relation(std::move(tau), std::move(out));
}

Relation join_by_cylinders(const Relation& r0, const Relation& r1,
                           const DomainRegistry& registry) {
  return intersect(cylinder(r0, r1.signature(), registry),
                   cylinder(r1, r0.signature(), registry));
}

Pattern Pattern::make(FiniteMap<Index, Term> entries,
                      FiniteMap<Index, DomainId> var_typing) {
  for (const auto& [i, term] : entries) {
    if (term.is_indeterminate() && !var_typing.contains(term.var())) {
      throw Error(ErrorKind::IncompatiblePattern,
                  "indeterminate " + term.var().name + " has no typing");
    }
  }
  return Pattern(std::move(entries), std::move(var_typing));
}

Pattern Pattern::positional(const std::vector<Term>& terms,
                            FiniteMap<Index, DomainId> var_typing) {
  std::vector<FiniteMap<Index, Term>::Entry> entries;
  entries.reserve(terms.size());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    entries.emplace_back(Index(std::to_string(i)), terms[i]);
  }
  return make(FiniteMap<Index, Term>(std::move(entries)), std::move(var_typing));
}

IndexSet Pattern::vars() const {
  IndexSet out;
  for (const auto& [i, term] : entries_) {
    if (term.is_indeterminate()) out.insert(term.var());
  }
  return out;
}

void check_compatible(const Pattern& p, const Signature& tau) {
  if (p.entries().key_set() != tau.key_set()) {
    throw Error(ErrorKind::IncompatiblePattern,
                "pattern indexes differ from the relation indexes");
  }
  for (const auto& [i, term] : p.entries()) {
    const DomainId& expected = tau.at(i);
    if (term.is_indeterminate()) {
      const DomainId& typed = p.var_typing().at(term.var());
      if (typed != expected) {
        throw Error(ErrorKind::IncompatiblePattern,
                    "indeterminate " + term.var().name + " is typed " + typed.name +
                        " but index " + i.name + " has domain " + expected.name);
      }
    } else if (term.value().domain != expected) {
      throw Error(ErrorKind::IncompatiblePattern,
                  "ground value " + term.value().literal + " lies in " +
                      term.value().domain.name + " but index " + i.name +
                      " has domain " + expected.name);
    }
  }
}

std::optional<Substitution> match_tuple(const Tuple& t, const Pattern& p) {
  check_compatible(p, signature_of(t));
  Substitution s;
  for (const auto& [i, term] : p.entries()) {
    const Value& component = t.at(i);
    if (term.is_indeterminate()) {
      if (const Value* bound = s.find(term.var())) {
        if (!(*bound == component)) return std::nullopt;
      } else {
        s.set(term.var(), component);
      }
    } else if (!(term.value() == component)) {
      return std::nullopt;
    }
  }
  return s;
}

Relation filter(const Relation& r, const Pattern& p,
                const DomainRegistry& registry) {
  check_compatible(p, r.signature());

  // φ as the result signature: indexes are the variable names.
  const Signature& phi = p.var_typing();
  const IndexSet used = p.vars();
  IndexSet unused;
  for (const Index& x : phi.key_set()) {
    if (!used.count(x)) unused.insert(x);
  }
  const Signature extension = restrict_to(phi, unused);
  const std::set<Tuple> spans = registry.cart_enumerate(extension);

  std::set<Tuple> out;
  for (const Tuple& t : r.extent()) {
    std::optional<Substitution> s = match_tuple(t, p);
    if (!s) continue;
    for (const Tuple& span : spans) out.insert(sum(*s, span));
  }
  return Relation(phi, std::move(out));
}

Relation rename(const Relation& r, const Pattern& p,
                const DomainRegistry& registry) {
  IndexSet seen;
  for (const auto& [i, term] : p.entries()) {
    if (!term.is_indeterminate()) {
      throw Error(ErrorKind::NotBijective,
                  "renaming pattern holds a ground value at index " + i.name);
    }
    if (!seen.insert(term.var()).second) {
      throw Error(ErrorKind::NotBijective,
                  "renaming pattern repeats indeterminate " + term.var().name);
    }
  }
  if (p.var_typing().size() != p.entries().size()) {
    throw Error(ErrorKind::NotBijective,
                "renaming pattern types variables it does not use");
  }
  return filter(r, p, registry);
}

Relation rename(const Relation& r, const FiniteMap<Index, Index>& mapping,
                const DomainRegistry& registry) {
  IndexSet targets;
  std::vector<FiniteMap<Index, Term>::Entry> entries;
  std::vector<FiniteMap<Index, DomainId>::Entry> typing;
  for (const auto& [from, to] : mapping) {
    if (!targets.insert(to).second) {
      throw Error(ErrorKind::NotBijective, "renaming repeats target index " + to.name);
    }
    const DomainId* dom = r.signature().find(from);
    if (dom == nullptr) {
      throw Error(ErrorKind::IncompatiblePattern,
                  from.name + " is not an index of the relation");
    }
    entries.emplace_back(from, Term::indeterminate(to));
    typing.emplace_back(to, *dom);
  }
  Pattern p = Pattern::make(FiniteMap<Index, Term>(std::move(entries)),
                            FiniteMap<Index, DomainId>(std::move(typing)));
  return rename(r, p, registry);
}

}  // namespace etr
