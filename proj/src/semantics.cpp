#include "etr/interpretation.hpp"

namespace etr::logic {

Interpretation Interpretation::make(Domain domain,
                                    std::map<std::string, Relation> predicates,
                                    std::map<std::string, Value> constants,
                                    std::set<std::string> mixed) {
  Interpretation m;
  m.registry_.add(domain);
  m.domain_ = std::move(domain);
  for (const auto& [name, rel] : predicates) {
    std::size_t k = 0;
    for (const auto& [idx, dom] : rel.signature()) {
      if (!idx.is_numeric() || idx.name != std::to_string(k++)) {
        throw Error(ErrorKind::MixedDomains,
                    "predicate " + name + " is not numerically indexed from 0");
      }
      if (dom != m.domain_.id) {
        throw Error(ErrorKind::MixedDomains,
                    "predicate " + name + " has a column outside domain " +
                        m.domain_.id.name);
      }
    }
  }
  m.predicates_ = std::move(predicates);
  for (const auto& [symbol, value] : constants) {
    if (value.domain != m.domain_.id) {
      throw Error(ErrorKind::UnknownConstant,
                  "constant " + symbol + " maps outside domain " + m.domain_.id.name);
    }
  }
  m.constants_ = std::move(constants);
  m.mixed_ = std::move(mixed);
  return m;
}

const Relation& Interpretation::predicate(const std::string& name) const {
  auto it = predicates_.find(name);
  if (it != predicates_.end()) return it->second;
  if (mixed_.count(name)) {
    throw Error(ErrorKind::MixedDomains,
                "relation " + name + " spans several domains; the logic front end "
                "requires a single domain");
  }
  throw Error(ErrorKind::UnknownPredicate, name + " is not an interpreted predicate");
}

Value Interpretation::constant(const std::string& symbol) const {
  auto it = constants_.find(symbol);
  if (it != constants_.end()) return it->second;
  if (domain_.contains(symbol)) return Value{domain_.id, symbol};
  throw Error(ErrorKind::UnknownConstant,
              symbol + " is not a constant of domain " + domain_.id.name);
}

namespace {

Value term_value(const Interpretation& m, const Assignment& a, const LogicTerm& t) {
  if (t.is_variable()) {
    if (const Value* v = a.find(Index(t.text()))) return *v;
    throw Error(ErrorKind::UnboundVariable, t.text() + " is not bound");
  }
  return m.constant(t.text());
}

}  // namespace

bool satisfies(const Interpretation& m, const Assignment& a, const Formula& f) {
  if (const auto* atom = std::get_if<Atom>(&f.node)) {
    const Relation& meaning = m.predicate(atom->predicate);
    if (meaning.signature().size() != atom->args.size()) {
      throw Error(ErrorKind::ArityMismatch,
                  atom->predicate + " expects " +
                      std::to_string(meaning.signature().size()) + " arguments, got " +
                      std::to_string(atom->args.size()));
    }
    std::vector<Tuple::Entry> entries;
    entries.reserve(atom->args.size());
    for (std::size_t i = 0; i < atom->args.size(); ++i) {
      entries.emplace_back(Index(std::to_string(i)), term_value(m, a, atom->args[i]));
    }
    return meaning.extent().count(Tuple(std::move(entries))) > 0;
  }
  if (const auto* conj = std::get_if<Conjunction>(&f.node)) {
    for (const FormulaPtr& c : conj->conjuncts) {
      if (!satisfies(m, a, *c)) return false;
    }
    return true;
  }
  if (const auto* ex = std::get_if<Exists>(&f.node)) {
    // exists x0 .. xk-1. F is shorthand for the nested quantifications.
    Assignment extended = a;
    std::vector<std::size_t> pick(ex->bound.size(), 0);
    const auto& literals = m.domain().literals;
    for (;;) {
      for (std::size_t i = 0; i < ex->bound.size(); ++i) {
        extended.set(Index(ex->bound[i]), Value{m.domain().id, literals[pick[i]]});
      }
      if (satisfies(m, extended, *ex->body)) return true;
      std::size_t j = 0;
      while (j < pick.size()) {
        if (++pick[j] < literals.size()) break;
        pick[j] = 0;
        ++j;
      }
      if (j == pick.size()) return false;
    }
  }
  return !satisfies(m, a, *std::get<Negation>(f.node).body);
}

Relation denote_oracle(const Interpretation& m, const Formula& f) {
  std::vector<Signature::Entry> sig_entries;
  for (const std::string& v : free_vars(f)) {
    sig_entries.emplace_back(Index(v), m.domain().id);
  }
  Signature sig(std::move(sig_entries));

  std::set<Tuple> extent;
  for (const Tuple& candidate : m.registry().cart_enumerate(sig)) {
    if (satisfies(m, candidate, f)) extent.insert(candidate);
  }
  return Relation(std::move(sig), std::move(extent));
}

}  // namespace etr::logic
