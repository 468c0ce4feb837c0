#pragma once

#include <random>
#include <string>
#include <vector>

#include "etr/algebra.hpp"
#include "etr/catalog.hpp"
#include "etr/interpretation.hpp"
#include "etr/relation.hpp"

// Random small instances for the law and equivalence suites. Everything is
// driven by a caller-seeded mt19937, so failures replay exactly.
namespace test_support {

using namespace etr;

inline int pick(std::mt19937& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline bool chance(std::mt19937& rng, double p) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

// A shared attribute typing: random signatures drawn from it are always
// summable, which join and cylinder laws need.
struct RelationSpace {
  DomainRegistry registry;
  Signature global;  // index -> domain over the whole index pool
};

inline RelationSpace relation_space(std::mt19937& rng) {
  RelationSpace space;
  const int n_domains = pick(rng, 1, 3);
  std::vector<DomainId> ids;
  for (int d = 0; d < n_domains; ++d) {
    DomainId id("dom" + std::to_string(d));
    std::vector<std::string> lits;
    const int size = pick(rng, 1, 4);
    for (int v = 0; v < size; ++v) {
      lits.push_back("d" + std::to_string(d) + "v" + std::to_string(v));
    }
    space.registry.add(Domain{id, std::move(lits)});
    ids.push_back(id);
  }
  const char* pool[] = {"a", "b", "c", "d", "e"};
  std::vector<Signature::Entry> entries;
  for (const char* name : pool) {
    entries.emplace_back(Index(name), ids[pick(rng, 0, n_domains - 1)]);
  }
  space.global = Signature(std::move(entries));
  return space;
}

inline Signature random_signature(std::mt19937& rng, const RelationSpace& space,
                                  int max_indexes = 4) {
  const int want = pick(rng, 0, max_indexes);
  IndexSet chosen;
  std::vector<Index> pool;
  for (const auto& [idx, dom] : space.global) pool.push_back(idx);
  while (static_cast<int>(chosen.size()) < want) {
    chosen.insert(pool[pick(rng, 0, static_cast<int>(pool.size()) - 1)]);
  }
  return restrict_to(space.global, chosen);
}

inline Relation random_relation(std::mt19937& rng, const DomainRegistry& registry,
                                const Signature& sig, int max_rows = 10) {
  std::set<Tuple> all = registry.cart_enumerate(sig);
  std::vector<Tuple> pool(all.begin(), all.end());
  std::set<Tuple> extent;
  const int want = pick(rng, 0, max_rows);
  for (int i = 0; i < want && !pool.empty(); ++i) {
    extent.insert(pool[pick(rng, 0, static_cast<int>(pool.size()) - 1)]);
  }
  return Relation(sig, std::move(extent));
}

// --- logic instances ------------------------------------------------------

struct LogicSpace {
  logic::Interpretation m;
  std::vector<std::pair<std::string, int>> predicates;  // name, arity
  std::vector<std::string> vars;
};

inline LogicSpace random_logic_space(std::mt19937& rng) {
  const int d_size = pick(rng, 1, 4);
  std::vector<std::string> lits;
  for (int i = 0; i < d_size; ++i) lits.push_back(std::to_string(i));
  Domain d{DomainId("d"), std::move(lits)};

  DomainRegistry scratch;
  scratch.add(d);

  const char* names[] = {"p", "q", "r"};
  const int n_preds = pick(rng, 1, 3);
  std::map<std::string, Relation> preds;
  std::vector<std::pair<std::string, int>> arities;
  for (int i = 0; i < n_preds; ++i) {
    const int arity = pick(rng, 1, 3);
    std::vector<Signature::Entry> entries;
    for (int k = 0; k < arity; ++k) entries.emplace_back(Index(std::to_string(k)), d.id);
    Signature sig(std::move(entries));
    std::set<Tuple> extent;
    for (const Tuple& t : scratch.cart_enumerate(sig)) {
      if (chance(rng, 0.5)) extent.insert(t);
    }
    preds.emplace(names[i], Relation(std::move(sig), std::move(extent)));
    arities.emplace_back(names[i], arity);
  }

  LogicSpace space{logic::Interpretation::make(d, std::move(preds)), std::move(arities),
                   {"x", "y", "z", "w"}};
  return space;
}

inline logic::FormulaPtr random_atom(std::mt19937& rng, const LogicSpace& space) {
  const auto& [name, arity] =
      space.predicates[pick(rng, 0, static_cast<int>(space.predicates.size()) - 1)];
  std::vector<logic::LogicTerm> args;
  for (int i = 0; i < arity; ++i) {
    if (chance(rng, 0.25)) {
      const auto& lits = space.m.domain().literals;
      args.push_back(logic::LogicTerm::constant(
          lits[pick(rng, 0, static_cast<int>(lits.size()) - 1)]));
    } else {
      args.push_back(logic::LogicTerm::variable(
          space.vars[pick(rng, 0, static_cast<int>(space.vars.size()) - 1)]));
    }
  }
  return logic::make_atom(name, std::move(args));
}

inline logic::FormulaPtr random_formula(std::mt19937& rng, const LogicSpace& space,
                                        int depth) {
  if (depth <= 0) return random_atom(rng, space);
  switch (pick(rng, 0, 3)) {
    case 0:
      return random_atom(rng, space);
    case 1: {
      const int n = pick(rng, 2, 3);
      std::vector<logic::FormulaPtr> parts;
      for (int i = 0; i < n; ++i) parts.push_back(random_formula(rng, space, depth - 1));
      return logic::make_conjunction(std::move(parts));
    }
    case 2: {
      const int n = pick(rng, 1, 2);
      std::vector<std::string> bound;
      std::set<std::string> seen;
      while (static_cast<int>(bound.size()) < n) {
        std::string v = space.vars[pick(rng, 0, static_cast<int>(space.vars.size()) - 1)];
        if (seen.insert(v).second) bound.push_back(v);
      }
      return logic::make_exists(std::move(bound), random_formula(rng, space, depth - 1));
    }
    default:
      return logic::make_negation(random_formula(rng, space, depth - 1));
  }
}

}  // namespace test_support
