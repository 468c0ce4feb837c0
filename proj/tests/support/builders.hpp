#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "etr/relation.hpp"

namespace test_support {

using namespace etr;

// Tuple from (index, literal) cells typed by the signature.
inline Tuple row(const Signature& sig,
                 std::initializer_list<std::pair<std::string, std::string>> cells) {
  std::vector<Tuple::Entry> entries;
  for (const auto& [idx, lit] : cells) {
    entries.emplace_back(Index(idx), Value{sig.at(Index(idx)), lit});
  }
  return Tuple(std::move(entries));
}

// Sequence over ι(n), all components drawn from one domain.
inline Tuple seq(const DomainId& dom, std::initializer_list<std::string> lits) {
  std::vector<Tuple::Entry> entries;
  std::size_t i = 0;
  for (const std::string& lit : lits) {
    entries.emplace_back(Index(std::to_string(i++)), Value{dom, lit});
  }
  return Tuple(std::move(entries));
}

inline Signature numeric_sig(const DomainId& dom, std::size_t n) {
  std::vector<Signature::Entry> entries;
  for (std::size_t i = 0; i < n; ++i) entries.emplace_back(Index(std::to_string(i)), dom);
  return Signature(std::move(entries));
}

inline Relation sequences(const DomainId& dom, std::size_t arity,
                          std::initializer_list<std::initializer_list<std::string>> rows) {
  std::set<Tuple> extent;
  for (const auto& r : rows) extent.insert(seq(dom, r));
  return Relation(numeric_sig(dom, arity), std::move(extent));
}

}  // namespace test_support
