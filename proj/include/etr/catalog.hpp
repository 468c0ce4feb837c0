#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "etr/core.hpp"
#include "etr/interpretation.hpp"
#include "etr/relation.hpp"

namespace etr::catalog {

enum class BuiltinKind { Leq, Lt, Eq, Neq };

const char* builtin_kind_name(BuiltinKind kind);
std::optional<BuiltinKind> builtin_kind_from(const std::string& word);

// An intensional comparison relation over two attributes of one
// integer-valued domain, materialized eagerly at instance build.
struct BuiltinDecl {
  std::string name;
  BuiltinKind kind;
  Index left, right;

  friend bool operator==(const BuiltinDecl&, const BuiltinDecl&) = default;
};

// The design-phase data: domains, the global attribute typing τ, the
// relation index subsets, constants, and builtin declarations.
//
// Scheme file grammar (one declaration per line, '#' comments):
//   domain    <name> = <literal> <literal> ...
//   attribute <name> = <domain>
//   relation  <name> = <attribute> <attribute> ...
//   builtin   <name> = <kind> <attribute> <attribute>   kind: leq lt eq neq
//   constant  <symbol> = <literal>
struct Scheme {
  DomainRegistry registry;
  std::vector<std::pair<Index, DomainId>> attributes;          // declaration order
  std::vector<std::pair<std::string, std::vector<Index>>> relations;
  std::vector<std::pair<std::string, std::string>> constants;  // symbol -> literal
  std::vector<BuiltinDecl> builtins;

  Signature global_tau() const;
  const std::vector<Index>* relation_attrs(const std::string& name) const;
  // τ restricted to the relation's attribute subset.
  Signature signature_for(const std::string& name) const;
  DomainId attribute_domain(const Index& attr) const;

  friend bool operator==(const Scheme&, const Scheme&) = default;
};

Scheme load_scheme(const std::string& text);
Scheme load_scheme_file(const std::filesystem::path& path);
std::string save_scheme(const Scheme& scheme);

// A scheme with extents. Builtins are materialized into `extents` under
// their declared names; declared relations start empty until loaded.
struct Instance {
  Scheme scheme;
  std::map<std::string, Relation> extents;

  const Relation& relation(const std::string& name) const;

  friend bool operator==(const Instance&, const Instance&) = default;
};

Instance make_instance(Scheme scheme);

Relation materialize_builtin(const BuiltinDecl& decl, const Scheme& scheme);

// Replaces the named relation's extent from delimiter-separated text with a
// mandatory header row of attribute names (any order). Duplicate rows
// collapse.
void load_relation(Instance& instance, const std::string& name,
                   const std::string& text, char delimiter = ',');
void load_relation_file(Instance& instance, const std::string& name,
                        const std::filesystem::path& path, char delimiter = ',');
std::string save_relation(const Instance& instance, const std::string& name,
                          char delimiter = ',');

// Loads scheme plus one "<relation>.csv" per declared relation found in
// data_dir (absent files leave the extent empty).
Instance load_instance(const std::filesystem::path& scheme_path,
                       const std::optional<std::filesystem::path>& data_dir,
                       char delimiter = ',');

// Bridges the instance to the single-domain logic front end. With no domain
// name the scheme must declare exactly one domain. Relations whose
// attributes all lie in the chosen domain become predicates, renumbered
// 0..k-1 in declared attribute order; the rest are reported as mixed when a
// query names them.
logic::Interpretation as_interpretation(const Instance& instance,
                                        const std::optional<std::string>& domain_name = {});

}  // namespace etr::catalog
