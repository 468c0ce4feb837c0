#include "etr/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace etr::catalog {

const char* builtin_kind_name(BuiltinKind kind) {
  switch (kind) {
    case BuiltinKind::Leq: return "leq";
    case BuiltinKind::Lt: return "lt";
    case BuiltinKind::Eq: return "eq";
    case BuiltinKind::Neq: return "neq";
  }
  return "?";
}

std::optional<BuiltinKind> builtin_kind_from(const std::string& word) {
  if (word == "leq") return BuiltinKind::Leq;
  if (word == "lt") return BuiltinKind::Lt;
  if (word == "eq") return BuiltinKind::Eq;
  if (word == "neq") return BuiltinKind::Neq;
  return std::nullopt;
}

Signature Scheme::global_tau() const {
  std::vector<Signature::Entry> entries(attributes.begin(), attributes.end());
  return Signature(std::move(entries));
}

const std::vector<Index>* Scheme::relation_attrs(const std::string& name) const {
  for (const auto& [rel, attrs] : relations) {
    if (rel == name) return &attrs;
  }
  return nullptr;
}

Signature Scheme::signature_for(const std::string& name) const {
  const std::vector<Index>* attrs = relation_attrs(name);
  if (attrs == nullptr) {
    throw Error(ErrorKind::UnknownRelation, name + " is not declared in the scheme");
  }
  std::vector<Signature::Entry> entries;
  for (const Index& a : *attrs) entries.emplace_back(a, attribute_domain(a));
  return Signature(std::move(entries));
}

DomainId Scheme::attribute_domain(const Index& attr) const {
  for (const auto& [a, d] : attributes) {
    if (a == attr) return d;
  }
  throw Error(ErrorKind::UnknownDomainRef, attr.name + " is not a declared attribute");
}

namespace {

std::vector<std::string> split_words(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string word;
  while (in >> word) out.push_back(word);
  return out;
}

bool has_attribute(const Scheme& scheme, const Index& attr) {
  return std::any_of(scheme.attributes.begin(), scheme.attributes.end(),
                     [&](const auto& e) { return e.first == attr; });
}

bool name_taken(const Scheme& scheme, const std::string& name) {
  if (scheme.relation_attrs(name) != nullptr) return true;
  return std::any_of(scheme.builtins.begin(), scheme.builtins.end(),
                     [&](const BuiltinDecl& b) { return b.name == name; });
}

}  // namespace

Scheme load_scheme(const std::string& text) {
  Scheme scheme;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);

    std::vector<std::string> words = split_words(line);
    if (words.empty()) continue;
    const std::string where = "line " + std::to_string(line_no);
    if (words.size() < 3 || words[2] != "=") {
      throw Error(ErrorKind::ParseError,
                  where + ": expected '<keyword> <name> = ...'");
    }
    const std::string& keyword = words[0];
    const std::string& name = words[1];
    std::vector<std::string> rest(words.begin() + 3, words.end());

    if (keyword == "domain") {
      if (rest.empty()) {
        throw Error(ErrorKind::ParseError, where + ": domain " + name + " has no values");
      }
      scheme.registry.add(Domain{DomainId(name), rest});
    } else if (keyword == "attribute") {
      if (rest.size() != 1) {
        throw Error(ErrorKind::ParseError, where + ": attribute needs exactly one domain");
      }
      if (has_attribute(scheme, Index(name))) {
        throw Error(ErrorKind::ParseError, where + ": attribute " + name + " redeclared");
      }
      if (!scheme.registry.has(DomainId(rest[0]))) {
        throw Error(ErrorKind::UnknownDomainRef,
                    where + ": attribute " + name + " references undeclared domain " + rest[0]);
      }
      scheme.attributes.emplace_back(Index(name), DomainId(rest[0]));
    } else if (keyword == "relation") {
      if (rest.empty()) {
        throw Error(ErrorKind::ParseError, where + ": relation " + name + " has no attributes");
      }
      if (name_taken(scheme, name)) {
        throw Error(ErrorKind::DuplicateRelation, where + ": relation " + name + " redeclared");
      }
      std::vector<Index> attrs;
      for (const std::string& a : rest) {
        if (!has_attribute(scheme, Index(a))) {
          throw Error(ErrorKind::UnknownDomainRef,
                      where + ": relation " + name + " uses undeclared attribute " + a);
        }
        if (std::find(attrs.begin(), attrs.end(), Index(a)) != attrs.end()) {
          throw Error(ErrorKind::ParseError,
                      where + ": relation " + name + " repeats attribute " + a);
        }
        attrs.emplace_back(a);
      }
      scheme.relations.emplace_back(name, std::move(attrs));
    } else if (keyword == "builtin") {
      if (rest.size() != 3) {
        throw Error(ErrorKind::ParseError,
                    where + ": builtin needs '<kind> <attribute> <attribute>'");
      }
      std::optional<BuiltinKind> kind = builtin_kind_from(rest[0]);
      if (!kind) {
        throw Error(ErrorKind::ParseError, where + ": unknown builtin kind " + rest[0]);
      }
      if (name_taken(scheme, name)) {
        throw Error(ErrorKind::DuplicateRelation, where + ": builtin " + name + " redeclared");
      }
      Index left(rest[1]), right(rest[2]);
      if (left == right) {
        throw Error(ErrorKind::ParseError, where + ": builtin needs two distinct attributes");
      }
      for (const Index& a : {left, right}) {
        if (!has_attribute(scheme, a)) {
          throw Error(ErrorKind::UnknownDomainRef,
                      where + ": builtin " + name + " uses undeclared attribute " + a.name);
        }
      }
      if (scheme.attribute_domain(left) != scheme.attribute_domain(right)) {
        throw Error(ErrorKind::ParseError,
                    where + ": builtin attributes must share one domain");
      }
      scheme.builtins.push_back(BuiltinDecl{name, *kind, left, right});
    } else if (keyword == "constant") {
      if (rest.size() != 1) {
        throw Error(ErrorKind::ParseError, where + ": constant needs exactly one literal");
      }
      for (const auto& [sym, lit] : scheme.constants) {
        if (sym == name) {
          throw Error(ErrorKind::ParseError, where + ": constant " + name + " redeclared");
        }
      }
      scheme.registry.sort_value(rest[0]);  // must belong to some domain
      scheme.constants.emplace_back(name, rest[0]);
    } else {
      throw Error(ErrorKind::ParseError, where + ": unknown keyword " + keyword);
    }
  }
  return scheme;
}

Scheme load_scheme_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::ParseError, "cannot open scheme file " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return load_scheme(buffer.str());
}

std::string save_scheme(const Scheme& scheme) {
  std::ostringstream out;
  for (const Domain& d : scheme.registry.domains()) {
    out << "domain " << d.id.name << " =";
    for (const std::string& lit : d.literals) out << " " << lit;
    out << "\n";
  }
  for (const auto& [attr, dom] : scheme.attributes) {
    out << "attribute " << attr.name << " = " << dom.name << "\n";
  }
  for (const auto& [name, attrs] : scheme.relations) {
    out << "relation " << name << " =";
    for (const Index& a : attrs) out << " " << a.name;
    out << "\n";
  }
  for (const auto& [sym, lit] : scheme.constants) {
    out << "constant " << sym << " = " << lit << "\n";
  }
  for (const BuiltinDecl& b : scheme.builtins) {
    out << "builtin " << b.name << " = " << builtin_kind_name(b.kind) << " "
        << b.left.name << " " << b.right.name << "\n";
  }
  return out.str();
}

const Relation& Instance::relation(const std::string& name) const {
  auto it = extents.find(name);
  if (it == extents.end()) {
    throw Error(ErrorKind::UnknownRelationName, name + " is not in the catalog");
  }
  return it->second;
}

Relation materialize_builtin(const BuiltinDecl& decl, const Scheme& scheme) {
  const DomainId dom_id = scheme.attribute_domain(decl.left);
  const Domain& dom = scheme.registry.domain(dom_id);

  std::vector<long long> parsed;
  parsed.reserve(dom.literals.size());
  for (const std::string& lit : dom.literals) {
    try {
      std::size_t used = 0;
      parsed.push_back(std::stoll(lit, &used));
      if (used != lit.size()) throw std::invalid_argument(lit);
    } catch (const std::exception&) {
      throw Error(ErrorKind::NonIntegerDomain,
                  "builtin " + decl.name + " needs integer literals; domain " +
                      dom_id.name + " holds " + lit);
    }
  }

  auto holds = [&decl](long long l, long long r) {
    switch (decl.kind) {
      case BuiltinKind::Leq: return l <= r;
      case BuiltinKind::Lt: return l < r;
      case BuiltinKind::Eq: return l == r;
      case BuiltinKind::Neq: return l != r;
    }
    return false;
  };

  Signature sig({{decl.left, dom_id}, {decl.right, dom_id}});
  std::set<Tuple> extent;
  for (std::size_t i = 0; i < dom.literals.size(); ++i) {
    for (std::size_t j = 0; j < dom.literals.size(); ++j) {
      if (!holds(parsed[i], parsed[j])) continue;
      extent.insert(Tuple({{decl.left, Value{dom_id, dom.literals[i]}},
                           {decl.right, Value{dom_id, dom.literals[j]}}}));
    }
  }
  return Relation(std::move(sig), std::move(extent));
}

Instance make_instance(Scheme scheme) {
  Instance instance{std::move(scheme), {}};
  for (const auto& [name, attrs] : instance.scheme.relations) {
    instance.extents.emplace(name, Relation::empty(instance.scheme.signature_for(name)));
  }
  for (const BuiltinDecl& decl : instance.scheme.builtins) {
    instance.extents.emplace(decl.name, materialize_builtin(decl, instance.scheme));
  }
  return instance;
}

namespace {

std::vector<std::string> split_cells(const std::string& line, char delimiter) {
  std::vector<std::string> cells;
  std::string cell;
  for (char c : line) {
    if (c == delimiter) {
      cells.push_back(cell);
      cell.clear();
    } else {
      cell.push_back(c);
    }
  }
  cells.push_back(cell);
  return cells;
}

}  // namespace

void load_relation(Instance& instance, const std::string& name,
                   const std::string& text, char delimiter) {
  const std::vector<Index>* attrs = instance.scheme.relation_attrs(name);
  if (attrs == nullptr) {
    throw Error(ErrorKind::UnknownRelation,
                name + " is not a declared data relation");
  }
  const Signature sig = instance.scheme.signature_for(name);

  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) {
    throw Error(ErrorKind::ParseError, name + ": missing header row");
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();

  std::vector<Index> header;
  for (const std::string& cell : split_cells(line, delimiter)) header.emplace_back(cell);
  {
    IndexSet seen(header.begin(), header.end());
    if (seen.size() != header.size() || seen != sig.key_set()) {
      throw Error(ErrorKind::HeaderMismatch,
                  name + ": header row does not list exactly the declared attributes");
    }
  }

  std::set<Tuple> extent;
  std::size_t row_no = 1;
  while (std::getline(in, line)) {
    ++row_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> cells = split_cells(line, delimiter);
    if (cells.size() != header.size()) {
      throw Error(ErrorKind::ParseError,
                  name + " row " + std::to_string(row_no) + ": expected " +
                      std::to_string(header.size()) + " cells, got " +
                      std::to_string(cells.size()));
    }
    std::vector<Tuple::Entry> entries;
    entries.reserve(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const DomainId& dom_id = sig.at(header[i]);
      if (!instance.scheme.registry.domain(dom_id).contains(cells[i])) {
        throw Error(ErrorKind::ValueOutOfDomain,
                    name + " row " + std::to_string(row_no) + ", column " +
                        header[i].name + ": " + cells[i] + " is not in domain " +
                        dom_id.name);
      }
      entries.emplace_back(header[i], Value{dom_id, cells[i]});
    }
    extent.insert(Tuple(std::move(entries)));
  }
  instance.extents.insert_or_assign(name, Relation(sig, std::move(extent)));
}

void load_relation_file(Instance& instance, const std::string& name,
                        const std::filesystem::path& path, char delimiter) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::ParseError, "cannot open data file " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  load_relation(instance, name, buffer.str(), delimiter);
}

std::string save_relation(const Instance& instance, const std::string& name,
                          char delimiter) {
  const std::vector<Index>* attrs = instance.scheme.relation_attrs(name);
  if (attrs == nullptr) {
    throw Error(ErrorKind::UnknownRelation,
                name + " is not a declared data relation");
  }
  const Relation& rel = instance.relation(name);

  std::ostringstream out;
  for (std::size_t i = 0; i < attrs->size(); ++i) {
    if (i) out << delimiter;
    out << (*attrs)[i].name;
  }
  out << "\n";

  std::vector<std::vector<std::string>> rows;
  for (const Tuple& t : rel.extent()) {
    std::vector<std::string> row;
    row.reserve(attrs->size());
    for (const Index& a : *attrs) row.push_back(t.at(a).literal);
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end());
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << delimiter;
      out << row[i];
    }
    out << "\n";
  }
  return out.str();
}

Instance load_instance(const std::filesystem::path& scheme_path,
                       const std::optional<std::filesystem::path>& data_dir,
                       char delimiter) {
  Instance instance = make_instance(load_scheme_file(scheme_path));
  if (data_dir) {
    for (const auto& [name, attrs] : instance.scheme.relations) {
      std::filesystem::path file = *data_dir / (name + ".csv");
      if (std::filesystem::exists(file)) {
        load_relation_file(instance, name, file, delimiter);
      }
    }
  }
  return instance;
}

logic::Interpretation as_interpretation(const Instance& instance,
                                        const std::optional<std::string>& domain_name) {
  const Scheme& scheme = instance.scheme;
  DomainId chosen;
  if (domain_name) {
    chosen = scheme.registry.domain(DomainId(*domain_name)).id;
  } else if (scheme.registry.domains().size() == 1) {
    chosen = scheme.registry.domains().front().id;
  } else {
    throw Error(ErrorKind::MixedDomains,
                "scheme declares " + std::to_string(scheme.registry.domains().size()) +
                    " domains; the logic front end needs a single one (pass a domain name)");
  }

  std::map<std::string, Relation> predicates;
  std::set<std::string> mixed;
  for (const auto& [name, rel] : instance.extents) {
    bool single = true;
    for (const auto& [idx, dom] : rel.signature()) {
      if (dom != chosen) {
        single = false;
        break;
      }
    }
    if (!single) {
      mixed.insert(name);
      continue;
    }
    // Renumber 0..k-1 following the declared attribute order.
    const std::vector<Index>* attrs = scheme.relation_attrs(name);
    std::vector<Index> order;
    if (attrs != nullptr) {
      order = *attrs;
    } else {
      for (const BuiltinDecl& b : scheme.builtins) {
        if (b.name == name) {
          order = {b.left, b.right};
          break;
        }
      }
    }
    std::vector<FiniteMap<Index, Index>::Entry> mapping;
    for (std::size_t i = 0; i < order.size(); ++i) {
      mapping.emplace_back(order[i], Index(std::to_string(i)));
    }
    predicates.emplace(name, rename(rel, FiniteMap<Index, Index>(std::move(mapping)),
                                    scheme.registry));
  }

  std::map<std::string, Value> constants;
  for (const auto& [sym, lit] : scheme.constants) {
    Value v = scheme.registry.value(lit);
    if (v.domain == chosen) constants.emplace(sym, std::move(v));
  }

  Domain domain = scheme.registry.domain(chosen);
  return logic::Interpretation::make(std::move(domain), std::move(predicates),
                                     std::move(constants), std::move(mixed));
}

}  // namespace etr::catalog
