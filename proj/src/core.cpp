#include "etr/core.hpp"

#include <algorithm>
#include <cctype>
#include <string_view>

namespace etr {

bool Index::is_numeric() const {
  if (name.empty()) return false;
  return std::all_of(name.begin(), name.end(),
                     [](unsigned char c) { return std::isdigit(c); });
}

namespace {

// The numeral without leading zeros; "0" stays "0".
std::string_view significant_digits(const std::string& s) {
  const std::size_t first = s.find_first_not_of('0');
  if (first == std::string::npos) return std::string_view(s).substr(s.size() - 1);
  return std::string_view(s).substr(first);
}

}  // namespace

std::strong_ordering operator<=>(const Index& a, const Index& b) {
  const bool an = a.is_numeric(), bn = b.is_numeric();
  if (an != bn) return an ? std::strong_ordering::less : std::strong_ordering::greater;
  if (an && bn) {
    // Integer order without parsing: longer significant part means larger,
    // equal lengths compare digit-wise. The raw text breaks ties like
    // "0" vs "00".
    const std::string_view da = significant_digits(a.name), db = significant_digits(b.name);
    if (auto c = da.size() <=> db.size(); c != 0) return c;
    if (auto c = da <=> db; c != 0) return c;
  }
  return a.name <=> b.name;
}

Signature signature_of(const Tuple& t) {
  std::vector<Signature::Entry> out;
  out.reserve(t.size());
  for (const auto& [i, v] : t) out.emplace_back(i, v.domain);
  return Signature(std::move(out));
}

bool is_sorted_by(const Tuple& t, const Signature& tau) {
  return signature_of(t) == tau;
}

bool Domain::contains(const std::string& literal) const {
  return std::find(literals.begin(), literals.end(), literal) != literals.end();
}

void DomainRegistry::add(Domain domain) {
  if (domain.literals.empty()) {
    throw Error(ErrorKind::EmptyDomain, "domain " + domain.id.name + " has no values");
  }
  if (slot_.contains(domain.id.name)) {
    throw Error(ErrorKind::DuplicateDomain, "domain " + domain.id.name + " declared twice");
  }
  for (std::size_t i = 0; i < domain.literals.size(); ++i) {
    const std::string& lit = domain.literals[i];
    for (std::size_t j = i + 1; j < domain.literals.size(); ++j) {
      if (domain.literals[j] == lit) {
        throw Error(ErrorKind::DuplicateLiteral,
                    "literal " + lit + " repeated in domain " + domain.id.name);
      }
    }
    if (const DomainId* prior = owner_.find(lit)) {
      throw Error(ErrorKind::OverlappingDomains,
                  "literal " + lit + " belongs to both " + prior->name + " and " +
                      domain.id.name);
    }
  }
  for (const std::string& lit : domain.literals) owner_.set(lit, domain.id);
  slot_.set(domain.id.name, domains_.size());
  domains_.push_back(std::move(domain));
}

bool DomainRegistry::has(const DomainId& id) const { return slot_.contains(id.name); }

const Domain& DomainRegistry::domain(const DomainId& id) const {
  if (const std::size_t* i = slot_.find(id.name)) return domains_[*i];
  throw Error(ErrorKind::UnknownDomain, id.name + " is not a registered domain");
}

DomainId DomainRegistry::sort_value(const std::string& literal) const {
  if (const DomainId* id = owner_.find(literal)) return *id;
  throw Error(ErrorKind::UnknownLiteral, literal + " occurs in no registered domain");
}

Value DomainRegistry::value(const std::string& literal) const {
  return Value{sort_value(literal), literal};
}

FiniteMap<std::string, DomainId> DomainRegistry::sorting_function() const {
  return owner_;
}

std::set<Tuple> DomainRegistry::cart_enumerate(const Signature& tau) const {
  std::vector<const Domain*> doms;
  doms.reserve(tau.size());
  for (const auto& [idx, id] : tau) doms.push_back(&domain(id));

  std::set<Tuple> out;
  std::vector<std::size_t> pick(tau.size(), 0);
  for (;;) {
    std::vector<Tuple::Entry> entries;
    entries.reserve(tau.size());
    std::size_t k = 0;
    for (const auto& [idx, id] : tau) {
      entries.emplace_back(idx, Value{id, doms[k]->literals[pick[k]]});
      ++k;
    }
    out.insert(Tuple(std::move(entries)));
    // odometer over the per-index literal positions
    std::size_t j = 0;
    while (j < pick.size()) {
      if (++pick[j] < doms[j]->literals.size()) break;
      pick[j] = 0;
      ++j;
    }
    if (j == pick.size()) break;
  }
  return out;
}

std::uint64_t DomainRegistry::cart_size(const Signature& tau) const {
  std::uint64_t n = 1;
  for (const auto& [idx, id] : tau) n *= domain(id).literals.size();
  return n;
}

}  // namespace etr
