#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "etr/error.hpp"

namespace etr {

inline std::string describe(const std::string& s) { return s; }
inline std::string describe(int v) { return std::to_string(v); }

// A finite function kept as a key-sorted entry vector. Tuples, signatures,
// patterns, substitutions, and assignments are all instances of this.
template <typename K, typename V>
class FiniteMap {
 public:
  using Entry = std::pair<K, V>;

  FiniteMap() = default;

  FiniteMap(std::initializer_list<Entry> entries)
      : FiniteMap(std::vector<Entry>(entries)) {}

  explicit FiniteMap(std::vector<Entry> entries) : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < entries_.size(); ++i) {
      if (!(entries_[i - 1].first < entries_[i].first)) {
        throw std::invalid_argument("FiniteMap: duplicate key " +
                                    describe(entries_[i].first));
      }
    }
  }

  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

  bool contains(const K& key) const { return find(key) != nullptr; }

  const V* find(const K& key) const {
    auto it = lower_bound(key);
    if (it != entries_.end() && !(key < it->first)) return &it->second;
    return nullptr;
  }

  const V& at(const K& key) const {
    if (const V* v = find(key)) return *v;
    throw std::out_of_range("FiniteMap: missing key " + describe(key));
  }

  // Insert-or-assign; keeps the entry vector sorted.
  void set(K key, V value) {
    auto it = std::lower_bound(
        entries_.begin(), entries_.end(), key,
        [](const Entry& e, const K& k) { return e.first < k; });
    if (it != entries_.end() && !(key < it->first)) {
      it->second = std::move(value);
    } else {
      entries_.insert(it, Entry(std::move(key), std::move(value)));
    }
  }

  std::set<K> key_set() const {
    std::set<K> keys;
    for (const Entry& e : entries_) keys.insert(e.first);
    return keys;
  }

  const std::vector<Entry>& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  friend bool operator==(const FiniteMap&, const FiniteMap&) = default;
  friend auto operator<=>(const FiniteMap&, const FiniteMap&) = default;

 private:
  typename std::vector<Entry>::const_iterator lower_bound(const K& key) const {
    return std::lower_bound(
        entries_.begin(), entries_.end(), key,
        [](const Entry& e, const K& k) { return e.first < k; });
  }

  std::vector<Entry> entries_;
};

// f restricted to `keys`; intersection semantics, so keys absent from f are
// simply dropped.
template <typename K, typename V>
FiniteMap<K, V> restrict_to(const FiniteMap<K, V>& f, const std::set<K>& keys) {
  std::vector<typename FiniteMap<K, V>::Entry> out;
  for (const auto& [k, v] : f) {
    if (keys.count(k)) out.emplace_back(k, v);
  }
  return FiniteMap<K, V>(std::move(out));
}

// The function sum f0+f1, defined when f0 and f1 agree on every shared key.
template <typename K, typename V>
FiniteMap<K, V> sum(const FiniteMap<K, V>& f0, const FiniteMap<K, V>& f1) {
  std::vector<typename FiniteMap<K, V>::Entry> out;
  out.reserve(f0.size() + f1.size());
  auto i0 = f0.begin(), e0 = f0.end();
  auto i1 = f1.begin(), e1 = f1.end();
  while (i0 != e0 && i1 != e1) {
    if (i0->first < i1->first) {
      out.push_back(*i0++);
    } else if (i1->first < i0->first) {
      out.push_back(*i1++);
    } else {
      if (!(i0->second == i1->second)) {
        throw Error(ErrorKind::NotSummable,
                    "key " + describe(i0->first) + " maps to " +
                        describe(i0->second) + " on the left but " +
                        describe(i1->second) + " on the right");
      }
      out.push_back(*i0);
      ++i0;
      ++i1;
    }
  }
  out.insert(out.end(), i0, e0);
  out.insert(out.end(), i1, e1);
  return FiniteMap<K, V>(std::move(out));
}

// compose(outer, inner): k ↦ outer(inner(k)). Every value of `inner` must be
// a key of `outer`.
template <typename K1, typename K2, typename V>
FiniteMap<K1, V> compose(const FiniteMap<K2, V>& outer,
                         const FiniteMap<K1, K2>& inner) {
  std::vector<typename FiniteMap<K1, V>::Entry> out;
  out.reserve(inner.size());
  for (const auto& [k, mid] : inner) {
    const V* v = outer.find(mid);
    if (v == nullptr) {
      throw Error(ErrorKind::ComposeKeyMissing,
                  "inner value " + describe(mid) + " is not a key of the outer map");
    }
    out.emplace_back(k, *v);
  }
  return FiniteMap<K1, V>(std::move(out));
}

}  // namespace etr
