#pragma once

#include <string>

#include "etr/relation.hpp"

namespace etr {

// Deterministic table text: header of indexes in index order (numerals by
// value, then names lexicographically), tab-separated cells, rows sorted
// lexicographically by their rendered cells. The empty-index relation prints
// as "()" with one "()" row when its extent holds the empty tuple.
std::string render_table(const Relation& r);

std::string render_count(const Relation& r);

}  // namespace etr
