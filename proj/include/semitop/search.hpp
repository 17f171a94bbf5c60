#pragma once

#include "semitop/space_map.hpp"

#include <string>
#include <variant>

namespace semitop {

enum class MapClass { continuous, so1, so2, so3, constant };

std::string map_class_name(MapClass c);

// The query vocabulary is a closed enum, not a logic DSL: closure of a class
// under composition, implication between classes, and identity-map class
// membership.
struct ComposeClosedQuery {
  MapClass cls;
};
struct ImpliesQuery {
  MapClass from;
  MapClass to;
};
struct IdentityClassQuery {
  MapClass cls;
};
using PropertyQuery = std::variant<ComposeClosedQuery, ImpliesQuery, IdentityClassQuery>;

// "so1-compose-closed", "continuous-implies-so2", "identity-so3"
// (a trailing '?' is accepted). Throws input_error on unknown queries.
PropertyQuery parse_query(const std::string& text);
std::string format_query(const PropertyQuery& q);

struct ComposeClosedWitness {
  SpaceMap f;   // X -> Y, in the class
  SpaceMap g;   // Y -> Z, in the class
  SpaceMap gf;  // composite, not in the class
  MapWitness violation;
};
struct ImplicationWitness {
  SpaceMap f;  // in `from`, not in `to`
  MapWitness violation;
};
struct IdentityWitness {
  FiniteSpace space;
  Mask violating_set = 0;  // least target set defeating the identity
};

struct SearchResult {
  bool counterexample_found = false;
  std::uint64_t candidates_checked = 0;
  std::variant<std::monostate, ComposeClosedWitness, ImplicationWitness, IdentityWitness> witness;
};

// Exhaustive scan over all spaces with up to max_points points (<= 4), in
// canonical order: spaces by point count then lexicographic family, maps
// lexicographic on image tuples. The witness returned is the first in that
// order no matter how many worker threads are used.
SearchResult search_counterexample(const PropertyQuery& q, int max_points, int jobs = 1);

}  // namespace semitop
