#pragma once

#include "semitop/rat.hpp"

#include <optional>
#include <string>
#include <vector>

namespace semitop {

// One rational subinterval of [0,1]. Degenerate points are allowed and carry
// both flags closed; the empty set is represented by RatSet, never by an
// Interval.
struct Interval {
  Rat lo;
  Rat hi;
  bool lo_closed = true;
  bool hi_closed = true;

  static Interval point(Rat p);
  static Interval closed(Rat lo, Rat hi);
  static Interval open(Rat lo, Rat hi);
  static Interval left_closed(Rat lo, Rat hi);   // [lo, hi)
  static Interval right_closed(Rat lo, Rat hi);  // (lo, hi]

  bool is_point() const { return lo == hi; }
  bool contains(const Rat& t) const;

  friend bool operator==(const Interval&, const Interval&) = default;
};

// Intersection of two intervals; empty result -> nullopt.
std::optional<Interval> intersect(const Interval& a, const Interval& b);

// Image of an interval under t -> mul*t + add with mul > 0 (flags kept) or
// mul < 0 (endpoints and flags swap).
Interval affine_image(const Interval& iv, const Rat& mul, const Rat& add);

// A finite union of rational subintervals of [0,1] in canonical form:
// components sorted, pairwise disjoint and non-mergeable (adjacent compatible
// intervals are merged eagerly, so structural equality is set equality).
// Topology is that of [0,1] as a subspace of the reals: [0,x) and (x,1] are
// open.
class RatSet {
 public:
  RatSet() = default;  // empty set
  explicit RatSet(Interval iv);

  static RatSet from_intervals(std::vector<Interval> parts);
  static RatSet unit();

  const std::vector<Interval>& components() const { return components_; }
  bool is_empty() const { return components_.empty(); }
  bool contains(const Rat& t) const;

  friend bool operator==(const RatSet&, const RatSet&) = default;

 private:
  std::vector<Interval> components_;
};

RatSet set_union(const RatSet& a, const RatSet& b);
RatSet set_intersect(const RatSet& a, const RatSet& b);
RatSet set_complement(const RatSet& a);  // relative to [0,1]
bool is_subset(const RatSet& a, const RatSet& b);

RatSet interior(const RatSet& a);
RatSet topo_closure(const RatSet& a);
bool is_open(const RatSet& a);

// A semi-open iff A is contained in the closure of its interior; semi-closed
// iff the interior of its closure is contained in A.
bool is_semi_open(const RatSet& a);
bool is_semi_closed(const RatSet& a);

// "[0,1/2) u {3/4} u (3/4,1]"; the empty set prints as "{}".
std::string format_interval(const Interval& iv);
std::string format_ratset(const RatSet& a);

}  // namespace semitop
