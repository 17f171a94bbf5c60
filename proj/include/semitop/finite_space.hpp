#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace semitop {

// A subset of a finite ground set, as a bitmask over point indices.
using Mask = std::uint64_t;

// A finite topological space: ground set plus its open-set family. Subsets
// are bitmasks; families are sorted lists of bitmasks, which makes every
// emitted family canonical (ascending mask order). Instances are immutable
// after validated construction.
class FiniteSpace {
 public:
  FiniteSpace(std::vector<std::string> point_names, std::vector<Mask> opens);

  int point_count() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& point_names() const { return names_; }
  const std::vector<Mask>& opens() const { return opens_; }
  Mask full_mask() const { return full_; }

  // Throws input_error when the mask mentions points outside the ground set.
  void check_subset(Mask a) const;
  void check_point(int p) const;

  bool is_open(Mask a) const;
  bool is_closed(Mask a) const;

  Mask closure(Mask a) const;   // smallest closed superset
  Mask interior(Mask a) const;  // union of opens inside a

  // Semi-open: some open U with U <= A <= cl(U). Decided via
  // A <= cl(int(A)); the witness returned is U = int(A), which satisfies the
  // definition literally whenever the criterion holds.
  bool is_semi_open(Mask a) const;
  std::optional<Mask> semi_open_witness(Mask a) const;

  // Semi-closed: some closed K with int(K) <= C <= K; witness K = cl(C).
  bool is_semi_closed(Mask c) const;
  std::optional<Mask> semi_closed_witness(Mask c) const;

  std::vector<Mask> semi_open_family() const;
  std::vector<Mask> semi_closed_family() const;

  Mask semi_interior(Mask a) const;  // union of all semi-open subsets of a
  Mask semi_closure(Mask a) const;   // intersection of all semi-closed supersets

  std::optional<int> find_point(const std::string& name) const;
  std::string set_to_string(Mask a) const;  // "{a,c}"

  friend bool operator==(const FiniteSpace&, const FiniteSpace&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<Mask> opens_;  // sorted ascending, contains 0 and full_
  Mask full_ = 0;
};

// All topologies on n named points (1 <= n <= 5), each exactly once, ordered
// lexicographically by their sorted open-set families. Point names are
// "a", "b", ...
std::vector<FiniteSpace> enumerate_topologies(int n);

// Same enumeration, open-set families only (cheap form used by the search
// engine and by test oracles).
std::vector<std::vector<Mask>> enumerate_open_families(int n);

std::vector<std::string> default_point_names(int n);

}  // namespace semitop
