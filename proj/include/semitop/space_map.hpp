#pragma once

#include "semitop/finite_space.hpp"

#include <optional>
#include <vector>

namespace semitop {

// A function between finite spaces, one codomain index per domain point.
class SpaceMap {
 public:
  SpaceMap(FiniteSpace domain, FiniteSpace codomain, std::vector<int> images);

  const FiniteSpace& domain() const { return domain_; }
  const FiniteSpace& codomain() const { return codomain_; }
  const std::vector<int>& images() const { return images_; }

  int apply(int p) const { return images_[p]; }
  Mask preimage(Mask b) const;
  Mask image(Mask a) const;
  bool is_constant() const;
  bool is_identity() const;

  friend bool operator==(const SpaceMap&, const SpaceMap&) = default;

 private:
  FiniteSpace domain_;
  FiniteSpace codomain_;
  std::vector<int> images_;
};

SpaceMap identity_map(const FiniteSpace& s);
SpaceMap constant_map(const FiniteSpace& domain, const FiniteSpace& codomain, int value);

// g after f; requires codomain(f) == domain(g).
SpaceMap compose(const SpaceMap& f, const SpaceMap& g);

// A codomain set whose preimage violates the class under test.
struct MapWitness {
  Mask target_set = 0;
  Mask preimage = 0;
};

// Verdicts for the continuity hierarchy, each false flag carrying the first
// violating pair in ascending-mask order.
//   so1: preimages of opens are semi-open
//   so2: preimages of semi-opens are semi-open (irresolute)
//   so3: preimages of semi-opens are open
struct ContinuityReport {
  bool continuous = false;
  bool so1 = false;
  bool so2 = false;
  bool so3 = false;
  std::optional<MapWitness> continuous_witness;
  std::optional<MapWitness> so1_witness;
  std::optional<MapWitness> so2_witness;
  std::optional<MapWitness> so3_witness;
};

ContinuityReport classify(const SpaceMap& f);

// Independent route through closed/semi-closed preimages; must agree with
// classify everywhere.
ContinuityReport classify_via_closed(const SpaceMap& f);

// Pointwise verdicts at p, by witness search over neighbourhoods. A false
// flag carries the target set that defeats every candidate neighbourhood.
struct PointReport {
  bool so1 = false;
  bool so2 = false;
  bool so3 = false;
  std::optional<Mask> so1_violation;
  std::optional<Mask> so2_violation;
  std::optional<Mask> so3_violation;
};

PointReport classify_at(const SpaceMap& f, int p);

}  // namespace semitop
