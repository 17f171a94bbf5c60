#pragma once

#include "semitop/step_path.hpp"

#include <optional>
#include <vector>

namespace semitop {

// One moving breakpoint of a parametric step path: its position as a PL
// function of the homotopy parameter t (defined over all of [0,1], read on
// the band's t-range) and which side owns the boundary point.
struct SliceBoundary {
  PLMap position;
  bool owner_left = true;
};

// Over one t-interval the slice is a step path with fixed piece values and
// moving breakpoints. Boundary positions may touch (pieces collapse and
// drop) but must never cross.
struct SliceBand {
  Interval t_range;
  std::vector<int> values;  // one per piece; boundaries.size() + 1 entries
  std::vector<SliceBoundary> boundaries;
};

// A homotopy candidate H : I x I -> X presented band by band; the bands'
// t-ranges partition [0,1].
class SliceFamily {
 public:
  SliceFamily(FiniteSpace space, std::vector<SliceBand> bands);

  const FiniteSpace& space() const { return space_; }
  const std::vector<SliceBand>& bands() const { return bands_; }
  const SliceBand& band_at(const Rat& t) const;

  int eval(const Rat& s, const Rat& t) const;  // H(s, t)

 private:
  FiniteSpace space_;
  std::vector<SliceBand> bands_;
};

// The slice H_t as an exact canonical step path.
StepPath slice_at(const SliceFamily& h, const Rat& t);

struct SliceViolation {
  Rat t;
  Mask target_set = 0;
  RatSet preimage;
};

struct SliceReport {
  bool ok = false;
  StepPath h0;
  StepPath h1;
  std::vector<Rat> checked;  // every event t verified exactly
  std::optional<SliceViolation> violation;
};

// Verifies that every slice is an so-i path. Each band is decomposed at its
// PL kinks and at boundary collision events; between events the slice's
// signature is constant, so one exact midpoint sample per gap plus every
// event slice decides the whole band.
SliceReport verify_slices(const SliceFamily& h, int i);

struct JointCandidate {
  Mask target_set = 0;
  Rat s;
  Rat t;
};

// Samples the joint so-i condition on a (grid+1) x (grid+1) lattice and
// reports the first discrete violation of A <= cl(int A). A clean pass is
// evidence, not proof.
std::optional<JointCandidate> falsify_joint(const SliceFamily& h, int i, int grid);

// H(s,t) = path(s): every slice equals the given path.
SliceFamily constant_family(const StepPath& path);

// H(s,t) = F(s,2t) then G(s,2t-1); requires F's final slice to equal G's
// initial slice.
SliceFamily paste_families(const SliceFamily& f, const SliceFamily& g);

// The standard contraction of path * inverse(path) to the constant path:
// H(s,t) walks out along the path for value-time t, waits, and walks back.
// H_0 is constant at path(0), H_1 equals compose(path, inverse(path)).
SliceFamily cancellation_family(const StepPath& path);

}  // namespace semitop
