#pragma once

#include "semitop/finite_space.hpp"
#include "semitop/interval_set.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace semitop {

// Continuous piecewise-linear self-map of [0,1], given by its node list.
class PLMap {
 public:
  explicit PLMap(std::vector<std::pair<Rat, Rat>> nodes);

  const std::vector<std::pair<Rat, Rat>>& nodes() const { return nodes_; }
  Rat operator()(const Rat& t) const;
  bool nondecreasing() const;
  bool fixes_endpoints() const;  // rho(0) == 0 and rho(1) == 1

  friend bool operator==(const PLMap&, const PLMap&) = default;

 private:
  std::vector<std::pair<Rat, Rat>> nodes_;
};

PLMap pl_identity();
// rho(t) = 2t on [0,1/4], t + 1/4 on [1/4,1/2], (t+1)/2 on [1/2,1];
// pulls a(bc) back to (ab)c.
PLMap reassociation_reparam();
// rho(t) = 0 on [0,1/2], 2t - 1 on [1/2,1]; pulls a back to 1_x * a.
PLMap left_unit_reparam();
// rho(t) = 2t on [0,1/2], 1 on [1/2,1]; pulls a back to a * 1_y.
PLMap right_unit_reparam();

// Exact preimage of an interval under a PL map (handles plateaus and
// decreasing segments).
RatSet pl_preimage(const PLMap& rho, const Interval& iv);

// One constant piece of a step path.
struct Piece {
  Interval iv;
  int value = 0;

  friend bool operator==(const Piece&, const Piece&) = default;
};

// A piecewise-constant map [0,1] -> X over a rational partition. The pieces
// partition [0,1] exactly (each breakpoint belongs to exactly one piece;
// degenerate point pieces are allowed) and adjacent pieces with equal values
// are merged, so equal canonical forms mean equal functions.
class StepPath {
 public:
  StepPath(FiniteSpace space, std::vector<Piece> pieces);

  static StepPath constant(const FiniteSpace& space, int value);
  // [0,1/2) -> a, [1/2,1] -> b (collapses to a constant path when a == b)
  static StepPath two_step(const FiniteSpace& space, int a, int b);

  const FiniteSpace& space() const { return space_; }
  const std::vector<Piece>& pieces() const { return pieces_; }
  int at(const Rat& t) const;
  int start() const { return pieces_.front().value; }
  int end() const { return pieces_.back().value; }
  bool is_loop() const { return start() == end(); }

  RatSet preimage(Mask values) const;

  friend bool operator==(const StepPath&, const StepPath&) = default;

 private:
  FiniteSpace space_;
  std::vector<Piece> pieces_;
};

// Builds the canonical step path determined by an exact sampler: cuts must
// contain 0 and 1; the sampler is evaluated at every cut and at midpoints of
// consecutive cuts, between which the value is assumed constant.
StepPath assemble_step_path(const FiniteSpace& space, std::vector<Rat> cuts,
                            const std::function<int(const Rat&)>& value_at);

struct PathViolation {
  Mask target_set = 0;
  RatSet preimage;
};
struct PathVerdict {
  bool ok = true;
  std::optional<PathViolation> violation;
};

// so-i-path test: for i=1 preimages of opens must be semi-open, for i=2
// preimages of semi-opens must be semi-open, for i=3 preimages of semi-opens
// must be open.
PathVerdict is_so_path(const StepPath& path, int i);

// (a*b)(t) = a(2t) then b(2t-1); requires a(1) == b(0).
StepPath compose_paths(const StepPath& a, const StepPath& b);

// reverse(t) = path(1-t)
StepPath inverse_path(const StepPath& path);

// Exact pullback path∘rho for a nondecreasing rho with rho(0)=0, rho(1)=1.
StepPath reparameterize(const StepPath& path, const PLMap& rho);

struct SignatureEntry {
  int value = 0;
  bool degenerate = false;

  friend bool operator==(const SignatureEntry&, const SignatureEntry&) = default;
};

// Value order with degeneracy flags; invariant under monotone surjective PL
// reparameterization of nondegenerate pieces.
std::vector<SignatureEntry> canonical_signature(const StepPath& path);

enum class PLClass { holds, refuted, condition_unmet };

struct PLVerdict {
  PLClass status = PLClass::holds;
  std::optional<Interval> witness;      // test set whose preimage misbehaves
  std::optional<RatSet> witness_preimage;
  std::string note;
};

// so-i continuity of a PL map. i=1 always holds (continuity); i=2 holds
// under the sufficient criterion "nondecreasing surjection of [0,1]";
// i=3 is a refuter over a generated family of half-open test intervals and
// reports holds only as best effort (constant maps are certified).
PLVerdict pl_continuity_class(const PLMap& rho, int i);

// Intersection of all semi-open sets containing p.
Mask semi_open_core(const FiniteSpace& s, int p);

struct ConnectivityResult {
  bool connected = false;
  std::optional<StepPath> witness;
};

// so-i path existence between two points. For i in {1,2} every pair is
// connected by the canonical two-piece path. For i=3 the decision runs on
// the graph with an edge {u,v} whenever some w has both u and v in its
// semi-open core; a witness path threads the connecting walk through
// degenerate pieces.
ConnectivityResult path_connectivity(const FiniteSpace& s, int x, int y, int i);

}  // namespace semitop
