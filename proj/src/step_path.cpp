#include "semitop/step_path.hpp"

#include "semitop/error.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace semitop {

PLMap::PLMap(std::vector<std::pair<Rat, Rat>> nodes) : nodes_(std::move(nodes)) {
  if (nodes_.size() < 2) throw input_error("PL map needs at least two nodes");
  if (nodes_.front().first != 0 || nodes_.back().first != 1)
    throw input_error("PL map must be defined from t=0 to t=1");
  for (std::size_t k = 0; k + 1 < nodes_.size(); ++k)
    if (!(nodes_[k].first < nodes_[k + 1].first))
      throw input_error("PL map nodes must have strictly increasing t");
  for (const auto& [t, v] : nodes_)
    if (!in_unit_interval(v)) throw input_error("PL map value outside [0,1]");
}

Rat PLMap::operator()(const Rat& t) const {
  if (t < 0 || t > 1) throw input_error("PL map evaluated outside [0,1]");
  std::size_t k = 0;
  while (k + 2 < nodes_.size() && nodes_[k + 1].first <= t) ++k;
  const auto& [t0, v0] = nodes_[k];
  const auto& [t1, v1] = nodes_[k + 1];
  if (t <= t0) return v0;
  if (t >= t1) return v1;
  return v0 + (v1 - v0) * (t - t0) / (t1 - t0);
}

bool PLMap::nondecreasing() const {
  for (std::size_t k = 0; k + 1 < nodes_.size(); ++k)
    if (nodes_[k].second > nodes_[k + 1].second) return false;
  return true;
}

bool PLMap::fixes_endpoints() const {
  return nodes_.front().second == 0 && nodes_.back().second == 1;
}

PLMap pl_identity() { return PLMap({{0, 0}, {1, 1}}); }

PLMap reassociation_reparam() {
  return PLMap({{0, 0}, {Rat(1, 4), Rat(1, 2)}, {Rat(1, 2), Rat(3, 4)}, {1, 1}});
}

PLMap left_unit_reparam() { return PLMap({{0, 0}, {Rat(1, 2), 0}, {1, 1}}); }

PLMap right_unit_reparam() { return PLMap({{0, 0}, {Rat(1, 2), 1}, {1, 1}}); }

RatSet pl_preimage(const PLMap& rho, const Interval& iv) {
  std::vector<Interval> parts;
  const auto& nodes = rho.nodes();
  for (std::size_t k = 0; k + 1 < nodes.size(); ++k) {
    const auto& [t0, v0] = nodes[k];
    const auto& [t1, v1] = nodes[k + 1];
    const Interval segment = Interval::closed(t0, t1);
    if (v0 == v1) {
      if (iv.contains(v0)) parts.push_back(segment);
      continue;
    }
    // clip the target to the segment's value range, then invert the affine map
    const Interval range = v0 < v1 ? Interval::closed(v0, v1) : Interval::closed(v1, v0);
    const auto clipped = intersect(iv, range);
    if (!clipped) continue;
    const Rat slope = (v1 - v0) / (t1 - t0);
    // t = t0 + (v - v0)/slope
    parts.push_back(affine_image(*clipped, 1 / slope, t0 - v0 / slope));
  }
  return RatSet::from_intervals(std::move(parts));
}

namespace {

// merge adjacent pieces with equal values; flags stay exact
std::vector<Piece> merge_pieces(std::vector<Piece> pieces) {
  std::vector<Piece> out;
  for (auto& p : pieces) {
    if (!out.empty() && out.back().value == p.value) {
      Interval& prev = out.back().iv;
      if (prev.hi == p.iv.lo && (prev.hi_closed || p.iv.lo_closed)) {
        prev.hi = p.iv.hi;
        prev.hi_closed = p.iv.hi_closed;
        continue;
      }
    }
    out.push_back(std::move(p));
  }
  return out;
}

void validate_partition(const std::vector<Piece>& pieces) {
  if (pieces.empty()) throw input_error("step path needs at least one piece");
  const Interval& first = pieces.front().iv;
  if (first.lo != 0 || !first.lo_closed) throw input_error("step path pieces must start at 0");
  const Interval& last = pieces.back().iv;
  if (last.hi != 1 || !last.hi_closed) throw input_error("step path pieces must end at 1");
  for (std::size_t k = 0; k + 1 < pieces.size(); ++k) {
    const Interval& a = pieces[k].iv;
    const Interval& b = pieces[k + 1].iv;
    if (a.hi != b.lo)
      throw input_error("step path pieces must be adjacent: gap between " +
                        format_interval(a) + " and " + format_interval(b));
    if (a.hi_closed == b.lo_closed)
      throw input_error("breakpoint " + format_rat(a.hi) +
                        " must belong to exactly one piece");
  }
  for (const auto& p : pieces) {
    if (p.iv.lo > p.iv.hi || (p.iv.is_point() && !(p.iv.lo_closed && p.iv.hi_closed)))
      throw input_error("invalid piece interval");
  }
}

}  // namespace

StepPath::StepPath(FiniteSpace space, std::vector<Piece> pieces)
    : space_(std::move(space)), pieces_(merge_pieces(std::move(pieces))) {
  validate_partition(pieces_);
  for (const auto& p : pieces_) space_.check_point(p.value);
}

StepPath StepPath::constant(const FiniteSpace& space, int value) {
  return StepPath(space, {Piece{Interval::closed(0, 1), value}});
}

StepPath StepPath::two_step(const FiniteSpace& space, int a, int b) {
  return StepPath(space, {Piece{Interval::left_closed(0, Rat(1, 2)), a},
                          Piece{Interval::closed(Rat(1, 2), 1), b}});
}

int StepPath::at(const Rat& t) const {
  for (const auto& p : pieces_)
    if (p.iv.contains(t)) return p.value;
  throw input_error("step path evaluated outside [0,1]");
}

RatSet StepPath::preimage(Mask values) const {
  space_.check_subset(values);
  std::vector<Interval> parts;
  for (const auto& p : pieces_)
    if (values >> p.value & 1) parts.push_back(p.iv);
  return RatSet::from_intervals(std::move(parts));
}

StepPath assemble_step_path(const FiniteSpace& space, std::vector<Rat> cuts,
                            const std::function<int(const Rat&)>& value_at) {
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  if (cuts.empty() || cuts.front() != 0 || cuts.back() != 1) {
    std::string msg = "cut list must span [0,1]; got";
    for (const auto& c : cuts) msg += " " + format_rat(c);
    throw input_error(msg);
  }

  // alternate degenerate cut pieces with open gap pieces; the StepPath
  // constructor merges equal-valued neighbours into the canonical partition
  std::vector<Piece> pieces;
  for (std::size_t k = 0; k < cuts.size(); ++k) {
    pieces.push_back(Piece{Interval::point(cuts[k]), value_at(cuts[k])});
    if (k + 1 < cuts.size())
      pieces.push_back(Piece{Interval::open(cuts[k], cuts[k + 1]),
                             value_at(midpoint(cuts[k], cuts[k + 1]))});
  }
  return StepPath(space, std::move(pieces));
}

PathVerdict is_so_path(const StepPath& path, int i) {
  if (i < 1 || i > 3) throw input_error("so-i index must be 1, 2 or 3");
  const FiniteSpace& space = path.space();
  const std::vector<Mask> targets =
      (i == 1) ? space.opens() : space.semi_open_family();
  for (Mask b : targets) {
    const RatSet pre = path.preimage(b);
    const bool ok = (i == 3) ? is_open(pre) : is_semi_open(pre);
    if (!ok) return {false, PathViolation{b, pre}};
  }
  return {};
}

StepPath compose_paths(const StepPath& a, const StepPath& b) {
  if (!(a.space() == b.space())) throw input_error("compose: paths live in different spaces");
  if (a.end() != b.start())
    throw input_error("compose: first path must end where the second starts");
  std::vector<Piece> pieces;
  for (const auto& p : a.pieces())
    pieces.push_back(Piece{affine_image(p.iv, Rat(1, 2), 0), p.value});
  // the midpoint 1/2 carries a(1) == b(0); b's side gives it up
  bool first = true;
  for (const auto& p : b.pieces()) {
    Interval iv = affine_image(p.iv, Rat(1, 2), Rat(1, 2));
    if (first) {
      first = false;
      if (iv.is_point()) continue;  // degenerate {1/2} already owned by a's side
      iv.lo_closed = false;
    }
    pieces.push_back(Piece{std::move(iv), p.value});
  }
  return StepPath(a.space(), std::move(pieces));
}

StepPath inverse_path(const StepPath& path) {
  std::vector<Piece> pieces;
  for (auto it = path.pieces().rbegin(); it != path.pieces().rend(); ++it)
    pieces.push_back(Piece{affine_image(it->iv, -1, 1), it->value});
  return StepPath(path.space(), std::move(pieces));
}

StepPath reparameterize(const StepPath& path, const PLMap& rho) {
  if (!rho.nondecreasing()) throw input_error("reparameterization must be nondecreasing");
  if (!rho.fixes_endpoints())
    throw input_error("reparameterization must satisfy rho(0) = 0 and rho(1) = 1");

  // cut [0,1] at every rho node and at every preimage of a piece boundary,
  // then sample; between cuts the composite is constant
  std::vector<Rat> cuts;
  for (const auto& [t, v] : rho.nodes()) cuts.push_back(t);
  std::set<Rat> boundaries;
  for (const auto& p : path.pieces()) {
    boundaries.insert(p.iv.lo);
    boundaries.insert(p.iv.hi);
  }
  for (const Rat& b : boundaries) {
    const RatSet pre = pl_preimage(rho, Interval::point(b));
    for (const auto& c : pre.components()) {
      cuts.push_back(c.lo);
      cuts.push_back(c.hi);
    }
  }
  return assemble_step_path(path.space(), std::move(cuts),
                            [&](const Rat& t) { return path.at(rho(t)); });
}

std::vector<SignatureEntry> canonical_signature(const StepPath& path) {
  std::vector<SignatureEntry> sig;
  for (const auto& p : path.pieces()) sig.push_back({p.value, p.iv.is_point()});
  return sig;
}

PLVerdict pl_continuity_class(const PLMap& rho, int i) {
  if (i < 1 || i > 3) throw input_error("so-i index must be 1, 2 or 3");
  if (i == 1) return {PLClass::holds, std::nullopt, std::nullopt,
                      "piecewise-linear maps are continuous, hence preimages of opens are open"};
  if (i == 2) {
    if (rho.nondecreasing() && rho.fixes_endpoints())
      return {PLClass::holds, std::nullopt, std::nullopt,
              "nondecreasing continuous surjection of [0,1]"};
    return {PLClass::condition_unmet, std::nullopt, std::nullopt,
            "sufficient criterion (nondecreasing surjection of [0,1]) not met"};
  }

  // i = 3: refutation over half-open probes. Candidate endpoints: the node
  // values, midpoints of consecutive distinct node values, and the dyadic
  // quarters.
  std::set<Rat> cand{Rat(0), Rat(1, 4), Rat(1, 2), Rat(3, 4), Rat(1)};
  std::vector<Rat> node_values;
  for (const auto& [t, v] : rho.nodes()) node_values.push_back(v);
  std::sort(node_values.begin(), node_values.end());
  node_values.erase(std::unique(node_values.begin(), node_values.end()), node_values.end());
  for (const Rat& v : node_values) cand.insert(v);
  for (std::size_t k = 0; k + 1 < node_values.size(); ++k)
    cand.insert(midpoint(node_values[k], node_values[k + 1]));

  const std::vector<Rat> pts(cand.begin(), cand.end());
  auto probe = [&](const Interval& test) -> std::optional<PLVerdict> {
    const RatSet pre = pl_preimage(rho, test);
    if (!is_open(pre))
      return PLVerdict{PLClass::refuted, test, pre,
                       "preimage of a semi-open interval is not open"};
    return std::nullopt;
  };
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = a + 1; b < pts.size(); ++b)
      if (auto v = probe(Interval::left_closed(pts[a], pts[b]))) return *v;
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = a + 1; b < pts.size(); ++b)
      if (auto v = probe(Interval::right_closed(pts[a], pts[b]))) return *v;
  return {PLClass::holds, std::nullopt, std::nullopt,
          "no refutation in the generated probe family (best effort, not a proof)"};
}

Mask semi_open_core(const FiniteSpace& s, int p) {
  s.check_point(p);
  Mask core = s.full_mask();
  for (Mask b : s.semi_open_family())
    if (b >> p & 1) core &= b;
  return core;
}

ConnectivityResult path_connectivity(const FiniteSpace& s, int x, int y, int i) {
  s.check_point(x);
  s.check_point(y);
  if (i < 1 || i > 3) throw input_error("so-i index must be 1, 2 or 3");

  if (i != 3) return {true, StepPath::two_step(s, x, y)};

  const int n = s.point_count();
  std::vector<Mask> core(n);
  for (int p = 0; p < n; ++p) core[p] = semi_open_core(s, p);

  // edge {u,v} iff some w has both in its core; remember the least such w
  auto edge_witness = [&](int u, int v) -> std::optional<int> {
    for (int w = 0; w < n; ++w)
      if ((core[w] >> u & 1) && (core[w] >> v & 1)) return w;
    return std::nullopt;
  };

  std::vector<int> parent(n, -1), via(n, -1);
  std::deque<int> queue{x};
  std::vector<bool> seen(n, false);
  seen[x] = true;
  while (!queue.empty() && !seen[y]) {
    const int u = queue.front();
    queue.pop_front();
    for (int v = 0; v < n; ++v) {
      if (seen[v]) continue;
      if (auto w = edge_witness(u, v)) {
        seen[v] = true;
        parent[v] = u;
        via[v] = *w;
        queue.push_back(v);
      }
    }
  }
  if (!seen[y]) return {false, std::nullopt};

  std::vector<int> walk{y};
  std::vector<int> witnesses;
  for (int v = y; v != x; v = parent[v]) {
    witnesses.push_back(via[v]);
    walk.push_back(parent[v]);
  }
  std::reverse(walk.begin(), walk.end());
  std::reverse(witnesses.begin(), witnesses.end());

  if (walk.size() == 1) return {true, StepPath::constant(s, x)};

  // thread the walk through degenerate pieces at the edge witnesses
  const int k = static_cast<int>(witnesses.size());
  std::vector<Piece> pieces;
  for (int j = 0; j <= k; ++j) {
    const Rat lo(j, k + 1);
    const Rat hi(j + 1, k + 1);
    pieces.push_back(Piece{Interval::open(lo, hi), walk[j]});
    if (j < k) pieces.push_back(Piece{Interval::point(hi), witnesses[j]});
  }
  pieces.front().iv.lo_closed = true;
  pieces.back().iv.hi_closed = true;
  return {true, StepPath(s, std::move(pieces))};
}

}  // namespace semitop
