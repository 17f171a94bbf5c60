#include "semitop/slice_family.hpp"

#include "semitop/error.hpp"

#include <algorithm>
#include <set>

namespace semitop {

namespace {

// piece j of a band at parameter t, given evaluated boundary positions
struct PieceWindow {
  Rat lo, hi;
  bool lo_closed = true, hi_closed = true;
};

PieceWindow window(const SliceBand& band, const std::vector<Rat>& pos, std::size_t j) {
  PieceWindow w;
  w.lo = j == 0 ? Rat(0) : pos[j - 1];
  w.hi = j == band.boundaries.size() ? Rat(1) : pos[j];
  w.lo_closed = j == 0 || !band.boundaries[j - 1].owner_left;
  w.hi_closed = j == band.boundaries.size() || band.boundaries[j].owner_left;
  return w;
}

bool claims(const PieceWindow& w, const Rat& s) {
  if (s < w.lo || s > w.hi) return false;
  if (s == w.lo && !w.lo_closed) return false;
  if (s == w.hi && !w.hi_closed) return false;
  return w.lo <= w.hi;
}

std::vector<Rat> boundary_positions(const SliceBand& band, const Rat& t) {
  std::vector<Rat> pos;
  pos.reserve(band.boundaries.size());
  for (const auto& b : band.boundaries) pos.push_back(b.position(t));
  return pos;
}

int eval_in_band(const SliceBand& band, const Rat& s, const Rat& t) {
  const auto pos = boundary_positions(band, t);
  for (std::size_t j = 0; j < band.values.size(); ++j)
    if (claims(window(band, pos, j), s)) return band.values[j];
  throw input_error("slice at t=" + format_rat(t) + " leaves s=" + format_rat(s) +
                    " unassigned");
}

PLMap constant_position(const Rat& value) { return PLMap({{0, value}, {1, value}}); }

// constant-in-t band reproducing one concrete slice
SliceBand band_from_slice(Interval t_range, const StepPath& slice) {
  SliceBand band;
  band.t_range = std::move(t_range);
  for (std::size_t j = 0; j < slice.pieces().size(); ++j) {
    band.values.push_back(slice.pieces()[j].value);
    if (j + 1 < slice.pieces().size())
      band.boundaries.push_back(
          SliceBoundary{constant_position(slice.pieces()[j].iv.hi),
                        slice.pieces()[j].iv.hi_closed});
  }
  return band;
}

// checkpoints: band endpoints plus every PL kink inside; boundary motion is
// linear in between, so ordering there implies ordering throughout and the
// set of collided pairs is constant on each open gap
std::vector<Rat> band_checkpoints(const SliceBand& band) {
  std::set<Rat> pts{band.t_range.lo, band.t_range.hi};
  for (const auto& b : band.boundaries)
    for (const auto& [t, v] : b.position.nodes())
      if (t >= band.t_range.lo && t <= band.t_range.hi) pts.insert(t);
  return {pts.begin(), pts.end()};
}

}  // namespace

SliceFamily::SliceFamily(FiniteSpace space, std::vector<SliceBand> bands)
    : space_(std::move(space)), bands_(std::move(bands)) {
  if (bands_.empty()) throw input_error("slice family needs at least one band");
  if (bands_.front().t_range.lo != 0 || !bands_.front().t_range.lo_closed ||
      bands_.back().t_range.hi != 1 || !bands_.back().t_range.hi_closed)
    throw input_error("band t-ranges must span [0,1]");
  for (std::size_t k = 0; k + 1 < bands_.size(); ++k) {
    const Interval& a = bands_[k].t_range;
    const Interval& b = bands_[k + 1].t_range;
    if (a.hi != b.lo || a.hi_closed == b.lo_closed)
      throw input_error("band t-ranges must partition [0,1]");
  }
  for (const auto& band : bands_) {
    if (band.values.size() != band.boundaries.size() + 1)
      throw input_error("band needs exactly one more value than boundaries");
    for (int v : band.values) space_.check_point(v);
    for (const Rat& t : band_checkpoints(band)) {
      const auto pos = boundary_positions(band, t);
      Rat prev = 0;
      for (const Rat& p : pos) {
        if (p < prev || p > 1)
          throw input_error("breakpoint functions crossing out of order at t=" +
                            format_rat(t));
        prev = p;
      }
    }
  }
}

const SliceBand& SliceFamily::band_at(const Rat& t) const {
  for (const auto& band : bands_)
    if (band.t_range.contains(t)) return band;
  throw input_error("parameter t outside [0,1]");
}

int SliceFamily::eval(const Rat& s, const Rat& t) const {
  return eval_in_band(band_at(t), s, t);
}

StepPath slice_at(const SliceFamily& h, const Rat& t) {
  const SliceBand& band = h.band_at(t);
  std::vector<Rat> cuts{Rat(0), Rat(1)};
  for (const Rat& p : boundary_positions(band, t)) cuts.push_back(p);
  return assemble_step_path(h.space(), std::move(cuts),
                            [&](const Rat& s) { return eval_in_band(band, s, t); });
}

SliceReport verify_slices(const SliceFamily& h, int i) {
  std::vector<Rat> to_check;
  for (const auto& band : h.bands()) {
    const auto pts = band_checkpoints(band);
    for (std::size_t k = 0; k < pts.size(); ++k) {
      if (band.t_range.contains(pts[k])) to_check.push_back(pts[k]);
      if (k + 1 < pts.size()) to_check.push_back(midpoint(pts[k], pts[k + 1]));
    }
  }
  std::sort(to_check.begin(), to_check.end());
  to_check.erase(std::unique(to_check.begin(), to_check.end()), to_check.end());

  std::optional<SliceViolation> violation;
  for (const Rat& t : to_check) {
    const auto verdict = is_so_path(slice_at(h, t), i);
    if (!verdict.ok) {
      violation = SliceViolation{t, verdict.violation->target_set, verdict.violation->preimage};
      break;
    }
  }
  return SliceReport{!violation.has_value(), slice_at(h, Rat(0)), slice_at(h, Rat(1)),
                     std::move(to_check), std::move(violation)};
}

std::optional<JointCandidate> falsify_joint(const SliceFamily& h, int i, int grid) {
  if (grid < 2) throw input_error("falsification grid must be at least 2");
  if (i < 1 || i > 3) throw input_error("so-i index must be 1, 2 or 3");
  const auto targets = (i == 1) ? h.space().opens() : h.space().semi_open_family();

  const int n = grid + 1;
  std::vector<int> values(static_cast<std::size_t>(n) * n);
  for (int q = 0; q < n; ++q)
    for (int p = 0; p < n; ++p)
      values[static_cast<std::size_t>(q) * n + p] = h.eval(Rat(p, grid), Rat(q, grid));

  std::vector<char> member(values.size()), inner(values.size());
  for (Mask b : targets) {
    for (std::size_t k = 0; k < values.size(); ++k) member[k] = (b >> values[k]) & 1;
    auto at = [&](int p, int q) { return member[static_cast<std::size_t>(q) * n + p]; };
    for (int q = 0; q < n; ++q)
      for (int p = 0; p < n; ++p) {
        char all = at(p, q);
        for (int dq = -1; dq <= 1 && all; ++dq)
          for (int dp = -1; dp <= 1 && all; ++dp) {
            const int pp = p + dp, qq = q + dq;
            if (pp < 0 || qq < 0 || pp >= n || qq >= n) continue;
            all &= at(pp, qq);
          }
        inner[static_cast<std::size_t>(q) * n + p] = all;
      }
    auto in_closure_of_inner = [&](int p, int q) {
      for (int dq = -1; dq <= 1; ++dq)
        for (int dp = -1; dp <= 1; ++dp) {
          const int pp = p + dp, qq = q + dq;
          if (pp < 0 || qq < 0 || pp >= n || qq >= n) continue;
          if (inner[static_cast<std::size_t>(qq) * n + pp]) return true;
        }
      return false;
    };
    for (int q = 0; q < n; ++q)
      for (int p = 0; p < n; ++p)
        if (at(p, q) && !in_closure_of_inner(p, q))
          return JointCandidate{b, Rat(p, grid), Rat(q, grid)};
  }
  return std::nullopt;
}

SliceFamily constant_family(const StepPath& path) {
  return SliceFamily(path.space(), {band_from_slice(Interval::closed(0, 1), path)});
}

namespace {

// squeeze a boundary position function into the left or right half of [0,1]
PLMap squeeze(const PLMap& pos, bool into_left) {
  std::vector<std::pair<Rat, Rat>> nodes;
  if (into_left) {
    for (const auto& [t, v] : pos.nodes()) nodes.emplace_back(t / 2, v);
    nodes.emplace_back(1, pos.nodes().back().second);
  } else {
    nodes.emplace_back(0, pos.nodes().front().second);
    for (const auto& [t, v] : pos.nodes()) nodes.emplace_back((t + 1) / 2, v);
  }
  return PLMap(std::move(nodes));
}

SliceBand squeeze_band(const SliceBand& band, bool into_left) {
  SliceBand out;
  out.t_range = into_left ? affine_image(band.t_range, Rat(1, 2), Rat(0))
                          : affine_image(band.t_range, Rat(1, 2), Rat(1, 2));
  out.values = band.values;
  for (const auto& b : band.boundaries)
    out.boundaries.push_back(SliceBoundary{squeeze(b.position, into_left), b.owner_left});
  return out;
}

}  // namespace

SliceFamily paste_families(const SliceFamily& f, const SliceFamily& g) {
  if (!(f.space() == g.space()))
    throw input_error("pasted families must live in the same space");
  if (!(slice_at(f, Rat(1)) == slice_at(g, Rat(0))))
    throw input_error("pasting needs the first family to end where the second starts");
  std::vector<SliceBand> bands;
  for (const auto& band : f.bands()) bands.push_back(squeeze_band(band, true));
  bool first = true;
  for (const auto& band : g.bands()) {
    SliceBand sq = squeeze_band(band, false);
    if (first) {
      first = false;
      if (sq.t_range.is_point()) continue;  // {1/2} already owned by f's side
      sq.t_range.lo_closed = false;
    }
    bands.push_back(std::move(sq));
  }
  return SliceFamily(f.space(), std::move(bands));
}

namespace {

// H(s,t): out along the path for value-time t, hold at path(t), walk back
int cancellation_value(const StepPath& path, const Rat& s, const Rat& t) {
  if (s < t / 2) return path.at(2 * s);
  if (s <= 1 - t / 2) return path.at(t);
  return path.at(2 - 2 * s);
}

StepPath cancellation_slice(const StepPath& path, const Rat& t) {
  std::vector<Rat> cuts{Rat(0), Rat(1), t / 2, 1 - t / 2};
  for (const auto& p : path.pieces()) {
    if (p.iv.hi / 2 <= t / 2) cuts.push_back(p.iv.hi / 2);
    if (1 - p.iv.hi / 2 >= 1 - t / 2) cuts.push_back(1 - p.iv.hi / 2);
  }
  return assemble_step_path(path.space(), std::move(cuts),
                            [&](const Rat& s) { return cancellation_value(path, s, t); });
}

}  // namespace

SliceFamily cancellation_family(const StepPath& path) {
  std::set<Rat> events{Rat(0), Rat(1)};
  for (const auto& p : path.pieces())
    if (p.iv.hi != 1) events.insert(p.iv.hi);
  const std::vector<Rat> ts(events.begin(), events.end());

  std::vector<SliceBand> bands;
  for (std::size_t k = 0; k < ts.size(); ++k) {
    bands.push_back(band_from_slice(Interval::point(ts[k]), cancellation_slice(path, ts[k])));
    if (k + 1 == ts.size()) continue;

    // open band (u, v): the slice layout is the scaled prefix of the path,
    // the hold piece at the covering value, and the reflected prefix
    SliceBand band;
    band.t_range = Interval::open(ts[k], ts[k + 1]);
    const Rat mid = midpoint(ts[k], ts[k + 1]);
    std::size_t covering = 0;
    while (!path.pieces()[covering].iv.contains(mid)) ++covering;

    for (std::size_t j = 0; j <= covering; ++j) {
      band.values.push_back(path.pieces()[j].value);
      if (j < covering)
        band.boundaries.push_back(
            SliceBoundary{constant_position(path.pieces()[j].iv.hi / 2),
                          path.pieces()[j].iv.hi_closed});
    }
    band.boundaries.push_back(SliceBoundary{PLMap({{0, 0}, {1, Rat(1, 2)}}), true});
    band.values.push_back(path.pieces()[covering].value);  // the hold piece
    band.boundaries.push_back(SliceBoundary{PLMap({{0, 1}, {1, Rat(1, 2)}}), true});
    for (std::size_t j = covering + 1; j-- > 0;) {
      band.values.push_back(path.pieces()[j].value);
      if (j > 0)
        band.boundaries.push_back(
            SliceBoundary{constant_position(1 - path.pieces()[j].iv.lo / 2),
                          !path.pieces()[j - 1].iv.hi_closed});
    }
    bands.push_back(std::move(band));
  }

  // stitch band flags into a partition: degenerate event bands own their t
  for (std::size_t k = 0; k < bands.size(); ++k) {
    if (!bands[k].t_range.is_point()) continue;
    if (k > 0) bands[k - 1].t_range.hi_closed = false;
    if (k + 1 < bands.size()) bands[k + 1].t_range.lo_closed = false;
  }
  return SliceFamily(path.space(), std::move(bands));
}

}  // namespace semitop
