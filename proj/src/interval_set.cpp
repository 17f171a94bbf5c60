#include "semitop/interval_set.hpp"

#include "semitop/error.hpp"

#include <algorithm>
#include <sstream>

namespace semitop {

namespace {

bool valid(const Interval& iv) {
  if (iv.lo > iv.hi) return false;
  if (iv.lo == iv.hi && !(iv.lo_closed && iv.hi_closed)) return false;
  return true;
}

void require_in_unit(const Interval& iv) {
  if (!in_unit_interval(iv.lo) || !in_unit_interval(iv.hi))
    throw input_error("interval endpoint outside [0,1]: " + format_interval(iv));
}

// Sort key: components ordered by lo (closed endpoints first), wider first
// on ties so the sweep can absorb contained intervals.
bool before(const Interval& a, const Interval& b) {
  if (a.lo != b.lo) return a.lo < b.lo;
  if (a.lo_closed != b.lo_closed) return a.lo_closed;
  if (a.hi != b.hi) return a.hi > b.hi;
  return a.hi_closed && !b.hi_closed;
}

}  // namespace

Interval Interval::point(Rat p) { return {p, p, true, true}; }
Interval Interval::closed(Rat lo, Rat hi) { return {std::move(lo), std::move(hi), true, true}; }
Interval Interval::open(Rat lo, Rat hi) { return {std::move(lo), std::move(hi), false, false}; }
Interval Interval::left_closed(Rat lo, Rat hi) { return {std::move(lo), std::move(hi), true, false}; }
Interval Interval::right_closed(Rat lo, Rat hi) { return {std::move(lo), std::move(hi), false, true}; }

bool Interval::contains(const Rat& t) const {
  if (t < lo || t > hi) return false;
  if (t == lo && !lo_closed) return false;
  if (t == hi && !hi_closed) return false;
  return true;
}

std::optional<Interval> intersect(const Interval& a, const Interval& b) {
  Interval r;
  if (a.lo > b.lo) {
    r.lo = a.lo;
    r.lo_closed = a.lo_closed;
  } else if (b.lo > a.lo) {
    r.lo = b.lo;
    r.lo_closed = b.lo_closed;
  } else {
    r.lo = a.lo;
    r.lo_closed = a.lo_closed && b.lo_closed;
  }
  if (a.hi < b.hi) {
    r.hi = a.hi;
    r.hi_closed = a.hi_closed;
  } else if (b.hi < a.hi) {
    r.hi = b.hi;
    r.hi_closed = b.hi_closed;
  } else {
    r.hi = a.hi;
    r.hi_closed = a.hi_closed && b.hi_closed;
  }
  if (!valid(r)) return std::nullopt;
  return r;
}

Interval affine_image(const Interval& iv, const Rat& mul, const Rat& add) {
  if (mul == 0) throw input_error("affine_image requires nonzero scale");
  if (mul > 0) return {iv.lo * mul + add, iv.hi * mul + add, iv.lo_closed, iv.hi_closed};
  return {iv.hi * mul + add, iv.lo * mul + add, iv.hi_closed, iv.lo_closed};
}

RatSet::RatSet(Interval iv) : components_() {
  *this = from_intervals({std::move(iv)});
}

RatSet RatSet::from_intervals(std::vector<Interval> parts) {
  std::erase_if(parts, [](const Interval& iv) { return !valid(iv); });
  for (const auto& iv : parts) require_in_unit(iv);
  std::sort(parts.begin(), parts.end(), before);

  RatSet out;
  for (auto& next : parts) {
    if (out.components_.empty()) {
      out.components_.push_back(std::move(next));
      continue;
    }
    Interval& cur = out.components_.back();
    const bool overlaps = next.lo < cur.hi;
    const bool touches = next.lo == cur.hi && (cur.hi_closed || next.lo_closed);
    if (overlaps || touches) {
      if (next.hi > cur.hi) {
        cur.hi = next.hi;
        cur.hi_closed = next.hi_closed;
      } else if (next.hi == cur.hi) {
        cur.hi_closed = cur.hi_closed || next.hi_closed;
      }
    } else {
      out.components_.push_back(std::move(next));
    }
  }
  return out;
}

RatSet RatSet::unit() { return RatSet(Interval::closed(0, 1)); }

bool RatSet::contains(const Rat& t) const {
  // components are sorted; linear scan is fine at our sizes
  for (const auto& c : components_) {
    if (c.lo > t) return false;
    if (c.contains(t)) return true;
  }
  return false;
}

RatSet set_union(const RatSet& a, const RatSet& b) {
  std::vector<Interval> parts = a.components();
  parts.insert(parts.end(), b.components().begin(), b.components().end());
  return RatSet::from_intervals(std::move(parts));
}

RatSet set_intersect(const RatSet& a, const RatSet& b) {
  std::vector<Interval> parts;
  for (const auto& x : a.components())
    for (const auto& y : b.components())
      if (auto z = intersect(x, y)) parts.push_back(*z);
  return RatSet::from_intervals(std::move(parts));
}

RatSet set_complement(const RatSet& a) {
  std::vector<Interval> parts;
  Rat lo = 0;
  bool lo_closed = true;
  for (const auto& c : a.components()) {
    parts.push_back({lo, c.lo, lo_closed, !c.lo_closed});
    lo = c.hi;
    lo_closed = !c.hi_closed;
  }
  parts.push_back({lo, 1, lo_closed, true});
  return RatSet::from_intervals(std::move(parts));
}

bool is_subset(const RatSet& a, const RatSet& b) { return set_intersect(a, b) == a; }

RatSet interior(const RatSet& a) {
  // Canonical components are separated, so the interior is componentwise;
  // in the subspace [0,1] the endpoints 0 and 1 stay closed.
  std::vector<Interval> parts;
  for (const auto& c : a.components()) {
    if (c.is_point()) continue;
    Interval iv = c;
    iv.lo_closed = c.lo_closed && c.lo == 0;
    iv.hi_closed = c.hi_closed && c.hi == 1;
    parts.push_back(std::move(iv));
  }
  return RatSet::from_intervals(std::move(parts));
}

RatSet topo_closure(const RatSet& a) {
  std::vector<Interval> parts;
  for (const auto& c : a.components()) parts.push_back(Interval::closed(c.lo, c.hi));
  return RatSet::from_intervals(std::move(parts));
}

bool is_open(const RatSet& a) { return interior(a) == a; }

bool is_semi_open(const RatSet& a) { return is_subset(a, topo_closure(interior(a))); }

bool is_semi_closed(const RatSet& a) { return is_subset(interior(topo_closure(a)), a); }

std::string format_interval(const Interval& iv) {
  if (iv.is_point()) return "{" + format_rat(iv.lo) + "}";
  std::ostringstream out;
  out << (iv.lo_closed ? '[' : '(') << format_rat(iv.lo) << ',' << format_rat(iv.hi)
      << (iv.hi_closed ? ']' : ')');
  return out.str();
}

std::string format_ratset(const RatSet& a) {
  if (a.is_empty()) return "{}";
  std::string out;
  for (std::size_t i = 0; i < a.components().size(); ++i) {
    if (i) out += " u ";
    out += format_interval(a.components()[i]);
  }
  return out;
}

}  // namespace semitop
