#include "semitop/finite_space.hpp"

#include "semitop/error.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <set>

namespace semitop {

FiniteSpace::FiniteSpace(std::vector<std::string> point_names, std::vector<Mask> opens)
    : names_(std::move(point_names)), opens_(std::move(opens)) {
  const int n = static_cast<int>(names_.size());
  if (n < 1) throw input_error("space needs at least one point");
  if (n > 63) throw input_error("point count exceeds the supported maximum of 63");
  full_ = (n == 63) ? ~Mask{0} >> 1 : (Mask{1} << n) - 1;

  std::set<std::string> seen;
  for (const auto& name : names_) {
    if (name.empty()) throw input_error("empty point name");
    if (!seen.insert(name).second) throw input_error("duplicate point name '" + name + "'");
  }

  std::sort(opens_.begin(), opens_.end());
  opens_.erase(std::unique(opens_.begin(), opens_.end()), opens_.end());
  for (Mask o : opens_)
    if (o & ~full_) throw input_error("open set mentions a point outside the ground set");
  if (opens_.empty() || opens_.front() != 0)
    throw input_error("open family must contain the empty set");
  if (opens_.back() != full_) throw input_error("open family must contain the full set");

  for (std::size_t i = 0; i < opens_.size(); ++i) {
    for (std::size_t j = i + 1; j < opens_.size(); ++j) {
      const Mask u = opens_[i] | opens_[j];
      const Mask x = opens_[i] & opens_[j];
      if (!std::binary_search(opens_.begin(), opens_.end(), u))
        throw input_error("open family not closed under union: " + set_to_string(opens_[i]) +
                          " | " + set_to_string(opens_[j]) + " = " + set_to_string(u) +
                          " is missing");
      if (!std::binary_search(opens_.begin(), opens_.end(), x))
        throw input_error("open family not closed under intersection: " +
                          set_to_string(opens_[i]) + " & " + set_to_string(opens_[j]) + " = " +
                          set_to_string(x) + " is missing");
    }
  }
}

void FiniteSpace::check_subset(Mask a) const {
  if (a & ~full_) throw input_error("subset mentions a point outside the ground set");
}

void FiniteSpace::check_point(int p) const {
  if (p < 0 || p >= point_count()) throw input_error("point index out of range");
}

bool FiniteSpace::is_open(Mask a) const {
  check_subset(a);
  return std::binary_search(opens_.begin(), opens_.end(), a);
}

bool FiniteSpace::is_closed(Mask a) const {
  check_subset(a);
  return std::binary_search(opens_.begin(), opens_.end(), full_ & ~a);
}

Mask FiniteSpace::closure(Mask a) const {
  check_subset(a);
  // complement of the union of opens missing a
  Mask away = 0;
  for (Mask o : opens_)
    if ((o & a) == 0) away |= o;
  return full_ & ~away;
}

Mask FiniteSpace::interior(Mask a) const {
  check_subset(a);
  Mask in = 0;
  for (Mask o : opens_)
    if ((o & ~a) == 0) in |= o;
  return in;
}

bool FiniteSpace::is_semi_open(Mask a) const {
  check_subset(a);
  return (a & ~closure(interior(a))) == 0;
}

std::optional<Mask> FiniteSpace::semi_open_witness(Mask a) const {
  if (!is_semi_open(a)) return std::nullopt;
  return interior(a);
}

bool FiniteSpace::is_semi_closed(Mask c) const {
  check_subset(c);
  return (interior(closure(c)) & ~c) == 0;
}

std::optional<Mask> FiniteSpace::semi_closed_witness(Mask c) const {
  if (!is_semi_closed(c)) return std::nullopt;
  return closure(c);
}

std::vector<Mask> FiniteSpace::semi_open_family() const {
  std::vector<Mask> out;
  for (Mask a = 0;; ++a) {
    if (is_semi_open(a)) out.push_back(a);
    if (a == full_) break;
  }
  return out;
}

std::vector<Mask> FiniteSpace::semi_closed_family() const {
  std::vector<Mask> out;
  for (Mask a = 0;; ++a) {
    if (is_semi_closed(a)) out.push_back(a);
    if (a == full_) break;
  }
  return out;
}

Mask FiniteSpace::semi_interior(Mask a) const {
  check_subset(a);
  // union of all semi-open subsets, by submask enumeration
  Mask acc = 0;
  Mask s = a;
  while (true) {
    if ((s & ~acc) && is_semi_open(s)) acc |= s;
    if (s == 0) break;
    s = (s - 1) & a;
  }
  return acc;
}

Mask FiniteSpace::semi_closure(Mask a) const {
  check_subset(a);
  Mask acc = full_;
  const Mask rest = full_ & ~a;
  Mask s = rest;
  while (true) {
    const Mask candidate = a | s;
    if ((acc & ~candidate) && is_semi_closed(candidate)) acc &= candidate;
    if (s == 0) break;
    s = (s - 1) & rest;
  }
  return acc;
}

std::optional<int> FiniteSpace::find_point(const std::string& name) const {
  for (int i = 0; i < point_count(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::string FiniteSpace::set_to_string(Mask a) const {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < point_count(); ++i) {
    if (!(a >> i & 1)) continue;
    if (!first) out += ",";
    out += names_[i];
    first = false;
  }
  return out + "}";
}

std::vector<std::string> default_point_names(int n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (int i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  return names;
}

std::vector<std::vector<Mask>> enumerate_open_families(int n) {
  if (n < 1 || n > 5) throw input_error("topology enumeration supports 1..5 points");

  // Finite topologies correspond bijectively to preorders: the minimal open
  // neighbourhood map x -> U(x) is reflexive and transitive, and the opens
  // are exactly the sets closed under it. Enumerate reflexive relations,
  // keep the transitive ones, and read each topology off as the family of
  // U-closed sets.
  const int offdiag = n * (n - 1);
  std::vector<std::pair<int, int>> cells;
  cells.reserve(offdiag);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) cells.emplace_back(i, j);

  std::vector<std::vector<Mask>> families;
  std::array<Mask, 5> nbhd{};
  const Mask full = (Mask{1} << n) - 1;
  for (std::uint64_t rel = 0; rel < (std::uint64_t{1} << offdiag); ++rel) {
    for (int i = 0; i < n; ++i) nbhd[i] = Mask{1} << i;
    for (int b = 0; b < offdiag; ++b)
      if (rel >> b & 1) nbhd[cells[b].second] |= Mask{1} << cells[b].first;
    bool transitive = true;
    for (int j = 0; j < n && transitive; ++j) {
      Mask grow = 0;
      Mask m = nbhd[j];
      while (m) {
        const int i = std::countr_zero(m);
        m &= m - 1;
        grow |= nbhd[i];
      }
      transitive = grow == nbhd[j];
    }
    if (!transitive) continue;

    std::vector<Mask> opens;
    for (Mask o = 0; o <= full; ++o) {
      bool closed_under_nbhd = true;
      Mask m = o;
      while (m && closed_under_nbhd) {
        const int j = std::countr_zero(m);
        m &= m - 1;
        closed_under_nbhd = (nbhd[j] & ~o) == 0;
      }
      if (closed_under_nbhd) opens.push_back(o);
    }
    families.push_back(std::move(opens));
  }

  std::sort(families.begin(), families.end());
  return families;
}

std::vector<FiniteSpace> enumerate_topologies(int n) {
  std::vector<FiniteSpace> out;
  const auto names = default_point_names(n);
  for (auto& family : enumerate_open_families(n)) out.emplace_back(names, std::move(family));
  return out;
}

}  // namespace semitop
