#include "semitop/space_map.hpp"

#include "semitop/error.hpp"

#include <algorithm>
#include <tuple>

namespace semitop {

SpaceMap::SpaceMap(FiniteSpace domain, FiniteSpace codomain, std::vector<int> images)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != domain_.point_count())
    throw input_error("map must assign exactly one image per domain point");
  for (int v : images_) codomain_.check_point(v);
}

Mask SpaceMap::preimage(Mask b) const {
  codomain_.check_subset(b);
  Mask a = 0;
  for (int p = 0; p < domain_.point_count(); ++p)
    if (b >> images_[p] & 1) a |= Mask{1} << p;
  return a;
}

Mask SpaceMap::image(Mask a) const {
  domain_.check_subset(a);
  Mask b = 0;
  for (int p = 0; p < domain_.point_count(); ++p)
    if (a >> p & 1) b |= Mask{1} << images_[p];
  return b;
}

bool SpaceMap::is_constant() const {
  for (int v : images_)
    if (v != images_[0]) return false;
  return true;
}

bool SpaceMap::is_identity() const {
  if (!(domain_ == codomain_)) return false;
  for (int p = 0; p < domain_.point_count(); ++p)
    if (images_[p] != p) return false;
  return true;
}

SpaceMap identity_map(const FiniteSpace& s) {
  std::vector<int> ids(s.point_count());
  for (int p = 0; p < s.point_count(); ++p) ids[p] = p;
  return SpaceMap(s, s, std::move(ids));
}

SpaceMap constant_map(const FiniteSpace& domain, const FiniteSpace& codomain, int value) {
  codomain.check_point(value);
  return SpaceMap(domain, codomain, std::vector<int>(domain.point_count(), value));
}

SpaceMap compose(const SpaceMap& f, const SpaceMap& g) {
  if (!(f.codomain() == g.domain()))
    throw input_error("compose: codomain of the first map must equal domain of the second");
  std::vector<int> images(f.domain().point_count());
  for (int p = 0; p < f.domain().point_count(); ++p) images[p] = g.apply(f.apply(p));
  return SpaceMap(f.domain(), g.codomain(), std::move(images));
}

namespace {

// Quantify one preimage condition over a family of codomain sets, recording
// the first violation in ascending-mask order.
template <typename Pred>
std::pair<bool, std::optional<MapWitness>> preimage_condition(const SpaceMap& f,
                                                              const std::vector<Mask>& family,
                                                              Pred ok) {
  for (Mask b : family) {
    const Mask pre = f.preimage(b);
    if (!ok(pre)) return {false, MapWitness{b, pre}};
  }
  return {true, std::nullopt};
}

}  // namespace

ContinuityReport classify(const SpaceMap& f) {
  const FiniteSpace& x = f.domain();
  const FiniteSpace& y = f.codomain();
  const auto semi_opens = y.semi_open_family();

  ContinuityReport r;
  std::tie(r.continuous, r.continuous_witness) =
      preimage_condition(f, y.opens(), [&](Mask pre) { return x.is_open(pre); });
  std::tie(r.so1, r.so1_witness) =
      preimage_condition(f, y.opens(), [&](Mask pre) { return x.is_semi_open(pre); });
  std::tie(r.so2, r.so2_witness) =
      preimage_condition(f, semi_opens, [&](Mask pre) { return x.is_semi_open(pre); });
  std::tie(r.so3, r.so3_witness) =
      preimage_condition(f, semi_opens, [&](Mask pre) { return x.is_open(pre); });
  return r;
}

ContinuityReport classify_via_closed(const SpaceMap& f) {
  const FiniteSpace& x = f.domain();
  const FiniteSpace& y = f.codomain();

  std::vector<Mask> closeds;
  closeds.reserve(y.opens().size());
  for (Mask o : y.opens()) closeds.push_back(y.full_mask() & ~o);
  std::sort(closeds.begin(), closeds.end());
  const auto semi_closeds = y.semi_closed_family();

  ContinuityReport r;
  std::tie(r.continuous, r.continuous_witness) =
      preimage_condition(f, closeds, [&](Mask pre) { return x.is_closed(pre); });
  std::tie(r.so1, r.so1_witness) =
      preimage_condition(f, closeds, [&](Mask pre) { return x.is_semi_closed(pre); });
  std::tie(r.so2, r.so2_witness) =
      preimage_condition(f, semi_closeds, [&](Mask pre) { return x.is_semi_closed(pre); });
  std::tie(r.so3, r.so3_witness) =
      preimage_condition(f, semi_closeds, [&](Mask pre) { return x.is_closed(pre); });
  return r;
}

PointReport classify_at(const SpaceMap& f, int p) {
  const FiniteSpace& x = f.domain();
  const FiniteSpace& y = f.codomain();
  x.check_point(p);
  const int fp = f.apply(p);
  const auto dom_semi_opens = x.semi_open_family();
  const auto cod_semi_opens = y.semi_open_family();

  // at p: for every target set containing f(p) there must be a neighbourhood
  // of p (semi-open for so-1/so-2, open for so-3) mapping into it
  auto pointwise = [&](const std::vector<Mask>& targets,
                       const std::vector<Mask>& neighbourhoods) {
    std::pair<bool, std::optional<Mask>> verdict{true, std::nullopt};
    for (Mask b : targets) {
      if (!(b >> fp & 1)) continue;
      bool covered = false;
      for (Mask a : neighbourhoods) {
        if (!(a >> p & 1)) continue;
        if ((f.image(a) & ~b) == 0) {
          covered = true;
          break;
        }
      }
      if (!covered) return std::pair<bool, std::optional<Mask>>{false, b};
    }
    return verdict;
  };

  PointReport r;
  std::tie(r.so1, r.so1_violation) = pointwise(y.opens(), dom_semi_opens);
  std::tie(r.so2, r.so2_violation) = pointwise(cod_semi_opens, dom_semi_opens);
  std::tie(r.so3, r.so3_violation) = pointwise(cod_semi_opens, x.opens());
  return r;
}

}  // namespace semitop
