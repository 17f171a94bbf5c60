#include "semitop/search.hpp"

#include "semitop/error.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <functional>
#include <mutex>
#include <optional>
#include <thread>

namespace semitop {

std::string map_class_name(MapClass c) {
  switch (c) {
    case MapClass::continuous: return "continuous";
    case MapClass::so1: return "so1";
    case MapClass::so2: return "so2";
    case MapClass::so3: return "so3";
    case MapClass::constant: return "constant";
  }
  return "?";
}

PropertyQuery parse_query(const std::string& text) {
  std::string t = text;
  if (!t.empty() && t.back() == '?') t.pop_back();
  auto parse_class = [](const std::string& s) -> std::optional<MapClass> {
    for (MapClass c : {MapClass::continuous, MapClass::so1, MapClass::so2, MapClass::so3,
                       MapClass::constant})
      if (map_class_name(c) == s) return c;
    return std::nullopt;
  };
  if (auto pos = t.find("-compose-closed"); pos != std::string::npos &&
                                            pos + 15 == t.size()) {
    if (auto c = parse_class(t.substr(0, pos))) return ComposeClosedQuery{*c};
  }
  if (auto pos = t.find("-implies-"); pos != std::string::npos) {
    auto from = parse_class(t.substr(0, pos));
    auto to = parse_class(t.substr(pos + 9));
    if (from && to) return ImpliesQuery{*from, *to};
  }
  if (t.rfind("identity-", 0) == 0) {
    if (auto c = parse_class(t.substr(9))) return IdentityClassQuery{*c};
  }
  throw input_error("unsupported query '" + text + "'");
}

std::string format_query(const PropertyQuery& q) {
  if (const auto* cc = std::get_if<ComposeClosedQuery>(&q))
    return map_class_name(cc->cls) + "-compose-closed";
  if (const auto* im = std::get_if<ImpliesQuery>(&q))
    return map_class_name(im->from) + "-implies-" + map_class_name(im->to);
  return "identity-" + map_class_name(std::get<IdentityClassQuery>(q).cls);
}

namespace {

// Per-space tables sized for the search bound (n <= 4): membership words
// indexed by subset mask.
struct SpaceCtx {
  int n = 0;
  std::uint64_t open_word = 0;
  std::uint64_t so_word = 0;
  std::vector<Mask> family;  // the open family itself
};

SpaceCtx make_ctx(const std::vector<Mask>& opens, int n) {
  SpaceCtx ctx;
  ctx.n = n;
  ctx.family = opens;
  const Mask full = (Mask{1} << n) - 1;
  for (Mask o : opens) ctx.open_word |= std::uint64_t{1} << o;

  auto interior_of = [&](Mask a) {
    Mask in = 0;
    for (Mask o : opens)
      if ((o & ~a) == 0) in |= o;
    return in;
  };
  auto closure_of = [&](Mask a) {
    Mask away = 0;
    for (Mask o : opens)
      if ((o & a) == 0) away |= o;
    return full & ~away;
  };
  for (Mask a = 0; a <= full; ++a)
    if ((a & ~closure_of(interior_of(a))) == 0) ctx.so_word |= std::uint64_t{1} << a;
  return ctx;
}

bool member(std::uint64_t word, Mask m) { return word >> m & 1; }

// First violating (target set, preimage) for a membership condition, or ok.
struct FastVerdict {
  bool ok = true;
  Mask target = 0;
  Mask pre = 0;
};

// images given as per-codomain-point preimage masks
using PrePoint = std::array<Mask, 5>;

FastVerdict check_condition(const SpaceCtx& cod, const PrePoint& pre_point,
                            std::uint64_t targets_word, std::uint64_t want_word) {
  const Mask cod_full = (Mask{1} << cod.n) - 1;
  for (Mask b = 0; b <= cod_full; ++b) {
    if (!member(targets_word, b)) continue;
    Mask pre = 0;
    Mask m = b;
    while (m) {
      const int q = std::countr_zero(m);
      m &= m - 1;
      pre |= pre_point[q];
    }
    if (!member(want_word, pre)) return {false, b, pre};
  }
  return {};
}

FastVerdict in_class(MapClass cls, const SpaceCtx& dom, const SpaceCtx& cod,
                     const std::vector<int>& images, const PrePoint& pre_point) {
  switch (cls) {
    case MapClass::continuous:
      return check_condition(cod, pre_point, cod.open_word, dom.open_word);
    case MapClass::so1:
      return check_condition(cod, pre_point, cod.open_word, dom.so_word);
    case MapClass::so2:
      return check_condition(cod, pre_point, cod.so_word, dom.so_word);
    case MapClass::so3:
      return check_condition(cod, pre_point, cod.so_word, dom.open_word);
    case MapClass::constant: {
      for (int v : images)
        if (v != images[0]) return {false, 0, 0};
      return {};
    }
  }
  return {};
}

PrePoint preimage_points(const std::vector<int>& images) {
  PrePoint pp{};
  for (std::size_t p = 0; p < images.size(); ++p) pp[images[p]] |= Mask{1} << p;
  return pp;
}

bool next_images(std::vector<int>& images, int cod_n) {
  for (int i = static_cast<int>(images.size()) - 1; i >= 0; --i) {
    if (++images[i] < cod_n) return true;
    images[i] = 0;
  }
  return false;
}

struct SpaceEntry {
  int n;
  SpaceCtx ctx;
};

std::vector<SpaceEntry> space_universe(int max_points) {
  std::vector<SpaceEntry> all;
  for (int n = 1; n <= max_points; ++n)
    for (auto& fam : enumerate_open_families(n)) all.push_back({n, make_ctx(fam, n)});
  return all;
}

FiniteSpace to_space(const SpaceEntry& e) {
  return FiniteSpace(default_point_names(e.n), e.ctx.family);
}

// Reduction that keeps the lexicographically least rank across workers.
struct Best {
  std::mutex m;
  std::atomic<std::int64_t> best_outer{-1};  // -1: none found yet
  std::vector<std::uint64_t> rank;
  SearchResult result;

  bool offer(const std::vector<std::uint64_t>& r, SearchResult&& candidate) {
    std::scoped_lock lock(m);
    if (result.counterexample_found && rank <= r) return false;
    rank = r;
    result = std::move(candidate);
    best_outer.store(static_cast<std::int64_t>(r[0]), std::memory_order_relaxed);
    return true;
  }
};

void run_workers(std::size_t outer_size, int jobs,
                 const std::function<void(std::size_t)>& body) {
  jobs = std::max(1, jobs);
  if (jobs == 1) {
    for (std::size_t i = 0; i < outer_size; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < jobs; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < outer_size; i = next.fetch_add(1)) body(i);
    });
  for (auto& t : pool) t.join();
}

}  // namespace

SearchResult search_counterexample(const PropertyQuery& q, int max_points, int jobs) {
  if (max_points < 1 || max_points > 4)
    throw input_error("search bound must be between 1 and 4 points");
  const auto spaces = space_universe(max_points);
  std::atomic<std::uint64_t> checked{0};
  Best best;

  auto outer_pruned = [&](std::size_t xi) {
    const std::int64_t seen = best.best_outer.load(std::memory_order_relaxed);
    return seen >= 0 && static_cast<std::int64_t>(xi) > seen;
  };

  if (const auto* idq = std::get_if<IdentityClassQuery>(&q)) {
    for (std::size_t xi = 0; xi < spaces.size(); ++xi) {
      const auto& e = spaces[xi];
      std::vector<int> ids(e.n);
      for (int p = 0; p < e.n; ++p) ids[p] = p;
      ++checked;
      const auto v = in_class(idq->cls, e.ctx, e.ctx, ids, preimage_points(ids));
      if (!v.ok) {
        SearchResult r;
        r.counterexample_found = true;
        r.witness = IdentityWitness{to_space(e), v.target};
        r.candidates_checked = checked.load();
        best.offer({xi}, std::move(r));
        break;
      }
    }
    best.result.candidates_checked = checked.load();
    return best.result;
  }

  if (const auto* imq = std::get_if<ImpliesQuery>(&q)) {
    run_workers(spaces.size(), jobs, [&](std::size_t xi) {
      if (outer_pruned(xi)) return;
      const auto& x = spaces[xi];
      for (std::size_t yi = 0; yi < spaces.size(); ++yi) {
        const auto& y = spaces[yi];
        std::vector<int> images(x.n, 0);
        std::uint64_t fi = 0;
        do {
          ++checked;
          const auto pp = preimage_points(images);
          if (in_class(imq->from, x.ctx, y.ctx, images, pp).ok) {
            const auto v = in_class(imq->to, x.ctx, y.ctx, images, pp);
            if (!v.ok) {
              SearchResult r;
              r.counterexample_found = true;
              r.witness =
                  ImplicationWitness{SpaceMap(to_space(x), to_space(y), images),
                                     MapWitness{v.target, v.pre}};
              best.offer({xi, yi, fi}, std::move(r));
              return;  // later (yi, fi) at this xi cannot beat this rank
            }
          }
          ++fi;
        } while (next_images(images, y.n));
      }
    });
    best.result.candidates_checked = checked.load();
    return best.result;
  }

  const auto& ccq = std::get<ComposeClosedQuery>(q);
  // Precompute the in-class maps for every ordered space pair; the triple
  // scan then only composes.
  std::vector<std::vector<std::vector<int>>> class_maps(spaces.size() * spaces.size());
  for (std::size_t ai = 0; ai < spaces.size(); ++ai)
    for (std::size_t bi = 0; bi < spaces.size(); ++bi) {
      auto& list = class_maps[ai * spaces.size() + bi];
      std::vector<int> images(spaces[ai].n, 0);
      do {
        if (in_class(ccq.cls, spaces[ai].ctx, spaces[bi].ctx, images,
                     preimage_points(images))
                .ok)
          list.push_back(images);
      } while (next_images(images, spaces[bi].n));
    }

  run_workers(spaces.size(), jobs, [&](std::size_t xi) {
    if (outer_pruned(xi)) return;
    const auto& x = spaces[xi];
    for (std::size_t yi = 0; yi < spaces.size(); ++yi) {
      const auto& y = spaces[yi];
      const auto& fs = class_maps[xi * spaces.size() + yi];
      if (fs.empty()) continue;
      for (std::size_t zi = 0; zi < spaces.size(); ++zi) {
        const auto& z = spaces[zi];
        const auto& gs = class_maps[yi * spaces.size() + zi];
        for (std::size_t fi = 0; fi < fs.size(); ++fi)
          for (std::size_t gi = 0; gi < gs.size(); ++gi) {
            ++checked;
            std::vector<int> comp(x.n);
            for (int p = 0; p < x.n; ++p) comp[p] = gs[gi][fs[fi][p]];
            const auto v = in_class(ccq.cls, x.ctx, z.ctx, comp, preimage_points(comp));
            if (!v.ok) {
              SearchResult r;
              r.counterexample_found = true;
              auto xs = to_space(x);
              auto ys = to_space(y);
              auto zs = to_space(z);
              r.witness = ComposeClosedWitness{SpaceMap(xs, ys, fs[fi]),
                                               SpaceMap(ys, zs, gs[gi]),
                                               SpaceMap(xs, zs, comp),
                                               MapWitness{v.target, v.pre}};
              best.offer({xi, yi, zi, fi, gi}, std::move(r));
              return;
            }
          }
      }
    }
  });
  best.result.candidates_checked = checked.load();
  return best.result;
}

}  // namespace semitop
