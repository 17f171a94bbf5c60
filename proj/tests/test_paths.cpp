#include "semitop/step_path.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"
#include "semitop/error.hpp"

#include <doctest.h>

#include <random>

using namespace semitop;
using fixtures::e1;
using fixtures::sierpinski;

namespace {
Rat q(int num, int den = 1) { return Rat(num, den); }
}  // namespace

TEST_CASE("step path canonical form and evaluation") {
  auto s2 = sierpinski();
  auto p = StepPath::two_step(s2, 0, 1);
  CHECK(p.pieces().size() == 2);
  CHECK(p.at(0) == 0);
  CHECK(p.at(q(1, 2)) == 1);
  CHECK(p.at(1) == 1);
  CHECK(p.start() == 0);
  CHECK(p.end() == 1);

  // equal-valued neighbours merge
  auto merged = StepPath(s2, {Piece{Interval::left_closed(0, q(1, 2)), 0},
                              Piece{Interval::closed(q(1, 2), 1), 0}});
  CHECK(merged == StepPath::constant(s2, 0));

  CHECK_THROWS_AS(StepPath(s2, {Piece{Interval::left_closed(0, q(1, 2)), 0}}), input_error);
  CHECK_THROWS_AS(StepPath(s2, {Piece{Interval::closed(0, q(1, 2)), 0},
                                Piece{Interval::closed(q(1, 2), 1), 1}}),
                  input_error);  // breakpoint owned twice
}

TEST_CASE("so-i verdicts for simple paths") {
  auto s2 = sierpinski();
  auto p = StepPath::two_step(s2, 0, 1);
  CHECK(is_so_path(p, 1).ok);
  CHECK(is_so_path(p, 2).ok);

  // degenerate piece mapping to a makes the preimage of {a} a point
  auto bad = StepPath(s2, {Piece{Interval::left_closed(0, q(1, 2)), 1},
                           Piece{Interval::point(q(1, 2)), 0},
                           Piece{Interval::right_closed(q(1, 2), 1), 1}});
  auto v = is_so_path(bad, 1);
  CHECK_FALSE(v.ok);
  CHECK(v.violation->target_set == 0b01);
  CHECK(v.violation->preimage == RatSet(Interval::point(q(1, 2))));

  CHECK(is_so_path(StepPath::constant(s2, 0), 3).ok);
  CHECK(is_so_path(StepPath::constant(s2, 1), 3).ok);
}

TEST_CASE("composition scales pieces and joins at the midpoint") {
  auto s = e1();
  auto a = StepPath::two_step(s, 0, 1);
  auto b = StepPath::two_step(s, 1, 2);
  auto ab = compose_paths(a, b);
  REQUIRE(ab.pieces().size() == 3);
  CHECK(ab.pieces()[0].iv == Interval::left_closed(0, q(1, 4)));
  CHECK(ab.pieces()[0].value == 0);
  CHECK(ab.pieces()[1].iv == Interval::left_closed(q(1, 4), q(3, 4)));
  CHECK(ab.pieces()[1].value == 1);
  CHECK(ab.pieces()[2].iv == Interval::closed(q(3, 4), 1));
  CHECK(ab.pieces()[2].value == 2);
  CHECK(ab.at(q(1, 2)) == 1);

  CHECK(compose_paths(StepPath::constant(s, 0), StepPath::constant(s, 0)) ==
        StepPath::constant(s, 0));
  CHECK_THROWS_AS(compose_paths(b, a), input_error);
}

TEST_CASE("inverse reflects pieces and is an involution") {
  auto s2 = sierpinski();
  auto p = StepPath::two_step(s2, 0, 1);
  auto ip = inverse_path(p);
  REQUIRE(ip.pieces().size() == 2);
  CHECK(ip.pieces()[0].iv == Interval::closed(0, q(1, 2)));
  CHECK(ip.pieces()[0].value == 1);
  CHECK(ip.pieces()[1].iv == Interval::right_closed(q(1, 2), 1));
  CHECK(ip.pieces()[1].value == 0);
  CHECK(inverse_path(ip) == p);
  CHECK(ip.start() == p.end());
  CHECK(ip.end() == p.start());
}

TEST_CASE("composition and inverse preserve so-i-pathness") {
  std::mt19937_64 rng(20240821);
  for (int trial = 0; trial < 150; ++trial) {
    auto s = oracle::random_space(rng, 4);
    const int x = static_cast<int>(rng() % s.point_count());
    const int ymid = static_cast<int>(rng() % s.point_count());
    const int z = static_cast<int>(rng() % s.point_count());
    auto a = oracle::random_step_path(rng, s, x, ymid, 3);
    auto b = oracle::random_step_path(rng, s, ymid, z, 3);
    for (int i : {1, 2}) {
      if (is_so_path(a, i).ok && is_so_path(b, i).ok) {
        CHECK(is_so_path(compose_paths(a, b), i).ok);
        CHECK(is_so_path(inverse_path(a), i).ok);
      }
    }
  }
}

TEST_CASE("reparameterization by the identity is exact") {
  std::mt19937_64 rng(20240822);
  for (int trial = 0; trial < 50; ++trial) {
    auto s = oracle::random_space(rng, 4);
    auto a = oracle::random_step_path(rng, s, 0, s.point_count() - 1, 4);
    CHECK(reparameterize(a, pl_identity()) == a);
  }
}

TEST_CASE("reassociation reparameterization equals the other association") {
  std::mt19937_64 rng(20240823);
  for (int trial = 0; trial < 100; ++trial) {
    auto s = oracle::random_space(rng, 4);
    const int n = s.point_count();
    const int p0 = static_cast<int>(rng() % n), p1 = static_cast<int>(rng() % n);
    const int p2 = static_cast<int>(rng() % n), p3 = static_cast<int>(rng() % n);
    auto a = oracle::random_step_path(rng, s, p0, p1, 3);
    auto b = oracle::random_step_path(rng, s, p1, p2, 3);
    auto c = oracle::random_step_path(rng, s, p2, p3, 3);
    auto left = compose_paths(a, compose_paths(b, c));
    auto right = compose_paths(compose_paths(a, b), c);
    CHECK(reparameterize(left, reassociation_reparam()) == right);
  }
}

TEST_CASE("unit reparameterizations equal composition with constants") {
  std::mt19937_64 rng(20240824);
  for (int trial = 0; trial < 100; ++trial) {
    auto s = oracle::random_space(rng, 4);
    const int n = s.point_count();
    auto a = oracle::random_step_path(rng, s, static_cast<int>(rng() % n),
                                      static_cast<int>(rng() % n), 3);
    auto one_x = StepPath::constant(s, a.start());
    auto one_y = StepPath::constant(s, a.end());
    CHECK(reparameterize(a, left_unit_reparam()) == compose_paths(one_x, a));
    CHECK(reparameterize(a, right_unit_reparam()) == compose_paths(a, one_y));
  }
}

TEST_CASE("reparameterize rejects bad maps") {
  auto s2 = sierpinski();
  auto p = StepPath::two_step(s2, 0, 1);
  CHECK_THROWS_AS(reparameterize(p, PLMap({{0, 0}, {q(1, 2), q(3, 4)}, {1, q(1, 2)}})),
                  input_error);
  CHECK_THROWS_AS(reparameterize(p, PLMap({{0, 0}, {1, q(1, 2)}})), input_error);
}

TEST_CASE("canonical signatures ignore positions but mark degeneracy") {
  auto s2 = sierpinski();
  auto p1 = StepPath(s2, {Piece{Interval::left_closed(0, q(1, 2)), 0},
                          Piece{Interval::closed(q(1, 2), 1), 1}});
  auto p2 = StepPath(s2, {Piece{Interval::left_closed(0, q(1, 4)), 0},
                          Piece{Interval::closed(q(1, 4), 1), 1}});
  CHECK(canonical_signature(p1) == canonical_signature(p2));
  CHECK(canonical_signature(StepPath::constant(s2, 0)) ==
        std::vector<SignatureEntry>{{0, false}});

  auto deg = StepPath(s2, {Piece{Interval::left_closed(0, q(1, 2)), 1},
                           Piece{Interval::point(q(1, 2)), 0},
                           Piece{Interval::right_closed(q(1, 2), 1), 1}});
  CHECK(canonical_signature(deg) ==
        std::vector<SignatureEntry>{{1, false}, {0, true}, {1, false}});
}

TEST_CASE("pl continuity classes") {
  CHECK(pl_continuity_class(reassociation_reparam(), 1).status == PLClass::holds);
  CHECK(pl_continuity_class(reassociation_reparam(), 2).status == PLClass::holds);

  auto v = pl_continuity_class(reassociation_reparam(), 3);
  REQUIRE(v.status == PLClass::refuted);
  CHECK(*v.witness == Interval::left_closed(q(1, 4), q(1, 2)));
  CHECK(*v.witness_preimage == RatSet(Interval::left_closed(q(1, 8), q(1, 4))));

  auto vid = pl_continuity_class(pl_identity(), 3);
  REQUIRE(vid.status == PLClass::refuted);
  CHECK(*vid.witness == Interval::left_closed(q(1, 4), q(1, 2)));

  // a non-monotone map only misses the sufficient so-2 criterion
  PLMap vshape({{0, 0}, {q(1, 2), 1}, {1, 0}});
  CHECK(pl_continuity_class(vshape, 2).status == PLClass::condition_unmet);
  CHECK(pl_continuity_class(vshape, 1).status == PLClass::holds);

  // constant maps are so-3
  PLMap flat({{0, q(1, 2)}, {1, q(1, 2)}});
  CHECK(pl_continuity_class(flat, 3).status == PLClass::holds);
}

TEST_CASE("semi-open cores of the four-point example") {
  auto s = e1();
  CHECK(semi_open_core(s, 0) == 0b0001);  // N(a) = {a}
  CHECK(semi_open_core(s, 1) == 0b0011);  // N(b) = {a,b}
  CHECK(semi_open_core(s, 2) == 0b0101);  // N(c) = {a,c}
  CHECK(semi_open_core(s, 3) == 0b1001);  // N(d) = {a,d}
}

TEST_CASE("connectivity for i in {1,2} holds with the canonical witness") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& s : enumerate_topologies(n))
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          for (int i : {1, 2}) {
            auto r = path_connectivity(s, x, y, i);
            REQUIRE(r.connected);
            REQUIRE(r.witness.has_value());
            CHECK(r.witness->start() == x);
            CHECK(r.witness->end() == y);
            CHECK(is_so_path(*r.witness, i).ok);
          }
}

TEST_CASE("so-3 connectivity matches the grid brute force on all 3-point spaces") {
  for (const auto& s : enumerate_topologies(3)) {
    const auto oracle_reach = oracle::grid_so3_reachability(s);
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3; ++y) {
        auto r = path_connectivity(s, x, y, 3);
        CHECK(r.connected == oracle_reach[x][y]);
        if (r.connected) {
          REQUIRE(r.witness.has_value());
          CHECK(r.witness->start() == x);
          CHECK(r.witness->end() == y);
          CHECK(is_so_path(*r.witness, 3).ok);
        }
      }
  }
}

TEST_CASE("so-3 connectivity examples") {
  CHECK_FALSE(path_connectivity(fixtures::discrete(2), 0, 1, 3).connected);
  auto s = e1();
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) CHECK(path_connectivity(s, x, y, 3).connected);
}
