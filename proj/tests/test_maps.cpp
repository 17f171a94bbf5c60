#include "semitop/space_map.hpp"

#include "fixtures.hpp"
#include "semitop/error.hpp"
#include "semitop/search.hpp"

#include <doctest.h>

using namespace semitop;
using fixtures::e1;

namespace {

bool next_images(std::vector<int>& images, int cod_n) {
  for (int i = static_cast<int>(images.size()) - 1; i >= 0; --i) {
    if (++images[i] < cod_n) return true;
    images[i] = 0;
  }
  return false;
}

bool reports_equal(const ContinuityReport& a, const ContinuityReport& b) {
  return a.continuous == b.continuous && a.so1 == b.so1 && a.so2 == b.so2 && a.so3 == b.so3;
}

}  // namespace

TEST_CASE("identity on the four-point example") {
  auto r = classify(identity_map(e1()));
  CHECK(r.continuous);
  CHECK(r.so1);
  CHECK(r.so2);
  CHECK_FALSE(r.so3);
  REQUIRE(r.so3_witness.has_value());
  CHECK(r.so3_witness->target_set == 0b0101);  // {a,c}: semi-open, preimage not open
  CHECK(r.so3_witness->preimage == 0b0101);
}

TEST_CASE("constant maps are so-3") {
  auto r = classify(constant_map(e1(), e1(), 0));
  CHECK(r.continuous);
  CHECK(r.so1);
  CHECK(r.so2);
  CHECK(r.so3);
}

TEST_CASE("swap on sierpinski fails every class") {
  auto s2 = fixtures::sierpinski();
  auto r = classify(SpaceMap(s2, s2, {1, 0}));
  CHECK_FALSE(r.continuous);
  CHECK_FALSE(r.so1);
  CHECK_FALSE(r.so2);
  CHECK_FALSE(r.so3);
  REQUIRE(r.so1_witness.has_value());
  CHECK(r.so1_witness->target_set == 0b01);  // open {a}
  CHECK(r.so1_witness->preimage == 0b10);    // {b} not semi-open
}

TEST_CASE("pointwise classification") {
  auto s = e1();
  auto id = identity_map(s);
  auto at_a = classify_at(id, 0);
  CHECK(at_a.so1);
  CHECK(at_a.so2);
  CHECK(at_a.so3);  // {a} itself is an open neighbourhood inside every target

  // swap on sierpinski: at a the only open around f(a)=b is X, so so-1
  // holds there; the failure is at b, where {a} has no usable neighbourhood
  auto s2 = fixtures::sierpinski();
  auto swap = SpaceMap(s2, s2, {1, 0});
  CHECK(classify_at(swap, 0).so1);
  auto swap_at_b = classify_at(swap, 1);
  CHECK_FALSE(swap_at_b.so1);
  CHECK(swap_at_b.so1_violation.value() == 0b01);

  auto c = classify_at(constant_map(s, s, 2), 3);
  CHECK(c.so3);
  CHECK_THROWS_AS(classify_at(id, 9), input_error);
}

TEST_CASE("global equals pointwise over all three-point map pairs") {
  const auto spaces = enumerate_topologies(2);
  for (const auto& x : spaces)
    for (const auto& y : spaces) {
      std::vector<int> images(x.point_count(), 0);
      do {
        SpaceMap f(x, y, images);
        const auto global = classify(f);
        bool all1 = true, all2 = true, all3 = true;
        for (int p = 0; p < x.point_count(); ++p) {
          const auto pr = classify_at(f, p);
          all1 &= pr.so1;
          all2 &= pr.so2;
          all3 &= pr.so3;
        }
        CHECK(global.so1 == all1);
        CHECK(global.so2 == all2);
        CHECK(global.so3 == all3);
      } while (next_images(images, y.point_count()));
    }
}

TEST_CASE("closed-set route agrees with the open-set route") {
  auto s = e1();
  CHECK(reports_equal(classify(identity_map(s)), classify_via_closed(identity_map(s))));
  CHECK(reports_equal(classify(constant_map(s, s, 0)),
                      classify_via_closed(constant_map(s, s, 0))));

  const auto spaces = enumerate_topologies(2);
  for (const auto& x : spaces)
    for (const auto& y : spaces) {
      std::vector<int> images(x.point_count(), 0);
      do {
        SpaceMap f(x, y, images);
        CHECK(reports_equal(classify(f), classify_via_closed(f)));
      } while (next_images(images, y.point_count()));
    }
}

TEST_CASE("compose basics") {
  auto s = e1();
  auto id = identity_map(s);
  CHECK(compose(id, id) == id);
  auto c = constant_map(s, s, 1);
  CHECK(compose(id, c) == c);
  CHECK(compose(c, id) == c);
  CHECK_THROWS_AS(compose(identity_map(fixtures::sierpinski()), id), input_error);
}

TEST_CASE("query parsing") {
  CHECK(format_query(parse_query("so1-compose-closed?")) == "so1-compose-closed");
  CHECK(format_query(parse_query("continuous-implies-so2")) == "continuous-implies-so2");
  CHECK(format_query(parse_query("identity-so3")) == "identity-so3");
  CHECK_THROWS_AS(parse_query("frobnicate"), input_error);
}

TEST_CASE("so-1 maps are not closed under composition") {
  auto r = search_counterexample(parse_query("so1-compose-closed"), 3);
  REQUIRE(r.counterexample_found);
  const auto& w = std::get<ComposeClosedWitness>(r.witness);
  CHECK(classify(w.f).so1);
  CHECK(classify(w.g).so1);
  CHECK_FALSE(classify(w.gf).so1);
  CHECK(compose(w.f, w.g) == w.gf);

  // determinism: a second run (and a parallel run) find the same witness
  auto again = search_counterexample(parse_query("so1-compose-closed"), 3);
  auto parallel = search_counterexample(parse_query("so1-compose-closed"), 3, 4);
  const auto& w2 = std::get<ComposeClosedWitness>(again.witness);
  const auto& w3 = std::get<ComposeClosedWitness>(parallel.witness);
  CHECK(w.f == w2.f);
  CHECK(w.g == w2.g);
  CHECK(w.f == w3.f);
  CHECK(w.g == w3.g);
}

TEST_CASE("so-2 and so-3 compose-closure holds within bounds") {
  CHECK_FALSE(search_counterexample(parse_query("so2-compose-closed"), 2).counterexample_found);
  CHECK_FALSE(search_counterexample(parse_query("so3-compose-closed"), 2).counterexample_found);
}

TEST_CASE("implication witnesses") {
  auto r = search_counterexample(parse_query("continuous-implies-so2"), 3);
  REQUIRE(r.counterexample_found);
  const auto& w = std::get<ImplicationWitness>(r.witness);
  CHECK(classify(w.f).continuous);
  CHECK_FALSE(classify(w.f).so2);

  CHECK_FALSE(search_counterexample(parse_query("so3-implies-so2"), 2).counterexample_found);
  CHECK_FALSE(search_counterexample(parse_query("so2-implies-so1"), 2).counterexample_found);
  CHECK_FALSE(search_counterexample(parse_query("constant-implies-so3"), 2).counterexample_found);
}

TEST_CASE("identity class queries") {
  CHECK_FALSE(search_counterexample(parse_query("identity-so1"), 3).counterexample_found);
  CHECK_FALSE(search_counterexample(parse_query("identity-so2"), 3).counterexample_found);
  auto r = search_counterexample(parse_query("identity-so3"), 3);
  REQUIRE(r.counterexample_found);
  const auto& w = std::get<IdentityWitness>(r.witness);
  CHECK(w.space.is_semi_open(w.violating_set));
  CHECK_FALSE(w.space.is_open(w.violating_set));
}
