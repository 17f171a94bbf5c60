#include "semitop/finite_space.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"
#include "semitop/error.hpp"

#include <doctest.h>

#include <random>

using namespace semitop;
using fixtures::e1;

TEST_CASE("validation rejects families violating the axioms") {
  CHECK_THROWS_AS(FiniteSpace({"a", "b"}, {0b01, 0b11}), input_error);        // no empty set
  CHECK_THROWS_AS(FiniteSpace({"a", "b"}, {0b00, 0b01}), input_error);        // no full set
  CHECK_THROWS_AS(FiniteSpace({"a", "b", "c"}, {0b000, 0b001, 0b010, 0b111}),
                  input_error);  // union {a,b} missing
  CHECK_THROWS_AS(FiniteSpace({"a", "b", "c"}, {0b000, 0b011, 0b101, 0b111}),
                  input_error);  // intersection {a} missing
  CHECK_THROWS_AS(FiniteSpace({"a", "a"}, {0b00, 0b11}), input_error);
}

TEST_CASE("closure and interior on the four-point example") {
  auto s = e1();
  CHECK(s.closure(0b0001) == 0b1111);       // cl{a} = X
  CHECK(s.closure(0b0100) == 0b1100);       // cl{c} = {c,d}
  CHECK(s.closure(0) == 0);
  CHECK(s.interior(0b0111) == 0b0011);      // int{a,b,c} = {a,b}
  CHECK(s.interior(0b0010) == 0);           // int{b} = {}
  CHECK(s.interior(s.full_mask()) == s.full_mask());
  CHECK_THROWS_AS(s.closure(0b10000), input_error);
}

TEST_CASE("semi-open family of the four-point example") {
  auto s = e1();
  // {X, {}, {a}, {a,c}, {a,d}, {a,b}, {a,b,c}, {a,c,d}, {a,b,d}}
  const std::vector<Mask> expected{0b0000, 0b0001, 0b0011, 0b0101, 0b0111,
                                   0b1001, 0b1011, 0b1101, 0b1111};
  CHECK(s.semi_open_family() == expected);

  auto w = s.semi_open_witness(0b0101);  // {a,c}
  REQUIRE(w.has_value());
  CHECK(*w == 0b0001);
  CHECK_FALSE(s.is_semi_open(0b0010));  // {b}
  CHECK(s.semi_open_witness(0).value() == 0);
}

TEST_CASE("semi-closed family is the complement family") {
  auto s = e1();
  const std::vector<Mask> expected{0b0000, 0b0010, 0b0100, 0b0110, 0b1000,
                                   0b1010, 0b1100, 0b1110, 0b1111};
  CHECK(s.semi_closed_family() == expected);

  auto w = s.semi_closed_witness(0b0110);  // {b,c}
  REQUIRE(w.has_value());
  CHECK(*w == 0b1110);        // K = {b,c,d}
  CHECK(s.interior(*w) == 0);  // K has empty interior
  CHECK(s.is_semi_closed(0b0010));
  CHECK_FALSE(s.is_semi_closed(0b0101));  // {a,c}
}

TEST_CASE("sierpinski and discrete families") {
  CHECK(fixtures::sierpinski().semi_open_family() == std::vector<Mask>{0b00, 0b01, 0b11});
  CHECK(fixtures::discrete(2).semi_open_family() ==
        std::vector<Mask>{0b00, 0b01, 0b10, 0b11});
}

TEST_CASE("semi-interior and semi-closure") {
  auto s = e1();
  CHECK(s.semi_interior(0b0111) == 0b0111);  // {a,b,c} is its own semi-interior
  CHECK(s.semi_interior(0b0110) == 0);       // {b,c} contains no semi-open but {}
  CHECK(s.semi_closure(0b0001) == 0b1111);   // only semi-closed superset of {a} is X

  std::mt19937_64 rng(20240811);
  for (int trial = 0; trial < 200; ++trial) {
    auto sp = oracle::random_space(rng, 4);
    const Mask a = oracle::random_subset(rng, sp);
    const Mask b = a | oracle::random_subset(rng, sp);
    const Mask si = sp.semi_interior(a);
    CHECK(sp.is_semi_open(si));
    CHECK(sp.semi_interior(si) == si);
    CHECK((sp.semi_interior(a) & ~sp.semi_interior(b)) == 0);
    const Mask sc = sp.semi_closure(a);
    CHECK(sp.is_semi_closed(sc));
    CHECK(sp.semi_closure(sc) == sc);
    CHECK((sc & ~sp.semi_closure(b)) == 0);
    // duality with complements
    CHECK(sp.semi_closure(sp.full_mask() & ~a) == (sp.full_mask() & ~sp.semi_interior(a)));
  }
}

TEST_CASE("criterion equivalence against definition-level witness search") {
  for (int n = 1; n <= 4; ++n) {
    if (n == 4) {
      // spot-check a sample of the 355 four-point spaces; three points and
      // below are exhausted
      auto spaces = enumerate_topologies(4);
      for (std::size_t k = 0; k < spaces.size(); k += 7)
        for (Mask a = 0; a <= spaces[k].full_mask(); ++a) {
          CHECK(spaces[k].is_semi_open(a) ==
                oracle::semi_open_witness_search(spaces[k], a).has_value());
        }
      continue;
    }
    for (const auto& s : enumerate_topologies(n))
      for (Mask a = 0; a <= s.full_mask(); ++a) {
        CHECK(s.is_semi_open(a) == oracle::semi_open_witness_search(s, a).has_value());
        CHECK(s.is_semi_closed(a) == oracle::semi_closed_witness_search(s, a).has_value());
        if (auto w = s.semi_open_witness(a)) {
          CHECK(s.is_open(*w));
          CHECK((*w & ~a) == 0);
          CHECK((a & ~s.closure(*w)) == 0);
        }
      }
  }
}

TEST_CASE("union closure and pointwise criterion") {
  std::mt19937_64 rng(20240812);
  for (int trial = 0; trial < 400; ++trial) {
    auto s = oracle::random_space(rng, 5);
    const Mask a = oracle::random_subset(rng, s);
    const Mask b = oracle::random_subset(rng, s);
    if (s.is_semi_open(a) && s.is_semi_open(b)) CHECK(s.is_semi_open(a | b));
    // pointwise: A semi-open iff every x in A sits in a semi-open B inside A
    bool pointwise = true;
    for (int x = 0; x < s.point_count() && pointwise; ++x) {
      if (!(a >> x & 1)) continue;
      bool covered = false;
      Mask sub = a;
      while (true) {
        if ((sub >> x & 1) && s.is_semi_open(sub)) {
          covered = true;
          break;
        }
        if (sub == 0) break;
        sub = (sub - 1) & a;
      }
      pointwise = covered;
    }
    CHECK(s.is_semi_open(a) == pointwise);
  }
}

TEST_CASE("every open set is semi-open, every closed set semi-closed") {
  for (const auto& s : enumerate_topologies(3))
    for (Mask o : s.opens()) {
      CHECK(s.is_semi_open(o));
      CHECK(s.is_semi_closed(s.full_mask() & ~o));
    }
}

TEST_CASE("topology enumeration counts and canonical order") {
  CHECK(enumerate_open_families(1).size() == 1);
  CHECK(enumerate_open_families(2).size() == 4);
  CHECK(enumerate_open_families(3).size() == 29);
  CHECK(enumerate_open_families(4).size() == 355);
  CHECK_THROWS_AS(enumerate_open_families(0), input_error);
  CHECK_THROWS_AS(enumerate_open_families(6), input_error);

  for (int n = 2; n <= 4; ++n) {
    auto fast = enumerate_open_families(n);
    CHECK(fast == oracle::brute_force_open_families(n));
    CHECK(std::is_sorted(fast.begin(), fast.end()));
  }
}

TEST_CASE("five-point enumeration agrees with the known count") {
  CHECK(enumerate_open_families(5).size() == 6942);
}
