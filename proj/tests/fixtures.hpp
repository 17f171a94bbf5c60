#pragma once

#include "semitop/finite_space.hpp"

namespace semitop::fixtures {

// X = {a,b,c,d} with opens {}, {a}, {a,b}, X
inline FiniteSpace e1() {
  return FiniteSpace({"a", "b", "c", "d"}, {0b0000, 0b0001, 0b0011, 0b1111});
}

// two points, opens {}, {a}, X
inline FiniteSpace sierpinski() { return FiniteSpace({"a", "b"}, {0b00, 0b01, 0b11}); }

inline FiniteSpace discrete(int n) {
  std::vector<Mask> opens;
  const Mask full = (Mask{1} << n) - 1;
  for (Mask m = 0; m <= full; ++m) opens.push_back(m);
  return FiniteSpace(default_point_names(n), std::move(opens));
}

inline FiniteSpace indiscrete(int n) {
  const Mask full = (Mask{1} << n) - 1;
  return FiniteSpace(default_point_names(n), {0, full});
}

}  // namespace semitop::fixtures
