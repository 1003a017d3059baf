#pragma once

// Short braids whose sliding circuit sizes and ouroboros counts are known.

#include <vector>

#include "braidsc/braid.hpp"

namespace braidsc::testing {

struct Fixture {
  const char* name;
  int n;
  const char* word;
  long size;
  int orbits;
  int ouroboroi;  // -1 when not pinned down
};

inline const std::vector<Fixture>& short_fixtures() {
  static const std::vector<Fixture> all = {
      {"b5-three-factor", 5, "3 2 1 4 3", 2, -1, -1},
      {"b5-ten", 5, "1 4 . 1 2 3 4 3 2 1", 10, 5, -1},
      {"b5-thirty-six", 5, "D . 2 4 . 2 1 3 2 4 3 2 1", 36, 9, 1},
      {"b5-hundred", 5, "1 2 1 3 2 4 3 . 3 4 3 . 3 2 1 4 3 2 1 . 1 2 1", 100, 25, 0},
      {"b6", 6, "3 2 1 4 3 5 . 1 2 3 2 1 4 3 2 5 . 2 1 3 2 4 3 5 4 3", 234, 78, 0},
      {"b7", 7, "2 1 3 2 1 6 5 . 1 2 1 3 2 4 5 4 3 2 6", 92, 46, 0},
  };
  return all;
}

inline CanonicalBraid fixture_braid(const Fixture& f) {
  return normal_form(parse_braid_word(f.word, f.n));
}

}  // namespace braidsc::testing
