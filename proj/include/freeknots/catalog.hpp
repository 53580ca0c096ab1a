#pragma once

// Named example diagrams with their expected invariant values.

#include <optional>
#include <string>
#include <vector>

namespace freeknots {

struct CatalogEntry {
  std::string name;
  std::string code;
  std::optional<long long> expected_l;
  std::string note;
};

// k1 realizes the word (b' a)^7 b' b (a b)^7 along the circle from its
// stored anchor: seven even chords bridge the two halves, four odd chords of
// each type pair up inside one half each. Its invariant is 16, so it bounds
// no disc.
inline const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries{
      {"unknot", "()", 0, "trivial circle"},
      {"kink", "1 1", 0, "one loop, removable by a first move"},
      {"cross2", "1 2 1 2", 0, "two interleaved chords, removable as a crossed bigon"},
      {"hex", "1 2 3 1 2 3", 0, "three pairwise linked chords, all even"},
      {"carter", "1 2 2 1 3 3", 0,
       "underlying free knot of the classical three-crossing flat example; "
       "simplifies to the unknot by one bigon and one loop removal"},
      {"k1",
       "1 2 1 3 4 5 4 6 7 8 7 9 10 11 10 12 2 13 3 12 5 13 6 14 8 15 9 14 11 15", 16,
       "15-chord knot with invariant 16, hence not slice"},
  };
  return entries;
}

}  // namespace freeknots
