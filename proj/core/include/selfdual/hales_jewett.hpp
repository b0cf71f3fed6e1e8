#pragma once

#include <optional>
#include <vector>

#include "selfdual/search.hpp"

namespace selfdual {

/// Vertices are the words of A^N (numbered by word_index), edges the
/// combinatorial lines, deduplicated.
Hypergraph line_hypergraph(int N, int alphabet);

struct HalesJewettResult {
  bool found = false;
  int N = 0;  // least N when found, otherwise max_N
  int last_bad_N = 0;
  std::optional<std::vector<int>> last_bad;  // coloring of A^{last_bad_N} without a monochromatic line
};

/// Smallest N <= max_N such that every coloring of A^N with `colors` colors
/// has a monochromatic combinatorial line.
HalesJewettResult hj_min_N(int alphabet, int colors, int max_N, const SearchOptions& options = {});

}  // namespace selfdual
