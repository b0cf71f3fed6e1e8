#include "selfdual/hales_jewett.hpp"

#include <algorithm>
#include <set>

#include "selfdual/errors.hpp"
#include "selfdual/words.hpp"

namespace selfdual {

Hypergraph line_hypergraph(int N, int alphabet) {
  if (N < 1 || alphabet < 1) throw DomainError("line hypergraph needs N >= 1 and a nonempty alphabet");
  Hypergraph g;
  g.vertices = 1;
  for (int i = 0; i < N; ++i) g.vertices *= alphabet;
  std::set<std::vector<int>> seen;
  for (const auto& line : enumerate_lines(N, alphabet)) {
    std::vector<int> edge;
    for (const auto& w : line.words) edge.push_back(static_cast<int>(word_index(w)));
    std::sort(edge.begin(), edge.end());
    edge.erase(std::unique(edge.begin(), edge.end()), edge.end());
    if (seen.insert(edge).second) g.edges.push_back(std::move(edge));
  }
  return g;
}

HalesJewettResult hj_min_N(int alphabet, int colors, int max_N, const SearchOptions& options) {
  if (alphabet < 1 || colors < 1) throw DomainError("hj_min_N needs a nonempty alphabet and at least one color");
  HalesJewettResult result;
  for (int N = 1; N <= max_N; ++N) {
    auto bad = find_bad_coloring(line_hypergraph(N, alphabet), colors, options);
    if (!bad) {
      result.found = true;
      result.N = N;
      return result;
    }
    result.last_bad = std::move(bad);
    result.last_bad_N = N;
  }
  result.N = max_N;
  return result;
}

}  // namespace selfdual
