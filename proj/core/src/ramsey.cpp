#include "selfdual/ramsey.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "selfdual/algebra.hpp"
#include "selfdual/errors.hpp"

namespace selfdual {

namespace {

SpaceElement compose_element(const SpaceElement& inner_x, const SpaceElement& anchor) {
  if (const auto* x = std::get_if<Connection>(&inner_x)) return compose(*x, std::get<Connection>(anchor));
  if (const auto* u = std::get_if<RigidSurjection>(&inner_x)) return compose(*u, std::get<RigidSurjection>(anchor));
  // j0 o j: the anchor is applied after the small injection.
  return compose(std::get<Injection>(anchor), std::get<Injection>(inner_x));
}

}  // namespace

CopyFamily copy_family(int N, int K, int M, SpaceMode mode) {
  if (K < 0 || K > M || M > N) throw DomainError("copy_family needs K <= M <= N");
  CopyFamily family;
  family.space = SpaceSpec{0, N, K, mode};
  family.M = M;
  family.vertices = enumerate_space(family.space);

  std::map<SpaceElement, int> index;
  for (std::size_t v = 0; v < family.vertices.size(); ++v) index.emplace(family.vertices[v], static_cast<int>(v));

  const auto anchors = enumerate_space(SpaceSpec{0, N, M, mode});
  const auto small = enumerate_space(SpaceSpec{0, M, K, mode});

  std::set<std::vector<int>> seen;
  for (const auto& anchor : anchors) {
    std::vector<int> edge;
    edge.reserve(small.size());
    for (const auto& x : small) edge.push_back(index.at(compose_element(x, anchor)));
    const std::size_t members = edge.size();
    std::sort(edge.begin(), edge.end());
    edge.erase(std::unique(edge.begin(), edge.end()), edge.end());
    if (!seen.insert(edge).second) continue;
    family.anchors.push_back(anchor);
    family.edges.push_back(std::move(edge));
    family.copy_size.push_back(members);
  }
  return family;
}

std::optional<MonoCopy> find_mono_copy(const Coloring& coloring, const CopyFamily& family) {
  if (!(coloring.space == family.space)) throw DomainError("coloring space does not match the copy family");
  const auto edge = find_mono_edge(family.hypergraph(), coloring.assignment);
  if (!edge) return std::nullopt;
  const int color = coloring.assignment[static_cast<std::size_t>(family.edges[*edge].front())];
  return MonoCopy{family.anchors[*edge], *edge, color};
}

std::optional<Coloring> find_bad_coloring(int N, int K, int M, int colors, SpaceMode mode,
                                          const SearchOptions& options) {
  if (colors < 1) throw DomainError("need at least one color");
  const CopyFamily family = copy_family(N, K, M, mode);
  auto assignment = find_bad_coloring(family.hypergraph(), colors, options);
  if (!assignment) return std::nullopt;
  return Coloring{family.space, colors, std::move(*assignment)};
}

WitnessResult min_witness_N(int K, int M, int colors, SpaceMode mode, int max_N, const SearchOptions& options) {
  if (K < 0 || K > M) throw DomainError("min_witness_N needs K <= M");
  if (max_N < M) throw DomainError("max_N below M");
  WitnessResult result;
  for (int N = M; N <= max_N; ++N) {
    auto bad = find_bad_coloring(N, K, M, colors, mode, options);
    if (!bad) {
      result.found = true;
      result.N = N;
      return result;
    }
    result.failing.push_back(N);
    result.last_bad = std::move(bad);
  }
  result.N = max_N;
  return result;
}

}  // namespace selfdual
