#include "selfdual/search.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "selfdual/errors.hpp"

namespace selfdual {

namespace {

enum class Outcome { found, none, exceeded };

class Backtracker {
 public:
  Backtracker(const Hypergraph& graph, int colors, const std::vector<std::vector<std::size_t>>& closing,
              std::uint64_t budget)
      : graph_(graph), colors_(colors), closing_(closing), budget_(budget),
        coloring_(static_cast<std::size_t>(graph.vertices), -1) {}

  // Continues from a consistent prefix of `depth` colored vertices.
  Outcome run(const std::vector<int>& prefix, int max_used) {
    std::copy(prefix.begin(), prefix.end(), coloring_.begin());
    return extend(static_cast<int>(prefix.size()), max_used);
  }

  const std::vector<int>& coloring() const { return coloring_; }
  std::uint64_t nodes() const { return nodes_; }

  // Whether coloring vertex v completes a monochromatic edge.
  bool closes_mono(int v) const {
    const int c = coloring_[static_cast<std::size_t>(v)];
    for (const std::size_t e : closing_[static_cast<std::size_t>(v)]) {
      const auto& edge = graph_.edges[e];
      if (std::all_of(edge.begin(), edge.end(), [&](int u) { return coloring_[static_cast<std::size_t>(u)] == c; }))
        return true;
    }
    return false;
  }

  void set(int v, int c) { coloring_[static_cast<std::size_t>(v)] = c; }

 private:
  Outcome extend(int v, int max_used) {
    if (v == graph_.vertices) return Outcome::found;
    const int limit = std::min(colors_ - 1, max_used + 1);
    for (int c = 0; c <= limit; ++c) {
      if (++nodes_ > budget_) return Outcome::exceeded;
      coloring_[static_cast<std::size_t>(v)] = c;
      if (closes_mono(v)) continue;
      const Outcome sub = extend(v + 1, std::max(max_used, c));
      if (sub != Outcome::none) return sub;
    }
    coloring_[static_cast<std::size_t>(v)] = -1;
    return Outcome::none;
  }

  const Hypergraph& graph_;
  int colors_;
  const std::vector<std::vector<std::size_t>>& closing_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<int> coloring_;
};

struct Prefix {
  std::vector<int> colors;
  int max_used;
};

// Consistent colorings of the first `depth` vertices, in lexicographic order.
std::vector<Prefix> prefixes(Backtracker& bt, int colors, int depth) {
  std::vector<Prefix> out;
  std::vector<int> current;
  auto walk = [&](auto&& self, int v, int max_used) -> void {
    if (v == depth) {
      out.push_back({current, max_used});
      return;
    }
    const int limit = std::min(colors - 1, max_used + 1);
    for (int c = 0; c <= limit; ++c) {
      bt.set(v, c);
      if (bt.closes_mono(v)) continue;
      current.push_back(c);
      self(self, v + 1, std::max(max_used, c));
      current.pop_back();
    }
    bt.set(v, -1);
  };
  walk(walk, 0, -1);
  return out;
}

}  // namespace

std::optional<std::vector<int>> find_bad_coloring(const Hypergraph& graph, int colors, const SearchOptions& options,
                                                  SearchStats* stats) {
  if (colors < 1) throw DomainError("need at least one color");
  for (const auto& edge : graph.edges)
    if (edge.empty()) return std::nullopt;

  std::vector<std::vector<std::size_t>> closing(static_cast<std::size_t>(graph.vertices));
  for (std::size_t e = 0; e < graph.edges.size(); ++e)
    closing[static_cast<std::size_t>(graph.edges[e].back())].push_back(e);

  const int threads = std::max(1, options.threads);
  if (threads == 1) {
    Backtracker bt(graph, colors, closing, options.node_budget);
    const Outcome outcome = bt.run({}, -1);
    if (stats) stats->nodes = bt.nodes();
    if (outcome == Outcome::exceeded) throw BoundExceeded("node budget exceeded");
    if (outcome == Outcome::none) return std::nullopt;
    return bt.coloring();
  }

  std::vector<Prefix> tasks;
  {
    Backtracker splitter(graph, colors, closing, options.node_budget);
    for (int depth = 1; depth <= graph.vertices; ++depth) {
      tasks = prefixes(splitter, colors, depth);
      if (tasks.empty() || tasks.size() >= static_cast<std::size_t>(8 * threads)) break;
    }
    if (graph.vertices == 0) tasks.push_back({{}, -1});
  }

  struct TaskResult {
    Outcome outcome = Outcome::none;
    std::vector<int> coloring;
    std::uint64_t nodes = 0;
    bool ran = false;
  };
  std::vector<TaskResult> results(tasks.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> first_hit{tasks.size()};

  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      // Later subtrees cannot change the answer once an earlier one succeeded.
      if (i > first_hit.load()) continue;
      Backtracker bt(graph, colors, closing, options.node_budget);
      TaskResult& r = results[i];
      r.outcome = bt.run(tasks[i].colors, tasks[i].max_used);
      r.nodes = bt.nodes();
      r.ran = true;
      if (r.outcome != Outcome::none) {
        r.coloring = bt.coloring();
        std::size_t seen = first_hit.load();
        while (i < seen && !first_hit.compare_exchange_weak(seen, i)) {
        }
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  std::uint64_t nodes = 0;
  for (const auto& r : results) nodes += r.nodes;
  if (stats) stats->nodes = nodes;
  for (const auto& r : results) {
    if (!r.ran) break;
    if (r.outcome == Outcome::exceeded) throw BoundExceeded("node budget exceeded in a root subtree");
    if (r.outcome == Outcome::found) return r.coloring;
  }
  return std::nullopt;
}

std::optional<std::size_t> find_mono_edge(const Hypergraph& graph, std::span<const int> coloring) {
  if (static_cast<int>(coloring.size()) != graph.vertices) throw DomainError("coloring size does not match vertex count");
  for (std::size_t e = 0; e < graph.edges.size(); ++e) {
    const auto& edge = graph.edges[e];
    if (edge.empty()) return e;
    const int c = coloring[static_cast<std::size_t>(edge.front())];
    if (std::all_of(edge.begin(), edge.end(), [&](int u) { return coloring[static_cast<std::size_t>(u)] == c; }))
      return e;
  }
  return std::nullopt;
}

}  // namespace selfdual
