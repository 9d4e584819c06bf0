#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <queue>
#include <vector>

namespace fuzzy {

/// Dinic's algorithm over an arbitrary exact capacity type (integers or
/// big integers). An "infinite" arc is modelled with an explicit flag so the
/// capacity type needs no sentinel value. Every source-sink path must cross
/// at least one finite arc.
template <typename Cap>
class FlowNetwork {
 public:
  explicit FlowNetwork(std::size_t nodes) : adj_(nodes), level_(nodes), next_(nodes) {}

  void add_arc(std::size_t from, std::size_t to, Cap capacity) { push_arc(from, to, std::move(capacity), false); }
  void add_infinite_arc(std::size_t from, std::size_t to) { push_arc(from, to, Cap(0), true); }

  Cap max_flow(std::size_t source, std::size_t sink) {
    Cap total = 0;
    while (bfs(source, sink)) {
      std::fill(next_.begin(), next_.end(), 0);
      while (true) {
        Cap pushed = dfs(source, sink, std::nullopt);
        if (pushed == 0) break;
        total += pushed;
      }
    }
    return total;
  }

  /// Nodes reachable from the source in the residual network after max_flow():
  /// the source side of a minimum cut.
  std::vector<bool> source_side(std::size_t source) const {
    std::vector<bool> seen(adj_.size(), false);
    std::queue<std::size_t> queue;
    seen[source] = true;
    queue.push(source);
    while (!queue.empty()) {
      auto v = queue.front();
      queue.pop();
      for (auto id : adj_[v]) {
        const auto& arc = arcs_[id];
        if (!seen[arc.to] && has_residual(arc)) {
          seen[arc.to] = true;
          queue.push(arc.to);
        }
      }
    }
    return seen;
  }

 private:
  struct Arc {
    std::size_t to;
    Cap capacity;
    Cap flow;
    bool infinite;
  };

  void push_arc(std::size_t from, std::size_t to, Cap capacity, bool infinite) {
    adj_[from].push_back(arcs_.size());
    arcs_.push_back(Arc{to, std::move(capacity), Cap(0), infinite});
    adj_[to].push_back(arcs_.size());
    arcs_.push_back(Arc{from, Cap(0), Cap(0), false});
  }

  static bool has_residual(const Arc& arc) { return arc.infinite || arc.capacity - arc.flow > 0; }

  bool bfs(std::size_t source, std::size_t sink) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<std::size_t> queue;
    level_[source] = 0;
    queue.push(source);
    while (!queue.empty()) {
      auto v = queue.front();
      queue.pop();
      for (auto id : adj_[v]) {
        const auto& arc = arcs_[id];
        if (level_[arc.to] < 0 && has_residual(arc)) {
          level_[arc.to] = level_[v] + 1;
          queue.push(arc.to);
        }
      }
    }
    return level_[sink] >= 0;
  }

  // `limit` is nullopt for an unbounded push from the source.
  Cap dfs(std::size_t v, std::size_t sink, std::optional<Cap> limit) {
    if (v == sink) return limit ? *limit : Cap(0);
    for (auto& i = next_[v]; i < adj_[v].size(); ++i) {
      auto id = adj_[v][i];
      auto& arc = arcs_[id];
      if (level_[arc.to] != level_[v] + 1 || !has_residual(arc)) continue;
      std::optional<Cap> room = limit;
      if (!arc.infinite) {
        Cap residual = arc.capacity - arc.flow;
        if (!room || residual < *room) room = residual;
      }
      Cap pushed = dfs(arc.to, sink, room);
      if (pushed > 0) {
        arc.flow += pushed;
        arcs_[id ^ 1].flow -= pushed;
        return pushed;
      }
    }
    return Cap(0);
  }

  std::vector<Arc> arcs_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<int> level_;
  std::vector<std::size_t> next_;
};

}  // namespace fuzzy
