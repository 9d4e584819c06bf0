#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fuzzy/graph.hpp"

namespace fuzzy {

enum class Family { CompleteKn, CycleStrong, PetersenStrong, CompleteBipartiteStrong, PathStrong, Edgeless };

struct GeneratorParams {
  int n = 1;
  Membership c{1, 1};
  /// Overrides the constant sigma; one entry per vertex in generated id order
  /// (v1..vn, a1..an then b1..bn for the bipartite family).
  std::optional<std::vector<Membership>> sigma_list;
};

inline std::optional<Family> family_from_name(std::string_view name) {
  if (name == "kn" || name == "complete_kn") return Family::CompleteKn;
  if (name == "cn" || name == "cycle_strong") return Family::CycleStrong;
  if (name == "petersen" || name == "petersen_strong") return Family::PetersenStrong;
  if (name == "knn" || name == "complete_bipartite_strong") return Family::CompleteBipartiteStrong;
  if (name == "path" || name == "path_strong") return Family::PathStrong;
  if (name == "edgeless") return Family::Edgeless;
  return std::nullopt;
}

/// Outer 5-cycle v1..v5, spokes vi-v(i+5), inner pentagram on v6..v10.
inline std::vector<std::pair<int, int>> petersen_adjacency() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  return edges;
}

inline FuzzyGraph generate(Family family, const GeneratorParams& params) {
  auto bad = [](const std::string& why) { return Error(ErrorCode::BadParameter, why); };
  if (params.c.is_zero()) throw bad("c must be positive");

  std::vector<std::string> ids;
  std::vector<std::pair<int, int>> adjacency;
  const int n = params.n;
  auto numbered = [&](const std::string& prefix, int count) {
    for (int i = 1; i <= count; ++i) ids.push_back(prefix + std::to_string(i));
  };

  switch (family) {
    case Family::CompleteKn:
      if (n < 1) throw bad("complete_kn needs n >= 1");
      numbered("v", n);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) adjacency.emplace_back(i, j);
      break;
    case Family::CycleStrong:
      if (n < 3) throw bad("cycle_strong needs n >= 3");
      numbered("v", n);
      for (int i = 0; i < n; ++i) adjacency.emplace_back(i, (i + 1) % n);
      break;
    case Family::PetersenStrong:
      numbered("v", 10);
      adjacency = petersen_adjacency();
      break;
    case Family::CompleteBipartiteStrong:
      if (n < 1) throw bad("complete_bipartite_strong needs n >= 1");
      numbered("a", n);
      numbered("b", n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) adjacency.emplace_back(i, n + j);
      break;
    case Family::PathStrong:
      if (n < 1) throw bad("path_strong needs n >= 1");
      numbered("v", n);
      for (int i = 0; i + 1 < n; ++i) adjacency.emplace_back(i, i + 1);
      break;
    case Family::Edgeless:
      if (n < 1) throw bad("edgeless needs n >= 1");
      numbered("v", n);
      break;
  }

  std::vector<Membership> sigma(ids.size(), params.c);
  if (params.sigma_list) {
    if (params.sigma_list->size() != ids.size()) {
      throw bad("sigma_list has " + std::to_string(params.sigma_list->size()) + " entries, expected " +
                std::to_string(ids.size()));
    }
    sigma = *params.sigma_list;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (sigma[i].is_zero()) throw bad("sigma_list entries must be positive");
      bool has_edge = false;
      for (auto [a, b] : adjacency) has_edge |= (a == static_cast<int>(i) || b == static_cast<int>(i));
      if (has_edge && sigma[i] < params.c) throw bad("sigma_list entry below the edge value c");
    }
  }

  std::vector<VertexSpec> vertices;
  for (std::size_t i = 0; i < ids.size(); ++i) vertices.push_back({ids[i], sigma[i]});
  std::vector<EdgeSpec> edges;
  for (auto [a, b] : adjacency) edges.push_back({ids[a], ids[b], params.c});
  return FuzzyGraph::build(std::move(vertices), std::move(edges));
}

inline FuzzyGraph generate(Family family, int n, Membership c) {
  return generate(family, GeneratorParams{n, std::move(c), std::nullopt});
}

}  // namespace fuzzy
