#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fuzzy/graph.hpp"

namespace fuzzy {

enum class OpKind { Union, Join, Cartesian, Composition, Direct, Semidirect, Strong };

inline constexpr std::array<OpKind, 7> kAllOps = {OpKind::Union,  OpKind::Join,       OpKind::Cartesian,
                                                  OpKind::Composition, OpKind::Direct, OpKind::Semidirect,
                                                  OpKind::Strong};

inline std::string_view to_string(OpKind kind) {
  switch (kind) {
    case OpKind::Union: return "union";
    case OpKind::Join: return "join";
    case OpKind::Cartesian: return "cartesian";
    case OpKind::Composition: return "composition";
    case OpKind::Direct: return "direct";
    case OpKind::Semidirect: return "semidirect";
    case OpKind::Strong: return "strong";
  }
  return "?";
}

inline std::optional<OpKind> op_from_name(std::string_view name) {
  for (auto kind : kAllOps) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

inline bool is_product(OpKind kind) { return kind != OpKind::Union && kind != OpKind::Join; }

inline std::string product_vertex_id(std::string_view left, std::string_view right) {
  std::string id(left);
  id += kProductSeparator;
  id += right;
  return id;
}

namespace detail {

inline FuzzyGraph disjoint_sum(const FuzzyGraph& g1, const FuzzyGraph& g2, bool join) {
  for (const auto& id : g1.ids()) {
    if (g2.index_of(id)) {
      throw Error(ErrorCode::VertexCollision, "vertex \"" + id + "\" appears in both operands");
    }
  }
  auto vertices = g1.vertex_specs();
  for (auto& v : g2.vertex_specs()) vertices.push_back(std::move(v));
  auto edges = g1.edge_specs();
  for (auto& e : g2.edge_specs()) edges.push_back(std::move(e));
  if (join) {
    for (std::size_t i = 0; i < g1.order(); ++i)
      for (std::size_t j = 0; j < g2.order(); ++j)
        edges.push_back({g1.id(i), g2.id(j), meet(g1.sigma(i), g2.sigma(j))});
  }
  return FuzzyGraph::build(std::move(vertices), std::move(edges));
}

// Edge rules on V1 x V2, where a product vertex (i, k) has flat index i * n2 + k:
//   (a) same left vertex, right pair is an edge of g2     -> sigma1 ^ mu2
//   (b) same right vertex, left pair is an edge of g1     -> sigma2 ^ mu1
//   (c) left pair an edge of g1, right vertices distinct  -> sigma2 ^ sigma2 ^ mu1
//   (d) both pairs are edges                              -> mu1 ^ mu2
struct ProductRules {
  bool a = false, b = false, c = false, d = false;
};

inline ProductRules rules_for(OpKind kind) {
  switch (kind) {
    case OpKind::Cartesian: return {true, true, false, false};
    case OpKind::Composition: return {true, true, true, false};
    case OpKind::Direct: return {false, false, false, true};
    case OpKind::Semidirect: return {true, false, false, true};
    case OpKind::Strong: return {true, true, false, true};
    default: return {};
  }
}

inline FuzzyGraph product(const FuzzyGraph& g1, const FuzzyGraph& g2, ProductRules rules) {
  for (const auto* g : {&g1, &g2}) {
    for (const auto& id : g->ids()) {
      if (!is_plain_vertex_id(id)) {
        throw Error(ErrorCode::ReservedCharacter,
                    "product operands need plain vertex ids, got \"" + id + "\"");
      }
    }
  }
  const std::size_t n2 = g2.order();
  auto flat = [n2](std::size_t i, std::size_t k) { return i * n2 + k; };

  std::vector<VertexSpec> vertices;
  for (std::size_t i = 0; i < g1.order(); ++i)
    for (std::size_t k = 0; k < n2; ++k)
      vertices.push_back({product_vertex_id(g1.id(i), g2.id(k)), meet(g1.sigma(i), g2.sigma(k))});

  std::map<std::pair<std::size_t, std::size_t>, Membership> mu;
  auto put = [&](std::size_t p, std::size_t q, const Membership& value) {
    mu.emplace(std::minmax(p, q), value);
  };

  if (rules.a) {
    for (std::size_t i = 0; i < g1.order(); ++i)
      for (const auto& e : g2.edges()) put(flat(i, e.u), flat(i, e.v), meet(g1.sigma(i), e.mu));
  }
  if (rules.b) {
    for (std::size_t k = 0; k < n2; ++k)
      for (const auto& e : g1.edges()) put(flat(e.u, k), flat(e.v, k), meet(g2.sigma(k), e.mu));
  }
  if (rules.c) {
    for (const auto& e : g1.edges())
      for (std::size_t k = 0; k < n2; ++k)
        for (std::size_t l = 0; l < n2; ++l) {
          if (k == l) continue;
          put(flat(e.u, k), flat(e.v, l), meet(meet(g2.sigma(k), g2.sigma(l)), e.mu));
        }
  }
  if (rules.d) {
    for (const auto& e1 : g1.edges())
      for (const auto& e2 : g2.edges()) {
        Membership value = meet(e1.mu, e2.mu);
        put(flat(e1.u, e2.u), flat(e1.v, e2.v), value);
        put(flat(e1.u, e2.v), flat(e1.v, e2.u), value);
      }
  }

  std::vector<EdgeSpec> edges;
  edges.reserve(mu.size());
  for (const auto& [key, value] : mu) edges.push_back({vertices[key.first].id, vertices[key.second].id, value});
  return FuzzyGraph::build(std::move(vertices), std::move(edges));
}

}  // namespace detail

inline FuzzyGraph combine(OpKind kind, const FuzzyGraph& g1, const FuzzyGraph& g2) {
  switch (kind) {
    case OpKind::Union: return detail::disjoint_sum(g1, g2, false);
    case OpKind::Join: return detail::disjoint_sum(g1, g2, true);
    default: return detail::product(g1, g2, detail::rules_for(kind));
  }
}

}  // namespace fuzzy
