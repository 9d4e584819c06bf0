#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fuzzy/error.hpp"
#include "fuzzy/rational.hpp"

namespace fuzzy {

/// Separator between the two components of a product vertex id.
inline constexpr char kProductSeparator = '~';

struct VertexSpec {
  std::string id;
  Membership sigma;
};

struct EdgeSpec {
  std::string u;
  std::string v;
  Membership mu;
};

/// Edge stored by vertex index with u < v (and therefore id(u) < id(v)).
struct Edge {
  std::size_t u;
  std::size_t v;
  Membership mu;
};

/// A plain id has no '~'. A product id is "left~right" with two plain parts.
inline void validate_vertex_id(std::string_view id) {
  if (id.empty()) throw Error(ErrorCode::InvalidVertexId, "vertex id must be non-empty");
  auto sep = id.find(kProductSeparator);
  if (sep == std::string_view::npos) return;
  auto left = id.substr(0, sep);
  auto right = id.substr(sep + 1);
  if (left.empty() || right.empty() || right.find(kProductSeparator) != std::string_view::npos) {
    throw Error(ErrorCode::ReservedCharacter,
                "vertex id \"" + std::string(id) + "\" misuses the reserved '~' separator");
  }
}

inline bool is_plain_vertex_id(std::string_view id) {
  return !id.empty() && id.find(kProductSeparator) == std::string_view::npos;
}

/// Immutable fuzzy graph (sigma, mu) on a finite vertex set. Vertices are kept
/// sorted by id, so index order and id order agree everywhere.
class FuzzyGraph {
 public:
  static FuzzyGraph build(std::vector<VertexSpec> vertices, std::vector<EdgeSpec> edges) {
    bool any_positive = std::any_of(vertices.begin(), vertices.end(),
                                    [](const VertexSpec& v) { return !v.sigma.is_zero(); });
    if (vertices.empty() || !any_positive) {
      throw Error(ErrorCode::EmptyGraph, "a fuzzy graph needs at least one vertex with sigma > 0");
    }

    FuzzyGraph g;
    std::sort(vertices.begin(), vertices.end(),
              [](const VertexSpec& a, const VertexSpec& b) { return a.id < b.id; });
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      validate_vertex_id(vertices[i].id);
      if (i > 0 && vertices[i].id == vertices[i - 1].id) {
        throw Error(ErrorCode::DuplicateVertex, "vertex \"" + vertices[i].id + "\" listed twice");
      }
      if (vertices[i].sigma.is_zero()) {
        throw Error(ErrorCode::ZeroSigmaVertex, "vertex \"" + vertices[i].id + "\" has sigma = 0");
      }
      g.ids_.push_back(vertices[i].id);
      g.sigma_.push_back(vertices[i].sigma);
    }

    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& e : edges) {
      auto iu = g.index_of(e.u);
      auto iv = g.index_of(e.v);
      if (!iu || !iv) {
        throw Error(ErrorCode::UnknownEndpoint,
                    "edge {" + e.u + "," + e.v + "} references an unknown vertex");
      }
      if (*iu == *iv) {
        if (e.mu.is_zero()) continue;
        throw Error(ErrorCode::SelfLoop, "self-loop on \"" + e.u + "\"");
      }
      auto key = std::minmax(*iu, *iv);
      if (!seen.insert(key).second) {
        throw Error(ErrorCode::DuplicateEdge, "edge {" + e.u + "," + e.v + "} listed twice");
      }
      if (e.mu.is_zero()) continue;
      if (e.mu > meet(g.sigma_[*iu], g.sigma_[*iv])) {
        throw Error(ErrorCode::MembershipBound, "mu(" + e.u + "," + e.v + ") = " + e.mu.str() +
                                                    " exceeds sigma meet " +
                                                    meet(g.sigma_[*iu], g.sigma_[*iv]).str());
      }
      g.edges_.push_back(Edge{key.first, key.second, e.mu});
    }
    std::sort(g.edges_.begin(), g.edges_.end(), [](const Edge& a, const Edge& b) {
      return std::pair(a.u, a.v) < std::pair(b.u, b.v);
    });
    for (std::size_t k = 0; k < g.edges_.size(); ++k) {
      g.edge_index_.emplace(std::pair(g.edges_[k].u, g.edges_[k].v), k);
    }
    return g;
  }

  std::size_t order() const noexcept { return ids_.size(); }
  std::size_t size() const noexcept { return edges_.size(); }

  const std::vector<std::string>& ids() const noexcept { return ids_; }
  const std::string& id(std::size_t i) const { return ids_.at(i); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  std::optional<std::size_t> index_of(std::string_view id) const {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it == ids_.end() || *it != id) return std::nullopt;
    return static_cast<std::size_t>(it - ids_.begin());
  }

  const Membership& sigma(std::size_t i) const { return sigma_.at(i); }
  const Membership& sigma(std::string_view id) const { return sigma_.at(require(id)); }

  /// mu of an unordered pair; zero when the pair is not an edge.
  Membership mu(std::size_t i, std::size_t j) const {
    if (i == j) return Membership();
    auto it = edge_index_.find(std::minmax(i, j));
    return it == edge_index_.end() ? Membership() : edges_[it->second].mu;
  }
  Membership mu(std::string_view a, std::string_view b) const { return mu(require(a), require(b)); }

  bool has_edge(std::size_t i, std::size_t j) const {
    return i != j && edge_index_.count(std::minmax(i, j)) > 0;
  }

  Rational sigma_sum() const {
    Rational s = 0;
    for (const auto& m : sigma_) s += m.value();
    return s;
  }

  Rational mu_sum() const {
    Rational s = 0;
    for (const auto& e : edges_) s += e.mu.value();
    return s;
  }

  std::vector<VertexSpec> vertex_specs() const {
    std::vector<VertexSpec> out;
    out.reserve(order());
    for (std::size_t i = 0; i < order(); ++i) out.push_back({ids_[i], sigma_[i]});
    return out;
  }

  std::vector<EdgeSpec> edge_specs() const {
    std::vector<EdgeSpec> out;
    out.reserve(size());
    for (const auto& e : edges_) out.push_back({ids_[e.u], ids_[e.v], e.mu});
    return out;
  }

  friend bool operator==(const FuzzyGraph& a, const FuzzyGraph& b) {
    if (a.ids_ != b.ids_ || a.sigma_ != b.sigma_ || a.edges_.size() != b.edges_.size()) return false;
    for (std::size_t k = 0; k < a.edges_.size(); ++k) {
      const auto& x = a.edges_[k];
      const auto& y = b.edges_[k];
      if (x.u != y.u || x.v != y.v || !(x.mu == y.mu)) return false;
    }
    return true;
  }

 private:
  FuzzyGraph() = default;

  std::size_t require(std::string_view id) const {
    auto i = index_of(id);
    if (!i) throw Error(ErrorCode::UnknownVertex, "no vertex \"" + std::string(id) + "\"");
    return *i;
  }

  std::vector<std::string> ids_;
  std::vector<Membership> sigma_;
  std::vector<Edge> edges_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> edge_index_;
};

/// Non-empty set of vertex ids, kept sorted and de-duplicated.
class SubVertexSet {
 public:
  explicit SubVertexSet(std::vector<std::string> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    if (members_.empty()) throw Error(ErrorCode::EmptySelection, "vertex selection is empty");
  }

  static SubVertexSet from_indices(const FuzzyGraph& g, const std::vector<std::size_t>& idx) {
    std::vector<std::string> ids;
    ids.reserve(idx.size());
    for (auto i : idx) ids.push_back(g.id(i));
    return SubVertexSet(std::move(ids));
  }

  static SubVertexSet all_of(const FuzzyGraph& g) { return SubVertexSet(g.ids()); }

  const std::vector<std::string>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }

  friend bool operator==(const SubVertexSet&, const SubVertexSet&) = default;

 private:
  std::vector<std::string> members_;
};

inline FuzzyGraph complement(const FuzzyGraph& g) {
  std::vector<EdgeSpec> edges;
  for (std::size_t i = 0; i < g.order(); ++i) {
    for (std::size_t j = i + 1; j < g.order(); ++j) {
      Rational value = meet(g.sigma(i), g.sigma(j)).value() - g.mu(i, j).value();
      if (value > 0) edges.push_back({g.id(i), g.id(j), Membership(value)});
    }
  }
  return FuzzyGraph::build(g.vertex_specs(), std::move(edges));
}

inline FuzzyGraph induced_subgraph(const FuzzyGraph& g, const SubVertexSet& w) {
  std::vector<VertexSpec> vertices;
  std::vector<bool> keep(g.order(), false);
  for (const auto& id : w.members()) {
    auto i = g.index_of(id);
    if (!i) throw Error(ErrorCode::UnknownVertex, "no vertex \"" + id + "\" in host graph");
    keep[*i] = true;
    vertices.push_back({id, g.sigma(*i)});
  }
  std::vector<EdgeSpec> edges;
  for (const auto& e : g.edges()) {
    if (keep[e.u] && keep[e.v]) edges.push_back({g.id(e.u), g.id(e.v), e.mu});
  }
  return FuzzyGraph::build(std::move(vertices), std::move(edges));
}

struct VertexDegree {
  Rational degree;
  Rational total_degree;
};

/// Degrees in vertex-index order.
inline std::vector<Rational> degree_vector(const FuzzyGraph& g) {
  std::vector<Rational> d(g.order(), Rational(0));
  for (const auto& e : g.edges()) {
    d[e.u] += e.mu.value();
    d[e.v] += e.mu.value();
  }
  return d;
}

inline std::map<std::string, VertexDegree> vertex_degrees(const FuzzyGraph& g) {
  auto d = degree_vector(g);
  std::map<std::string, VertexDegree> out;
  for (std::size_t i = 0; i < g.order(); ++i) {
    out.emplace(g.id(i), VertexDegree{d[i], d[i] + g.sigma(i).value()});
  }
  return out;
}

struct ClassificationReport {
  bool is_complete = false;
  bool is_strong = false;
  std::optional<Rational> regular_degree;
  std::optional<Rational> totally_regular_degree;
  std::optional<Rational> constant_sigma;
  std::optional<Rational> constant_mu;
};

namespace detail {

template <typename Range, typename Proj>
std::optional<Rational> common_value(const Range& range, Proj proj) {
  std::optional<Rational> shared;
  for (const auto& item : range) {
    Rational v = proj(item);
    if (!shared) {
      shared = v;
    } else if (*shared != v) {
      return std::nullopt;
    }
  }
  return shared;
}

}  // namespace detail

inline ClassificationReport classify(const FuzzyGraph& g) {
  ClassificationReport report;

  report.is_strong = std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
    return e.mu == meet(g.sigma(e.u), g.sigma(e.v));
  });
  // Every pair carries mu = sigma meet > 0, so completeness is "strong with all pairs present".
  std::size_t n = g.order();
  report.is_complete = report.is_strong && g.size() == n * (n - 1) / 2;

  auto d = degree_vector(g);
  report.regular_degree = detail::common_value(d, [](const Rational& r) { return r; });
  std::vector<Rational> td(n);
  for (std::size_t i = 0; i < n; ++i) td[i] = d[i] + g.sigma(i).value();
  report.totally_regular_degree = detail::common_value(td, [](const Rational& r) { return r; });

  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  report.constant_sigma =
      detail::common_value(all, [&](std::size_t i) { return g.sigma(i).value(); });
  report.constant_mu = detail::common_value(g.edges(), [](const Edge& e) { return e.mu.value(); });
  return report;
}

}  // namespace fuzzy
