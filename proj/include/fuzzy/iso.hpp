#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fuzzy/graph.hpp"

namespace fuzzy {

inline constexpr std::size_t kIsomorphismLimit = 12;

/// Bijection V(g1) -> V(g2) by vertex id.
struct GraphMorphism {
  std::map<std::string, std::string> mapping;
};

/// Checks both preservation equations directly, independent of any search.
inline bool verify_morphism(const FuzzyGraph& g1, const FuzzyGraph& g2, const GraphMorphism& h) {
  if (g1.order() != g2.order() || h.mapping.size() != g1.order()) return false;
  std::vector<std::size_t> image(g1.order());
  std::vector<bool> used(g2.order(), false);
  for (std::size_t i = 0; i < g1.order(); ++i) {
    auto it = h.mapping.find(g1.id(i));
    if (it == h.mapping.end()) return false;
    auto j = g2.index_of(it->second);
    if (!j || used[*j]) return false;
    used[*j] = true;
    image[i] = *j;
    if (!(g1.sigma(i) == g2.sigma(*j))) return false;
  }
  for (std::size_t x = 0; x < g1.order(); ++x)
    for (std::size_t y = x + 1; y < g1.order(); ++y)
      if (!(g1.mu(x, y) == g2.mu(image[x], image[y]))) return false;
  return true;
}

namespace detail {

struct VertexSignature {
  Rational sigma;
  Rational degree;
  friend bool operator==(const VertexSignature&, const VertexSignature&) = default;
  friend bool operator<(const VertexSignature& a, const VertexSignature& b) {
    return a.sigma != b.sigma ? a.sigma < b.sigma : a.degree < b.degree;
  }
};

inline std::vector<VertexSignature> signatures(const FuzzyGraph& g) {
  auto d = degree_vector(g);
  std::vector<VertexSignature> out;
  for (std::size_t i = 0; i < g.order(); ++i) out.push_back({g.sigma(i).value(), d[i]});
  return out;
}

class IsomorphismSearch {
 public:
  IsomorphismSearch(const FuzzyGraph& g1, const FuzzyGraph& g2) : g1_(g1), g2_(g2), n_(g1.order()) {
    mu1_.assign(n_ * n_, Rational(0));
    mu2_.assign(n_ * n_, Rational(0));
    for (const auto& e : g1.edges()) mu1_[e.u * n_ + e.v] = mu1_[e.v * n_ + e.u] = e.mu.value();
    for (const auto& e : g2.edges()) mu2_[e.u * n_ + e.v] = mu2_[e.v * n_ + e.u] = e.mu.value();

    auto s1 = signatures(g1);
    auto s2 = signatures(g2);
    candidates_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (s1[i] == s2[j]) candidates_[i].push_back(j);

    // Most constrained vertices first.
    order_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) order_[i] = i;
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      return candidates_[a].size() < candidates_[b].size();
    });
  }

  std::optional<std::vector<std::size_t>> run() {
    image_.assign(n_, 0);
    used_.assign(n_, false);
    if (extend(0)) return image_;
    return std::nullopt;
  }

 private:
  bool extend(std::size_t depth) {
    if (depth == n_) return true;
    std::size_t x = order_[depth];
    for (std::size_t cand : candidates_[x]) {
      if (used_[cand]) continue;
      bool consistent = true;
      for (std::size_t k = 0; k < depth && consistent; ++k) {
        std::size_t y = order_[k];
        consistent = mu1_[x * n_ + y] == mu2_[cand * n_ + image_[y]];
      }
      if (!consistent) continue;
      image_[x] = cand;
      used_[cand] = true;
      if (extend(depth + 1)) return true;
      used_[cand] = false;
    }
    return false;
  }

  const FuzzyGraph& g1_;
  const FuzzyGraph& g2_;
  std::size_t n_;
  std::vector<Rational> mu1_, mu2_;
  std::vector<std::vector<std::size_t>> candidates_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> image_;
  std::vector<bool> used_;
};

}  // namespace detail

/// Backtracking search for a membership-preserving bijection, pruned by exact
/// (sigma, degree) signatures.
inline std::optional<GraphMorphism> find_isomorphism(const FuzzyGraph& g1, const FuzzyGraph& g2) {
  if (g1.order() != g2.order()) return std::nullopt;
  if (g1.order() > kIsomorphismLimit) {
    throw Error(ErrorCode::TooLarge, "isomorphism search is limited to " + std::to_string(kIsomorphismLimit) +
                                         " vertices");
  }
  if (g1.size() != g2.size()) return std::nullopt;
  auto s1 = detail::signatures(g1);
  auto s2 = detail::signatures(g2);
  std::sort(s1.begin(), s1.end());
  std::sort(s2.begin(), s2.end());
  if (s1 != s2) return std::nullopt;

  auto image = detail::IsomorphismSearch(g1, g2).run();
  if (!image) return std::nullopt;
  GraphMorphism h;
  for (std::size_t i = 0; i < g1.order(); ++i) h.mapping.emplace(g1.id(i), g2.id((*image)[i]));
  return h;
}

struct SelfComplementarity {
  bool self_complementary;
  std::optional<GraphMorphism> witness;
};

inline SelfComplementarity is_self_complementary(const FuzzyGraph& g) {
  auto h = find_isomorphism(g, complement(g));
  return {h.has_value(), std::move(h)};
}

}  // namespace fuzzy
