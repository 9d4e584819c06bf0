#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "fuzzy/graph.hpp"
#include "fuzzy/maxflow.hpp"

namespace fuzzy {

/// D*(G) = 2 * sum(mu) / sum(sigma), kept with both sums for reporting.
struct Density {
  Rational value;
  Rational numerator_sum;
  Rational denominator_sum;

  friend bool operator==(const Density& a, const Density& b) { return a.value == b.value; }
};

inline Density make_density(Rational twice_mu_sum, Rational sigma_sum) {
  Rational value = twice_mu_sum / sigma_sum;
  return Density{std::move(value), std::move(twice_mu_sum), std::move(sigma_sum)};
}

inline Density star_density(const FuzzyGraph& g) { return make_density(2 * g.mu_sum(), g.sigma_sum()); }

/// Density of the subgraph induced by `members` (vertex indices of g).
inline Density induced_density(const FuzzyGraph& g, const std::vector<bool>& members) {
  Rational sigma = 0;
  Rational mu = 0;
  for (std::size_t i = 0; i < g.order(); ++i)
    if (members[i]) sigma += g.sigma(i).value();
  for (const auto& e : g.edges())
    if (members[e.u] && members[e.v]) mu += e.mu.value();
  return make_density(2 * mu, sigma);
}

enum class DensityMethod { Enumeration, Flow };

inline std::string_view to_string(DensityMethod m) {
  return m == DensityMethod::Enumeration ? "enumeration" : "flow";
}

inline constexpr std::size_t kEnumerationLimit = 24;

struct DensestSubgraph {
  SubVertexSet witness;
  Density density;
};

struct BalanceVerdict {
  bool balanced;
  Density graph_density;
  Density max_subgraph_density;
  std::optional<SubVertexSet> witness;
  DensityMethod method;
};

namespace detail {

/// sigma and 2*mu scaled by the lcm of every denominator in the graph, so all
/// subset sums are integers and densities compare by cross-multiplication.
struct ScaledWeights {
  std::vector<BigInt> sigma;
  std::vector<BigInt> twice_mu;  // parallel to g.edges()
  BigInt total;                  // sum(sigma) + sum(twice_mu)
};

inline ScaledWeights scale_weights(const FuzzyGraph& g) {
  BigInt lcm = 1;
  auto absorb = [&lcm](const Rational& r) {
    BigInt d = denominator_of(r);
    lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
  };
  for (std::size_t i = 0; i < g.order(); ++i) absorb(g.sigma(i).value());
  for (const auto& e : g.edges()) absorb(e.mu.value());

  ScaledWeights w;
  w.total = 0;
  for (std::size_t i = 0; i < g.order(); ++i) {
    Rational s = g.sigma(i).value() * Rational(lcm);
    w.sigma.push_back(numerator_of(s));
    w.total += w.sigma.back();
  }
  for (const auto& e : g.edges()) {
    Rational m = 2 * e.mu.value() * Rational(lcm);
    w.twice_mu.push_back(numerator_of(m));
    w.total += w.twice_mu.back();
  }
  return w;
}

// Gray-code walk over every non-empty subset. Int holds subset sums, Wide
// holds products of two sums. Ties prefer fewer vertices, then the
// lexicographically smaller sorted index list.
template <typename Int, typename Wide, typename Convert>
std::uint32_t enumerate_densest(const FuzzyGraph& g, const ScaledWeights& w, Convert convert) {
  const std::size_t n = g.order();
  std::vector<Int> sigma;
  for (const auto& s : w.sigma) sigma.push_back(convert(s));
  struct Neighbor {
    std::size_t to;
    Int weight;
  };
  std::vector<std::vector<Neighbor>> adj(n);
  for (std::size_t k = 0; k < g.edges().size(); ++k) {
    const auto& e = g.edges()[k];
    Int weight = convert(w.twice_mu[k]);
    adj[e.u].push_back({e.v, weight});
    adj[e.v].push_back({e.u, weight});
  }

  std::uint32_t mask = 0;
  Int sum_sigma = 0;
  Int sum_mu = 0;
  std::uint32_t best = 0;
  Int best_sigma = 0;
  Int best_mu = 0;
  const std::uint64_t steps = std::uint64_t{1} << n;
  for (std::uint64_t k = 1; k < steps; ++k) {
    auto b = static_cast<std::size_t>(std::countr_zero(k));
    std::uint32_t bit = std::uint32_t{1} << b;
    Int incident = 0;
    for (const auto& nb : adj[b])
      if (mask & (std::uint32_t{1} << nb.to)) incident += nb.weight;
    if (mask & bit) {
      mask ^= bit;
      sum_sigma -= sigma[b];
      sum_mu -= incident;
    } else {
      mask |= bit;
      sum_sigma += sigma[b];
      sum_mu += incident;
    }

    bool better;
    if (best == 0) {
      better = true;
    } else {
      Wide lhs = Wide(sum_mu) * Wide(best_sigma);
      Wide rhs = Wide(best_mu) * Wide(sum_sigma);
      if (lhs != rhs) {
        better = lhs > rhs;
      } else {
        int pc = std::popcount(mask);
        int pb = std::popcount(best);
        if (pc != pb) {
          better = pc < pb;
        } else {
          std::uint32_t diff = mask ^ best;
          better = diff != 0 && (mask & (diff & (~diff + 1))) != 0;
        }
      }
    }
    if (better) {
      best = mask;
      best_sigma = sum_sigma;
      best_mu = sum_mu;
    }
  }
  return best;
}

inline std::vector<bool> mask_members(std::uint32_t mask, std::size_t n) {
  std::vector<bool> members(n);
  for (std::size_t i = 0; i < n; ++i) members[i] = (mask >> i) & 1U;
  return members;
}

inline std::vector<std::size_t> member_indices(const std::vector<bool>& members) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < members.size(); ++i)
    if (members[i]) idx.push_back(i);
  return idx;
}

inline DensestSubgraph densest_by_enumeration(const FuzzyGraph& g) {
  if (g.order() > kEnumerationLimit) {
    throw Error(ErrorCode::TooLarge, "enumeration is limited to " + std::to_string(kEnumerationLimit) +
                                         " vertices; use the flow method");
  }
  auto w = scale_weights(g);
  std::uint32_t best;
  if (w.total < BigInt(std::int64_t{1} << 62)) {
    best = enumerate_densest<std::int64_t, __int128>(
        g, w, [](const BigInt& x) { return x.convert_to<std::int64_t>(); });
  } else {
    best = enumerate_densest<BigInt, BigInt>(g, w, [](const BigInt& x) { return x; });
  }
  auto members = mask_members(best, g.order());
  return DensestSubgraph{SubVertexSet::from_indices(g, member_indices(members)), induced_density(g, members)};
}

// Dinkelbach iteration. For the current ratio lambda = p/q, a min cut on the
// edge-node network decides max_W q*2mu(E[W]) - p*sigma(W): source -> edge node
// with capacity q*2mu_e, edge node -> both endpoints unbounded, vertex -> sink
// with capacity p*sigma_v. A positive optimum yields a strictly denser W.
inline DensestSubgraph densest_by_flow(const FuzzyGraph& g) {
  const std::size_t n = g.order();
  const std::size_t m = g.size();
  auto w = scale_weights(g);

  std::vector<bool> current(n, true);
  BigInt cur_mu = 0;
  BigInt cur_sigma = 0;
  for (const auto& x : w.twice_mu) cur_mu += x;
  for (const auto& x : w.sigma) cur_sigma += x;

  while (true) {
    BigInt g_cd = boost::multiprecision::gcd(cur_mu, cur_sigma);
    BigInt p = cur_mu / g_cd;
    BigInt q = cur_sigma / g_cd;

    const std::size_t source = n + m;
    const std::size_t sink = n + m + 1;
    FlowNetwork<BigInt> net(n + m + 2);
    BigInt offered = 0;
    for (std::size_t k = 0; k < m; ++k) {
      const auto& e = g.edges()[k];
      BigInt cap = q * w.twice_mu[k];
      offered += cap;
      net.add_arc(source, n + k, cap);
      net.add_infinite_arc(n + k, e.u);
      net.add_infinite_arc(n + k, e.v);
    }
    for (std::size_t i = 0; i < n; ++i) net.add_arc(i, sink, p * w.sigma[i]);

    BigInt cut = net.max_flow(source, sink);
    if (offered - cut <= 0) break;

    auto side = net.source_side(source);
    std::vector<bool> next(n);
    BigInt next_mu = 0;
    BigInt next_sigma = 0;
    for (std::size_t i = 0; i < n; ++i) {
      next[i] = side[i];
      if (next[i]) next_sigma += w.sigma[i];
    }
    for (std::size_t k = 0; k < m; ++k)
      if (next[g.edges()[k].u] && next[g.edges()[k].v]) next_mu += w.twice_mu[k];
    // The cut certifies a set strictly denser than the current one.
    if (next_sigma == 0 || next_mu * cur_sigma <= cur_mu * next_sigma) break;
    current = std::move(next);
    cur_mu = next_mu;
    cur_sigma = next_sigma;
  }
  return DensestSubgraph{SubVertexSet::from_indices(g, member_indices(current)), induced_density(g, current)};
}

}  // namespace detail

/// Non-empty vertex subset whose induced subgraph has maximum *-density.
/// Enumeration is deterministic (smallest, then lexicographically least
/// maximizer); the flow witness is some exact maximizer.
inline DensestSubgraph max_density_subgraph(const FuzzyGraph& g, DensityMethod method) {
  return method == DensityMethod::Enumeration ? detail::densest_by_enumeration(g) : detail::densest_by_flow(g);
}

inline BalanceVerdict balance_check(const FuzzyGraph& g, DensityMethod method) {
  Density whole = star_density(g);
  auto best = max_density_subgraph(g, method);
  BalanceVerdict verdict{best.density.value <= whole.value, whole, best.density, std::nullopt, method};
  if (!verdict.balanced) verdict.witness = best.witness;
  return verdict;
}

}  // namespace fuzzy
