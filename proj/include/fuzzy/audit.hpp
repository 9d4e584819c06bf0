#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <future>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "fuzzy/balance.hpp"
#include "fuzzy/generators.hpp"
#include "fuzzy/graph.hpp"
#include "fuzzy/io.hpp"
#include "fuzzy/iso.hpp"
#include "fuzzy/ops.hpp"
#include "fuzzy/random.hpp"

namespace fuzzy::audit {

enum class Profile { Generic, Complete, Strong, SelfComplementary, ConstantSigma, RegularFamily };

inline std::string_view to_string(Profile p) {
  switch (p) {
    case Profile::Generic: return "generic";
    case Profile::Complete: return "complete";
    case Profile::Strong: return "strong";
    case Profile::SelfComplementary: return "self_complementary";
    case Profile::ConstantSigma: return "constant_sigma";
    case Profile::RegularFamily: return "regular_family";
  }
  return "?";
}

inline std::optional<Profile> profile_from_name(std::string_view name) {
  for (auto p : {Profile::Generic, Profile::Complete, Profile::Strong, Profile::SelfComplementary,
                 Profile::ConstantSigma, Profile::RegularFamily}) {
    if (to_string(p) == name) return p;
  }
  return std::nullopt;
}

struct SampleProfile {
  Profile profile = Profile::Generic;
  int max_vertices = 8;
  /// Sampled memberships are k/grid for integer k.
  int grid = 16;
};

using Measures = std::map<std::string, Rational>;

struct CounterexampleRecord {
  std::string claim_id;
  std::vector<FuzzyGraph> graphs;
  Measures measured;
  std::uint64_t seed = 0;
};

struct AuditReport {
  std::string property_id;
  /// Draws that satisfied the property's hypothesis and were checked.
  std::size_t samples_run = 0;
  /// Draws rejected because the hypothesis did not hold.
  std::size_t discarded = 0;
  std::size_t violations = 0;
  std::optional<CounterexampleRecord> first_violation;
  std::uint64_t seed = 0;
};

inline void validate_profile(const SampleProfile& p) {
  if (p.max_vertices < 1) throw Error(ErrorCode::BadProfile, "max_vertices must be >= 1");
  if (p.grid < 2) throw Error(ErrorCode::BadProfile, "grid denominator must be >= 2");
  if (p.profile == Profile::SelfComplementary && p.grid % 2 != 0) {
    throw Error(ErrorCode::BadProfile, "self_complementary sampling needs an even grid denominator");
  }
}

namespace detail {

inline Rational flag(bool b) { return b ? Rational(1) : Rational(0); }
inline bool is_set(const Measures& m, const char* key) { return m.at(key) != 0; }

inline std::vector<std::string> numbered_ids(const std::string& prefix, int n) {
  std::vector<std::string> ids;
  for (int i = 1; i <= n; ++i) ids.push_back(prefix + std::to_string(i));
  return ids;
}

// Assembles a graph from grid numerators; mu_num[i][j] == 0 means no edge.
inline FuzzyGraph from_grid(const std::vector<std::string>& ids, const std::vector<int>& sigma_num,
                            const std::vector<std::vector<int>>& mu_num, int grid) {
  std::vector<VertexSpec> vertices;
  for (std::size_t i = 0; i < ids.size(); ++i) vertices.push_back({ids[i], Membership(sigma_num[i], grid)});
  std::vector<EdgeSpec> edges;
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = i + 1; j < ids.size(); ++j)
      if (mu_num[i][j] > 0) edges.push_back({ids[i], ids[j], Membership(mu_num[i][j], grid)});
  return FuzzyGraph::build(std::move(vertices), std::move(edges));
}

inline FuzzyGraph sample_regular_family(const SampleProfile& p, Rng& rng, const std::string& prefix) {
  std::vector<Family> options{Family::CompleteKn};
  if (p.max_vertices >= 3) options.push_back(Family::CycleStrong);
  if (p.max_vertices >= 2) options.push_back(Family::CompleteBipartiteStrong);
  if (p.max_vertices >= 10) options.push_back(Family::PetersenStrong);
  Family family = options[rng.below(options.size())];

  int n = 1;
  std::size_t count = 0;
  switch (family) {
    case Family::CompleteKn: n = rng.between(1, p.max_vertices); count = n; break;
    case Family::CycleStrong: n = rng.between(3, p.max_vertices); count = n; break;
    case Family::CompleteBipartiteStrong: n = rng.between(1, p.max_vertices / 2); count = 2 * n; break;
    default: count = 10; break;
  }
  const int d = p.grid;
  int m = rng.between(1, d);
  std::vector<Membership> sigma;
  if (rng.coin()) {
    sigma.assign(count, Membership(rng.between(m, d), d));
  } else {
    for (std::size_t i = 0; i < count; ++i) sigma.emplace_back(rng.between(m, d), d);
  }
  auto g = generate(family, GeneratorParams{n, Membership(m, d), sigma});
  if (prefix == "v") return g;
  // Re-prefix ids so two samples can be joined.
  std::vector<VertexSpec> vertices;
  std::map<std::string, std::string> rename;
  for (std::size_t i = 0; i < g.order(); ++i) {
    rename[g.id(i)] = prefix + std::to_string(i + 1);
    vertices.push_back({rename[g.id(i)], g.sigma(i)});
  }
  std::vector<EdgeSpec> edges;
  for (const auto& e : g.edge_specs()) edges.push_back({rename[e.u], rename[e.v], e.mu});
  return FuzzyGraph::build(std::move(vertices), std::move(edges));
}

/// Draws a graph with exactly n vertices (regular_family picks its own order).
inline FuzzyGraph sample_with_order(const SampleProfile& p, int n, Rng& rng, const std::string& prefix = "v") {
  if (p.profile == Profile::RegularFamily) return sample_regular_family(p, rng, prefix);
  const int d = p.grid;
  auto ids = numbered_ids(prefix, n);
  std::vector<int> sigma(n);
  std::vector<std::vector<int>> mu(n, std::vector<int>(n, 0));

  if (p.profile == Profile::SelfComplementary) {
    for (auto& s : sigma) s = 2 * rng.between(1, d / 2);
  } else if (p.profile == Profile::ConstantSigma) {
    int c = rng.between(1, d);
    for (auto& s : sigma) s = c;
  } else {
    for (auto& s : sigma) s = rng.between(1, d);
  }

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      int cap = std::min(sigma[i], sigma[j]);
      switch (p.profile) {
        case Profile::Complete: mu[i][j] = cap; break;
        case Profile::Strong: mu[i][j] = rng.coin() ? cap : 0; break;
        case Profile::SelfComplementary: mu[i][j] = cap / 2; break;
        default: mu[i][j] = rng.coin() ? rng.between(1, cap) : 0; break;
      }
    }
  }
  return from_grid(ids, sigma, mu, d);
}

/// Same graph under fresh ids r1..rn assigned by a random permutation.
inline FuzzyGraph relabel(const FuzzyGraph& g, Rng& rng) {
  std::vector<std::size_t> perm(g.order());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  rng.shuffle(perm);
  std::vector<std::string> fresh(g.order());
  std::vector<VertexSpec> vertices;
  for (std::size_t i = 0; i < g.order(); ++i) {
    fresh[i] = "r" + std::to_string(perm[i] + 1);
    vertices.push_back({fresh[i], g.sigma(i)});
  }
  std::vector<EdgeSpec> edges;
  for (const auto& e : g.edges()) edges.push_back({fresh[e.u], fresh[e.v], e.mu});
  return FuzzyGraph::build(std::move(vertices), std::move(edges));
}

inline bool balanced(const FuzzyGraph& g) {
  auto method = g.order() <= kEnumerationLimit ? DensityMethod::Enumeration : DensityMethod::Flow;
  return balance_check(g, method).balanced;
}

inline bool all_pairs_half_meet(const FuzzyGraph& g) {
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t j = i + 1; j < g.order(); ++j)
      if (2 * g.mu(i, j).value() != meet(g.sigma(i), g.sigma(j)).value()) return false;
  return true;
}

inline Rational half_meet_sum(const FuzzyGraph& g) {
  Rational s = 0;
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t j = i + 1; j < g.order(); ++j) s += meet(g.sigma(i), g.sigma(j)).value();
  return s / 2;
}

inline bool complete_shape(const FuzzyGraph& g) { return g.size() == g.order() * (g.order() - 1) / 2; }

// Measures shared by the direct-product and operation claims.
inline Measures pair_measures(const FuzzyGraph& g1, const FuzzyGraph& g2, OpKind kind, bool with_balance) {
  auto combined = combine(kind, g1, g2);
  Measures m;
  m["complete_1"] = flag(classify(g1).is_complete);
  m["complete_2"] = flag(classify(g2).is_complete);
  m["density_1"] = star_density(g1).value;
  m["density_2"] = star_density(g2).value;
  m["density_combined"] = star_density(combined).value;
  if (with_balance) {
    m["balanced_1"] = flag(balanced(g1));
    m["balanced_2"] = flag(balanced(g2));
    m["balanced_combined"] = flag(balanced(combined));
  }
  return m;
}

inline bool three_equal(const Measures& m) {
  return m.at("density_1") == m.at("density_2") && m.at("density_2") == m.at("density_combined");
}

inline Measures regularity_measures(const FuzzyGraph& g) {
  auto c = classify(g);
  Measures m;
  m["regular"] = flag(c.regular_degree.has_value());
  m["totally_regular"] = flag(c.totally_regular_degree.has_value());
  m["constant_sigma"] = flag(c.constant_sigma.has_value());
  m["r"] = c.regular_degree.value_or(0);
  m["k"] = c.totally_regular_degree.value_or(0);
  m["c"] = c.constant_sigma.value_or(0);
  m["p"] = Rational(static_cast<long long>(g.order()));
  m["sigma_sum"] = g.sigma_sum();
  m["density"] = star_density(g).value;
  return m;
}

using MeasureFn = std::function<Measures(const std::vector<FuzzyGraph>&)>;
using PredicateFn = std::function<bool(const Measures&)>;

/// One auditable statement. For a proved property, `hit` means "violated"
/// and is only consulted when `applicable` (the hypothesis) holds. For a
/// negative claim, `hit` means "counterexample found".
struct Entry {
  std::string id;
  bool negative = false;
  PredicateFn applicable = [](const Measures&) { return true; };
  PredicateFn hit;
  MeasureFn measure;
  std::vector<Profile> profiles;  // accepted sampling profiles (properties only)
  std::optional<Family> family;   // class theorems run over a generator family
  std::optional<OpKind> op;
};

inline const std::vector<Profile>& any_profile() {
  static const std::vector<Profile> all{Profile::Generic,           Profile::Complete,      Profile::Strong,
                                        Profile::SelfComplementary, Profile::ConstantSigma, Profile::RegularFamily};
  return all;
}

inline Entry family_entry(std::string id, Family family, std::function<Rational(const FuzzyGraph&)> expected) {
  Entry e;
  e.id = std::move(id);
  e.family = family;
  e.profiles = any_profile();
  e.measure = [expected](const std::vector<FuzzyGraph>& gs) {
    auto verdict = balance_check(gs[0], DensityMethod::Enumeration);
    return Measures{{"balanced", flag(verdict.balanced)},
                    {"density", verdict.graph_density.value},
                    {"max_subgraph_density", verdict.max_subgraph_density.value},
                    {"expected_density", expected(gs[0])}};
  };
  e.hit = [](const Measures& m) { return !is_set(m, "balanced") || m.at("density") != m.at("expected_density"); };
  return e;
}

inline std::vector<Entry> build_properties() {
  std::vector<Entry> out;
  Entry e;

  e = Entry{};
  e.id = "P-COMPLETE-D2";
  e.profiles = {Profile::Complete};
  e.measure = [](const std::vector<FuzzyGraph>& gs) {
    const auto& g = gs[0];
    return Measures{{"complete", flag(classify(g).is_complete)},
                    {"vertices", Rational(static_cast<long long>(g.order()))},
                    {"edges", Rational(static_cast<long long>(g.size()))},
                    {"density", star_density(g).value}};
  };
  e.applicable = [](const Measures& m) { return is_set(m, "complete") && m.at("vertices") >= m.at("edges"); };
  e.hit = [](const Measures& m) { return m.at("density") > 2; };
  out.push_back(e);

  e = Entry{};
  e.id = "P-SELFCOMP-D1";
  e.profiles = any_profile();
  e.measure = [](const std::vector<FuzzyGraph>& gs) {
    return Measures{{"self_complementary", flag(is_self_complementary(gs[0]).self_complementary)},
                    {"density", star_density(gs[0]).value}};
  };
  e.applicable = [](const Measures& m) { return is_set(m, "self_complementary"); };
  e.hit = [](const Measures& m) { return m.at("density") > 1; };
  out.push_back(e);

  e = Entry{};
  e.id = "P-HALFMU";
  e.profiles = {Profile::SelfComplementary};
  e.measure = [](const std::vector<FuzzyGraph>& gs) {
    return Measures{{"half_meet_mu", flag(all_pairs_half_meet(gs[0]))},
                    {"self_complementary", flag(is_self_complementary(gs[0]).self_complementary)},
                    {"density", star_density(gs[0]).value}};
  };
  e.applicable = [](const Measures& m) { return is_set(m, "half_meet_mu"); };
  e.hit = [](const Measures& m) { return m.at("density") > 1 || !is_set(m, "self_complementary"); };
  out.push_back(e);

  e = Entry{};
  e.id = "P-SELFCOMP-SUM";
  e.profiles = any_profile();
  e.measure = [](const std::vector<FuzzyGraph>& gs) {
    return Measures{{"self_complementary", flag(is_self_complementary(gs[0]).self_complementary)},
                    {"mu_sum", gs[0].mu_sum()},
                    {"half_meet_sum", half_meet_sum(gs[0])}};
  };
  e.applicable = [](const Measures& m) { return is_set(m, "self_complementary"); };
  e.hit = [](const Measures& m) { return m.at("mu_sum") != m.at("half_meet_sum"); };
  out.push_back(e);

  e = Entry{};
  e.id = "P-ISO-SUMS";
  e.profiles = any_profile();
  e.measure = [](const std::vector<FuzzyGraph>& gs) {
    return Measures{{"isomorphic", flag(find_isomorphism(gs[0], gs[1]).has_value())},
                    {"sigma_sum_1", gs[0].sigma_sum()},
                    {"sigma_sum_2", gs[1].sigma_sum()},
                    {"mu_sum_1", gs[0].mu_sum()},
                    {"mu_sum_2", gs[1].mu_sum()}};
  };
  e.applicable = [](const Measures& m) { return is_set(m, "isomorphic"); };
  e.hit = [](const Measures& m) {
    return m.at("sigma_sum_1") != m.at("sigma_sum_2") || m.at("mu_sum_1") != m.at("mu_sum_2");
  };
  out.push_back(e);

  e = Entry{};
  e.id = "P-DIRECT-IFF";
  e.profiles = {Profile::Complete};
  e.measure = [](const std::vector<FuzzyGraph>& gs) { return pair_measures(gs[0], gs[1], OpKind::Direct, false); };
  e.applicable = [](const Measures& m) { return is_set(m, "complete_1") && is_set(m, "complete_2"); };
  e.hit = [](const Measures& m) {
    bool dominated = m.at("density_1") <= m.at("density_combined") && m.at("density_2") <= m.at("density_combined");
    return dominated != three_equal(m);
  };
  out.push_back(e);

  e = Entry{};
  e.id = "P-DIRECT-BAL";
  e.profiles = {Profile::Complete};
  e.measure = [](const std::vector<FuzzyGraph>& gs) { return pair_measures(gs[0], gs[1], OpKind::Direct, true); };
  e.applicable = [](const Measures& m) {
    return is_set(m, "complete_1") && is_set(m, "complete_2") && is_set(m, "balanced_1") && is_set(m, "balanced_2");
  };
  e.hit = [](const Measures& m) { return is_set(m, "balanced_combined") != three_equal(m); };
  out.push_back(e);

  e = Entry{};
  e.id = "P-ISO-BAL";
  e.profiles = any_profile();
  e.measure = [](const std::vector<FuzzyGraph>& gs) {
    return Measures{{"isomorphic", flag(find_isomorphism(gs[0], gs[1]).has_value())},
                    {"balanced_1", flag(balanced(gs[0]))},
                    {"balanced_2", flag(balanced(gs[1]))}};
  };
  e.applicable = [](const Measures& m) { return is_set(m, "isomorphic") && is_set(m, "balanced_2"); };
  e.hit = [](const Measures& m) { return !is_set(m, "balanced_1"); };
  out.push_back(e);

  auto regular = [](const std::vector<FuzzyGraph>& gs) { return regularity_measures(gs[0]); };
  e = Entry{};
  e.id = "P-REG-DENS";
  e.profiles = any_profile();
  e.measure = regular;
  e.applicable = [](const Measures& m) { return is_set(m, "regular"); };
  e.hit = [](const Measures& m) { return m.at("density") != m.at("p") * m.at("r") / m.at("sigma_sum"); };
  out.push_back(e);

  e = Entry{};
  e.id = "P-REG-CONST";
  e.profiles = {Profile::RegularFamily, Profile::ConstantSigma};
  e.measure = regular;
  e.applicable = [](const Measures& m) { return is_set(m, "regular") && is_set(m, "constant_sigma"); };
  e.hit = [](const Measures& m) { return m.at("density") != m.at("r") / m.at("c"); };
  out.push_back(e);

  e = Entry{};
  e.id = "P-TREG-DENS";
  e.profiles = any_profile();
  e.measure = regular;
  e.applicable = [](const Measures& m) { return is_set(m, "totally_regular"); };
  e.hit = [](const Measures& m) { return m.at("density") != m.at("p") * m.at("k") / m.at("sigma_sum") - 1; };
  out.push_back(e);

  e = Entry{};
  e.id = "P-TREG-CONST";
  e.profiles = {Profile::RegularFamily, Profile::ConstantSigma};
  e.measure = regular;
  e.applicable = [](const Measures& m) { return is_set(m, "totally_regular") && is_set(m, "constant_sigma"); };
  e.hit = [](const Measures& m) { return m.at("density") != m.at("k") / m.at("c") - 1; };
  out.push_back(e);

  auto order = [](const FuzzyGraph& g) { return Rational(static_cast<long long>(g.order())); };
  out.push_back(family_entry("P-KN", Family::CompleteKn, [order](const FuzzyGraph& g) { return order(g) - 1; }));
  out.push_back(family_entry("P-CN", Family::CycleStrong, [](const FuzzyGraph&) { return Rational(2); }));
  out.push_back(family_entry("P-PETERSEN", Family::PetersenStrong, [](const FuzzyGraph&) { return Rational(3); }));
  out.push_back(family_entry("P-KNN", Family::CompleteBipartiteStrong,
                             [order](const FuzzyGraph& g) { return order(g) / 2; }));
  return out;
}

inline const std::vector<OpKind>& preservation_ops() {
  static const std::vector<OpKind> ops{OpKind::Semidirect, OpKind::Strong, OpKind::Join, OpKind::Composition,
                                       OpKind::Cartesian};
  return ops;
}

inline const std::vector<OpKind>& total_regularity_ops() {
  static const std::vector<OpKind> ops{OpKind::Direct, OpKind::Semidirect, OpKind::Strong,
                                       OpKind::Join,   OpKind::Composition, OpKind::Cartesian};
  return ops;
}

inline std::vector<Entry> build_claims() {
  std::vector<Entry> out;
  Entry e;

  e = Entry{};
  e.id = "N-STRONG-NOT-COMPLETE";
  e.negative = true;
  e.measure = [](const std::vector<FuzzyGraph>& gs) {
    auto c = classify(gs[0]);
    return Measures{{"strong", flag(c.is_strong)}, {"complete", flag(c.is_complete)}};
  };
  e.hit = [](const Measures& m) { return is_set(m, "strong") && !is_set(m, "complete"); };
  out.push_back(e);

  e = Entry{};
  e.id = "N-REG-VS-TREG";
  e.negative = true;
  e.measure = [](const std::vector<FuzzyGraph>& gs) {
    auto a = classify(gs[0]);
    auto b = classify(gs[1]);
    return Measures{{"regular_1", flag(a.regular_degree.has_value())},
                    {"totally_regular_1", flag(a.totally_regular_degree.has_value())},
                    {"regular_2", flag(b.regular_degree.has_value())},
                    {"totally_regular_2", flag(b.totally_regular_degree.has_value())}};
  };
  e.hit = [](const Measures& m) {
    return is_set(m, "regular_1") && !is_set(m, "totally_regular_1") && is_set(m, "totally_regular_2") &&
           !is_set(m, "regular_2");
  };
  out.push_back(e);

  e = Entry{};
  e.id = "N-CONVERSE-D1";
  e.negative = true;
  e.measure = [](const std::vector<FuzzyGraph>& gs) {
    return Measures{{"density", star_density(gs[0]).value},
                    {"self_complementary", flag(is_self_complementary(gs[0]).self_complementary)}};
  };
  e.hit = [](const Measures& m) { return m.at("density") <= 1 && !is_set(m, "self_complementary"); };
  out.push_back(e);

  e = Entry{};
  e.id = "N-DIRECT-NONCOMPLETE";
  e.negative = true;
  e.measure = [](const std::vector<FuzzyGraph>& gs) { return pair_measures(gs[0], gs[1], OpKind::Direct, true); };
  e.hit = [](const Measures& m) {
    bool some_incomplete = !is_set(m, "complete_1") || !is_set(m, "complete_2");
    return some_incomplete && is_set(m, "balanced_1") && is_set(m, "balanced_2") &&
           is_set(m, "balanced_combined") != three_equal(m);
  };
  out.push_back(e);

  for (auto kind : preservation_ops()) {
    e = Entry{};
    e.id = "N-OP-NOT-PRESERVE:" + std::string(to_string(kind));
    e.negative = true;
    e.op = kind;
    e.measure = [kind](const std::vector<FuzzyGraph>& gs) { return pair_measures(gs[0], gs[1], kind, true); };
    e.hit = [](const Measures& m) {
      return is_set(m, "complete_1") && is_set(m, "complete_2") && is_set(m, "balanced_1") &&
             is_set(m, "balanced_2") && m.at("density_1") == m.at("density_2") && !is_set(m, "balanced_combined");
    };
    out.push_back(e);
  }

  for (auto kind : total_regularity_ops()) {
    e = Entry{};
    e.id = "N-TREG-NOT-PRESERVED:" + std::string(to_string(kind));
    e.negative = true;
    e.op = kind;
    e.measure = [kind](const std::vector<FuzzyGraph>& gs) {
      auto tr = [](const FuzzyGraph& g) { return flag(classify(g).totally_regular_degree.has_value()); };
      return Measures{{"totally_regular_1", tr(gs[0])},
                      {"totally_regular_2", tr(gs[1])},
                      {"totally_regular_combined", tr(combine(kind, gs[0], gs[1]))}};
    };
    e.hit = [](const Measures& m) {
      return is_set(m, "totally_regular_1") && is_set(m, "totally_regular_2") &&
             !is_set(m, "totally_regular_combined");
    };
    out.push_back(e);
  }

  auto kn_measure = [](const std::vector<FuzzyGraph>& gs) {
    auto c = classify(gs[0]);
    return Measures{{"complete_shape", flag(complete_shape(gs[0]))},
                    {"constant_sigma", flag(c.constant_sigma.has_value())},
                    {"constant_mu", flag(c.constant_mu.has_value())},
                    {"balanced", flag(balanced(gs[0]))}};
  };
  e = Entry{};
  e.id = "N-KN-NONCONST-SIGMA";
  e.negative = true;
  e.measure = kn_measure;
  e.hit = [](const Measures& m) {
    return is_set(m, "complete_shape") && !is_set(m, "constant_sigma") && is_set(m, "constant_mu") &&
           !is_set(m, "balanced");
  };
  out.push_back(e);

  e = Entry{};
  e.id = "N-KN-NONCONST-MU";
  e.negative = true;
  e.measure = kn_measure;
  e.hit = [](const Measures& m) {
    return is_set(m, "complete_shape") && is_set(m, "constant_sigma") && !is_set(m, "constant_mu") &&
           !is_set(m, "balanced");
  };
  out.push_back(e);
  return out;
}

inline const std::vector<Entry>& catalog() {
  static const std::vector<Entry> entries = [] {
    auto all = build_properties();
    for (auto& c : build_claims()) all.push_back(std::move(c));
    return all;
  }();
  return entries;
}

inline const Entry* find_entry(std::string_view id) {
  for (const auto& e : catalog())
    if (e.id == id) return &e;
  return nullptr;
}

// Two factors whose product has at most 16 vertices.
inline std::pair<FuzzyGraph, FuzzyGraph> sample_factor_pair(const SampleProfile& p, Rng& rng) {
  int n1 = rng.between(1, std::min(p.max_vertices, 8));
  int n2 = rng.between(1, std::min(p.max_vertices, 16 / n1));
  auto g1 = sample_with_order(p, n1, rng, "v");
  auto g2 = sample_with_order(p, n2, rng, "w");
  return {std::move(g1), std::move(g2)};
}

inline std::vector<FuzzyGraph> sample_for_property(const Entry& e, const SampleProfile& p, std::uint64_t seed) {
  Rng rng(seed);
  if (e.id == "P-DIRECT-IFF" || e.id == "P-DIRECT-BAL") {
    auto [g1, g2] = sample_factor_pair(p, rng);
    return {std::move(g1), std::move(g2)};
  }
  auto g = sample_with_order(p, rng.between(1, p.max_vertices), rng);
  if (e.id == "P-ISO-SUMS" || e.id == "P-ISO-BAL") {
    auto h = relabel(g, rng);
    return {std::move(h), std::move(g)};
  }
  return {std::move(g)};
}

inline std::vector<FuzzyGraph> family_instances(Family family, const SampleProfile& p) {
  std::vector<Membership> cs{Membership(1, 4), Membership(1, 2), Membership(1, 1)};
  Membership finest(1, p.grid);
  if (std::find(cs.begin(), cs.end(), finest) == cs.end()) cs.insert(cs.begin(), finest);

  int cap = std::min(p.max_vertices, 12);
  std::vector<FuzzyGraph> out;
  for (const auto& c : cs) {
    switch (family) {
      case Family::CompleteKn:
        for (int n = 1; n <= cap; ++n) out.push_back(generate(family, n, c));
        break;
      case Family::CycleStrong:
        for (int n = 4; n <= cap; ++n) out.push_back(generate(family, n, c));
        break;
      case Family::PetersenStrong: out.push_back(generate(family, 10, c)); break;
      case Family::CompleteBipartiteStrong:
        for (int n = 1; 2 * n <= cap; ++n) out.push_back(generate(family, n, c));
        break;
      default: break;
    }
  }
  return out;
}

// Candidate with a non-constant sigma tuned so every total degree matches.
inline std::optional<FuzzyGraph> totally_regular_candidate(Rng& rng, int grid, const std::string& prefix = "v") {
  int n = rng.between(2, 5);
  std::vector<std::vector<int>> mu(n, std::vector<int>(n, 0));
  std::vector<int> degree(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.coin()) {
        mu[i][j] = rng.between(1, grid);
        degree[i] += mu[i][j];
        degree[j] += mu[i][j];
      }
  int target = *std::max_element(degree.begin(), degree.end()) + rng.between(1, grid);
  std::vector<int> sigma(n);
  for (int i = 0; i < n; ++i) {
    sigma[i] = target - degree[i];
    if (sigma[i] > grid) return std::nullopt;
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (mu[i][j] > std::min(sigma[i], sigma[j])) return std::nullopt;
  return from_grid(numbered_ids(prefix, n), sigma, mu, grid);
}

inline std::vector<FuzzyGraph> claim_candidate(const Entry& e, std::uint64_t seed) {
  Rng rng(seed);
  constexpr int grid = 16;
  if (e.id == "N-STRONG-NOT-COMPLETE") {
    SampleProfile p{Profile::Strong, 5, grid};
    return {sample_with_order(p, rng.between(1, p.max_vertices), rng)};
  }
  if (e.id == "N-CONVERSE-D1") {
    SampleProfile p{Profile::Generic, 5, grid};
    return {sample_with_order(p, rng.between(1, p.max_vertices), rng)};
  }
  if (e.id == "N-DIRECT-NONCOMPLETE") {
    auto [g1, g2] = sample_factor_pair(SampleProfile{Profile::Generic, 4, grid}, rng);
    return {std::move(g1), std::move(g2)};
  }
  if (e.id.rfind("N-OP-NOT-PRESERVE:", 0) == 0) {
    SampleProfile p{Profile::Complete, 4, grid};
    int n1 = rng.between(1, 4);
    auto g1 = sample_with_order(p, n1, rng, "v");
    if (rng.coin()) {
      // Copy of g1 under w-prefixed ids: equal densities by construction.
      std::vector<VertexSpec> vs;
      for (std::size_t i = 0; i < g1.order(); ++i) vs.push_back({"w" + g1.id(i).substr(1), g1.sigma(i)});
      std::vector<EdgeSpec> es;
      for (const auto& ed : g1.edge_specs()) es.push_back({"w" + ed.u.substr(1), "w" + ed.v.substr(1), ed.mu});
      auto g2 = FuzzyGraph::build(std::move(vs), std::move(es));
      return {std::move(g1), std::move(g2)};
    }
    auto g2 = sample_with_order(p, rng.between(1, std::min(4, 16 / n1)), rng, "w");
    return {std::move(g1), std::move(g2)};
  }
  if (e.id.rfind("N-TREG-NOT-PRESERVED:", 0) == 0) {
    // Mix family graphs (constant sigma) with tuned non-constant-sigma ones.
    SampleProfile p{Profile::RegularFamily, 4, grid};
    auto factor = [&](const std::string& prefix) {
      if (rng.coin()) {
        if (auto g = totally_regular_candidate(rng, grid, prefix)) return *g;
      }
      return sample_with_order(p, 0, rng, prefix);
    };
    auto g1 = factor("v");
    auto g2 = factor("w");
    return {std::move(g1), std::move(g2)};
  }
  if (e.id == "N-KN-NONCONST-SIGMA") {
    int n = rng.between(2, 6);
    int m = rng.between(1, grid - 1);
    std::vector<int> sigma(n);
    for (auto& s : sigma) s = rng.between(m, grid);
    std::vector<std::vector<int>> mu(n, std::vector<int>(n, m));
    return {from_grid(numbered_ids("v", n), sigma, mu, grid)};
  }
  if (e.id == "N-KN-NONCONST-MU") {
    int n = rng.between(2, 6);
    int c = rng.between(2, grid);
    std::vector<int> sigma(n, c);
    std::vector<std::vector<int>> mu(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) mu[i][j] = rng.between(1, c);
    return {from_grid(numbered_ids("v", n), sigma, mu, grid)};
  }
  return {};
}

struct Outcome {
  bool applicable = false;
  bool hit = false;
  std::vector<FuzzyGraph> graphs;
  Measures measured;
};

inline Outcome evaluate(const Entry& e, std::vector<FuzzyGraph> graphs) {
  Outcome o;
  o.measured = e.measure(graphs);
  o.applicable = e.applicable(o.measured);
  o.hit = o.applicable && e.hit(o.measured);
  o.graphs = std::move(graphs);
  return o;
}

}  // namespace detail

/// Ids of every proved property, in catalog order.
inline std::vector<std::string> property_ids() {
  std::vector<std::string> ids;
  for (const auto& e : detail::catalog())
    if (!e.negative) ids.push_back(e.id);
  return ids;
}

/// Ids of every negative claim, including one per operation for the
/// parameterized claims ("N-OP-NOT-PRESERVE:composition", ...).
inline std::vector<std::string> claim_ids() {
  std::vector<std::string> ids;
  for (const auto& e : detail::catalog())
    if (e.negative) ids.push_back(e.id);
  return ids;
}

/// The profile `audit all` uses for a property.
inline SampleProfile default_profile(std::string_view property_id) {
  SampleProfile p;
  if (property_id == "P-COMPLETE-D2" || property_id == "P-DIRECT-IFF" || property_id == "P-DIRECT-BAL") {
    p.profile = Profile::Complete;
  } else if (property_id == "P-SELFCOMP-D1" || property_id == "P-HALFMU" || property_id == "P-SELFCOMP-SUM") {
    p.profile = Profile::SelfComplementary;
  } else if (property_id.rfind("P-REG", 0) == 0 || property_id.rfind("P-TREG", 0) == 0) {
    p.profile = Profile::RegularFamily;
  }
  return p;
}

inline FuzzyGraph sample_graph(const SampleProfile& profile, std::uint64_t seed) {
  validate_profile(profile);
  Rng rng(seed);
  return detail::sample_with_order(profile, rng.between(1, profile.max_vertices), rng);
}

/// Recomputes a record's measured values from its graphs alone.
inline Measures measure(std::string_view claim_id, const std::vector<FuzzyGraph>& graphs) {
  const auto* e = detail::find_entry(claim_id);
  if (!e) throw Error(ErrorCode::UnknownClaim, "unknown claim \"" + std::string(claim_id) + "\"");
  return e->measure(graphs);
}

/// True when the stored measurements reproduce exactly and still witness the claim.
inline bool revalidate(const CounterexampleRecord& record) {
  const auto* e = detail::find_entry(record.claim_id);
  if (!e) throw Error(ErrorCode::UnknownClaim, "unknown claim \"" + record.claim_id + "\"");
  auto m = e->measure(record.graphs);
  return m == record.measured && e->applicable(m) && e->hit(m);
}

/// Runs a proved property over `samples` deterministic draws (class theorems
/// run over their generator family instead). Sample i uses
/// derive_seed(seed, i), so any split across `workers` threads yields the
/// same report as a sequential run.
inline AuditReport check_property(std::string_view property_id, std::size_t samples, std::uint64_t seed,
                                  const SampleProfile& profile, unsigned workers = 1) {
  const auto* e = detail::find_entry(property_id);
  if (!e || e->negative) {
    throw Error(ErrorCode::UnknownProperty, "unknown property \"" + std::string(property_id) + "\"");
  }
  validate_profile(profile);
  if (std::find(e->profiles.begin(), e->profiles.end(), profile.profile) == e->profiles.end()) {
    throw Error(ErrorCode::ProfileMismatch, "profile " + std::string(to_string(profile.profile)) +
                                                " cannot satisfy the hypothesis of " + e->id);
  }

  std::vector<std::vector<FuzzyGraph>> inputs;
  std::function<std::vector<FuzzyGraph>(std::size_t)> input_for;
  std::size_t count = samples;
  if (e->family) {
    for (auto& g : detail::family_instances(*e->family, profile)) inputs.push_back({std::move(g)});
    count = inputs.size();
    input_for = [&inputs](std::size_t i) { return inputs[i]; };
  } else {
    input_for = [&](std::size_t i) { return detail::sample_for_property(*e, profile, derive_seed(seed, i)); };
  }

  std::vector<detail::Outcome> outcomes(count);
  auto run_stride = [&](unsigned w, unsigned stride) {
    for (std::size_t i = w; i < count; i += stride) outcomes[i] = detail::evaluate(*e, input_for(i));
  };
  if (workers <= 1) {
    run_stride(0, 1);
  } else {
    std::vector<std::future<void>> jobs;
    for (unsigned w = 0; w < workers; ++w) jobs.push_back(std::async(std::launch::async, run_stride, w, workers));
    for (auto& job : jobs) job.get();
  }

  AuditReport report;
  report.property_id = e->id;
  report.seed = seed;
  for (auto& o : outcomes) {
    if (!o.applicable) {
      ++report.discarded;
      continue;
    }
    ++report.samples_run;
    if (o.hit) {
      ++report.violations;
      if (!report.first_violation) {
        report.first_violation = CounterexampleRecord{e->id, std::move(o.graphs), std::move(o.measured), seed};
      }
    }
  }
  return report;
}

/// Best-effort search for a counterexample to one of the negative claims.
/// Returns nullopt when `budget` candidates are exhausted.
inline std::optional<CounterexampleRecord> search_counterexample(std::string_view claim_id, std::size_t budget,
                                                                 std::uint64_t seed) {
  const auto* e = detail::find_entry(claim_id);
  if (!e || !e->negative) throw Error(ErrorCode::UnknownClaim, "unknown claim \"" + std::string(claim_id) + "\"");

  if (e->id == "N-REG-VS-TREG") {
    // Each direction is searched independently; both must be found.
    std::optional<FuzzyGraph> regular_only, totally_only;
    SampleProfile family{Profile::RegularFamily, 6, 16};
    for (std::size_t i = 0; i < budget && !(regular_only && totally_only); ++i) {
      Rng rng(derive_seed(seed, i));
      if (!regular_only) {
        auto g = detail::sample_with_order(family, 0, rng);
        auto c = classify(g);
        if (c.regular_degree && !c.totally_regular_degree) regular_only = g;
      }
      if (!totally_only) {
        auto g = detail::totally_regular_candidate(rng, 16);
        if (g) {
          auto c = classify(*g);
          if (c.totally_regular_degree && !c.regular_degree) totally_only = g;
        }
      }
    }
    if (!(regular_only && totally_only)) return std::nullopt;
    std::vector<FuzzyGraph> graphs{*regular_only, *totally_only};
    auto m = e->measure(graphs);
    return CounterexampleRecord{e->id, std::move(graphs), std::move(m), seed};
  }

  for (std::size_t i = 0; i < budget; ++i) {
    auto o = detail::evaluate(*e, detail::claim_candidate(*e, derive_seed(seed, i)));
    if (o.hit) return CounterexampleRecord{e->id, std::move(o.graphs), std::move(o.measured), seed};
  }
  return std::nullopt;
}

// Corpus layout: <stem>.g1.json [, <stem>.g2.json] plus <stem>.record.json
// holding claim_id, seed, graph file names and measured values as "p/q".

inline std::string record_stem(const CounterexampleRecord& r) {
  std::string stem = r.claim_id;
  for (auto& ch : stem)
    if (ch == ':') ch = '_';
  return stem + "-" + std::to_string(r.seed);
}

inline std::filesystem::path save_record(const std::filesystem::path& dir, const CounterexampleRecord& r) {
  std::filesystem::create_directories(dir);
  auto stem = record_stem(r);
  nlohmann::json doc;
  doc["claim_id"] = r.claim_id;
  doc["seed"] = r.seed;
  doc["graphs"] = nlohmann::json::array();
  for (std::size_t i = 0; i < r.graphs.size(); ++i) {
    std::string name = stem + ".g" + std::to_string(i + 1) + ".json";
    save_graph((dir / name).string(), r.graphs[i]);
    doc["graphs"].push_back(name);
  }
  doc["measured"] = nlohmann::json::object();
  for (const auto& [key, value] : r.measured) doc["measured"][key] = to_fraction_string(value);
  auto path = dir / (stem + ".record.json");
  write_text_file(path.string(), doc.dump(2) + "\n");
  return path;
}

inline CounterexampleRecord load_record(const std::filesystem::path& path) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(read_text_file(path.string()));
    CounterexampleRecord r;
    r.claim_id = doc.at("claim_id").get<std::string>();
    r.seed = doc.at("seed").get<std::uint64_t>();
    for (const auto& name : doc.at("graphs")) {
      r.graphs.push_back(load_graph((path.parent_path() / name.get<std::string>()).string()));
    }
    for (const auto& [key, value] : doc.at("measured").items()) {
      r.measured[key] = parse_rational(value.get<std::string>());
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::SyntaxError, path.string() + ": " + e.what());
  }
}

}  // namespace fuzzy::audit
