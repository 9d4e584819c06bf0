// Checks a few graph families for *-balance and shows a non-balanced one.

#include <iostream>

#include "fuzzy/fuzzy.hpp"

int main() {
  using namespace fuzzy;

  for (auto [name, family, n] : {std::tuple{"K_6", Family::CompleteKn, 6}, std::tuple{"C_7", Family::CycleStrong, 7},
                                 std::tuple{"Petersen", Family::PetersenStrong, 10},
                                 std::tuple{"K_3,3", Family::CompleteBipartiteStrong, 3}}) {
    auto g = generate(family, n, Membership(1, 2));
    auto verdict = balance_check(g, DensityMethod::Enumeration);
    std::cout << name << ": D* = " << to_fraction_string(verdict.graph_density.value)
              << (verdict.balanced ? ", balanced\n" : ", not balanced\n");
  }

  // A dense triangle hanging off a light path is not balanced.
  auto g = FuzzyGraph::build({{"a", Membership(1, 1)}, {"b", Membership(1, 1)}, {"c", Membership(1, 1)},
                              {"d", Membership(1, 1)}},
                             {{"a", "b", Membership(1, 1)}, {"b", "c", Membership(1, 1)},
                              {"a", "c", Membership(1, 1)}, {"c", "d", Membership(1, 10)}});
  auto verdict = balance_check(g, DensityMethod::Flow);
  std::cout << "triangle+pendant: D* = " << to_fraction_string(verdict.graph_density.value)
            << ", densest subgraph D* = " << to_fraction_string(verdict.max_subgraph_density.value) << " on";
  for (const auto& id : verdict.witness->members()) std::cout << ' ' << id;
  std::cout << '\n';
}
