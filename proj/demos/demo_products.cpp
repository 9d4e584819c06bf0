// Builds every binary operation on two small graphs and prints their densities.

#include <iostream>

#include "fuzzy/fuzzy.hpp"

int main() {
  using namespace fuzzy;

  auto g1 = FuzzyGraph::build({{"a", Membership(1, 1)}, {"b", Membership(3, 5)}}, {{"a", "b", Membership(1, 2)}});
  auto g2 = FuzzyGraph::build({{"x", Membership(4, 5)}, {"y", Membership(1, 1)}, {"z", Membership(1, 2)}},
                              {{"x", "y", Membership(7, 10)}, {"y", "z", Membership(1, 2)}});

  std::cout << "D*(g1) = " << to_fraction_string(star_density(g1).value)
            << ", D*(g2) = " << to_fraction_string(star_density(g2).value) << "\n";
  for (auto kind : kAllOps) {
    auto g = combine(kind, g1, g2);
    std::cout << to_string(kind) << ": " << g.order() << " vertices, " << g.size()
              << " edges, D* = " << to_fraction_string(star_density(g).value)
              << (balance_check(g, DensityMethod::Enumeration).balanced ? ", balanced" : ", not balanced") << "\n";
  }
}
