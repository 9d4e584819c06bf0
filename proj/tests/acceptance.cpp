// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance                 run every criterion
//   acceptance --criterion N   run criterion N only (exit status reflects it)
//
// Expected values are computed here from closed forms or by brute force,
// never by asking the library to check itself.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fuzzy/fuzzy.hpp"

using namespace fuzzy;

namespace {

struct Verdict {
  bool pass = true;
  std::ostringstream note;

  void fail(const std::string& why) {
    if (pass) note << why;
    pass = false;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

const std::vector<Membership>& constants() {
  static const std::vector<Membership> cs{Membership(1, 4), Membership(1, 2), Membership(1, 1)};
  return cs;
}

Rational pair_meet_sum(const FuzzyGraph& g) {
  Rational s = 0;
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t j = i + 1; j < g.order(); ++j) s += std::min(g.sigma(i).value(), g.sigma(j).value());
  return s;
}

std::vector<Rational> degrees(const FuzzyGraph& g) {
  std::vector<Rational> d(g.order(), Rational(0));
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t j = 0; j < g.order(); ++j)
      if (i != j) d[i] += g.mu(i, j).value();
  return d;
}

Rational brute_max_density(const FuzzyGraph& g) {
  Rational best = -1;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << g.order()); ++mask) {
    Rational s = 0, mu = 0;
    for (std::size_t i = 0; i < g.order(); ++i) {
      if (!((mask >> i) & 1)) continue;
      s += g.sigma(i).value();
      for (std::size_t j = i + 1; j < g.order(); ++j)
        if ((mask >> j) & 1) mu += g.mu(i, j).value();
    }
    Rational d = 2 * mu / s;
    if (d > best) best = d;
  }
  return best;
}

FuzzyGraph random_graph(std::uint64_t seed, int max_vertices) {
  return audit::sample_graph({audit::Profile::Generic, max_vertices, 16}, seed);
}

// Random permutation onto fresh ids, written without the library's relabel helper.
FuzzyGraph shuffle_ids(const FuzzyGraph& g, Rng& rng) {
  std::vector<std::size_t> perm(g.order());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  rng.shuffle(perm);
  auto name = [&](std::size_t i) { return "x" + std::to_string(perm[i]); };
  std::vector<VertexSpec> vs;
  for (std::size_t i = 0; i < g.order(); ++i) vs.push_back({name(i), g.sigma(i)});
  std::vector<EdgeSpec> es;
  for (const auto& e : g.edges()) es.push_back({name(e.u), name(e.v), e.mu});
  return FuzzyGraph::build(vs, es);
}

// 1. Exact class densities from the closed forms.
Verdict criterion_1() {
  Verdict v;
  auto start = Clock::now();
  int checked = 0;
  auto expect = [&](const FuzzyGraph& g, const Rational& want, const std::string& what) {
    ++checked;
    if (star_density(g).value != want) v.fail(what + " has D* " + to_fraction_string(star_density(g).value));
  };
  for (const auto& c : constants()) {
    for (int n = 2; n <= 8; ++n) expect(generate(Family::CompleteKn, n, c), n - 1, "K" + std::to_string(n));
    for (int n = 4; n <= 12; ++n) expect(generate(Family::CycleStrong, n, c), 2, "C" + std::to_string(n));
    expect(generate(Family::PetersenStrong, 10, c), 3, "Petersen");
    for (int n = 2; n <= 5; ++n) expect(generate(Family::CompleteBipartiteStrong, n, c), n, "K" + std::to_string(n) + "," + std::to_string(n));
  }
  double t = seconds_since(start);
  if (t >= 1.0) v.fail("took " + std::to_string(t) + " s");
  if (v.pass) v.note << checked << " graphs exact, " << t << " s";
  return v;
}

// 2. Class balancedness by exhaustive enumeration.
Verdict criterion_2() {
  Verdict v;
  auto start = Clock::now();
  int checked = 0;
  auto expect = [&](const FuzzyGraph& g, const std::string& what) {
    ++checked;
    auto verdict = balance_check(g, DensityMethod::Enumeration);
    if (!verdict.balanced) v.fail(what + " reported not balanced");
  };
  for (const auto& c : constants()) {
    for (int n = 1; n <= 7; ++n) expect(generate(Family::CompleteKn, n, c), "K" + std::to_string(n));
    for (int n = 4; n <= 12; ++n) expect(generate(Family::CycleStrong, n, c), "C" + std::to_string(n));
    expect(generate(Family::PetersenStrong, 10, c), "Petersen");
    for (int n = 1; n <= 4; ++n) expect(generate(Family::CompleteBipartiteStrong, n, c), "K" + std::to_string(n) + "," + std::to_string(n));
  }
  double t = seconds_since(start);
  if (t >= 5.0) v.fail("took " + std::to_string(t) + " s");
  if (v.pass) v.note << checked << " graphs balanced, " << t << " s";
  return v;
}

// 3. Self-complementary suite over mu = (sigma ^ sigma) / 2.
Verdict criterion_3() {
  Verdict v;
  int not_self = 0, above_one = 0, bad_sum = 0, wrong_shape = 0;
  std::string first;
  const int samples = 200;
  for (int i = 0; i < samples; ++i) {
    auto g = audit::sample_graph({audit::Profile::SelfComplementary, 8, 16}, derive_seed(1, i));
    for (std::size_t a = 0; a < g.order(); ++a)
      for (std::size_t b = a + 1; b < g.order(); ++b)
        if (2 * g.mu(a, b).value() != std::min(g.sigma(a).value(), g.sigma(b).value())) ++wrong_shape;
    if (!is_self_complementary(g).self_complementary) ++not_self;
    if (g.mu_sum() != pair_meet_sum(g) / 2) ++bad_sum;
    auto d = star_density(g).value;
    if (d > 1) {
      if (!above_one) first = serialize_graph(g);
      ++above_one;
    }
  }
  v.note << samples << " samples: " << not_self << " not self-complementary, " << above_one << " with D* > 1, "
         << bad_sum << " sum mismatches";
  if (wrong_shape || not_self || above_one || bad_sum) {
    v.pass = false;
    if (above_one) {
      std::string compact = first;
      compact.erase(std::remove(compact.begin(), compact.end(), '\n'), compact.end());
      v.note << "; first D* > 1 sample: " << compact;
    }
  }
  return v;
}

// 4. Regularity density formulas with degrees recomputed here.
Verdict criterion_4() {
  Verdict v;
  std::vector<FuzzyGraph> pool;
  for (int i = 0; i < 150; ++i)
    pool.push_back(audit::sample_graph({audit::Profile::RegularFamily, 12, 16}, derive_seed(4, i)));
  Rng rng(4);
  for (int i = 0; i < 100; ++i)
    if (auto g = audit::detail::totally_regular_candidate(rng, 16)) pool.push_back(*g);
  for (const auto& c : constants()) {
    for (int n = 3; n <= 12; ++n) pool.push_back(generate(Family::CycleStrong, n, c));
    pool.push_back(generate(Family::PetersenStrong, 10, c));
  }

  int regular = 0, totally = 0, violations = 0;
  for (const auto& g : pool) {
    auto d = degrees(g);
    Rational p = static_cast<long long>(g.order());
    Rational density = star_density(g).value;
    bool constant_sigma = true;
    for (std::size_t i = 1; i < g.order(); ++i) constant_sigma &= g.sigma(i) == g.sigma(0);
    Rational c = g.sigma(0).value();

    if (std::all_of(d.begin(), d.end(), [&](const Rational& x) { return x == d[0]; })) {
      ++regular;
      Rational r = d[0];
      if (density != p * r / g.sigma_sum()) ++violations;
      if (constant_sigma && density != r / c) ++violations;
    }
    std::vector<Rational> td(g.order());
    for (std::size_t i = 0; i < g.order(); ++i) td[i] = d[i] + g.sigma(i).value();
    if (std::all_of(td.begin(), td.end(), [&](const Rational& x) { return x == td[0]; })) {
      ++totally;
      Rational k = td[0];
      if (density != p * k / g.sigma_sum() - 1) ++violations;
      if (constant_sigma && density != k / c - 1) ++violations;
    }
  }
  v.note << pool.size() << " graphs, " << regular << " regular, " << totally << " totally regular, " << violations
         << " violations";
  if (violations || regular < 100 || totally < 100) v.pass = false;
  return v;
}

// 5. Flow and enumeration agree with each other and with brute force.
Verdict criterion_5() {
  Verdict v;
  auto start = Clock::now();
  const int graphs = 300;
  int largest = 0;
  for (int i = 0; i < graphs; ++i) {
    auto g = random_graph(derive_seed(5, i), 12);
    largest = std::max<int>(largest, g.order());
    auto e = max_density_subgraph(g, DensityMethod::Enumeration).density.value;
    auto f = max_density_subgraph(g, DensityMethod::Flow).density.value;
    if (e != f) v.fail("sample " + std::to_string(i) + ": enumeration " + to_fraction_string(e) + " vs flow " + to_fraction_string(f));
    if (i % 10 == 0 && e != brute_max_density(g)) v.fail("sample " + std::to_string(i) + " disagrees with brute force");
  }
  double t = seconds_since(start);
  if (t >= 30.0) v.fail("took " + std::to_string(t) + " s");
  if (v.pass) v.note << graphs << " graphs up to " << largest << " vertices agree, " << t << " s";
  return v;
}

// 6. Direct-product biconditional over complete balanced factors.
Verdict criterion_6() {
  Verdict v;
  int pairs = 0, iff_violations = 0, bal_violations = 0, attempts = 0;
  std::string first;
  while (pairs < 100 && attempts < 20000) {
    Rng rng(derive_seed(6, attempts++));
    int n1 = rng.between(1, 4);
    int n2 = rng.between(1, 16 / n1 > 4 ? 4 : 16 / n1);
    audit::SampleProfile p{audit::Profile::Complete, 4, 16};
    auto g1 = audit::detail::sample_with_order(p, n1, rng, "a");
    auto g2 = audit::detail::sample_with_order(p, n2, rng, "b");
    if (!classify(g1).is_complete || !classify(g2).is_complete) continue;
    if (brute_max_density(g1) > star_density(g1).value || brute_max_density(g2) > star_density(g2).value) continue;
    ++pairs;
    auto prod = combine(OpKind::Direct, g1, g2);
    Rational d1 = star_density(g1).value, d2 = star_density(g2).value, dp = star_density(prod).value;
    bool equal = d1 == d2 && d2 == dp;
    bool dominated = d1 <= dp && d2 <= dp;
    // Full enumeration of the product; every tenth pair is also brute-forced here.
    auto verdict = balance_check(prod, DensityMethod::Enumeration);
    bool prod_balanced = verdict.balanced;
    if (pairs % 10 == 0 && verdict.max_subgraph_density.value != brute_max_density(prod))
      v.fail("enumeration disagrees with brute force on pair " + std::to_string(pairs));
    if (dominated != equal) ++iff_violations;
    if (prod_balanced != equal) {
      if (!bal_violations) {
        first = "D*(g1)=" + to_fraction_string(d1) + " D*(g2)=" + to_fraction_string(d2) +
                " D*(product)=" + to_fraction_string(dp) + " with product balanced=" + (prod_balanced ? "yes" : "no") +
                " |V1|=" + std::to_string(g1.order()) + " |V2|=" + std::to_string(g2.order());
      }
      ++bal_violations;
    }
  }
  v.note << pairs << " pairs: " << iff_violations << " density-iff violations, " << bal_violations
         << " balance-iff violations";
  if (!first.empty()) v.note << "; first: " << first;
  if (pairs < 100 || iff_violations || bal_violations) v.pass = false;
  return v;
}

// 7. Relabeling leaves every measured quantity unchanged.
Verdict criterion_7() {
  Verdict v;
  const int graphs = 120;
  for (int i = 0; i < graphs; ++i) {
    auto g = random_graph(derive_seed(7, i), 10);
    Rng rng(derive_seed(77, i));
    auto h = shuffle_ids(g, rng);
    std::string tag = "sample " + std::to_string(i) + ": ";
    if (g.sigma_sum() != h.sigma_sum() || g.mu_sum() != h.mu_sum()) v.fail(tag + "sums differ");
    if (star_density(g).value != star_density(h).value) v.fail(tag + "densities differ");
    auto a = balance_check(g, DensityMethod::Enumeration);
    auto b = balance_check(h, DensityMethod::Enumeration);
    if (a.balanced != b.balanced || a.max_subgraph_density.value != b.max_subgraph_density.value)
      v.fail(tag + "balance verdicts differ");
    auto iso = find_isomorphism(g, h);
    if (!iso || !verify_morphism(g, h, *iso)) v.fail(tag + "no valid isomorphism found");
  }
  if (v.pass) v.note << graphs << " relabeled pairs identical";
  return v;
}

// 8. Negative-claim searches with persisted, re-validating records.
Verdict criterion_8() {
  Verdict v;
  auto dir = std::filesystem::temp_directory_path() / "fuzzy_acceptance_records";
  std::filesystem::remove_all(dir);
  for (const auto& claim : {"N-STRONG-NOT-COMPLETE", "N-REG-VS-TREG", "N-CONVERSE-D1"}) {
    auto record = audit::search_counterexample(claim, 10000, 1);
    if (!record) {
      v.fail(std::string(claim) + " not found within 10000");
      continue;
    }
    auto loaded = audit::load_record(audit::save_record(dir, *record));
    if (!audit::revalidate(loaded)) v.fail(std::string(claim) + " record does not re-validate");

    // Independent confirmation of what each record claims.
    const auto& gs = loaded.graphs;
    if (std::string(claim) == "N-STRONG-NOT-COMPLETE") {
      auto c = classify(gs[0]);
      if (!c.is_strong || c.is_complete) v.fail("strong/complete witness is wrong");
    } else if (std::string(claim) == "N-REG-VS-TREG") {
      auto d0 = degrees(gs[0]), d1 = degrees(gs[1]);
      std::set<Rational> r0(d0.begin(), d0.end()), t1;
      std::set<Rational> t0, r1(d1.begin(), d1.end());
      for (std::size_t i = 0; i < gs[0].order(); ++i) t0.insert(d0[i] + gs[0].sigma(i).value());
      for (std::size_t i = 0; i < gs[1].order(); ++i) t1.insert(d1[i] + gs[1].sigma(i).value());
      if (r0.size() != 1 || t0.size() == 1 || t1.size() != 1 || r1.size() == 1) v.fail("regularity witnesses are wrong");
    } else if (star_density(gs[0]).value > 1 || is_self_complementary(gs[0]).self_complementary) {
      v.fail("converse witness is wrong");
    }
  }
  std::ostringstream optional;
  int found = 0, total = 0;
  for (const auto& claim : audit::claim_ids()) {
    if (claim.rfind("N-OP-NOT-PRESERVE", 0) != 0 && claim.rfind("N-KN-NONCONST", 0) != 0) continue;
    ++total;
    bool hit = audit::search_counterexample(claim, 10000, 1).has_value();
    found += hit;
    optional << " " << claim << "=" << (hit ? "found" : "not-found");
  }
  std::filesystem::remove_all(dir);
  if (v.pass) v.note << "3 required records persisted and re-validated";
  v.note << "; optional searches " << found << "/" << total << ":" << optional.str();
  return v;
}

// 9. Structural invariants over a 1000-graph fuzz corpus.
Verdict criterion_9() {
  Verdict v;
  const int graphs = 1000;
  for (int i = 0; i < graphs; ++i) {
    auto g = random_graph(derive_seed(9, i), 8);
    std::string tag = "sample " + std::to_string(i) + ": ";

    if (!(complement(complement(g)) == g)) v.fail(tag + "complement is not an involution");

    Rational degree_total = 0;
    for (const auto& d : degrees(g)) degree_total += d;
    Rational library_total = 0;
    for (const auto& [id, d] : vertex_degrees(g)) library_total += d.degree;
    if (degree_total != 2 * g.mu_sum() || library_total != degree_total) v.fail(tag + "handshake fails");

    if (!(parse_graph(serialize_graph(g)) == g)) v.fail(tag + "round trip changes the graph");

    // Edge-restriction dominance on a W of at most five vertices.
    Rng rng(derive_seed(99, i));
    std::vector<std::string> w;
    for (const auto& id : g.ids())
      if (w.size() < 5 && rng.coin()) w.push_back(id);
    if (w.empty()) w.push_back(g.id(0));
    auto h = induced_subgraph(g, SubVertexSet(w));
    Rational full = 2 * h.mu_sum() / h.sigma_sum();
    for (std::uint32_t f = 0; f < (1U << h.size()); ++f) {
      Rational mu = 0;
      for (std::size_t k = 0; k < h.size(); ++k)
        if ((f >> k) & 1) mu += h.edges()[k].mu.value();
      if (2 * mu / h.sigma_sum() > full) v.fail(tag + "an edge subset beats the induced subgraph");
    }

    // Product edge-set algebra on two small factors.
    auto g1 = random_graph(derive_seed(91, i), 4);
    auto g2 = random_graph(derive_seed(92, i), 4);
    auto cart = combine(OpKind::Cartesian, g1, g2);
    auto dir = combine(OpKind::Direct, g1, g2);
    auto strong = combine(OpKind::Strong, g1, g2);
    auto semi = combine(OpKind::Semidirect, g1, g2);
    auto comp = combine(OpKind::Composition, g1, g2);
    for (std::size_t x = 0; x < strong.order(); ++x)
      for (std::size_t y = x + 1; y < strong.order(); ++y) {
        bool in_c = cart.has_edge(x, y), in_d = dir.has_edge(x, y), in_s = strong.has_edge(x, y);
        if (in_c && in_d) v.fail(tag + "cartesian and direct overlap");
        if (in_s != (in_c || in_d)) v.fail(tag + "strong is not cartesian plus direct");
        if (in_s && !(strong.mu(x, y) == (in_c ? cart.mu(x, y) : dir.mu(x, y)))) v.fail(tag + "strong values differ");
        if (semi.has_edge(x, y) && !in_s) v.fail(tag + "semidirect edge outside strong");
        if (in_c && !comp.has_edge(x, y)) v.fail(tag + "cartesian edge outside composition");
      }
  }
  if (v.pass) v.note << graphs << " graphs, all invariants hold";
  return v;
}

const std::vector<std::pair<std::string, std::function<Verdict()>>>& criteria() {
  static const std::vector<std::pair<std::string, std::function<Verdict()>>> all{
      {"class densities exact", criterion_1},
      {"class balancedness by enumeration", criterion_2},
      {"self-complementary suite", criterion_3},
      {"regularity densities", criterion_4},
      {"flow equals enumeration", criterion_5},
      {"direct-product biconditional", criterion_6},
      {"isomorphism invariance", criterion_7},
      {"negative-claim searches", criterion_8},
      {"invariant suite", criterion_9},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--criterion N]\n";
      return 2;
    }
  }
  if (only < 0 || only > static_cast<int>(criteria().size())) {
    std::cerr << "criterion must be 1.." << criteria().size() << "\n";
    return 2;
  }

  bool all_pass = true;
  for (std::size_t k = 0; k < criteria().size(); ++k) {
    if (only && static_cast<int>(k + 1) != only) continue;
    Verdict v;
    try {
      v = criteria()[k].second();
    } catch (const std::exception& e) {
      v.pass = false;
      v.note << "exception: " << e.what();
    }
    all_pass &= v.pass;
    std::cout << "criterion " << (k + 1) << " [" << criteria()[k].first << "]: " << (v.pass ? "PASS" : "FAIL") << " - "
              << v.note.str() << std::endl;
  }
  return all_pass ? 0 : 1;
}
