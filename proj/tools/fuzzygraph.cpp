// fuzzygraph: command-line front end for the fuzzy graph library.
//
// Exit codes: 0 success / predicate true, 1 predicate false or counterexample
// found, 2 usage or input error.

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fuzzy/fuzzy.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kUsage = 2;

void emit_graph(const fuzzy::FuzzyGraph& g, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << fuzzy::serialize_graph(g);
  } else {
    fuzzy::save_graph(out, g);
  }
}

std::string approx(const fuzzy::Rational& r) {
  std::ostringstream s;
  s << std::setprecision(6) << fuzzy::to_double(r);
  return s.str();
}

std::string density_line(const fuzzy::Density& d) {
  return fuzzy::to_fraction_string(d.value) + " (~" + approx(d.value) + ")";
}

std::string optional_rational(const std::optional<fuzzy::Rational>& r) {
  return r ? fuzzy::to_fraction_string(*r) : std::string("no");
}

fuzzy::DensityMethod parse_method(const std::string& name) {
  if (name == "enum" || name == "enumeration") return fuzzy::DensityMethod::Enumeration;
  if (name == "flow") return fuzzy::DensityMethod::Flow;
  throw fuzzy::Error(fuzzy::ErrorCode::BadParameter, "unknown method \"" + name + "\" (enum|flow)");
}

std::vector<fuzzy::Membership> parse_sigma_list(const std::string& text) {
  std::vector<fuzzy::Membership> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(fuzzy::Membership::parse(item));
  return out;
}

void print_record(const fuzzy::audit::CounterexampleRecord& r) {
  std::cout << "  claim " << r.claim_id << " (seed " << r.seed << ", " << r.graphs.size() << " graph"
            << (r.graphs.size() == 1 ? "" : "s") << ")\n";
  for (const auto& [key, value] : r.measured) std::cout << "    " << key << " = " << fuzzy::to_fraction_string(value) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fuzzy graph density, balance, operations and theorem auditing"};
  app.require_subcommand(1);
  int status = kOk;

  std::string file, file2, out, method = "enum", kind, family, c_text = "1/1", sigma_text, property = "all",
                               profile_name, claim;
  bool show_witness = false;
  int n = 1, max_vertices = -1, grid = -1;
  unsigned workers = 1;
  std::size_t samples = 200, budget = 10000;
  std::uint64_t seed = 1;

  auto* validate = app.add_subcommand("validate", "Check that a graph file is a valid fuzzy graph");
  validate->add_option("file", file)->required();

  auto* density = app.add_subcommand("density", "Print the *-density 2*sum(mu)/sum(sigma)");
  density->add_option("file", file)->required();

  auto* balance = app.add_subcommand("balance", "Decide *-balancedness exactly");
  balance->add_option("file", file)->required();
  balance->add_option("--method", method, "enum or flow")->capture_default_str();
  balance->add_flag("--witness", show_witness, "Print a denser vertex subset when not balanced");

  auto* comp = app.add_subcommand("complement", "Write the complement graph");
  comp->add_option("file", file)->required();
  comp->add_option("-o,--output", out);

  auto* op = app.add_subcommand("op", "Combine two graphs");
  op->add_option("kind", kind, "union|join|cartesian|composition|direct|semidirect|strong")->required();
  op->add_option("g1", file)->required();
  op->add_option("g2", file2)->required();
  op->add_option("-o,--output", out);

  auto* iso = app.add_subcommand("iso", "Search for an isomorphism between two graphs");
  iso->add_option("g1", file)->required();
  iso->add_option("g2", file2)->required();

  auto* cls = app.add_subcommand("classify", "Report complete/strong/regular/constant facts");
  cls->add_option("file", file)->required();

  auto* gen = app.add_subcommand("gen", "Generate a family graph");
  gen->add_option("family", family, "kn|cn|petersen|knn|path|edgeless")->required();
  gen->add_option("--n", n, "Order parameter")->capture_default_str();
  gen->add_option("--c", c_text, "Membership value c as p/q or decimal")->capture_default_str();
  gen->add_option("--sigma", sigma_text, "Comma-separated sigma values overriding the constant c");
  gen->add_option("-o,--output", out);

  auto* audit = app.add_subcommand("audit", "Property-audit the proved claims on seeded samples");
  audit->add_option("--property", property, "Property id or 'all'")->capture_default_str();
  audit->add_option("--samples", samples)->capture_default_str();
  audit->add_option("--seed", seed)->capture_default_str();
  audit->add_option("--max-vertices", max_vertices);
  audit->add_option("--grid", grid);
  audit->add_option("--profile", profile_name, "Override the property's default sampling profile");
  audit->add_option("--workers", workers)->capture_default_str();
  audit->add_option("--out", out, "Directory for violation records");

  auto* search = app.add_subcommand("search", "Search for a counterexample to a negative claim");
  search->add_option("claim", claim)->required();
  search->add_option("--budget", budget)->capture_default_str();
  search->add_option("--seed", seed)->capture_default_str();
  search->add_option("--out", out, "Directory for the counterexample record");

  auto* recheck = app.add_subcommand("recheck", "Re-validate a persisted counterexample record");
  recheck->add_option("record", file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*validate) {
      auto g = fuzzy::load_graph(file);
      std::cout << "valid: " << g.order() << " vertices, " << g.size() << " edges\n";
    } else if (*density) {
      auto g = fuzzy::load_graph(file);
      std::cout << "D* = " << density_line(fuzzy::star_density(g)) << "\n";
    } else if (*balance) {
      auto g = fuzzy::load_graph(file);
      auto verdict = fuzzy::balance_check(g, parse_method(method));
      std::cout << (verdict.balanced ? "balanced" : "not balanced") << "\n";
      std::cout << "D* = " << density_line(verdict.graph_density) << "\n";
      std::cout << "max subgraph D* = " << density_line(verdict.max_subgraph_density) << "\n";
      if (show_witness && verdict.witness) {
        std::cout << "witness:";
        for (const auto& id : verdict.witness->members()) std::cout << " " << id;
        std::cout << "\n";
      }
      status = verdict.balanced ? kOk : kFalse;
    } else if (*comp) {
      emit_graph(fuzzy::complement(fuzzy::load_graph(file)), out);
    } else if (*op) {
      auto k = fuzzy::op_from_name(kind);
      if (!k) throw fuzzy::Error(fuzzy::ErrorCode::BadParameter, "unknown operation \"" + kind + "\"");
      emit_graph(fuzzy::combine(*k, fuzzy::load_graph(file), fuzzy::load_graph(file2)), out);
    } else if (*iso) {
      auto h = fuzzy::find_isomorphism(fuzzy::load_graph(file), fuzzy::load_graph(file2));
      if (h) {
        for (const auto& [from, to] : h->mapping) std::cout << from << " -> " << to << "\n";
      } else {
        std::cout << "not isomorphic\n";
        status = kFalse;
      }
    } else if (*cls) {
      auto g = fuzzy::load_graph(file);
      auto r = fuzzy::classify(g);
      std::cout << "complete: " << (r.is_complete ? "yes" : "no") << "\n"
                << "strong: " << (r.is_strong ? "yes" : "no") << "\n"
                << "regular: " << optional_rational(r.regular_degree) << "\n"
                << "totally regular: " << optional_rational(r.totally_regular_degree) << "\n"
                << "constant sigma: " << optional_rational(r.constant_sigma) << "\n"
                << "constant mu: " << optional_rational(r.constant_mu) << "\n";
    } else if (*gen) {
      auto fam = fuzzy::family_from_name(family);
      if (!fam) throw fuzzy::Error(fuzzy::ErrorCode::BadParameter, "unknown family \"" + family + "\"");
      fuzzy::GeneratorParams params{n, fuzzy::Membership::parse(c_text), std::nullopt};
      if (!sigma_text.empty()) params.sigma_list = parse_sigma_list(sigma_text);
      emit_graph(fuzzy::generate(*fam, params), out);
    } else if (*audit) {
      std::vector<std::string> ids = property == "all" ? fuzzy::audit::property_ids() : std::vector{property};
      for (const auto& id : ids) {
        auto profile = fuzzy::audit::default_profile(id);
        if (!profile_name.empty()) {
          auto p = fuzzy::audit::profile_from_name(profile_name);
          if (!p) throw fuzzy::Error(fuzzy::ErrorCode::BadProfile, "unknown profile \"" + profile_name + "\"");
          profile.profile = *p;
        }
        if (max_vertices > 0) profile.max_vertices = max_vertices;
        if (grid > 0) profile.grid = grid;
        auto report = fuzzy::audit::check_property(id, samples, seed, profile, workers);
        std::cout << report.property_id << ": checked " << report.samples_run << ", discarded " << report.discarded
                  << ", violations " << report.violations << (report.violations ? "  VIOLATED" : "  ok") << "\n";
        if (report.first_violation) {
          print_record(*report.first_violation);
          if (!out.empty()) std::cout << "  saved " << fuzzy::audit::save_record(out, *report.first_violation).string() << "\n";
          status = kFalse;
        }
      }
    } else if (*search) {
      auto record = fuzzy::audit::search_counterexample(claim, budget, seed);
      if (record) {
        std::cout << "found counterexample for " << claim << "\n";
        print_record(*record);
        if (!out.empty()) std::cout << "saved " << fuzzy::audit::save_record(out, *record).string() << "\n";
        status = kFalse;
      } else {
        std::cout << "not found within budget " << budget << "\n";
      }
    } else if (*recheck) {
      auto record = fuzzy::audit::load_record(file);
      bool ok = fuzzy::audit::revalidate(record);
      std::cout << (ok ? "record reproduces" : "record does NOT reproduce") << "\n";
      status = ok ? kOk : kFalse;
    }
  } catch (const fuzzy::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return status;
}
