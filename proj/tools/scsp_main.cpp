// Copyright 2026 The scsp Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// scsp: command-line front end.
//
// Exit codes: 0 consistent/success, 1 inconsistent (or oracle disagreement),
// 2 input error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "scsp/linearize.hpp"
#include "scsp/oracle.hpp"
#include "scsp/scenario.hpp"
#include "scsp/search.hpp"
#include "scsp/simplex.hpp"

namespace {

using nlohmann::json;
using namespace scsp;

constexpr int kOk = 0;
constexpr int kInconsistent = 1;
constexpr int kInputError = 2;

struct Options {
  bool json = false;
  double eps_angle = 1e-9;
  double eps_strict = 1e-7;
  std::uint64_t seed = 1;
  std::size_t samples = 100000;
  bool no_lp_leaves = false;
  std::string closedness = "exact";
  bool no_compose_equality = false;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

AlgebraOptions algebra_options(const Options& o) {
  AlgebraOptions a;
  a.emit_equality = !o.no_compose_equality;
  a.boundary = o.closedness == "and" ? BoundaryRule::kLogicalAnd : BoundaryRule::kExact;
  return a;
}

SearchConfig search_config(const Options& o) {
  SearchConfig c;
  c.lp_at_leaves = !o.no_lp_leaves;
  c.algebra = algebra_options(o);
  return c;
}

Problem load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_scenario(buffer.str());
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string format_number(double v) {
  if (v == 0.0) v = 0.0;  // drop negative zero
  std::ostringstream out;
  out.precision(12);
  out << v;
  return out.str();
}

json edge_json(const std::optional<Edge>& e, const std::vector<std::string>& names) {
  if (!e) return nullptr;
  return json::array({names[e->from], names[e->to]});
}

json matrix_json(const Network& net) {
  json edges = json::array();
  for (std::size_t i = 0; i < net.size(); ++i) {
    for (std::size_t j = i + 1; j < net.size(); ++j) {
      edges.push_back({{"from", net.names()[i]},
                       {"to", net.names()[j]},
                       {"relation", format_relation(net.at(i, j))}});
    }
  }
  return edges;
}

void print_matrix(const Network& net) {
  for (std::size_t i = 0; i < net.size(); ++i) {
    for (std::size_t j = i + 1; j < net.size(); ++j) {
      std::cout << net.names()[i] << ' ' << net.names()[j] << ' '
                << format_relation(net.at(i, j)) << '\n';
    }
  }
}

std::string refutation_text(const PipelineResult& r) {
  switch (r.refuted_at_step) {
    case 1:
      return "step 1: qualitative " +
             std::string(calculus_name(r.refuting_calculus.value_or(Calculus::kProjectionBased)));
    case 2:
      return "step 2: quantitative path consistency";
    default:
      return "step 3: search";
  }
}

int run_check(const std::string& file, const Options& o, bool with_witness) {
  const Problem problem = load(file);
  const PipelineResult r = solve_pipeline(problem, search_config(o));
  if (o.json) {
    json out = {{"command", with_witness ? "solve" : "check"},
                {"satisfiable", r.satisfiable},
                {"step", r.refuted_at_step},
                {"calculus", r.refuting_calculus
                                 ? json(std::string(calculus_name(*r.refuting_calculus)))
                                 : json(nullptr)},
                {"empty_edge", edge_json(r.empty_edge, problem.names)},
                {"stats",
                 {{"nodes", r.stats.nodes},
                  {"leaves", r.stats.leaves},
                  {"lp_calls", r.stats.lp_calls},
                  {"lp_rejections", r.stats.lp_rejections}}}};
    if (with_witness) {
      json witness = nullptr;
      if (r.witness) {
        witness = json::object();
        for (std::size_t i = 0; i < r.witness->names.size(); ++i) {
          witness[r.witness->names[i]] = {r.witness->points[i].x, r.witness->points[i].y};
        }
      }
      out["witness"] = witness;
      out["scenario"] = r.scenario ? matrix_json(*r.scenario) : json(nullptr);
    }
    std::cout << out.dump(2) << '\n';
  } else if (!r.satisfiable) {
    std::cout << "INCONSISTENT (" << refutation_text(r) << ")\n";
    if (r.empty_edge) {
      std::cout << "empty edge: " << problem.names[r.empty_edge->from] << ' '
                << problem.names[r.empty_edge->to] << '\n';
    }
  } else {
    std::cout << (o.no_lp_leaves ? "CONSISTENT (no LP check)\n" : "CONSISTENT\n");
    if (with_witness && r.witness) {
      for (std::size_t i = 0; i < r.witness->names.size(); ++i) {
        std::cout << r.witness->names[i] << ": (" << format_number(r.witness->points[i].x)
                  << ", " << format_number(r.witness->points[i].y) << ")\n";
      }
    } else if (with_witness && r.scenario) {
      print_matrix(*r.scenario);
    }
  }
  return r.satisfiable ? kOk : kInconsistent;
}

int run_pc(const std::string& file, const Options& o) {
  const Problem problem = load(file);
  Network net = quantitative_network(problem);
  const PathConsistencyResult r = path_consistency(net, algebra_options(o));
  if (o.json) {
    std::cout << json{{"command", "pc"},
                      {"consistent", r.consistent()},
                      {"revisions", r.revisions},
                      {"empty_edge", edge_json(r.empty_edge, net.names())},
                      {"edges", r.consistent() ? matrix_json(net) : json(nullptr)}}
                     .dump(2)
              << '\n';
  } else if (!r.consistent()) {
    std::cout << "EMPTY " << net.names()[r.empty_edge->from] << ' '
              << net.names()[r.empty_edge->to] << '\n';
  } else {
    print_matrix(net);
  }
  return r.consistent() ? kOk : kInconsistent;
}

int run_linearize(const std::string& file, const Options& o) {
  const Problem problem = load(file);
  const Network net = quantitative_network(problem);
  LinearSystem system;
  try {
    system = bsp_to_lp(net);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("not a basic scenario: ") + e.what());
  }
  if (o.json) {
    json rows = json::array();
    for (const LinearRow& row : system.rows) rows.push_back(format_row(row, net.names()));
    std::cout << json{{"command", "linearize"},
                      {"unknowns", system.unknowns},
                      {"rows", rows}}
                     .dump(2)
              << '\n';
  } else {
    for (const LinearRow& row : system.rows) std::cout << format_row(row, net.names()) << '\n';
  }
  return kOk;
}

GeneralRelation literal(const std::string& text) {
  try {
    return parse_relation(text).relation;
  } catch (const ParseError& e) {
    throw InputError("'" + text + "': " + e.what());
  }
}

int run_compose(const std::string& a, const std::string& b, const Options& o) {
  const GeneralRelation lhs = literal(a);
  const GeneralRelation rhs = literal(b);
  const GeneralRelation r = compose(lhs, rhs, algebra_options(o));
  if (o.json) {
    std::cout << json{{"command", "compose"}, {"result", format_relation(r)}}.dump(2) << '\n';
  } else {
    std::cout << format_relation(r) << '\n';
  }
  return kOk;
}

int run_tables(const std::string& which, const Options& o) {
  const Calculus c = which == "cs" ? Calculus::kConeShaped : Calculus::kProjectionBased;
  const CompositionTable table = CompositionTable::derive(c, algebra_options(o));
  if (o.json) {
    json entries = json::object();
    for (Direction r : kAllDirections) {
      for (Direction s : kAllDirections) {
        json atoms = json::array();
        for (const Atom& a : table.entry(r, s).atoms()) {
          atoms.push_back(std::string(direction_name(a.name)));
        }
        entries[std::string(direction_name(r))][std::string(direction_name(s))] = atoms;
      }
    }
    std::cout << json{{"command", "tables"}, {"calculus", which}, {"entries", entries}}.dump(2)
              << '\n';
  } else {
    std::cout << table.to_text();
  }
  return kOk;
}

int run_oracle(const std::string& file, const Options& o) {
  const Problem problem = load(file);
  const Network net = quantitative_network(problem);
  OracleBudget budget;
  budget.samples = o.samples;
  budget.seed = o.seed;
  const std::optional<Witness> sampled = sample_witness(net, budget);
  const PipelineResult solved = solve_pipeline(problem, search_config(o));
  // Only a sampled witness against an UNSAT verdict is a disagreement.
  const bool disagree = sampled.has_value() && !solved.satisfiable;
  if (o.json) {
    std::cout << json{{"command", "oracle"},
                      {"sampled_witness", sampled.has_value()},
                      {"solver_satisfiable", solved.satisfiable},
                      {"agree", !disagree}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << "oracle: " << (sampled ? "witness found" : "no witness (inconclusive)") << '\n'
              << "solver: " << (solved.satisfiable ? "CONSISTENT" : "INCONSISTENT") << '\n'
              << (disagree ? "DISAGREE" : "AGREE") << '\n';
    if (sampled) {
      for (std::size_t i = 0; i < sampled->names.size(); ++i) {
        std::cout << sampled->names[i] << ": (" << format_number(sampled->points[i].x) << ", "
                  << format_number(sampled->points[i].y) << ")\n";
      }
    }
  }
  return disagree ? kInconsistent : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spatial constraint satisfaction over cardinal directions and sectors"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "Structured output");
  app.add_option("--eps-angle", o.eps_angle, "Angle comparison tolerance")
      ->check(CLI::PositiveNumber);
  app.add_option("--eps-strict", o.eps_strict, "Minimum LP margin for strict rows")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", o.seed, "Oracle random seed");
  app.add_option("--samples", o.samples, "Oracle sample budget")->check(CLI::PositiveNumber);
  app.add_flag("--no-lp-leaves", o.no_lp_leaves, "Stop at path-consistent scenarios");
  app.add_option("--closedness", o.closedness, "Composition bound rule")
      ->check(CLI::IsMember({"exact", "and"}));
  app.add_flag("--no-compose-equality", o.no_compose_equality,
               "Never add equality to compositions");

  std::string file;
  std::string first;
  std::string second;
  std::string which;
  auto* check = app.add_subcommand("check", "Consistency verdict");
  check->add_option("file", file)->required();
  auto* solve = app.add_subcommand("solve", "Witness or refutation");
  solve->add_option("file", file)->required();
  auto* pc = app.add_subcommand("pc", "Path-consistent refinement");
  pc->add_option("file", file)->required();
  auto* linearize = app.add_subcommand("linearize", "Linear rows of a basic scenario");
  linearize->add_option("file", file)->required();
  auto* compose_cmd = app.add_subcommand("compose", "Compose two relation literals");
  compose_cmd->add_option("r", first)->required();
  compose_cmd->add_option("s", second)->required();
  auto* tables = app.add_subcommand("tables", "Derived composition table");
  tables->add_option("calculus", which)->required()->check(CLI::IsMember({"cs", "pb"}));
  auto* oracle = app.add_subcommand("oracle", "Cross-check against rejection sampling");
  oracle->add_option("file", file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }
  tolerance().angle = o.eps_angle;
  tolerance().strict = o.eps_strict;

  try {
    if (*check) return run_check(file, o, false);
    if (*solve) return run_check(file, o, true);
    if (*pc) return run_pc(file, o);
    if (*linearize) return run_linearize(file, o);
    if (*compose_cmd) return run_compose(first, second, o);
    if (*tables) return run_tables(which, o);
    if (*oracle) return run_oracle(file, o);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const NumericalInstability& e) {
    std::cerr << "error: numerical instability: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
