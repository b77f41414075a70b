#include "regcyc/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "regcyc/bounds.hpp"
#include "regcyc/constructions.hpp"
#include "regcyc/cycles.hpp"
#include "regcyc/density.hpp"
#include "regcyc/dtw.hpp"
#include "regcyc/edge_list.hpp"
#include "regcyc/menger.hpp"
#include "regcyc/witness_json.hpp"

namespace regcyc {

namespace {

struct Globals {
  std::uint64_t seed = 0;
  int jobs = 0;
  bool json = false;
};

Digraph load(const std::string& path) {
  if (path == "-") return read_digraph(std::cin);
  return read_digraph_file(path);
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::kSoundness:
    case ErrorCode::kUnverifiedCertificate:
    case ErrorCode::kNoMajorityComponent:
      return kExitFailure;
    default:
      return kExitUsage;
  }
}

void emit_graph(std::ostream& out, const Digraph& d, bool dot) {
  if (dot) {
    write_dot(out, d);
  } else {
    write_edge_list(out, d);
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Openly disjoint cycles, density and linked-set certificates for digraphs", "regcyc"};
  app.require_subcommand(1);
  Globals globals;
  app.add_option("--seed", globals.seed, "Seed for randomized generators and heuristics");
  app.add_option("--jobs", globals.jobs, "Worker threads for shardable searches (0 = default)")
      ->check(CLI::NonNegativeNumber);
  app.add_flag("--json", globals.json, "Emit a single JSON document");

  std::optional<int> status;
  auto fallthrough = [](CLI::App* sub) { sub->fallthrough(); };

  // c
  std::string c_file;
  auto* c_cmd = app.add_subcommand("c", "Compute c(D) with a maximum packing witness");
  c_cmd->add_option("file", c_file, "Edge-list file ('-' for stdin)")->required();
  c_cmd->callback([&] {
    auto d = load(c_file);
    auto result = c_number(d, globals.jobs);
    if (globals.json) {
      out << Json{{"c", result.c}, {"witness", to_json(result.best)}}.dump() << '\n';
    } else {
      out << result.c << '\n' << to_json(result.best).dump() << '\n';
    }
    status = kExitOk;
  });
  fallthrough(c_cmd);

  // cycles
  std::string cycles_file;
  Vertex hub = 0;
  auto* cycles_cmd = app.add_subcommand("cycles", "Maximum packing of openly disjoint cycles at a hub");
  cycles_cmd->add_option("file", cycles_file)->required();
  cycles_cmd->add_option("--hub", hub)->required();
  cycles_cmd->callback([&] {
    auto d = load(cycles_file);
    d.check_vertex(hub);
    out << to_json(cycles_through(d, hub)).dump() << '\n';
    status = kExitOk;
  });
  fallthrough(cycles_cmd);

  // menger
  std::string menger_file;
  std::vector<Vertex> sources, sinks;
  auto* menger_cmd = app.add_subcommand("menger", "Maximum disjoint path family and minimum separator");
  menger_cmd->add_option("file", menger_file)->required();
  menger_cmd->add_option("--U", sources, "Source vertices")->required()->delimiter(',');
  menger_cmd->add_option("--W", sinks, "Sink vertices")->required()->delimiter(',');
  menger_cmd->callback([&] {
    auto d = load(menger_file);
    VertexSet u(sources), w(sinks);
    auto result = max_disjoint_paths(d, u, w);
    Json doc{{"paths", to_json(result.family)}, {"separator", to_json(result.separator, u, w)}};
    if (!globals.json) out << "paths=" << result.family.size() << " separator=" << result.separator.cut.size() << '\n';
    out << doc.dump() << '\n';
    status = kExitOk;
  });
  fallthrough(menger_cmd);

  // dense
  std::string dense_file;
  int dense_r = 1;
  std::string beta_text, gamma_text;
  bool exact = false, heuristic = false;
  int cap = 20;
  auto* dense_cmd = app.add_subcommand("dense", "Extract a dense subdigraph without sparse balanced cuts");
  dense_cmd->add_option("file", dense_file)->required();
  dense_cmd->add_option("--r", dense_r)->required()->check(CLI::PositiveNumber);
  dense_cmd->add_option("--beta", beta_text, "Rational p/q")->required();
  dense_cmd->add_option("--gamma", gamma_text, "Rational p/q")->required();
  auto* exact_flag = dense_cmd->add_flag("--exact", exact, "Exhaustive partition search (default)");
  dense_cmd->add_flag("--heuristic", heuristic, "Seeded local search")->excludes(exact_flag);
  dense_cmd->add_option("--cap", cap, "Vertex cap for exact search");
  dense_cmd->callback([&] {
    auto d = load(dense_file);
    Rational beta = parse_rational(beta_text);
    Rational gamma = parse_rational(gamma_text);
    if (beta <= 0 || gamma <= 0) throw Error(ErrorCode::kInvalidArgument, "beta and gamma must be positive");
    PartitionSearchOptions options;
    options.mode = heuristic ? SearchMode::kHeuristic : SearchMode::kExact;
    options.exact_cap = cap;
    options.seed = globals.seed;
    options.jobs = globals.jobs;
    auto result = dense_subdigraph(d, dense_r, beta, gamma, options);
    Json doc{{"r", dense_r},
             {"beta", format_rational(beta)},
             {"gamma", format_rational(gamma)},
             {"transcript", to_json(result.witness)}};
    out << doc.dump() << '\n';
    status = kExitOk;
  });
  fallthrough(dense_cmd);

  // linked
  std::string linked_file;
  std::vector<Vertex> linked_ids;
  int linked_k = 1;
  std::uint64_t budget = kDefaultSubsetBudget;
  auto* linked_cmd = app.add_subcommand("linked", "Check that L is k-linked (certifies dtw >= k-1)");
  linked_cmd->add_option("file", linked_file)->required();
  linked_cmd->add_option("--L", linked_ids)->required()->delimiter(',');
  linked_cmd->add_option("--k", linked_k)->required()->check(CLI::PositiveNumber);
  linked_cmd->add_option("--budget", budget, "Maximum number of deletion sets");
  linked_cmd->callback([&] {
    auto d = load(linked_file);
    LinkedCertificate cert{VertexSet(linked_ids), linked_k, 0};
    auto check = check_k_linked(d, cert.linked, cert.k, budget, globals.jobs);
    if (check.linked) {
      cert.verified_upto = cert.k;
      out << to_json(cert).dump() << '\n';
      status = kExitOk;
    } else {
      Json doc{{"L", to_json(cert.linked)}, {"k", cert.k}, {"linked", false},
               {"failing_S", to_json(*check.failing)}};
      out << doc.dump() << '\n';
      status = kExitFailure;
    }
  });
  fallthrough(linked_cmd);

  // trace1
  std::string trace_file;
  bool trace_heuristic = false;
  auto* trace_cmd = app.add_subcommand("trace1", "Replay the c(D) >= ceil(3r/22) argument");
  trace_cmd->add_option("file", trace_file)->required();
  trace_cmd->add_flag("--heuristic", trace_heuristic, "Heuristic dense-subdigraph search");
  trace_cmd->add_option("--cap", cap, "Vertex cap for exact search");
  trace_cmd->callback([&] {
    auto d = load(trace_file);
    TraceOptions options;
    options.search.mode = trace_heuristic ? SearchMode::kHeuristic : SearchMode::kExact;
    options.search.exact_cap = cap;
    options.search.seed = globals.seed;
    options.search.jobs = globals.jobs;
    options.jobs = globals.jobs;
    out << to_json(theorem1_trace(d, options)).dump() << '\n';
    status = kExitOk;
  });
  fallthrough(trace_cmd);

  // cert2
  std::string cert_file;
  bool cert_heuristic = false;
  auto* cert_cmd = app.add_subcommand("cert2", "Linked-set certificate for dtw(D) >= floor(r/20)");
  cert_cmd->add_option("file", cert_file)->required();
  cert_cmd->add_flag("--heuristic", cert_heuristic, "Heuristic dense-subdigraph search");
  cert_cmd->add_option("--cap", cap, "Vertex cap for exact search");
  cert_cmd->add_option("--budget", budget, "Maximum number of deletion sets");
  cert_cmd->callback([&] {
    auto d = load(cert_file);
    Theorem2Options options;
    options.search.mode = cert_heuristic ? SearchMode::kHeuristic : SearchMode::kExact;
    options.search.exact_cap = cap;
    options.search.seed = globals.seed;
    options.search.jobs = globals.jobs;
    options.budget = budget;
    options.jobs = globals.jobs;
    auto result = theorem2_certificate(d, options);
    out << to_json(result).dump() << '\n';
    status = result.verified ? kExitOk : kExitFailure;
  });
  fallthrough(cert_cmd);

  // bounds
  int bounds_r = 1;
  auto* bounds_cmd = app.add_subcommand("bounds", "Closed-form bounds for r-regular digraphs");
  bounds_cmd->add_option("--r", bounds_r)->required()->check(CLI::PositiveNumber);
  bounds_cmd->callback([&] {
    auto report = theorem_bounds(bounds_r);
    if (globals.json) {
      out << to_json(report).dump() << '\n';
    } else {
      out << "c_lower=" << report.c_lower << " c_upper=" << report.c_upper
          << " c_upper_capped=" << report.c_upper_capped << " dtw_lower=" << report.dtw_lower
          << " limit=[" << format_rational(report.limit_lower) << ","
          << format_rational(report.limit_upper) << "]\n";
    }
    status = kExitOk;
  });
  fallthrough(bounds_cmd);

  // gen
  bool dot = false;
  auto* gen_cmd = app.add_subcommand("gen", "Generate digraphs in edge-list format");
  gen_cmd->require_subcommand(1);
  gen_cmd->add_flag("--dot", dot, "Emit Graphviz DOT instead of an edge list");
  fallthrough(gen_cmd);

  int wall_k = 1;
  auto* wall_cmd = gen_cmd->add_subcommand("wall", "Cylindrical wall of order k");
  wall_cmd->add_option("k", wall_k)->required();
  wall_cmd->callback([&] {
    emit_graph(out, cylindrical_wall(wall_k).graph, dot);
    status = kExitOk;
  });
  fallthrough(wall_cmd);

  int complete_n = 1;
  auto* complete_cmd = gen_cmd->add_subcommand("complete", "Complete biorientation on n vertices");
  complete_cmd->add_option("n", complete_n)->required();
  complete_cmd->callback([&] {
    emit_graph(out, complete_biorientation(complete_n), dot);
    status = kExitOk;
  });
  fallthrough(complete_cmd);

  std::string blow_file;
  int blow_b = 1;
  auto* blow_cmd = gen_cmd->add_subcommand("blowup", "Blow each vertex up into b copies");
  blow_cmd->add_option("file", blow_file)->required();
  blow_cmd->add_option("b", blow_b)->required();
  blow_cmd->callback([&] {
    emit_graph(out, blow_up(load(blow_file), blow_b), dot);
    status = kExitOk;
  });
  fallthrough(blow_cmd);

  int reg_n = 1, reg_r = 1;
  auto* reg_cmd = gen_cmd->add_subcommand("regular", "Random r-regular digraph on n vertices");
  reg_cmd->add_option("n", reg_n)->required();
  reg_cmd->add_option("r", reg_r)->required();
  reg_cmd->callback([&] {
    emit_graph(out, random_regular_digraph(reg_n, reg_r, globals.seed), dot);
    status = kExitOk;
  });
  fallthrough(reg_cmd);

  std::string join_first, join_second;
  auto* join_cmd = gen_cmd->add_subcommand("join", "Union plus all arcs from the second into the first");
  join_cmd->add_option("file1", join_first)->required();
  join_cmd->add_option("file2", join_second)->required();
  join_cmd->callback([&] {
    emit_graph(out, join_construction(load(join_first), load(join_second)), dot);
    status = kExitOk;
  });
  fallthrough(join_cmd);

  // verify
  std::string witness_file, verify_file;
  auto* verify_cmd = app.add_subcommand("verify", "Check a JSON witness against a digraph");
  verify_cmd->add_option("witness", witness_file)->required();
  verify_cmd->add_option("file", verify_file)->required();
  verify_cmd->callback([&] {
    std::ifstream in(witness_file);
    if (!in) throw Error(ErrorCode::kParse, "cannot open " + witness_file);
    Json doc;
    try {
      doc = Json::parse(in);
    } catch (const Json::exception& e) {
      throw Error(ErrorCode::kParse, e.what());
    }
    auto d = load(verify_file);
    bool ok = verify_witness(doc, d);
    if (globals.json) {
      out << Json{{"valid", ok}}.dump() << '\n';
    } else {
      out << (ok ? "valid" : "invalid") << '\n';
    }
    status = ok ? kExitOk : kExitFailure;
  });
  fallthrough(verify_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
  return status.value_or(kExitUsage);
}

int cli_main(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace regcyc
