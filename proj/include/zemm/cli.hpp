#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zemm/catalog.hpp"
#include "zemm/runner.hpp"
#include "zemm/serialize.hpp"

// Command-line front end. Subcommands: analyze, verify-paper, genus8,
// catalog list|export, classify. Exit codes: 0 success (Found/Trivial for
// analyze), 1 negative outcome (Unsat, failed verification, not positive
// definite), 2 input error, 3 I/O failure. ZEMM_LOG=debug|info|warn|error
// controls stderr logging.

namespace zemm::cli {

enum class LogLevel { Debug = 0, Info = 1, Warn = 2, Error = 3 };

inline LogLevel log_level() {
  const char* env = std::getenv("ZEMM_LOG");
  if (!env) return LogLevel::Warn;
  const std::string v(env);
  if (v == "debug") return LogLevel::Debug;
  if (v == "info") return LogLevel::Info;
  if (v == "warn") return LogLevel::Warn;
  if (v == "error") return LogLevel::Error;
  return LogLevel::Warn;
}

struct Streams {
  std::ostream& out;
  std::ostream& err;

  void log(LogLevel lvl, const std::string& msg) const {
    if (static_cast<int>(lvl) >= static_cast<int>(log_level()))
      err << "[zemm] " << msg << "\n";
  }
};

namespace detail {

inline std::vector<int> parse_id_list(const std::string& spec) {
  std::vector<int> ids;
  std::string token;
  std::istringstream in(spec);
  while (std::getline(in, token, ','))
    if (!token.empty()) ids.push_back(std::stoi(token));
  return ids;
}

struct AnalyzeInput {
  Multigraph graph;
  std::optional<SpanningForest> forest;
};

inline AnalyzeInput load_analyze_input(const std::string& path, const std::string& catalog_name,
                                       const std::string& tree_spec) {
  AnalyzeInput in;
  if (!catalog_name.empty()) {
    const CatalogEntry entry = catalog_get(catalog_name);
    in.graph = entry.graph;
    if (!entry.prescribed_tree.empty())
      in.forest = spanning_forest(in.graph, entry.prescribed_tree);
  } else {
    std::ifstream file(path);
    if (!file) throw std::runtime_error("cannot open '" + path + "'");
    std::stringstream buf;
    buf << file.rdbuf();
    in.graph = parse_edge_list(buf.str());
    if (in.graph.name().empty()) in.graph.set_name(std::filesystem::path(path).stem().string());
  }
  if (!tree_spec.empty()) in.forest = spanning_forest(in.graph, parse_id_list(tree_spec));
  return in;
}

inline void print_result_text(const Streams& io, const std::string& name, const ZemmResult& r) {
  io.out << name << ": " << to_string(r.status);
  if (r.lattice) {
    const bool named_rank = r.lattice->kind == LatticeKind::A || r.lattice->kind == LatticeKind::D ||
                            r.lattice->kind == LatticeKind::E;
    io.out << ", lattice " << to_string(r.lattice->kind);
    if (named_rank) io.out << r.lattice->rank;
    io.out << " (det " << r.lattice->determinant << ", " << r.lattice->root_count << " roots)";
  }
  io.out << ", " << r.nodes_explored << " nodes, " << r.fixed_by_propagation
         << " unknowns fixed by propagation\n";
  if (r.gram) {
    for (int i = 0; i < r.gram->dim; ++i) {
      io.out << " ";
      for (int j = 0; j < r.gram->dim; ++j) io.out << " " << r.gram->at(i, j);
      io.out << "\n";
    }
  }
}

}  // namespace detail

inline int cmd_analyze(const Streams& io, const std::string& path, const std::string& catalog_name,
                       const std::string& tree_spec, const std::string& format) {
  detail::AnalyzeInput input;
  try {
    input = detail::load_analyze_input(path, catalog_name, tree_spec);
  } catch (const std::exception& ex) {
    io.err << "error: " << ex.what() << "\n";
    return 2;
  }
  const ZemmResult r = solve_zemm(input.graph, input.forest);
  if (format == "text")
    detail::print_result_text(io, input.graph.name(), r);
  else
    io.out << to_json(input.graph.name(), r).dump() << "\n";
  return r.status == SolveStatus::Unsat ? 1 : 0;
}

inline int cmd_verify_paper(const Streams& io, const std::string& only) {
  std::vector<CatalogEntry> entries;
  try {
    if (only.empty())
      for (const std::string& name : catalog_names()) entries.push_back(catalog_get(name));
    else
      entries.push_back(catalog_get(only));
  } catch (const std::exception& ex) {
    io.err << "error: " << ex.what() << "\n";
    return 2;
  }
  int checked = 0;
  bool all_pass = true;
  for (const CatalogEntry& e : entries) {
    const CatalogReport report = verify_catalog({e});
    if (report.fixtures == 0) {
      if (!only.empty()) io.out << "skip " << e.name << ": no stored fixtures\n";
      continue;
    }
    ++checked;
    for (const CatalogCheck& c : report.checks)
      if (!c.pass) io.out << "FAIL " << c.graph << " [" << c.check << "] " << c.detail << "\n";
    if (report.all_pass())
      io.out << "ok " << e.name << "\n";
    else
      all_pass = false;
  }
  io.out << (all_pass ? "verified" : "FAILED") << " " << checked << " fixture graph(s)\n";
  return all_pass ? 0 : 1;
}

inline int cmd_genus8(const Streams& io, const Genus8Options& opt) {
  Genus8Summary s;
  try {
    s = run_genus8(opt);
  } catch (const std::invalid_argument& ex) {
    io.err << "error: " << ex.what() << "\n";
    return 2;
  } catch (const std::exception& ex) {
    io.err << "error: " << ex.what() << "\n";
    return 3;
  }
  io.out << "summary Found=" << s.found << " Unsat=" << s.unsat << " total=" << s.total;
  if (opt.resume) io.out << " reused=" << s.reused;
  io.out << "\n";
  return s.ok() ? 0 : 1;
}

inline int cmd_catalog_list(const Streams& io) {
  for (const std::string& name : catalog_names()) {
    const CatalogEntry e = catalog_get(name);
    io.out << name << " vertices=" << e.graph.vertex_count() << " edges=" << e.graph.edge_count()
           << " genus=" << e.expected_genus << (e.reference_gram ? " fixtures=yes" : " fixtures=no")
           << "\n";
  }
  return 0;
}

inline int cmd_catalog_export(const Streams& io, const std::string& name,
                              const std::string& out_path, bool fixtures) {
  CatalogEntry e;
  try {
    e = catalog_get(name);
  } catch (const std::exception& ex) {
    io.err << "error: " << ex.what() << "\n";
    return 2;
  }
  std::string text;
  if (fixtures) {
    Json j;
    j["graph"] = e.name;
    j["expected_genus"] = e.expected_genus;
    j["prescribed_tree"] = e.prescribed_tree;
    j["cycle_matrix"] = e.expected_cycle_matrix ? to_json(*e.expected_cycle_matrix) : Json(nullptr);
    j["gram"] = e.reference_gram ? to_json(*e.reference_gram) : Json(nullptr);
    text = j.dump() + "\n";
  } else {
    text = to_edge_list(e.graph);
  }
  if (out_path.empty()) {
    io.out << text;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    f << text;
    if (!f) {
      io.err << "error: failed writing '" << out_path << "'\n";
      return 3;
    }
  }
  return 0;
}

inline int cmd_classify(const Streams& io, const std::string& path) {
  GramMatrix m;
  try {
    std::ifstream file(path);
    if (!file) throw std::runtime_error("cannot open '" + path + "'");
    Json j;
    file >> j;
    m = gram_from_json(j);
  } catch (const std::exception& ex) {
    io.err << "error: " << ex.what() << "\n";
    return 2;
  }
  try {
    io.out << to_json(classify(m)).dump() << "\n";
  } catch (const std::invalid_argument& ex) {
    io.err << "error: " << ex.what() << "\n";
    return 1;
  }
  return 0;
}

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  const Streams io{out, err};
  CLI::App app{"integral edge-minimizing metrics on multigraphs"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  auto* analyze = app.add_subcommand("analyze", "decide whether a graph admits a Z-emm");
  std::string an_path, an_catalog, an_tree, an_format = "json";
  analyze->add_option("input", an_path, "edge-list file");
  analyze->add_option("--catalog", an_catalog, "built-in graph name instead of a file");
  analyze->add_option("--tree", an_tree, "comma-separated spanning tree edge ids");
  analyze->add_option("--format", an_format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  auto* verify = app.add_subcommand("verify-paper", "check the stored catalog fixtures");
  std::string vp_only;
  verify->add_option("--only", vp_only, "verify a single catalog graph");

  auto* genus8 = app.add_subcommand("genus8", "run the 2394-graph confirmation corpus");
  Genus8Options g8;
  std::string g8_out;
  genus8->add_option("--out", g8_out, "output directory")->required();
  genus8->add_option("--jobs", g8.jobs, "worker threads");
  genus8->add_flag("--resume", g8.resume, "reuse matching records from results.jsonl");
  genus8->add_option("--limit", g8.limit, "stop after this many corpus members");
  genus8->add_option("--base", g8.base, "only extensions of this base graph");
  bool g8_no_graphs = false;
  genus8->add_flag("--no-graphs", g8_no_graphs, "skip writing graph files and manifest");

  auto* catalog = app.add_subcommand("catalog", "inspect the built-in graphs");
  auto* cat_list = catalog->add_subcommand("list", "list catalog graphs");
  auto* cat_export = catalog->add_subcommand("export", "write a graph in edge-list format");
  std::string ce_name, ce_out;
  bool ce_fixtures = false;
  cat_export->add_option("name", ce_name, "catalog graph name")->required();
  cat_export->add_option("--out", ce_out, "output file (default stdout)");
  cat_export->add_flag("--fixtures", ce_fixtures,
                       "emit the stored fixtures (tree, cycle matrix, gram) as JSON");
  catalog->require_subcommand(1);

  auto* classify_cmd = app.add_subcommand("classify", "classify a Gram matrix JSON file");
  std::string cl_path;
  classify_cmd->add_option("gram", cl_path, "JSON file with {dim, entries}")->required();

  std::vector<const char*> argv;
  argv.push_back("zemm");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& ex) {
    std::stringstream msg_out, msg_err;
    const int code = app.exit(ex, msg_out, msg_err);
    out << msg_out.str();
    err << msg_err.str();
    return code == 0 ? 0 : 2;
  }

  if (analyze->parsed()) {
    if (an_path.empty() && an_catalog.empty()) {
      err << "error: analyze needs an input file or --catalog\n";
      return 2;
    }
    return cmd_analyze(io, an_path, an_catalog, an_tree, an_format);
  }
  if (verify->parsed()) return cmd_verify_paper(io, vp_only);
  if (genus8->parsed()) {
    g8.out_dir = g8_out;
    g8.write_graphs = !g8_no_graphs;
    g8.log = log_level() <= LogLevel::Info ? &err : nullptr;
    return cmd_genus8(io, g8);
  }
  if (catalog->parsed()) {
    if (cat_list->parsed()) return cmd_catalog_list(io);
    if (cat_export->parsed()) return cmd_catalog_export(io, ce_name, ce_out, ce_fixtures);
  }
  if (classify_cmd->parsed()) return cmd_classify(io, cl_path);
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace zemm::cli
