#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "zemm/catalog_data.hpp"
#include "zemm/gram.hpp"
#include "zemm/homology.hpp"
#include "zemm/multigraph.hpp"
#include "zemm/search.hpp"
#include "zemm/surgery.hpp"

// Built-in catalog: the genus-6 graph G, the fourteen genus-7 graphs
// F11-F14 and G1-G10 with their prescribed spanning trees, expected cycle
// matrices and reference quadratic forms, the genus-8 graph E42, and a few
// auxiliary graphs (K4, K5, K33, theta, loop) without fixtures.
//
// Edge ids are label-1, so id-ascending column order matches the published
// arrays. A couple of figure edges lack arrowheads in the source drawings;
// their orientations are pinned by requiring the expected cycle matrices to
// be reproduced exactly, which verify_catalog() checks.

namespace zemm {

struct CatalogEntry {
  std::string name;
  Multigraph graph;
  std::vector<int> prescribed_tree;  // empty when the entry has no prescribed tree
  std::optional<CycleMatrix> expected_cycle_matrix;
  std::optional<GramMatrix> reference_gram;
  int expected_genus = 0;
  bool genus7_base = false;  // member of the corpus base family
};

namespace detail {

inline Multigraph build_graph(const std::string& name, std::span<const CatalogEdgeSpec> edges) {
  Multigraph g(name);
  for (const CatalogEdgeSpec& e : edges)
    g.add_edge(e.label - 1, e.tail, e.head, std::to_string(e.label));
  return g;
}

inline std::vector<int> tree_of(std::span<const CatalogEdgeSpec> edges) {
  std::vector<int> tree;
  for (const CatalogEdgeSpec& e : edges)
    if (e.tree) tree.push_back(e.label - 1);
  return tree;
}

template <int R, int C>
CycleMatrix full_cycle_fixture(const int (&rows)[R][C], std::span<const CatalogEdgeSpec> edges) {
  CycleMatrix m;
  m.rows = R;
  m.cols = C;
  for (const CatalogEdgeSpec& e : edges)
    if (!e.tree) m.col_order.push_back(e.label - 1);
  for (const CatalogEdgeSpec& e : edges)
    if (e.tree) m.col_order.push_back(e.label - 1);
  m.entries.reserve(static_cast<std::size_t>(R) * C);
  for (int r = 0; r < R; ++r)
    for (int c = 0; c < C; ++c) m.entries.push_back(rows[r][c]);
  return m;
}

// The genus-7 arrays list only the tree columns; the leading 7x7 identity
// block over the non-tree columns is implicit.
template <int R, int C>
CycleMatrix block_cycle_fixture(const int (&block)[R][C], std::span<const CatalogEdgeSpec> edges) {
  CycleMatrix m;
  m.rows = R;
  m.cols = R + C;
  for (const CatalogEdgeSpec& e : edges)
    if (!e.tree) m.col_order.push_back(e.label - 1);
  for (const CatalogEdgeSpec& e : edges)
    if (e.tree) m.col_order.push_back(e.label - 1);
  m.entries.assign(static_cast<std::size_t>(R) * (R + C), 0);
  for (int r = 0; r < R; ++r) {
    m.at(r, r) = 1;
    for (int c = 0; c < C; ++c) m.at(r, R + c) = block[r][c];
  }
  return m;
}

template <int N>
GramMatrix gram_fixture(const int (&rows)[N][N]) {
  GramMatrix m(N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) m.at(i, j) = rows[i][j];
  return m;
}

inline Multigraph build_complete(const std::string& name, int n) {
  Multigraph g(name);
  for (int v = 0; v < n; ++v) g.add_vertex();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

inline Multigraph build_k33() {
  Multigraph g("K33");
  for (int v = 0; v < 6; ++v) g.add_vertex();
  for (int i = 0; i < 3; ++i)
    for (int j = 3; j < 6; ++j) g.add_edge(i, j);
  return g;
}

}  // namespace detail

inline const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {
      "G",  "F11", "F12", "F13", "F14", "G1",  "G2",  "G3",    "G4",   "G5",  "G6",
      "G7", "G8",  "G9",  "G10", "E42", "K4",  "K5",  "K33",   "theta", "loop"};
  return names;
}

inline const std::vector<std::string>& genus7_base_names() {
  static const std::vector<std::string> names = {"F11", "F12", "F13", "F14", "G1", "G2",
                                                 "G3",  "G4",  "G5",  "G6",  "G7", "G8",
                                                 "G9",  "G10"};
  return names;
}

inline CatalogEntry catalog_get(const std::string& name) {
  using namespace detail;
  CatalogEntry e;
  e.name = name;
  if (name == "G") {
    e.graph = build_graph(name, kEdgesG);
    e.prescribed_tree = tree_of(kEdgesG);
    e.expected_cycle_matrix = full_cycle_fixture(kCycleG, kEdgesG);
    e.reference_gram = gram_fixture(kGramG);
    e.expected_genus = 6;
    return e;
  }
#define ZEMM_CATALOG_GENUS7(NAME)                                 \
  if (name == #NAME) {                                            \
    e.graph = build_graph(name, kEdges##NAME);                    \
    e.prescribed_tree = tree_of(kEdges##NAME);                    \
    e.expected_cycle_matrix = block_cycle_fixture(kCycleBlock##NAME, kEdges##NAME); \
    e.reference_gram = gram_fixture(kGram##NAME);                     \
    e.expected_genus = 7;                                         \
    e.genus7_base = true;                                         \
    return e;                                                     \
  }
  ZEMM_CATALOG_GENUS7(F11)
  ZEMM_CATALOG_GENUS7(F12)
  ZEMM_CATALOG_GENUS7(F13)
  ZEMM_CATALOG_GENUS7(F14)
  ZEMM_CATALOG_GENUS7(G1)
  ZEMM_CATALOG_GENUS7(G2)
  ZEMM_CATALOG_GENUS7(G3)
  ZEMM_CATALOG_GENUS7(G4)
  ZEMM_CATALOG_GENUS7(G5)
  ZEMM_CATALOG_GENUS7(G6)
  ZEMM_CATALOG_GENUS7(G7)
  ZEMM_CATALOG_GENUS7(G8)
  ZEMM_CATALOG_GENUS7(G9)
  ZEMM_CATALOG_GENUS7(G10)
#undef ZEMM_CATALOG_GENUS7
  if (name == "E42") {
    // Two disjoint copies of K33; excluded from corpus generation.
    e.graph = build_graph(name, kEdgesE42);
    e.expected_genus = 8;
    return e;
  }
  if (name == "K4") {
    e.graph = build_complete(name, 4);
    e.expected_genus = 3;
    return e;
  }
  if (name == "K5") {
    e.graph = build_complete(name, 5);
    e.expected_genus = 6;
    return e;
  }
  if (name == "K33") {
    e.graph = build_k33();
    e.expected_genus = 4;
    return e;
  }
  if (name == "theta") {
    Multigraph g("theta");  // alternating orientations, so q(e_3*) = 1 reads 1 = 2 - a[1,2]
    g.add_edge(0, 1);
    g.add_edge(1, 0);
    g.add_edge(0, 1);
    e.graph = std::move(g);
    e.expected_genus = 2;
    return e;
  }
  if (name == "loop") {
    Multigraph g("loop");
    g.add_edge(0, 0);
    e.graph = std::move(g);
    e.expected_genus = 1;
    return e;
  }
  throw std::invalid_argument("unknown catalog graph '" + name + "'");
}

// --- fixture verification -------------------------------------------------

struct CatalogCheck {
  std::string graph;
  std::string check;   // "cycle-matrix", "zemm-certificate", "lattice-class"
  bool pass = false;
  std::string detail;
};

struct CatalogReport {
  std::vector<CatalogCheck> checks;
  int fixtures = 0;

  bool all_pass() const {
    for (const CatalogCheck& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

inline void verify_catalog_entry(const CatalogEntry& e, CatalogReport& report) {
  if (!e.expected_cycle_matrix || !e.reference_gram) return;  // nothing to verify
  ++report.fixtures;
  const SpanningForest f = spanning_forest(e.graph, e.prescribed_tree);

  CatalogCheck cm{e.name, "cycle-matrix", false, ""};
  const CycleMatrix computed = cycle_matrix(e.graph, f);
  if (computed == *e.expected_cycle_matrix) {
    cm.pass = true;
  } else {
    cm.detail = "computed cycle matrix differs from the expected array";
  }
  report.checks.push_back(cm);

  CatalogCheck vz{e.name, "zemm-certificate", false, ""};
  try {
    const VerifyReport v = verify_zemm(e.graph, f, *e.reference_gram);
    vz.pass = v.ok;
    vz.detail = v.failure;
  } catch (const std::invalid_argument& ex) {
    vz.detail = ex.what();
  }
  report.checks.push_back(vz);

  CatalogCheck lc{e.name, "lattice-class", false, ""};
  try {
    const LatticeClass cls = classify(*e.reference_gram);
    if (cls.kind == LatticeKind::E && cls.rank == e.expected_genus) {
      lc.pass = true;
    } else {
      lc.detail = "classified " + to_string(cls.kind) + std::to_string(cls.rank) +
                  " (det " + std::to_string(cls.determinant) + ", " +
                  std::to_string(cls.root_count) + " roots)";
    }
  } catch (const std::invalid_argument& ex) {
    lc.detail = ex.what();
  }
  report.checks.push_back(lc);
}

// Checks every stored fixture: the cycle matrix is reproduced bit-exactly,
// the reference form verifies as a certificate, and its lattice class is
// E_genus. Failures are itemized, never thrown.
inline CatalogReport verify_catalog(const std::vector<CatalogEntry>& entries) {
  CatalogReport report;
  for (const CatalogEntry& e : entries) verify_catalog_entry(e, report);
  return report;
}

inline CatalogReport verify_catalog() {
  std::vector<CatalogEntry> entries;
  for (const std::string& name : catalog_names()) entries.push_back(catalog_get(name));
  return verify_catalog(entries);
}

// --- genus-8 corpus ---------------------------------------------------------

struct CorpusMember {
  std::string name;  // <base>_<kind>_<args>
  std::string base;
  SurgeryStep step;
  Multigraph graph;
};

// One operation of type (a) or (b) applied to each of the 14 genus-7 base
// graphs, in catalog order: 14 * (C(18,2) + 18) = 2394 members.
inline std::vector<CorpusMember> genus8_corpus() {
  std::vector<CorpusMember> out;
  out.reserve(2394);
  for (const std::string& base : genus7_base_names()) {
    const CatalogEntry entry = catalog_get(base);
    for (auto& [step, graph] : enumerate_extensions(entry.graph)) {
      CorpusMember m;
      m.name = extension_name(base, step);
      m.base = base;
      m.step = step;
      m.graph = std::move(graph);
      m.graph.set_name(m.name);
      out.push_back(std::move(m));
    }
  }
  return out;
}

}  // namespace zemm
