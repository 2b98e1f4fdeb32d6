#pragma once

#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "zemm/multigraph.hpp"

// Spanning forests and the g x n fundamental-cycle matrix. Row i is the
// signed incidence vector of the unique simple cycle through non-tree edge
// e_i and tree edges, oriented so the entry at e_i is +1. With columns
// ordered non-tree-first the leading g x g block is the identity, and the
// columns are the coedges e_j* in the basis e_1*,...,e_g*.

namespace zemm {

struct SpanningForest {
  std::vector<int> tree_edges;
  std::vector<int> nontree_edges;  // length == genus
};

// Breadth-first forest from the least vertex id of each component, ties
// broken by least edge id. Loops are never tree edges.
inline SpanningForest spanning_forest(const Multigraph& g) {
  const detail::AdjacencyView adj(g);
  const std::size_t n = adj.ids.size();
  std::vector<char> seen(n, 0);
  std::set<int> tree;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    seen[s] = 1;
    std::deque<int> queue{static_cast<int>(s)};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (const auto& [w, eid] : adj.nbrs[static_cast<std::size_t>(u)]) {
        if (w == u || seen[static_cast<std::size_t>(w)]) continue;
        seen[static_cast<std::size_t>(w)] = 1;
        tree.insert(eid);
        queue.push_back(w);
      }
    }
  }
  SpanningForest f;
  for (const Edge& e : g.edges()) {
    if (tree.count(e.id))
      f.tree_edges.push_back(e.id);
    else
      f.nontree_edges.push_back(e.id);
  }
  return f;
}

// Prescribed trees (the bold edges of the catalog figures) are honored
// verbatim; the set must be loop-free, acyclic and spanning.
inline SpanningForest spanning_forest(const Multigraph& g, const std::vector<int>& prescribed) {
  std::set<int> tree_set;
  std::map<int, int> uf;  // union-find over vertex ids
  std::function<int(int)> find = [&](int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  for (int v : g.vertices()) uf[v] = v;
  for (int eid : prescribed) {
    const Edge& e = g.edge(eid);  // throws on unknown id
    if (e.tail == e.head) throw std::invalid_argument("prescribed tree contains a loop");
    const int a = find(e.tail), b = find(e.head);
    if (a == b) throw std::invalid_argument("prescribed tree contains a cycle");
    uf[a] = b;
    if (!tree_set.insert(eid).second)
      throw std::invalid_argument("prescribed tree repeats an edge");
  }
  const int components = g.vertex_count() == 0 ? 0 : detail::component_count(g);
  if (static_cast<int>(prescribed.size()) !=
      static_cast<int>(g.vertex_count()) - components)
    throw std::invalid_argument("prescribed tree does not span the graph");
  SpanningForest f;
  f.tree_edges = prescribed;
  for (const Edge& e : g.edges())
    if (!tree_set.count(e.id)) f.nontree_edges.push_back(e.id);
  return f;
}

struct CycleMatrix {
  int rows = 0;  // genus g
  int cols = 0;  // edge count n
  std::vector<int> col_order;  // edge ids, non-tree first
  std::vector<int> entries;    // row-major, values in {-1,0,1}

  int at(int r, int c) const { return entries[static_cast<std::size_t>(r) * cols + c]; }
  int& at(int r, int c) { return entries[static_cast<std::size_t>(r) * cols + c]; }

  int column_of_edge(int edge_id) const {
    for (int c = 0; c < cols; ++c)
      if (col_order[static_cast<std::size_t>(c)] == edge_id) return c;
    throw std::invalid_argument("edge not in cycle matrix");
  }

  std::vector<int> column(int c) const {
    std::vector<int> v(static_cast<std::size_t>(rows));
    for (int r = 0; r < rows; ++r) v[static_cast<std::size_t>(r)] = at(r, c);
    return v;
  }

  bool operator==(const CycleMatrix&) const = default;
};

inline CycleMatrix cycle_matrix(const Multigraph& g, const SpanningForest& f) {
  CycleMatrix m;
  m.rows = static_cast<int>(f.nontree_edges.size());
  m.cols = static_cast<int>(g.edge_count());
  m.col_order = f.nontree_edges;
  m.col_order.insert(m.col_order.end(), f.tree_edges.begin(), f.tree_edges.end());
  if (m.col_order.size() != g.edge_count())
    throw std::invalid_argument("forest does not match graph");
  m.entries.assign(static_cast<std::size_t>(m.rows) * m.cols, 0);

  std::map<int, int> col_of;
  for (int c = 0; c < m.cols; ++c) col_of[m.col_order[static_cast<std::size_t>(c)]] = c;

  // Tree adjacency with signs: following edge tail->head contributes +1.
  std::map<int, std::vector<std::tuple<int, int, int>>> tadj;  // v -> (w, edge, sign)
  for (int eid : f.tree_edges) {
    const Edge& e = g.edge(eid);
    tadj[e.tail].emplace_back(e.head, eid, +1);
    tadj[e.head].emplace_back(e.tail, eid, -1);
  }

  for (int r = 0; r < m.rows; ++r) {
    const int eid = f.nontree_edges[static_cast<std::size_t>(r)];
    const Edge& e = g.edge(eid);
    m.at(r, col_of.at(eid)) = 1;
    if (e.tail == e.head) continue;
    // Tree path head -> tail closes the cycle.
    std::map<int, std::tuple<int, int, int>> prev;  // v -> (parent, edge, sign)
    std::deque<int> queue{e.head};
    prev[e.head] = {e.head, -1, 0};
    while (!queue.empty() && !prev.count(e.tail)) {
      const int u = queue.front();
      queue.pop_front();
      for (const auto& [w, teid, sign] : tadj[u]) {
        if (!prev.count(w)) {
          prev[w] = {u, teid, sign};
          queue.push_back(w);
        }
      }
    }
    if (!prev.count(e.tail))
      throw std::invalid_argument("forest does not span the component of edge " +
                                  std::to_string(eid));
    for (int v = e.tail; v != e.head;) {
      const auto& [parent, teid, sign] = prev.at(v);
      m.at(r, col_of.at(teid)) = sign;
      v = parent;
    }
  }
  return m;
}

}  // namespace zemm
