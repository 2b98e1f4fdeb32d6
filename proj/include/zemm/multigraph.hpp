#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

// Multigraphs with loops and parallel edges, plus the structural queries the
// rest of the library is built on: genus, bridges, trivalence, and the
// decomposition into cohomology-irreducible pieces.
//
// Graphs are value types. Analysis functions never mutate their input and the
// surgery operations elsewhere return fresh graphs, so instances can be shared
// across threads freely once built.

namespace zemm {

struct Edge {
  int id = -1;
  int tail = -1;
  int head = -1;   // orientation tail->head is fixed at construction
  std::string label;
};

enum class ComponentKind { SimpleLoop, TwoConnectedLoopless };

struct IrreducibleComponent {
  ComponentKind kind = ComponentKind::SimpleLoop;
  std::vector<int> edge_ids;  // ascending
};

class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(std::string name) : name_(std::move(name)) {}

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  int add_vertex() {
    const int id = next_vertex_id_++;
    vertices_.push_back(id);
    return id;
  }

  void add_vertex(int id) {
    if (id < 0) throw std::invalid_argument("vertex id must be non-negative");
    const auto it = std::lower_bound(vertices_.begin(), vertices_.end(), id);
    if (it != vertices_.end() && *it == id) return;
    vertices_.insert(it, id);
    next_vertex_id_ = std::max(next_vertex_id_, id + 1);
  }

  int add_edge(int tail, int head, std::string label = "") {
    const int id = next_edge_id_;
    add_edge(id, tail, head, std::move(label));
    return id;
  }

  void add_edge(int id, int tail, int head, std::string label = "") {
    if (id < 0) throw std::invalid_argument("edge id must be non-negative");
    const auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                                     [](const Edge& e, int v) { return e.id < v; });
    if (it != edges_.end() && it->id == id)
      throw std::invalid_argument("duplicate edge id " + std::to_string(id));
    add_vertex(tail);
    add_vertex(head);
    edges_.insert(it, Edge{id, tail, head, std::move(label)});
    next_edge_id_ = std::max(next_edge_id_, id + 1);
  }

  void remove_edge(int id) {
    const auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                                     [](const Edge& e, int v) { return e.id < v; });
    if (it == edges_.end() || it->id != id)
      throw std::invalid_argument("unknown edge id " + std::to_string(id));
    edges_.erase(it);
  }

  void remove_vertex(int id) {
    for (const Edge& e : edges_)
      if (e.tail == id || e.head == id)
        throw std::invalid_argument("vertex " + std::to_string(id) + " still has incident edges");
    const auto it = std::lower_bound(vertices_.begin(), vertices_.end(), id);
    if (it != vertices_.end() && *it == id) vertices_.erase(it);
  }

  bool has_vertex(int id) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), id);
  }

  bool has_edge(int id) const {
    const auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                                     [](const Edge& e, int v) { return e.id < v; });
    return it != edges_.end() && it->id == id;
  }

  const Edge& edge(int id) const {
    const auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                                     [](const Edge& e, int v) { return e.id < v; });
    if (it == edges_.end() || it->id != id)
      throw std::invalid_argument("unknown edge id " + std::to_string(id));
    return *it;
  }

  Edge& mutable_edge(int id) { return const_cast<Edge&>(std::as_const(*this).edge(id)); }

  const std::vector<int>& vertices() const { return vertices_; }    // ascending
  const std::vector<Edge>& edges() const { return edges_; }         // ascending by id
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  int degree(int v) const {
    int d = 0;
    for (const Edge& e : edges_) {
      if (e.tail == v) ++d;
      if (e.head == v) ++d;  // a loop contributes 2
    }
    return d;
  }

  int fresh_vertex_id() const { return next_vertex_id_; }
  int fresh_edge_id() const { return next_edge_id_; }

 private:
  std::string name_;
  std::vector<int> vertices_;
  std::vector<Edge> edges_;
  int next_vertex_id_ = 0;
  int next_edge_id_ = 0;
};

namespace detail {

// Position-indexed adjacency; vertex ids need not be dense after contraction.
struct AdjacencyView {
  std::vector<int> ids;                                 // ascending vertex ids
  std::map<int, int> index_of;                          // id -> position
  std::vector<std::vector<std::pair<int, int>>> nbrs;   // (neighbor pos, edge id), edge-id ascending

  explicit AdjacencyView(const Multigraph& g) : ids(g.vertices()) {
    for (std::size_t i = 0; i < ids.size(); ++i) index_of[ids[i]] = static_cast<int>(i);
    nbrs.resize(ids.size());
    for (const Edge& e : g.edges()) {
      const int t = index_of.at(e.tail);
      const int h = index_of.at(e.head);
      nbrs[static_cast<std::size_t>(t)].emplace_back(h, e.id);
      if (t != h) nbrs[static_cast<std::size_t>(h)].emplace_back(t, e.id);
    }
    for (auto& v : nbrs)
      std::sort(v.begin(), v.end(),
                [](const auto& a, const auto& b) { return a.second < b.second; });
  }
};

inline int component_count(const Multigraph& g) {
  const AdjacencyView adj(g);
  const std::size_t n = adj.ids.size();
  std::vector<char> seen(n, 0);
  int comps = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++comps;
    std::vector<int> stack{static_cast<int>(s)};
    seen[s] = 1;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (const auto& [w, eid] : adj.nbrs[static_cast<std::size_t>(u)]) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  return comps;
}

}  // namespace detail

// First Betti number |E| - |V| + #components.
inline int genus(const Multigraph& g) {
  if (g.vertex_count() == 0) return 0;
  return static_cast<int>(g.edge_count()) - static_cast<int>(g.vertex_count()) +
         detail::component_count(g);
}

// Edges whose removal increases the component count. Loops are never bridges;
// a parallel edge acts as a back edge because only the entering edge id is
// skipped, not the whole neighbor.
inline std::set<int> bridges(const Multigraph& g) {
  const detail::AdjacencyView adj(g);
  const int n = static_cast<int>(adj.ids.size());
  std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  std::set<int> result;
  int timer = 0;

  // Iterative DFS, frame = (vertex, entering edge id, next neighbor index).
  struct Frame {
    int v;
    int in_edge;
    std::size_t next = 0;
  };
  for (int s = 0; s < n; ++s) {
    if (disc[static_cast<std::size_t>(s)] != -1) continue;
    std::vector<Frame> stack{{s, -1}};
    disc[static_cast<std::size_t>(s)] = low[static_cast<std::size_t>(s)] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& nb = adj.nbrs[static_cast<std::size_t>(f.v)];
      if (f.next < nb.size()) {
        const auto [w, eid] = nb[f.next++];
        if (eid == f.in_edge || w == f.v) continue;  // entering edge or loop
        if (disc[static_cast<std::size_t>(w)] == -1) {
          disc[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = timer++;
          stack.push_back({w, eid});
        } else {
          low[static_cast<std::size_t>(f.v)] =
              std::min(low[static_cast<std::size_t>(f.v)], disc[static_cast<std::size_t>(w)]);
        }
      } else {
        const Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          Frame& parent = stack.back();
          low[static_cast<std::size_t>(parent.v)] =
              std::min(low[static_cast<std::size_t>(parent.v)],
                       low[static_cast<std::size_t>(done.v)]);
          if (low[static_cast<std::size_t>(done.v)] > disc[static_cast<std::size_t>(parent.v)])
            result.insert(done.in_edge);
        }
      }
    }
  }
  return result;
}

inline bool is_trivalent(const Multigraph& g) {
  for (int v : g.vertices())
    if (g.degree(v) != 3) return false;
  return true;
}

// Cohomology-irreducible components: every loop is a SimpleLoop component,
// bridges belong to no component, and the remaining edges split into
// biconnected blocks (loopless and 2-connected). Components are returned
// ordered by their smallest edge id.
inline std::vector<IrreducibleComponent> irreducible_components(const Multigraph& g) {
  std::vector<IrreducibleComponent> out;
  for (const Edge& e : g.edges())
    if (e.tail == e.head) out.push_back({ComponentKind::SimpleLoop, {e.id}});

  // Block decomposition over non-loop edges via low-link with an edge stack.
  const detail::AdjacencyView adj(g);
  const int n = static_cast<int>(adj.ids.size());
  std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  std::vector<std::pair<int, int>> edge_stack;  // (edge id, child vertex pos)
  int timer = 0;

  struct Frame {
    int v;
    int in_edge;
    std::size_t next = 0;
  };
  for (int s = 0; s < n; ++s) {
    if (disc[static_cast<std::size_t>(s)] != -1) continue;
    std::vector<Frame> stack{{s, -1}};
    disc[static_cast<std::size_t>(s)] = low[static_cast<std::size_t>(s)] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& nb = adj.nbrs[static_cast<std::size_t>(f.v)];
      if (f.next < nb.size()) {
        const auto [w, eid] = nb[f.next++];
        if (eid == f.in_edge || w == f.v) continue;
        if (disc[static_cast<std::size_t>(w)] == -1) {
          edge_stack.emplace_back(eid, w);
          disc[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = timer++;
          stack.push_back({w, eid});
        } else if (disc[static_cast<std::size_t>(w)] < disc[static_cast<std::size_t>(f.v)]) {
          edge_stack.emplace_back(eid, w);
          low[static_cast<std::size_t>(f.v)] =
              std::min(low[static_cast<std::size_t>(f.v)], disc[static_cast<std::size_t>(w)]);
        }
      } else {
        const Frame done = f;
        stack.pop_back();
        if (stack.empty()) continue;
        Frame& parent = stack.back();
        low[static_cast<std::size_t>(parent.v)] =
            std::min(low[static_cast<std::size_t>(parent.v)], low[static_cast<std::size_t>(done.v)]);
        if (low[static_cast<std::size_t>(done.v)] >= disc[static_cast<std::size_t>(parent.v)]) {
          // Pop one block: everything above (and including) the tree edge into done.v.
          std::vector<int> block;
          while (!edge_stack.empty()) {
            const auto [eid, child] = edge_stack.back();
            edge_stack.pop_back();
            block.push_back(eid);
            if (eid == done.in_edge && child == done.v) break;
          }
          if (block.size() > 1) {  // a singleton block is a bridge
            std::sort(block.begin(), block.end());
            out.push_back({ComponentKind::TwoConnectedLoopless, std::move(block)});
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const IrreducibleComponent& a, const IrreducibleComponent& b) {
    return a.edge_ids.front() < b.edge_ids.front();
  });
  return out;
}

// Replace e by two edges through a fresh degree-2 vertex. Genus is unchanged.
inline std::pair<Multigraph, int> subdivide(const Multigraph& g, int edge_id) {
  const Edge e = g.edge(edge_id);  // copy; throws on unknown id
  Multigraph out = g;
  out.remove_edge(edge_id);
  const int mid = out.add_vertex();
  out.add_edge(e.tail, mid);
  out.add_edge(mid, e.head);
  return {std::move(out), mid};
}

// Merge the endpoints of a non-loop edge; parallels and loops created by the
// contraction are kept. Genus is unchanged.
inline Multigraph contract(const Multigraph& g, int edge_id) {
  const Edge e = g.edge(edge_id);
  if (e.tail == e.head) throw std::invalid_argument("cannot contract a loop");
  const int keep = std::min(e.tail, e.head);
  const int drop = std::max(e.tail, e.head);
  Multigraph out = g;
  out.remove_edge(edge_id);
  std::vector<Edge> rewritten;
  for (const Edge& f : out.edges()) {
    if (f.tail == drop || f.head == drop) rewritten.push_back(f);
  }
  for (const Edge& f : rewritten) {
    out.remove_edge(f.id);
    out.add_edge(f.id, f.tail == drop ? keep : f.tail, f.head == drop ? keep : f.head, f.label);
  }
  out.remove_vertex(drop);
  return out;
}

// --- text edge-list format ----------------------------------------------
//
//   # comment
//   graph <name>
//   vertex <id>                (only isolated vertices are listed)
//   edge <id> <tail> <head> [<label>]
//
// Serialization is canonical (vertex then edge records, ids ascending) and
// round-trips bit-exactly.

inline Multigraph parse_edge_list(std::string_view text) {
  Multigraph g;
  bool have_graph = false;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw std::runtime_error("line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "graph") {
      std::string rest;
      std::getline(ls, rest);
      const auto first = rest.find_first_not_of(" \t");
      if (first == std::string::npos) fail("graph record needs a name");
      const auto last = rest.find_last_not_of(" \t\r");
      if (have_graph) fail("duplicate graph record");
      g.set_name(rest.substr(first, last - first + 1));
      have_graph = true;
    } else if (kw == "vertex") {
      int id;
      if (!(ls >> id) || id < 0) fail("vertex record needs a non-negative id");
      g.add_vertex(id);
    } else if (kw == "edge") {
      int id, tail, head;
      if (!(ls >> id >> tail >> head)) fail("edge record needs <id> <tail> <head>");
      if (id < 0 || tail < 0 || head < 0) fail("edge record fields must be non-negative");
      std::string label;
      ls >> label;
      try {
        g.add_edge(id, tail, head, label);
      } catch (const std::invalid_argument& ex) {
        fail(ex.what());
      }
    } else {
      fail("unknown record '" + kw + "'");
    }
  }
  if (!have_graph) {
    ++lineno;
    fail("missing graph record");
  }
  return g;
}

inline std::string to_edge_list(const Multigraph& g) {
  std::ostringstream out;
  out << "graph " << g.name() << "\n";
  std::set<int> covered;
  for (const Edge& e : g.edges()) {
    covered.insert(e.tail);
    covered.insert(e.head);
  }
  for (int v : g.vertices())
    if (!covered.count(v)) out << "vertex " << v << "\n";
  for (const Edge& e : g.edges()) {
    out << "edge " << e.id << " " << e.tail << " " << e.head;
    if (!e.label.empty()) out << " " << e.label;
    out << "\n";
  }
  return out.str();
}

}  // namespace zemm
