#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "zemm/multigraph.hpp"

// Genus-raising operations (a), (b), (c) and their genus-lowering inverses
// (3a), (3b), (3c), plus the exhaustive one-step extension enumeration that
// generates the genus-8 corpus from the genus-7 catalog. Operations return
// fresh graphs; new vertices and edges get fresh ids in a deterministic
// order, so outputs are bit-identical across runs.

namespace zemm {

enum class SurgeryKind { A_JoinMidpoints, B_AddHandle, C_LoopPendant, R3a, R3b, R3c };

inline std::string to_string(SurgeryKind k) {
  switch (k) {
    case SurgeryKind::A_JoinMidpoints: return "a";
    case SurgeryKind::B_AddHandle: return "b";
    case SurgeryKind::C_LoopPendant: return "c";
    case SurgeryKind::R3a: return "3a";
    case SurgeryKind::R3b: return "3b";
    case SurgeryKind::R3c: return "3c";
  }
  return "?";
}

struct SurgeryStep {
  SurgeryKind kind = SurgeryKind::A_JoinMidpoints;
  std::vector<int> args;  // edge ids; 2 for A, 1 for B/C and the inverses
};

// (a): subdivide two distinct edges and join the midpoints. Genus +1;
// trivalence is preserved on trivalent input.
inline Multigraph op_a(const Multigraph& g, int e1, int e2) {
  if (e1 == e2) throw std::invalid_argument("op_a needs two distinct edges");
  auto [g1, mid1] = subdivide(g, e1);
  auto [g2, mid2] = subdivide(g1, e2);
  g2.add_edge(mid1, mid2);
  return std::move(g2);
}

// (b): add a handle to an edge -- subdivide it twice and join the two new
// midpoints by a parallel edge. Genus +1; |V|+2, |E|+3.
inline Multigraph op_b(const Multigraph& g, int e) {
  auto [g1, mid1] = subdivide(g, e);
  const int second_half = g1.fresh_edge_id() - 1;  // mid1 -> original head
  auto [g2, mid2] = subdivide(g1, second_half);
  g2.add_edge(mid1, mid2);
  return std::move(g2);
}

// (c): attach a pendant loop by a bridge at a fresh midpoint of e. The
// connecting edge is a bridge in the result. Genus +1.
inline Multigraph op_c(const Multigraph& g, int e) {
  auto [g1, mid] = subdivide(g, e);
  const int v = g1.add_vertex();
  g1.add_edge(mid, v);  // the bridge
  g1.add_edge(v, v);    // the loop
  return std::move(g1);
}

namespace detail {

inline std::vector<int> incident_edges(const Multigraph& g, int v) {
  std::vector<int> out;
  for (const Edge& e : g.edges())
    if (e.tail == v || e.head == v) out.push_back(e.id);
  return out;
}

// Lowest-id non-loop edge at v, excluding the ids in `avoid`.
inline std::optional<int> contractible_at(const Multigraph& g, int v,
                                          const std::vector<int>& avoid = {}) {
  for (int eid : incident_edges(g, v)) {
    const Edge& e = g.edge(eid);
    if (e.tail == e.head) continue;
    bool skip = false;
    for (int a : avoid)
      if (a == eid) skip = true;
    if (!skip) return eid;
  }
  return std::nullopt;
}

inline std::optional<int> parallel_partner(const Multigraph& g, const Edge& e) {
  for (const Edge& f : g.edges()) {
    if (f.id == e.id) continue;
    if ((f.tail == e.tail && f.head == e.head) || (f.tail == e.head && f.head == e.tail))
      return f.id;
  }
  return std::nullopt;
}

}  // namespace detail

// (3a): e is neither a loop nor parallel to another edge. Delete e, then
// contract one edge at each former endpoint (lowest id first). Genus -1,
// except when e is a bridge, where the genus is unchanged.
inline Multigraph op_3a(const Multigraph& g, int e) {
  const Edge edge = g.edge(e);
  if (edge.tail == edge.head)
    throw std::invalid_argument("op_3a expects a non-loop edge (use op_3c for loops)");
  if (detail::parallel_partner(g, edge))
    throw std::invalid_argument("op_3a expects an edge without a parallel (use op_3b)");
  Multigraph out = g;
  out.remove_edge(e);
  if (const auto c1 = detail::contractible_at(out, edge.tail)) out = contract(out, *c1);
  if (out.has_vertex(edge.head)) {
    if (const auto c2 = detail::contractible_at(out, edge.head)) out = contract(out, *c2);
  }
  return out;
}

// (3b): e has a parallel edge f. Delete e, then contract the edge at each
// endpoint that differs from f. Genus -1.
inline Multigraph op_3b(const Multigraph& g, int e) {
  const Edge edge = g.edge(e);
  if (edge.tail == edge.head)
    throw std::invalid_argument("op_3b expects a non-loop edge (use op_3c for loops)");
  const auto f = detail::parallel_partner(g, edge);
  if (!f) throw std::invalid_argument("op_3b expects an edge with a parallel partner");
  Multigraph out = g;
  out.remove_edge(e);
  if (const auto c1 = detail::contractible_at(out, edge.tail, {*f})) out = contract(out, *c1);
  if (out.has_vertex(edge.head)) {
    if (const auto c2 = detail::contractible_at(out, edge.head, {*f})) out = contract(out, *c2);
  }
  return out;
}

// (3c): e is a loop at v. Delete the loop and the remaining edge f at v
// (v stays behind as an isolated vertex), then contract one of the other
// edges at f's far endpoint. Genus -1.
inline Multigraph op_3c(const Multigraph& g, int e) {
  const Edge edge = g.edge(e);
  if (edge.tail != edge.head) throw std::invalid_argument("op_3c expects a loop");
  Multigraph out = g;
  out.remove_edge(e);
  const auto at_v = detail::incident_edges(out, edge.tail);
  if (at_v.size() != 1)
    throw std::invalid_argument("op_3c expects the loop vertex to have exactly one other edge");
  const Edge f = out.edge(at_v.front());
  const int w = f.tail == edge.tail ? f.head : f.tail;
  out.remove_edge(f.id);
  if (const auto c = detail::contractible_at(out, w)) out = contract(out, *c);
  return out;
}

inline Multigraph apply_step(const Multigraph& g, const SurgeryStep& step) {
  switch (step.kind) {
    case SurgeryKind::A_JoinMidpoints:
      if (step.args.size() != 2) throw std::invalid_argument("op (a) takes two edge ids");
      return op_a(g, step.args[0], step.args[1]);
    case SurgeryKind::B_AddHandle:
      if (step.args.size() != 1) throw std::invalid_argument("op (b) takes one edge id");
      return op_b(g, step.args[0]);
    case SurgeryKind::C_LoopPendant:
      if (step.args.size() != 1) throw std::invalid_argument("op (c) takes one edge id");
      return op_c(g, step.args[0]);
    case SurgeryKind::R3a:
      if (step.args.size() != 1) throw std::invalid_argument("op (3a) takes one edge id");
      return op_3a(g, step.args[0]);
    case SurgeryKind::R3b:
      if (step.args.size() != 1) throw std::invalid_argument("op (3b) takes one edge id");
      return op_3b(g, step.args[0]);
    case SurgeryKind::R3c:
      if (step.args.size() != 1) throw std::invalid_argument("op (3c) takes one edge id");
      return op_3c(g, step.args[0]);
  }
  throw std::invalid_argument("unknown surgery kind");
}

// Isomorphism-invariant fingerprint from per-vertex distance profiles and
// closed-walk counts (diagonals of powers of the multiplicity adjacency
// matrix, loops counting 2). Plain color refinement is blind on trivalent
// graphs, where every vertex looks alike; walk counts see the cycle
// structure instead. Isomorphic multigraphs always hash alike; the converse
// is heuristic, which is all the optional dedup below claims.
inline std::uint64_t invariant_hash(const Multigraph& g) {
  auto mix = [](std::uint64_t h, std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  };
  const int n = static_cast<int>(g.vertex_count());
  std::map<int, int> index;
  for (int v : g.vertices()) index[v] = static_cast<int>(index.size());

  std::vector<long long> adj(static_cast<std::size_t>(n) * n, 0);
  for (const Edge& e : g.edges()) {
    const int a = index.at(e.tail), b = index.at(e.head);
    if (a == b) {
      adj[static_cast<std::size_t>(a) * n + a] += 2;
    } else {
      adj[static_cast<std::size_t>(a) * n + b] += 1;
      adj[static_cast<std::size_t>(b) * n + a] += 1;
    }
  }

  // closed walks of length 2..2n-ish; power entries stay below 3^k here
  constexpr int kMaxWalk = 8;
  std::vector<std::vector<long long>> walk(static_cast<std::size_t>(n));
  std::vector<long long> power = adj;
  for (int k = 2; k <= kMaxWalk; ++k) {
    std::vector<long long> next(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l) {
        const long long p = power[static_cast<std::size_t>(i) * n + l];
        if (p == 0) continue;
        for (int j = 0; j < n; ++j)
          next[static_cast<std::size_t>(i) * n + j] += p * adj[static_cast<std::size_t>(l) * n + j];
      }
    power = std::move(next);
    for (int v = 0; v < n; ++v)
      walk[static_cast<std::size_t>(v)].push_back(power[static_cast<std::size_t>(v) * n + v]);
  }

  // unit distances; parallel edges collapse, unreachable pairs get n+1
  std::vector<std::uint64_t> signatures;
  for (int v = 0; v < n; ++v) {
    std::vector<int> dist(static_cast<std::size_t>(n), n + 1);
    std::deque<int> queue{v};
    dist[static_cast<std::size_t>(v)] = 0;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int w = 0; w < n; ++w)
        if (w != u && adj[static_cast<std::size_t>(u) * n + w] > 0 &&
            dist[static_cast<std::size_t>(w)] > dist[static_cast<std::size_t>(u)] + 1) {
          dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
          queue.push_back(w);
        }
    }
    std::sort(dist.begin(), dist.end());
    std::uint64_t h = mix(0x243f6a8885a308d3ULL, static_cast<std::uint64_t>(g.degree(g.vertices()[static_cast<std::size_t>(v)])));
    for (int d : dist) h = mix(h, static_cast<std::uint64_t>(d));
    for (long long wk : walk[static_cast<std::size_t>(v)])
      h = mix(h, static_cast<std::uint64_t>(wk));
    signatures.push_back(h);
  }
  std::sort(signatures.begin(), signatures.end());
  std::uint64_t h = mix(mix(0x13198a2e03707344ULL, g.vertex_count()), g.edge_count());
  for (std::uint64_t s : signatures) h = mix(h, s);
  return h;
}

// All C(n,2) results of (a) followed by all n results of (b), ordered by
// (kind, args). No isomorphism deduplication by default: the corpus counts
// operation applications, so an 18-edge input yields 153 + 18 = 171 graphs.
// With dedup_by_invariant only the first graph per invariant hash is kept
// (a heuristic collapse, excluded from the corpus counts).
inline std::vector<std::pair<SurgeryStep, Multigraph>> enumerate_extensions(
    const Multigraph& g, bool dedup_by_invariant = false) {
  std::vector<std::pair<SurgeryStep, Multigraph>> out;
  std::set<std::uint64_t> seen;
  auto emit = [&](SurgeryStep step, Multigraph h) {
    if (dedup_by_invariant && !seen.insert(invariant_hash(h)).second) return;
    out.emplace_back(std::move(step), std::move(h));
  };
  const auto& edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j)
      emit({SurgeryKind::A_JoinMidpoints, {edges[i].id, edges[j].id}},
           op_a(g, edges[i].id, edges[j].id));
  for (const Edge& e : edges) emit({SurgeryKind::B_AddHandle, {e.id}}, op_b(g, e.id));
  return out;
}

inline std::string extension_name(const std::string& base, const SurgeryStep& step) {
  std::string name = base + "_" + to_string(step.kind);
  for (int a : step.args) name += "_" + std::to_string(a);
  return name;
}

}  // namespace zemm
