#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "zemm/constraints.hpp"
#include "zemm/gram.hpp"
#include "zemm/homology.hpp"
#include "zemm/lattice.hpp"
#include "zemm/multigraph.hpp"

// Depth-first search over the unknowns a_{ij} in {0,1,-1} with constraint
// propagation after every assignment and exact positive-definiteness pruning
// on the principal submatrix that is already fully assigned. The value order
// (0, then 1, then -1) and the fixed variable order (equations with fewest
// free unknowns first, pairs in lexicographic order within an equation,
// leftover pairs last) make the first solution canonical and runs
// reproducible.

namespace zemm {

enum class SolveStatus { Found, Unsat, Trivial };

inline std::string to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Found: return "Found";
    case SolveStatus::Unsat: return "Unsat";
    case SolveStatus::Trivial: return "Trivial";
  }
  return "?";
}

struct ZemmResult {
  SolveStatus status = SolveStatus::Unsat;
  std::optional<GramMatrix> gram;
  int fixed_by_propagation = 0;
  long long nodes_explored = 0;
  std::optional<LatticeClass> lattice;
};

namespace detail {

class GramSearch {
 public:
  GramSearch(const ConstraintSystem& system, int rank) : g_(rank) {
    for (int i = 0; i < g_; ++i)
      for (int j = i + 1; j < g_; ++j) pairs_.emplace_back(i, j);
    value_.assign(pairs_.size(), 0);
    assigned_.assign(pairs_.size(), 0);
    eqs_.reserve(system.equations.size());
    eqs_of_pair_.assign(pairs_.size(), {});
    for (const LinearEquation& eq : system.equations) {
      Residual r;
      r.rhs = eq.constant;
      for (const auto& [pair, coeff] : eq.terms) {
        const int k = pair_index(pair.first, pair.second);
        r.terms.emplace_back(k, coeff);
        eqs_of_pair_[static_cast<std::size_t>(k)].push_back(static_cast<int>(eqs_.size()));
      }
      r.remaining = static_cast<int>(r.terms.size());
      r.source_edge = eq.source_edge;
      eqs_.push_back(std::move(r));
    }
  }

  int pair_index(int i, int j) const {
    return i * g_ - i * (i + 1) / 2 + (j - i - 1);
  }

  // Initial propagation; false means Unsat with no search needed.
  bool propagate_initial() {
    for (std::size_t e = 0; e < eqs_.size(); ++e) {
      if (eqs_[e].remaining == 0 && eqs_[e].rhs != 0) {
        fixed_by_propagation_ = static_cast<int>(trail_.size());
        return false;
      }
      if (eqs_[e].remaining == 1) {
        const auto [k, coeff] = unassigned_term(static_cast<int>(e));
        if (!assign(k, static_cast<int>(eqs_[e].rhs * coeff))) {
          fixed_by_propagation_ = static_cast<int>(trail_.size());
          return false;
        }
      }
    }
    fixed_by_propagation_ = static_cast<int>(trail_.size());
    return true;
  }

  // Canonical variable order, computed once after initial propagation.
  void build_order() {
    std::vector<int> eq_idx(eqs_.size());
    for (std::size_t i = 0; i < eq_idx.size(); ++i) eq_idx[i] = static_cast<int>(i);
    std::sort(eq_idx.begin(), eq_idx.end(), [&](int a, int b) {
      if (eqs_[static_cast<std::size_t>(a)].remaining != eqs_[static_cast<std::size_t>(b)].remaining)
        return eqs_[static_cast<std::size_t>(a)].remaining < eqs_[static_cast<std::size_t>(b)].remaining;
      return eqs_[static_cast<std::size_t>(a)].source_edge < eqs_[static_cast<std::size_t>(b)].source_edge;
    });
    std::vector<char> seen(pairs_.size(), 0);
    for (int e : eq_idx) {
      std::vector<int> ks;
      for (const auto& [k, coeff] : eqs_[static_cast<std::size_t>(e)].terms)
        if (!assigned_[static_cast<std::size_t>(k)]) ks.push_back(k);
      std::sort(ks.begin(), ks.end());  // pair lexicographic == index order
      for (int k : ks)
        if (!seen[static_cast<std::size_t>(k)]) {
          seen[static_cast<std::size_t>(k)] = 1;
          order_.push_back(k);
        }
    }
    for (std::size_t k = 0; k < pairs_.size(); ++k)
      if (!seen[k] && !assigned_[k]) order_.push_back(static_cast<int>(k));
  }

  // Runs the search and returns up to `limit` solutions in canonical order.
  std::vector<GramMatrix> run(std::size_t limit) {
    build_order();
    solutions_limit_ = limit;
    dfs(0, /*checked=*/1);  // the 1x1 blocks are the diagonal 2s
    return std::move(solutions_);
  }

  int fixed_by_propagation() const { return fixed_by_propagation_; }
  long long nodes_explored() const { return nodes_; }

 private:
  struct Residual {
    long long rhs = 0;
    int remaining = 0;
    int source_edge = -1;
    std::vector<std::pair<int, int>> terms;  // (pair index, coefficient)
  };

  std::pair<int, int> unassigned_term(int e) const {
    for (const auto& [k, coeff] : eqs_[static_cast<std::size_t>(e)].terms)
      if (!assigned_[static_cast<std::size_t>(k)]) return {k, coeff};
    throw std::logic_error("equation has no unassigned term");
  }

  // Assign pair k and run unit propagation; all changes land on the trail.
  // Returns false on conflict (caller must still roll back to its mark).
  bool assign(int k, int v) {
    if (assigned_[static_cast<std::size_t>(k)]) return value_[static_cast<std::size_t>(k)] == v;
    if (v < -1 || v > 1) return false;
    commit(k, v);
    std::vector<int> queue{k};
    while (!queue.empty()) {
      if (!conflict_free_) return false;
      const int q = queue.back();
      queue.pop_back();
      for (int e : eqs_of_pair_[static_cast<std::size_t>(q)]) {
        Residual& r = eqs_[static_cast<std::size_t>(e)];
        if (r.remaining != 1) continue;
        const auto [t, coeff] = unassigned_term(e);
        const long long want = r.rhs * coeff;
        if (want < -1 || want > 1) return false;
        commit(t, static_cast<int>(want));
        queue.push_back(t);
        if (!conflict_free_) return false;
      }
    }
    return conflict_free_;
  }

  void commit(int k, int v) {
    value_[static_cast<std::size_t>(k)] = static_cast<signed char>(v);
    assigned_[static_cast<std::size_t>(k)] = 1;
    trail_.push_back(k);
    for (int e : eqs_of_pair_[static_cast<std::size_t>(k)]) {
      Residual& r = eqs_[static_cast<std::size_t>(e)];
      for (const auto& [t, coeff] : r.terms)
        if (t == k) r.rhs -= static_cast<long long>(coeff) * v;
      r.remaining -= 1;
      if (r.remaining == 0 && r.rhs != 0) conflict_free_ = false;
    }
  }

  void rollback(std::size_t mark) {
    while (trail_.size() > mark) {
      const int k = trail_.back();
      trail_.pop_back();
      for (int e : eqs_of_pair_[static_cast<std::size_t>(k)]) {
        Residual& r = eqs_[static_cast<std::size_t>(e)];
        for (const auto& [t, coeff] : r.terms)
          if (t == k) r.rhs += static_cast<long long>(coeff) * value_[static_cast<std::size_t>(k)];
        r.remaining += 1;
      }
      assigned_[static_cast<std::size_t>(k)] = 0;
    }
    conflict_free_ = true;
  }

  // Indices whose mutual pairs are all assigned, grown greedily from index 0.
  // Extends the fully assigned top-left block: the principal submatrix on this
  // set is a sound checkpoint too, and its size never decreases along a search
  // path, so rechecking only when the size grows keeps the cost bounded.
  std::vector<int> assigned_index_set() const {
    std::vector<int> s;
    for (int i = 0; i < g_; ++i) {
      bool ok = true;
      for (int j : s)
        if (!assigned_[static_cast<std::size_t>(pair_index(j, i))]) {
          ok = false;
          break;
        }
      if (ok) s.push_back(i);
    }
    return s;
  }

  bool submatrix_positive(const std::vector<int>& s) const {
    GramMatrix m(static_cast<int>(s.size()));
    for (std::size_t a = 0; a < s.size(); ++a)
      for (std::size_t b = a + 1; b < s.size(); ++b)
        m.at(static_cast<int>(a), static_cast<int>(b)) = m.at(static_cast<int>(b), static_cast<int>(a)) =
            value_[static_cast<std::size_t>(pair_index(s[a], s[b]))];
    return is_positive_definite(m);
  }

  GramMatrix current_gram() const {
    GramMatrix m(g_);
    for (int i = 0; i < g_; ++i)
      for (int j = i + 1; j < g_; ++j)
        m.at(i, j) = m.at(j, i) = value_[static_cast<std::size_t>(pair_index(i, j))];
    return m;
  }

  // Returns true when the solution limit was hit and the search should stop.
  bool dfs(std::size_t oi, int checked) {
    while (oi < order_.size() && assigned_[static_cast<std::size_t>(order_[oi])]) ++oi;
    if (oi == order_.size()) {
      const GramMatrix m = current_gram();
      if (is_positive_definite(m)) {
        solutions_.push_back(m);
        return solutions_.size() >= solutions_limit_;
      }
      return false;
    }
    const int k = order_[oi];
    for (int v : {0, 1, -1}) {
      ++nodes_;
      const std::size_t mark = trail_.size();
      if (assign(k, v)) {
        const std::vector<int> s = assigned_index_set();
        const int K = static_cast<int>(s.size());
        if (K <= checked || submatrix_positive(s)) {
          if (dfs(oi + 1, std::max(checked, K))) return true;
        }
      }
      rollback(mark);
    }
    return false;
  }

  int g_;
  std::vector<UnknownPair> pairs_;
  std::vector<signed char> value_;
  std::vector<char> assigned_;
  std::vector<Residual> eqs_;
  std::vector<std::vector<int>> eqs_of_pair_;
  std::vector<int> trail_;
  std::vector<int> order_;
  std::vector<GramMatrix> solutions_;
  std::size_t solutions_limit_ = 1;
  bool conflict_free_ = true;
  int fixed_by_propagation_ = 0;
  long long nodes_ = 0;
};

}  // namespace detail

// Certificate check: diagonal 2, off-diagonals in {-1,0,1}, symmetric,
// positive definite, and q(e_j*) = 1 for every non-bridge column of the
// cycle matrix. The report carries the first failing component.
struct VerifyReport {
  bool ok = false;
  std::string failure;
};

inline VerifyReport verify_zemm(const Multigraph& g, const SpanningForest& f,
                                const GramMatrix& m) {
  if (m.dim != genus(g))
    throw std::invalid_argument("gram dimension " + std::to_string(m.dim) +
                                " does not match genus " + std::to_string(genus(g)));
  for (int i = 0; i < m.dim; ++i)
    if (m.at(i, i) != 2)
      return {false, "diagonal entry a[" + std::to_string(i + 1) + "," +
                         std::to_string(i + 1) + "] = " + std::to_string(m.at(i, i)) +
                         ", expected 2"};
  if (!m.is_symmetric()) return {false, "matrix is not symmetric"};
  for (int i = 0; i < m.dim; ++i)
    for (int j = i + 1; j < m.dim; ++j)
      if (m.at(i, j) < -1 || m.at(i, j) > 1)
        return {false, "entry a[" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                           "] = " + std::to_string(m.at(i, j)) + " outside {-1,0,1}"};
  if (!is_positive_definite(m)) return {false, "matrix is not positive definite"};
  const CycleMatrix cm = cycle_matrix(g, f);
  const std::set<int> bridge_set = bridges(g);
  for (int c = 0; c < cm.cols; ++c) {
    const int edge_id = cm.col_order[static_cast<std::size_t>(c)];
    if (bridge_set.count(edge_id)) continue;
    const std::vector<int> col = cm.column(c);
    const long long norm = m.norm(col);  // 2 q(e*)
    if (norm != 2)
      return {false, "edge " + std::to_string(edge_id) + ": q(e*) = " +
                         std::to_string(norm) + "/2, expected 1"};
  }
  return {true, ""};
}

inline ZemmResult solve_zemm(const Multigraph& g,
                             const std::optional<SpanningForest>& forest = std::nullopt) {
  ZemmResult result;
  if (genus(g) == 0) {
    result.status = SolveStatus::Trivial;
    result.gram = GramMatrix(0);
    result.lattice = classify(*result.gram);
    return result;
  }
  const SpanningForest f = forest ? *forest : spanning_forest(g);
  const CycleMatrix m = cycle_matrix(g, f);
  const ConstraintSystem system = build_constraints(m, bridges(g));
  detail::GramSearch search(system, system.rank);
  if (!search.propagate_initial()) {
    result.status = SolveStatus::Unsat;
    result.fixed_by_propagation = search.fixed_by_propagation();
    result.nodes_explored = search.nodes_explored();
    return result;
  }
  auto solutions = search.run(1);
  result.fixed_by_propagation = search.fixed_by_propagation();
  result.nodes_explored = search.nodes_explored();
  if (solutions.empty()) {
    result.status = SolveStatus::Unsat;
    return result;
  }
  result.status = SolveStatus::Found;
  result.gram = std::move(solutions.front());
  result.lattice = classify(*result.gram);
  return result;
}

// Exhaustive variant: all satisfying Gram matrices in canonical search order,
// truncated at `limit`. Used as the small-genus oracle partner.
inline std::vector<GramMatrix> solve_all(const Multigraph& g,
                                         const std::optional<SpanningForest>& forest,
                                         std::size_t limit) {
  if (limit < 1) throw std::invalid_argument("limit must be at least 1");
  if (genus(g) == 0) return {GramMatrix(0)};
  const SpanningForest f = forest ? *forest : spanning_forest(g);
  const CycleMatrix m = cycle_matrix(g, f);
  const ConstraintSystem system = build_constraints(m, bridges(g));
  detail::GramSearch search(system, system.rank);
  if (!search.propagate_initial()) return {};
  return search.run(limit);
}

}  // namespace zemm
