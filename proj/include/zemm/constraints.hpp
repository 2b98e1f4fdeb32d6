#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "zemm/homology.hpp"

// The unit-value conditions q(e_j*) = 1 on the Gram unknowns a_{ij}, i < j.
// Each non-identity, non-bridge column (c_i) of the cycle matrix yields
//
//     1 = sum_i c_i^2 + sum_{i<j} c_i c_j a_{ij},
//
// stored with constant = 1 - sum c_i^2 so an equation reads
// sum coeff * a_{ij} = constant. The diagonal condition a_{ii} = 2 is
// implicit and never emitted. Bridge columns are excluded: their coedges are
// zero and carry no condition.

namespace zemm {

using UnknownPair = std::pair<int, int>;

struct LinearEquation {
  int source_edge = -1;
  long long constant = 0;                              // 1 - sum c_i^2
  std::vector<std::pair<UnknownPair, int>> terms;      // sorted by pair; coeff = c_i * c_j

  bool operator==(const LinearEquation&) const = default;
};

struct ConstraintSystem {
  int rank = 0;                                        // g, number of basis coedges
  std::vector<LinearEquation> equations;               // sorted by source edge id
  std::vector<UnknownPair> unknowns;                   // all (i,j), i<j, lexicographic
};

inline ConstraintSystem build_constraints(const CycleMatrix& m, const std::set<int>& bridge_edges) {
  ConstraintSystem s;
  s.rank = m.rows;
  for (int i = 0; i < m.rows; ++i)
    for (int j = i + 1; j < m.rows; ++j) s.unknowns.emplace_back(i, j);
  for (int c = m.rows; c < m.cols; ++c) {
    const int edge_id = m.col_order[static_cast<std::size_t>(c)];
    if (bridge_edges.count(edge_id)) continue;
    LinearEquation eq;
    eq.source_edge = edge_id;
    long long sum_sq = 0;
    for (int r = 0; r < m.rows; ++r) sum_sq += static_cast<long long>(m.at(r, c)) * m.at(r, c);
    if (sum_sq == 0) continue;  // zero column == bridge, no condition
    eq.constant = 1 - sum_sq;
    for (int i = 0; i < m.rows; ++i) {
      if (m.at(i, c) == 0) continue;
      for (int j = i + 1; j < m.rows; ++j) {
        if (m.at(j, c) == 0) continue;
        eq.terms.push_back({{i, j}, m.at(i, c) * m.at(j, c)});
      }
    }
    if (eq.terms.empty() && eq.constant == 0) continue;  // +-unit column, 1 = 1
    s.equations.push_back(std::move(eq));
  }
  std::sort(s.equations.begin(), s.equations.end(),
            [](const LinearEquation& a, const LinearEquation& b) {
              return a.source_edge < b.source_edge;
            });
  return s;
}

struct PartialAssignment {
  std::map<UnknownPair, int> fixed;
  std::vector<LinearEquation> reduced;  // surviving equations with fixed terms substituted
};

struct PropagationOutcome {
  bool unsat = false;
  std::string reason;
  PartialAssignment assignment;
};

// Fixpoint propagation: an equation with a single unknown forces its value
// (which must lie in {-1,0,1}); the value is substituted everywhere and the
// queue continues until nothing changes. An empty equation with a nonzero
// constant, or a forced value out of range, proves there is no solution
// before any search.
inline PropagationOutcome propagate(const ConstraintSystem& s) {
  PropagationOutcome out;
  std::vector<LinearEquation> eqs = s.equations;
  std::map<UnknownPair, int>& fixed = out.assignment.fixed;

  auto substitute = [&](const UnknownPair& p, int value) {
    for (LinearEquation& eq : eqs) {
      auto it = std::find_if(eq.terms.begin(), eq.terms.end(),
                             [&](const auto& t) { return t.first == p; });
      if (it != eq.terms.end()) {
        eq.constant -= static_cast<long long>(it->second) * value;
        eq.terms.erase(it);
      }
    }
  };

  bool changed = true;
  while (changed) {
    changed = false;
    for (const LinearEquation& eq : eqs) {
      if (eq.terms.empty()) {
        if (eq.constant != 0) {
          out.unsat = true;
          out.reason = "edge " + std::to_string(eq.source_edge) +
                       ": contradictory equation, residual constant " +
                       std::to_string(eq.constant);
          return out;
        }
        continue;
      }
      if (eq.terms.size() == 1) {
        const auto [pair, coeff] = eq.terms.front();
        const long long value = eq.constant * coeff;  // coeff is +-1
        if (value < -1 || value > 1) {
          out.unsat = true;
          out.reason = "edge " + std::to_string(eq.source_edge) + ": a[" +
                       std::to_string(pair.first + 1) + "," + std::to_string(pair.second + 1) +
                       "] forced to " + std::to_string(value) + ", outside {-1,0,1}";
          return out;
        }
        fixed[pair] = static_cast<int>(value);
        substitute(pair, static_cast<int>(value));
        changed = true;
        break;
      }
    }
  }
  for (LinearEquation& eq : eqs)
    if (!eq.terms.empty()) out.assignment.reduced.push_back(std::move(eq));
  return out;
}

}  // namespace zemm
