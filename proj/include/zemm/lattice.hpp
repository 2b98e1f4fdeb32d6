#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "zemm/exactmath.hpp"
#include "zemm/gram.hpp"

// Classification of the even lattice (H^1, 2q) from its Gram matrix. The
// lattice is recognized by (rank, determinant, root count) against the root
// lattices A_g, D_g (g>=4) and E_6/E_7/E_8; anything off that table is
// reported Other, never guessed. Among even positive definite lattices these
// invariants separate the five target classes at the ranks that occur here.

namespace zemm {

enum class LatticeKind { A, D, E, Trivial, Other };

struct LatticeClass {
  LatticeKind kind = LatticeKind::Other;
  int rank = 0;
  long long determinant = 0;
  long long root_count = 0;

  bool operator==(const LatticeClass&) const = default;
};

inline std::string to_string(LatticeKind k) {
  switch (k) {
    case LatticeKind::A: return "A";
    case LatticeKind::D: return "D";
    case LatticeKind::E: return "E";
    case LatticeKind::Trivial: return "Trivial";
    case LatticeKind::Other: return "Other";
  }
  return "?";
}

inline long long determinant(const GramMatrix& m) {
  return exact_determinant(m.a, m.dim);
}

namespace detail {

// q(x) = sum_k d_k (x_k + sum_{j>k} mu_{kj} x_j)^2 with exact rational d, mu.
struct TriangularForm {
  int dim = 0;
  std::vector<Rational> d;
  std::vector<Rational> mu;  // row-major upper strict triangle, full dim*dim

  const Rational& mu_at(int i, int j) const { return mu[static_cast<std::size_t>(i) * dim + j]; }
};

inline TriangularForm decompose_positive(const GramMatrix& m) {
  TriangularForm t;
  t.dim = m.dim;
  t.d.assign(static_cast<std::size_t>(m.dim), Rational(0));
  t.mu.assign(static_cast<std::size_t>(m.dim) * m.dim, Rational(0));
  std::vector<Rational> a;
  a.reserve(m.a.size());
  for (long long v : m.a) a.emplace_back(v);
  auto at = [&](int i, int j) -> Rational& { return a[static_cast<std::size_t>(i) * m.dim + j]; };
  for (int k = 0; k < m.dim; ++k) {
    t.d[static_cast<std::size_t>(k)] = at(k, k);
    if (!(Rational(0) < at(k, k)))
      throw std::invalid_argument("matrix is not positive definite");
    for (int j = k + 1; j < m.dim; ++j)
      t.mu[static_cast<std::size_t>(k) * m.dim + j] = at(k, j) / at(k, k);
    for (int i = k + 1; i < m.dim; ++i)
      for (int j = k + 1; j < m.dim; ++j)
        at(i, j) = at(i, j) - at(i, k) * at(k, j) / at(k, k);
  }
  return t;
}

inline long long rational_floor(const Rational& r) {
  const long long num = r.num(), den = r.den();
  if (num >= 0) return num / den;
  return -((-num + den - 1) / den);
}

// All integer x with x M x^T == target, found level by level from the last
// coordinate; at each level the admissible x_k form a contiguous interval
// around -c_k, scanned with exact rational comparisons.
inline void enumerate_norm(const TriangularForm& t, int level, std::vector<int>& x,
                           const Rational& budget, std::vector<std::vector<int>>& out) {
  if (level < 0) {
    if (budget == Rational(0)) out.push_back(x);
    return;
  }
  Rational c(0);
  for (int j = level + 1; j < t.dim; ++j)
    c = c + t.mu_at(level, j) * Rational(x[static_cast<std::size_t>(j)]);
  const Rational& d = t.d[static_cast<std::size_t>(level)];
  auto fits = [&](long long v) {
    const Rational s = Rational(v) + c;
    return d * s * s <= budget;
  };
  auto recurse = [&](long long v) {
    x[static_cast<std::size_t>(level)] = static_cast<int>(v);
    const Rational s = Rational(v) + c;
    enumerate_norm(t, level - 1, x, budget - d * s * s, out);
  };
  const long long center = rational_floor(Rational(0) - c);
  for (long long v = center; fits(v); --v) recurse(v);
  for (long long v = center + 1; fits(v); ++v) recurse(v);
  x[static_cast<std::size_t>(level)] = 0;
}

}  // namespace detail

// All roots of the even lattice: integer vectors with x M x^T = 2 (that is,
// q(x) = 1), in lexicographic order. Both x and -x are listed.
inline std::vector<std::vector<int>> roots(const GramMatrix& m) {
  if (!m.is_symmetric()) throw std::invalid_argument("gram matrix must be symmetric");
  if (m.dim == 0) return {};
  const auto form = detail::decompose_positive(m);  // throws if not positive definite
  std::vector<std::vector<int>> out;
  std::vector<int> x(static_cast<std::size_t>(m.dim), 0);
  detail::enumerate_norm(form, m.dim - 1, x, Rational(2), out);
  std::sort(out.begin(), out.end());
  return out;
}

inline LatticeClass classify(const GramMatrix& m) {
  LatticeClass c;
  c.rank = m.dim;
  if (m.dim == 0) {
    c.kind = LatticeKind::Trivial;
    c.determinant = 1;
    c.root_count = 0;
    return c;
  }
  if (!is_positive_definite(m))
    throw std::invalid_argument("matrix is not positive definite");
  c.determinant = determinant(m);
  c.root_count = static_cast<long long>(roots(m).size());
  const int g = c.rank;
  if (c.determinant == g + 1 && c.root_count == static_cast<long long>(g) * (g + 1)) {
    c.kind = LatticeKind::A;
  } else if (g >= 4 && c.determinant == 4 &&
             c.root_count == 2LL * g * (g - 1)) {
    c.kind = LatticeKind::D;
  } else if ((g == 6 && c.determinant == 3 && c.root_count == 72) ||
             (g == 7 && c.determinant == 2 && c.root_count == 126) ||
             (g == 8 && c.determinant == 1 && c.root_count == 240)) {
    c.kind = LatticeKind::E;
  } else {
    c.kind = LatticeKind::Other;
  }
  return c;
}

}  // namespace zemm
