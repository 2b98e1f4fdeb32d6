#pragma once

#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "zemm/exactmath.hpp"

namespace zemm {

// Symmetric integer matrix M_q of an even quadratic form, q(x) = x (M/2) x^T.
// A certificate matrix has diagonal 2 and off-diagonal entries in {-1,0,1};
// those invariants are enforced by the verifier, not the type, so candidate
// and counterexample matrices can be represented too.
struct GramMatrix {
  int dim = 0;
  std::vector<long long> a;  // row-major dim*dim

  GramMatrix() = default;
  explicit GramMatrix(int d) : dim(d), a(static_cast<std::size_t>(d) * d, 0) {
    for (int i = 0; i < d; ++i) at(i, i) = 2;
  }

  static GramMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
    GramMatrix m;
    m.dim = static_cast<int>(rows.size());
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != m.dim)
        throw std::invalid_argument("gram matrix rows must be square");
      m.a.insert(m.a.end(), row.begin(), row.end());
    }
    return m;
  }

  long long at(int i, int j) const { return a[static_cast<std::size_t>(i) * dim + j]; }
  long long& at(int i, int j) { return a[static_cast<std::size_t>(i) * dim + j]; }

  bool is_symmetric() const {
    for (int i = 0; i < dim; ++i)
      for (int j = i + 1; j < dim; ++j)
        if (at(i, j) != at(j, i)) return false;
    return true;
  }

  // x M x^T, the even-lattice norm of x (twice its q-value).
  long long norm(const std::vector<int>& x) const {
    long long total = 0;
    for (int i = 0; i < dim; ++i) {
      long long row = 0;
      for (int j = 0; j < dim; ++j)
        row = detail::checked_add(row, detail::checked_mul(at(i, j), static_cast<long long>(x[static_cast<std::size_t>(j)])));
      total = detail::checked_add(total, detail::checked_mul(row, static_cast<long long>(x[static_cast<std::size_t>(i)])));
    }
    return total;
  }

  bool operator==(const GramMatrix&) const = default;
};

// Sylvester's criterion in exact integer arithmetic: positive definite iff
// all leading principal minors are positive. No floating point anywhere.
inline bool is_positive_definite(const GramMatrix& m) {
  if (m.dim == 0) return true;
  const auto minors = leading_principal_minors(m.a, m.dim);
  if (static_cast<int>(minors.size()) < m.dim) return false;  // hit a minor <= 0
  for (long long d : minors)
    if (d <= 0) return false;
  return true;
}

}  // namespace zemm
