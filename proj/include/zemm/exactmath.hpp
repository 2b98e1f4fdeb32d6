#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

// Exact integer linear algebra used by the feasibility checks: overflow-checked
// arithmetic, fraction-free (Bareiss) leading minors and determinants, and a
// small exact rational type for the short-vector enumeration.
//
// All public entry points compute in 64-bit first and transparently escalate
// to 128-bit when an intermediate would overflow; a failure at 128 bits is
// reported, never silently wrapped.

namespace zemm {

struct ArithmeticOverflow : std::overflow_error {
  ArithmeticOverflow() : std::overflow_error("integer overflow in exact computation") {}
};

namespace detail {

#if defined(__SIZEOF_INT128__)
__extension__ using Int128 = __int128;
#else
#error "a 128-bit integer type is required for the overflow escalation path"
#endif

template <class T>
inline T checked_add(T a, T b) {
  T r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow{};
  return r;
}

template <class T>
inline T checked_sub(T a, T b) {
  T r;
  if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow{};
  return r;
}

template <class T>
inline T checked_mul(T a, T b) {
  T r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow{};
  return r;
}

// One step of Bareiss elimination keeps every intermediate an exact integer;
// after processing column k the pivot M[k][k] equals the determinant of the
// leading (k+1)x(k+1) submatrix.
//
// Returns the leading principal minors d_1..d_n. Stops early when a pivot is
// <= 0 (the remaining elimination would divide by zero); the minors computed
// so far, including the offending one, are returned.
template <class T>
std::vector<T> bareiss_leading_minors(std::vector<T> m, int n) {
  std::vector<T> minors;
  minors.reserve(static_cast<std::size_t>(n));
  T prev = 1;
  for (int k = 0; k < n; ++k) {
    const T pivot = m[static_cast<std::size_t>(k) * n + k];
    minors.push_back(pivot);
    if (pivot <= 0) break;
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        const T num = checked_sub(checked_mul(m[static_cast<std::size_t>(i) * n + j], pivot),
                                  checked_mul(m[static_cast<std::size_t>(i) * n + k],
                                              m[static_cast<std::size_t>(k) * n + j]));
        m[static_cast<std::size_t>(i) * n + j] = num / prev;
      }
    }
    prev = pivot;
  }
  return minors;
}

// Fraction-free determinant with row pivoting, so zero leading minors are fine.
template <class T>
T bareiss_determinant(std::vector<T> m, int n) {
  if (n == 0) return 1;
  T prev = 1;
  int sign = 1;
  for (int k = 0; k < n; ++k) {
    int p = -1;
    for (int i = k; i < n; ++i) {
      if (m[static_cast<std::size_t>(i) * n + k] != 0) {
        p = i;
        break;
      }
    }
    if (p < 0) return 0;
    if (p != k) {
      for (int j = 0; j < n; ++j)
        std::swap(m[static_cast<std::size_t>(p) * n + j], m[static_cast<std::size_t>(k) * n + j]);
      sign = -sign;
    }
    const T pivot = m[static_cast<std::size_t>(k) * n + k];
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        const T num = checked_sub(checked_mul(m[static_cast<std::size_t>(i) * n + j], pivot),
                                  checked_mul(m[static_cast<std::size_t>(i) * n + k],
                                              m[static_cast<std::size_t>(k) * n + j]));
        m[static_cast<std::size_t>(i) * n + j] = num / prev;
      }
    }
    prev = pivot;
  }
  const T det = m[static_cast<std::size_t>(n - 1) * n + (n - 1)];
  return sign > 0 ? det : checked_sub(static_cast<T>(0), det);
}

inline long long narrow_to_i64(Int128 v) {
  if (v > static_cast<Int128>(INT64_MAX) || v < static_cast<Int128>(INT64_MIN))
    throw ArithmeticOverflow{};
  return static_cast<long long>(v);
}

}  // namespace detail

// Leading principal minors d_1..d_k of a symmetric integer matrix (row-major,
// n*n). The list is cut short after the first minor that is <= 0.
inline std::vector<long long> leading_principal_minors(const std::vector<long long>& m, int n) {
  try {
    return detail::bareiss_leading_minors(m, n);
  } catch (const ArithmeticOverflow&) {
    std::vector<detail::Int128> wide(m.begin(), m.end());
    auto minors = detail::bareiss_leading_minors(std::move(wide), n);
    std::vector<long long> out;
    out.reserve(minors.size());
    for (detail::Int128 v : minors) out.push_back(detail::narrow_to_i64(v));
    return out;
  }
}

inline long long exact_determinant(const std::vector<long long>& m, int n) {
  try {
    return detail::bareiss_determinant(m, n);
  } catch (const ArithmeticOverflow&) {
    std::vector<detail::Int128> wide(m.begin(), m.end());
    return detail::narrow_to_i64(detail::bareiss_determinant(std::move(wide), n));
  }
}

// Exact rational on checked 64-bit integers, normalized with positive
// denominator. Only the handful of operations the enumerator needs.
class Rational {
 public:
  Rational() = default;
  Rational(long long num) : num_(num), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(long long num, long long den) : num_(num), den_(den) { normalize(); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  Rational operator+(const Rational& o) const {
    return Rational(detail::checked_add(detail::checked_mul(num_, o.den_),
                                        detail::checked_mul(o.num_, den_)),
                    detail::checked_mul(den_, o.den_));
  }
  Rational operator-(const Rational& o) const {
    return Rational(detail::checked_sub(detail::checked_mul(num_, o.den_),
                                        detail::checked_mul(o.num_, den_)),
                    detail::checked_mul(den_, o.den_));
  }
  Rational operator*(const Rational& o) const {
    return Rational(detail::checked_mul(num_, o.num_), detail::checked_mul(den_, o.den_));
  }
  Rational operator/(const Rational& o) const {
    if (o.num_ == 0) throw std::domain_error("rational division by zero");
    return Rational(detail::checked_mul(num_, o.den_), detail::checked_mul(den_, o.num_));
  }
  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator<(const Rational& o) const {
    return detail::checked_mul(num_, o.den_) < detail::checked_mul(o.num_, den_);
  }
  bool operator<=(const Rational& o) const { return *this < o || *this == o; }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator>=(const Rational& o) const { return o <= *this; }

 private:
  void normalize() {
    if (den_ == 0) throw std::domain_error("rational with zero denominator");
    if (den_ < 0) {
      num_ = detail::checked_sub(0LL, num_);
      den_ = detail::checked_sub(0LL, den_);
    }
    const long long g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  long long num_ = 0;
  long long den_ = 1;
};

}  // namespace zemm
