#pragma once

// 8x8 real matrices acting on octonion coefficient vectors, plus the small
// numerical-linear-algebra kit the rotation machinery needs: inverse,
// matrix exponential, commutators, and span/closure dimension under a
// rank threshold.

#include <array>
#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

#include "splitoct/octonion.hpp"

namespace splitoct {

struct LinearMap8 {
  std::array<double, 64> m{};  // row-major

  double& at(int r, int c) { return m[static_cast<size_t>(r * 8 + c)]; }
  double at(int r, int c) const { return m[static_cast<size_t>(r * 8 + c)]; }

  static LinearMap8 identity() {
    LinearMap8 id;
    for (int i = 0; i < 8; ++i) id.at(i, i) = 1.0;
    return id;
  }

  bool finite() const {
    for (double v : m)
      if (!std::isfinite(v)) return false;
    return true;
  }

  Octonion apply(const Octonion& x) const {
    std::array<double, 8> r{};
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) r[i] += at(i, j) * x[j];
    return Octonion(r);
  }

  LinearMap8 transpose() const {
    LinearMap8 t;
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) t.at(i, j) = at(j, i);
    return t;
  }

  friend LinearMap8 operator*(const LinearMap8& a, const LinearMap8& b) {
    LinearMap8 r;
    for (int i = 0; i < 8; ++i)
      for (int k = 0; k < 8; ++k) {
        const double v = a.at(i, k);
        if (v == 0.0) continue;
        for (int j = 0; j < 8; ++j) r.at(i, j) += v * b.at(k, j);
      }
    return r;
  }

  friend LinearMap8 operator+(LinearMap8 a, const LinearMap8& b) {
    for (size_t i = 0; i < 64; ++i) a.m[i] += b.m[i];
    return a;
  }
  friend LinearMap8 operator-(LinearMap8 a, const LinearMap8& b) {
    for (size_t i = 0; i < 64; ++i) a.m[i] -= b.m[i];
    return a;
  }
  friend LinearMap8 operator*(LinearMap8 a, double s) {
    for (auto& v : a.m) v *= s;
    return a;
  }
  friend LinearMap8 operator*(double s, LinearMap8 a) { return a * s; }
};

inline double max_abs(const LinearMap8& a) {
  double r = 0;
  for (double v : a.m) r = std::max(r, std::abs(v));
  return r;
}

inline LinearMap8 commutator(const LinearMap8& a, const LinearMap8& b) {
  return a * b - b * a;
}

/// Gauss-Jordan inverse with partial pivoting.
inline LinearMap8 inverse(const LinearMap8& a) {
  LinearMap8 w = a, inv = LinearMap8::identity();
  for (int col = 0; col < 8; ++col) {
    int piv = col;
    for (int r = col + 1; r < 8; ++r)
      if (std::abs(w.at(r, col)) > std::abs(w.at(piv, col))) piv = r;
    if (std::abs(w.at(piv, col)) < 1e-300)
      throw std::domain_error("inverse: singular matrix");
    if (piv != col)
      for (int j = 0; j < 8; ++j) {
        std::swap(w.at(piv, j), w.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    const double d = w.at(col, col);
    for (int j = 0; j < 8; ++j) {
      w.at(col, j) /= d;
      inv.at(col, j) /= d;
    }
    for (int r = 0; r < 8; ++r) {
      if (r == col) continue;
      const double f = w.at(r, col);
      if (f == 0.0) continue;
      for (int j = 0; j < 8; ++j) {
        w.at(r, j) -= f * w.at(col, j);
        inv.at(r, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

/// Scaling-and-squaring Taylor exponential; entries here stay small.
inline LinearMap8 expm(const LinearMap8& a) {
  double scale = max_abs(a);
  int squarings = 0;
  while (scale > 0.5) {
    scale /= 2;
    ++squarings;
  }
  const LinearMap8 b = a * std::ldexp(1.0, -squarings);
  LinearMap8 result = LinearMap8::identity();
  LinearMap8 term = LinearMap8::identity();
  for (int k = 1; k <= 24; ++k) {
    term = term * b * (1.0 / k);
    result = result + term;
    if (max_abs(term) < 1e-20) break;
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

namespace detail {

/// Incremental orthonormal span of 64-vectors with a relative residual
/// threshold. Used for both rank and commutator-closure computations.
class MatrixSpan {
 public:
  explicit MatrixSpan(double tol) : tol_(tol) {}

  // Returns true if the matrix enlarged the span.
  bool add(const LinearMap8& a) {
    std::array<double, 64> v = a.m;
    const double n0 = norm(v);
    if (n0 == 0.0) return false;
    for (int pass = 0; pass < 2; ++pass)  // re-orthogonalize once
      for (const auto& b : basis_) {
        const double d = dot(v, b);
        for (size_t i = 0; i < 64; ++i) v[i] -= d * b[i];
      }
    const double nr = norm(v);
    if (nr <= tol_ * n0) return false;
    for (auto& x : v) x /= nr;
    basis_.push_back(v);
    return true;
  }

  int dimension() const { return static_cast<int>(basis_.size()); }

  LinearMap8 element(int i) const {
    LinearMap8 r;
    r.m = basis_[static_cast<size_t>(i)];
    return r;
  }

 private:
  static double dot(const std::array<double, 64>& a, const std::array<double, 64>& b) {
    double s = 0;
    for (size_t i = 0; i < 64; ++i) s += a[i] * b[i];
    return s;
  }
  static double norm(const std::array<double, 64>& a) { return std::sqrt(dot(a, a)); }

  double tol_;
  std::vector<std::array<double, 64>> basis_;
};

}  // namespace detail

/// Dimension of the linear span of the given matrices; residuals below
/// tol * (input norm) count as zero.
inline int span_rank(std::span<const LinearMap8> mats, double tol = 1e-8) {
  detail::MatrixSpan s(tol);
  for (const auto& m : mats) {
    if (!m.finite()) throw std::invalid_argument("span_rank: non-finite matrix");
    s.add(m);
  }
  return s.dimension();
}

/// Dimension of the Lie algebra generated by the inputs: repeatedly adjoins
/// commutators of the current span basis until the dimension stabilizes.
inline int lie_closure_dim(std::span<const LinearMap8> generators, double tol = 1e-8) {
  if (generators.empty())
    throw std::invalid_argument("lie_closure_dim: empty generator list");
  detail::MatrixSpan s(tol);
  for (const auto& g : generators) {
    if (!g.finite()) throw std::invalid_argument("lie_closure_dim: non-finite matrix");
    s.add(g);
  }
  int processed = 0;  // pairs (i,j) with j < i already commutated
  while (true) {
    const int n = s.dimension();
    if (n >= 64) return n;
    bool grew = false;
    for (int i = processed; i < n; ++i)
      for (int j = 0; j < i; ++j)
        grew |= s.add(commutator(s.element(i), s.element(j)));
    processed = n;
    if (!grew && processed == s.dimension()) return s.dimension();
  }
}

}  // namespace splitoct
