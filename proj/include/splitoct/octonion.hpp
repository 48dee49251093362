#pragma once

// Split-octonion arithmetic over the fixed basis (1, J1, J2, J3, j1, j2, j3, I).
//
// The 8x8 product table is generated from the defining relations
//   Jn^2 = +1,  jn^2 = -1,  I^2 = +1,
//   Jn Jm = -Jm Jn = eps_nmk j_k,   jn jm = -jm jn = eps_nmk j_k,
//   Jn jm = -jm Jn = -eps_nmk J_k,  Jn I = -I Jn = jn,  jn I = -I jn = Jn,
//   Jn jn = I,
// with eps_123 = +1, rather than transcribed by hand. The generated table is
// re-verified by the test suite (antisymmetry, norm composition on the basis).

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

namespace splitoct {

inline constexpr int kScalar = 0;
inline constexpr int kJ1 = 1, kJ2 = 2, kJ3 = 3;
inline constexpr int kj1 = 4, kj2 = 5, kj3 = 6;
inline constexpr int kI = 7;

inline constexpr std::array<std::string_view, 8> kUnitNames = {
    "1", "J1", "J2", "J3", "j1", "j2", "j3", "I"};

/// +1 for units squaring to +1 (the scalar, Jn, I), -1 for the jn.
constexpr int square_sign(int idx) { return (idx >= kj1 && idx <= kj3) ? -1 : 1; }

constexpr int conj_sign(int idx) { return idx == kScalar ? 1 : -1; }

/// Diagonal of the (4,4) quadratic form: (+,-,-,-,+,+,+,-).
constexpr int quadratic_sign(int idx) { return idx == kScalar ? 1 : -square_sign(idx); }

struct SignedUnit {
  int sign;   // +1 or -1
  int index;  // 0..7
};

/// Levi-Civita symbol for a permutation of {1,2,3}; zero on repeats.
constexpr int levi_civita(int n, int m, int k) {
  return (n - m) * (m - k) * (k - n) / 2;
}

namespace detail {

constexpr std::array<std::array<SignedUnit, 8>, 8> make_structure_table() {
  std::array<std::array<SignedUnit, 8>, 8> t{};
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      SignedUnit r{0, 0};
      const bool aJ = a >= kJ1 && a <= kJ3, bJ = b >= kJ1 && b <= kJ3;
      const bool aj = a >= kj1 && a <= kj3, bj = b >= kj1 && b <= kj3;
      if (a == kScalar) {
        r = {1, b};
      } else if (b == kScalar) {
        r = {1, a};
      } else if (a == b) {
        r = {square_sign(a), kScalar};
      } else if (aJ && bJ) {
        const int k = 6 - a - b;
        r = {levi_civita(a, b, k), kJ1 - 1 + k + 3};  // eps_nmk j_k
      } else if (aj && bj) {
        const int n = a - 3, m = b - 3, k = 6 - n - m;
        r = {levi_civita(n, m, k), k + 3};  // eps_nmk j_k
      } else if (aJ && bj) {
        const int n = a, m = b - 3;
        if (n == m) {
          r = {1, kI};  // Jn jn = I
        } else {
          const int k = 6 - n - m;
          r = {-levi_civita(n, m, k), k};  // Jn jm = -eps_nmk J_k
        }
      } else if (aj && bJ) {
        const int m = a - 3, n = b;
        if (n == m) {
          r = {-1, kI};  // jn Jn = -I
        } else {
          const int k = 6 - n - m;
          r = {levi_civita(n, m, k), k};  // jm Jn = +eps_nmk J_k
        }
      } else if (aJ && b == kI) {
        r = {1, a + 3};  // Jn I = jn
      } else if (a == kI && bJ) {
        r = {-1, b + 3};
      } else if (aj && b == kI) {
        r = {1, a - 3};  // jn I = Jn
      } else if (a == kI && bj) {
        r = {-1, b - 3};
      }
      t[a][b] = r;
    }
  }
  return t;
}

}  // namespace detail

/// Frozen signed-unit product table; single source of truth for multiplication.
inline constexpr auto kStructureTable = detail::make_structure_table();

/// e_a * e_b as a signed basis unit. Total on 0..7 x 0..7.
constexpr SignedUnit basis_mul(int a, int b) {
  if (a < 0 || a > 7 || b < 0 || b > 7)
    throw std::out_of_range("basis_mul: unit index out of 0..7");
  return kStructureTable[a][b];
}

/// Immutable split octonion: 8 real coefficients over (1, J1, J2, J3, j1, j2, j3, I).
class Octonion {
 public:
  Octonion() : c_{} {}

  explicit Octonion(const std::array<double, 8>& c) : c_(c) { check_finite(); }

  Octonion(double c0, double c1, double c2, double c3, double c4, double c5,
           double c6, double c7)
      : c_{c0, c1, c2, c3, c4, c5, c6, c7} {
    check_finite();
  }

  static Octonion unit(int idx) {
    if (idx < 0 || idx > 7) throw std::out_of_range("Octonion::unit: index out of 0..7");
    Octonion o;
    o.c_[idx] = 1.0;
    return o;
  }

  static Octonion scalar(double v) { return Octonion(v, 0, 0, 0, 0, 0, 0, 0); }

  double operator[](int i) const { return c_.at(static_cast<size_t>(i)); }
  const std::array<double, 8>& coeff() const { return c_; }

  Octonion conj() const {
    std::array<double, 8> r;
    for (int i = 0; i < 8; ++i) r[i] = conj_sign(i) * c_[i];
    return Octonion(r);
  }

  /// Quadratic form of signature (4,4): a0^2 - a1^2 - a2^2 - a3^2 + a4^2 + a5^2 + a6^2 - a7^2.
  double norm() const {
    double n = 0;
    for (int i = 0; i < 8; ++i) n += quadratic_sign(i) * c_[i] * c_[i];
    return n;
  }

  double scalar_part() const { return c_[0]; }

  Octonion& operator+=(const Octonion& o) {
    for (int i = 0; i < 8; ++i) c_[i] += o.c_[i];
    return *this;
  }
  Octonion& operator-=(const Octonion& o) {
    for (int i = 0; i < 8; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Octonion& operator*=(double s) {
    for (auto& v : c_) v *= s;
    check_finite();
    return *this;
  }

  friend Octonion operator+(Octonion a, const Octonion& b) { return a += b; }
  friend Octonion operator-(Octonion a, const Octonion& b) { return a -= b; }
  friend Octonion operator*(Octonion a, double s) { return a *= s; }
  friend Octonion operator*(double s, Octonion a) { return a *= s; }
  friend Octonion operator-(const Octonion& a) { return a * -1.0; }

  /// Bilinear extension of the structure table.
  friend Octonion operator*(const Octonion& a, const Octonion& b) {
    std::array<double, 8> r{};
    for (int i = 0; i < 8; ++i) {
      if (a.c_[i] == 0.0) continue;
      for (int j = 0; j < 8; ++j) {
        if (b.c_[j] == 0.0) continue;
        const SignedUnit p = kStructureTable[i][j];
        r[p.index] += p.sign * a.c_[i] * b.c_[j];
      }
    }
    return Octonion(r);
  }

  friend bool operator==(const Octonion& a, const Octonion& b) { return a.c_ == b.c_; }

 private:
  void check_finite() const {
    for (double v : c_)
      if (!std::isfinite(v))
        throw std::invalid_argument("Octonion: non-finite coefficient");
  }

  std::array<double, 8> c_;
};

/// (ab)c - a(bc); zero exactly when the arguments associate.
inline Octonion associator(const Octonion& a, const Octonion& b, const Octonion& c) {
  return (a * b) * c - a * (b * c);
}

inline double max_abs(const Octonion& o) {
  double m = 0;
  for (int i = 0; i < 8; ++i) m = std::max(m, std::abs(o[i]));
  return m;
}

}  // namespace splitoct
