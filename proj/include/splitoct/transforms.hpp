#pragma once

// One-sided rotations of split octonions: exponential rotors, the four-plane
// decompositions they induce, passive four-angle rotations, Lorentz boosts,
// and the left-multiplication generators.

#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

#include "splitoct/linear_map.hpp"
#include "splitoct/octonion.hpp"

namespace splitoct {

constexpr bool is_circular_axis(int axis) { return axis >= kj1 && axis <= kj3; }
constexpr bool is_hyperbolic_axis(int axis) {
  return (axis >= kJ1 && axis <= kJ3) || axis == kI;
}

/// exp(e_axis * param): cos/sin for the jn axes (square -1), cosh/sinh for
/// Jn and I (square +1). Unit norm up to floating error.
inline Octonion rotor_exp(int axis, double param) {
  if (axis < 1 || axis > 7)
    throw std::invalid_argument("rotor_exp: axis must be a hypercomplex unit 1..7");
  std::array<double, 8> c{};
  if (is_circular_axis(axis)) {
    c[0] = std::cos(param);
    c[static_cast<size_t>(axis)] = std::sin(param);
  } else {
    c[0] = std::cosh(param);
    c[static_cast<size_t>(axis)] = std::sinh(param);
  }
  return Octonion(c);
}

/// s' = r * s. For |norm(r)| = 1 this preserves |norm(s)|.
inline Octonion left_transform(const Octonion& r, const Octonion& s) { return r * s; }

/// Matrix of left multiplication by e_unit on coefficient vectors; also the
/// derivative at 0 of left multiplication by exp(e_unit * t).
inline LinearMap8 left_mult_generator(int unit) {
  if (unit < 1 || unit > 7)
    throw std::invalid_argument("left_mult_generator: unit must be 1..7");
  LinearMap8 g;
  for (int b = 0; b < 8; ++b) {
    const SignedUnit p = basis_mul(unit, b);
    g.at(p.index, b) = p.sign;
  }
  return g;
}

enum class PlaneKind { circular, hyperbolic };

struct Plane {
  int u = 0;          // basis index carrying the cos/cosh component
  int w = 0;          // partner index; e_axis * e_u = table_sign * e_w
  int table_sign = 1;
  double amplitude = 0;  // circular: N >= 0; hyperbolic: sign(coeff_u) * sqrt(norm2)
  double angle = 0;      // theta in (-pi, pi] or hyperbolic angle
  double norm2 = 0;      // circular: N^2; hyperbolic: coeff_u^2 - coeff_w^2 (signed)
};

struct PlaneDecomposition {
  int axis = 0;
  PlaneKind kind = PlaneKind::circular;
  std::array<Plane, 4> planes;
};

/// Reported when a hyperbolic decomposition hits a plane whose signed norm
/// squared is not positive.
class DecompositionError : public std::domain_error {
 public:
  DecompositionError(std::string msg, std::vector<std::array<int, 2>> offending)
      : std::domain_error(std::move(msg)), offending_planes(std::move(offending)) {}
  std::vector<std::array<int, 2>> offending_planes;
};

namespace detail {

// Plane layout per axis, order (t, x, lambda, omega)-like: the scalar plane
// first, then the three line planes. For jn: the J-pair, the j-pair, (I, Jn).
// For Jn: (Jq, jr), (Jr, jq), (jn, I) with q, r the cyclic successors.
// For I: (Jn, jn) for n = 1, 2, 3.
inline std::array<Plane, 4> plane_layout(int axis) {
  std::array<std::array<int, 2>, 4> pairs{};
  if (is_circular_axis(axis)) {
    const int n = axis - 3, q = n % 3 + 1, r = q % 3 + 1;
    pairs = {{{0, axis}, {r, q}, {q + 3, r + 3}, {kI, n}}};
  } else if (axis >= kJ1 && axis <= kJ3) {
    const int n = axis, q = n % 3 + 1, r = q % 3 + 1;
    pairs = {{{0, axis}, {q, r + 3}, {r, q + 3}, {n + 3, kI}}};
  } else if (axis == kI) {
    pairs = {{{0, kI}, {kJ1, kj1}, {kJ2, kj2}, {kJ3, kj3}}};
  } else {
    throw std::invalid_argument("plane_layout: axis must be 1..7");
  }
  std::array<Plane, 4> planes{};
  for (int p = 0; p < 4; ++p) {
    Plane& pl = planes[static_cast<size_t>(p)];
    pl.u = pairs[static_cast<size_t>(p)][0];
    const SignedUnit prod = basis_mul(axis, pl.u);
    pl.w = prod.index;
    pl.table_sign = prod.sign;
    if (pl.w != pairs[static_cast<size_t>(p)][1])
      throw std::logic_error("plane_layout: pair inconsistent with structure table");
  }
  return planes;
}

}  // namespace detail

/// Splits s into four rotor-weighted terms about a jn axis:
/// s = sum_p N_p exp(e_axis * theta_p) e_{u_p}. Always defined; degenerate
/// planes get angle 0. Angles use the two-argument arctangent, range (-pi, pi].
inline PlaneDecomposition decompose_circular(const Octonion& s, int axis) {
  if (!is_circular_axis(axis))
    throw std::invalid_argument("decompose_circular: axis must be j1, j2 or j3");
  PlaneDecomposition d;
  d.axis = axis;
  d.kind = PlaneKind::circular;
  d.planes = detail::plane_layout(axis);
  for (Plane& p : d.planes) {
    const double cu = s[p.u], cw = s[p.w];
    p.amplitude = std::hypot(cu, cw);
    p.norm2 = cu * cu + cw * cw;
    // table_sign is +1 for every circular plane by the layout's choice of u
    p.angle = p.amplitude == 0.0 ? 0.0 : std::atan2(p.table_sign * cw, cu);
    if (p.angle <= -M_PI) p.angle = M_PI;
  }
  return d;
}

/// Hyperbolic analogue about a Jn or I axis. Each plane needs
/// coeff_u^2 - coeff_w^2 > 0 (an exactly-zero plane is allowed); otherwise a
/// DecompositionError names every offending plane.
inline PlaneDecomposition decompose_hyperbolic(const Octonion& s, int axis) {
  if (!is_hyperbolic_axis(axis))
    throw std::invalid_argument("decompose_hyperbolic: axis must be J1, J2, J3 or I");
  PlaneDecomposition d;
  d.axis = axis;
  d.kind = PlaneKind::hyperbolic;
  d.planes = detail::plane_layout(axis);
  std::vector<std::array<int, 2>> offending;
  for (Plane& p : d.planes) {
    const double cu = s[p.u], cw = s[p.w];
    p.norm2 = cu * cu - cw * cw;
    if (cu == 0.0 && cw == 0.0) {
      p.amplitude = 0.0;
      p.angle = 0.0;
      continue;
    }
    if (p.norm2 <= 0.0) {
      offending.push_back({p.u, p.w});
      continue;
    }
    p.amplitude = std::copysign(std::sqrt(p.norm2), cu);
    p.angle = std::atanh(p.table_sign * cw / cu);
  }
  if (!offending.empty()) {
    std::ostringstream msg;
    msg << "decompose_hyperbolic: non-positive plane norm about "
        << kUnitNames[axis] << " in plane(s)";
    for (const auto& pr : offending)
      msg << " (" << kUnitNames[pr[0]] << "," << kUnitNames[pr[1]] << ")";
    throw DecompositionError(msg.str(), offending);
  }
  return d;
}

inline Octonion reconstruct(const PlaneDecomposition& d) {
  std::array<double, 8> c{};
  for (const Plane& p : d.planes) {
    if (d.kind == PlaneKind::circular) {
      c[static_cast<size_t>(p.u)] += p.amplitude * std::cos(p.angle);
      c[static_cast<size_t>(p.w)] += p.table_sign * p.amplitude * std::sin(p.angle);
    } else {
      c[static_cast<size_t>(p.u)] += p.amplitude * std::cosh(p.angle);
      c[static_cast<size_t>(p.w)] += p.table_sign * p.amplitude * std::sinh(p.angle);
    }
  }
  return Octonion(c);
}

/// Adds one independent phase per plane and reassembles: the four-angle
/// passive rotation. Circular axes accept any s; hyperbolic axes require the
/// decomposition to exist. Plane norms, hence the full (4,4) norm, are kept.
inline Octonion passive_rotate(const Octonion& s, int axis,
                               const std::array<double, 4>& phases) {
  PlaneDecomposition d = is_circular_axis(axis) ? decompose_circular(s, axis)
                                                : decompose_hyperbolic(s, axis);
  for (int p = 0; p < 4; ++p) d.planes[static_cast<size_t>(p)].angle += phases[static_cast<size_t>(p)];
  return reconstruct(d);
}

/// Lorentz boost along axis n: left multiplication by exp(Jn * artanh(v/c)).
inline Octonion boost(const Octonion& s, int direction, double v, double c) {
  if (direction < 1 || direction > 3)
    throw std::invalid_argument("boost: direction must be 1, 2 or 3");
  if (!(c > 0)) throw std::invalid_argument("boost: c must be positive");
  if (!(std::abs(v) < c))
    throw std::invalid_argument("boost: |v| must be less than c");
  return left_transform(rotor_exp(direction, std::atanh(v / c)), s);
}

}  // namespace splitoct
