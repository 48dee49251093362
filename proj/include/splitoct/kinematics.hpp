#pragma once

// Physical-signal layer: the (t, x, lambda, omega) coordinates and their
// octonionic image, the (4,4) interval, the generalized Lorentz factor, the
// uncertainty relations, the paracomplex grouping, and classical-limit sweeps.

#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "splitoct/automorphisms.hpp"
#include "splitoct/octonion.hpp"
#include "splitoct/transforms.hpp"

namespace splitoct {

struct Constants {
  double c = 1.0;
  double hbar = 1.0;  // 0 allowed: the classical limit is reachable exactly

  Constants() = default;
  Constants(double c_, double hbar_) : c(c_), hbar(hbar_) {
    if (!(c > 0)) throw std::invalid_argument("Constants: c must be positive");
    if (!(hbar >= 0)) throw std::invalid_argument("Constants: hbar must be >= 0");
  }
};

struct Signal {
  double t = 0;
  std::array<double, 3> x{};
  std::array<double, 3> lambda{};
  double omega = 0;
};

/// Coefficients (ct, x1, x2, x3, hbar*lambda1..3, c*hbar*omega).
inline Octonion to_octonion(const Signal& s, const Constants& k) {
  return Octonion(k.c * s.t, s.x[0], s.x[1], s.x[2], k.hbar * s.lambda[0],
                  k.hbar * s.lambda[1], k.hbar * s.lambda[2],
                  k.c * k.hbar * s.omega);
}

/// Inverse of to_octonion; needs hbar > 0 to recover lambda and omega.
inline Signal from_octonion(const Octonion& o, const Constants& k) {
  if (!(k.hbar > 0))
    throw std::invalid_argument("from_octonion: hbar must be positive");
  Signal s;
  s.t = o[0] / k.c;
  for (int i = 0; i < 3; ++i) {
    s.x[static_cast<size_t>(i)] = o[1 + i];
    s.lambda[static_cast<size_t>(i)] = o[4 + i] / k.hbar;
  }
  s.omega = o[7] / (k.c * k.hbar);
  return s;
}

/// c^2 t^2 - x.x + hbar^2 lambda.lambda - c^2 hbar^2 omega^2; equals
/// norm(to_octonion(s, k)).
inline double interval(const Signal& s, const Constants& k) {
  double r = k.c * k.c * s.t * s.t - k.c * k.c * k.hbar * k.hbar * s.omega * s.omega;
  for (int i = 0; i < 3; ++i)
    r += -s.x[static_cast<size_t>(i)] * s.x[static_cast<size_t>(i)] +
         k.hbar * k.hbar * s.lambda[static_cast<size_t>(i)] * s.lambda[static_cast<size_t>(i)];
  return r;
}

/// The paracomplex grouping s = c(t + hbar omega I) + J^n (x_n + hbar lambda_n I):
/// the pair (ct, c hbar omega) followed by the three pairs (x_n, hbar lambda_n).
inline std::array<std::array<double, 2>, 4> paracomplex_form(const Octonion& s) {
  return {{{s[0], s[7]}, {s[1], s[4]}, {s[2], s[5]}, {s[3], s[6]}}};
}

struct RateState {
  std::array<double, 3> v{};                      // dx_n/dt
  double domega_dt = 0;                           // domega/dt
  std::array<std::array<double, 3>, 3> dlambda_dx{};  // dlambda_n/dx_m
};

/// ds/dt = sqrt([1 - hbar^2 (domega/dt)^2] - (v^2/c^2)[1 - hbar^2 |dlambda/dx|_F^2]).
/// The double contraction is the full Frobenius square of the 3x3 matrix.
inline double lorentz_factor(const RateState& r, const Constants& k) {
  double v2 = 0, frob2 = 0;
  for (int i = 0; i < 3; ++i) {
    v2 += r.v[static_cast<size_t>(i)] * r.v[static_cast<size_t>(i)];
    for (int j = 0; j < 3; ++j)
      frob2 += r.dlambda_dx[static_cast<size_t>(i)][static_cast<size_t>(j)] *
               r.dlambda_dx[static_cast<size_t>(i)][static_cast<size_t>(j)];
  }
  const double h2 = k.hbar * k.hbar;
  const double radicand =
      (1 - h2 * r.domega_dt * r.domega_dt) - (v2 / (k.c * k.c)) * (1 - h2 * frob2);
  if (radicand < 0)
    throw std::domain_error("lorentz_factor: negative radicand (non-timelike rate)");
  return std::sqrt(radicand);
}

struct UncertaintyRelation {
  std::string name;
  double margin = 0;  // >= 0 means the relation holds (non-strict)
  bool pass = false;
};

struct UncertaintyReport {
  std::vector<UncertaintyRelation> relations;
  bool pass = true;
};

/// v^2 <= c^2, dx^n/dlambda^n >= hbar per component (no summation),
/// dt/domega >= hbar. Margins are non-strict.
inline UncertaintyReport uncertainty_check(const std::array<double, 3>& dx_dlambda,
                                           double dt_domega, double v2,
                                           const Constants& k) {
  UncertaintyReport rep;
  auto push = [&rep](const std::string& name, double margin) {
    const bool ok = margin >= 0;
    rep.relations.push_back({name, margin, ok});
    rep.pass = rep.pass && ok;
  };
  push("v^2 <= c^2", k.c * k.c - v2);
  for (int n = 0; n < 3; ++n)
    push("dx" + std::to_string(n + 1) + "/dlambda" + std::to_string(n + 1) + " >= hbar",
         dx_dlambda[static_cast<size_t>(n)] - k.hbar);
  push("dt/domega >= hbar", dt_domega - k.hbar);
  return rep;
}

// ---------------------------------------------------------------------------
// Classical-limit sweeps: apply a transform to the signal's octonion at a
// sequence of hbar values and report the deviation of the (ct, x) block from
// the matching classical action.

struct SweepPoint {
  double hbar = 0;
  double deviation = 0;
};

/// Core sweep; classical_tx maps the input (ct, x1..x3) block to its expected
/// classical image.
inline std::vector<SweepPoint> classical_limit_sweep(
    const Signal& sig, double c,
    const std::function<Octonion(const Octonion&)>& apply,
    const std::function<std::array<double, 4>(const std::array<double, 4>&)>& classical_tx,
    const std::vector<double>& hbars) {
  std::vector<SweepPoint> out;
  out.reserve(hbars.size());
  for (double h : hbars) {
    const Constants k(c, h);
    const Octonion transformed = apply(to_octonion(sig, k));
    const std::array<double, 4> expected =
        classical_tx({c * sig.t, sig.x[0], sig.x[1], sig.x[2]});
    double dev2 = 0;
    for (int i = 0; i < 4; ++i) {
      const double d = transformed[i] - expected[static_cast<size_t>(i)];
      dev2 += d * d;
    }
    out.push_back({h, std::sqrt(dev2)});
  }
  return out;
}

/// Sweep for a boost along axis n; the classical action is the Lorentz boost
/// of (ct, x).
inline std::vector<SweepPoint> classical_limit_sweep_boost(
    const Signal& sig, int direction, double v, double c,
    const std::vector<double>& hbars) {
  if (!(std::abs(v) < c))
    throw std::invalid_argument("classical_limit_sweep_boost: |v| must be < c");
  const double m = std::atanh(v / c), ch = std::cosh(m), sh = std::sinh(m);
  return classical_limit_sweep(
      sig, c, [direction, v, c](const Octonion& o) { return boost(o, direction, v, c); },
      [direction, ch, sh](const std::array<double, 4>& tx) {
        std::array<double, 4> r = tx;
        r[0] = ch * tx[0] + sh * tx[static_cast<size_t>(direction)];
        r[static_cast<size_t>(direction)] = sh * tx[0] + ch * tx[static_cast<size_t>(direction)];
        return r;
      },
      hbars);
}

/// Sweep for a fix-jn automorphism (applied actively to the octonion value);
/// the classical action is the O(3) rotation about axis n by (alpha - beta)/2,
/// which is the angle the induced J-block actually carries.
inline std::vector<SweepPoint> classical_limit_sweep_automorphism(
    const Signal& sig, const AutomorphismSpec& spec, double c,
    const std::vector<double>& hbars) {
  if (spec.family != Family::fix_j1 && spec.family != Family::fix_j2 &&
      spec.family != Family::fix_j3)
    throw std::invalid_argument(
        "classical_limit_sweep_automorphism: only fix-jn families have a "
        "classical rotation limit");
  const int n = fixed_axis(spec.family) - 3, q = n % 3 + 1, r = q % 3 + 1;
  const double phi = (spec.p0 - spec.p1) / 2;
  const LinearMap8 m = finite_automorphism(spec);
  return classical_limit_sweep(
      sig, c, [m](const Octonion& o) { return m.apply(o); },
      [n, q, r, phi](const std::array<double, 4>& tx) {
        std::array<double, 4> out = tx;
        out[static_cast<size_t>(q)] = std::cos(phi) * tx[static_cast<size_t>(q)] - std::sin(phi) * tx[static_cast<size_t>(r)];
        out[static_cast<size_t>(r)] = std::sin(phi) * tx[static_cast<size_t>(q)] + std::cos(phi) * tx[static_cast<size_t>(r)];
        (void)n;
        return out;
      },
      hbars);
}

}  // namespace splitoct
