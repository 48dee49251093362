#pragma once

// Seeded, machine-checkable invariant suites over the algebra, transform,
// automorphism and kinematics modules. The CLI `verify` command runs these;
// the acceptance tests pin the published tolerances.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <future>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "splitoct/automorphisms.hpp"
#include "splitoct/kinematics.hpp"
#include "splitoct/linear_map.hpp"
#include "splitoct/octonion.hpp"
#include "splitoct/transforms.hpp"

namespace splitoct {

struct PropertyResult {
  std::string name;
  long trials = 0;
  double max_deviation = 0;
  double tolerance = 0;
  bool pass = false;
};

struct VerifyReport {
  std::string suite;
  std::uint64_t seed = 0;
  long trials = 0;
  double tolerance = 0;
  double wall_seconds = 0;
  std::vector<PropertyResult> properties;

  bool pass() const {
    return std::all_of(properties.begin(), properties.end(),
                       [](const PropertyResult& p) { return p.pass; });
  }
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline Octonion random_octonion(std::mt19937_64& rng, double range = 1e3) {
  std::uniform_real_distribution<double> d(-range, range);
  std::array<double, 8> c;
  for (auto& v : c) v = d(rng);
  return Octonion(c);
}

/// Max deviation over `trials` evaluations, sharded over a fixed number of
/// deterministically sub-seeded workers so the result is thread-count
/// independent.
inline double max_over_trials(long trials, std::uint64_t seed,
                              const std::function<double(std::mt19937_64&)>& fn,
                              int threads = 4) {
  constexpr int kShards = 4;  // fixed: the shard split is part of the RNG stream
  std::array<long, kShards> counts{};
  for (int i = 0; i < kShards; ++i) counts[static_cast<size_t>(i)] = trials / kShards + (i < trials % kShards ? 1 : 0);
  auto run_shard = [&fn](long n, std::uint64_t shard_seed) {
    std::mt19937_64 rng(shard_seed);
    double m = 0;
    for (long t = 0; t < n; ++t) m = std::max(m, fn(rng));
    return m;
  };
  double result = 0;
  if (threads > 1) {
    std::vector<std::future<double>> futs;
    for (int i = 0; i < kShards; ++i)
      futs.push_back(std::async(std::launch::async, run_shard, counts[static_cast<size_t>(i)],
                                splitmix64(seed + static_cast<std::uint64_t>(i))));
    for (auto& f : futs) result = std::max(result, f.get());
  } else {
    for (int i = 0; i < kShards; ++i)
      result = std::max(result, run_shard(counts[static_cast<size_t>(i)],
                                          splitmix64(seed + static_cast<std::uint64_t>(i))));
  }
  return result;
}

inline double rel_dev(const Octonion& got, const Octonion& want) {
  return max_abs(got - want) / (1.0 + max_abs(want));
}

inline LinearMap8 q_form() {
  LinearMap8 q;
  for (int i = 0; i < 8; ++i) q.at(i, i) = quadratic_sign(i);
  return q;
}

}  // namespace detail

inline VerifyReport run_algebra_suite(long trials, double tol, std::uint64_t seed,
                                      int threads = 4) {
  using namespace detail;
  const auto start = std::chrono::steady_clock::now();
  VerifyReport rep{"algebra", seed, trials, tol, 0, {}};
  auto prop = [&](const std::string& name, double dev, long n) {
    rep.properties.push_back({name, n, dev, tol, dev <= tol});
  };

  prop("norm_composition",
       max_over_trials(trials, seed ^ 0x01, [](std::mt19937_64& rng) {
         const Octonion a = random_octonion(rng), b = random_octonion(rng);
         const double want = a.norm() * b.norm();
         return std::abs((a * b).norm() - want) / (1.0 + std::abs(want));
       }, threads),
       trials);

  prop("conjugation_antihomomorphism",
       max_over_trials(trials, seed ^ 0x02, [](std::mt19937_64& rng) {
         const Octonion a = random_octonion(rng), b = random_octonion(rng);
         return rel_dev((a * b).conj(), b.conj() * a.conj());
       }, threads),
       trials);

  prop("norm_via_conjugate",
       max_over_trials(trials, seed ^ 0x03, [](std::mt19937_64& rng) {
         const Octonion a = random_octonion(rng);
         const Octonion left = a * a.conj(), right = a.conj() * a;
         const Octonion want = Octonion::scalar(a.norm());
         return std::max(rel_dev(left, want), rel_dev(right, want));
       }, threads),
       trials);

  prop("alternativity",
       max_over_trials(trials, seed ^ 0x04, [](std::mt19937_64& rng) {
         const Octonion a = random_octonion(rng), b = random_octonion(rng);
         const double l = rel_dev(a * (a * b), (a * a) * b);
         const double r = rel_dev((a * b) * b, a * (b * b));
         return std::max(l, r);
       }, threads),
       trials);

  prop("flexibility",
       max_over_trials(trials, seed ^ 0x05, [](std::mt19937_64& rng) {
         const Octonion a = random_octonion(rng), b = random_octonion(rng);
         return rel_dev(a * (b * a), (a * b) * a);
       }, threads),
       trials);

  {  // structural: exactly 4 positive and 4 negative diagonal signs
    int pos = 0, neg = 0;
    for (int i = 0; i < 8; ++i) (quadratic_sign(i) > 0 ? pos : neg)++;
    const std::array<int, 8> want = {1, -1, -1, -1, 1, 1, 1, -1};
    bool exact = pos == 4 && neg == 4;
    for (int i = 0; i < 8; ++i) exact = exact && quadratic_sign(i) == want[static_cast<size_t>(i)];
    prop("signature_4_4", exact ? 0.0 : 1.0, 1);
  }

  rep.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

inline VerifyReport run_transforms_suite(long trials, double tol, std::uint64_t seed,
                                         int threads = 4) {
  using namespace detail;
  const auto start = std::chrono::steady_clock::now();
  VerifyReport rep{"transforms", seed, trials, tol, 0, {}};
  auto prop = [&](const std::string& name, double dev, long n) {
    rep.properties.push_back({name, n, dev, tol, dev <= tol});
  };

  prop("rotor_group_law",
       max_over_trials(trials, seed ^ 0x11, [](std::mt19937_64& rng) {
         std::uniform_int_distribution<int> ax(1, 7);
         const int axis = ax(rng);
         std::uniform_real_distribution<double> pd(is_circular_axis(axis) ? -M_PI : -3.0,
                                                   is_circular_axis(axis) ? M_PI : 3.0);
         const double a = pd(rng), b = pd(rng);
         return rel_dev(rotor_exp(axis, a) * rotor_exp(axis, b), rotor_exp(axis, a + b));
       }, threads),
       trials);

  prop("left_transform_norm_preservation",
       max_over_trials(trials, seed ^ 0x12, [](std::mt19937_64& rng) {
         std::uniform_int_distribution<int> ax(1, 7);
         const int axis = ax(rng);
         std::uniform_real_distribution<double> pd(is_circular_axis(axis) ? -M_PI : -2.0,
                                                   is_circular_axis(axis) ? M_PI : 2.0);
         const Octonion r = rotor_exp(axis, pd(rng));
         const Octonion s = random_octonion(rng);
         const double want = std::abs(s.norm());
         return std::abs(std::abs(left_transform(r, s).norm()) - want) /
                (1.0 + std::abs(want));
       }, threads),
       trials);

  prop("circular_roundtrip",
       max_over_trials(trials, seed ^ 0x13, [](std::mt19937_64& rng) {
         const Octonion s = random_octonion(rng);
         double worst = 0;
         for (int axis = kj1; axis <= kj3; ++axis)
           worst = std::max(worst, rel_dev(reconstruct(decompose_circular(s, axis)), s));
         return worst;
       }, threads),
       trials);

  prop("circular_plane_norm_identity",
       max_over_trials(trials, seed ^ 0x14, [](std::mt19937_64& rng) {
         const Octonion s = random_octonion(rng);
         double worst = 0;
         for (int axis = kj1; axis <= kj3; ++axis) {
           const auto d = decompose_circular(s, axis);
           double total = 0;
           for (const Plane& p : d.planes) total += quadratic_sign(p.u) * p.norm2;
           worst = std::max(worst,
                            std::abs(total - s.norm()) / (1.0 + std::abs(s.norm())));
         }
         return worst;
       }, threads),
       trials);

  prop("hyperbolic_roundtrip",
       max_over_trials(trials, seed ^ 0x15, [](std::mt19937_64& rng) {
         // sample decompositions directly so every plane is positive
         std::uniform_int_distribution<int> ax(1, 4);
         const int pick = ax(rng);
         const int axis = pick == 4 ? kI : pick;
         std::uniform_real_distribution<double> amp(0.1, 10.0), ang(-2.0, 2.0);
         std::uniform_int_distribution<int> sgn(0, 1);
         PlaneDecomposition d;
         d.axis = axis;
         d.kind = PlaneKind::hyperbolic;
         d.planes = decompose_hyperbolic(Octonion(), axis).planes;
         for (Plane& p : d.planes) {
           p.amplitude = (sgn(rng) ? 1 : -1) * amp(rng);
           p.angle = ang(rng);
           p.norm2 = p.amplitude * p.amplitude;
         }
         const Octonion s = reconstruct(d);
         return rel_dev(reconstruct(decompose_hyperbolic(s, axis)), s);
       }, threads),
       trials);

  prop("passive_rotate_norm_preservation",
       max_over_trials(trials, seed ^ 0x16, [](std::mt19937_64& rng) {
         const Octonion s = random_octonion(rng);
         std::uniform_int_distribution<int> ax(kj1, kj3);
         std::uniform_real_distribution<double> ph(-M_PI, M_PI);
         const std::array<double, 4> phases = {ph(rng), ph(rng), ph(rng), ph(rng)};
         const Octonion s2 = passive_rotate(s, ax(rng), phases);
         return std::abs(s2.norm() - s.norm()) / (1.0 + std::abs(s.norm()));
       }, threads),
       trials);

  prop("passive_rotate_inverse",
       max_over_trials(trials, seed ^ 0x17, [](std::mt19937_64& rng) {
         const Octonion s = random_octonion(rng);
         std::uniform_int_distribution<int> ax(kj1, kj3);
         const int axis = ax(rng);
         std::uniform_real_distribution<double> ph(-M_PI, M_PI);
         const std::array<double, 4> phases = {ph(rng), ph(rng), ph(rng), ph(rng)};
         const std::array<double, 4> neg = {-phases[0], -phases[1], -phases[2], -phases[3]};
         return rel_dev(passive_rotate(passive_rotate(s, axis, phases), axis, neg), s);
       }, threads),
       trials);

  prop("boost_composition",
       max_over_trials(trials, seed ^ 0x18, [](std::mt19937_64& rng) {
         std::uniform_real_distribution<double> vd(-0.9, 0.9);
         std::uniform_int_distribution<int> nd(1, 3);
         const int n = nd(rng);
         const double c = 1.0, v1 = vd(rng), v2 = vd(rng);
         const double v12 = (v1 + v2) / (1 + v1 * v2 / (c * c));
         const Octonion s = random_octonion(rng);
         return rel_dev(boost(boost(s, n, v1, c), n, v2, c), boost(s, n, v12, c));
       }, threads),
       trials);

  {  // G^T Q + Q G = 0 for the seven left-multiplication generators (exact)
    const LinearMap8 q = q_form();
    double worst = 0;
    for (int u = 1; u <= 7; ++u) {
      const LinearMap8 g = left_mult_generator(u);
      worst = std::max(worst, max_abs(g.transpose() * q + q * g));
    }
    rep.properties.push_back({"generator_q_antisymmetry", 7, worst, 0.0, worst == 0.0});
  }

  prop("rotor_matches_matrix_exponential",
       max_over_trials(std::max(1L, trials / 100), seed ^ 0x19, [](std::mt19937_64& rng) {
         std::uniform_int_distribution<int> ax(1, 7);
         const int axis = ax(rng);
         std::uniform_real_distribution<double> pd(-1.5, 1.5);
         const double theta = pd(rng);
         const LinearMap8 viaExp = expm(theta * left_mult_generator(axis));
         const Octonion r = rotor_exp(axis, theta);
         LinearMap8 viaRotor;
         for (int b = 0; b < 8; ++b) {
           const Octonion col = r * Octonion::unit(b);
           for (int row = 0; row < 8; ++row) viaRotor.at(row, b) = col[row];
         }
         return max_abs(viaExp - viaRotor) / (1.0 + max_abs(viaRotor));
       }, threads),
       std::max(1L, trials / 100));

  rep.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

inline VerifyReport run_automorphisms_suite(long trials, double tol, std::uint64_t seed,
                                            int threads = 4) {
  using namespace detail;
  const auto start = std::chrono::steady_clock::now();
  VerifyReport rep{"automorphisms", seed, trials, tol, 0, {}};
  auto prop = [&](const std::string& name, double dev, long n) {
    rep.properties.push_back({name, n, dev, tol, dev <= tol});
  };

  auto random_spec = [](std::mt19937_64& rng) {
    std::uniform_int_distribution<int> fd(0, 6);
    std::uniform_real_distribution<double> pd(-M_PI, M_PI);
    return AutomorphismSpec{kAllFamilies[static_cast<size_t>(fd(rng))], pd(rng), pd(rng)};
  };

  prop("table_preservation",
       max_over_trials(trials, seed ^ 0x21, [&](std::mt19937_64& rng) {
         return verify_automorphism(finite_automorphism(random_spec(rng)), 0).max_deviation;
       }, threads),
       trials);

  prop("fixes_scalar_and_axis",
       max_over_trials(trials, seed ^ 0x22, [&](std::mt19937_64& rng) {
         const AutomorphismSpec spec = random_spec(rng);
         const LinearMap8 m = finite_automorphism(spec);
         const int axis = fixed_axis(spec.family);
         return std::max(max_abs(m.apply(Octonion::unit(0)) - Octonion::unit(0)),
                         max_abs(m.apply(Octonion::unit(axis)) - Octonion::unit(axis)));
       }, threads),
       trials);

  prop("norm_form_preservation",
       max_over_trials(trials, seed ^ 0x23, [&](std::mt19937_64& rng) {
         const LinearMap8 m = finite_automorphism(random_spec(rng));
         const LinearMap8 q = q_form();
         // the residual carries rounding from entry products of size
         // max_abs(m)^2, so deviations are judged on that scale
         return max_abs(m.transpose() * q * m - q) / (1.0 + max_abs(m) * max_abs(m));
       }, threads),
       trials);

  prop("composition_closure",
       max_over_trials(std::max(1L, trials / 10), seed ^ 0x24, [&](std::mt19937_64& rng) {
         const LinearMap8 a = finite_automorphism(random_spec(rng));
         const LinearMap8 b = finite_automorphism(random_spec(rng));
         return verify_automorphism(a * b, 0).max_deviation;
       }, threads),
       std::max(1L, trials / 10));

  prop("infinitesimal_norm_invariance",
       max_over_trials(trials, seed ^ 0x25, [](std::mt19937_64& rng) {
         std::uniform_real_distribution<double> d(-1.0, 1.0);
         CoordinateState st;
         st.t = d(rng);
         for (auto& v : st.x) v = d(rng);
         for (auto& v : st.lambda) v = d(rng);
         st.omega = d(rng);
         G2Params p;
         for (auto& v : p.alpha) v = d(rng);
         for (auto& v : p.beta) v = d(rng);
         for (auto& v : p.u) v = d(rng);
         for (auto& v : p.k) v = d(rng);
         for (auto& v : p.sigma) v = d(rng);
         const double eps = 1e-6;
         const CoordinateState out = infinitesimal_passive(st, p, eps);
         auto norm_of = [](const CoordinateState& s) {
           const Constants k(1.0, 1.0);
           return interval(Signal{s.t, s.x, s.lambda, s.omega}, k);
         };
         // second-order in eps: |delta| / (1 + |norm|) stays far below 1e-9
         return std::abs(norm_of(out) - norm_of(st)) / (1.0 + std::abs(norm_of(st)));
       }, threads),
       trials);

  {  // t' = t with zero floating error
    std::mt19937_64 rng(seed ^ 0x26);
    std::uniform_real_distribution<double> d(-10, 10);
    double worst = 0;
    for (int i = 0; i < 100; ++i) {
      CoordinateState st;
      st.t = d(rng);
      for (auto& v : st.x) v = d(rng);
      for (auto& v : st.lambda) v = d(rng);
      st.omega = d(rng);
      G2Params p;
      for (auto& v : p.alpha) v = d(rng);
      for (auto& v : p.beta) v = d(rng);
      for (auto& v : p.u) v = d(rng);
      for (auto& v : p.k) v = d(rng);
      for (auto& v : p.sigma) v = d(rng);
      worst = std::max(worst, std::abs(infinitesimal_passive(st, p, 0.1).t - st.t));
    }
    rep.properties.push_back({"time_exactly_invariant", 100, worst, 0.0, worst == 0.0});
  }

  {  // 14 generators: independent, closed, Q-antisymmetric
    const auto gens = g2_generator_matrices();
    const int rank = span_rank(gens);
    const int closure = lie_closure_dim(gens);
    rep.properties.push_back({"generator_rank_14", 1,
                              static_cast<double>(std::abs(rank - 14)), 0.0, rank == 14});
    rep.properties.push_back({"generator_closure_14", 1,
                              static_cast<double>(std::abs(closure - 14)), 0.0,
                              closure == 14});
    const LinearMap8 q = q_form();
    double worst = 0;
    for (const auto& g : gens) worst = std::max(worst, max_abs(g.transpose() * q + q * g));
    rep.properties.push_back({"generator_q_antisymmetry", 14, worst, tol, worst <= tol});
  }

  prop("finite_vs_infinitesimal_second_order",
       [&] {
         double worst = 0;
         for (Family f : kAllFamilies)
           for (int slot : {0, 1}) {
             const double d1 = finite_vs_infinitesimal_check(f, slot, 1e-3);
             const double d2 = finite_vs_infinitesimal_check(f, slot, 2e-3);
             const double ratio = d2 / d1;
             worst = std::max(worst, std::abs(ratio - 4.0) / 4.0);
           }
         return worst <= 0.2 ? 0.0 : worst;  // second-order scaling within 20%
       }(),
       14);

  rep.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

inline VerifyReport run_kinematics_suite(long trials, double tol, std::uint64_t seed,
                                         int threads = 4) {
  using namespace detail;
  const auto start = std::chrono::steady_clock::now();
  VerifyReport rep{"kinematics", seed, trials, tol, 0, {}};
  auto prop = [&](const std::string& name, double dev, long n) {
    rep.properties.push_back({name, n, dev, tol, dev <= tol});
  };

  auto random_signal = [](std::mt19937_64& rng) {
    std::uniform_real_distribution<double> d(-100, 100);
    Signal s;
    s.t = d(rng);
    for (auto& v : s.x) v = d(rng);
    for (auto& v : s.lambda) v = d(rng);
    s.omega = d(rng);
    return s;
  };

  prop("interval_equals_norm",
       max_over_trials(trials, seed ^ 0x31, [&](std::mt19937_64& rng) {
         std::uniform_real_distribution<double> cd(0.5, 3.0), hd(0.0, 2.0);
         const Constants k(cd(rng), hd(rng));
         const Signal s = random_signal(rng);
         const double want = interval(s, k);
         return std::abs(to_octonion(s, k).norm() - want) / (1.0 + std::abs(want));
       }, threads),
       trials);

  prop("signal_roundtrip",
       max_over_trials(trials, seed ^ 0x32, [&](std::mt19937_64& rng) {
         std::uniform_real_distribution<double> cd(0.5, 3.0), hd(0.1, 2.0);
         const Constants k(cd(rng), hd(rng));
         const Signal s = random_signal(rng);
         const Signal back = from_octonion(to_octonion(s, k), k);
         double worst = std::abs(back.t - s.t) + std::abs(back.omega - s.omega);
         for (int i = 0; i < 3; ++i)
           worst = std::max(worst, std::abs(back.x[static_cast<size_t>(i)] - s.x[static_cast<size_t>(i)]) +
                                       std::abs(back.lambda[static_cast<size_t>(i)] - s.lambda[static_cast<size_t>(i)]));
         return worst / 100.0;
       }, threads),
       trials);

  prop("lorentz_factor_classical",
       max_over_trials(trials, seed ^ 0x33, [](std::mt19937_64& rng) {
         std::uniform_real_distribution<double> vd(-0.57, 0.57);  // keeps |v| < c
         RateState r;
         for (auto& v : r.v) v = vd(rng);
         const Constants k(1.0, 0.0);
         const double v2 = r.v[0] * r.v[0] + r.v[1] * r.v[1] + r.v[2] * r.v[2];
         return std::abs(lorentz_factor(r, k) - std::sqrt(1 - v2));
       }, threads),
       trials);

  prop("paracomplex_roundtrip",
       max_over_trials(trials, seed ^ 0x34, [&](std::mt19937_64& rng) {
         const Octonion s = random_octonion(rng);
         const auto pairs = paracomplex_form(s);
         // reassemble through the multiplication table: (a + b I) + sum Jn (a_n + b_n I)
         Octonion r = Octonion::scalar(pairs[0][0]) + pairs[0][1] * Octonion::unit(kI);
         for (int n = 1; n <= 3; ++n)
           r += Octonion::unit(n) * (Octonion::scalar(pairs[static_cast<size_t>(n)][0]) +
                                     pairs[static_cast<size_t>(n)][1] * Octonion::unit(kI));
         return max_abs(r - s);  // exact: signed reshuffling only
       }, threads),
       trials);

  prop("uncertainty_monotone",
       max_over_trials(trials, seed ^ 0x35, [](std::mt19937_64& rng) {
         std::uniform_real_distribution<double> rd(0.0, 3.0), gd(0.0, 2.0);
         const Constants k(1.0, 1.0);
         const std::array<double, 3> ratios = {rd(rng), rd(rng), rd(rng)};
         const double dt_dw = rd(rng), v2 = rd(rng);
         const auto before = uncertainty_check(ratios, dt_dw, v2, k);
         const double grow = gd(rng);
         std::array<double, 3> bigger = ratios;
         for (auto& v : bigger) v += grow;
         const auto after = uncertainty_check(bigger, dt_dw + grow, v2, k);
         for (size_t i = 0; i < before.relations.size(); ++i)
           if (before.relations[i].pass && !after.relations[i].pass &&
               i != 0)  // relation 0 (v^2) unchanged by construction
             return 1.0;
         return 0.0;
       }, threads),
       trials);

  rep.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

inline std::vector<VerifyReport> run_suites(const std::string& which, long trials,
                                            double tol, std::uint64_t seed,
                                            int threads = 4) {
  std::vector<VerifyReport> out;
  const bool all = which == "all";
  if (all || which == "algebra") out.push_back(run_algebra_suite(trials, tol, seed, threads));
  if (all || which == "transforms")
    out.push_back(run_transforms_suite(trials, tol, seed, threads));
  if (all || which == "automorphisms")
    out.push_back(run_automorphisms_suite(trials, tol, seed, threads));
  if (all || which == "kinematics")
    out.push_back(run_kinematics_suite(trials, tol, seed, threads));
  if (out.empty())
    throw std::invalid_argument(
        "unknown suite: " + which +
        " (expected all|algebra|transforms|automorphisms|kinematics)");
  return out;
}

}  // namespace splitoct
