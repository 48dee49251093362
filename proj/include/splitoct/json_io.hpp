#pragma once

// JSON wire formats: octonions, signals, transform specs, decompositions and
// verify reports.

#include <array>
#include <stdexcept>
#include <string>
#include <variant>

#include <json.hpp>

#include "splitoct/automorphisms.hpp"
#include "splitoct/kinematics.hpp"
#include "splitoct/octonion.hpp"
#include "splitoct/transforms.hpp"
#include "splitoct/verify.hpp"

namespace splitoct {

using json = nlohmann::json;

// {"coeff":[a0,...,a7]}
inline json to_json(const Octonion& o) {
  json j;
  j["coeff"] = o.coeff();
  return j;
}

inline Octonion octonion_from_json(const json& j) {
  const auto& c = j.at("coeff");
  if (!c.is_array() || c.size() != 8)
    throw std::invalid_argument("octonion JSON: \"coeff\" must have exactly 8 numbers");
  std::array<double, 8> a;
  for (size_t i = 0; i < 8; ++i) a[i] = c.at(i).get<double>();
  return Octonion(a);
}

// {"t":..,"x":[..],"lambda":[..],"omega":..}
inline json to_json(const Signal& s) {
  return json{{"t", s.t}, {"x", s.x}, {"lambda", s.lambda}, {"omega", s.omega}};
}

inline Signal signal_from_json(const json& j) {
  Signal s;
  s.t = j.at("t").get<double>();
  const auto& x = j.at("x");
  const auto& l = j.at("lambda");
  if (x.size() != 3 || l.size() != 3)
    throw std::invalid_argument("signal JSON: \"x\" and \"lambda\" need 3 entries");
  for (size_t i = 0; i < 3; ++i) {
    s.x[i] = x.at(i).get<double>();
    s.lambda[i] = l.at(i).get<double>();
  }
  s.omega = j.at("omega").get<double>();
  return s;
}

inline int axis_from_string(const std::string& s) {
  for (int i = 1; i <= 7; ++i)
    if (s == kUnitNames[static_cast<size_t>(i)]) return i;
  throw std::invalid_argument("unknown axis: " + s + " (expected J1|J2|J3|j1|j2|j3|I)");
}

// {"family":"fix-j1","params":[a,b]}
inline json to_json(const AutomorphismSpec& s) {
  return json{{"family", family_name(s.family)}, {"params", {s.p0, s.p1}}};
}

inline AutomorphismSpec automorphism_from_json(const json& j) {
  AutomorphismSpec s;
  s.family = parse_family(j.at("family").get<std::string>());
  const auto& p = j.at("params");
  if (p.size() != 2)
    throw std::invalid_argument("automorphism JSON: \"params\" needs 2 entries");
  s.p0 = p.at(0).get<double>();
  s.p1 = p.at(1).get<double>();
  return s;
}

// G2Params: five named arrays.
inline json to_json(const G2Params& p) {
  return json{{"alpha", p.alpha}, {"beta", p.beta}, {"u", p.u}, {"k", p.k},
              {"sigma", p.sigma}};
}

inline G2Params g2_params_from_json(const json& j) {
  G2Params p;
  auto read3 = [&j](const char* key, std::array<double, 3>& out) {
    const auto& a = j.at(key);
    if (a.size() != 3) throw std::invalid_argument(std::string("g2 params: \"") + key + "\" needs 3 entries");
    for (size_t i = 0; i < 3; ++i) out[i] = a.at(i).get<double>();
  };
  read3("alpha", p.alpha);
  read3("beta", p.beta);
  read3("u", p.u);
  read3("k", p.k);
  const auto& s = j.at("sigma");
  if (s.size() != 2) throw std::invalid_argument("g2 params: \"sigma\" needs 2 entries");
  p.sigma[0] = s.at(0).get<double>();
  p.sigma[1] = s.at(1).get<double>();
  return p;
}

// Transform specs:
//   {"rotor":{"axis":"j1","param":0.3}}
//   {"boost":{"n":1,"v":0.6,"c":1.0}}
//   {"passive":{"axis":"j1","phases":[a,b,c,d]}}
//   {"automorphism":{"family":"fix-j1","params":[a,b]}}  (flat form accepted too)
struct RotorSpec {
  int axis;
  double param;
};
struct BoostSpec {
  int n;
  double v;
  double c;
};
struct PassiveSpec {
  int axis;
  std::array<double, 4> phases;
};
using TransformSpec = std::variant<RotorSpec, BoostSpec, PassiveSpec, AutomorphismSpec>;

inline TransformSpec transform_spec_from_json(const json& j) {
  if (j.contains("rotor")) {
    const auto& r = j.at("rotor");
    return RotorSpec{axis_from_string(r.at("axis").get<std::string>()),
                     r.at("param").get<double>()};
  }
  if (j.contains("boost")) {
    const auto& b = j.at("boost");
    return BoostSpec{b.at("n").get<int>(), b.at("v").get<double>(),
                     b.value("c", 1.0)};
  }
  if (j.contains("passive")) {
    const auto& p = j.at("passive");
    const auto& ph = p.at("phases");
    if (ph.size() != 4)
      throw std::invalid_argument("passive spec: \"phases\" needs 4 entries");
    std::array<double, 4> phases;
    for (size_t i = 0; i < 4; ++i) phases[i] = ph.at(i).get<double>();
    return PassiveSpec{axis_from_string(p.at("axis").get<std::string>()), phases};
  }
  if (j.contains("automorphism")) return automorphism_from_json(j.at("automorphism"));
  if (j.contains("family")) return automorphism_from_json(j);
  throw std::invalid_argument(
      "transform spec: expected one of rotor|boost|passive|automorphism");
}

inline Octonion apply_transform(const TransformSpec& spec, const Octonion& s) {
  if (const auto* r = std::get_if<RotorSpec>(&spec))
    return left_transform(rotor_exp(r->axis, r->param), s);
  if (const auto* b = std::get_if<BoostSpec>(&spec)) return boost(s, b->n, b->v, b->c);
  if (const auto* p = std::get_if<PassiveSpec>(&spec))
    return passive_rotate(s, p->axis, p->phases);
  return finite_automorphism(std::get<AutomorphismSpec>(spec)).apply(s);
}

inline json to_json(const PlaneDecomposition& d) {
  json planes = json::array();
  for (const Plane& p : d.planes) {
    planes.push_back({{"plane", {kUnitNames[static_cast<size_t>(p.u)], kUnitNames[static_cast<size_t>(p.w)]}},
                      {"amplitude", p.amplitude},
                      {"angle", p.angle},
                      {"norm2", p.norm2}});
  }
  return json{{"axis", kUnitNames[static_cast<size_t>(d.axis)]},
              {"kind", d.kind == PlaneKind::circular ? "circular" : "hyperbolic"},
              {"planes", planes}};
}

inline json to_json(const VerifyReport& r) {
  json props = json::array();
  for (const auto& p : r.properties)
    props.push_back({{"name", p.name},
                     {"trials", p.trials},
                     {"max_deviation", p.max_deviation},
                     {"tolerance", p.tolerance},
                     {"pass", p.pass}});
  return json{{"suite", r.suite},     {"seed", r.seed},
              {"trials", r.trials},   {"tolerance", r.tolerance},
              {"wall_seconds", r.wall_seconds}, {"pass", r.pass()},
              {"properties", props}};
}

}  // namespace splitoct
