// splitoct: command-line front end for the split-octonion library.
//
// Subcommands: table, graph, verify, transform, decompose, limit.
// Exit codes: 0 success, 1 runtime/property failure, 2 usage error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "splitoct/json_io.hpp"
#include "splitoct/star.hpp"

namespace {

using namespace splitoct;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("SPLITOCT_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      // fall through to the built-in default
    }
  }
  return 12345;
}

json parse_json_arg(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw CLI::ValidationError(std::string(what) + ": malformed JSON: " + e.what());
  }
}

// Signal JSON ({"t":..}) or raw octonion JSON ({"coeff":[..]}).
Octonion read_octonion_arg(const json& j, const Constants& k) {
  if (j.contains("coeff")) return octonion_from_json(j);
  return to_octonion(signal_from_json(j), k);
}

void print_report_text(const VerifyReport& r) {
  std::printf("suite %-14s seed %llu trials %ld tolerance %g wall %.3fs\n",
              r.suite.c_str(), static_cast<unsigned long long>(r.seed), r.trials,
              r.tolerance, r.wall_seconds);
  for (const auto& p : r.properties)
    std::printf("  [%s] %-38s max_dev %.3e (tol %.1e, n=%ld)\n",
                p.pass ? "PASS" : "FAIL", p.name.c_str(), p.max_deviation,
                p.tolerance, p.trials);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"split-octonion algebra, rotations and automorphisms"};
  app.require_subcommand(1);

  double c_flag = 1.0, hbar_flag = 1.0;
  app.add_option("--c", c_flag, "speed of light (signal conversion)")->capture_default_str();
  app.add_option("--hbar", hbar_flag, "Planck constant (signal conversion)")->capture_default_str();

  // table
  auto* cmd_table = app.add_subcommand("table", "print the 8x8 multiplication table");
  std::string format = "text";
  cmd_table->add_option("--format", format, "text|csv")->capture_default_str();

  // graph
  auto* cmd_graph = app.add_subcommand("graph", "emit the David's Star graph as DOT");
  std::string graph_out;
  cmd_graph->add_option("--out", graph_out, "output file (default: stdout)");

  // verify
  auto* cmd_verify = app.add_subcommand("verify", "run the invariant suites");
  std::string suite = "all";
  long trials = 10000;
  double tolerance = 1e-9;
  std::uint64_t seed = default_seed();
  bool json_out = false;
  int threads = 4;
  cmd_verify->add_option("--suite", suite, "all|algebra|transforms|automorphisms|kinematics")
      ->capture_default_str();
  cmd_verify->add_option("--trials", trials, "random trials per property")->capture_default_str();
  cmd_verify->add_option("--tolerance", tolerance, "max allowed deviation")->capture_default_str();
  cmd_verify->add_option("--seed", seed, "RNG seed (env SPLITOCT_SEED overrides default)")
      ->capture_default_str();
  cmd_verify->add_option("--threads", threads, "worker threads for trial sharding")
      ->capture_default_str();
  cmd_verify->add_flag("--json", json_out, "machine-readable report");

  // transform
  auto* cmd_transform = app.add_subcommand("transform", "apply a transform to a signal");
  std::string spec_text, signal_text;
  cmd_transform->add_option("--spec", spec_text, "transform spec JSON")->required();
  cmd_transform->add_option("--signal", signal_text, "signal or octonion JSON")->required();

  // decompose
  auto* cmd_decompose = app.add_subcommand("decompose", "four-plane decomposition");
  std::string axis_text, dec_signal_text;
  cmd_decompose->add_option("--axis", axis_text, "j1|j2|j3|J1|J2|J3|I")->required();
  cmd_decompose->add_option("--signal", dec_signal_text, "signal or octonion JSON")->required();

  // limit
  auto* cmd_limit = app.add_subcommand("limit", "classical-limit sweep (CSV)");
  std::string lim_signal_text, lim_spec_text;
  std::vector<double> hbar_list;
  cmd_limit->add_option("--signal", lim_signal_text, "signal JSON")->required();
  cmd_limit->add_option("--spec", lim_spec_text, "boost or fix-jn automorphism spec JSON")
      ->required();
  cmd_limit->add_option("--hbar-list", hbar_list, "hbar values to sweep")
      ->required()
      ->expected(-1)
      ->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*cmd_table) {
      TableFormat fmt;
      try {
        fmt = parse_table_format(format);
      } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
      }
      std::cout << render_table(fmt);
      return kExitOk;
    }

    if (*cmd_graph) {
      const std::string dot = export_dot();
      if (graph_out.empty()) {
        std::cout << dot;
      } else {
        std::ofstream f(graph_out, std::ios::binary);
        if (!f || !(f << dot)) {
          std::cerr << "error: cannot write " << graph_out << "\n";
          return kExitFailure;
        }
      }
      return kExitOk;
    }

    if (*cmd_verify) {
      std::vector<VerifyReport> reports;
      try {
        reports = run_suites(suite, trials, tolerance, seed, threads);
      } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
      }
      bool all_pass = true;
      if (json_out) {
        json out = json::array();
        for (const auto& r : reports) {
          out.push_back(to_json(r));
          all_pass = all_pass && r.pass();
        }
        std::cout << out.dump(2) << "\n";
      } else {
        for (const auto& r : reports) {
          print_report_text(r);
          all_pass = all_pass && r.pass();
        }
      }
      return all_pass ? kExitOk : kExitFailure;
    }

    const Constants k(c_flag, hbar_flag);

    if (*cmd_transform) {
      TransformSpec spec;
      Octonion s;
      try {
        spec = transform_spec_from_json(parse_json_arg(spec_text, "--spec"));
        s = read_octonion_arg(parse_json_arg(signal_text, "--signal"), k);
      } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
      }
      const Octonion out = apply_transform(spec, s);
      json j;
      j["input"] = to_json(s);
      j["output"] = to_json(out);
      j["input_norm"] = s.norm();
      j["output_norm"] = out.norm();
      std::cout << j.dump(2) << "\n";
      return kExitOk;
    }

    if (*cmd_decompose) {
      int axis;
      Octonion s;
      try {
        axis = axis_from_string(axis_text);
        s = read_octonion_arg(parse_json_arg(dec_signal_text, "--signal"), k);
      } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
      }
      const PlaneDecomposition d = is_circular_axis(axis)
                                       ? decompose_circular(s, axis)
                                       : decompose_hyperbolic(s, axis);
      json j = to_json(d);
      const double n = s.norm();
      j["norm"] = n;
      j["norm_sign"] = n > 0 ? "positive" : (n < 0 ? "negative" : "null");
      std::cout << j.dump(2) << "\n";
      return kExitOk;
    }

    if (*cmd_limit) {
      Signal sig;
      TransformSpec spec;
      try {
        sig = signal_from_json(parse_json_arg(lim_signal_text, "--signal"));
        spec = transform_spec_from_json(parse_json_arg(lim_spec_text, "--spec"));
      } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
      }
      std::vector<SweepPoint> series;
      if (const auto* b = std::get_if<BoostSpec>(&spec)) {
        series = classical_limit_sweep_boost(sig, b->n, b->v, b->c, hbar_list);
      } else if (const auto* a = std::get_if<AutomorphismSpec>(&spec)) {
        series = classical_limit_sweep_automorphism(sig, *a, c_flag, hbar_list);
      } else {
        std::cerr << "error: limit expects a boost or fix-jn automorphism spec\n";
        return kExitUsage;
      }
      std::cout << "hbar,deviation\n";
      for (const auto& p : series)
        std::printf("%.17g,%.17g\n", p.hbar, p.deviation);
      return kExitOk;
    }
  } catch (const DecompositionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
