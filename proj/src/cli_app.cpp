#include "geoquant/cli_app.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "geoquant/checks.hpp"
#include "geoquant/correspondence.hpp"
#include "geoquant/lattice.hpp"
#include "geoquant/random_gen.hpp"
#include "geoquant/span.hpp"

namespace geoquant {

namespace {

std::string num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

int emit(const std::vector<CheckReport>& reports) {
  for (const CheckReport& r : reports) std::cout << report_json(r) << "\n";
  return all_passed(reports) ? 0 : 1;
}

int usage_error(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return 2;
}

bool flag_given(const CLI::App* sub, const std::string& name) {
  const CLI::Option* opt = sub->get_option_no_throw(name);
  return opt != nullptr && opt->count() > 0;
}

// Reports for one concrete lattice: block-derived vacuum form against the
// structure-derived one, and the two-point matrix against the mode sum.
std::vector<CheckReport> lattice_reports(const LatticeModel& model) {
  using Clock = std::chrono::steady_clock;
  auto ms = [](Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  };

  auto start = Clock::now();
  VacuumForm blocks = lattice_vacuum_form(model);
  VacuumForm direct = omega_from_j(model.ps, model.cs);
  double verr = std::max((blocks.S - direct.S).cwiseAbs().maxCoeff(),
                         (blocks.A - direct.A).cwiseAbs().maxCoeff());
  CheckReport vacuum;
  vacuum.check = "lattice_vacuum_form";
  vacuum.max_error = verr;
  vacuum.tolerance = 1e-10;
  vacuum.passed = verr <= vacuum.tolerance;
  vacuum.runtime_ms = ms(start);

  auto tstart = Clock::now();
  Mat tp = two_point(model);
  double terr = 0.0;
  for (int x = 0; x < model.sites; ++x) {
    for (int y = 0; y < model.sites; ++y) {
      terr = std::max(terr, std::abs(tp(x, y) - two_point_mode_sum(model, x, y)));
    }
  }
  CheckReport twopt;
  twopt.check = "lattice_two_point";
  twopt.max_error = terr;
  twopt.tolerance = 1e-10;
  twopt.passed = terr <= twopt.tolerance;
  twopt.runtime_ms = ms(tstart);

  return {vacuum, twopt};
}

int write_lattice_csv(const LatticeModel& model, const std::string& path) {
  std::ofstream out(path);
  if (!out) return usage_error("cannot open output file " + path);
  Mat tp = two_point(model);
  for (int x = 0; x < model.sites; ++x) {
    out << x << "," << num(tp(x, x)) << "\n";
  }
  return 0;
}

int run_sample(std::uint64_t seed, int dim, const std::string& path) {
  Rng rng(seed);
  PhaseSpace ps = random_phase_space(rng, dim);
  ComplexStructure cs = random_structure(rng, ps);
  SpanSpace space = make_schrodinger_space(ps, omega_from_j(ps, cs), true);
  CoherentSpan state = coherent_span(space, random_vec(rng, dim, 0.8));

  std::ofstream file;
  if (!path.empty()) {
    file.open(path);
    if (!file) return usage_error("cannot open output file " + path);
  }
  std::ostream& out = path.empty() ? std::cout : file;

  int n = ps.n();
  int per_axis = n == 1 ? 201 : n == 2 ? 41 : n == 3 ? 17 : 9;
  for (int k = 0; k < n; ++k) out << "phi_" << k + 1 << ",";
  out << "re,im\n";

  std::vector<int> idx(n, 0);
  Vec phi(n);
  while (true) {
    for (int k = 0; k < n; ++k) {
      phi[k] = -3.0 + 6.0 * idx[k] / (per_axis - 1);
    }
    cplx v = space.evaluate(state, phi);
    for (int k = 0; k < n; ++k) out << num(phi[k]) << ",";
    out << num(v.real()) << "," << num(v.imag()) << "\n";
    int k = n - 1;
    while (k >= 0 && ++idx[k] == per_axis) {
      idx[k] = 0;
      --k;
    }
    if (k < 0) break;
  }
  return 0;
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{"finite-dimensional quantization toolkit"};
  app.require_subcommand(1);

  struct Args {
    std::string config;
    std::uint64_t seed = 0;
    int dim = 4;
    int trials = 100;
    int itrials = 50;
    int sites = 8;
    double mass = 1.0;
    double spacing = 1.0;
    std::string out;
  } args;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", args.seed, "random seed (default 0)");
    sub->add_option("--config", args.config,
                    "JSON config file; explicit flags take precedence");
  };

  CLI::App* rt = app.add_subcommand("roundtrip", "structure/form round trips");
  rt->add_option("--dim", args.dim, "phase space dimension (even, >= 2)");
  rt->add_option("--trials", args.trials, "number of random trials");
  add_common(rt);

  CLI::App* bg = app.add_subcommand(
      "bargmann", "transform isometry, kernels, reproducing property, pairings");
  add_common(bg);

  CLI::App* cc = app.add_subcommand("ccr", "commutators of quantized observables");
  add_common(cc);

  CLI::App* in = app.add_subcommand(
      "intertwine", "transform/observable intertwining and the creation series");
  in->add_option("--trials", args.itrials, "number of random trials");
  add_common(in);

  CLI::App* af = app.add_subcommand("affine", "affine representation suite");
  add_common(af);

  CLI::App* lv = app.add_subcommand("lattice-vacuum",
                                    "lattice vacuum form and two-point function");
  lv->add_option("--sites", args.sites, "number of lattice sites");
  lv->add_option("--mass", args.mass, "field mass");
  lv->add_option("--spacing", args.spacing, "lattice spacing");
  lv->add_option("--out", args.out, "CSV output path (site,value rows)");
  add_common(lv);

  CLI::App* dp = app.add_subcommand("density-probe",
                                    "coherent-family projection residuals");
  dp->add_option("--config", args.config,
                 "JSON config file; explicit flags take precedence");

  CLI::App* sm = app.add_subcommand("sample", "sample a coherent wave function");
  sm->add_option("--dim", args.dim, "phase space dimension (even, 2 to 8)");
  sm->add_option("--out", args.out, "CSV output path; stdout when omitted");
  add_common(sm);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  CLI::App* sub = app.get_subcommands().front();

  nlohmann::json cfg = nlohmann::json::object();
  if (!args.config.empty()) {
    std::ifstream file(args.config);
    if (!file) return usage_error("cannot open config file " + args.config);
    try {
      cfg = nlohmann::json::parse(file);
    } catch (const nlohmann::json::exception& e) {
      return usage_error(std::string("config parse error: ") + e.what());
    }
    if (!cfg.is_object()) return usage_error("config root must be an object");
  }

  auto resolve = [&](const char* key, auto& slot) {
    if (flag_given(sub, std::string("--") + key)) return;
    auto it = cfg.find(key);
    if (it != cfg.end()) slot = it->template get<std::decay_t<decltype(slot)>>();
  };
  try {
    resolve("seed", args.seed);
    resolve("dim", args.dim);
    resolve("trials", args.trials);
    resolve("trials", args.itrials);
    resolve("sites", args.sites);
    resolve("mass", args.mass);
    resolve("spacing", args.spacing);
    resolve("out", args.out);
  } catch (const nlohmann::json::exception& e) {
    return usage_error(std::string("config parse error: ") + e.what());
  }

  if (!flag_given(sub, "--seed") && !cfg.contains("seed")) {
    if (const char* env = std::getenv("GEOQUANT_SEED")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end == env || *end != '\0') return usage_error("invalid GEOQUANT_SEED");
      args.seed = v;
    }
  }

  const std::string name = sub->get_name();
  try {
    if (name == "roundtrip") {
      if (args.dim < 2 || args.dim % 2 != 0) return usage_error("--dim must be even and >= 2");
      if (args.trials < 1) return usage_error("--trials must be >= 1");
      std::vector<CheckReport> reports;
      reports.reserve(args.trials);
      for (int t = 0; t < args.trials; ++t) {
        reports.push_back(check_roundtrip(args.seed + t, 1, args.dim));
      }
      return emit(reports);
    }
    if (name == "bargmann") {
      return emit({check_isometry(args.seed), check_coordinate_kernel(args.seed),
                   check_reproducing(args.seed), check_pairing(args.seed)});
    }
    if (name == "ccr") {
      return emit({check_ccr(args.seed)});
    }
    if (name == "intertwine") {
      if (args.itrials < 1) return usage_error("--trials must be >= 1");
      return emit({check_intertwine(args.seed, args.itrials), check_exp_creation(args.seed)});
    }
    if (name == "affine") {
      return emit(affine_suite_parts(args.seed));
    }
    if (name == "lattice-vacuum") {
      if (args.sites < 1) return usage_error("--sites must be >= 1");
      if (!(args.mass > 0.0)) return usage_error("--mass must be positive");
      if (!(args.spacing > 0.0)) return usage_error("--spacing must be positive");
      LatticeModel model = build_lattice(args.sites, args.mass, args.spacing);
      if (!args.out.empty()) {
        int rc = write_lattice_csv(model, args.out);
        if (rc != 0) return rc;
      }
      return emit(lattice_reports(model));
    }
    if (name == "density-probe") {
      return emit({check_density_probe()});
    }
    if (name == "sample") {
      if (args.dim < 2 || args.dim % 2 != 0 || args.dim > 8) {
        return usage_error("--dim must be even, between 2 and 8");
      }
      return run_sample(args.seed, args.dim, args.out);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return usage_error("unknown subcommand " + name);
}

}  // namespace geoquant
