// Command-line front end: analyze history-set files, generate the example
// families, tabulate packing bounds and run the verification sweeps.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>

#include "cohist/consistency.hpp"
#include "cohist/generators.hpp"
#include "cohist/io.hpp"
#include "cohist/mpv.hpp"
#include "cohist/packing_bounds.hpp"

namespace {

using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitError = 2;

void emit(const std::string& output, const std::string& content) {
  if (output.empty()) {
    std::cout << content;
  } else {
    cohist::atomic_write(output, content);
  }
}

struct AnalyzeOptions {
  std::string input;
  std::string output;
  std::string format = "json";
  std::vector<std::string> criteria = {"weak", "medium", "threshold", "dhc",
                                       "medium-dhc"};
  double delta = 0.1;
  double epsilon = -1.0;  // <0 means derive from delta
  std::string mpv_mode = "auto";
};

int run_analyze(const AnalyzeOptions& opt) {
  const auto set = cohist::read_history_set(opt.input);
  const auto d = cohist::decoherence_matrix(set);
  const double eps =
      opt.epsilon >= 0.0
          ? opt.epsilon
          : cohist::eps_for_delta(opt.delta, set.dim, cohist::EpsVariant::EpsChoice)
                .epsilon;

  json criteria = json::array();
  bool all_pass = true;
  for (const auto& name : opt.criteria) {
    cohist::CriterionResult r;
    if (name == "weak") {
      r = cohist::weak_consistency(d, eps);
    } else if (name == "medium") {
      r = cohist::medium_consistency(d, eps);
    } else if (name == "threshold") {
      r = cohist::threshold_criterion(d, eps);
    } else if (name == "dhc") {
      r = cohist::dhc(d, eps);
    } else if (name == "medium-dhc") {
      r = cohist::medium_dhc(d, eps);
    } else {
      throw cohist::Error("unknown criterion: " + name);
    }
    all_pass = all_pass && r.pass;
    criteria.push_back(cohist::criterion_to_json(r, eps));
  }

  json mpv;
  if (opt.mpv_mode == "exact" ||
      (opt.mpv_mode == "auto" && d.size() <= cohist::kMpvMaxHistories)) {
    mpv = cohist::mpv_to_json(cohist::mpv_exact(d));
  } else if (opt.mpv_mode == "bounds" || opt.mpv_mode == "auto") {
    mpv = {{"value", cohist::bound_sum_abs(d)},
           {"maximizer_indices", json::array()},
           {"method", "bound-only(sum-abs)"}};
  } else {
    throw cohist::Error("unknown mpv mode: " + opt.mpv_mode);
  }

  json report{{"criteria", std::move(criteria)},
              {"mpv", std::move(mpv)},
              {"null_histories", cohist::null_histories(d)},
              {"histories", d.size()},
              {"dimension", set.dim},
              {"complete", set.complete()},
              {"epsilon", eps}};

  if (opt.format == "json") {
    emit(opt.output, report.dump(2) + "\n");
  } else if (opt.format == "csv") {
    std::ostringstream os;
    os << "criterion,pass,achieved_epsilon,worst_a,worst_b\n";
    for (const auto& c : report["criteria"]) {
      os << c["criterion"].get<std::string>() << ','
         << (c["pass"].get<bool>() ? 1 : 0) << ','
         << cohist::format_double(c["achieved_epsilon"].get<double>()) << ','
         << c["worst_pair"][0].get<int>() << ',' << c["worst_pair"][1].get<int>()
         << '\n';
    }
    emit(opt.output, os.str());
  } else {
    throw cohist::Error("unknown format: " + opt.format);
  }
  return all_pass ? kExitPass : kExitFail;
}

int run_zeno(double theta, double epsilon, const std::vector<int>& steps,
             const std::string& output) {
  std::ostringstream os;
  os << "n,epsilon,max_offdiag,x_violation,y_violation,x_residual,y_residual\n";
  for (int n : steps) {
    if (n < 1) throw cohist::Error("invalid step count");
    const double eps = theta >= 0.0 ? theta / n : epsilon;
    if (eps < 0.0) throw cohist::Error("provide --theta or --epsilon");
    const auto cf = cohist::zeno_closed_form({n, eps});
    os << n << ',' << cohist::format_double(eps) << ','
       << cohist::format_double(cf.max_offdiag) << ','
       << cohist::format_double(cf.x_violation) << ','
       << cohist::format_double(cf.y_violation) << ','
       << cohist::format_double(cf.x_violation - cf.x_asymptotic) << ','
       << cohist::format_double(cf.y_violation - cf.y_asymptotic) << '\n';
  }
  emit(output, os.str());
  return kExitPass;
}

int run_bounds(int d_min, int d_max, double eps_min, double eps_max,
               int eps_steps, const std::string& output) {
  if (d_min < 2 || d_max < d_min || eps_steps < 1 || eps_min < 0.0 ||
      eps_max >= 1.0 || eps_max < eps_min) {
    throw cohist::Error("invalid bound table ranges");
  }
  std::ostringstream os;
  os << "space,d,epsilon,lower,upper,valid\n";
  for (int d = d_min; d <= d_max; ++d) {
    for (int i = 0; i < eps_steps; ++i) {
      const double eps =
          eps_steps == 1
              ? eps_min
              : eps_min + (eps_max - eps_min) * i / (eps_steps - 1);
      for (auto overlap : {cohist::Overlap::RePart, cohist::Overlap::Modulus}) {
        const auto ub = cohist::upper_bound(overlap, d, eps);
        const double lb = cohist::shannon_lower_bound(overlap, d, eps);
        os << (overlap == cohist::Overlap::RePart ? "re-part" : "modulus")
           << ',' << d << ',' << cohist::format_double(eps) << ','
           << cohist::format_double(lb) << ',' << ub.floor_value << ','
           << (ub.valid ? 1 : 0) << '\n';
      }
    }
  }
  emit(output, os.str());
  return kExitPass;
}

int run_exampled(int pairs, double epsilon, const std::string& output) {
  const auto gen = cohist::large_violation_set({pairs, epsilon});
  if (!output.empty()) cohist::write_history_set(output, gen.set);
  const auto d = cohist::decoherence_matrix(gen.set);
  const auto mpv = cohist::mpv_exact(d);
  json summary{{"pairs", pairs},
               {"epsilon", epsilon},
               {"dimension", gen.set.dim},
               {"expected_mpv", gen.expected_mpv},
               {"mpv", cohist::mpv_to_json(mpv)}};
  std::cout << summary.dump(2) << '\n';
  return kExitPass;
}

int run_perturb(const cohist::PerturbParams& params,
                const std::string& output) {
  const auto report = cohist::perturbation_experiment(params);
  json j{{"dimension", params.dim},
         {"rank", params.rank_p},
         {"samples", params.samples},
         {"epsilon", params.epsilon},
         {"seed", params.seed},
         {"mean_term1", report.mean_term1},
         {"se_term1", report.se_term1},
         {"mean_term2", report.mean_term2},
         {"se_term2", report.se_term2},
         {"excluded", report.excluded},
         {"slope_exponent", report.slope_exponent},
         {"offdiag_by_scale", report.offdiag_by_scale}};
  emit(output, j.dump(2) + "\n");
  return kExitPass;
}

int run_jacobi(const std::string& sweep, double alpha_min, double alpha_max,
               double alpha_step, int n_max, int points,
               const std::string& output) {
  std::ostringstream os;
  if (sweep == "half" || sweep == "zero") {
    std::vector<double> grid;
    for (double a = alpha_min; a <= alpha_max + 1e-12; a += alpha_step) {
      grid.push_back(a);
    }
    const auto report =
        sweep == "half"
            ? cohist::verify_degree_dominance_half(grid, n_max, points)
            : cohist::verify_degree_dominance_zero(grid, n_max, points);
    os << "dominance sweep (beta = " << (sweep == "half" ? "-1/2" : "0")
       << "): " << report.inequality_violations.size()
       << " inequality violations, " << report.bound_violations.size()
       << " bound violations over " << report.points_checked << " checks\n";
    for (const auto& v : report.inequality_violations) {
      os << "  inequality: alpha=" << v.alpha << " n=" << v.n << " x=" << v.x
         << " margin=" << v.margin << '\n';
    }
  } else if (sweep == "maxima") {
    bool ok = true;
    for (double a = alpha_min; a <= alpha_max + 1e-12; a += alpha_step) {
      for (int n = 1; n <= n_max; ++n) {
        const auto r = cohist::verify_sonine_polya(a, n, points);
        if (!r.maxima_decreasing || !r.bounded_by_w0) {
          ok = false;
          os << "  violation at alpha=" << a << " n=" << n << '\n';
        }
      }
    }
    os << "maxima sweep: " << (ok ? "0 violations" : "violations found")
       << '\n';
  } else {
    throw cohist::Error("jacobi: sweep must be half, zero or maxima");
  }
  emit(output, os.str());
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Consistent-histories decoherence toolkit"};
  app.require_subcommand(1);

  AnalyzeOptions an;
  auto* analyze = app.add_subcommand("analyze", "Analyze a history-set file");
  analyze->add_option("--input", an.input, "history-set JSON file")->required();
  analyze->add_option("--output", an.output, "report file (default stdout)");
  analyze->add_option("--format", an.format, "json or csv");
  analyze->add_option("--criteria", an.criteria,
                      "criteria to run (weak, medium, threshold, dhc, medium-dhc)");
  analyze->add_option("--delta", an.delta, "target MPV, eps = delta/(2d)");
  analyze->add_option("--epsilon", an.epsilon, "criterion epsilon override");
  analyze->add_option("--mpv", an.mpv_mode, "exact, bounds or auto");

  double z_theta = -1.0, z_eps = -1.0;
  std::vector<int> z_steps = {100, 200, 400};
  std::string z_out;
  auto* zeno = app.add_subcommand("zeno", "Zeno closed-form table");
  zeno->add_option("--theta", z_theta, "total rotation, eps = theta/n");
  zeno->add_option("--epsilon", z_eps, "rotation per step");
  zeno->add_option("--steps", z_steps, "step counts (rows)");
  zeno->add_option("--output", z_out, "CSV file (default stdout)");

  int b_dmin = 3, b_dmax = 10, b_steps = 10;
  double b_emin = 0.0, b_emax = 0.3;
  std::string b_out;
  auto* bounds = app.add_subcommand("bounds", "Kissing-bound table");
  bounds->add_option("--dmin", b_dmin, "smallest dimension");
  bounds->add_option("--dmax", b_dmax, "largest dimension");
  bounds->add_option("--eps-min", b_emin, "smallest epsilon");
  bounds->add_option("--eps-max", b_emax, "largest epsilon");
  bounds->add_option("--eps-steps", b_steps, "epsilon grid size");
  bounds->add_option("--output", b_out, "CSV file (default stdout)");

  int e_pairs = 4;
  double e_eps = 0.1;
  std::string e_out;
  auto* exampled = app.add_subcommand("exampled", "Large-violation example set");
  exampled->add_option("--pairs", e_pairs, "history-pair count n");
  exampled->add_option("--epsilon", e_eps, "overlap epsilon");
  exampled->add_option("--output", e_out, "set file to write");

  cohist::PerturbParams pp;
  std::string p_out;
  auto* perturb = app.add_subcommand("perturb", "Perturbed-projector experiment");
  perturb->add_option("--dimension", pp.dim, "Hilbert-space dimension");
  perturb->add_option("--rank", pp.rank_p, "projector rank");
  perturb->add_option("--samples", pp.samples, "Monte Carlo samples");
  perturb->add_option("--epsilon", pp.epsilon, "perturbation scale");
  perturb->add_option("--seed", pp.seed, "RNG seed");
  perturb->add_option("--output", p_out, "statistics file (default stdout)");

  std::string j_sweep = "half";
  int j_nmax = 40, j_points = 2000;
  double j_amin = -1.0, j_amax = 10.0, j_astep = 0.5;
  std::string j_out;
  auto* jacobi = app.add_subcommand("jacobi", "Polynomial verification sweeps");
  jacobi->add_option("--sweep", j_sweep,
                     "half (beta = -1/2 dominance), zero (beta = 0), maxima");
  jacobi->add_option("--alpha-min", j_amin, "grid start (default per sweep)");
  jacobi->add_option("--alpha-max", j_amax, "grid end");
  jacobi->add_option("--alpha-step", j_astep, "grid step");
  jacobi->add_option("--nmax", j_nmax, "largest degree");
  jacobi->add_option("--points", j_points, "x resolution");
  jacobi->add_option("--output", j_out, "report file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) return run_analyze(an);
    if (zeno->parsed()) return run_zeno(z_theta, z_eps, z_steps, z_out);
    if (bounds->parsed()) {
      return run_bounds(b_dmin, b_dmax, b_emin, b_emax, b_steps, b_out);
    }
    if (exampled->parsed()) return run_exampled(e_pairs, e_eps, e_out);
    if (perturb->parsed()) return run_perturb(pp, p_out);
    if (jacobi->parsed()) {
      if (j_amin < 0.0) j_amin = j_sweep == "zero" ? 2.0 : 1.0;
      return run_jacobi(j_sweep, j_amin, j_amax, j_astep, j_nmax, j_points,
                        j_out);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
