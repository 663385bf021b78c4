// Command-line front end: parse matrices and function specs from JSON,
// dispatch to the checkers, constants and explorer, and reproduce the
// built-in example fixtures.

#include <cstdio>
#include <cstdlib>
#include <cmath>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "loewner/explorer.hpp"
#include "loewner/json_io.hpp"

using namespace loewner;

namespace {

int exit_code_for(const InequalityReport& rep) {
  if (!rep.inequality_holds())
    return 2;
  if (rep.hypothesis && !rep.hypothesis->holds)
    return 3;
  return 0;
}

int exit_code_for(const Error& e) {
  return (e.code() == ErrorCode::NonConvergence || e.code() == ErrorCode::QuadratureNotConverged)
             ? 5
             : 4;
}

void print_matrix(const std::string& name, const SymMatrix& m) {
  std::printf("%s =\n", name.c_str());
  for (int i = 0; i < m.dim(); ++i) {
    std::printf("  [");
    for (int j = 0; j < m.dim(); ++j)
      std::printf(" %.6g", m(i, j));
    std::printf(" ]\n");
  }
}

void print_report_table(const InequalityReport& rep) {
  std::printf("theorem: %s\n", rep.theorem_id.c_str());
  if (rep.hypothesis) {
    std::printf("hypothesis %s: %s (margin %.6g)\n", rep.hypothesis->condition_name.c_str(),
                rep.hypothesis->holds ? "holds" : "FAILS", rep.hypothesis->margin);
    for (const auto& [name, iv] : rep.hypothesis->intervals)
      std::printf("  %-16s [%.6g, %.6g]\n", name.c_str(), iv.lo, iv.hi);
  }
  for (const ChainLink& link : rep.chain_links)
    std::printf("link %-42s %s (min eig %.6g)\n", link.label.c_str(),
                relation_name(link.verdict.relation), link.verdict.min_eig_of_difference);
  print_matrix("lhs", rep.lhs);
  print_matrix("rhs", rep.rhs);
  print_matrix("rhs - lhs", rep.rhs - rep.lhs);
  std::printf("verdict: %s (min eig %.6g, max eig %.6g, tol %.6g)\n",
              relation_name(rep.verdict.relation), rep.verdict.min_eig_of_difference,
              rep.verdict.max_eig_of_difference, rep.verdict.tolerance_used);
  if (!rep.notes.empty())
    std::printf("notes: %s\n", rep.notes.c_str());
  std::printf("input digest: %s\n", rep.input_digest.c_str());
}

uint64_t default_seed() {
  if (const char* env = std::getenv("LOEWNER_LAB_SEED"))
    return std::strtoull(env, nullptr, 10);
  return 0;
}

const SymMatrix& require_matrix(const std::optional<SymMatrix>& m, const char* field) {
  if (!m)
    fail(ErrorCode::ParseError, std::string("missing field \"") + field + "\"");
  return *m;
}

ScalarFunction resolve_function(const std::string& f_spec, const CheckInput& input) {
  if (!f_spec.empty())
    return parse_function_spec(f_spec);
  if (input.f)
    return *input.f;
  fail(ErrorCode::ParseError, "missing function: pass --f or an \"f\" field in the input file");
}

Interval parse_spectrum(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    fail(ErrorCode::ParseError, "spectrum must be 'lo:hi'");
  try {
    return Interval(std::stod(text.substr(0, colon)), std::stod(text.substr(colon + 1)));
  } catch (const std::exception&) {
    fail(ErrorCode::ParseError, "spectrum must be numeric 'lo:hi'");
  }
}

// ---- paper fixtures ------------------------------------------------------

struct FixtureRow {
  std::string name;
  bool pass = false;
  std::string detail;
};

bool entries_match(const SymMatrix& got, const std::vector<std::vector<double>>& want,
                   double rel_tol, double* worst) {
  *worst = 0.0;
  for (int i = 0; i < got.dim(); ++i)
    for (int j = 0; j < got.dim(); ++j) {
      const double w = want[static_cast<size_t>(i)][static_cast<size_t>(j)];
      const double rel = std::fabs(got(i, j) - w) / std::fabs(w);
      *worst = std::max(*worst, rel);
    }
  return *worst <= rel_tol;
}

std::vector<FixtureRow> run_paper_fixtures(double match_tol) {
  const SymMatrix a = SymMatrix::from_rows({{3, 1}, {1, 5}});
  const SymMatrix b = SymMatrix::from_rows({{10, -1}, {-1, 9}});
  std::vector<FixtureRow> rows;

  {
    const InequalityReport rep = check_power(6.0, a, b);
    const SymMatrix diff = rep.rhs - rep.lhs;
    double worst = 0.0;
    const bool values = entries_match(
        diff, {{985931.21, -476992.0}, {-476992.0, 433279.0}}, match_tol, &worst);
    const bool psd_nonzero = rep.verdict.at_least() && diff.frobenius_norm() > 0.0 &&
                             rep.hypothesis && rep.hypothesis->holds;
    rows.push_back({"example 2.7(i)  r=6 difference", values && psd_nonzero,
                    "worst entry rel err " + std::to_string(worst)});
  }
  {
    const InequalityReport rep = check_power(-2.0, a, b);
    double worst = 0.0;
    const bool values = entries_match(rep.rhs - rep.lhs,
                                      {{0.0956, -0.0384}, {-0.0384, 0.0229}}, match_tol, &worst);
    rows.push_back({"example 2.7(ii) r=-2 difference", values && rep.verdict.at_least(),
                    "worst entry rel err " + std::to_string(worst)});
  }
  {
    const InequalityReport rep = check_power(1.0 / 3.0, a, b);
    double worst = 0.0;
    const bool values = entries_match(rep.rhs - rep.lhs,
                                      {{0.1519, -0.061}, {-0.061, 0.0486}}, match_tol, &worst);
    rows.push_back({"example 2.7(iii) r=1/3 difference", values && rep.verdict.at_least(),
                    "worst entry rel err " + std::to_string(worst)});
  }
  {
    const SymMatrix a8 = SymMatrix::from_rows({{1, 1}, {1, 1}});
    const SymMatrix b8 = SymMatrix::from_rows({{3, 1}, {1, 1}});
    const InequalityReport rep = check_power(3.0, a8, b8);
    const SymMatrix diff = rep.rhs - rep.lhs;

    const Interval tau_a = spectral_interval(a8);
    const Interval tau_b = spectral_interval(b8);
    const Interval tau_m = spectral_interval(arithmetic_mean(a8, b8, 0.5));
    const double s2 = std::sqrt(2.0), s5 = std::sqrt(5.0);
    const bool spectra = std::fabs(tau_a.lo - 0.0) <= 1e-10 && std::fabs(tau_a.hi - 2.0) <= 1e-10 &&
                         std::fabs(tau_b.lo - (2.0 - s2)) <= 1e-10 &&
                         std::fabs(tau_b.hi - (2.0 + s2)) <= 1e-10 &&
                         std::fabs(tau_m.lo - (3.0 - s5) / 2.0) <= 1e-10 &&
                         std::fabs(tau_m.hi - (3.0 + s5) / 2.0) <= 1e-10;
    const bool exact_diff = same_entries(diff, SymMatrix::from_rows({{12, 2}, {2, 0}}));
    const bool min_eig =
        std::fabs(rep.verdict.min_eig_of_difference - (6.0 - std::sqrt(40.0))) <= 1e-9;
    const bool hyp_failed = rep.hypothesis && !rep.hypothesis->holds;
    const bool violated = !rep.inequality_holds();
    rows.push_back({"example 2.8     r=3 counterexample",
                    spectra && exact_diff && min_eig && hyp_failed && violated,
                    std::string("diff exact=") + (exact_diff ? "yes" : "no") +
                        ", min eig = " + std::to_string(rep.verdict.min_eig_of_difference)});
  }
  {
    const HypothesisReport hyp =
        thm1_condition(spectral_interval(a), spectral_interval(b), 0.5);
    const bool gaps_match = hyp.sub_margins.size() == 2 &&
                            std::fabs(hyp.sub_margins[0].second - 0.069662) <=
                                match_tol * 0.069662 + 1e-9 &&
                            std::fabs(hyp.sub_margins[1].second - 0.365842) <=
                                match_tol * 0.365842 + 1e-9;
    rows.push_back({"example 2.7     thm1 hypothesis", hyp.holds && gaps_match,
                    "margin " + std::to_string(hyp.margin)});
  }
  return rows;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"loewner-lab: numerical checks for operator subadditivity inequalities"};
  app.require_subcommand(1);

  std::string input_path, f_spec, output_format = "table";
  double tolerance = kDefaultLoewnerRelTol;
  bool tolerance_given = false;
  long long seed_flag = -1;
  app.add_option("--input", input_path, "JSON input file")->configurable(false);
  app.add_option("--tolerance", tolerance, "relative tolerance")
      ->check(CLI::PositiveNumber)
      ->each([&](const std::string&) { tolerance_given = true; });
  app.add_option("--seed", seed_flag, "RNG seed (default 0, or LOEWNER_LAB_SEED)");
  app.add_option("--output-format", output_format, "json|table")
      ->check(CLI::IsMember({"json", "table"}));
  app.add_option("--f", f_spec, "function spec, e.g. power:2, inverse_shift:1, affine:1,0");

  auto* cmd_check = app.add_subcommand("check", "check one inequality instance");
  std::string theorem;
  double opt_v = 0.5, opt_r = 2.0, opt_m = 0.0, opt_M = 0.0;
  bool v_given = false, r_given = false, m_given = false, M_given = false;
  int opt_nodes = 16, opt_ell = 2;
  bool nodes_given = false;
  std::string ell_mode = "concave_lower";
  cmd_check->add_option("--theorem", theorem,
                        "thm1|thm2|subadditivity_double|power|hh_chain|decreasing_chain|"
                        "reverse_subadditivity|concave_lower|ell_sum|K_k_subadditivity|"
                        "inner_jensen")
      ->required();
  cmd_check->add_option("--v", opt_v, "mean weight")->each([&](const std::string&) {
    v_given = true;
  });
  cmd_check->add_option("--r", opt_r, "power exponent")->each([&](const std::string&) {
    r_given = true;
  });
  cmd_check->add_option("--m", opt_m, "lower constant bound")->each([&](const std::string&) {
    m_given = true;
  });
  cmd_check->add_option("--M", opt_M, "upper constant bound")->each([&](const std::string&) {
    M_given = true;
  });
  cmd_check->add_option("--nodes", opt_nodes, "quadrature nodes per panel")
      ->each([&](const std::string&) { nodes_given = true; });
  cmd_check->add_option("--ell", opt_ell, "number of summands for ell_sum");
  cmd_check->add_option("--mode", ell_mode, "ell_sum mode: concave_lower|decreasing_upper")
      ->check(CLI::IsMember({"concave_lower", "decreasing_upper"}));

  auto* cmd_constants = app.add_subcommand("constants", "Mond-Pecaric constants K and k");
  double km = 0.0, kM = 0.0;
  cmd_constants->add_option("--m", km, "interval lower end")->required();
  cmd_constants->add_option("--M", kM, "interval upper end")->required();

  auto* cmd_hh = app.add_subcommand("hh", "Hermite-Hadamard chain");
  int hh_nodes = 16;
  cmd_hh->add_option("--nodes", hh_nodes, "quadrature nodes per panel")
      ->each([&](const std::string&) { nodes_given = true; });

  auto* cmd_hunt = app.add_subcommand("hunt", "randomized violation hunt");
  std::string hunt_checker;
  int hunt_trials = 1000, hunt_dim = 2;
  std::string hunt_spectrum = "1:3";
  bool hunt_require_hyp = false;
  double hunt_v = 0.5;
  cmd_hunt->add_option("--checker", hunt_checker, "inequality checker id")->required();
  cmd_hunt->add_option("--trials", hunt_trials, "number of trials");
  cmd_hunt->add_option("--dim", hunt_dim, "matrix dimension");
  cmd_hunt->add_option("--spectrum", hunt_spectrum, "sampling spectrum 'lo:hi'");
  cmd_hunt->add_flag("--require-hypothesis", hunt_require_hyp,
                     "only test hypothesis-satisfying instances");
  cmd_hunt->add_option("--v", hunt_v, "mean weight for thm1/thm2");

  auto* cmd_probe = app.add_subcommand("probe", "hypothesis satisfiability probe");
  std::string probe_condition;
  long probe_samples = 1000;
  cmd_probe->add_option("--condition", probe_condition, "thm1|thm2|hh|sandwich")->required();
  cmd_probe->add_option("--samples", probe_samples, "number of sampled tuples");

  auto* cmd_paper = app.add_subcommand("paper", "run the built-in example fixtures");

  auto* cmd_audit = app.add_subcommand("audit", "sample-audit declared function flags");
  int audit_samples = 1000;
  cmd_audit->add_option("--samples", audit_samples, "sample count");

  // global options may appear after the subcommand name
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 4;
  }

  const uint64_t seed = seed_flag >= 0 ? static_cast<uint64_t>(seed_flag) : default_seed();
  const bool json_out = output_format == "json";

  try {
    if (cmd_check->parsed() || cmd_hh->parsed()) {
      CheckInput input = input_path.empty() ? CheckInput{} : load_check_input(input_path);
      if (input.v && !v_given)
        opt_v = *input.v;
      if (input.r && !r_given)
        opt_r = *input.r;
      if (input.m && !m_given) {
        opt_m = *input.m;
        m_given = true;
      }
      if (input.M && !M_given) {
        opt_M = *input.M;
        M_given = true;
      }
      if (cmd_hh->parsed()) {
        theorem = "hh_chain";
        opt_nodes = hh_nodes;
      }
      if (input.nodes && !nodes_given)
        opt_nodes = *input.nodes;

      InequalityReport rep;
      if (theorem == "thm1" || theorem == "thm2") {
        const ScalarFunction f = resolve_function(f_spec, input);
        const SymMatrix& A = require_matrix(input.A, "A");
        const SymMatrix& B = require_matrix(input.B, "B");
        rep = theorem == "thm1" ? check_thm1(f, A, B, opt_v, {}, tolerance)
                                : check_thm2(f, A, B, opt_v, {}, tolerance);
      } else if (theorem == "subadditivity_double") {
        rep = check_subadditivity_double(resolve_function(f_spec, input),
                                         require_matrix(input.A, "A"),
                                         require_matrix(input.B, "B"), tolerance);
      } else if (theorem == "power") {
        if (!r_given && !input.r)
          fail(ErrorCode::ParseError, "missing field \"r\"");
        rep = check_power(opt_r, require_matrix(input.A, "A"), require_matrix(input.B, "B"),
                          tolerance);
      } else if (theorem == "hh_chain") {
        rep = check_hh_chain(resolve_function(f_spec, input), require_matrix(input.A, "A"),
                             require_matrix(input.B, "B"), opt_nodes, tolerance);
      } else if (theorem == "decreasing_chain") {
        rep = check_decreasing_chain(resolve_function(f_spec, input),
                                     require_matrix(input.A, "A"),
                                     require_matrix(input.B, "B"), tolerance);
      } else if (theorem == "reverse_subadditivity" || theorem == "concave_lower" ||
                 theorem == "K_k_subadditivity") {
        const ScalarFunction f = resolve_function(f_spec, input);
        const SymMatrix& A = require_matrix(input.A, "A");
        const SymMatrix& B = require_matrix(input.B, "B");
        double m = opt_m, M = opt_M;
        if (!m_given || !M_given) {
          if (theorem == "K_k_subadditivity") {
            const Interval bounds = hull(spectral_interval(A), spectral_interval(B));
            m = m_given ? m : bounds.lo;
            M = M_given ? M : bounds.hi;
          } else {
            const auto [am, aM] = auto_sandwich_bounds(A, B);
            m = m_given ? m : am;
            M = M_given ? M : aM;
          }
        }
        rep = theorem == "reverse_subadditivity"
                  ? check_reverse_subadditivity(f, A, B, m, M, tolerance)
                  : theorem == "concave_lower"
                        ? check_concave_lower(f, A, B, m, M, tolerance)
                        : check_K_k_subadditivity(f, A, B, m, M, tolerance);
      } else if (theorem == "ell_sum") {
        const ScalarFunction f = resolve_function(f_spec, input);
        if (!input.operators)
          fail(ErrorCode::ParseError, "missing field \"operators\"");
        double m = opt_m, M = opt_M;
        if (!m_given || !M_given) {
          Interval bounds = spectral_interval(input.operators->front());
          for (const SymMatrix& op : *input.operators)
            bounds = hull(bounds, spectral_interval(op));
          const int ell = static_cast<int>(input.operators->size());
          m = m_given ? m : ell * bounds.lo;
          M = M_given ? M : ell * bounds.hi;
        }
        rep = check_ell_sum(f, *input.operators, m, M,
                            ell_mode == "concave_lower" ? EllSumMode::ConcaveLower
                                                        : EllSumMode::DecreasingUpper,
                            tolerance);
      } else if (theorem == "inner_jensen") {
        const ScalarFunction f = resolve_function(f_spec, input);
        const SymMatrix& A = require_matrix(input.A, "A");
        if (!input.x)
          fail(ErrorCode::ParseError, "missing field \"x\"");
        double m = opt_m, M = opt_M;
        if (!m_given || !M_given) {
          const Interval tau = spectral_interval(A);
          m = m_given ? m : tau.lo;
          M = M_given ? M : tau.hi;
        }
        const InnerJensenReport rep2 = check_inner_jensen(f, A, *input.x, m, M);
        if (json_out) {
          std::cout << to_json(rep2).dump(2) << "\n";
        } else {
          std::printf("<Ax,x> = %.6g, <f(A)x,x> = %.6g\n", rep2.bra_A_ket, rep2.bra_fA_ket);
          for (const ScalarCheck& c : rep2.checks)
            std::printf("%-64s lhs %.6g rhs %.6g margin % .6g  %s\n", c.label.c_str(), c.lhs,
                        c.rhs, c.margin, c.holds ? "holds" : "FAILS");
          if (!rep2.notes.empty())
            std::printf("notes: %s\n", rep2.notes.c_str());
        }
        for (const ScalarCheck& c : rep2.checks)
          if (!c.holds)
            return 2;
        return 0;
      } else {
        fail(ErrorCode::UnknownChecker, "unknown theorem '" + theorem + "'");
      }

      if (json_out)
        std::cout << to_json(rep).dump(2) << "\n";
      else
        print_report_table(rep);
      return exit_code_for(rep);
    }

    if (cmd_constants->parsed()) {
      const ScalarFunction f = resolve_function(f_spec, CheckInput{});
      const RatioConstant K = big_K(km, kM, f);
      const RatioConstant k = small_k(km, kM, f);
      const long oracle_points = 1L << 17;
      const double K_oracle = dense_grid_extremum(km, kM, f, oracle_points, true);
      const double k_oracle = dense_grid_extremum(km, kM, f, oracle_points, false);
      if (json_out) {
        json out{{"m", km},
                 {"M", kM},
                 {"f", to_json(f)},
                 {"K", to_json(K)},
                 {"k", to_json(k)},
                 {"K_grid_oracle", K_oracle},
                 {"k_grid_oracle", k_oracle},
                 {"K_oracle_delta", K.value - K_oracle},
                 {"k_oracle_delta", k.value - k_oracle}};
        std::cout << out.dump(2) << "\n";
      } else {
        std::printf("K(%.6g, %.6g, %s) = %.12g at t = %.12g (oracle delta % .3g)\n", km, kM,
                    f.spec_string().c_str(), K.value, K.argmax_or_argmin, K.value - K_oracle);
        std::printf("k(%.6g, %.6g, %s) = %.12g at t = %.12g (oracle delta % .3g)\n", km, kM,
                    f.spec_string().c_str(), k.value, k.argmax_or_argmin, k.value - k_oracle);
      }
      return 0;
    }

    if (cmd_hunt->parsed()) {
      const ScalarFunction f = resolve_function(f_spec, CheckInput{});
      GeneratorSpec spec;
      spec.dim = hunt_dim;
      spec.spectrum_interval = parse_spectrum(hunt_spectrum);
      spec.seed = seed;
      spec.count = hunt_trials;
      const HuntResult res = hunt_violations(hunt_checker, f, spec, hunt_require_hyp, hunt_v);
      if (json_out) {
        std::cout << to_json(res).dump(2) << "\n";
      } else {
        std::printf("trials %ld, hypothesis satisfied %ld, violations %zu\n", res.trials,
                    res.satisfying_hypothesis_count, res.violations.size());
        if (res.worst_margin)
          std::printf("worst margin %.12g\n", *res.worst_margin);
        std::printf("%s\n", res.notes.c_str());
      }
      return 0;
    }

    if (cmd_probe->parsed()) {
      const HuntResult res = probe_hypothesis_satisfiability(probe_condition, probe_samples, seed);
      if (json_out) {
        std::cout << to_json(res).dump(2) << "\n";
      } else {
        std::printf("condition %s: %ld of %ld sampled tuples satisfy the hypothesis\n",
                    probe_condition.c_str(), res.satisfying_hypothesis_count, res.trials);
        std::printf("%s\n", res.notes.c_str());
      }
      return 0;
    }

    if (cmd_paper->parsed()) {
      const double match_tol = tolerance_given ? tolerance : 0.005;
      const auto rows = run_paper_fixtures(match_tol);
      bool all_pass = true;
      if (json_out) {
        json out = json::array();
        for (const FixtureRow& row : rows) {
          out.push_back(json{{"fixture", row.name}, {"pass", row.pass}, {"detail", row.detail}});
          all_pass = all_pass && row.pass;
        }
        std::cout << out.dump(2) << "\n";
      } else {
        std::printf("fixture tolerance: %.3g (entrywise relative)\n", match_tol);
        for (const FixtureRow& row : rows) {
          std::printf("%-36s %s  (%s)\n", row.name.c_str(), row.pass ? "PASS" : "FAIL",
                      row.detail.c_str());
          all_pass = all_pass && row.pass;
        }
      }
      return all_pass ? 0 : 2;
    }

    if (cmd_audit->parsed()) {
      const ScalarFunction f = resolve_function(f_spec, CheckInput{});
      const AuditReport rep = audit_flags(f, audit_samples, seed);
      if (json_out)
        std::cout << to_json(rep).dump(2) << "\n";
      else
        std::printf("%s: %d samples, %s (convexity %d, concavity %d, monotonicity %d)\n",
                    f.spec_string().c_str(), rep.samples,
                    rep.consistent ? "consistent" : "CONTRADICTED", rep.convexity_contradictions,
                    rep.concavity_contradictions, rep.monotonicity_contradictions);
      return rep.consistent ? 0 : 2;
    }
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 5;
  }
  return 4;
}
