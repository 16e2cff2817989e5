// qsym3: batch front end for symmetric three-qubit nonlocality analysis.
//
// Subcommands: scan-chsh, scan-conditional, bell322-verify, analyze.
// Exit codes: 0 success, 1 verification failure, 2 usage/domain error.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <Eigen/Eigenvalues>

#include "qsym3/bell322.hpp"
#include "qsym3/conditional.hpp"
#include "qsym3/correlations.hpp"
#include "qsym3/invariants.hpp"
#include "qsym3/json_io.hpp"
#include "qsym3/state.hpp"

using namespace qsym3;
using nlohmann::json;

namespace {

constexpr double kTwoSqrt2 = 2.0 * M_SQRT2;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  void write(std::ostream& out, const std::string& format) const {
    if (format == "csv") {
      for (std::size_t i = 0; i < columns.size(); ++i)
        out << (i ? "," : "") << columns[i];
      out << "\n";
      for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
          out << (i ? "," : "") << fmt(row[i]);
        out << "\n";
      }
    } else {
      json arr = json::array();
      for (const auto& row : rows) {
        json obj = json::object();
        for (std::size_t i = 0; i < row.size(); ++i) obj[columns[i]] = row[i];
        arr.push_back(obj);
      }
      out << arr.dump(2) << "\n";
    }
  }
};

void emit(const std::string& out_path, const std::function<void(std::ostream&)>& writer) {
  if (out_path.empty()) {
    writer(std::cout);
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw DomainError("cannot open output file: " + out_path);
    writer(file);
  }
}

std::array<double, 3> sorted_by_magnitude(const Mat3d& T) {
  Eigen::SelfAdjointEigenSolver<Mat3d> solver(T, Eigen::EigenvaluesOnly);
  std::array<double, 3> ev{solver.eigenvalues()[0], solver.eigenvalues()[1],
                           solver.eigenvalues()[2]};
  std::sort(ev.begin(), ev.end(),
            [](double a, double b) { return std::abs(a) > std::abs(b); });
  return ev;
}

struct ScanOptions {
  std::string family;
  int beta_steps = 100;
  int theta_steps = 37;
  int phi_steps = 25;
  int y_steps = 100;
  double beta = M_PI / 2;  // fixed beta for d33 chsh scans
  double y = 1.0;
  double alpha = 0.0;
  std::string format = "csv";
  std::string out_path;
};

void require_grid(int steps, const char* name) {
  if (steps < 2) throw DomainError(std::string(name) + " must be at least 2");
}

int run_scan_chsh(const ScanOptions& opt) {
  Table table;
  if (opt.family == "d32") {
    require_grid(opt.beta_steps, "--beta-steps");
    table.columns = {"beta", "t1", "t2", "t3", "chsh_opt"};
    for (int i = 1; i <= opt.beta_steps; ++i) {
      const double beta = M_PI * i / opt.beta_steps;
      const Mat3d T =
          hilbert_schmidt_decompose(reduce_to_pair(canonical_d32(beta), Party::C)).T;
      const auto ev = sorted_by_magnitude(T);
      table.rows.push_back({beta, ev[0], ev[1], ev[2], chsh_optimum(T)});
    }
  } else {
    require_grid(opt.y_steps, "--y-steps");
    table.columns = {"beta", "y", "t1", "t2", "t3", "chsh_opt"};
    for (int i = 1; i <= opt.y_steps; ++i) {
      const double y = static_cast<double>(i) / opt.y_steps;
      const Mat3d T = hilbert_schmidt_decompose(
                          reduce_to_pair(canonical_d33(y, opt.alpha, opt.beta), Party::C))
                          .T;
      const auto ev = sorted_by_magnitude(T);
      table.rows.push_back({opt.beta, y, ev[0], ev[1], ev[2], chsh_optimum(T)});
    }
  }
  emit(opt.out_path, [&](std::ostream& os) { table.write(os, opt.format); });
  return 0;
}

int run_scan_conditional(const ScanOptions& opt) {
  require_grid(opt.beta_steps, "--beta-steps");
  require_grid(opt.theta_steps, "--theta-steps");
  require_grid(opt.phi_steps, "--phi-steps");
  Table table;
  table.columns = {"beta", "theta", "phi", "p_plus", "chsh_c1_opt", "chsh_con_opt",
                   "q_contrib"};
  for (int ib = 1; ib <= opt.beta_steps; ++ib) {
    const double beta = M_PI * ib / opt.beta_steps;
    const PureState3 state = opt.family == "d32"
                                 ? canonical_d32(beta)
                                 : canonical_d33(opt.y, opt.alpha, beta);
    for (int it = 0; it < opt.theta_steps; ++it) {
      const double theta = M_PI * it / (opt.theta_steps - 1);
      for (int ip = 0; ip < opt.phi_steps; ++ip) {
        const double phi = 2.0 * M_PI * ip / opt.phi_steps;
        const auto report = conditional_chsh(state, {theta, phi});
        const double q = std::max(0.0, (report.chsh_con_opt - 2.0) / (kTwoSqrt2 - 2.0));
        table.rows.push_back({beta, theta, phi, report.p_plus, report.chsh_c_opt[0],
                              report.chsh_con_opt, q});
      }
    }
  }
  emit(opt.out_path, [&](std::ostream& os) { table.write(os, opt.format); });
  return 0;
}

struct VerifyOptions {
  std::string classes = "all";
  std::string expr_file;
  std::string format = "json";
  std::string out_path;
};

int run_bell322_verify(const VerifyOptions& opt) {
  if (!opt.expr_file.empty()) {
    std::ifstream file(opt.expr_file);
    if (!file) throw DomainError("cannot open expression file: " + opt.expr_file);
    json report = json::array();
    bool all_match = true;
    std::string line;
    int line_no = 0;
    while (std::getline(file, line)) {
      ++line_no;
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
      const BellExpression322 expr = parse_expression(line);
      const double bound = classical_bound(expr);
      json row{{"line", line_no},
               {"expression", render_expression(expr)},
               {"classical_bound", bound}};
      if (expr.stated_bound()) {
        row["stated_bound"] = *expr.stated_bound();
        row["match"] = bound == *expr.stated_bound();
        all_match = all_match && bound == *expr.stated_bound();
      }
      report.push_back(row);
    }
    emit(opt.out_path, [&](std::ostream& os) { os << report.dump(2) << "\n"; });
    return all_match ? 0 : 1;
  }

  std::vector<int> selected;
  if (opt.classes == "all") {
    selected.assign(kBuiltinClasses.begin(), kBuiltinClasses.end());
  } else if (!opt.classes.empty()) {
    std::stringstream ss(opt.classes);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      int k = 0;
      try {
        k = std::stoi(item);
      } catch (const std::exception&) {
        throw DomainError("bad class id: " + item);
      }
      selected.push_back(k);
    }
  }
  json report = json::array();
  bool all_pass = true;
  for (int k : selected) {
    const ClassVerification v = verify_symmetric_form(k);  // throws UnknownClass
    all_pass = all_pass && v.pass;
    report.push_back(to_json(v));
  }
  emit(opt.out_path, [&](std::ostream& os) { os << report.dump(2) << "\n"; });
  return all_pass ? 0 : 1;
}

struct AnalyzeOptions {
  std::string family;
  double y = 1.0;
  double alpha = 0.0;
  double beta = M_PI;
  std::string state_spec;
  int theta_steps = 181;
  int phi_steps = 91;
  double tol = 1e-6;
  std::string format = "json";
  std::string out_path;
};

PureState3 analyze_input_state(const AnalyzeOptions& opt) {
  if (!opt.state_spec.empty()) {
    std::string text = opt.state_spec;
    if (text.front() == '@') {
      std::ifstream file(text.substr(1));
      if (!file) throw DomainError("cannot open state file: " + text.substr(1));
      std::stringstream ss;
      ss << file.rdbuf();
      text = ss.str();
    }
    return state_from_json(json::parse(text));
  }
  if (opt.family == "d32") return canonical_d32(opt.beta);
  if (opt.family == "d33") return canonical_d33(opt.y, opt.alpha, opt.beta);
  throw DomainError("analyze needs --family d32|d33 or --state");
}

int run_analyze(const AnalyzeOptions& opt) {
  require_grid(opt.theta_steps, "--theta-steps");
  require_grid(opt.phi_steps, "--phi-steps");
  const PureState3 state = analyze_input_state(opt);
  json out;
  out["state"] = to_json(state);

  const SymmetryCheck sym = is_permutation_symmetric(state, opt.tol);
  out["symmetry_residual"] = sym.residual;
  const SloccClass cls = slocc_class(state, opt.tol);
  out["slocc"] = to_string(cls);
  if (cls != SloccClass::NotSymmetric) {
    json spinors = json::array();
    for (const Spinor& s : majorana_roots(state, opt.tol)) {
      const Spinor c = s.canonical_phase();
      spinors.push_back(json::array({json::array({c.a0().real(), c.a0().imag()}),
                                     json::array({c.a1().real(), c.a1().imag()})}));
    }
    out["spinors"] = spinors;
  }

  const InvariantSet inv = invariants_of(state);
  out["tau"] = inv.tau;
  out["concurrence"] = inv.concurrence;
  out["chsh_opt"] =
      chsh_optimum(hilbert_schmidt_decompose(reduce_to_pair(state, Party::C)).T);

  const ConditionalGrid grid{opt.theta_steps, opt.phi_steps, 3};
  const ConditionalOptimum best = optimize_conditional(state, grid);
  out["best_setting"] = {{"theta", best.setting.theta}, {"phi", best.setting.phi}};
  out["conditional"] = to_json(best.report);
  out["chsh_con_opt"] = best.report.chsh_con_opt;
  out["Q"] = std::clamp((best.report.chsh_con_opt - 2.0) / (kTwoSqrt2 - 2.0), 0.0, 1.0);

  emit(opt.out_path, [&](std::ostream& os) { os << out.dump(2) << "\n"; });
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bell-CHSH, conditional-CHSH and tight (3,2,2) inequality analysis "
               "of pure symmetric three-qubit states"};
  app.require_subcommand(1);

  ScanOptions scan;
  VerifyOptions verify;
  AnalyzeOptions analyze;
  int exit_code = 0;

  auto* scan_chsh = app.add_subcommand(
      "scan-chsh", "Correlation-matrix eigenvalues and CHSH optimum of reduced pairs");
  scan_chsh->add_option("--family", scan.family, "State family (d32 or d33)")
      ->required()
      ->check(CLI::IsMember({"d32", "d33"}));
  scan_chsh->add_option("--beta-steps", scan.beta_steps, "Grid points over beta in (0, pi]");
  scan_chsh->add_option("--y-steps", scan.y_steps, "Grid points over y in (0, 1] (d33)");
  scan_chsh->add_option("--beta", scan.beta, "Fixed beta for d33 scans");
  scan_chsh->add_option("--y", scan.y, "Fixed y (d33)");
  scan_chsh->add_option("--alpha", scan.alpha, "Fixed alpha (d33)");
  scan_chsh->add_option("--format", scan.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  scan_chsh->add_option("--out", scan.out_path, "Output path (default stdout)");
  scan_chsh->callback([&]() { exit_code = run_scan_chsh(scan); });

  auto* scan_cond = app.add_subcommand(
      "scan-conditional", "Conditional CHSH data over (beta, theta, phi) grids");
  scan_cond->add_option("--family", scan.family, "State family (d32 or d33)")
      ->required()
      ->check(CLI::IsMember({"d32", "d33"}));
  scan_cond->add_option("--beta-steps", scan.beta_steps, "Grid points over beta in (0, pi]");
  scan_cond->add_option("--theta-steps", scan.theta_steps, "Grid points over theta in [0, pi]");
  scan_cond->add_option("--phi-steps", scan.phi_steps, "Grid points over phi in [0, 2pi)");
  scan_cond->add_option("--y", scan.y, "Fixed y (d33)");
  scan_cond->add_option("--alpha", scan.alpha, "Fixed alpha (d33)");
  scan_cond->add_option("--format", scan.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  scan_cond->add_option("--out", scan.out_path, "Output path (default stdout)");
  scan_cond->callback([&]() { exit_code = run_scan_conditional(scan); });

  auto* bell = app.add_subcommand("bell322-verify",
                                  "Verify the built-in tight (3,2,2) inequality classes");
  bell->add_option("--classes", verify.classes,
                   "Comma-separated class ids, 'all', or '' for none");
  bell->add_option("--expr-file", verify.expr_file,
                   "Check stated bounds of inequalities in a text file instead");
  bell->add_option("--format", verify.format, "Output format")
      ->check(CLI::IsMember({"json"}));
  bell->add_option("--out", verify.out_path, "Output path (default stdout)");
  bell->callback([&]() { exit_code = run_bell322_verify(verify); });

  auto* ana = app.add_subcommand(
      "analyze", "SLOCC class, Majorana spinors, invariants and conditional CHSH "
                 "optimum of one state");
  ana->add_option("--family", analyze.family, "State family (d32 or d33)")
      ->check(CLI::IsMember({"d32", "d33"}));
  ana->add_option("--y", analyze.y, "y parameter (d33)");
  ana->add_option("--alpha", analyze.alpha, "alpha parameter (d33)");
  ana->add_option("--beta", analyze.beta, "beta parameter");
  ana->add_option("--state", analyze.state_spec,
                  "State as JSON [[re,im] x 8] or @file, index 4a+2b+c");
  ana->add_option("--theta-steps", analyze.theta_steps, "Optimizer theta grid");
  ana->add_option("--phi-steps", analyze.phi_steps, "Optimizer phi grid");
  ana->add_option("--tol", analyze.tol, "Symmetry/root-coincidence tolerance");
  ana->add_option("--format", analyze.format, "Output format")
      ->check(CLI::IsMember({"json"}));
  ana->add_option("--out", analyze.out_path, "Output path (default stdout)");
  ana->callback([&]() { exit_code = run_analyze(analyze); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
