// SPDX-FileCopyrightText: 2026 The ncagm authors
// SPDX-License-Identifier: Apache-2.0

#include <omp.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ncagm/certify/farkas_check.hpp"
#include "ncagm/certify/instance.hpp"
#include "ncagm/certify/sos.hpp"
#include "ncagm/errors.hpp"
#include "ncagm/io/artifacts.hpp"
#include "ncagm/poly/scalar.hpp"
#include "ncagm/sdp/farkas.hpp"
#include "ncagm/sdp/sdpa.hpp"
#include "ncagm/sos/pipeline.hpp"
#include "ncagm/sos/symmetry.hpp"

namespace {

using namespace ncagm;

enum Exit : int { ok = 0, usage = 2, non_optimal = 3, invalid = 4, violation = 5 };

struct Common {
  int m = 0;
  int n = 0;
  std::string sign = "plus";
  std::string symmetry = "on";
  double tol = 1e-8;
  std::string format = "text";
  std::string out;
  bool verbose = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void check_mn(const Common& c) {
  if (c.n < 1) throw UsageError("--n must be at least 1");
  if (c.m < 1) throw UsageError("--m must be at least 1");
  if (c.m > c.n) throw UsageError("--m must not exceed --n");
}

sos::Sign parse_sign(const std::string& s) { return s == "minus" ? sos::Sign::minus : sos::Sign::plus; }

sdp::SolverOptions solver_options(const Common& c) {
  sdp::SolverOptions o;
  o.tolerance = c.tol;
  o.verbose = c.verbose;
  o.log = [](const std::string& msg) { std::cerr << msg << '\n'; };
  return o;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
  if (!f) throw std::runtime_error("write failed: " + path);
}

std::string fixed(double v, int digits = 4) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << v;
  return s.str();
}

std::string stem(const Common& c) {
  return "ncagm_m" + std::to_string(c.m) + "_n" + std::to_string(c.n) + "_" + c.sign;
}

void add_common(CLI::App* app, Common& c, bool mn, bool sign) {
  if (mn) {
    app->add_option("--m", c.m, "product length m")->required();
    app->add_option("--n", c.n, "number of matrices n")->required();
  }
  if (sign) app->add_option("--sign", c.sign, "plus (lower bound) or minus (upper bound)")->check(CLI::IsMember({"plus", "minus"}));
  app->add_option("--tol", c.tol, "solver tolerance")->check(CLI::PositiveNumber);
  app->add_flag("--verbose", c.verbose, "print the solver trace to stderr");
}

// ---- table ----------------------------------------------------------------

int cmd_table(const Common& c, bool heavy, const std::vector<std::string>& row_specs) {
  std::vector<std::pair<int, int>> rows;
  if (row_specs.empty()) {
    rows = sos::default_rows(heavy);
  } else {
    for (const auto& spec : row_specs) {
      int m = 0;
      int n = 0;
      char comma = 0;
      std::istringstream in(spec);
      if (!(in >> m >> comma >> n) || comma != ',' || !in.eof()) throw UsageError("--row expects m,n, got " + spec);
      Common rc = c;
      rc.m = m;
      rc.n = n;
      check_mn(rc);
      rows.emplace_back(m, n);
    }
  }
  const bool symmetry = c.symmetry == "on";
  const sdp::SolverOptions opts = solver_options(c);
  std::vector<sos::TableRow> results;
  for (auto [m, n] : rows) {
    results.push_back(sos::table_row(m, n, symmetry, opts));
    if (c.verbose) std::cerr << "row (" << m << "," << n << ") " << results.back().verdict << '\n';
  }

  std::ostringstream out;
  if (c.format == "csv") {
    out << "m,n,lambda1,lambda2,bound,verdict\n";
    for (const auto& r : results) {
      out << r.m << ',' << r.n << ',' << fixed(r.upper.lambda(), 6) << ',' << fixed(r.lower.lambda(), 6) << ','
          << r.bound << ',' << r.verdict << '\n';
    }
  } else if (c.format == "json") {
    io::Json arr = io::Json::array();
    for (const auto& r : results) {
      io::Json j;
      j["m"] = r.m;
      j["n"] = r.n;
      j["lambda1"] = format_double(r.upper.lambda());
      j["lambda2"] = format_double(r.lower.lambda());
      j["bound"] = format_double(r.bound);
      j["verdict"] = r.verdict;
      j["status1"] = std::string(sdp::to_string(r.upper.solution.status));
      j["status2"] = std::string(sdp::to_string(r.lower.solution.status));
      arr.push_back(std::move(j));
    }
    out << arr.dump(2) << '\n';
  } else {
    out << "  m  n     lambda1     lambda2       bound  verdict\n";
    for (const auto& r : results) {
      out << std::setw(3) << r.m << std::setw(3) << r.n << std::setw(12) << fixed(r.upper.lambda())
          << std::setw(12) << fixed(r.lower.lambda()) << std::setw(12) << fixed(r.bound) << "  " << r.verdict << '\n';
    }
  }
  write_text(c.out, out.str());

  for (const auto& r : results) {
    if (r.verdict.rfind("error", 0) == 0) return non_optimal;
  }
  return ok;
}

// ---- solve ----------------------------------------------------------------

int cmd_solve(const Common& c, bool export_only, std::string sdpa_path, bool no_json) {
  check_mn(c);
  const sos::Sign sign = parse_sign(c.sign);
  if (sdpa_path.empty()) sdpa_path = stem(c) + ".dat-s";
  {
    std::ofstream f(sdpa_path);
    if (!f) throw std::runtime_error("cannot write " + sdpa_path);
    sdp::export_sdpa(sos::assemble_sdp(c.m, c.n, sign), f);
  }
  std::cout << "wrote " << sdpa_path << '\n';
  if (export_only) return ok;

  const auto res = sos::solve_lambda(c.m, c.n, sign, c.symmetry == "on", solver_options(c));
  const auto& s = res.solution;
  std::cout << "status " << sdp::to_string(s.status) << "\nlambda = " << fixed(s.objective_primal, 6)
            << "\ngap = " << format_double(s.gap) << "\niterations " << s.iterations << "\ntime "
            << fixed(res.seconds, 2) << " s\n";
  if (!no_json) {
    const std::string path = c.out.empty() ? stem(c) + ".json" : c.out;
    const sdp::ProblemInfo info{c.m, c.n, c.m / 2, static_cast<int>(sign), false};
    write_text(path, io::solution_to_json(s, info).dump(1) + "\n");
    if (path != "-") std::cout << "wrote " << path << '\n';
  }
  return res.optimal() ? ok : non_optimal;
}

// ---- certify --------------------------------------------------------------

int cmd_farkas(const Common& c, double lambda, double defect_tol) {
  check_mn(c);
  const sos::Sign sign = parse_sign(c.sign);
  const sdp::SdpProblem problem = sos::assemble_sdp(c.m, c.n, sign);
  sdp::FarkasOptions fo;
  fo.defect_tolerance = defect_tol;
  fo.solver = solver_options(c);
  const auto cert =
      c.symmetry == "on" ? sos::extract_farkas_symmetric(problem, lambda, fo) : sdp::extract_farkas(problem, lambda, fo);
  if (!cert) {
    std::cout << "no certificate: lambda = " << format_double(lambda) << " was not shown infeasible\n";
    return non_optimal;
  }
  const sdp::SdpProblem pinned = sdp::pinned_problem(problem, lambda);
  certify::FarkasCheck check;
  try {
    check = certify::farkas_check(pinned, *cert, defect_tol);
  } catch (const InvalidCertificate& e) {
    std::cout << "invalid certificate: " << e.what() << '\n';
    return invalid;
  }
  const std::string path = c.out.empty() ? "ncagm_farkas_m" + std::to_string(c.m) + "_n" + std::to_string(c.n) + ".json" : c.out;
  write_text(path, io::farkas_to_json(*cert, {c.m, c.n, c.m / 2, static_cast<int>(sign), false}).dump(1) + "\n");
  std::cout << "margin " << format_double(check.margin) << "\npsd_defect " << format_double(check.max_eigenvalue)
            << " (allowed " << format_double(defect_tol * check.scale) << ")\n";
  if (!(check.margin > 0.0)) {
    std::cout << "not a certificate: margin is not positive\n";
    return invalid;
  }
  std::cout << "lambda = " << format_double(lambda) << " is infeasible\n";
  if (path != "-") std::cout << "wrote " << path << '\n';
  return ok;
}

int cmd_farkas_check(const std::string& file, double defect_tol) {
  const io::Json j = io::read_json_file(file);
  const sdp::ProblemInfo info = io::info_from_json(j);
  if (info.m < 1 || info.m > info.n) throw UsageError("certificate has invalid m, n");
  const sdp::FarkasCertificate cert = io::farkas_from_json(j);
  const sdp::SdpProblem pinned =
      sdp::pinned_problem(sos::assemble_sdp(info.m, info.n, info.sign > 0 ? sos::Sign::plus : sos::Sign::minus), cert.lambda_target);
  try {
    const auto check = certify::farkas_check(pinned, cert, defect_tol);
    std::cout << "margin " << format_double(check.margin) << "\npsd_defect " << format_double(check.max_eigenvalue) << '\n';
    if (!(check.margin > 0.0)) {
      std::cout << "not a certificate: margin is not positive\n";
      return invalid;
    }
  } catch (const InvalidCertificate& e) {
    std::cout << "invalid certificate: " << e.what() << '\n';
    return invalid;
  }
  std::cout << "certificate verified\n";
  return ok;
}

int report_sos(const certify::SosCertificate& cert) {
  if (!certify::verify_sos(cert)) {
    std::cout << "invalid certificate: exact identity or PSD check failed\n";
    return invalid;
  }
  std::cout << "exact identity verified, λ = " << format_rational(cert.lambda) << '\n';
  return ok;
}

int cmd_sos_m2(int n, const std::string& out) {
  if (n < 2) throw UsageError("--n must be at least 2");
  const auto cert = certify::build_m2_certificate(n);
  const int code = report_sos(cert);
  const std::string path = out.empty() ? "ncagm_sos_m2_n" + std::to_string(n) + ".json" : out;
  write_text(path, io::sos_to_json(cert).dump(1) + "\n");
  if (path != "-") std::cout << "wrote " << path << '\n';
  return code;
}

int cmd_verify_sos(const std::string& file) {
  return report_sos(io::sos_from_json(io::read_json_file(file)));
}

int cmd_check_instance(const std::string& file, bool sharp, int m_override, double tol, const std::string& out) {
  io::Instance inst;
  if (sharp) {
    inst.matrices = certify::sharp_m2_instance();
    inst.n = 2;
    inst.m = 2;
  } else {
    if (file.empty()) throw UsageError("check-instance needs --file or --sharp");
    inst = io::instance_from_json(io::read_json_file(file));
  }
  if (m_override > 0) inst.m = m_override;
  if (inst.m < 1 || inst.m > inst.n) throw UsageError("instance needs 1 <= m <= n");
  const auto r = certify::eval_instance(inst.matrices, inst.m, tol);

  io::Json j;
  j["m"] = r.m;
  j["n"] = r.n;
  j["all_psd"] = r.all_psd;
  j["sum_bounded"] = r.sum_bounded;
  j["min_eig"] = format_double(r.min_eig);
  j["max_eig"] = format_double(r.max_eig);
  j["bound"] = format_double(r.bound);
  io::Json checks = io::Json::array();
  std::cout << "feasible " << (r.feasible() ? "yes" : "no") << " (A_i psd: " << (r.all_psd ? "yes" : "no")
            << ", sum <= nI: " << (r.sum_bounded ? "yes" : "no") << ")\nmin_eig " << format_double(r.min_eig)
            << "\nmax_eig " << format_double(r.max_eig) << '\n';
  for (const auto& c : r.checks) {
    io::Json cj;
    cj["name"] = c.name;
    cj["kind"] = c.lower ? "lower" : "upper";
    cj["limit"] = format_double(c.limit);
    cj["value"] = format_double(c.value);
    cj["violated"] = c.violated;
    checks.push_back(std::move(cj));
    std::cout << (c.lower ? "  min_eig >= " : "  max_eig <= ") << format_double(c.limit) << "  [" << c.name << "]  "
              << (c.violated ? "VIOLATED" : "holds") << '\n';
  }
  j["checks"] = checks;
  j["violations"] = r.violations;
  const std::string path = out.empty() ? "ncagm_instance_report.json" : out;
  write_text(path, j.dump(1) + "\n");
  if (!r.feasible()) {
    std::cout << "instance is outside the feasible set; the bounds do not apply\n";
    return violation;
  }
  return r.violations.empty() ? ok : violation;
}

void apply_threads() {
  if (const char* env = std::getenv("NCAGM_THREADS")) {
    const int t = std::atoi(env);
    if (t > 0) omp_set_num_threads(t);
  }
}

}  // namespace

int main(int argc, char** argv) {
  apply_threads();
  CLI::App app{"ncagm: noncommutative AM-GM inequalities as semidefinite programs"};
  app.require_subcommand(1);

  Common c;
  bool heavy = false;
  std::vector<std::string> row_specs;
  auto* table = app.add_subcommand("table", "solve lambda_1 and lambda_2 for a list of (m, n)");
  add_common(table, c, false, false);
  table->add_flag("--heavy", heavy, "include the n = 5 rows");
  table->add_option("--row", row_specs, "a single row m,n (repeatable)");
  table->add_option("--symmetry", c.symmetry, "on or off")->check(CLI::IsMember({"on", "off"}));
  table->add_option("--format", c.format, "csv, json or text")->check(CLI::IsMember({"csv", "json", "text"}));
  table->add_option("--out", c.out, "output path (default stdout)");

  bool export_only = false;
  bool no_json = false;
  std::string sdpa_path;
  auto* solve = app.add_subcommand("solve", "compile one lambda-problem, export it and solve it");
  add_common(solve, c, true, true);
  solve->add_option("--symmetry", c.symmetry, "on or off")->check(CLI::IsMember({"on", "off"}));
  solve->add_flag("--export-only", export_only, "write the .dat-s file and stop");
  solve->add_flag("--no-json", no_json, "do not write the solution JSON");
  solve->add_option("--sdpa", sdpa_path, "SDPA output path");
  solve->add_option("--out", c.out, "solution JSON path");

  auto* certify_cmd = app.add_subcommand("certify", "certificates and instance checks");
  certify_cmd->require_subcommand(1);

  double lambda = 0.0;
  double defect_tol = 1e-6;
  auto* farkas = certify_cmd->add_subcommand("farkas", "prove a lambda infeasible with a Farkas certificate");
  add_common(farkas, c, true, true);
  farkas->add_option("--lambda", lambda, "target value")->required();
  farkas->add_option("--symmetry", c.symmetry, "on or off")->check(CLI::IsMember({"on", "off"}));
  farkas->add_option("--defect-tol", defect_tol, "relative PSD defect tolerance")->check(CLI::PositiveNumber);
  farkas->add_option("--out", c.out, "certificate JSON path");

  std::string file;
  auto* fcheck = certify_cmd->add_subcommand("farkas-check", "re-check a Farkas certificate JSON");
  fcheck->add_option("--file", file, "certificate JSON")->required();
  fcheck->add_option("--defect-tol", defect_tol, "relative PSD defect tolerance")->check(CLI::PositiveNumber);

  int m2n = 0;
  auto* sos_m2 = certify_cmd->add_subcommand("sos-m2", "build and verify the m = 2 certificate");
  sos_m2->add_option("--n", m2n, "number of matrices")->required();
  sos_m2->add_option("--out", c.out, "certificate JSON path");

  auto* vsos = certify_cmd->add_subcommand("verify-sos", "verify an SOS certificate JSON exactly");
  vsos->add_option("--file", file, "certificate JSON")->required();

  bool sharp = false;
  int inst_m = 0;
  double inst_tol = 1e-9;
  auto* inst = certify_cmd->add_subcommand("check-instance", "evaluate the inequalities on explicit matrices");
  inst->add_option("--file", file, "instance JSON {n, m, matrices}");
  inst->add_flag("--sharp", sharp, "use the built-in 2x2 pair attaining the m = 2 lower bound");
  inst->add_option("--m", inst_m, "override m from the file");
  inst->add_option("--tol", inst_tol, "eigenvalue tolerance")->check(CLI::PositiveNumber);
  inst->add_option("--out", c.out, "report JSON path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  try {
    if (table->parsed()) return cmd_table(c, heavy, row_specs);
    if (solve->parsed()) return cmd_solve(c, export_only, sdpa_path, no_json);
    if (farkas->parsed()) return cmd_farkas(c, lambda, defect_tol);
    if (fcheck->parsed()) return cmd_farkas_check(file, defect_tol);
    if (sos_m2->parsed()) return cmd_sos_m2(m2n, c.out);
    if (vsos->parsed()) return cmd_verify_sos(file);
    if (inst->parsed()) return cmd_check_instance(file, sharp, inst_m, inst_tol, c.out);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return usage;
  } catch (const ParameterError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return usage;
}
