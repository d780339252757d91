#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "polyopt/polyopt.hpp"

namespace {

using namespace polyopt;
using io::json;

struct Output {
  bool as_json = false;
  bool quiet = false;

  void emit(const json& j, const std::string& text) const {
    if (quiet) return;
    if (as_json) {
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << text;
    }
  }
};

std::string format_term(const Rational& coef, const std::string& var, bool first) {
  std::ostringstream os;
  if (coef.sign() < 0) {
    os << (first ? "-" : " - ");
  } else if (!first) {
    os << " + ";
  }
  const Rational a = coef.abs();
  if (a != Rational(1)) os << a.str() << " ";
  os << var;
  return os.str();
}

std::string format_row(const RatVector& coeffs, const std::vector<std::string>& names,
                       const Rational& rhs) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < coeffs.dim(); ++j) {
    if (coeffs[j].is_zero()) continue;
    os << format_term(coeffs[j], names[j], first);
    first = false;
  }
  if (first) os << "0";
  os << " >= " << rhs.str();
  return os.str();
}

std::vector<std::string> var_names(const std::string& stem, std::size_t count) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= count; ++i) names.push_back(stem + std::to_string(i));
  return names;
}

std::string format_hrep(const HRep& h, const std::vector<std::string>& names) {
  std::ostringstream os;
  if (h.rows() == 0) {
    os << "  (no constraints: whole space)\n";
    return os.str();
  }
  for (std::size_t i = 0; i < h.rows(); ++i)
    os << "  " << format_row(h.M.row(i), names, h.v[i]) << "\n";
  return os.str();
}

std::string format_vectors(const std::vector<RatVector>& vs) {
  std::ostringstream os;
  if (vs.empty()) return "  (none)\n";
  for (const auto& v : vs) os << "  " << v.str() << "\n";
  return os.str();
}

json hrep_to_json(const HRep& h) {
  return {{"M", io::matrix_to_json(h.M)}, {"v", io::vector_to_json(h.v)}};
}

json vrep_to_json(const VRep& v) {
  return {{"points", io::vectors_to_json(v.points)},
          {"rays", io::vectors_to_json(v.rays)},
          {"lines", io::vectors_to_json(v.lines)}};
}

RatVector parse_cli_vector(const std::string& text, std::size_t want_dim) {
  std::vector<Rational> entries;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    if (!token.empty()) entries.push_back(Rational::parse(token));
  }
  RatVector v(entries);
  if (v.dim() != want_dim) {
    throw std::invalid_argument("expected " + std::to_string(want_dim) +
                                " comma-separated entries, got " + std::to_string(v.dim()));
  }
  return v;
}

int cmd_solve(const io::ProblemFile& pf, const Output& out,
              const std::optional<std::string>& output_path) {
  const SolveResult res = solve(pf.problem);
  io::SolutionFile sf;
  sf.status = res.status;
  sf.pair = res.pair;
  std::ostringstream text;
  int code = 0;
  switch (res.status) {
    case SolveStatus::Solution: {
      sf.upper_h = res.upper_h;
      sf.upper_v = res.upper_v;
      sf.verification = verify(pf.problem, res.pair);
      text << "status: solution\n";
      text << "S_bar (minimizing points):\n" << format_vectors(res.pair.S_bar);
      text << "S_hat (minimizing directions):\n" << format_vectors(res.pair.S_hat);
      text << "upper image:\n" << format_hrep(res.upper_h, var_names("y", pf.q));
      text << "verification: " << (sf.verification->pass() ? "pass" : "FAIL") << "\n";
      code = 0;
      break;
    }
    case SolveStatus::NoSolution:
      sf.witness = res.no_solution_witness;
      text << "status: no solution\n";
      text << "witness x with (0+F_C)(x) strictly above (0+F_C)(0): "
           << res.no_solution_witness.str() << "\n";
      code = 2;
      break;
    case SolveStatus::Infeasible:
      text << "status: infeasible\n";
      code = 3;
      break;
  }
  const json j = io::solution_to_json(sf);
  if (output_path) io::write_json_file(*output_path, j);
  out.emit(j, text.str());
  return code;
}

int cmd_check(const io::ProblemFile& pf, const Output& out) {
  json j;
  std::ostringstream text;
  const bool feasible = is_feasible(pf.problem);
  j["feasible"] = feasible;
  text << "feasible: " << (feasible ? "true" : "false") << "\n";
  if (!feasible) {
    j["bounded"] = nullptr;
    j["prop4"] = nullptr;
    j["condition3"] = nullptr;
    text << "bounded: n/a\nprop4: n/a\ncondition3: n/a\n";
    out.emit(j, text.str());
    return 0;
  }
  const Boundedness bd = is_bounded(pf.problem);
  j["bounded"] = bd.bounded;
  text << "bounded: " << (bd.bounded ? "true" : "false");
  if (bd.lower_bound) {
    j["lower_bound"] = io::vector_to_json(*bd.lower_bound);
    text << "  (lower bound " << bd.lower_bound->str() << ")";
  }
  text << "\n";
  const Prop4 pr = prop4(pf.problem);
  j["prop4"] = {{"i", pr.exists_covered_minimizer},
                {"ii", pr.all_vertices_covered},
                {"iii", pr.lp_optimal_somewhere},
                {"iv", pr.lp_optimal_everywhere},
                {"v", pr.lp_hom_optimal},
                {"vi", pr.zero_minimizes_homogeneous}};
  text << "prop4 (i) some vertex covered by a minimizer: "
       << (pr.exists_covered_minimizer ? "true" : "false") << "\n"
       << "prop4 (ii) all vertices covered by minimizers: "
       << (pr.all_vertices_covered ? "true" : "false") << "\n"
       << "prop4 (iii) LP optimal at some vertex: "
       << (pr.lp_optimal_somewhere ? "true" : "false") << "\n"
       << "prop4 (iv) LP optimal at all vertices: "
       << (pr.lp_optimal_everywhere ? "true" : "false") << "\n"
       << "prop4 (v) homogeneous LP optimal: " << (pr.lp_hom_optimal ? "true" : "false")
       << "\n"
       << "prop4 (vi) zero minimizes the homogeneous problem: "
       << (pr.zero_minimizes_homogeneous ? "true" : "false") << "\n";
  const bool c3 = condition3(upper_image(pf.problem).first, pf.problem.C);
  j["condition3"] = c3;
  text << "condition3 (L(P) ∩ -C ⊆ C): " << (c3 ? "true" : "false") << "\n";
  out.emit(j, text.str());
  return 0;
}

int cmd_verify(const io::ProblemFile& pf, const io::SolutionFile& sf, const Output& out) {
  const VerifyReport rep = verify(pf.problem, sf.pair);
  json j = {{"infimum_attained", rep.infimum_attained},
            {"points_minimal", rep.points_minimal},
            {"directions_minimal", rep.directions_minimal},
            {"pass", rep.pass()},
            {"notes", rep.notes}};
  std::ostringstream text;
  text << "infimum attained: " << (rep.infimum_attained ? "pass" : "FAIL") << "\n"
       << "points minimal: " << (rep.points_minimal ? "pass" : "FAIL") << "\n"
       << "directions minimal: " << (rep.directions_minimal ? "pass" : "FAIL") << "\n"
       << "overall: " << (rep.pass() ? "pass" : "FAIL") << "\n";
  for (const auto& note : rep.notes) text << "  note: " << note << "\n";
  out.emit(j, text.str());
  return rep.pass() ? 0 : 2;
}

int cmd_upper_image(const io::ProblemFile& pf, const Output& out) {
  const auto [h, v] = upper_image(pf.problem);
  json j = {{"h", hrep_to_json(h)}, {"v", vrep_to_json(v)}};
  std::ostringstream text;
  text << "upper image (H-representation):\n" << format_hrep(h, var_names("y", pf.q));
  text << "points:\n" << format_vectors(v.points);
  text << "rays:\n" << format_vectors(v.rays);
  text << "lines:\n" << format_vectors(v.lines);
  out.emit(j, text.str());
  return 0;
}

int cmd_eval(const io::ProblemFile& pf, const RatVector& x, const Output& out) {
  const HRep h = evaluate(pf.problem, x).canonicalized();
  const bool empty = hrep_is_empty(h);
  json j = {{"empty", empty}, {"h", hrep_to_json(h)}};
  std::ostringstream text;
  if (empty) {
    text << "F_C" << x.str() << " is empty (x outside dom F)\n";
  } else {
    text << "F_C" << x.str() << ":\n" << format_hrep(h, var_names("y", pf.q));
  }
  out.emit(j, text.str());
  return 0;
}

int cmd_minimal(const io::ProblemFile& pf, const RatVector& x, bool direction,
                const Output& out) {
  const Problem target = direction ? homogeneous(pf.problem) : pf.problem;
  if (direction) {
    if (x.is_zero())
      throw std::invalid_argument("--direction must be nonzero (S_hat excludes 0)");
    if (!in_domain(target, x))
      throw std::invalid_argument("direction is outside dom 0+F");
  } else if (!in_domain(target, x)) {
    throw std::invalid_argument("point is outside dom F");
  }
  const auto dominator = find_dominator(target, x);
  const bool minimal = !dominator.has_value();
  json j = {{"minimal", minimal}};
  std::ostringstream text;
  text << (direction ? "minimizing direction: " : "minimizing point: ")
       << (minimal ? "true" : "false") << "\n";
  if (dominator) {
    j["dominator"] = io::vector_to_json(dominator->x);
    j["strict_row"] = dominator->strict_row;
    text << "dominated by x = " << dominator->x.str() << " (strict on graph row "
         << dominator->strict_row << ")\n";
  }
  out.emit(j, text.str());
  return 0;
}

int cmd_project(const io::ProblemFile& pf, const Output& out) {
  const HRep graph = pf.problem.graph().canonicalized();
  json j = {{"A", io::matrix_to_json(pf.problem.A)},
            {"B", io::matrix_to_json(pf.problem.B)},
            {"b", io::vector_to_json(pf.problem.b)}};
  std::ostringstream text;
  auto names = var_names("x", pf.n);
  const auto ynames = var_names("y", pf.q);
  names.insert(names.end(), ynames.begin(), ynames.end());
  text << "graph of F_C (auxiliary variables eliminated):\n" << format_hrep(graph, names);
  out.emit(j, text.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polyopt: exact solver and verifier for polyhedral convex set optimization"};
  app.require_subcommand(1);
  app.fallthrough();  // --json / --quiet may follow the subcommand
  Output out;
  app.add_flag("--json", out.as_json, "machine-readable output");
  app.add_flag("--quiet", out.quiet, "suppress result output (exit code only)");

  std::string problem_path, solution_path, point_text, direction_text;
  std::optional<std::string> output_path;

  auto* solve_cmd = app.add_subcommand("solve", "solve a problem file");
  solve_cmd->add_option("problem", problem_path, "problem file")->required();
  std::string out_opt;
  solve_cmd->add_option("-o,--output", out_opt, "write the solution file here");

  auto* check_cmd = app.add_subcommand(
      "check", "report feasibility, boundedness, the six existence flags and condition3");
  check_cmd->add_option("problem", problem_path, "problem file")->required();

  auto* verify_cmd = app.add_subcommand("verify", "verify a solution file against a problem");
  verify_cmd->add_option("problem", problem_path, "problem file")->required();
  verify_cmd->add_option("solution", solution_path, "solution file")->required();

  auto* upper_cmd = app.add_subcommand("upper-image", "print both representations of P");
  upper_cmd->add_option("problem", problem_path, "problem file")->required();

  auto* eval_cmd = app.add_subcommand("eval", "print F_C(x)");
  eval_cmd->add_option("problem", problem_path, "problem file")->required();
  eval_cmd->add_option("x", point_text, "comma-separated rationals")->required();

  auto* minimal_cmd = app.add_subcommand("minimal", "decide minimality of a point or direction");
  minimal_cmd->add_option("problem", problem_path, "problem file")->required();
  auto* popt = minimal_cmd->add_option("--point", point_text, "candidate minimizing point");
  auto* dopt =
      minimal_cmd->add_option("--direction", direction_text, "candidate minimizing direction");
  popt->excludes(dopt);

  auto* project_cmd =
      app.add_subcommand("project", "print the (A, B, b) graph after eliminating auxiliaries");
  project_cmd->add_option("problem", problem_path, "problem file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << e.what() << "\n";
    return 1;
  }

  try {
    const io::ProblemFile pf = io::parse_problem(io::read_json_file(problem_path));
    if (solve_cmd->parsed()) {
      if (!out_opt.empty()) output_path = out_opt;
      return cmd_solve(pf, out, output_path);
    }
    if (check_cmd->parsed()) return cmd_check(pf, out);
    if (verify_cmd->parsed()) {
      const io::SolutionFile sf =
          io::parse_solution(io::read_json_file(solution_path), pf.n, pf.q);
      return cmd_verify(pf, sf, out);
    }
    if (upper_cmd->parsed()) return cmd_upper_image(pf, out);
    if (eval_cmd->parsed()) return cmd_eval(pf, parse_cli_vector(point_text, pf.n), out);
    if (minimal_cmd->parsed()) {
      const bool direction = dopt->count() > 0;
      if (!direction && popt->count() == 0)
        throw std::invalid_argument("minimal: give --point or --direction");
      const RatVector x =
          parse_cli_vector(direction ? direction_text : point_text, pf.n);
      return cmd_minimal(pf, x, direction, out);
    }
    if (project_cmd->parsed()) return cmd_project(pf, out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
