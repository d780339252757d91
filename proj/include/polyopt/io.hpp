#pragma once

#include <cstddef>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "polyopt/polyhedron.hpp"
#include "polyopt/setopt.hpp"
#include "polyopt/vlp.hpp"

namespace polyopt::io {

using json = nlohmann::ordered_json;

/// Raised on malformed input; the message names the offending key.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline ParseError err(const std::string& path, const std::string& what) {
  return ParseError(path + ": " + what);
}

inline const json& expect_key(const json& j, const std::string& key,
                              const std::string& path) {
  if (!j.is_object()) throw err(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw err(path, "missing key '" + key + "'");
  return *it;
}

inline Rational parse_rational(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const std::exception& e) {
      throw err(path, e.what());
    }
  }
  if (j.is_number_float())
    throw err(path, "floating-point numbers are not accepted; use \"p/q\" strings");
  throw err(path, "expected an integer or a \"p/q\" string");
}

inline RatVector parse_vector(const json& j, const std::string& path,
                              std::optional<std::size_t> want_dim = {}) {
  if (!j.is_array()) throw err(path, "expected an array of rationals");
  RatVector v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    v[i] = parse_rational(j[i], path + "[" + std::to_string(i) + "]");
  if (want_dim && v.dim() != *want_dim)
    throw err(path, "expected " + std::to_string(*want_dim) + " entries, got " +
                        std::to_string(v.dim()));
  return v;
}

inline RatMatrix parse_matrix(const json& j, const std::string& path,
                              std::optional<std::size_t> want_cols = {}) {
  if (!j.is_array()) throw err(path, "expected an array of rows");
  if (j.empty()) {
    if (!want_cols) throw err(path, "empty matrix needs a known column count");
    return RatMatrix(0, *want_cols);
  }
  const std::size_t cols = want_cols ? *want_cols : j[0].size();
  RatMatrix m(j.size(), cols);
  for (std::size_t i = 0; i < j.size(); ++i) {
    const RatVector row = parse_vector(j[i], path + "[" + std::to_string(i) + "]", cols);
    m.set_row(i, row);
  }
  return m;
}

inline std::vector<RatVector> parse_vector_list(const json& j, const std::string& path,
                                                std::size_t want_dim) {
  if (!j.is_array()) throw err(path, "expected an array of vectors");
  std::vector<RatVector> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(parse_vector(j[i], path + "[" + std::to_string(i) + "]", want_dim));
  return out;
}

}  // namespace detail

inline json vector_to_json(const RatVector& v) {
  json a = json::array();
  for (std::size_t i = 0; i < v.dim(); ++i) a.push_back(v[i].str());
  return a;
}

inline json matrix_to_json(const RatMatrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(vector_to_json(m.row(i)));
  return a;
}

inline json vectors_to_json(const std::vector<RatVector>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(vector_to_json(v));
  return a;
}

enum class GraphForm { H, P, Vlp };
enum class ConeForm { Generators, H };

/// A parsed problem file. The set-optimization problem is always materialized
/// (for P-rep input, through projection of the lifted system); the original
/// form is kept so printing round-trips.
struct ProblemFile {
  std::size_t n = 0, q = 0;
  GraphForm form = GraphForm::H;
  ConeForm cone_form = ConeForm::Generators;
  Problem problem;
  RatMatrix Mx, My, Mz;  // P form only
  RatVector c_vec;       // P form only
  std::optional<VlpProblem> vlp;
};

inline ProblemFile parse_problem(const json& j) {
  using namespace detail;
  ProblemFile pf;
  const json& jn = expect_key(j, "n", "problem");
  const json& jq = expect_key(j, "q", "problem");
  if (!jn.is_number_integer() || jn.get<std::int64_t>() < 1)
    throw err("n", "expected a positive integer");
  if (!jq.is_number_integer() || jq.get<std::int64_t>() < 1)
    throw err("q", "expected a positive integer");
  pf.n = jn.get<std::size_t>();
  pf.q = jq.get<std::size_t>();

  const json& jc = expect_key(j, "cone", "problem");
  Cone cone;
  if (jc.contains("generators")) {
    pf.cone_form = ConeForm::Generators;
    cone = Cone::from_generators(
        pf.q, parse_vector_list(jc["generators"], "cone.generators", pf.q));
  } else if (jc.contains("h")) {
    pf.cone_form = ConeForm::H;
    cone = Cone::from_hrep(
        parse_matrix(expect_key(jc["h"], "G", "cone.h"), "cone.h.G", pf.q));
  } else {
    throw err("cone", "expected 'generators' or 'h'");
  }

  const json& jg = expect_key(j, "graph", "problem");
  const int forms = jg.contains("h") + jg.contains("p") + jg.contains("vlp");
  if (forms != 1) throw err("graph", "exactly one of 'h', 'p', 'vlp' must be present");

  if (jg.contains("h")) {
    pf.form = GraphForm::H;
    const json& h = jg["h"];
    RatMatrix a = parse_matrix(expect_key(h, "A", "graph.h"), "graph.h.A", pf.n);
    RatMatrix b = parse_matrix(expect_key(h, "B", "graph.h"), "graph.h.B", pf.q);
    RatVector rhs = parse_vector(expect_key(h, "b", "graph.h"), "graph.h.b");
    if (a.rows() != b.rows() || a.rows() != rhs.dim())
      throw err("graph.h", "A, B, b must have the same number of rows");
    try {
      pf.problem = Problem(std::move(a), std::move(b), std::move(rhs), std::move(cone));
    } catch (const std::exception& e) {
      throw err("graph.h", e.what());
    }
  } else if (jg.contains("p")) {
    pf.form = GraphForm::P;
    const json& pr = jg["p"];
    pf.Mx = parse_matrix(expect_key(pr, "Mx", "graph.p"), "graph.p.Mx", pf.n);
    pf.My = parse_matrix(expect_key(pr, "My", "graph.p"), "graph.p.My", pf.q);
    const json& mz = expect_key(pr, "Mz", "graph.p");
    pf.Mz = mz.empty() ? RatMatrix(pf.Mx.rows(), 0) : parse_matrix(mz, "graph.p.Mz");
    pf.c_vec = parse_vector(expect_key(pr, "c", "graph.p"), "graph.p.c");
    if (pf.My.rows() != pf.Mx.rows() || pf.c_vec.dim() != pf.Mx.rows() ||
        (pf.Mz.cols() && pf.Mz.rows() != pf.Mx.rows()))
      throw err("graph.p", "Mx, My, Mz, c must have the same number of rows");
    try {
      pf.problem = from_prep(pf.Mx, pf.My, pf.Mz, pf.c_vec, std::move(cone));
    } catch (const std::exception& e) {
      throw err("graph.p", e.what());
    }
  } else {
    pf.form = GraphForm::Vlp;
    const json& vl = jg["vlp"];
    RatMatrix m = parse_matrix(expect_key(vl, "M", "graph.vlp"), "graph.vlp.M", pf.n);
    if (m.rows() != pf.q) throw err("graph.vlp.M", "expected q rows");
    const json& ja = expect_key(vl, "A", "graph.vlp");
    RatMatrix a = ja.empty() ? RatMatrix(0, pf.n) : parse_matrix(ja, "graph.vlp.A", pf.n);
    RatVector b = parse_vector(expect_key(vl, "b", "graph.vlp"), "graph.vlp.b", a.rows());
    try {
      pf.vlp = VlpProblem(std::move(m), std::move(a), std::move(b), cone);
      pf.problem = to_setopt(*pf.vlp);
    } catch (const std::exception& e) {
      throw err("graph.vlp", e.what());
    }
  }
  return pf;
}

inline json problem_to_json(const ProblemFile& pf) {
  using namespace detail;
  json j;
  j["n"] = pf.n;
  j["q"] = pf.q;
  json graph;
  switch (pf.form) {
    case GraphForm::H:
      graph["h"] = {{"A", matrix_to_json(pf.problem.A)},
                    {"B", matrix_to_json(pf.problem.B)},
                    {"b", vector_to_json(pf.problem.b)}};
      break;
    case GraphForm::P:
      graph["p"] = {{"Mx", matrix_to_json(pf.Mx)},
                    {"My", matrix_to_json(pf.My)},
                    {"Mz", matrix_to_json(pf.Mz)},
                    {"c", vector_to_json(pf.c_vec)}};
      break;
    case GraphForm::Vlp:
      graph["vlp"] = {{"M", matrix_to_json(pf.vlp->M)},
                      {"A", matrix_to_json(pf.vlp->A)},
                      {"b", vector_to_json(pf.vlp->b)}};
      break;
  }
  j["graph"] = std::move(graph);
  if (pf.cone_form == ConeForm::Generators) {
    j["cone"] = {{"generators", vectors_to_json(pf.problem.C.generators)}};
  } else {
    j["cone"] = {{"h", {{"G", matrix_to_json(pf.problem.C.hrep.M)}}}};
  }
  return j;
}

struct SolutionFile {
  SolveStatus status = SolveStatus::Infeasible;
  SolutionPair pair;
  std::optional<HRep> upper_h;
  std::optional<VRep> upper_v;
  std::optional<RatVector> witness;
  std::optional<VerifyReport> verification;
};

inline std::string status_token(SolveStatus s) {
  switch (s) {
    case SolveStatus::Solution: return "solution";
    case SolveStatus::NoSolution: return "no_solution";
    case SolveStatus::Infeasible: return "infeasible";
  }
  return "infeasible";
}

inline json solution_to_json(const SolutionFile& sf) {
  using namespace detail;
  json j;
  j["status"] = status_token(sf.status);
  j["S_bar"] = vectors_to_json(sf.pair.S_bar);
  j["S_hat"] = vectors_to_json(sf.pair.S_hat);
  if (sf.upper_h && sf.upper_v) {
    j["upper_image"] = {{"h", {{"M", matrix_to_json(sf.upper_h->M)},
                               {"v", vector_to_json(sf.upper_h->v)}}},
                        {"points", vectors_to_json(sf.upper_v->points)},
                        {"rays", vectors_to_json(sf.upper_v->rays)},
                        {"lines", vectors_to_json(sf.upper_v->lines)}};
  }
  if (sf.witness) j["witness"] = vector_to_json(*sf.witness);
  if (sf.verification) {
    j["verification"] = {{"infimum_attained", sf.verification->infimum_attained},
                         {"points_minimal", sf.verification->points_minimal},
                         {"directions_minimal", sf.verification->directions_minimal},
                         {"pass", sf.verification->pass()},
                         {"notes", sf.verification->notes}};
  }
  return j;
}

inline SolutionFile parse_solution(const json& j, std::size_t n, std::size_t q) {
  using namespace detail;
  SolutionFile sf;
  const json& st = expect_key(j, "status", "solution");
  const std::string tok = st.is_string() ? st.get<std::string>() : "";
  if (tok == "solution") sf.status = SolveStatus::Solution;
  else if (tok == "no_solution") sf.status = SolveStatus::NoSolution;
  else if (tok == "infeasible") sf.status = SolveStatus::Infeasible;
  else throw err("status", "expected 'solution', 'no_solution' or 'infeasible'");
  sf.pair.S_bar = parse_vector_list(expect_key(j, "S_bar", "solution"), "S_bar", n);
  sf.pair.S_hat = parse_vector_list(expect_key(j, "S_hat", "solution"), "S_hat", n);
  if (j.contains("upper_image")) {
    const json& u = j["upper_image"];
    const json& h = expect_key(u, "h", "upper_image");
    RatMatrix m = parse_matrix(expect_key(h, "M", "upper_image.h"), "upper_image.h.M", q);
    RatVector v = parse_vector(expect_key(h, "v", "upper_image.h"), "upper_image.h.v",
                               m.rows());
    sf.upper_h = HRep(std::move(m), std::move(v));
    VRep vr(q);
    vr.points = parse_vector_list(expect_key(u, "points", "upper_image"),
                                  "upper_image.points", q);
    vr.rays = parse_vector_list(expect_key(u, "rays", "upper_image"),
                                "upper_image.rays", q);
    vr.lines = parse_vector_list(expect_key(u, "lines", "upper_image"),
                                 "upper_image.lines", q);
    sf.upper_v = std::move(vr);
  }
  if (j.contains("witness"))
    sf.witness = parse_vector(j["witness"], "witness", n);
  return sf;
}

/// The three-sets/three-cones family fixture.
struct SetFamily {
  std::size_t dimension = 0;
  std::vector<VRep> sets;
  std::vector<Cone> cones;
};

inline SetFamily parse_family(const json& j) {
  using namespace detail;
  SetFamily fam;
  const json& jd = expect_key(j, "dimension", "family");
  if (!jd.is_number_integer() || jd.get<std::int64_t>() < 1)
    throw err("dimension", "expected a positive integer");
  fam.dimension = jd.get<std::size_t>();
  const json& js = expect_key(j, "sets", "family");
  if (!js.is_array()) throw err("sets", "expected an array");
  for (std::size_t i = 0; i < js.size(); ++i) {
    const std::string path = "sets[" + std::to_string(i) + "]";
    VRep v(fam.dimension);
    v.points = parse_vector_list(expect_key(js[i], "points", path), path + ".points",
                                 fam.dimension);
    if (js[i].contains("rays"))
      v.rays = parse_vector_list(js[i]["rays"], path + ".rays", fam.dimension);
    if (js[i].contains("lines"))
      v.lines = parse_vector_list(js[i]["lines"], path + ".lines", fam.dimension);
    v.validate();
    fam.sets.push_back(std::move(v));
  }
  const json& jc = expect_key(j, "cones", "family");
  if (!jc.is_array()) throw err("cones", "expected an array");
  for (std::size_t i = 0; i < jc.size(); ++i) {
    const std::string path = "cones[" + std::to_string(i) + "]";
    fam.cones.push_back(Cone::from_generators(
        fam.dimension,
        parse_vector_list(expect_key(jc[i], "generators", path), path + ".generators",
                          fam.dimension)));
  }
  return fam;
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  return j;
}

inline void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << j.dump(2) << "\n";
}

}  // namespace polyopt::io
