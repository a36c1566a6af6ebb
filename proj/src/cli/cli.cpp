#include "su3holo/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <mutex>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "su3holo/berry_curvature.hpp"
#include "su3holo/degeneracy_limits.hpp"
#include "su3holo/errors.hpp"
#include "su3holo/holonomy.hpp"
#include "su3holo/selfcheck.hpp"
#include "su3holo/spectrum.hpp"
#include "su3holo/su3_algebra.hpp"
#include "su3holo/tensor_decomposition.hpp"

namespace su3holo::cli {

namespace {

using nlohmann::json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// ---- descriptor field access ----------------------------------------------

const json& field(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object() || !j.contains(key)) throw UsageError("missing field '" + path + "'");
  return j.at(key);
}

double as_number(const json& j, const std::string& path) {
  if (!j.is_number()) throw UsageError("field '" + path + "' must be a number");
  return j.get<double>();
}

int as_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw UsageError("field '" + path + "' must be an integer");
  return j.get<int>();
}

Octet as_octet(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 8) throw UsageError("field '" + path + "' must be 8 numbers");
  Octet xi;
  for (int r = 0; r < 8; ++r) xi(r) = as_number(j[r], path + "[" + std::to_string(r) + "]");
  return xi;
}

std::pair<double, double> as_pair(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) throw UsageError("field '" + path + "' must be 2 numbers");
  return {as_number(j[0], path + "[0]"), as_number(j[1], path + "[1]")};
}

double number_or(const json& j, const std::string& key, double fallback, const std::string& path) {
  if (!j.is_object() || !j.contains(key)) return fallback;
  return as_number(j.at(key), path);
}

int int_or(const json& j, const std::string& key, int fallback, const std::string& path) {
  if (!j.is_object() || !j.contains(key)) return fallback;
  return as_int(j.at(key), path);
}

struct Settings {
  double classify_tol = kDefaultTolerance;
  double quadrature_tol = 1e-4;
  std::string format = "json";
  std::string path = "-";
};

Settings settings_of(const json& d, const std::string& default_format) {
  Settings s;
  s.format = default_format;
  if (d.contains("tolerances")) {
    const json& t = d.at("tolerances");
    s.classify_tol = number_or(t, "classify", s.classify_tol, "tolerances.classify");
    s.quadrature_tol = number_or(t, "quadrature", s.quadrature_tol, "tolerances.quadrature");
    if (!(s.classify_tol > 0.0)) throw UsageError("field 'tolerances.classify' must be positive");
    if (!(s.quadrature_tol > 0.0)) throw UsageError("field 'tolerances.quadrature' must be positive");
  }
  if (d.contains("output")) {
    const json& o = d.at("output");
    if (o.contains("format")) {
      if (!o.at("format").is_string()) throw UsageError("field 'output.format' must be a string");
      s.format = o.at("format").get<std::string>();
      if (s.format != "json" && s.format != "csv") {
        throw UsageError("field 'output.format' must be json or csv");
      }
    }
    if (o.contains("path")) {
      if (!o.at("path").is_string()) throw UsageError("field 'output.path' must be a string");
      s.path = o.at("path").get<std::string>();
    }
  }
  return s;
}

std::string generator_type(const json& d) {
  const json& g = field(d, "generator", "generator");
  const json& t = field(g, "type", "generator.type");
  if (!t.is_string()) throw UsageError("field 'generator.type' must be a string");
  return t.get<std::string>();
}

/// Single point from "xi" or a rest_frame generator.
Octet point_of(const json& d) {
  if (d.contains("xi")) return as_octet(d.at("xi"), "xi");
  if (!d.contains("generator")) throw UsageError("missing field 'xi'");
  const std::string type = generator_type(d);
  if (type != "rest_frame") throw UsageError("field 'generator.type' must be rest_frame here");
  const json& g = d.at("generator");
  const double e12 = as_number(field(g, "e12", "generator.e12"), "generator.e12");
  const double e23 = as_number(field(g, "e23", "generator.e23"), "generator.e23");
  if (e12 < 0.0 || e23 < 0.0) throw UsageError("field 'generator.e12/e23' must be nonnegative");
  return rest_frame_from_gaps(e12, e23);
}

/// 1..3, or 0 for "all".
int level_of(const json& d, int fallback) {
  if (!d.contains("level")) return fallback;
  const json& l = d.at("level");
  if (l.is_string() && l.get<std::string>() == "all") return 0;
  const int a = as_int(l, "level");
  if (a < 1 || a > 3) throw UsageError("field 'level' must be 1, 2, 3 or \"all\"");
  return a;
}

Level single_level(const json& d) {
  const int a = level_of(d, 1);
  if (a == 0) throw UsageError("field 'level' must be 1, 2 or 3 for this command");
  return level_from_int(a);
}

// ---- output helpers --------------------------------------------------------

json octet_json(const Octet& xi) {
  json a = json::array();
  for (int r = 0; r < 8; ++r) a.push_back(xi(r));
  return a;
}

json matrix_json(const Matrix8& m) {
  json a = json::array();
  for (int r = 0; r < 8; ++r) {
    json row = json::array();
    for (int s = 0; s < 8; ++s) row.push_back(m(r, s));
    a.push_back(row);
  }
  return a;
}

json complex_matrix_json(const Matrix3c& m) {
  json re = json::array(), im = json::array();
  for (int i = 0; i < 3; ++i) {
    json rr = json::array(), ri = json::array();
    for (int j = 0; j < 3; ++j) {
      rr.push_back(m(i, j).real());
      ri.push_back(m(i, j).imag());
    }
    re.push_back(rr);
    im.push_back(ri);
  }
  return {{"re", re}, {"im", im}};
}

json three_index_json(const ThreeIndex& t) {
  json re = json::array(), im = json::array();
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      for (int c = 0; c < 3; ++c) {
        re.push_back(t(a, b, c).real());
        im.push_back(t(a, b, c).imag());
      }
    }
  }
  return {{"re", re}, {"im", im}};
}

json spectral_json(const SpectralData& s) {
  json j;
  j["class"] = std::string(to_string(s.degeneracy));
  j["phi"] = s.phi ? json(*s.phi) : json(nullptr);
  j["energies"] = {s.energies[0], s.energies[1], s.energies[2]};
  j["gaps"] = {{"e12", s.e12}, {"e23", s.e23}, {"e13", s.e13}};
  return j;
}

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// ---- commands --------------------------------------------------------------

json header(const json& d) {
  return {{"schema", kSchema}, {"command", d.at("command")}};
}

json cmd_classify(const json& d, const Settings& s) {
  const Octet xi = point_of(d);
  json out = header(d);
  out["xi"] = octet_json(xi);
  out.update(spectral_json(eigenvalues(xi, s.classify_tol)));
  return out;
}

json cmd_spectrum(const json& d, const Settings& s) {
  const Octet xi = point_of(d);
  const Invariants inv = invariants(xi);
  json out = header(d);
  out["xi"] = octet_json(xi);
  out.update(spectral_json(eigenvalues(xi, s.classify_tol)));
  out["invariants"] = {{"quadratic", inv.quadratic}, {"cubic", inv.cubic}};
  out["rest_frame"] = octet_json(rest_frame(xi));
  out["frame"] = complex_matrix_json(orbit_frame(xi, s.classify_tol).matrix());
  return out;
}

json cmd_curvature(const json& d, const Settings& s) {
  const Octet xi = point_of(d);
  const Level a = single_level(d);
  std::string route = "spectral";
  if (d.contains("route")) {
    if (!d.at("route").is_string()) throw UsageError("field 'route' must be a string");
    route = d.at("route").get<std::string>();
  }
  if (route != "spectral" && route != "transported" && route != "parts" && route != "all") {
    throw UsageError("field 'route' must be spectral, transported, parts or all");
  }
  std::vector<std::pair<std::string, Matrix8>> results;
  if (route == "spectral" || route == "all") {
    results.emplace_back("spectral", curvature_spectral(xi, a, s.classify_tol).coefficients);
  }
  if (route == "transported" || route == "all") {
    results.emplace_back("transported", curvature_transported(xi, a, s.classify_tol).coefficients);
  }
  if (route == "parts" || route == "all") {
    results.emplace_back("parts", curvature_from_parts(xi, a, s.classify_tol).coefficients);
  }
  json out = header(d);
  out["xi"] = octet_json(xi);
  out["level"] = static_cast<int>(a);
  json routes = json::object();
  for (const auto& [name, m] : results) routes[name] = matrix_json(m);
  out["routes"] = routes;
  if (results.size() > 1) {
    double worst = 0.0;
    for (std::size_t i = 0; i < results.size(); ++i) {
      for (std::size_t k = i + 1; k < results.size(); ++k) {
        worst = std::max(worst, (results[i].second - results[k].second).cwiseAbs().maxCoeff());
      }
    }
    out["max_pairwise_deviation"] = worst;
  }
  return out;
}

json cmd_decompose(const json& d, const Settings& s) {
  const Octet xi = point_of(d);
  const Level a = single_level(d);
  const Matrix8 v = curvature_spectral(xi, a, s.classify_tol).coefficients;
  const AntisymTensor tensor(v);
  const IrreducibleParts parts = project_irreducible(tensor);
  const Matrix8 back = from_tensor_components(reconstitute(parts));
  const CurvatureParts split = curvature_parts(xi, a, s.classify_tol);
  const SpectralData spec = eigenvalues(xi, s.classify_tol);
  const OctetCoefficients k = octet_coefficients(a, rest_frame_from_gaps(spec.e12, spec.e23));

  json out = header(d);
  out["xi"] = octet_json(xi);
  out["level"] = static_cast<int>(a);
  out["curvature"] = matrix_json(v);
  out["w"] = three_index_json(parts.w);
  out["w_bar"] = three_index_json(parts.w_bar);
  out["x"] = octet_json(parts.x);
  out["octet_part"] = matrix_json(split.octet);
  out["decouplet_part"] = matrix_json(split.decouplet);
  out["octet_coefficients"] = {{"lambda", k.lambda}, {"mu", k.mu}, {"prefactor", k.prefactor}};
  out["decouplet_weight"] = decouplet_weight(a, spec);
  out["round_trip_error"] = (back - v).cwiseAbs().maxCoeff();
  return out;
}

LoopPath loop_of(const json& d, double tol) {
  const std::string type = generator_type(d);
  const json& g = d.at("generator");
  if (type == "circle") {
    const Octet center = as_octet(field(g, "center", "generator.center"), "generator.center");
    const json& axes = field(g, "axes", "generator.axes");
    if (!axes.is_array() || axes.size() != 2) throw UsageError("field 'generator.axes' must hold two 8-vectors");
    const Octet u = as_octet(axes[0], "generator.axes[0]");
    const Octet w = as_octet(axes[1], "generator.axes[1]");
    const double radius = as_number(field(g, "radius", "generator.radius"), "generator.radius");
    const int samples = int_or(g, "samples", 2000, "generator.samples");
    if (samples < 3) throw UsageError("field 'generator.samples' must be at least 3");
    return circle(center, u, w, radius, samples, tol);
  }
  if (type == "points") {
    const json& pts = field(g, "points", "generator.points");
    if (!pts.is_array() || pts.empty()) throw UsageError("field 'generator.points' must be a nonempty array");
    std::vector<Octet> samples;
    for (std::size_t k = 0; k < pts.size(); ++k) {
      samples.push_back(as_octet(pts[k], "generator.points[" + std::to_string(k) + "]"));
    }
    return LoopPath(std::move(samples), tol);
  }
  throw UsageError("field 'generator.type' must be circle or points for loop-phase");
}

json cmd_loop_phase(const json& d, const Settings& s) {
  const LoopPath path = loop_of(d, s.classify_tol);
  const int level = level_of(d, 0);
  json out = header(d);
  out["samples"] = path.size();
  if (level == 0) {
    const PhaseSumRule rule = phase_sum_rule_check(path, s.classify_tol);
    out["level"] = "all";
    out["phases"] = {rule.phases[0], rule.phases[1], rule.phases[2]};
    out["phase_sum"] = rule.sum;
  } else {
    out["level"] = level;
    out["phase"] = loop_phase(path, level_from_int(level), s.classify_tol);
  }
  return out;
}

std::array<Octet, 3> frame_of(const json& g) {
  const json& f = field(g, "frame", "generator.frame");
  if (!f.is_array() || f.size() != 3) throw UsageError("field 'generator.frame' must hold three 8-vectors");
  std::array<Octet, 3> frame;
  for (int k = 0; k < 3; ++k) frame[k] = as_octet(f[k], "generator.frame[" + std::to_string(k) + "]");
  return frame;
}

json cmd_surface_flux(const json& d, const Settings& s) {
  if (generator_type(d) != "sphere_patch") {
    throw UsageError("field 'generator.type' must be sphere_patch for surface-flux");
  }
  const json& g = d.at("generator");
  const Octet center = as_octet(field(g, "center", "generator.center"), "generator.center");
  const std::array<Octet, 3> frame = frame_of(g);
  const double radius = as_number(field(g, "radius", "generator.radius"), "generator.radius");
  auto [t0, t1] = std::pair{0.0, std::numbers::pi / 4};
  if (g.contains("theta_range")) std::tie(t0, t1) = as_pair(g.at("theta_range"), "generator.theta_range");
  int nu = 100, nv = 100;
  if (g.contains("grid")) {
    const json& grid = g.at("grid");
    if (!grid.is_array() || grid.size() != 2) throw UsageError("field 'generator.grid' must be 2 integers");
    nu = as_int(grid[0], "generator.grid[0]");
    nv = as_int(grid[1], "generator.grid[1]");
  }
  const int order = int_or(d, "order", 2, "order");
  const int threads = int_or(d, "threads", 0, "threads");
  const int refine = int_or(d, "refine", 4, "refine");
  if (order < 1) throw UsageError("field 'order' must be positive");
  if (threads < 0) throw UsageError("field 'threads' must be nonnegative");
  if (refine < 1) throw UsageError("field 'refine' must be positive");
  const Level a = single_level(d);

  const SurfacePatch patch = sphere_patch(center, frame, radius, t0, t1, nu, nv, s.classify_tol);
  json out = header(d);
  out["level"] = static_cast<int>(a);
  out["flux"] = surface_flux(patch, a, order, static_cast<unsigned>(threads), s.classify_tol);
  out["boundary_phase"] = loop_phase(patch.boundary(refine), a, s.classify_tol);
  return out;
}

json cmd_monopole(const json& d, const Settings& s) {
  Octet direction = unit_octet(8);
  double radius = 1e-3;
  if (d.contains("generator")) {
    if (generator_type(d) != "sphere") throw UsageError("field 'generator.type' must be sphere for monopole");
    const json& g = d.at("generator");
    if (g.contains("direction")) direction = as_octet(g.at("direction"), "generator.direction");
    radius = number_or(g, "radius", radius, "generator.radius");
  }
  const int level = level_of(d, 0);
  json out = header(d);
  out["direction"] = octet_json(direction);
  out["radius"] = radius;
  if (level == 0) {
    json fluxes = json::array();
    for (Level a : kLevels) fluxes.push_back(monopole_flux(direction, radius, a, s.quadrature_tol));
    out["level"] = "all";
    out["fluxes"] = fluxes;
  } else {
    out["level"] = level;
    out["flux"] = monopole_flux(direction, radius, level_from_int(level), s.quadrature_tol);
  }
  return out;
}

std::vector<Octet> sweep_points(const json& d) {
  const std::string type = generator_type(d);
  const json& g = d.at("generator");
  std::vector<Octet> pts;
  if (type == "random") {
    const int count = as_int(field(g, "count", "generator.count"), "generator.count");
    if (count < 0) throw UsageError("field 'generator.count' must be nonnegative");
    const auto seed = static_cast<std::uint64_t>(int_or(g, "seed", 1, "generator.seed"));
    auto [lo, hi] = std::pair{0.0, 0.0};
    if (g.contains("log10_scale")) std::tie(lo, hi) = as_pair(g.at("log10_scale"), "generator.log10_scale");
    if (hi < lo) throw UsageError("field 'generator.log10_scale' must be ordered");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::uniform_real_distribution<double> scale(lo, hi);
    for (int k = 0; k < count; ++k) {
      Octet xi;
      for (int r = 0; r < 8; ++r) xi(r) = normal(rng);
      pts.push_back(xi / xi.norm() * std::pow(10.0, lo == hi ? lo : scale(rng)));
    }
  } else if (type == "line") {
    const Octet from = as_octet(field(g, "from", "generator.from"), "generator.from");
    const Octet to = as_octet(field(g, "to", "generator.to"), "generator.to");
    const int count = as_int(field(g, "count", "generator.count"), "generator.count");
    if (count < 2) throw UsageError("field 'generator.count' must be at least 2");
    for (int k = 0; k < count; ++k) pts.push_back(from + (to - from) * (double(k) / (count - 1)));
  } else if (type == "rest_frame") {
    const json& pairs = field(g, "pairs", "generator.pairs");
    if (!pairs.is_array()) throw UsageError("field 'generator.pairs' must be an array");
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      const auto [e12, e23] = as_pair(pairs[k], "generator.pairs[" + std::to_string(k) + "]");
      pts.push_back(rest_frame_from_gaps(e12, e23));
    }
  } else if (type == "points") {
    const json& list = field(g, "points", "generator.points");
    if (!list.is_array()) throw UsageError("field 'generator.points' must be an array");
    for (std::size_t k = 0; k < list.size(); ++k) {
      pts.push_back(as_octet(list[k], "generator.points[" + std::to_string(k) + "]"));
    }
  } else {
    throw UsageError("field 'generator.type' must be random, line, rest_frame or points for sweep");
  }
  return pts;
}

struct SweepRow {
  SpectralData spec;
  std::array<double, 3> curvature_max{};
};

json cmd_sweep(const json& d, const Settings& s, std::string& csv) {
  const std::vector<Octet> pts = sweep_points(d);
  int threads = int_or(d, "threads", 0, "threads");
  if (threads < 0) throw UsageError("field 'threads' must be nonnegative");
  if (threads == 0) threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

  std::vector<SweepRow> rows(pts.size());
  auto work = [&](std::size_t k) {
    SweepRow& row = rows[k];
    row.spec = eigenvalues(pts[k], s.classify_tol);
    if (row.spec.degeneracy == DegeneracyClass::Generic) {
      for (Level a : kLevels) {
        row.curvature_max[index(a)] =
            curvature_spectral(pts[k], a, s.classify_tol).coefficients.cwiseAbs().maxCoeff();
      }
    }
  };
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    const auto n = static_cast<std::size_t>(threads);
    for (std::size_t t = 0; t < n; ++t) {
      pool.emplace_back([&, t] {
        try {
          for (std::size_t k = t; k < pts.size(); k += n) work(k);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);

  if (s.format == "csv") {
    std::ostringstream os;
    const auto& cols = sweep_columns();
    for (std::size_t c = 0; c < cols.size(); ++c) os << (c ? "," : "") << cols[c];
    os << '\n';
    for (std::size_t k = 0; k < pts.size(); ++k) {
      const SweepRow& row = rows[k];
      const bool generic = row.spec.degeneracy == DegeneracyClass::Generic;
      os << k;
      for (int r = 0; r < 8; ++r) os << ',' << fmt(pts[k](r));
      os << ',' << to_string(row.spec.degeneracy) << ',' << (row.spec.phi ? fmt(*row.spec.phi) : "");
      for (double e : row.spec.energies) os << ',' << fmt(e);
      os << ',' << fmt(row.spec.e12) << ',' << fmt(row.spec.e23) << ',' << fmt(row.spec.e13);
      for (double v : row.curvature_max) os << ',' << (generic ? fmt(v) : "");
      os << '\n';
    }
    csv = os.str();
    return nullptr;
  }
  json out = header(d);
  json list = json::array();
  for (std::size_t k = 0; k < pts.size(); ++k) {
    json r = spectral_json(rows[k].spec);
    r["xi"] = octet_json(pts[k]);
    if (rows[k].spec.degeneracy == DegeneracyClass::Generic) {
      r["curvature_max"] = {rows[k].curvature_max[0], rows[k].curvature_max[1], rows[k].curvature_max[2]};
    } else {
      r["curvature_max"] = nullptr;
    }
    list.push_back(r);
  }
  out["points"] = list;
  return out;
}

json cmd_selfcheck(const json& d, bool& all_passed) {
  const auto seed = static_cast<std::uint64_t>(int_or(d, "seed", 1, "seed"));
  const int samples = int_or(d, "samples", 100, "samples");
  if (samples < 1) throw UsageError("field 'samples' must be positive");
  const std::vector<CheckResult> results = run_selfcheck(seed, samples);
  json out = header(d);
  json checks = json::array();
  int passed = 0;
  for (const CheckResult& r : results) {
    checks.push_back({{"name", r.name}, {"passed", r.passed}, {"error", r.error}, {"threshold", r.threshold}});
    passed += r.passed ? 1 : 0;
  }
  out["checks"] = checks;
  out["passed"] = passed;
  out["failed"] = static_cast<int>(results.size()) - passed;
  all_passed = passed == static_cast<int>(results.size());
  return out;
}

int execute(const json& d, std::ostream& out) {
  if (!d.is_object()) throw UsageError("descriptor must be a JSON object");
  const json& schema = field(d, "schema", "schema");
  if (!schema.is_string() || schema.get<std::string>() != kSchema) {
    throw UsageError(std::string("field 'schema' must be \"") + kSchema + "\"");
  }
  const json& cmd = field(d, "command", "command");
  if (!cmd.is_string()) throw UsageError("field 'command' must be a string");
  const std::string command = cmd.get<std::string>();

  const Settings s = settings_of(d, command == "sweep" ? "csv" : "json");
  if (s.format == "csv" && command != "sweep") {
    throw UsageError("field 'output.format' csv is only available for sweep");
  }
  json result;
  std::string csv;
  bool ok = true;
  if (command == "classify") result = cmd_classify(d, s);
  else if (command == "spectrum") result = cmd_spectrum(d, s);
  else if (command == "curvature") result = cmd_curvature(d, s);
  else if (command == "decompose") result = cmd_decompose(d, s);
  else if (command == "loop-phase") result = cmd_loop_phase(d, s);
  else if (command == "surface-flux") result = cmd_surface_flux(d, s);
  else if (command == "monopole") result = cmd_monopole(d, s);
  else if (command == "sweep") result = cmd_sweep(d, s, csv);
  else if (command == "selfcheck") result = cmd_selfcheck(d, ok);
  else throw UsageError("field 'command' names unknown command '" + command + "'");

  const std::string text = csv.empty() ? result.dump(2) + "\n" : csv;
  if (s.path == "-") {
    out << text;
  } else {
    std::ofstream file(s.path);
    if (!file) throw UsageError("cannot open output path '" + s.path + "'");
    file << text;
  }
  return ok ? kSuccess : kUsageError;
}

// ---- flag front end --------------------------------------------------------

Octet parse_octet(const std::string& text, const std::string& flag) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(flag + ": cannot parse '" + item + "' as a number");
    }
  }
  if (values.size() != 8) throw UsageError(flag + " needs 8 comma-separated numbers");
  return Eigen::Map<const Octet>(values.data());
}

std::pair<double, double> parse_pair(const std::string& text, const std::string& flag) {
  double a = 0.0, b = 0.0;
  char comma = 0;
  std::istringstream is(text);
  if (!(is >> a >> comma >> b) || comma != ',' || !(is >> std::ws).eof()) {
    throw UsageError(flag + " needs two comma-separated numbers");
  }
  return {a, b};
}

struct Flags {
  std::string xi, rest, level, route = "spectral";
  std::string center, axis_u, axis_w, direction, theta_range, grid, scale_range, from, to;
  std::vector<std::string> frame;
  double radius = 0.0;
  int samples = 0, order = 2, threads = 0, count = 0, refine = 4;
  std::int64_t seed = 1;
  double tol = kDefaultTolerance, quad_tol = 1e-4;
  std::string output = "-", format;
};

json level_json(const std::string& level) {
  if (level == "all") return "all";
  try {
    std::size_t used = 0;
    const int a = std::stoi(level, &used);
    if (used == level.size()) return a;
  } catch (const std::exception&) {
  }
  throw UsageError("--level must be 1, 2, 3 or all");
}

json descriptor_from_flags(const std::string& command, const Flags& f, const CLI::App& sub) {
  json d = {{"schema", kSchema}, {"command", command}};
  d["tolerances"] = {{"classify", f.tol}, {"quadrature", f.quad_tol}};
  d["output"] = {{"path", f.output}};
  if (!f.format.empty()) d["output"]["format"] = f.format;
  auto given = [&](const char* name) {
    const CLI::Option* opt = sub.get_option_no_throw(name);
    return opt != nullptr && opt->count() > 0;
  };

  if (given("--xi")) d["xi"] = octet_json(parse_octet(f.xi, "--xi"));
  if (given("--rest-frame")) {
    const auto [e12, e23] = parse_pair(f.rest, "--rest-frame");
    d["generator"] = {{"type", "rest_frame"}, {"e12", e12}, {"e23", e23}};
  }
  if (given("--level")) d["level"] = level_json(f.level);
  if (given("--route")) d["route"] = f.route;
  if (given("--threads")) d["threads"] = f.threads;
  if (given("--order")) d["order"] = f.order;
  if (given("--refine")) d["refine"] = f.refine;

  if (command == "loop-phase") {
    d["generator"] = {{"type", "circle"},
                      {"center", octet_json(parse_octet(f.center, "--center"))},
                      {"axes", {octet_json(parse_octet(f.axis_u, "--axis-u")),
                                octet_json(parse_octet(f.axis_w, "--axis-w"))}},
                      {"radius", f.radius}};
    if (given("--samples")) d["generator"]["samples"] = f.samples;
  } else if (command == "surface-flux") {
    json frame = json::array();
    for (const std::string& v : f.frame) frame.push_back(octet_json(parse_octet(v, "--frame")));
    d["generator"] = {{"type", "sphere_patch"},
                      {"center", octet_json(parse_octet(f.center, "--center"))},
                      {"frame", frame},
                      {"radius", f.radius}};
    if (given("--theta-range")) {
      const auto [t0, t1] = parse_pair(f.theta_range, "--theta-range");
      d["generator"]["theta_range"] = {t0, t1};
    }
    if (given("--grid")) {
      const auto [nu, nv] = parse_pair(f.grid, "--grid");
      d["generator"]["grid"] = {static_cast<int>(nu), static_cast<int>(nv)};
    }
  } else if (command == "monopole") {
    d["generator"] = {{"type", "sphere"}};
    if (given("--direction")) d["generator"]["direction"] = octet_json(parse_octet(f.direction, "--direction"));
    if (given("--radius")) d["generator"]["radius"] = f.radius;
  } else if (command == "sweep") {
    if (given("--from") || given("--to")) {
      d["generator"] = {{"type", "line"},
                        {"from", octet_json(parse_octet(f.from, "--from"))},
                        {"to", octet_json(parse_octet(f.to, "--to"))},
                        {"count", f.count}};
    } else {
      d["generator"] = {{"type", "random"}, {"count", f.count}, {"seed", f.seed}};
      if (given("--scale-range")) {
        const auto [lo, hi] = parse_pair(f.scale_range, "--scale-range");
        d["generator"]["log10_scale"] = {lo, hi};
      }
    }
  } else if (command == "selfcheck") {
    d["seed"] = f.seed;
    if (given("--samples")) d["samples"] = f.samples;
  }
  return d;
}

}  // namespace

const std::vector<std::string>& sweep_columns() {
  static const std::vector<std::string> cols{
      "index", "xi1", "xi2", "xi3", "xi4", "xi5", "xi6", "xi7", "xi8", "class", "phi", "e1", "e2",
      "e3", "e12", "e23", "e13", "curvature_max_1", "curvature_max_2", "curvature_max_3"};
  return cols;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Geometric phases and curvature of three-level Hermitian Hamiltonians", "su3holo"};
  std::string descriptor_path;
  app.add_option("--descriptor", descriptor_path, "JSON job descriptor (schema su3holo/1)");
  app.require_subcommand(0, 1);

  Flags f;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--tol", f.tol, "relative classification tolerance")->check(CLI::PositiveNumber);
    sub->add_option("-o,--output", f.output, "output path, - for stdout");
  };
  auto point = [&](CLI::App* sub) {
    auto* xi = sub->add_option("--xi", f.xi, "octet vector, 8 comma-separated reals");
    auto* rest = sub->add_option("--rest-frame", f.rest, "rest-frame point from gaps e12,e23");
    xi->excludes(rest);
    rest->excludes(xi);
  };

  auto* classify_cmd = app.add_subcommand("classify", "degeneracy class, phase angle and gaps");
  point(classify_cmd);
  common(classify_cmd);

  auto* spectrum_cmd = app.add_subcommand("spectrum", "energies, invariants, rest frame and frame");
  point(spectrum_cmd);
  common(spectrum_cmd);

  auto* curvature_cmd = app.add_subcommand("curvature", "curvature two-form V^(a)");
  point(curvature_cmd);
  curvature_cmd->add_option("--level", f.level, "level 1, 2 or 3");
  curvature_cmd->add_option("--route", f.route, "spectral, transported, parts or all")
      ->check(CLI::IsMember({"spectral", "transported", "parts", "all"}));
  common(curvature_cmd);

  auto* decompose_cmd = app.add_subcommand("decompose", "irreducible parts of V^(a)");
  point(decompose_cmd);
  decompose_cmd->add_option("--level", f.level, "level 1, 2 or 3");
  common(decompose_cmd);

  auto* loop_cmd = app.add_subcommand("loop-phase", "discrete geometric phase of a circle");
  loop_cmd->add_option("--center", f.center, "circle center")->required();
  loop_cmd->add_option("--axis-u", f.axis_u, "first orthonormal axis")->required();
  loop_cmd->add_option("--axis-w", f.axis_w, "second orthonormal axis")->required();
  loop_cmd->add_option("--radius", f.radius, "circle radius")->required();
  loop_cmd->add_option("--samples", f.samples, "number of samples (default 2000)");
  loop_cmd->add_option("--level", f.level, "level 1, 2, 3 or all (default all)");
  common(loop_cmd);

  auto* surface_cmd = app.add_subcommand("surface-flux", "curvature flux through a spherical patch");
  surface_cmd->add_option("--center", f.center, "sphere center")->required();
  surface_cmd->add_option("--frame", f.frame, "three orthonormal directions")->expected(3)->required();
  surface_cmd->add_option("--radius", f.radius, "sphere radius")->required();
  surface_cmd->add_option("--theta-range", f.theta_range, "polar range t0,t1 (default 0,pi/4)");
  surface_cmd->add_option("--grid", f.grid, "grid nu,nv (default 100,100)");
  surface_cmd->add_option("--order", f.order, "Gauss-Legendre points per cell and axis");
  surface_cmd->add_option("--refine", f.refine, "boundary samples per grid edge");
  surface_cmd->add_option("--threads", f.threads, "worker threads, 0 = all cores");
  surface_cmd->add_option("--level", f.level, "level 1, 2 or 3");
  common(surface_cmd);

  auto* monopole_cmd = app.add_subcommand("monopole", "flux through a small sphere around the upper cone");
  monopole_cmd->add_option("--direction", f.direction, "unit octet with cubic = -1 (default e8)");
  monopole_cmd->add_option("--radius", f.radius, "sphere radius (default 1e-3)");
  monopole_cmd->add_option("--level", f.level, "level 1, 2, 3 or all (default all)");
  monopole_cmd->add_option("--quad-tol", f.quad_tol, "relative quadrature tolerance");
  common(monopole_cmd);

  auto* sweep_cmd = app.add_subcommand("sweep", "spectral data and curvature size over a point set");
  sweep_cmd->add_option("--count", f.count, "number of points")->required();
  sweep_cmd->add_option("--seed", f.seed, "random seed");
  sweep_cmd->add_option("--scale-range", f.scale_range, "log10 |xi| range lo,hi (default 0,0)");
  sweep_cmd->add_option("--from", f.from, "line start (with --to)");
  sweep_cmd->add_option("--to", f.to, "line end (with --from)");
  sweep_cmd->add_option("--threads", f.threads, "worker threads, 0 = all cores");
  sweep_cmd->add_option("--format", f.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  common(sweep_cmd);

  auto* selfcheck_cmd = app.add_subcommand("selfcheck", "run the built-in invariant suite");
  selfcheck_cmd->add_option("--seed", f.seed, "random seed");
  selfcheck_cmd->add_option("--samples", f.samples, "random points per check");
  common(selfcheck_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    json descriptor;
    if (!descriptor_path.empty()) {
      std::ifstream file(descriptor_path);
      if (!file) throw UsageError("cannot read descriptor '" + descriptor_path + "'");
      try {
        descriptor = json::parse(file);
      } catch (const json::parse_error& e) {
        throw UsageError(std::string("descriptor is not valid JSON: ") + e.what());
      }
    } else {
      const auto subs = app.get_subcommands();
      if (subs.empty()) {
        err << app.help();
        return kUsageError;
      }
      descriptor = descriptor_from_flags(subs.front()->get_name(), f, *subs.front());
    }
    return execute(descriptor, out);
  } catch (const DegenerateInput& e) {
    err << "degenerate input: " << e.what() << '\n';
    return kDegenerateInput;
  } catch (const UnderResolvedPath& e) {
    err << "under-resolved path: " << e.what() << '\n';
    return kDegenerateInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace su3holo::cli
