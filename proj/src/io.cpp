#include "liedec/io.hpp"

#include "liedec/cartan.hpp"
#include "liedec/repr.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace liedec::io {

namespace {

constexpr double kSpecHermTol = 1e-8;

double number(const Json& j, const std::string& what) {
  if (!j.is_number()) throw SpecError(what + ": expected a number");
  return j.get<double>();
}

Json vector_to_json(const RVector& v) {
  Json out = Json::array();
  for (Index k = 0; k < v.size(); ++k) out.push_back(v[k]);
  return out;
}

}  // namespace

Json matrix_to_json(const CMatrix& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

CMatrix matrix_from_json(const Json& j, const std::string& what) {
  if (!j.is_array() || j.empty()) throw SpecError(what + ": expected a non-empty list of rows");
  const Index n = static_cast<Index>(j.size());
  CMatrix m(n, n);
  for (Index r = 0; r < n; ++r) {
    const Json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Index>(row.size()) != n) {
      throw SpecError(what + ": row " + std::to_string(r) + " does not have " + std::to_string(n) +
                      " entries");
    }
    for (Index c = 0; c < n; ++c) {
      const Json& z = row[static_cast<std::size_t>(c)];
      const std::string where = what + "[" + std::to_string(r) + "][" + std::to_string(c) + "]";
      if (z.is_number()) {
        m(r, c) = Complex(z.get<double>(), 0.0);
      } else if (z.is_array() && z.size() == 2) {
        m(r, c) = Complex(number(z[0], where), number(z[1], where));
      } else {
        throw SpecError(where + ": expected [re, im]");
      }
    }
  }
  if (!m.allFinite()) throw SpecError(what + ": non-finite entries");
  return m;
}

namespace {

CMatrix hermitian_from_json(const Json& j, Index n, const std::string& what) {
  CMatrix m = matrix_from_json(j, what);
  if (m.rows() != n) {
    throw SpecError(what + ": expected " + std::to_string(n) + "x" + std::to_string(n));
  }
  if ((m - m.adjoint()).norm() > kSpecHermTol * std::max(1.0, m.norm())) {
    throw SpecError(what + ": matrix is not Hermitian");
  }
  return 0.5 * (m + m.adjoint());
}

}  // namespace

ControlSystem parse_system_spec(const Json& j) {
  if (!j.is_object()) throw SpecError("system spec: expected a JSON object");
  if (j.contains("model")) {
    if (!j["model"].is_string()) throw SpecError("system spec: model must be a string");
    const std::string model = j["model"].get<std::string>();
    if (model == "two-spin") return two_spin_system();
    throw SpecError("system spec: unknown model '" + model + "'");
  }
  if (!j.contains("dim") || !j["dim"].is_number_integer() || j["dim"].get<long>() <= 0) {
    throw SpecError("system spec: positive integer 'dim' required");
  }
  const Index n = j["dim"].get<Index>();
  if (!j.contains("drift")) throw SpecError("system spec: 'drift' required");
  CMatrix drift = hermitian_from_json(j["drift"], n, "drift");
  std::vector<CMatrix> controls;
  if (j.contains("controls")) {
    if (!j["controls"].is_array()) throw SpecError("system spec: 'controls' must be a list");
    for (std::size_t k = 0; k < j["controls"].size(); ++k) {
      controls.push_back(hermitian_from_json(j["controls"][k], n, "controls[" + std::to_string(k) + "]"));
    }
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j["labels"].is_array()) throw SpecError("system spec: 'labels' must be a list");
    for (const auto& l : j["labels"]) {
      if (!l.is_string()) throw SpecError("system spec: labels must be strings");
      labels.push_back(l.get<std::string>());
    }
    if (labels.size() != controls.size()) {
      throw SpecError("system spec: one label per control required");
    }
  }
  return ControlSystem(std::move(drift), std::move(controls), std::move(labels));
}

Json system_spec_to_json(const ControlSystem& system) {
  Json controls = Json::array();
  for (const auto& c : system.controls()) controls.push_back(matrix_to_json(c));
  return Json{{"dim", system.dim()},
              {"drift", matrix_to_json(system.drift())},
              {"controls", controls},
              {"labels", system.labels()}};
}

ControlSchedule parse_schedule(const Json& j, std::size_t num_controls) {
  if (!j.is_object() || !j.contains("segments") || !j["segments"].is_array()) {
    throw SpecError("schedule: expected {\"segments\": [...]}");
  }
  std::vector<ControlSchedule::Segment> segs;
  for (std::size_t k = 0; k < j["segments"].size(); ++k) {
    const Json& s = j["segments"][k];
    const std::string where = "schedule segment " + std::to_string(k);
    if (!s.is_object() || !s.contains("duration") || !s.contains("u") || !s["u"].is_array()) {
      throw SpecError(where + ": needs 'duration' and 'u'");
    }
    const double dt = number(s["duration"], where + " duration");
    if (!(dt > 0.0) || !std::isfinite(dt)) throw SpecError(where + ": duration must be positive");
    std::vector<double> u;
    for (const auto& x : s["u"]) u.push_back(number(x, where + " u"));
    if (u.size() != num_controls) {
      throw SpecError(where + ": has " + std::to_string(u.size()) + " control values, system has " +
                      std::to_string(num_controls));
    }
    segs.push_back({dt, std::move(u)});
  }
  return ControlSchedule(std::move(segs));
}

Json schedule_to_json(const ControlSchedule& schedule) {
  Json segs = Json::array();
  for (const auto& s : schedule.segments()) segs.push_back(Json{{"duration", s.duration}, {"u", s.u}});
  return Json{{"segments", segs}};
}

// ---------------------------------------------------------------------------

Json structure_report(const ComponentDecomposition& decomp, const Tolerances& tol) {
  const Analysis& an = decomp.analysis;
  const LieBasis& l = an.closure.basis;
  const LieBasis& s = an.levi.semisimple;
  const LieBasis& r = an.levi.radical;

  Json residuals;
  residuals["closure"] = closure_residual(l);
  residuals["radical_central"] = max_bracket_norm(r, l);
  residuals["semisimple_closure"] = closure_residual(s);

  Json report;
  report["ambient_dim"] = l.ambient_dim();
  report["algebra_dim"] = l.size();
  report["closure_depth"] = an.closure.depth_reached;
  report["verdict"] = std::string(to_string(is_controllable(an.closure)));
  report["radical_dim"] = r.size();
  report["radical_lines"] = an.levi.radical_lines.size();
  report["semisimple_dim"] = s.size();
  report["cartan_dim"] = an.cartan ? an.cartan->cartan.size() : 0;
  report["cartan_iterations"] = an.cartan ? an.cartan->iterations : 0;
  report["splitting"] = nullptr;

  if (an.cartan) {
    const LieBasis& a = an.cartan->cartan;
    residuals["cartan_abelian"] = max_bracket_norm(a, a);
    residuals["cartan_self_normalizing"] = span_distance(normalizer(s, a, tol), a);
  }
  if (an.primary) {
    const auto& p = *an.primary;
    double invariance = 0.0;
    double rotation = 0.0;
    Json comps = Json::array();
    for (std::size_t j = 0; j < p.components.size(); ++j) {
      const auto& v = p.components[j].basis;
      invariance = std::max(invariance, invariance_residual(p.cartan, v));
      for (const auto& x : p.cartan) {
        const RMatrix ra = restricted_adjoint(v, x);
        rotation = std::max(rotation, (ra + ra.transpose()).norm());
      }
      Json c{{"frequency", p.components[j].frequency}, {"dim", v.size()}};
      if (an.ideals) c["ideal"] = an.ideals->origin[j];
      comps.push_back(std::move(c));
    }
    residuals["primary_invariance"] = invariance;
    residuals["primary_rotation_form"] = rotation;
    report["primary_components"] = comps;
    report["splitting"] = Json{{"coeffs", vector_to_json(p.splitting.coeffs)},
                               {"frequencies", p.splitting.frequencies},
                               {"distinct_eigenvalues", p.splitting.distinct_eigenvalues}};
  } else {
    report["primary_components"] = Json::array();
  }

  double commute = 0.0;
  double ideal_inv = 0.0;
  double su2 = 0.0;
  Json comps = Json::array();
  for (std::size_t a = 0; a < decomp.components.size(); ++a) {
    const auto& c = decomp.components[a];
    bool is_su2 = false;
    if (c.kind == ComponentKind::simple) {
      ideal_inv = std::max(ideal_inv, invariance_residual(s, c.basis));
      if (auto t = recognize_su2(c.basis, tol)) {
        is_su2 = true;
        su2 = std::max(su2, t->relation_residual);
      }
    }
    for (std::size_t b = a + 1; b < decomp.components.size(); ++b) {
      commute = std::max(commute, max_bracket_norm(c.basis, decomp.components[b].basis));
    }
    comps.push_back(Json{{"kind", to_string(c.kind)}, {"dim", c.basis.size()}, {"su2", is_su2}});
  }
  report["components"] = comps;
  residuals["component_commutation"] = commute;
  if (an.ideals) residuals["ideal_invariance"] = ideal_inv;
  residuals["su2_relations"] = su2;

  bool ok = true;
  for (const auto& [key, value] : residuals.items()) ok = ok && value.get<double>() <= tol.rank;
  report["residuals"] = residuals;
  report["status"] = ok ? "ok" : "residual-exceeded";
  report["tolerances"] = Json{{"rank", tol.rank}, {"null", tol.null}, {"eig", tol.eig},
                              {"killing", tol.killing}, {"herm", tol.herm}};
  return report;
}

Json propagation_report(const ComponentDecomposition& decomp, const PropagationResult& result) {
  Json factors = Json::array();
  for (std::size_t k = 0; k < result.factors.size(); ++k) {
    factors.push_back(Json{{"index", k},
                           {"kind", to_string(decomp.components[k].kind)},
                           {"dim", decomp.components[k].basis.size()},
                           {"unitary", matrix_to_json(result.factors[k])}});
  }
  const bool ok = result.factorization_error <= 1e-8 * std::max(1.0, result.time) &&
                  result.commutation_residual <= 1e-8;
  return Json{{"time", result.time},
              {"total", matrix_to_json(result.total)},
              {"factors", factors},
              {"factorization_error", result.factorization_error},
              {"commutation_residual", result.commutation_residual},
              {"unitarity_residual", result.unitarity_residual},
              {"status", ok ? "ok" : "residual-exceeded"}};
}

// ---------------------------------------------------------------------------

namespace {

void dump_to(const Json& j, std::ostringstream& os, int indent) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  const std::string close(static_cast<std::size_t>(indent), ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << "{\n";
      bool first = true;
      for (const auto& [key, value] : j.items()) {  // std::map: sorted keys
        if (!first) os << ",\n";
        first = false;
        os << pad << Json(key).dump() << ": ";
        dump_to(value, os, indent + 2);
      }
      os << "\n" << close << "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      bool scalars = true;
      for (const auto& v : j) scalars = scalars && !v.is_structured();
      if (scalars) {
        os << "[";
        for (std::size_t k = 0; k < j.size(); ++k) {
          if (k) os << ", ";
          dump_to(j[k], os, indent);
        }
        os << "]";
        return;
      }
      os << "[\n";
      for (std::size_t k = 0; k < j.size(); ++k) {
        if (k) os << ",\n";
        os << pad;
        dump_to(j[k], os, indent + 2);
      }
      os << "\n" << close << "]";
      return;
    }
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) {
        os << "null";
        return;
      }
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", v);
      os << buf;
      return;
    }
    default:
      os << j.dump();
  }
}

}  // namespace

std::string canonical_dump(const Json& j) {
  std::ostringstream os;
  dump_to(j, os, 0);
  os << "\n";
  return os.str();
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot read '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw SpecError("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw SpecError("cannot write '" + path + "'");
  out << text;
}

}  // namespace liedec::io
