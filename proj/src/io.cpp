#include "sicinfo/io.hpp"

#include <fstream>

namespace sicinfo::io {

namespace {

Json complex_to_json(std::complex<double> z) { return Json::array({z.real(), z.imag()}); }

std::complex<double> complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ParseError("complex number must be a [re, im] pair, got " + j.dump());
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::string kind_of(const Json& j) {
  const Json& k = require(j, "kind");
  if (!k.is_string()) throw ParseError("field \"kind\" must be a string");
  return k.get<std::string>();
}

Index dim_of(const Json& j) {
  const Json& d = require(j, "dim");
  if (!d.is_number_integer() || d.get<long long>() < 1) throw ParseError("field \"dim\" must be a positive integer");
  return static_cast<Index>(d.get<long long>());
}

Json elements_json(const std::string& kind, Index dim, const std::vector<Operator>& ops) {
  Json elements = Json::array();
  for (const auto& op : ops) elements.push_back({{"matrix", to_json(op)}});
  return {{"kind", kind}, {"dim", dim}, {"elements", std::move(elements)}};
}

std::vector<Operator> parse_elements(const Json& j) {
  const Index dim = dim_of(j);
  const Json& elements = require(j, "elements");
  if (!elements.is_array() || elements.empty()) throw ParseError("field \"elements\" must be a non-empty array");
  std::vector<Operator> ops;
  ops.reserve(elements.size());
  for (const auto& e : elements) {
    Operator op = operator_from_json(require(e, "matrix"));
    if (op.dim() != dim) {
      throw ParseError("element has dimension " + std::to_string(op.dim()) + " but dim is " + std::to_string(dim));
    }
    ops.push_back(std::move(op));
  }
  return ops;
}

}  // namespace

Json to_json(const Operator& op) {
  Json rows = Json::array();
  for (Index r = 0; r < op.dim(); ++r) {
    Json row = Json::array();
    for (Index c = 0; c < op.dim(); ++c) row.push_back(complex_to_json(op(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const Ensemble& e) { return elements_json("ensemble", e.dim(), e.states()); }
Json to_json(const Povm& p) { return elements_json("povm", p.dim(), p.effects()); }

Json operators_to_json(const std::vector<Operator>& ops) {
  if (ops.empty()) throw InvalidInput("operators_to_json: empty list");
  return elements_json("operators", ops.front().dim(), ops);
}

Json fiducial_to_json(const PureState& psi) {
  Json amps = Json::array();
  for (Index i = 0; i < psi.dim(); ++i) amps.push_back(complex_to_json(psi(i)));
  return {{"kind", "fiducial"}, {"dim", psi.dim()}, {"amplitudes", std::move(amps)}};
}

Json to_json(const SicCertificate& c) {
  return {{"kind", "sic_certificate"},
          {"dim", c.dim},
          {"count", c.count},
          {"lambda", c.lambda},
          {"max_trace_deviation", c.max_trace_deviation},
          {"max_pairwise_deviation", c.max_pairwise_deviation},
          {"max_rank_residual", c.max_rank_residual},
          {"average_deviation", c.average_deviation},
          {"rank_one", c.rank_one},
          {"passes", c.passes}};
}

Json to_json(const OptimizationReport& r) {
  Json states = Json::array();
  for (std::size_t i = 0; i < r.best_states.size(); ++i) {
    Json amps = Json::array();
    for (Index k = 0; k < r.best_states[i].dim(); ++k) amps.push_back(complex_to_json(r.best_states[i](k)));
    states.push_back({{"weight", r.weights.at(i)}, {"amplitudes", std::move(amps)}});
  }
  return {{"kind", "optimization_report"},
          {"objective", r.objective},
          {"best_value", r.best_value},
          {"best_states", std::move(states)},
          {"starts", r.starts},
          {"converged_starts", r.converged_starts},
          {"iterations_per_start", r.iterations_per_start},
          {"seed", r.seed},
          {"tolerance_used", r.tolerance_used},
          {"prng", r.prng},
          {"max_support", r.max_support},
          {"weight_hit_zero", r.weight_hit_zero}};
}

Json to_json(const BoundSet& b) {
  return {{"d", b.dim},
          {"holevo", b.holevo},
          {"sic_upper", b.sic_upper},
          {"scrooge_lower", b.scrooge_lower},
          {"rastegin_cond", b.rastegin_cond},
          {"pg_sic_value", b.pg_sic_value}};
}

Operator operator_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("matrix must be a non-empty array of rows");
  const auto n = static_cast<Index>(j.size());
  ComplexMatrix m(n, n);
  for (Index r = 0; r < n; ++r) {
    const Json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Index>(row.size()) != n) throw ParseError("matrix must be square");
    for (Index c = 0; c < n; ++c) m(r, c) = complex_from_json(row[static_cast<std::size_t>(c)]);
  }
  try {
    return Operator(m);
  } catch (const InvalidOperator& ex) {
    throw ParseError(ex.what());
  }
}

Ensemble ensemble_from_json(const Json& j) {
  if (kind_of(j) != "ensemble") throw ParseError("expected kind \"ensemble\", got \"" + kind_of(j) + "\"");
  return Ensemble(parse_elements(j));
}

Povm povm_from_json(const Json& j) {
  if (kind_of(j) != "povm") throw ParseError("expected kind \"povm\", got \"" + kind_of(j) + "\"");
  return Povm(parse_elements(j));
}

std::vector<Operator> operators_from_json(const Json& j) {
  const std::string kind = kind_of(j);
  if (kind != "ensemble" && kind != "povm" && kind != "operators") {
    throw ParseError("expected an ensemble, povm or operators document, got \"" + kind + "\"");
  }
  return parse_elements(j);
}

PureState fiducial_from_json(const Json& j) {
  if (kind_of(j) != "fiducial") throw ParseError("expected kind \"fiducial\", got \"" + kind_of(j) + "\"");
  const Index dim = dim_of(j);
  const Json& amps = require(j, "amplitudes");
  if (!amps.is_array() || static_cast<Index>(amps.size()) != dim) {
    throw ParseError("fiducial needs exactly dim amplitudes");
  }
  ComplexVector v(dim);
  for (Index i = 0; i < dim; ++i) v(i) = complex_from_json(amps[static_cast<std::size_t>(i)]);
  // Published fiducials are printed to finite precision.
  const double norm = v.norm();
  if (std::abs(norm - 1.0) > 1e-6) throw ParseError("fiducial is not normalized");
  return PureState(v / norm);
}

Json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& ex) {
    throw ParseError(path.string() + ": " + ex.what());
  }
}

}  // namespace sicinfo::io
