/*
 *   Copyright 2026 the vlineq authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "vlineq/instance.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>

#include "vlineq/power.hpp"
#include "vlineq/rng.hpp"
#include "vlineq/suites.hpp"

namespace vlineq {

namespace {

using Json = nlohmann::ordered_json;

const std::set<std::string>& check_suite_names() {
  static const std::set<std::string> names{
      "lattice-axioms", "modulus",        "square-mean", "geometric-mean",
      "weighted-gm",    "powers",         "power-rules", "cauchy-schwarz",
      "cs-corollary",   "cs-equality",    "maligranda",  "hom-equality",
      "holder",         "minkowski"};
  return names;
}

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw SchemaError(path, message);
}

const Json& expect_object(const Json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  return j;
}

const Json& expect_array(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

std::string expect_string(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

double expect_number(const Json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  return j.get<double>();
}

std::complex<double> parse_pair(const Json& j, const std::string& path) {
  expect_array(j, path);
  if (j.size() != 2) fail(path, "expected an [re, im] pair");
  return {expect_number(j[0], path + "/0"), expect_number(j[1], path + "/1")};
}

LatticeElement parse_element(const Json& j, ScalarField field,
                             const std::string& path) {
  expect_array(j, path);
  if (j.empty()) fail(path, "element needs at least one coordinate");
  std::vector<std::complex<double>> coords;
  coords.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string cpath = path + "/" + std::to_string(i);
    const auto z = parse_pair(j[i], cpath);
    if (field == ScalarField::real && z.imag() != 0.0)
      fail(cpath + "/1", "real-field coordinate with nonzero imaginary part");
    coords.push_back(z);
  }
  return LatticeElement(field, std::move(coords));
}

SesquilinearForm parse_form(const Json& j, ScalarField field,
                            const std::string& path) {
  expect_array(j, path);
  if (j.empty()) fail(path, "form needs at least one matrix");
  std::vector<Eigen::MatrixXcd> matrices;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string mpath = path + "/" + std::to_string(k);
    const Json& mj = expect_array(j[k], mpath);
    const std::size_t m = mj.size();
    if (m == 0) fail(mpath, "matrix needs at least one row");
    Eigen::MatrixXcd A(m, m);
    for (std::size_t r = 0; r < m; ++r) {
      const std::string rpath = mpath + "/" + std::to_string(r);
      const Json& row = expect_array(mj[r], rpath);
      if (row.size() != m) fail(rpath, "matrix must be square");
      for (std::size_t c = 0; c < m; ++c) {
        const std::string epath = rpath + "/" + std::to_string(c);
        const auto z = parse_pair(row[c], epath);
        if (field == ScalarField::real && z.imag() != 0.0)
          fail(epath + "/1", "real-field matrix entry with nonzero imaginary part");
        A(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = z;
      }
    }
    if (!matrices.empty() && A.rows() != matrices[0].rows())
      fail(mpath, "matrices of one form must share their dimension");
    matrices.push_back(std::move(A));
  }
  SesquilinearForm form(field, std::move(matrices));
  if (!form.is_conjugate_symmetric(1e-9))
    fail(path, "matrices must be Hermitian");
  return form;
}

PositiveLinearMap parse_map(const Json& j, const std::string& path) {
  expect_array(j, path);
  if (j.empty()) fail(path, "map needs at least one row");
  const Json& first = expect_array(j[0], path + "/0");
  const std::size_t cols = first.size();
  if (cols == 0) fail(path + "/0", "map rows need at least one entry");
  Eigen::MatrixXd M(j.size(), cols);
  for (std::size_t r = 0; r < j.size(); ++r) {
    const std::string rpath = path + "/" + std::to_string(r);
    const Json& row = expect_array(j[r], rpath);
    if (row.size() != cols) fail(rpath, "map rows must have equal length");
    for (std::size_t c = 0; c < cols; ++c) {
      const std::string epath = rpath + "/" + std::to_string(c);
      const double e = expect_number(row[c], epath);
      if (e < 0.0) fail(epath, "map entries must be nonnegative");
      M(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = e;
    }
  }
  return PositiveLinearMap(std::move(M));
}

// --- check resolution -------------------------------------------------------

const LatticeElement& resolve_element(const InstanceFile& inst,
                                      const Json& operands,
                                      const std::string& key,
                                      const std::string& path) {
  if (!operands.contains(key)) fail(path, "missing operand \"" + key + "\"");
  const std::string name = expect_string(operands[key], path + "/" + key);
  const auto it = inst.elements.find(name);
  if (it == inst.elements.end())
    fail(path + "/" + key, "unknown element \"" + name + "\"");
  return it->second;
}

const SesquilinearForm& resolve_form(const InstanceFile& inst,
                                     const Json& operands,
                                     const std::string& path) {
  if (!operands.contains("form")) fail(path, "missing operand \"form\"");
  const std::string name = expect_string(operands["form"], path + "/form");
  const auto it = inst.forms.find(name);
  if (it == inst.forms.end())
    fail(path + "/form", "unknown form \"" + name + "\"");
  return it->second;
}

const PositiveLinearMap& resolve_map(const InstanceFile& inst,
                                     const Json& operands,
                                     const std::string& path) {
  if (!operands.contains("map")) fail(path, "missing operand \"map\"");
  const std::string name = expect_string(operands["map"], path + "/map");
  const auto it = inst.maps.find(name);
  if (it == inst.maps.end()) fail(path + "/map", "unknown map \"" + name + "\"");
  return it->second;
}

std::vector<LatticeElement> resolve_family(const InstanceFile& inst,
                                           const Json& operands,
                                           const std::string& path) {
  if (!operands.contains("elements"))
    fail(path, "missing operand \"elements\"");
  const std::string lpath = path + "/elements";
  const Json& list = expect_array(operands["elements"], lpath);
  if (list.empty()) fail(lpath, "needs at least one element name");
  std::vector<LatticeElement> out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string ipath = lpath + "/" + std::to_string(i);
    const std::string name = expect_string(list[i], ipath);
    const auto it = inst.elements.find(name);
    if (it == inst.elements.end()) fail(ipath, "unknown element \"" + name + "\"");
    out.push_back(it->second);
  }
  return out;
}

std::vector<double> number_list(const Json& params, const std::string& key,
                                const std::string& path) {
  if (!params.contains(key)) fail(path, "missing param \"" + key + "\"");
  const std::string lpath = path + "/" + key;
  const Json& list = expect_array(params[key], lpath);
  std::vector<double> out;
  for (std::size_t i = 0; i < list.size(); ++i)
    out.push_back(expect_number(list[i], lpath + "/" + std::to_string(i)));
  return out;
}

WeightVector parse_weights(const Json& params, std::size_t count,
                           const std::string& path) {
  const auto raw = number_list(params, "weights", path);
  if (raw.size() != count)
    fail(path + "/weights", "weight count must match the element count");
  try {
    return WeightVector(raw);
  } catch (const std::invalid_argument& e) {
    fail(path + "/weights", e.what());
  }
}

ExponentVector parse_exponents(const Json& params, std::size_t count,
                               const std::string& path) {
  const auto raw = number_list(params, "exponents", path);
  if (raw.size() != count)
    fail(path + "/exponents", "exponent count must match the element count");
  try {
    return ExponentVector(raw);
  } catch (const std::invalid_argument& e) {
    fail(path + "/exponents", e.what());
  }
}

void require_positive_operand(const LatticeElement& a, const std::string& path) {
  if (!a.in_positive_cone()) fail(path, "element must lie in the positive cone");
}

// Resolves every reference and checks the dimension constraints; the
// returned reports come from the actual run.
void validate_check(const InstanceFile& inst, const InstanceCheck& check,
                    const std::string& path) {
  if (!check_suite_names().count(check.suite))
    fail(path + "/suite", "unknown suite \"" + check.suite + "\"");
  const Json& ops = check.operands;
  const Json& params = check.params;
  const std::string opath = path + "/operands";
  const std::string ppath = path + "/params";
  const std::string& s = check.suite;

  if (s == "lattice-axioms") {
    const auto& f = resolve_element(inst, ops, "f", opath);
    const auto& g = resolve_element(inst, ops, "g", opath);
    const auto& h = resolve_element(inst, ops, "h", opath);
    if (inst.field != ScalarField::real)
      fail(opath, "lattice axioms need the real field");
    if (f.dim() != g.dim() || f.dim() != h.dim())
      fail(opath, "dimension mismatch");
  } else if (s == "modulus") {
    resolve_element(inst, ops, "f", opath);
  } else if (s == "square-mean") {
    const auto& f = resolve_element(inst, ops, "f", opath);
    const auto& g = resolve_element(inst, ops, "g", opath);
    if (inst.field != ScalarField::real)
      fail(opath, "the square mean needs the real field");
    if (f.dim() != g.dim()) fail(opath, "dimension mismatch");
  } else if (s == "geometric-mean") {
    const auto& f = resolve_element(inst, ops, "f", opath);
    const auto& g = resolve_element(inst, ops, "g", opath);
    if (f.dim() != g.dim()) fail(opath, "dimension mismatch");
    require_positive_operand(f, opath + "/f");
    require_positive_operand(g, opath + "/g");
  } else if (s == "weighted-gm") {
    const auto fs = resolve_family(inst, ops, opath);
    parse_weights(params, fs.size(), ppath);
    for (const auto& f : fs)
      if (f.dim() != fs[0].dim()) fail(opath + "/elements", "dimension mismatch");
  } else if (s == "powers") {
    const auto& a = resolve_element(inst, ops, "a", opath);
    require_positive_operand(a, opath + "/a");
    if (!params.contains("r")) fail(ppath, "missing param \"r\"");
    if (expect_number(params["r"], ppath + "/r") <= 0.0)
      fail(ppath + "/r", "exponent must be > 0");
  } else if (s == "power-rules") {
    const auto& a = resolve_element(inst, ops, "a", opath);
    require_positive_operand(a, opath + "/a");
    for (const char* key : {"p", "q"}) {
      if (!params.contains(key))
        fail(ppath, std::string("missing param \"") + key + "\"");
      if (expect_number(params[key], ppath + "/" + key) <= 0.0)
        fail(ppath + "/" + std::string(key), "exponent must be > 0");
    }
  } else if (s == "cauchy-schwarz" || s == "cs-corollary" || s == "cs-equality") {
    const auto& form = resolve_form(inst, ops, opath);
    const auto& u = resolve_element(inst, ops, "u", opath);
    const auto& v = resolve_element(inst, ops, "v", opath);
    if (u.dim() != form.domain_dim() || v.dim() != form.domain_dim())
      fail(opath, "element dimension must match the form domain");
    if (s == "cs-equality") {
      if (!params.contains("expect_equality"))
        fail(ppath, "missing param \"expect_equality\"");
      if (!params["expect_equality"].is_boolean())
        fail(ppath + "/expect_equality", "expected a boolean");
      if (params.contains("expect_witness") &&
          !params["expect_witness"].is_boolean())
        fail(ppath + "/expect_witness", "expected a boolean");
      if (params.contains("witness_probes") &&
          (!params["witness_probes"].is_number_integer() ||
           params["witness_probes"].get<int>() < 1))
        fail(ppath + "/witness_probes", "expected a positive integer");
      if (params.contains("seed") && !params["seed"].is_number_unsigned())
        fail(ppath + "/seed", "expected a nonnegative integer");
    }
  } else if (s == "maligranda" || s == "hom-equality") {
    const auto& m = resolve_map(inst, ops, opath);
    const auto fs = resolve_family(inst, ops, opath);
    parse_weights(params, fs.size(), ppath);
    for (const auto& f : fs)
      if (f.dim() != m.in_dim())
        fail(opath + "/elements", "element dimension must match the map");
  } else if (s == "holder") {
    const auto& m = resolve_map(inst, ops, opath);
    const auto fs = resolve_family(inst, ops, opath);
    parse_exponents(params, fs.size(), ppath);
    for (const auto& f : fs)
      if (f.dim() != m.in_dim())
        fail(opath + "/elements", "element dimension must match the map");
  } else if (s == "minkowski") {
    const auto& m = resolve_map(inst, ops, opath);
    const auto fs = resolve_family(inst, ops, opath);
    if (!params.contains("p")) fail(ppath, "missing param \"p\"");
    if (expect_number(params["p"], ppath + "/p") <= 1.0)
      fail(ppath + "/p", "p must be > 1");
    for (const auto& f : fs)
      if (f.dim() != m.in_dim())
        fail(opath + "/elements", "element dimension must match the map");
  }
}

// --- running ----------------------------------------------------------------

CheckReport dual_agreement_report(const std::string& name, const DualValue& dv,
                                  bool definitional_above,
                                  const GridConfig& cfg) {
  const double agree = max_distance(dv.definitional, dv.closed);
  // sup families approach the closed value from below, inf families from
  // above; the opposite side is float noise only
  const double overshoot = definitional_above
                               ? max_exceedance(dv.closed, dv.definitional)
                               : max_exceedance(dv.definitional, dv.closed);
  const double scale =
      1.0 + std::max(max_magnitude(dv.definitional), max_magnitude(dv.closed));
  CheckReport rep;
  rep.check = name;
  rep.max_violation = agree;
  rep.pass = agree <= cfg.grid_tol * scale && overshoot <= cfg.abs_tol * scale;
  rep.details["path_disagreement"] = agree;
  rep.details["overshoot"] = overshoot;
  return rep;
}

CheckReport run_one_check(const InstanceFile& inst, const InstanceCheck& check,
                          const GridConfig& cfg) {
  const Json& ops = check.operands;
  const Json& params = check.params;
  const std::string& s = check.suite;
  const std::string opath = "/operands";

  if (s == "lattice-axioms") {
    return lattice_axioms_check(resolve_element(inst, ops, "f", opath),
                                resolve_element(inst, ops, "g", opath),
                                resolve_element(inst, ops, "h", opath));
  }
  if (s == "modulus") {
    const auto dv = modulus(resolve_element(inst, ops, "f", opath), cfg);
    return dual_agreement_report(s, dv, false, cfg);
  }
  if (s == "square-mean") {
    const auto dv = square_mean(resolve_element(inst, ops, "f", opath),
                                resolve_element(inst, ops, "g", opath), cfg);
    return dual_agreement_report(s, dv, false, cfg);
  }
  if (s == "geometric-mean") {
    const auto dv = geometric_mean(resolve_element(inst, ops, "f", opath),
                                   resolve_element(inst, ops, "g", opath), cfg);
    return dual_agreement_report(s, dv, true, cfg);
  }
  if (s == "weighted-gm") {
    const auto fs = resolve_family(inst, ops, opath);
    const auto w = parse_weights(params, fs.size(), "/params");
    return dual_agreement_report(s, weighted_geometric_mean(fs, w, cfg), true,
                                 cfg);
  }
  if (s == "powers") {
    const auto& a = resolve_element(inst, ops, "a", opath);
    const double r = params["r"].get<double>();
    auto rep = dual_agreement_report(s, power(a, r, cfg), true, cfg);
    rep.details["r"] = r;
    return rep;
  }
  if (s == "power-rules") {
    return check_power_rules(resolve_element(inst, ops, "a", opath),
                             params["p"].get<double>(),
                             params["q"].get<double>(), cfg);
  }
  if (s == "cauchy-schwarz") {
    const auto& form = resolve_form(inst, ops, opath);
    const auto& u = resolve_element(inst, ops, "u", opath);
    const auto& v = resolve_element(inst, ops, "v", opath);
    const auto rep = cauchy_schwarz_report(form, u, v, cfg);
    const auto gap = cs_gap(form, u, v, cfg);
    const double scale =
        1.0 + std::max(max_magnitude(rep.lhs), max_magnitude(rep.rhs));
    const double exceed = max_exceedance(rep.lhs, rep.rhs);
    const double gap_agree = max_distance(gap.definitional, gap.closed);
    CheckReport out;
    out.check = s;
    out.max_violation = std::max(rep.identity_residual, std::max(exceed, 0.0));
    out.pass = rep.identity_residual <= cfg.grid_tol * scale &&
               exceed <= cfg.abs_tol * scale &&
               gap_agree <= cfg.grid_tol * scale;
    out.details["identity_residual"] = rep.identity_residual;
    out.details["inequality_violation"] = exceed;
    out.details["gap_path_disagreement"] = gap_agree;
    return out;
  }
  if (s == "cs-corollary") {
    return cs_corollary_report(resolve_form(inst, ops, opath),
                               resolve_element(inst, ops, "u", opath),
                               resolve_element(inst, ops, "v", opath), cfg);
  }
  if (s == "cs-equality") {
    const auto& form = resolve_form(inst, ops, opath);
    const auto& u = resolve_element(inst, ops, "u", opath);
    const auto& v = resolve_element(inst, ops, "v", opath);
    const auto rep = cauchy_schwarz_report(form, u, v, cfg);
    const bool expect_equality = params["expect_equality"].get<bool>();
    const int probes = params.contains("witness_probes")
                           ? params["witness_probes"].get<int>()
                           : 10000;
    const std::uint64_t seed =
        params.contains("seed") ? params["seed"].get<std::uint64_t>() : 2026u;
    const auto witness =
        classical_equality_witness_search(form, u, v, probes, seed, cfg);
    CheckReport out;
    out.check = s;
    out.pass = rep.equality == expect_equality;
    if (params.contains("expect_witness"))
      out.pass = out.pass &&
                 witness.has_value() == params["expect_witness"].get<bool>();
    out.max_violation = out.pass ? 0.0 : 1.0;
    out.details["equality"] = rep.equality;
    out.details["witness_found"] = witness.has_value();
    if (witness) {
      out.details["witness"] = Json::array(
          {Json::array({witness->first.real(), witness->first.imag()}),
           Json::array({witness->second.real(), witness->second.imag()})});
    }
    return out;
  }
  if (s == "maligranda" || s == "hom-equality") {
    const auto& m = resolve_map(inst, ops, opath);
    const auto fs = resolve_family(inst, ops, opath);
    const auto w = parse_weights(params, fs.size(), "/params");
    return s == "maligranda" ? maligranda_check(m, fs, w, cfg)
                             : homomorphism_equality_check(m, fs, w, cfg);
  }
  if (s == "holder") {
    const auto& m = resolve_map(inst, ops, opath);
    const auto fs = resolve_family(inst, ops, opath);
    return holder_check(m, fs, parse_exponents(params, fs.size(), "/params"),
                        cfg);
  }
  // minkowski
  const auto& m = resolve_map(inst, ops, opath);
  const auto fs = resolve_family(inst, ops, opath);
  return minkowski_check(m, fs, params["p"].get<double>(), cfg);
}

}  // namespace

InstanceFile instance_from_json(const Json& doc) {
  expect_object(doc, "");
  if (!doc.contains("field")) fail("/field", "missing");
  const std::string fname = expect_string(doc["field"], "/field");
  InstanceFile inst;
  try {
    inst.field = field_from_string(fname);
  } catch (const std::invalid_argument& e) {
    fail("/field", e.what());
  }

  if (doc.contains("elements")) {
    const Json& els = expect_object(doc["elements"], "/elements");
    for (const auto& [name, value] : els.items())
      inst.elements.emplace(name,
                            parse_element(value, inst.field, "/elements/" + name));
  }
  if (doc.contains("forms")) {
    const Json& fms = expect_object(doc["forms"], "/forms");
    for (const auto& [name, value] : fms.items())
      inst.forms.emplace(name, parse_form(value, inst.field, "/forms/" + name));
  }
  if (doc.contains("maps")) {
    const Json& mps = expect_object(doc["maps"], "/maps");
    for (const auto& [name, value] : mps.items())
      inst.maps.emplace(name, parse_map(value, "/maps/" + name));
  }
  if (doc.contains("checks")) {
    const Json& checks = expect_array(doc["checks"], "/checks");
    for (std::size_t i = 0; i < checks.size(); ++i) {
      const std::string path = "/checks/" + std::to_string(i);
      const Json& cj = expect_object(checks[i], path);
      if (!cj.contains("suite")) fail(path + "/suite", "missing");
      InstanceCheck check;
      check.suite = expect_string(cj["suite"], path + "/suite");
      if (cj.contains("operands"))
        check.operands = expect_object(cj["operands"], path + "/operands");
      if (cj.contains("params"))
        check.params = expect_object(cj["params"], path + "/params");
      validate_check(inst, check, path);
      inst.checks.push_back(std::move(check));
    }
  }
  return inst;
}

InstanceFile load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open \"" + path + "\"");
  const Json doc = Json::parse(in);  // throws nlohmann parse_error
  return instance_from_json(doc);
}

namespace {

Json element_coords_json(const LatticeElement& e) {
  Json coords = Json::array();
  for (int i = 0; i < e.dim(); ++i)
    coords.push_back(Json::array({e[i].real(), e[i].imag()}));
  return coords;
}

Json form_json(const SesquilinearForm& form) {
  Json out = Json::array();
  for (const auto& A : form.matrices()) {
    Json mat = Json::array();
    for (Eigen::Index r = 0; r < A.rows(); ++r) {
      Json row = Json::array();
      for (Eigen::Index c = 0; c < A.cols(); ++c)
        row.push_back(Json::array({A(r, c).real(), A(r, c).imag()}));
      mat.push_back(std::move(row));
    }
    out.push_back(std::move(mat));
  }
  return out;
}

Json map_json(const PositiveLinearMap& m) {
  Json out = Json::array();
  for (int r = 0; r < m.out_dim(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.in_dim(); ++c) row.push_back(m.entries()(r, c));
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

Json instance_to_json(const InstanceFile& instance) {
  Json doc;
  doc["field"] = to_string(instance.field);
  doc["elements"] = Json::object();
  for (const auto& [name, e] : instance.elements)
    doc["elements"][name] = element_coords_json(e);
  doc["forms"] = Json::object();
  for (const auto& [name, f] : instance.forms) doc["forms"][name] = form_json(f);
  doc["maps"] = Json::object();
  for (const auto& [name, m] : instance.maps) doc["maps"][name] = map_json(m);
  doc["checks"] = Json::array();
  for (const auto& check : instance.checks) {
    Json cj;
    cj["suite"] = check.suite;
    cj["operands"] = check.operands;
    cj["params"] = check.params;
    doc["checks"].push_back(std::move(cj));
  }
  return doc;
}

void save_instance(const InstanceFile& instance, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write \"" + path + "\"");
  out << instance_to_json(instance).dump(2) << "\n";
}

LatticeElement random_element(Rng& rng, ScalarField field, int dim, double lo,
                              double hi) {
  std::vector<std::complex<double>> coords(static_cast<std::size_t>(dim));
  for (auto& c : coords) {
    const double re = rng.uniform(lo, hi);
    const double im = field == ScalarField::complex ? rng.uniform(lo, hi) : 0.0;
    c = {re, im};
  }
  return LatticeElement(field, std::move(coords));
}

Eigen::MatrixXcd random_gram_matrix(Rng& rng, ScalarField field, int m) {
  Eigen::MatrixXcd B(m, m);
  for (Eigen::Index r = 0; r < m; ++r) {
    for (Eigen::Index c = 0; c < m; ++c) {
      const double re = rng.uniform(-1.0, 1.0);
      const double im =
          field == ScalarField::complex ? rng.uniform(-1.0, 1.0) : 0.0;
      B(r, c) = {re, im};
    }
  }
  Eigen::MatrixXcd G(m, m);
  for (Eigen::Index p = 0; p < m; ++p) {
    std::complex<double> diag{0.0, 0.0};
    for (Eigen::Index k = 0; k < m; ++k) diag += std::conj(B(k, p)) * B(k, p);
    G(p, p) = {diag.real(), 0.0};
    for (Eigen::Index q = p + 1; q < m; ++q) {
      std::complex<double> g{0.0, 0.0};
      for (Eigen::Index k = 0; k < m; ++k) g += std::conj(B(k, p)) * B(k, q);
      G(p, q) = g;
      G(q, p) = std::conj(g);
    }
  }
  return G;
}

InstanceFile generate_instance(const std::string& kind, int m, int n,
                               std::uint64_t seed, ScalarField field) {
  if (m < 1 || n < 1) throw std::invalid_argument("generate_instance: invalid dims");
  Rng rng(derive_seed(seed, kind));
  InstanceFile inst;
  inst.field = field;

  if (kind == "psd-form") {
    std::vector<Eigen::MatrixXcd> matrices;
    for (int j = 0; j < n; ++j)
      matrices.push_back(random_gram_matrix(rng, field, m));
    inst.forms.emplace("T", SesquilinearForm(field, std::move(matrices)));
    inst.elements.emplace("u", random_element(rng, field, m, -1.0, 1.0));
    inst.elements.emplace("v", random_element(rng, field, m, -1.0, 1.0));
    for (const char* suite : {"cauchy-schwarz", "cs-corollary"}) {
      InstanceCheck check;
      check.suite = suite;
      check.operands = {{"form", "T"}, {"u", "u"}, {"v", "v"}};
      inst.checks.push_back(std::move(check));
    }
    return inst;
  }

  if (kind == "positive-map" || kind == "lattice-hom") {
    Eigen::MatrixXd M(m, n);  // m rows out, n columns in
    if (kind == "lattice-hom") {
      M.setZero();
      for (int r = 0; r < m; ++r)
        M(r, rng.uniform_int(0, n - 1)) = rng.uniform(0.1, 2.0);
    } else {
      for (int r = 0; r < m; ++r)
        for (int c = 0; c < n; ++c)
          M(r, c) = rng.unit() < 0.5 ? 0.0 : rng.uniform(0.1, 2.0);
    }
    inst.maps.emplace("M", PositiveLinearMap(std::move(M)));
    inst.elements.emplace("f1", random_element(rng, field, n, -10.0, 10.0));
    inst.elements.emplace("f2", random_element(rng, field, n, -10.0, 10.0));
    InstanceCheck check;
    check.suite = kind == "lattice-hom" ? "hom-equality" : "maligranda";
    check.operands = {{"map", "M"},
                      {"elements", Json::array({"f1", "f2"})}};
    check.params = {{"weights", Json::array({0.5, 0.5})}};
    inst.checks.push_back(std::move(check));
    return inst;
  }

  if (kind == "positive-elements") {
    for (int k = 0; k < n; ++k) {
      std::vector<std::complex<double>> coords(static_cast<std::size_t>(m));
      for (auto& c : coords) c = {rng.uniform(0.0, 100.0), 0.0};
      inst.elements.emplace("e" + std::to_string(k + 1),
                            LatticeElement(field, std::move(coords)));
    }
    if (n == 1) {
      InstanceCheck pw;
      pw.suite = "powers";
      pw.operands = {{"a", "e1"}};
      pw.params = {{"r", 2.5}};
      inst.checks.push_back(std::move(pw));
      InstanceCheck pr;
      pr.suite = "power-rules";
      pr.operands = {{"a", "e1"}};
      pr.params = {{"p", 2.0}, {"q", 0.5}};
      inst.checks.push_back(std::move(pr));
    } else {
      InstanceCheck gm;
      gm.suite = "geometric-mean";
      gm.operands = {{"f", "e1"}, {"g", "e2"}};
      inst.checks.push_back(std::move(gm));
      Json names = Json::array();
      Json weights = Json::array();
      for (int k = 0; k < n; ++k) {
        names.push_back("e" + std::to_string(k + 1));
        weights.push_back(1.0 / n);
      }
      InstanceCheck wg;
      wg.suite = "weighted-gm";
      wg.operands = {{"elements", std::move(names)}};
      wg.params = {{"weights", std::move(weights)}};
      inst.checks.push_back(std::move(wg));
    }
    return inst;
  }

  throw std::invalid_argument("generate_instance: unknown kind \"" + kind + "\"");
}

std::vector<CheckReport> run_instance_checks(const InstanceFile& instance,
                                             const GridConfig& cfg,
                                             const std::string& only_suite) {
  std::vector<CheckReport> reports;
  for (std::size_t i = 0; i < instance.checks.size(); ++i) {
    const auto& check = instance.checks[i];
    if (!only_suite.empty() && check.suite != only_suite) continue;
    CheckReport rep = run_one_check(instance, check, cfg);
    rep.details["check_index"] = i;
    reports.push_back(std::move(rep));
  }
  return reports;
}

}  // namespace vlineq
