#include "povm/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "povm/entropy.hpp"
#include "povm/errors.hpp"
#include "povm/hermite.hpp"
#include "povm/info.hpp"

namespace povm {

using Json = nlohmann::ordered_json;

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string fixed(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

std::string sci(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.1e", x);
  return buf;
}

std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s : s + std::string(w - s.size(), ' '); }

Json vec_json(const Eigen::Vector3d& v) { return Json::array({v.x(), v.y(), v.z()}); }

HsPovm single_povm(const RunConfig& c) {
  if (!c.input.empty()) return load_povm(c.input);
  const auto fams = resolve_families(c.family);
  if (fams.size() != 1) throw UsageError("this subcommand takes a single family, not '" + c.family + "'");
  return fams.front();
}

std::vector<HsPovm> selected(const RunConfig& c) {
  if (!c.input.empty()) return {load_povm(c.input)};
  return resolve_families(c.family);
}

// Writes `text` to the output file or stream.
void emit(const RunConfig& c, std::ostream& out, const std::string& text) {
  if (c.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw UsageError("cannot open output file '" + c.out + "'");
  f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json critical_json(const CriticalPoint& p) {
  Json j;
  j["location"] = vec_json(p.location.vec());
  j["value"] = p.value;
  j["kind"] = to_string(p.kind);
  j["type"] = to_string(p.type_label);
  j["classifier_statistic"] = std::isfinite(p.classifier_statistic) ? Json(p.classifier_statistic) : Json(nullptr);
  j["converged"] = p.converged;
  return j;
}

int cmd_generate(const RunConfig& c, std::ostream& out) {
  const auto fams = selected(c);
  if (fams.size() == 1) {
    emit(c, out, povm_to_json(fams.front()) + "\n");
    return kExitOk;
  }
  Json arr = Json::array();
  for (const auto& p : fams) arr.push_back(Json::parse(povm_to_json(p)));
  emit(c, out, dump(arr));
  return kExitOk;
}

int cmd_validate(const RunConfig& c, std::ostream& out) {
  Json arr = Json::array();
  bool all_ok = true;
  for (const auto& p : selected(c)) {
    const auto& vs = p.vectors();
    const auto rep = validate_povm(vs);
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["family"] = p.name();
    j["k"] = p.size();
    j["is_povm"] = rep.is_povm;
    j["informationally_complete"] = rep.informationally_complete;
    j["design_order"] = spherical_design_order(vs, 5, c.seed);
    j["centroid_norm"] = rep.centroid_norm;
    Json m = Json::array();
    for (const auto& [s, dev] : rep.moment_values) m.push_back(Json{{"degree", s}, {"max_deviation", dev}});
    j["moments"] = m;
    j["symmetry_group"] = p.group_tag();
    all_ok = all_ok && rep.is_povm;
    arr.push_back(j);
  }
  emit(c, out, dump(arr.size() == 1 ? arr.front() : arr));
  return all_ok ? kExitOk : kExitFailure;
}

int cmd_entropy_map(const RunConfig& c, std::ostream& out) {
  const auto p = single_povm(c);
  const auto land = sample_landscape(p, c.grid, false, c.threads);
  const double lnk = std::log(static_cast<double>(p.size()));
  std::string s = "# schema_version=" + std::to_string(kSchemaVersion) + " family=" + p.name() + "\n";
  s += "x,y,z,H,Hrel\n";
  for (std::size_t i = 0; i < land.points.size(); ++i) {
    const auto& u = land.points[i];
    s += format_g17(u.x()) + "," + format_g17(u.y()) + "," + format_g17(u.z()) + "," + format_g17(land.entropy[i]) +
         "," + format_g17(lnk - land.entropy[i]) + "\n";
  }
  emit(c, out, s);
  return kExitOk;
}

int cmd_minimize(const RunConfig& c, std::ostream& out) {
  if (c.mode != "min" && c.mode != "max") throw UsageError("--mode must be min or max");
  const auto mode = c.mode == "min" ? ExtremumMode::min : ExtremumMode::max;
  Json arr = Json::array();
  for (const auto& p : selected(c)) {
    ExtremaOptions o;
    o.grid = c.grid;
    o.threads = c.threads;
    const auto t0 = std::chrono::steady_clock::now();
    const auto ex = find_extrema(p, mode, o);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["family"] = p.name();
    j["mode"] = c.mode;
    j["grid"] = c.grid;
    j["count"] = ex.size();
    j["value"] = ex.empty() ? Json(nullptr) : Json(ex.front().value);
    j["relative_value"] = ex.empty() ? Json(nullptr) : Json(std::log(static_cast<double>(p.size())) - ex.front().value);
    Json pts = Json::array();
    for (const auto& e : ex) pts.push_back(critical_json(e));
    j["extrema"] = pts;
    if (!c.deterministic) j["seconds"] = secs;
    arr.push_back(j);
  }
  emit(c, out, dump(arr.size() == 1 ? arr.front() : arr));
  return kExitOk;
}

int cmd_classify(const RunConfig& c, std::ostream& out) {
  if (!c.point) throw UsageError("classify needs --point x,y,z");
  const auto p = single_povm(c);
  const auto& a = *c.point;
  const auto cp = classify_inert_point(BlochVector::normalized(Eigen::Vector3d(a[0], a[1], a[2])), p);
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["family"] = p.name();
  j["classification"] = critical_json(cp);
  emit(c, out, dump(j));
  return kExitOk;
}

Json certificate_json(const HermiteCertificate& cert, const RunConfig& c) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["family"] = cert.family;
  j["kernel"] = c.kernel;
  j["valid"] = cert.valid;
  j["reason"] = cert.reason;
  Json nodes = Json::array();
  for (const auto& n : cert.nodes) nodes.push_back(Json{{"t", n.t}, {"multiplicity", n.multiplicity}});
  j["nodes"] = nodes;
  Json coeffs = Json::array();
  for (long double x : cert.polynomial.coefficients) coeffs.push_back(static_cast<double>(x));
  j["polynomial"] = Json{{"degree", cert.degree}, {"degree_bound", cert.degree_bound}, {"coefficients", coeffs}};
  j["below_check"] = Json{{"min_gap", cert.below.min_gap},
                          {"argmin", cert.below.argmin},
                          {"touch_points", cert.below.touch_points},
                          {"passed", cert.below.passed}};
  Json ex;
  ex["basis"] = cert.expansion.basis;
  ex["coefficients"] = cert.expansion.coefficients;
  for (const auto& [name, v] : cert.expansion.named()) ex[name] = v;
  ex["residual"] = cert.expansion.residual;
  j["invariant_expansion"] = ex;
  j["beta"] = cert.beta ? Json(*cert.beta) : Json(nullptr);
  j["dispatch"] = cert.dispatch;
  j["orbit_min_verdict"] = cert.orbit_min_verdict;
  j["uniqueness_verdict"] = cert.uniqueness_verdict;
  if (cert.sturm) {
    j["sturm"] = Json{{"root_count", cert.sturm->root_count},     {"precision_bits", cert.sturm->precision_bits},
                      {"decided", cert.sturm->decided},           {"B", cert.sturm->b},
                      {"C", cert.sturm->c},                       {"D", cert.sturm->d},
                      {"p1_positive_inside", cert.sturm->p1_positive_inside}};
  } else {
    j["sturm"] = nullptr;
  }
  j["certified_min"] = cert.certified_min;
  j["entropy_at_antipode"] = cert.entropy_at_antipode;
  if (!c.deterministic) j["seconds"] = cert.seconds;
  return j;
}

int cmd_certify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  CertifyOptions o;
  o.kernel = parse_kernel(c.kernel);
  o.precision_bits = c.precision_bits;
  if (c.precision_bits < 53) throw UsageError("--precision must be at least 53 bits");
  o.max_precision_bits = std::max(512, c.precision_bits);
  Json arr = Json::array();
  bool ok = true;
  for (const auto& p : selected(c)) {
    if (!p.is_named()) throw UsageError("certify works on the named families only");
    const auto cert = certify_minimum(p, o);
    if (!cert.valid) err << "certificate for " << cert.family << " is invalid: " << cert.reason << "\n";
    ok = ok && cert.valid;
    arr.push_back(certificate_json(cert, c));
  }
  emit(c, out, dump(arr.size() == 1 ? arr.front() : arr));
  return ok ? kExitOk : kExitFailure;
}

std::string table5_text(const std::vector<Table5Row>& rows, bool bits, double& max_delta) {
  const double scale = bits ? 1.0 / std::log(2.0) : 1.0;
  std::string s = pad("convex hull of the orbit", 36) + pad(bits ? "W (bits)" : "W (nats)", 12) + pad("printed", 10) + "delta\n";
  max_delta = 0.0;
  for (const auto& r : rows) {
    const double d = r.computed - r.printed;
    max_delta = std::max(max_delta, std::abs(d));
    s += pad(r.name, 36) + pad(fixed(r.computed * scale, 5), 12) + pad(fixed(r.printed, 5), 10) + sci(d) + "\n";
  }
  return s;
}

int cmd_table5(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto rows = informational_power_table();
  double max_delta = 0.0;
  const std::string fmt = c.format.empty() ? "table" : c.format;
  std::string text = table5_text(rows, c.bits, max_delta);
  if (fmt == "json") {
    Json j;
    j["schema_version"] = kSchemaVersion;
    Json arr = Json::array();
    for (const auto& r : rows)
      arr.push_back(Json{{"name", r.name}, {"W", r.computed}, {"printed", r.printed}, {"delta", r.computed - r.printed}});
    j["rows"] = arr;
    j["max_abs_delta"] = max_delta;
    if (!c.deterministic)
      j["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    text = dump(j);
  } else if (fmt == "csv") {
    text = "# schema_version=" + std::to_string(kSchemaVersion) + "\nname,W,printed,delta\n";
    for (const auto& r : rows)
      text += "\"" + r.name + "\"," + format_g17(r.computed) + "," + format_g17(r.printed) + "," +
              format_g17(r.computed - r.printed) + "\n";
  } else if (fmt == "table") {
    text += "max |delta| = " + sci(max_delta) + "\n";
  } else {
    throw UsageError("unknown format '" + fmt + "'");
  }
  emit(c, out, text);
  if (max_delta >= 5e-6) {
    err << "table deviates from the printed values by " << max_delta << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_ngon_sweep(const RunConfig& c, std::ostream& out) {
  const auto [lo, hi] = parse_range(c.range);
  const std::string fmt = c.format.empty() ? "csv" : c.format;
  std::string text;
  if (fmt == "csv") {
    text = "# schema_version=" + std::to_string(kSchemaVersion) + "\nn,W\n";
    for (int n = lo; n <= hi; ++n) text += std::to_string(n) + "," + format_g17(ngon_informational_power(n)) + "\n";
  } else if (fmt == "json") {
    Json j;
    j["schema_version"] = kSchemaVersion;
    Json arr = Json::array();
    for (int n = lo; n <= hi; ++n) arr.push_back(Json{{"n", n}, {"W", ngon_informational_power(n)}});
    j["rows"] = arr;
    text = dump(j);
  } else if (fmt == "table") {
    text = pad("n", 8) + "W\n";
    const double scale = c.bits ? 1.0 / std::log(2.0) : 1.0;
    for (int n = lo; n <= hi; ++n) text += pad(std::to_string(n), 8) + fixed(ngon_informational_power(n) * scale, 5) + "\n";
  } else {
    throw UsageError("unknown format '" + fmt + "'");
  }
  emit(c, out, text);
  return kExitOk;
}

int cmd_info_power(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const std::string fmt = c.format.empty() ? "json" : c.format;
  if (c.family == "all" && c.input.empty() && fmt == "table") return cmd_table5(c, out, err);
  const double scale = c.bits ? 1.0 / std::log(2.0) : 1.0;
  std::vector<InfoPowerReport> reps;
  for (const auto& p : selected(c)) reps.push_back(info_power_report(p, std::min<std::size_t>(c.grid, 1000000), c.threads));
  std::string text;
  if (fmt == "json") {
    Json arr = Json::array();
    for (const auto& r : reps) {
      Json j;
      j["schema_version"] = kSchemaVersion;
      j["family"] = r.family;
      j["W"] = r.W;
      j["H_min"] = r.H_min;
      j["average_relative_entropy"] = r.average_relative_entropy;
      j["average_relative_entropy_exact"] = average_relative_entropy(2);
      j["uncertainty_bound"] = r.uncertainty_bound ? Json(*r.uncertainty_bound) : Json(nullptr);
      arr.push_back(j);
    }
    text = dump(arr.size() == 1 ? arr.front() : arr);
  } else if (fmt == "csv") {
    text = "# schema_version=" + std::to_string(kSchemaVersion) + "\nfamily,W,H_min,average_relative_entropy\n";
    for (const auto& r : reps)
      text += r.family + "," + format_g17(r.W) + "," + format_g17(r.H_min) + "," + format_g17(r.average_relative_entropy) +
              "\n";
  } else if (fmt == "table") {
    text = pad("family", 20) + pad("W", 10) + pad("H_min", 10) + "mean rel. entropy\n";
    for (const auto& r : reps)
      text += pad(r.family, 20) + pad(fixed(r.W * scale, 5), 10) + pad(fixed(r.H_min * scale, 5), 10) +
              fixed(r.average_relative_entropy * scale, 5) + "\n";
  } else {
    throw UsageError("unknown format '" + fmt + "'");
  }
  emit(c, out, text);
  return kExitOk;
}

int cmd_dynent(const RunConfig& c, std::ostream& out) {
  const auto p = single_povm(c);
  const auto r = parse_rotation(c.rotation);
  const auto m = transition_matrix(r, p);
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["family"] = p.name();
  j["rotation"] = Json::array();
  for (int i = 0; i < 3; ++i) j["rotation"].push_back(vec_json(r.matrix().row(i).transpose()));
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    rows.push_back(row);
  }
  j["transition_matrix"] = rows;
  j["dynamical_entropy"] = dynamical_entropy(r, p);
  j["measurement_entropy"] = measurement_entropy(p);
  Json rates = Json::array();
  for (int n = 1; n <= c.steps; ++n) {
    if (std::pow(static_cast<double>(p.size()), n + 1) > kEnumerationBudget) break;
    rates.push_back(Json{{"n", n}, {"rate", empirical_entropy_rate(r, p, n)}});
  }
  j["empirical_entropy_rates"] = rates;
  emit(c, out, dump(j));
  return kExitOk;
}

int cmd_bifurcation(const RunConfig& c, std::ostream& out) {
  const double a = rectangle_bifurcation_threshold();
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["threshold"] = a;
  j["residual"] = rectangle_bifurcation_function(a);
  j["bracket"] = Json{{"f(0.5)", rectangle_bifurcation_function(0.5)}, {"f(1.5)", rectangle_bifurcation_function(1.5)}};
  Json cases = Json::array();
  for (double alpha : {0.8, 1.4}) {
    ExtremaOptions o;
    o.threads = c.threads;
    const auto ex = find_extrema(make_rectangle_povm(alpha), ExtremumMode::min, o);
    Json pts = Json::array();
    for (const auto& e : ex) pts.push_back(critical_json(e));
    cases.push_back(Json{{"alpha", alpha}, {"minima", pts}});
  }
  j["rectangles"] = cases;
  emit(c, out, dump(j));
  return kExitOk;
}

}  // namespace

std::string format_g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::vector<HsPovm> resolve_families(const std::string& selector) {
  if (selector == "all") {
    std::vector<HsPovm> out{make_hs_povm(Family::digon), make_hs_povm(Family::ngon, 5)};
    for (Family f : hs_families())
      if (f != Family::digon) out.push_back(make_hs_povm(f));
    return out;
  }
  if (selector.rfind("rectangle:", 0) == 0) {
    try {
      return {make_rectangle_povm(std::stod(selector.substr(10)))};
    } catch (const std::logic_error&) {
      throw UsageError("bad rectangle angle in '" + selector + "'");
    }
  }
  try {
    return {make_hs_povm(selector)};
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

EntropyKernel parse_kernel(const std::string& spec) {
  if (spec == "shannon") return EntropyKernel::shannon();
  const auto colon = spec.find(':');
  if (colon != std::string::npos) {
    const std::string name = spec.substr(0, colon);
    double a = 0.0;
    try {
      a = std::stod(spec.substr(colon + 1));
    } catch (const std::logic_error&) {
      throw UsageError("bad kernel parameter in '" + spec + "'");
    }
    if (name == "renyi") return EntropyKernel::renyi(a);
    if (name == "tsallis") return EntropyKernel::tsallis(a);
  }
  throw UsageError("unknown kernel '" + spec + "' (shannon, renyi:A, tsallis:A)");
}

UnitaryAsRotation parse_rotation(const std::string& spec) {
  const auto ap = spec.find("axis=");
  const auto gp = spec.find("angle=");
  if (ap == std::string::npos || gp == std::string::npos || gp < ap)
    throw UsageError("rotation must look like axis=z,angle=0.5");
  std::string axis = spec.substr(ap + 5, gp - ap - 5);
  while (!axis.empty() && (axis.back() == ',' || axis.back() == ' ')) axis.pop_back();
  Eigen::Vector3d ax;
  if (axis == "x") {
    ax = {1, 0, 0};
  } else if (axis == "y") {
    ax = {0, 1, 0};
  } else if (axis == "z") {
    ax = {0, 0, 1};
  } else {
    std::stringstream ss(axis);
    std::string tok;
    std::vector<double> v;
    while (std::getline(ss, tok, ',')) {
      try {
        v.push_back(std::stod(tok));
      } catch (const std::logic_error&) {
        throw UsageError("bad rotation axis '" + axis + "'");
      }
    }
    if (v.size() != 3 || Eigen::Vector3d(v[0], v[1], v[2]).norm() == 0.0)
      throw UsageError("rotation axis needs three coordinates, not all zero");
    ax = {v[0], v[1], v[2]};
  }
  double angle = 0.0;
  try {
    angle = std::stod(spec.substr(gp + 6));
  } catch (const std::logic_error&) {
    throw UsageError("bad rotation angle in '" + spec + "'");
  }
  return UnitaryAsRotation::axis_angle(ax, angle);
}

std::pair<int, int> parse_range(const std::string& spec) {
  const auto dots = spec.find("..");
  try {
    if (dots == std::string::npos) {
      const int n = std::stoi(spec);
      if (n >= 2) return {n, n};
    } else {
      const int lo = std::stoi(spec.substr(0, dots));
      const int hi = std::stoi(spec.substr(dots + 2));
      if (lo >= 2 && hi >= lo) return {lo, hi};
    }
  } catch (const std::logic_error&) {
  }
  throw UsageError("range must look like 3..64 with 2 <= lo <= hi");
}

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    const auto& s = c.subcommand;
    if (c.grid == 0) throw UsageError("--grid must be positive");
    if (s == "generate") return cmd_generate(c, out);
    if (s == "validate") return cmd_validate(c, out);
    if (s == "entropy-map") return cmd_entropy_map(c, out);
    if (s == "minimize") return cmd_minimize(c, out);
    if (s == "classify") return cmd_classify(c, out);
    if (s == "certify") return cmd_certify(c, out, err);
    if (s == "info-power") return cmd_info_power(c, out, err);
    if (s == "ngon-sweep") return cmd_ngon_sweep(c, out);
    if (s == "dynent") return cmd_dynent(c, out);
    if (s == "bifurcation") return cmd_bifurcation(c, out);
    if (s == "table5") return cmd_table5(c, out, err);
    throw UsageError("unknown subcommand '" + s + "'");
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

int run(const RunConfig& config) { return run(config, std::cout, std::cerr); }

}  // namespace povm
