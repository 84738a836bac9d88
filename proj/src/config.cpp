#include "ncgeo/config.hpp"

#include <json.hpp>

#include "ncgeo/errors.hpp"
#include "ncgeo/parser.hpp"

namespace ncgeo {

namespace {

using nlohmann::json;

bool looks_decimal(const std::string& s) {
  return s.find('.') != std::string::npos || s.find('e') != std::string::npos ||
         s.find('E') != std::string::npos;
}

std::string theta_as_string(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number_float()) {
    std::ostringstream os;
    os.precision(17);
    os << v.get<double>();
    return os.str();
  }
  fail(ErrorKind::InvalidConfig, "theta entries must be rational strings or numbers");
}

}  // namespace

Config Config::defaults() {
  Config c;
  c.backend = Backend::NCTorus;
  c.n = 2;
  c.theta = {{"0", "1/4"}, {"-1/4", "0"}};
  return c;
}

Config Config::from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorKind::InvalidConfig, std::string("config is not valid JSON: ") + e.what());
  }
  Config c = defaults();
  c.theta.clear();

  if (j.contains("algebra")) {
    const json& a = j.at("algebra");
    std::string type = a.value("type", "nc-torus");
    if (type == "nc-torus")
      c.backend = Backend::NCTorus;
    else if (type == "free-group")
      c.backend = Backend::FreeGroup;
    else if (type == "cuntz")
      c.backend = Backend::Cuntz;
    else
      fail(ErrorKind::InvalidConfig, "unknown algebra type: " + type);
    c.n = a.value("n", 2);
    if (a.contains("theta")) {
      if (c.backend != Backend::NCTorus)
        fail(ErrorKind::InvalidConfig, "theta is only meaningful for the nc-torus");
      for (const auto& row : a.at("theta")) {
        std::vector<std::string> r;
        for (const auto& v : row) r.push_back(theta_as_string(v));
        c.theta.push_back(std::move(r));
      }
    }
  }
  if (c.backend == Backend::NCTorus && c.theta.empty()) {
    // Default skew matrix with 1/4 above the diagonal.
    c.theta.assign(static_cast<std::size_t>(c.n),
                   std::vector<std::string>(static_cast<std::size_t>(c.n), "0"));
    for (int k = 0; k < c.n; ++k)
      for (int l = k + 1; l < c.n; ++l) {
        c.theta[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)] = "1/4";
        c.theta[static_cast<std::size_t>(l)][static_cast<std::size_t>(k)] = "-1/4";
      }
  }

  if (j.contains("metric")) {
    const json& m = j.at("metric");
    std::string type = m.value("type", "g0");
    if (type == "g0") {
      c.metric.type = MetricSpec::Type::G0;
    } else if (type == "conformal") {
      c.metric.type = MetricSpec::Type::Conformal;
      if (!m.contains("k")) fail(ErrorKind::InvalidConfig, "conformal metric needs k");
      c.metric.k = m.at("k").get<std::string>();
      c.metric.k_inv = m.value("k_inv", "");
    } else if (type == "diagonal") {
      c.metric.type = MetricSpec::Type::Diagonal;
      if (!m.contains("entries")) fail(ErrorKind::InvalidConfig, "diagonal metric needs entries");
      for (const auto& e : m.at("entries")) c.metric.entries.push_back(e.get<std::string>());
      if (m.contains("entry_invs"))
        for (const auto& e : m.at("entry_invs")) c.metric.entry_invs.push_back(e.get<std::string>());
    } else if (type == "matrix") {
      c.metric.type = MetricSpec::Type::Matrix;
      if (!m.contains("entries")) fail(ErrorKind::InvalidConfig, "matrix metric needs entries");
      for (const auto& row : m.at("entries")) {
        std::vector<std::string> r;
        for (const auto& e : row) r.push_back(e.get<std::string>());
        c.metric.matrix.push_back(std::move(r));
      }
      if (m.contains("certified_inverses")) {
        const json& ci = m.at("certified_inverses");
        if (ci.contains("det")) c.metric.det_inv = ci.at("det").get<std::string>();
      }
    } else {
      fail(ErrorKind::InvalidConfig, "unknown metric type: " + type);
    }
  }

  if (j.contains("options")) {
    const json& o = j.at("options");
    c.float_mode = o.value("float_mode", false);
    c.seed = o.value("seed", 0ULL);
  }
  return c;
}

PresentationPtr Config::make_presentation() const {
  switch (backend) {
    case Backend::FreeGroup: return Presentation::free_group(n, float_mode);
    case Backend::Cuntz: return Presentation::cuntz(n, float_mode);
    case Backend::NCTorus: break;
  }
  if (theta.size() != static_cast<std::size_t>(n))
    fail(ErrorKind::InvalidConfig, "theta must be an n x n matrix");
  bool any_decimal = false;
  for (const auto& row : theta)
    for (const auto& v : row)
      if (looks_decimal(v)) any_decimal = true;
  if (any_decimal) {
    if (!float_mode)
      fail(ErrorKind::InvalidConfig, "irrational (decimal) theta entries require float_mode");
    std::vector<std::vector<double>> td;
    for (const auto& row : theta) {
      std::vector<double> r;
      for (const auto& v : row) r.push_back(std::stod(v));
      td.push_back(std::move(r));
    }
    return Presentation::nc_torus_float(n, std::move(td));
  }
  std::vector<std::vector<Rat>> tr;
  for (const auto& row : theta) {
    std::vector<Rat> r;
    for (const auto& v : row) r.push_back(rat_from_string(v));
    tr.push_back(std::move(r));
  }
  return Presentation::nc_torus(n, std::move(tr), float_mode);
}

Metric Config::make_metric(const PresentationPtr& pres) const {
  switch (metric.type) {
    case MetricSpec::Type::G0: return Metric::euclidean(pres);
    case MetricSpec::Type::Conformal: {
      AlgebraElement k = parse_expression(metric.k, pres);
      std::optional<AlgebraElement> kinv;
      if (!metric.k_inv.empty()) kinv = parse_expression(metric.k_inv, pres);
      return Metric::conformal(pres, k, kinv);
    }
    case MetricSpec::Type::Diagonal: {
      std::vector<AlgebraElement> entries;
      for (const auto& e : metric.entries) entries.push_back(parse_expression(e, pres));
      std::vector<std::optional<AlgebraElement>> invs(entries.size(), std::nullopt);
      for (std::size_t i = 0; i < metric.entry_invs.size() && i < invs.size(); ++i)
        if (!metric.entry_invs[i].empty())
          invs[i] = parse_expression(metric.entry_invs[i], pres);
      return Metric::diagonal(pres, std::move(entries), std::move(invs));
    }
    case MetricSpec::Type::Matrix: {
      std::vector<std::vector<AlgebraElement>> rows;
      for (const auto& row : metric.matrix) {
        std::vector<AlgebraElement> r;
        for (const auto& e : row) r.push_back(parse_expression(e, pres));
        rows.push_back(std::move(r));
      }
      std::optional<AlgebraElement> det_inv;
      if (!metric.det_inv.empty()) det_inv = parse_expression(metric.det_inv, pres);
      return Metric::build(pres, std::move(rows), std::move(det_inv));
    }
  }
  fail(ErrorKind::InvalidConfig, "unknown metric type");
}

std::optional<std::pair<AlgebraElement, AlgebraElement>> Config::conformal_data(
    const PresentationPtr& pres) const {
  if (metric.type == MetricSpec::Type::G0)
    return std::make_pair(AlgebraElement::one(pres), AlgebraElement::one(pres));
  if (metric.type != MetricSpec::Type::Conformal) return std::nullopt;
  AlgebraElement k = parse_expression(metric.k, pres);
  std::optional<AlgebraElement> hint;
  if (!metric.k_inv.empty()) hint = parse_expression(metric.k_inv, pres);
  return std::make_pair(k, certified_inverse(k, hint, "deformation parameter"));
}

}  // namespace ncgeo
