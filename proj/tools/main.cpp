#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ncgeo/config.hpp"
#include "ncgeo/curvature.hpp"
#include "ncgeo/errors.hpp"
#include "ncgeo/parser.hpp"
#include "ncgeo/sampling.hpp"
#include "ncgeo/suites.hpp"

namespace {

using nlohmann::json;
using namespace ncgeo;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInvalidConfig = 2;
constexpr int kExitParseError = 3;

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::UnknownGenerator: return kExitParseError;
    default: return kExitInvalidConfig;
  }
}

void emit(const json& j, bool pretty) {
  if (pretty)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << j.dump() << "\n";
}

json form_matrix_json(const FormMatrix& m) {
  json rows = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& f : row) r.push_back(f.to_string());
    rows.push_back(r);
  }
  return rows;
}

json gamma_json(const ChristoffelSymbols& gamma) {
  int n = gamma.rank();
  json out = json::array();
  for (int i = 1; i <= n; ++i) {
    json plane = json::array();
    for (int j = 1; j <= n; ++j) {
      json row = json::array();
      for (int k = 1; k <= n; ++k) row.push_back(gamma.gamma(i, j, k).to_string());
      plane.push_back(row);
    }
    out.push_back(plane);
  }
  return out;
}

json suite_json(const SuiteReport& rep) {
  json checks = json::array();
  for (const auto& c : rep.checks) {
    json e;
    e["name"] = c.name;
    e["pass"] = c.pass;
    if (!c.detail.empty()) e["detail"] = c.detail;
    checks.push_back(e);
  }
  return json{{"suite", rep.suite}, {"passed", rep.passed()}, {"checks", checks}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Levi-Civita connections, curvature and Gauss-Bonnet integrals on "
               "noncommutative tori, free-group algebras and Cuntz algebras"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::uint64_t seed = 0;
  bool seed_given = false;
  bool force_float = false;
  bool pretty = false;
  bool compact = false;
  app.add_option("-c,--config", config_path, "Path to a JSON config file");
  app.add_option("--seed", seed, "Seed for randomized suites")->each([&](const std::string&) {
    seed_given = true;
  });
  app.add_flag("--float", force_float, "Force floating-point scalars");
  app.add_flag("--pretty", pretty, "Indented JSON output");
  app.add_flag("--json", compact, "Compact JSON output (default)");

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate an expression to normal form");
  std::string expr;
  eval_cmd->add_option("expr", expr, "Expression")->required();

  auto* christoffel_cmd =
      app.add_subcommand("christoffel", "Christoffel symbols of the Levi-Civita connection");
  auto* curvature_cmd =
      app.add_subcommand("curvature", "Connection and curvature forms of the Levi-Civita connection");
  auto* scalar_cmd = app.add_subcommand("scalar", "Ricci and scalar curvature");
  auto* gb_cmd = app.add_subcommand("gauss-bonnet", "Gauss-Bonnet two-form integral (rank two)");
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  std::string suite = "all";
  verify_cmd->add_option("--suite", suite, "levi-civita|bianchi|gb|hopf|algebra|all");

  CLI11_PARSE(app, argc, argv);

  try {
    Config cfg = Config::defaults();
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) fail(ErrorKind::InvalidConfig, "cannot open config file: " + config_path);
      std::stringstream ss;
      ss << in.rdbuf();
      cfg = Config::from_json_text(ss.str());
    }
    if (seed_given) cfg.seed = seed;
    if (force_float) cfg.float_mode = true;

    PresentationPtr pres = cfg.make_presentation();

    if (*eval_cmd) {
      AlgebraElement e = parse_expression(expr, pres);
      emit(json{{"value", e.to_string()}}, pretty);
      return kExitOk;
    }

    if (*christoffel_cmd) {
      Metric g = cfg.make_metric(pres);
      ChristoffelSymbols gamma = christoffel_canonical(g);
      emit(json{{"metric", g.descriptor()}, {"gamma", gamma_json(gamma)}}, pretty);
      return kExitOk;
    }

    if (*curvature_cmd) {
      Metric g = cfg.make_metric(pres);
      ChristoffelSymbols gamma = christoffel_canonical(g);
      emit(json{{"metric", g.descriptor()},
                {"omega", form_matrix_json(connection_forms(gamma))},
                {"Omega", form_matrix_json(curvature_forms(gamma))}},
           pretty);
      return kExitOk;
    }

    if (*scalar_cmd) {
      Metric g = cfg.make_metric(pres);
      ChristoffelSymbols gamma = christoffel_canonical(g);
      RicciScalar rs = ricci_scalar(g, gamma);
      json ric = json::array();
      for (const auto& row : rs.ric) {
        json r = json::array();
        for (const auto& e : row) r.push_back(e.to_string());
        ric.push_back(r);
      }
      emit(json{{"metric", g.descriptor()},
                {"ric", ric},
                {"scal", rs.scal.to_string()},
                {"gaussian", rs.gaussian.to_string()}},
           pretty);
      return kExitOk;
    }

    if (*gb_cmd) {
      Metric g = cfg.make_metric(pres);
      GradedForm omega12 = gauss_bonnet_form(g);
      State tau = State::canonical(pres);
      Scalar integral = integrate_two_form(omega12, tau);
      FormMatrix Omega = curvature_forms(christoffel_canonical(g));
      json checks = json::array();
      // Antisymmetry of the curvature two-forms holds for conformal metrics;
      // for other metrics Omega_21 is reported instead.
      if (g.conformal_factor()) {
        checks.push_back(json{{"name", "Omega12_antisymmetric"},
                              {"pass", (Omega[0][1] + Omega[1][0]).is_zero()}});
      } else {
        checks.push_back(json{{"name", "Omega21"}, {"value", Omega[1][0].to_string()}});
      }
      emit(json{{"metric", g.descriptor()},
                {"integral", integral.to_string()},
                {"form", omega12.to_string()},
                {"checks", checks}},
           pretty);
      return kExitOk;
    }

    if (*verify_cmd) {
      std::vector<SuiteReport> reports;
      auto run_metric_suites = [&](bool with_gb) {
        Metric g = cfg.make_metric(pres);
        reports.push_back(levi_civita_suite(g, cfg.seed));
        reports.push_back(bianchi_suite(g, cfg.seed));
        if (with_gb && pres->rank() == 2) {
          std::vector<DeformationParameter> extra;
          if (auto kd = cfg.conformal_data(pres))
            extra.push_back({kd->first.to_string(), kd->first, kd->second});
          reports.push_back(gb_verification_suite(pres, extra, cfg.seed));
        }
      };
      json extra_payload;
      if (suite == "algebra") {
        reports.push_back(algebra_suite(pres, cfg.seed));
      } else if (suite == "levi-civita") {
        Metric g = cfg.make_metric(pres);
        reports.push_back(levi_civita_suite(g, cfg.seed));
        // Full record list of the torsion/compatibility/sample checks.
        Sampler smp(cfg.seed);
        std::vector<AlgebraElement> samples;
        for (int i = 1; i <= pres->rank(); ++i)
          samples.push_back(AlgebraElement::generator(pres, i));
        for (int i = 0; i < 50; ++i) samples.push_back(smp.random_monomial(pres, 2));
        LeviCivitaReport full = verify_levi_civita(g, christoffel_canonical(g), samples);
        json records = json::array();
        for (const auto& r : full.checks)
          records.push_back(json{{"check", r.check},
                                 {"indices", r.indices},
                                 {"pass", r.pass},
                                 {"lhs", r.lhs},
                                 {"rhs", r.rhs}});
        extra_payload["records"] = records;
      } else if (suite == "bianchi") {
        reports.push_back(bianchi_suite(cfg.make_metric(pres), cfg.seed));
      } else if (suite == "gb") {
        std::vector<DeformationParameter> extra;
        if (auto kd = cfg.conformal_data(pres))
          extra.push_back({kd->first.to_string(), kd->first, kd->second});
        reports.push_back(gb_verification_suite(pres, extra, cfg.seed));
      } else if (suite == "hopf") {
        int n = pres->backend() == Backend::FreeGroup ? pres->rank() : 2;
        reports.push_back(hopf_suite(n, cfg.seed));
      } else if (suite == "all") {
        reports.push_back(algebra_suite(pres, cfg.seed));
        run_metric_suites(true);
        int n = pres->backend() == Backend::FreeGroup ? pres->rank() : 2;
        reports.push_back(hopf_suite(n, cfg.seed));
      } else {
        fail(ErrorKind::InvalidConfig, "unknown suite: " + suite);
      }
      json out = json::array();
      bool all_pass = true;
      for (const auto& r : reports) {
        out.push_back(suite_json(r));
        all_pass = all_pass && r.passed();
      }
      json payload{{"seed", cfg.seed}, {"reports", out}, {"passed", all_pass}};
      for (auto& [k, v] : extra_payload.items()) payload[k] = v;
      emit(payload, pretty);
      return all_pass ? kExitOk : kExitCheckFailed;
    }
  } catch (const Error& e) {
    std::cerr << error_kind_name(e.kind()) << ": " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidConfig;
  }
  return kExitOk;
}
