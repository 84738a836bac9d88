#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ncgeo/metric.hpp"

namespace ncgeo {

// Runtime configuration: algebra presentation, metric and options, read from
// JSON. See README for the schema.
struct Config {
  Backend backend = Backend::NCTorus;
  int n = 2;
  std::vector<std::vector<std::string>> theta;  // nc-torus only
  bool float_mode = false;
  std::uint64_t seed = 0;

  struct MetricSpec {
    enum class Type { G0, Conformal, Diagonal, Matrix };
    Type type = Type::G0;
    std::string k, k_inv;                          // conformal
    std::vector<std::string> entries;              // diagonal
    std::vector<std::string> entry_invs;           // diagonal, optional
    std::vector<std::vector<std::string>> matrix;  // matrix
    std::string det_inv;                           // matrix, optional certificate
  };
  MetricSpec metric;

  static Config defaults();
  // Parses and validates; throws Error(InvalidConfig / ParseError).
  static Config from_json_text(const std::string& text);

  PresentationPtr make_presentation() const;
  Metric make_metric(const PresentationPtr& pres) const;
  // (k, k_inv) when the metric is conformal (g0 counts with k = 1).
  std::optional<std::pair<AlgebraElement, AlgebraElement>> conformal_data(
      const PresentationPtr& pres) const;
};

}  // namespace ncgeo
