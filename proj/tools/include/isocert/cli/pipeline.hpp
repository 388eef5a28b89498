#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "isocert/cli/reports.hpp"

namespace isocert::cli {

struct PipelineParams {
  std::string S = "8";
  std::string A3 = "1";
  double eps0 = 0.1;
  double delta1 = 0.05;
  /// Mollifier width; defaults to delta1 when <= 0.
  double delta = 0.0;
  /// Minimal gap for the L_i certificate; defaults to 0.05 sqrt(S) when <= 0.
  double tau = 0.0;
  std::uint64_t li_samples = 10000;
  std::size_t property_samples = 10000;
  std::size_t k_samples = 100000;
  std::uint64_t seed = 20240229;
  unsigned threads = 1;
};

struct Ingredient {
  std::string name;
  /// passed, failed or inconclusive
  std::string verdict;
  std::vector<json> records;
};

struct PipelineSummary {
  std::vector<Ingredient> ingredients;
  bool pass = false;
  bool inconclusive = false;
  std::string verdict;
  std::vector<std::string> failures;
};

PipelineSummary run_pipeline(const PipelineParams& p);

/// Summary record followed by every ingredient record.
json pipeline_json(const PipelineSummary& s, const PipelineParams& p);

}  // namespace isocert::cli
