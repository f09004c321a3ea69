#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jacobi/io.hpp"

namespace jacobi {

/// Runs `fn`, re-raising library errors with the stage name prepended.
template <class Fn> auto run_stage(const std::string &stage, Fn &&fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error &e) {
    throw Error(e.code(), "stage " + stage + ": " + e.message());
  }
}

struct PipelineOptions {
  bool compute_top = false;
  unsigned threads = 1;
  /// Also compute dimension and genus of the first characteristic variety.
  bool invariants = false;
  FieldConfig invariants_field = FieldConfig::prime_field(32003);
};

struct StageTiming {
  std::string stage;
  double seconds;
};

struct PipelineResult {
  CoeffMatrix matrix;
  JacobianRing jacobian;
  GradedBasis basis;
  ThetaMatrices theta;
  CharVariety first;
  CharVariety second;
  PlethysmReport plethysm;
  std::optional<VarietyInvariants> invariants;
  std::vector<StageTiming> timings;
};

/// cohomology -> higgs -> charvar1 -> charvar2 -> plethysm (-> invariants).
PipelineResult run_pipeline(const CoeffMatrix &a, const PipelineOptions &options = {});

/// FNV-1a 64-bit over the compact JSON of the equations, as 16 hex digits.
std::string equations_digest(const CharVariety &v);

/// The combined report. Wall times are included only on request so that
/// the default report is byte-reproducible.
Json pipeline_report(const PipelineResult &r, bool include_timings = false);

} // namespace jacobi
