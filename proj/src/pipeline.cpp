#include "jacobi/pipeline.hpp"

#include <cstdio>

namespace jacobi {

namespace {

template <class Fn> auto timed(std::vector<StageTiming> &timings, const std::string &stage, Fn &&fn) {
  auto t0 = std::chrono::steady_clock::now();
  auto out = run_stage(stage, std::forward<Fn>(fn));
  timings.push_back({stage, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()});
  return out;
}

} // namespace

PipelineResult run_pipeline(const CoeffMatrix &a, const PipelineOptions &options) {
  std::vector<StageTiming> timings;
  const unsigned threads = options.threads;
  auto [jr, basis] = timed(timings, "cohomology", [&] {
    JacobianRing ring = build_jacobian_ring(a);
    GradedBasis b = compute_graded_basis(ring, BasisOptions{options.compute_top, threads, true});
    return std::pair{std::move(ring), std::move(b)};
  });
  auto theta = timed(timings, "higgs", [&] { return compute_theta_matrices(jr, basis, threads); });
  auto first = timed(timings, "charvar1", [&] { return charvar_first(jr, basis, threads); });
  auto second = timed(timings, "charvar2", [&] { return charvar_second(jr, basis, threads); });
  auto pleth = timed(timings, "plethysm", [&] { return run_plethysm(theta, threads); });
  std::optional<VarietyInvariants> inv;
  if (options.invariants)
    inv = timed(timings, "invariants", [&] { return charvar_dimension_genus(first, options.invariants_field); });
  return PipelineResult{a,      std::move(jr),     std::move(basis), std::move(theta),  std::move(first),
                        std::move(second), pleth, std::move(inv),   std::move(timings)};
}

std::string equations_digest(const CharVariety &v) {
  std::string text = equations_to_json(v).dump();
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json pipeline_report(const PipelineResult &r, bool include_timings) {
  Json j;
  j["provenance"] = coeff_matrix_to_json(r.matrix);
  j["groebner_basis_size"] = r.jacobian.ideal.basis().size();
  j["dims"] = r.basis.dims();
  j["total_dim"] = r.basis.total_dim();
  j["basis"] = basis_to_json(r.basis)["components"];
  j["charvar1"] = {{"equations", r.first.equations.size()}, {"digest", equations_digest(r.first)}};
  j["charvar2"] = {{"equations", r.second.equations.size()}, {"digest", equations_digest(r.second)}};
  j["plethysm"] = plethysm_to_json(r.plethysm);
  if (r.invariants) j["invariants"] = invariants_to_json(*r.invariants);
  if (include_timings) {
    Json t;
    for (const auto &s : r.timings) t[s.stage] = s.seconds;
    j["timings"] = std::move(t);
  }
  return j;
}

} // namespace jacobi
