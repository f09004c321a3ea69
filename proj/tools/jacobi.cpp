// Command-line front end: one subcommand per pipeline stage plus `all`.

#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "jacobi/pipeline.hpp"

using namespace jacobi;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitAssertion = 2;

struct FieldOptions {
  std::string field = "rational";
  std::uint64_t modulus = 32003;

  FieldConfig config() const {
    if (field == "rational") return FieldConfig::rationals();
    return FieldConfig::prime_field(modulus);
  }
};

struct SourceOptions {
  bool random = false;
  bool hyperelliptic = false;
  bool user = false;
  std::string lambda;
  std::string entries;
  std::string input;
  std::optional<std::uint64_t> seed;
  int randrange = 10;
  std::size_t max_attempts = 10000;
};

struct StageOptions {
  std::string input;
  std::string output;
  bool compute_top = false;
  bool check_user_matrix = false;
  std::string dump_gb;
  unsigned threads = 1;
  bool invariants = false;
  bool invariants_rational = false;
  std::uint64_t invariants_modulus = 32003;
  bool timings = false;
};

std::vector<std::string> split(const std::string &text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, sep);)
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<Scalar> parse_scalars(const std::string &text, const FieldConfig &field) {
  std::vector<Scalar> out;
  for (const auto &item : split(text, ',')) out.push_back(field.parse(item));
  return out;
}

void emit(const Json &j, const std::string &output) {
  if (output.empty() || output == "-") std::cout << dump_json(j);
  else write_json_file(output, j);
}

/// Resolves the coefficient matrix from a file or from generation flags.
CoeffMatrix obtain_matrix(const SourceOptions &src, const FieldOptions &fopt) {
  if (!src.input.empty())
    return run_stage("gen-matrix", [&] { return coeff_matrix_from_json(read_json_file(src.input)); });
  return run_stage("gen-matrix", [&] {
    const int modes = int(src.random) + int(src.hyperelliptic) + int(src.user);
    if (modes > 1) throw Error(ErrorCode::InvalidConfig, "choose one of --random, --hyperelliptic, --user");
    GenConfig cfg;
    cfg.field = fopt.config();
    cfg.mode = src.random ? MatrixMode::Random : src.user ? MatrixMode::User : MatrixMode::Hyperelliptic;
    cfg.randrange = src.randrange;
    cfg.max_attempts = src.max_attempts;
    cfg.seed = src.seed ? *src.seed : std::random_device{}();
    std::optional<ExactMatrix> entries;
    if (!src.entries.empty()) {
      std::vector<Vector> rows;
      for (const auto &row : split(src.entries, ';')) rows.push_back(parse_scalars(row, cfg.field));
      entries = ExactMatrix::from_rows(rows, cfg.field);
    }
    std::optional<std::vector<Scalar>> lambda;
    if (!src.lambda.empty()) lambda = parse_scalars(src.lambda, cfg.field);
    if (cfg.mode != MatrixMode::User && entries)
      throw Error(ErrorCode::InvalidConfig, "--entries needs --user");
    if (cfg.mode != MatrixMode::Hyperelliptic && lambda)
      throw Error(ErrorCode::InvalidConfig, "--lambda needs --hyperelliptic");
    return generate_matrix(cfg, entries, lambda);
  });
}

void check_matrix(const CoeffMatrix &a, bool check_user) {
  if (a.provenance != MatrixMode::User) return;
  if (!check_user) {
    std::cerr << "warning: user matrix is not checked for non-degeneracy (use --check-user-matrix)\n";
    return;
  }
  run_stage("gen-matrix", [&] {
    auto report = check_nondegenerate(a.entries);
    if (!report.ok) {
      const auto &s = *report.first_failing;
      throw Error(ErrorCode::DegenerateMatrix, "the minor on columns {" + std::to_string(s[0]) + "," +
                                                   std::to_string(s[1]) + "," + std::to_string(s[2]) + "," +
                                                   std::to_string(s[3]) + "} vanishes");
    }
    return 0;
  });
}

struct Prepared {
  JacobianRing jr;
  GradedBasis basis;
};

Prepared prepare(const CoeffMatrix &a, const StageOptions &opt) {
  check_matrix(a, opt.check_user_matrix);
  return run_stage("cohomology", [&] {
    JacobianRing jr = build_jacobian_ring(a);
    if (!opt.dump_gb.empty()) {
      Json gb = Json::array();
      for (const auto &g : jr.ideal.basis()) gb.push_back(polynomial_to_json(g));
      write_json_file(opt.dump_gb, gb);
    }
    GradedBasis basis = compute_graded_basis(jr, BasisOptions{opt.compute_top, opt.threads, true});
    return Prepared{std::move(jr), std::move(basis)};
  });
}

/// Q-equations are reduced mod the chosen prime unless --invariants-rational;
/// F_p-equations stay in F_p.
FieldConfig invariants_field(const StageOptions &opt, const FieldConfig &source) {
  if (!source.is_rational()) return source;
  return opt.invariants_rational ? FieldConfig::rationals() : FieldConfig::prime_field(opt.invariants_modulus);
}

Json invariants_or_empty(const CharVariety &v, const FieldConfig &field) {
  try {
    return invariants_to_json(charvar_dimension_genus(v, field));
  } catch (const Error &e) {
    if (e.code() != ErrorCode::IdealIsUnit) throw;
    Json j;
    j["dimension"] = -1;
    j["genus"] = nullptr;
    j["hilbert_polynomial"] = "0";
    j["invariants_field"] = field_to_json(field);
    return j;
  }
}

std::string block_report(const ThetaMatrices &t, const GradedBasis &b) {
  std::ostringstream out;
  const auto offs = b.offsets();
  const auto dims = b.dims();
  for (std::size_t j = 0; j < t.size(); ++j) {
    out << "theta[" << j << "]:";
    for (std::size_t p = 0; p < 4; ++p)
      for (std::size_t q = 0; q < 4; ++q) {
        std::size_t nz = 0;
        for (std::size_t k = 0; k < dims[p]; ++k)
          for (std::size_t l = 0; l < dims[q]; ++l) nz += !t[j](offs[p] + k, offs[q] + l).is_zero();
        if (nz) out << " R" << p << "->R" << q << ":" << nz;
      }
    out << "\n";
  }
  return out.str();
}

int exit_code_for(ErrorCode code) {
  switch (code) {
  case ErrorCode::UnexpectedDimensions:
  case ErrorCode::GradingViolation:
  case ErrorCode::TopClassInvalid:
  case ErrorCode::ResidueOffBasis:
  case ErrorCode::DegenerateMatrix: return kExitAssertion;
  default: return kExitUsage;
  }
}

void add_field_options(CLI::App *cmd, FieldOptions &f) {
  cmd->add_option("--field", f.field, "Coefficient field")
      ->check(CLI::IsMember({"rational", "gfp"}))
      ->envname("JACOBI_FIELD")
      ->capture_default_str();
  cmd->add_option("--modulus", f.modulus, "Prime modulus for --field gfp")
      ->envname("JACOBI_MODULUS")
      ->capture_default_str();
}

void add_source_options(CLI::App *cmd, SourceOptions &s) {
  cmd->add_flag("--random", s.random, "Random entries");
  cmd->add_flag("--hyperelliptic", s.hyperelliptic, "Vandermonde rows lambda_j^i (default mode)");
  cmd->add_flag("--user", s.user, "Entries supplied with --entries");
  cmd->add_option("--lambda", s.lambda, "Eight comma-separated lambda values");
  cmd->add_option("--entries", s.entries, "Four ';'-separated rows of eight ','-separated entries");
  cmd->add_option("--seed", s.seed, "RNG seed (drawn and recorded when absent)");
  cmd->add_option("--randrange", s.randrange, "Sample from [-N+1, N-1]")->capture_default_str();
  cmd->add_option("--max-attempts", s.max_attempts, "Retry cap for sampling")->capture_default_str();
}

void add_stage_options(CLI::App *cmd, StageOptions &o, bool needs_input) {
  auto *in = cmd->add_option("-i,--input", o.input, "Matrix JSON from gen-matrix");
  if (needs_input) in->required()->check(CLI::ExistingFile);
  cmd->add_option("-o,--output", o.output, "Output file (stdout when absent)");
  cmd->add_flag("--compute-top", o.compute_top, "Enumerate R_3 instead of verifying x7^6*y4^3");
  cmd->add_flag("--check-user-matrix", o.check_user_matrix, "Check the minors of a user matrix");
  cmd->add_option("--dump-gb", o.dump_gb, "Write the reduced Groebner basis as JSON");
  cmd->add_option("--threads", o.threads, "Worker threads for normal-form scans")
      ->envname("JACOBI_THREADS")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

void add_invariant_options(CLI::App *cmd, StageOptions &o) {
  cmd->add_flag("--invariants", o.invariants, "Compute dimension and arithmetic genus");
  cmd->add_flag("--invariants-rational", o.invariants_rational, "Compute the invariants over Q");
  cmd->add_option("--invariants-modulus", o.invariants_modulus, "Prime for the invariants")->capture_default_str();
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Jacobian ring pipeline: cohomology basis, Higgs field, characteristic varieties, plethysm"};
  app.require_subcommand(1);

  FieldOptions fopt;
  SourceOptions src;
  StageOptions opt;

  auto *gen = app.add_subcommand("gen-matrix", "Produce an admissible 4x8 coefficient matrix");
  add_field_options(gen, fopt);
  add_source_options(gen, src);
  gen->add_option("-o,--output", opt.output, "Output file (stdout when absent)");

  auto *coh = app.add_subcommand("cohomology", "Graded monomial basis of the Jacobian ring");
  add_stage_options(coh, opt, true);
  auto *hig = app.add_subcommand("higgs", "The nine theta matrices");
  add_stage_options(hig, opt, true);
  auto *cv1 = app.add_subcommand("charvar1", "Nine quadrics of the first characteristic variety");
  add_stage_options(cv1, opt, true);
  add_invariant_options(cv1, opt);
  auto *cv2 = app.add_subcommand("charvar2", "Cubic of the second characteristic variety");
  add_stage_options(cv2, opt, true);
  add_invariant_options(cv2, opt);
  auto *ple = app.add_subcommand("plethysm", "Dimensions of U51, U42, U33 against the bound 65");
  add_stage_options(ple, opt, true);

  auto *all = app.add_subcommand("all", "Run every stage and write one combined report");
  add_field_options(all, fopt);
  add_source_options(all, src);
  add_stage_options(all, opt, false);
  add_invariant_options(all, opt);
  all->add_flag("--timings", opt.timings, "Include wall times per stage (breaks byte-reproducibility)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  try {
    if (gen->parsed()) {
      CoeffMatrix a = obtain_matrix(src, fopt);
      if (a.provenance == MatrixMode::User)
        std::cerr << "warning: user matrix is not checked for non-degeneracy\n";
      emit(coeff_matrix_to_json(a), opt.output);
      return 0;
    }

    if (all->parsed()) {
      src.input = opt.input;
      CoeffMatrix a = obtain_matrix(src, fopt);
      check_matrix(a, opt.check_user_matrix);
      PipelineOptions popt;
      popt.compute_top = opt.compute_top;
      popt.threads = opt.threads;
      popt.invariants = false;
      PipelineResult r = run_pipeline(a, popt);
      if (!opt.dump_gb.empty()) {
        Json gb = Json::array();
        for (const auto &g : r.jacobian.ideal.basis()) gb.push_back(polynomial_to_json(g));
        write_json_file(opt.dump_gb, gb);
      }
      Json report = pipeline_report(r, false);
      if (opt.invariants) {
        auto t0 = std::chrono::steady_clock::now();
        report["invariants"] = run_stage("invariants", [&] { return invariants_or_empty(r.first, invariants_field(opt, a.field())); });
        r.timings.push_back({"invariants", std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()});
      }
      if (opt.timings) {
        Json t;
        for (const auto &s : r.timings) t[s.stage] = s.seconds;
        report["timings"] = std::move(t);
      }
      emit(report, opt.output);
      return 0;
    }

    CoeffMatrix a = run_stage("gen-matrix", [&] { return coeff_matrix_from_json(read_json_file(opt.input)); });
    Prepared prep = prepare(a, opt);
    const auto &jr = prep.jr;
    const auto &basis = prep.basis;

    if (coh->parsed()) {
      emit(basis_to_json(basis), opt.output);
    } else if (hig->parsed()) {
      auto theta = run_stage("higgs", [&] { return compute_theta_matrices(jr, basis, opt.threads); });
      std::cerr << block_report(theta, basis);
      Json j;
      j["theta"] = theta_to_json(theta);
      emit(j, opt.output);
    } else if (cv1->parsed() || cv2->parsed()) {
      const bool first = cv1->parsed();
      const std::string stage = first ? "charvar1" : "charvar2";
      auto v = run_stage(stage, [&] {
        return first ? charvar_first(jr, basis, opt.threads) : charvar_second(jr, basis, opt.threads);
      });
      Json j;
      j["equations"] = equations_to_json(v);
      j["digest"] = equations_digest(v);
      if (opt.invariants) j["invariants"] = run_stage(stage, [&] { return invariants_or_empty(v, invariants_field(opt, a.field())); });
      emit(j, opt.output);
    } else if (ple->parsed()) {
      auto theta = run_stage("higgs", [&] { return compute_theta_matrices(jr, basis, opt.threads); });
      auto rep = run_stage("plethysm", [&] { return run_plethysm(theta, opt.threads); });
      Json j;
      j["provenance"] = coeff_matrix_to_json(a);
      Json body = plethysm_to_json(rep);
      for (auto &[k, v] : body.items()) j[k] = v;
      emit(j, opt.output);
    }
    return 0;
  } catch (const Error &e) {
    std::cerr << "jacobi: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception &e) {
    std::cerr << "jacobi: " << e.what() << "\n";
    return kExitUsage;
  }
}
