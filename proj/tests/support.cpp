#include "support.hpp"

#include <mutex>

using namespace jacobi;

namespace support {

CoeffMatrix lambda_1_8_matrix() {
  FieldConfig q = FieldConfig::rationals();
  std::vector<Scalar> lambda;
  for (int i = 1; i <= 8; ++i) lambda.push_back(q.from_int(i));
  GenConfig cfg;
  cfg.mode = MatrixMode::Hyperelliptic;
  return generate_matrix(cfg, std::nullopt, lambda);
}

const PipelineResult &lambda_1_8() {
  static const PipelineResult r = run_pipeline(lambda_1_8_matrix(), PipelineOptions{false, 4, false});
  return r;
}

const Json &oracle() {
  static const Json j = read_json_file(JACOBI_FIXTURE_DIR "/oracle_lambda_1_8.json");
  return j;
}

Scalar random_rational(std::mt19937_64 &rng, int range) {
  std::uniform_int_distribution<int> num(-range, range), den(1, range);
  return Scalar::rational(mpq_class(num(rng), den(rng)));
}

Scalar random_element(std::mt19937_64 &rng, const FieldConfig &field, int range) {
  if (field.is_rational()) return random_rational(rng, range);
  std::uniform_int_distribution<long long> d(0, static_cast<long long>(field.modulus()) - 1);
  return field.from_int(d(rng));
}

Polynomial random_polynomial(std::mt19937_64 &rng, const RingPtr &ring, std::size_t terms, unsigned max_degree) {
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  std::vector<Term> ts;
  for (std::size_t t = 0; t < terms; ++t) {
    auto mons = monomials_of_degree(ring->nvars(), deg(rng));
    std::uniform_int_distribution<std::size_t> pick(0, mons.size() - 1);
    ts.push_back(Term{mons[pick(rng)], random_element(rng, ring->field(), 9)});
  }
  return Polynomial::from_terms(ring, std::move(ts));
}

} // namespace support
