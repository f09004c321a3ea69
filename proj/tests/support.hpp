#pragma once

#include <random>

#include "jacobi/pipeline.hpp"

namespace support {

/// The hyperelliptic matrix for lambda = (1, ..., 8) over Q.
jacobi::CoeffMatrix lambda_1_8_matrix();
/// Full pipeline for that matrix, computed once per process.
const jacobi::PipelineResult &lambda_1_8();
/// Oracle values frozen from the independent sympy run.
const jacobi::Json &oracle();

/// Uniform rational p/q with |p| <= range and 1 <= q <= range.
jacobi::Scalar random_rational(std::mt19937_64 &rng, int range = 20);
jacobi::Scalar random_element(std::mt19937_64 &rng, const jacobi::FieldConfig &field, int range = 20);
jacobi::Polynomial random_polynomial(std::mt19937_64 &rng, const jacobi::RingPtr &ring, std::size_t terms,
                                     unsigned max_degree);

} // namespace support
