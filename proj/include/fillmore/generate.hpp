/*
 * Copyright 2026 The fillmore authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

/**
 * @file generate.hpp
 * @brief Seeded generation of valid problem instances.
 *
 * Determinism is part of the contract: the generator uses SplitMix64 with
 * its published constants (increment 0x9E3779B97F4A7C15, mixers
 * 0xBF58476D1CE4E5B9 and 0x94D049BB133111EB, shifts 30/27/31) and plain
 * modulo range reduction, so identical specs reproduce identical instances
 * on every platform and in every language that follows the same recipe.
 */

#include <cstdint>

#include "fillmore/matrix.hpp"

namespace fillmore {

/// SplitMix64 pseudorandom generator.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish draw in [0, bound) by modulo reduction (bound >= 1).
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t state_;
};

enum class MatrixShape { Dense, Diagonal, SparseOneOffdiag };

std::string matrix_shape_name(MatrixShape shape);
MatrixShape matrix_shape_from_name(const std::string& name);

/// What to generate: ring, order, entry magnitude bound, seed, shape.
struct GenSpec {
    RingSpec ring;
    int n;
    std::uint64_t entry_bound;
    std::uint64_t seed;
    MatrixShape shape;
};

/// One scalar draw; Z entries land in [-bound, bound], Q entries have
/// numerator in [-bound, bound] and denominator in [1, bound], GF entries
/// are uniform residues.
Scalar draw_scalar(const RingSpec& ring, std::uint64_t bound, SplitMix64& rng);

/**
 * Deterministic nonscalar matrix of the requested shape. Scalar draws are
 * rejected and redrawn (bounded retries; exhaustion only happens for
 * degenerate shapes over tiny fields and is an error).
 */
Matrix gen_matrix(const GenSpec& spec);

/**
 * Random targets with the trace condition built in: the first n-1 entries
 * are free draws, the last is tr A minus their sum.
 */
DiagonalSpec gen_diagonal_spec(const Matrix& a, std::uint64_t seed, std::uint64_t bound = 9);

} // namespace fillmore
