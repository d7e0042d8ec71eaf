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

#include "fillmore/generate.hpp"

namespace fillmore {

std::string matrix_shape_name(MatrixShape shape) {
    switch (shape) {
    case MatrixShape::Dense: return "dense";
    case MatrixShape::Diagonal: return "diagonal";
    case MatrixShape::SparseOneOffdiag: return "sparse-one-offdiag";
    }
    throw InternalError("unknown matrix shape");
}

MatrixShape matrix_shape_from_name(const std::string& name) {
    if (name == "dense") return MatrixShape::Dense;
    if (name == "diagonal") return MatrixShape::Diagonal;
    if (name == "sparse-one-offdiag") return MatrixShape::SparseOneOffdiag;
    throw ParseError("unknown matrix shape '" + name + "'");
}

Scalar draw_scalar(const RingSpec& ring, std::uint64_t bound, SplitMix64& rng) {
    switch (ring.kind()) {
    case RingKind::Integer: {
        long v = static_cast<long>(rng.below(2 * bound + 1)) - static_cast<long>(bound);
        return Scalar::from_int(ring, v);
    }
    case RingKind::Rational: {
        long num = static_cast<long>(rng.below(2 * bound + 1)) - static_cast<long>(bound);
        long den = static_cast<long>(rng.below(bound)) + 1;
        return Scalar::from_rat(normalize(Int(num), Int(den)));
    }
    case RingKind::PrimeField:
        return Scalar::from_int(ring, static_cast<long>(rng.below(ring.modulus())));
    }
    throw InternalError("unreachable ring kind");
}

namespace {

Scalar draw_nonzero(const RingSpec& ring, std::uint64_t bound, SplitMix64& rng) {
    for (int attempt = 0; attempt < 256; ++attempt) {
        Scalar v = draw_scalar(ring, bound, rng);
        if (!v.is_zero()) return v;
    }
    throw InternalError("could not draw a nonzero scalar");
}

Matrix draw_matrix(const GenSpec& spec, SplitMix64& rng) {
    Matrix m(spec.n, spec.ring);
    switch (spec.shape) {
    case MatrixShape::Dense:
        for (int i = 0; i < spec.n; ++i)
            for (int j = 0; j < spec.n; ++j)
                m.set(i, j, draw_scalar(spec.ring, spec.entry_bound, rng));
        break;
    case MatrixShape::Diagonal:
        for (int i = 0; i < spec.n; ++i)
            m.set(i, i, draw_scalar(spec.ring, spec.entry_bound, rng));
        break;
    case MatrixShape::SparseOneOffdiag: {
        for (int i = 0; i < spec.n; ++i)
            m.set(i, i, draw_scalar(spec.ring, spec.entry_bound, rng));
        int i = static_cast<int>(rng.below(spec.n));
        int j = static_cast<int>(rng.below(spec.n - 1));
        if (j >= i) ++j;
        m.set(i, j, draw_nonzero(spec.ring, spec.entry_bound, rng));
        break;
    }
    }
    return m;
}

} // namespace

Matrix gen_matrix(const GenSpec& spec) {
    if (spec.n < 2) throw PreconditionError("generator needs n >= 2");
    if (spec.entry_bound < 1) throw PreconditionError("generator needs entry_bound >= 1");
    SplitMix64 rng(spec.seed);
    for (int attempt = 0; attempt < 64; ++attempt) {
        Matrix m = draw_matrix(spec, rng);
        if (!is_scalar(m)) return m;
    }
    throw PreconditionError("exhausted retries drawing a nonscalar " +
                            matrix_shape_name(spec.shape) + " matrix over " + spec.ring.name());
}

DiagonalSpec gen_diagonal_spec(const Matrix& a, std::uint64_t seed, std::uint64_t bound) {
    SplitMix64 rng(seed);
    DiagonalSpec gamma;
    Scalar remaining = trace(a);
    for (int i = 0; i + 1 < a.order(); ++i) {
        Scalar g = draw_scalar(a.ring(), bound, rng);
        gamma.targets.push_back(g);
        remaining = remaining - g;
    }
    gamma.targets.push_back(remaining);
    return gamma;
}

} // namespace fillmore
