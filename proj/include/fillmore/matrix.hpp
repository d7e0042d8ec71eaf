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
 * @file matrix.hpp
 * @brief Dense exact square matrices: conjugation, inversion, permutation
 * similarity, trace, scalar/diagonal predicates, division-free
 * characteristic polynomial.
 *
 * Matrices are value types. Entry access is 0-based; pivot/step indices in
 * traces and messages are 1-based because that is how they are reported.
 */

#include <string>
#include <string_view>
#include <vector>

#include "fillmore/scalar.hpp"

namespace fillmore {

/// Dense square matrix over one ring.
class Matrix {
public:
    /// Zero matrix of the given order (n >= 1).
    Matrix(int n, const RingSpec& ring);

    static Matrix identity(int n, const RingSpec& ring);

    /// Builds from rows; all rows must have length n and matching ring.
    static Matrix from_rows(const RingSpec& ring, const std::vector<std::vector<Scalar>>& rows);

    int order() const { return n_; }
    const RingSpec& ring() const { return ring_; }

    const Scalar& at(int i, int j) const { return entries_[index(i, j)]; }
    /// Writes an entry; the value must belong to this matrix's ring.
    void set(int i, int j, const Scalar& v);

    std::vector<Scalar> row(int i) const;
    std::vector<Scalar> column(int j) const;
    std::vector<Scalar> diagonal() const;

    /// Same ring, order and entries.
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

private:
    int index(int i, int j) const;

    int n_;
    RingSpec ring_;
    std::vector<Scalar> entries_;
};

/// Target diagonal (gamma_1, ..., gamma_n); entries share one ring.
struct DiagonalSpec {
    std::vector<Scalar> targets;

    int size() const { return static_cast<int>(targets.size()); }
    Scalar sum() const;
};

/// Invertible conjugator P with its inverse and the conjugated result
/// B = P * A * P^-1 it certifies.
struct SimilarityWitness {
    Matrix conjugator;
    Matrix conjugator_inverse;
    Matrix result;
};

/// Coefficients c_0, ..., c_n of det(xI - A); c_n = 1.
struct CharPoly {
    std::vector<Scalar> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool operator==(const CharPoly& o) const { return coeffs == o.coeffs; }
    std::string str() const;
};

Matrix multiply(const Matrix& x, const Matrix& y);
Matrix add(const Matrix& x, const Matrix& y);
Matrix subtract(const Matrix& x, const Matrix& y);

/**
 * Exact inverse by Gauss-Jordan elimination. The pivot is the first
 * nonzero entry scanning down the column. Integer matrices are lifted to Q
 * first; the result ring is then Q.
 *
 * Throws SingularMatrixError (carrying the failing column) when singular.
 */
Matrix invert(const Matrix& x);

/**
 * Similarity B = P * A * P^-1 with witness. Z matrices are computed over Q
 * and the result is narrowed back to Z when every entry has denominator 1.
 */
SimilarityWitness conjugate(const Matrix& a, const Matrix& p);

/// Like conjugate() but with a caller-supplied inverse; checks P * Pinv = I.
SimilarityWitness conjugate_with_inverse(const Matrix& a, const Matrix& p, const Matrix& p_inv);

/**
 * Relabeling similarity: result(sigma(i), sigma(j)) = A(i, j). `sigma` is a
 * 0-based bijection on {0..n-1}; the conjugator is the permutation matrix
 * (unimodular).
 */
SimilarityWitness permutation_similarity(const Matrix& a, const std::vector<int>& sigma);

Scalar trace(const Matrix& a);

/// True iff A = lambda * I for some lambda (every 1x1 matrix is scalar).
bool is_scalar(const Matrix& a);
/// True iff all off-diagonal entries are zero.
bool is_diagonal(const Matrix& a);

/**
 * Characteristic polynomial det(xI - A) by the Berkowitz method.
 * Division-free, so it is exact over Z and over small-characteristic
 * fields alike.
 */
CharPoly char_poly(const Matrix& a);

/// det(A), read off the constant term of the characteristic polynomial.
Scalar determinant(const Matrix& a);

/// Retags Z matrices into Q; Q and GF(p) matrices pass through.
Matrix lift_to_field(const Matrix& a);

/// Retags a Q matrix whose entries all have denominator 1 into Z.
/// Throws PreconditionError if some entry is non-integer.
Matrix narrow_to_integer(const Matrix& a);
/// True iff every entry has denominator 1.
bool all_entries_integer(const Matrix& a);

/// Entry-wise equality after lifting Z to Q; rejects GF/Q comparisons.
bool values_equal(const Matrix& x, const Matrix& y);
bool values_equal(const Scalar& x, const Scalar& y);

/// Matrix-vector product.
std::vector<Scalar> mat_vec(const Matrix& a, const std::vector<Scalar>& v);

/// Rank of the given vectors (as columns) by exact elimination.
int rank_of_vectors(const RingSpec& ring, const std::vector<std::vector<Scalar>>& vectors);

/// Identity of order n with `block` written at diagonal offset `off`.
Matrix embed_block(const Matrix& block, int n, int off, const RingSpec& ring);

/// Trailing principal block of order n - off.
Matrix trailing_block(const Matrix& a, int off);

/// Retags integer diagonal targets into Q when `ring` is Q; otherwise the
/// targets must already live in `ring`.
DiagonalSpec align_diagonal_ring(const DiagonalSpec& gamma, const RingSpec& ring);

/// Parses "4 0 4; 2 3 0; ..." (rows split on ';' or newline, entries on
/// whitespace) with each entry in the canonical scalar form for `ring`.
Matrix parse_matrix(const RingSpec& ring, std::string_view text);

/// Parses a whitespace-separated diagonal "3 5 -2 6 -1".
DiagonalSpec parse_diagonal(const RingSpec& ring, std::string_view text);

/// Multi-line display with right-aligned columns, one "[ ... ]" row per line.
std::string format_matrix(const Matrix& a);

} // namespace fillmore
