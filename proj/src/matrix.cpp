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

#include "fillmore/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace fillmore {

namespace {

void require_same_shape(const Matrix& x, const Matrix& y, const char* op) {
    if (x.order() != y.order()) {
        throw PreconditionError(std::string(op) + ": order mismatch " +
                                std::to_string(x.order()) + " vs " + std::to_string(y.order()));
    }
    if (x.ring() != y.ring()) {
        throw RingMismatchError(std::string(op) + ": ring mismatch " + x.ring().name() + " vs " +
                                y.ring().name());
    }
}

} // namespace

Matrix::Matrix(int n, const RingSpec& ring)
    : n_(n), ring_(ring), entries_(static_cast<std::size_t>(n) * n, Scalar::zero(ring)) {
    if (n < 1) {
        throw PreconditionError("matrix order must be >= 1, got " + std::to_string(n));
    }
}

Matrix Matrix::identity(int n, const RingSpec& ring) {
    Matrix m(n, ring);
    for (int i = 0; i < n; ++i) m.set(i, i, Scalar::one(ring));
    return m;
}

Matrix Matrix::from_rows(const RingSpec& ring, const std::vector<std::vector<Scalar>>& rows) {
    int n = static_cast<int>(rows.size());
    Matrix m(n, ring);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n) {
            throw PreconditionError("row " + std::to_string(i + 1) + " has " +
                                    std::to_string(rows[i].size()) + " entries, expected " +
                                    std::to_string(n));
        }
        for (int j = 0; j < n; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

int Matrix::index(int i, int j) const {
    if (i < 0 || i >= n_ || j < 0 || j >= n_) {
        throw PreconditionError("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                ") outside order-" + std::to_string(n_) + " matrix");
    }
    return i * n_ + j;
}

void Matrix::set(int i, int j, const Scalar& v) {
    if (v.ring() != ring_) {
        throw RingMismatchError("entry ring " + v.ring().name() + " does not match matrix ring " +
                                ring_.name());
    }
    entries_[index(i, j)] = v;
}

std::vector<Scalar> Matrix::row(int i) const {
    std::vector<Scalar> out;
    out.reserve(n_);
    for (int j = 0; j < n_; ++j) out.push_back(at(i, j));
    return out;
}

std::vector<Scalar> Matrix::column(int j) const {
    std::vector<Scalar> out;
    out.reserve(n_);
    for (int i = 0; i < n_; ++i) out.push_back(at(i, j));
    return out;
}

std::vector<Scalar> Matrix::diagonal() const {
    std::vector<Scalar> out;
    out.reserve(n_);
    for (int i = 0; i < n_; ++i) out.push_back(at(i, i));
    return out;
}

bool Matrix::operator==(const Matrix& o) const {
    return n_ == o.n_ && ring_ == o.ring_ && entries_ == o.entries_;
}

Scalar DiagonalSpec::sum() const {
    if (targets.empty()) throw PreconditionError("empty diagonal spec");
    Scalar acc = Scalar::zero(targets.front().ring());
    for (const Scalar& t : targets) acc = acc + t;
    return acc;
}

std::string CharPoly::str() const {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i) out << ", ";
        out << coeffs[i].str();
    }
    out << "]";
    return out.str();
}

Matrix multiply(const Matrix& x, const Matrix& y) {
    require_same_shape(x, y, "multiply");
    int n = x.order();
    Matrix out(n, x.ring());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Scalar acc = Scalar::zero(x.ring());
            for (int k = 0; k < n; ++k) acc = acc + x.at(i, k) * y.at(k, j);
            out.set(i, j, acc);
        }
    }
    return out;
}

Matrix add(const Matrix& x, const Matrix& y) {
    require_same_shape(x, y, "add");
    int n = x.order();
    Matrix out(n, x.ring());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.set(i, j, x.at(i, j) + y.at(i, j));
    return out;
}

Matrix subtract(const Matrix& x, const Matrix& y) {
    require_same_shape(x, y, "subtract");
    int n = x.order();
    Matrix out(n, x.ring());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.set(i, j, x.at(i, j) - y.at(i, j));
    return out;
}

Matrix lift_to_field(const Matrix& a) {
    if (a.ring().kind() != RingKind::Integer) return a;
    Matrix out(a.order(), RingSpec::rationals());
    for (int i = 0; i < a.order(); ++i)
        for (int j = 0; j < a.order(); ++j) out.set(i, j, a.at(i, j).lifted_to_rationals());
    return out;
}

bool all_entries_integer(const Matrix& a) {
    if (a.ring().kind() == RingKind::PrimeField) return true;
    for (int i = 0; i < a.order(); ++i)
        for (int j = 0; j < a.order(); ++j)
            if (a.at(i, j).denominator() != 1) return false;
    return true;
}

Matrix narrow_to_integer(const Matrix& a) {
    if (a.ring().kind() == RingKind::Integer) return a;
    if (a.ring().kind() != RingKind::Rational) {
        throw RingMismatchError("cannot narrow a " + a.ring().name() + " matrix to Z");
    }
    Matrix out(a.order(), RingSpec::integers());
    for (int i = 0; i < a.order(); ++i) {
        for (int j = 0; j < a.order(); ++j) {
            const Scalar& v = a.at(i, j);
            if (v.denominator() != 1) {
                throw PreconditionError("entry (" + std::to_string(i + 1) + "," +
                                        std::to_string(j + 1) + ") = " + v.str() +
                                        " is not an integer");
            }
            out.set(i, j, Scalar::from_int(RingSpec::integers(), v.numerator()));
        }
    }
    return out;
}

bool values_equal(const Scalar& x, const Scalar& y) {
    if (x.ring() == y.ring()) return x == y;
    if (x.ring().kind() == RingKind::PrimeField || y.ring().kind() == RingKind::PrimeField) {
        throw RingMismatchError("cannot value-compare " + x.ring().name() + " with " +
                                y.ring().name());
    }
    return x.lifted_to_rationals() == y.lifted_to_rationals();
}

bool values_equal(const Matrix& x, const Matrix& y) {
    if (x.order() != y.order()) return false;
    for (int i = 0; i < x.order(); ++i)
        for (int j = 0; j < x.order(); ++j)
            if (!values_equal(x.at(i, j), y.at(i, j))) return false;
    return true;
}

Matrix invert(const Matrix& x) {
    Matrix a = lift_to_field(x);
    int n = a.order();
    Matrix inv = Matrix::identity(n, a.ring());

    // Gauss-Jordan on [a | inv]; pivot = first nonzero entry down the column.
    for (int col = 0; col < n; ++col) {
        int pivot_row = -1;
        for (int i = col; i < n; ++i) {
            if (!a.at(i, col).is_zero()) {
                pivot_row = i;
                break;
            }
        }
        if (pivot_row < 0) {
            throw SingularMatrixError("singular matrix: no pivot in column " +
                                          std::to_string(col + 1),
                                      col + 1);
        }
        if (pivot_row != col) {
            for (int j = 0; j < n; ++j) {
                Scalar tmp = a.at(col, j);
                a.set(col, j, a.at(pivot_row, j));
                a.set(pivot_row, j, tmp);
                tmp = inv.at(col, j);
                inv.set(col, j, inv.at(pivot_row, j));
                inv.set(pivot_row, j, tmp);
            }
        }
        Scalar scale = a.at(col, col).inverse();
        for (int j = 0; j < n; ++j) {
            a.set(col, j, a.at(col, j) * scale);
            inv.set(col, j, inv.at(col, j) * scale);
        }
        for (int i = 0; i < n; ++i) {
            if (i == col || a.at(i, col).is_zero()) continue;
            Scalar factor = a.at(i, col);
            for (int j = 0; j < n; ++j) {
                a.set(i, j, a.at(i, j) - factor * a.at(col, j));
                inv.set(i, j, inv.at(i, j) - factor * inv.at(col, j));
            }
        }
    }
    return inv;
}

SimilarityWitness conjugate(const Matrix& a, const Matrix& p) {
    Matrix af = lift_to_field(a);
    Matrix pf = lift_to_field(p);
    require_same_shape(af, pf, "conjugate");
    Matrix p_inv = invert(pf);
    Matrix b = multiply(multiply(pf, af), p_inv);
    if (a.ring().kind() == RingKind::Integer && all_entries_integer(b)) {
        b = narrow_to_integer(b);
    }
    return SimilarityWitness{pf, p_inv, b};
}

SimilarityWitness conjugate_with_inverse(const Matrix& a, const Matrix& p, const Matrix& p_inv) {
    Matrix af = lift_to_field(a);
    Matrix pf = lift_to_field(p);
    Matrix pif = lift_to_field(p_inv);
    require_same_shape(pf, pif, "conjugate_with_inverse");
    if (multiply(pf, pif) != Matrix::identity(pf.order(), pf.ring())) {
        throw PreconditionError("conjugate_with_inverse: supplied inverse is wrong");
    }
    Matrix b = multiply(multiply(pf, af), pif);
    if (a.ring().kind() == RingKind::Integer && all_entries_integer(b)) {
        b = narrow_to_integer(b);
    }
    return SimilarityWitness{pf, pif, b};
}

SimilarityWitness permutation_similarity(const Matrix& a, const std::vector<int>& sigma) {
    int n = a.order();
    if (static_cast<int>(sigma.size()) != n) {
        throw PreconditionError("permutation length " + std::to_string(sigma.size()) +
                                " does not match order " + std::to_string(n));
    }
    std::vector<bool> seen(n, false);
    for (int v : sigma) {
        if (v < 0 || v >= n || seen[v]) {
            throw PreconditionError("sigma is not a bijection on {1.." + std::to_string(n) + "}");
        }
        seen[v] = true;
    }
    // P maps e_i to e_sigma(i).
    Matrix p(n, a.ring());
    for (int i = 0; i < n; ++i) p.set(sigma[i], i, Scalar::one(a.ring()));
    return conjugate(a, p);
}

Scalar trace(const Matrix& a) {
    Scalar acc = Scalar::zero(a.ring());
    for (int i = 0; i < a.order(); ++i) acc = acc + a.at(i, i);
    return acc;
}

bool is_diagonal(const Matrix& a) {
    for (int i = 0; i < a.order(); ++i)
        for (int j = 0; j < a.order(); ++j)
            if (i != j && !a.at(i, j).is_zero()) return false;
    return true;
}

bool is_scalar(const Matrix& a) {
    if (!is_diagonal(a)) return false;
    for (int i = 1; i < a.order(); ++i)
        if (a.at(i, i) != a.at(0, 0)) return false;
    return true;
}

CharPoly char_poly(const Matrix& a) {
    int n = a.order();
    const RingSpec& ring = a.ring();
    const Scalar zero = Scalar::zero(ring);
    const Scalar one = Scalar::one(ring);

    // Berkowitz iteration over leading principal submatrices. `poly` holds
    // the characteristic polynomial of the (k-1)x(k-1) leading block,
    // leading coefficient first; each round multiplies by the Toeplitz
    // matrix whose first column is (1, -a_kk, -R*C, -R*M*C, ...).
    std::vector<Scalar> poly{one};
    for (int k = 1; k <= n; ++k) {
        std::vector<Scalar> t;
        t.reserve(k + 1);
        t.push_back(one);
        t.push_back(-a.at(k - 1, k - 1));
        if (k >= 2) {
            // v starts as C (column above the pivot) and picks up one factor
            // of the leading block M per round.
            std::vector<Scalar> v(k - 1, zero);
            for (int i = 0; i < k - 1; ++i) v[i] = a.at(i, k - 1);
            for (int step = 2; step <= k; ++step) {
                Scalar dot = zero;
                for (int j = 0; j < k - 1; ++j) dot = dot + a.at(k - 1, j) * v[j];
                t.push_back(-dot);
                if (step == k) break;
                std::vector<Scalar> next(k - 1, zero);
                for (int i = 0; i < k - 1; ++i) {
                    Scalar acc = zero;
                    for (int j = 0; j < k - 1; ++j) acc = acc + a.at(i, j) * v[j];
                    next[i] = acc;
                }
                v = std::move(next);
            }
        }
        std::vector<Scalar> next_poly(k + 1, zero);
        for (int i = 0; i <= k; ++i) {
            Scalar acc = zero;
            for (int j = 0; j < static_cast<int>(poly.size()); ++j) {
                int d = i - j;
                if (d < 0 || d >= static_cast<int>(t.size())) continue;
                acc = acc + t[d] * poly[j];
            }
            next_poly[i] = acc;
        }
        poly = std::move(next_poly);
    }

    // poly[i] is the coefficient of x^(n-i); store as c_0..c_n instead.
    CharPoly cp;
    cp.coeffs.assign(poly.rbegin(), poly.rend());
    return cp;
}

Scalar determinant(const Matrix& a) {
    CharPoly cp = char_poly(a);
    Scalar c0 = cp.coeffs.front();
    // det = (-1)^n * c_0.
    return a.order() % 2 == 0 ? c0 : -c0;
}

std::vector<Scalar> mat_vec(const Matrix& a, const std::vector<Scalar>& v) {
    int n = a.order();
    if (static_cast<int>(v.size()) != n) {
        throw PreconditionError("mat_vec: vector length mismatch");
    }
    std::vector<Scalar> out(n, Scalar::zero(a.ring()));
    for (int i = 0; i < n; ++i) {
        Scalar acc = Scalar::zero(a.ring());
        for (int j = 0; j < n; ++j) acc = acc + a.at(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

int rank_of_vectors(const RingSpec& ring, const std::vector<std::vector<Scalar>>& vectors) {
    if (!ring.is_field()) {
        throw PreconditionError("rank test needs a field ring");
    }
    if (vectors.empty()) return 0;
    std::size_t n = vectors.front().size();
    std::vector<std::vector<Scalar>> rows;
    for (const auto& v : vectors) {
        if (v.size() != n) throw PreconditionError("rank test: ragged vectors");
        std::vector<Scalar> w = v;
        // Reduce against the echelon rows collected so far.
        for (const auto& r : rows) {
            std::size_t lead = 0;
            while (lead < n && r[lead].is_zero()) ++lead;
            if (lead == n || w[lead].is_zero()) continue;
            Scalar factor = w[lead] * r[lead].inverse();
            for (std::size_t j = 0; j < n; ++j) w[j] = w[j] - factor * r[j];
        }
        bool nonzero = false;
        for (const auto& e : w) {
            if (!e.is_zero()) {
                nonzero = true;
                break;
            }
        }
        if (nonzero) rows.push_back(std::move(w));
    }
    return static_cast<int>(rows.size());
}

Matrix embed_block(const Matrix& block, int n, int off, const RingSpec& ring) {
    if (off < 0 || off + block.order() != n) {
        throw PreconditionError("embed_block: block does not fit");
    }
    Matrix out = Matrix::identity(n, ring);
    for (int i = 0; i < block.order(); ++i)
        for (int j = 0; j < block.order(); ++j) out.set(off + i, off + j, block.at(i, j));
    return out;
}

Matrix trailing_block(const Matrix& a, int off) {
    int m = a.order() - off;
    if (off < 0 || m < 1) throw PreconditionError("trailing_block: bad offset");
    Matrix out(m, a.ring());
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) out.set(i, j, a.at(off + i, off + j));
    return out;
}

DiagonalSpec align_diagonal_ring(const DiagonalSpec& gamma, const RingSpec& ring) {
    DiagonalSpec out;
    out.targets.reserve(gamma.targets.size());
    for (const Scalar& t : gamma.targets) {
        if (t.ring() == ring) {
            out.targets.push_back(t);
        } else if (ring.kind() == RingKind::Rational &&
                   t.ring().kind() == RingKind::Integer) {
            out.targets.push_back(t.lifted_to_rationals());
        } else {
            throw RingMismatchError("diagonal target in " + t.ring().name() +
                                    " cannot be used over " + ring.name());
        }
    }
    return out;
}

Matrix parse_matrix(const RingSpec& ring, std::string_view text) {
    std::vector<std::vector<Scalar>> rows;
    std::string buf(text);
    std::replace(buf.begin(), buf.end(), '\n', ';');
    std::istringstream stream(buf);
    std::string row_text;
    while (std::getline(stream, row_text, ';')) {
        std::istringstream row_stream(row_text);
        std::vector<Scalar> row;
        std::string token;
        while (row_stream >> token) row.push_back(Scalar::parse(ring, token));
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("empty matrix text");
    return Matrix::from_rows(ring, rows);
}

DiagonalSpec parse_diagonal(const RingSpec& ring, std::string_view text) {
    std::istringstream stream{std::string(text)};
    DiagonalSpec d;
    std::string token;
    while (stream >> token) d.targets.push_back(Scalar::parse(ring, token));
    if (d.targets.empty()) throw ParseError("empty diagonal text");
    return d;
}

std::string format_matrix(const Matrix& a) {
    int n = a.order();
    std::vector<std::size_t> width(n, 0);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) width[j] = std::max(width[j], a.at(i, j).str().size());
    std::ostringstream out;
    for (int i = 0; i < n; ++i) {
        out << "[";
        for (int j = 0; j < n; ++j) {
            std::string s = a.at(i, j).str();
            out << "  " << std::string(width[j] - s.size(), ' ') << s;
        }
        out << "  ]\n";
    }
    return out.str();
}

} // namespace fillmore
