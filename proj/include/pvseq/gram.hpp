// The symmetric matrix A of a sequence: A[i][j] = a_i * b_j for i <= j,
// its determinant by the two product formulas, and leading principal minors.
// Also small exact dense helpers (product-identity check, inversion) shared
// by the tridiagonal and orbifold layers.

#pragma once

#include <cstddef>
#include <vector>

#include "pvseq/core.hpp"

namespace pvseq {

/// Dense symmetric matrix of Rationals. Symmetry is maintained by
/// construction: writes go through set_sym.
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(std::size_t order)
        : order_(order), e_(order * order, Rational(0)) {}

    std::size_t order() const { return order_; }

    const Rational& at(std::size_t i, std::size_t j) const {
        return e_[i * order_ + j];
    }

    void set_sym(std::size_t i, std::size_t j, const Rational& value) {
        e_[i * order_ + j] = value;
        e_[j * order_ + i] = value;
    }

    bool is_identity() const;

    friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

private:
    std::size_t order_ = 0;
    std::vector<Rational> e_;
};

/// A with a_i*b_j as (i,j) entry for i <= j, symmetrized. Degenerate
/// sequences are allowed; validity is the caller's concern.
SymMatrix build_gram(const VectorSequence& v);

/// det A = a_1*b_n * prod_{i=1}^{n-1} (a_{i+1}b_i - a_i b_{i+1}).
/// 1 for the empty sequence.
Rational det_product(const VectorSequence& v);

/// Leading principal minors [D_0 = 1, D_1, ..., D_n]. Computed by rational
/// Gaussian elimination; when a pivot chain hits zero, the remaining minors
/// come from cofactor expansion.
std::vector<Rational> leading_minors(const SymMatrix& a);

/// Exact determinant (last leading minor).
Rational det(const SymMatrix& a);

/// Checks x*y == identity without forming the product.
bool product_is_identity(const SymMatrix& x, const SymMatrix& y);

/// Exact inverse by Gauss-Jordan elimination. Throws singular_matrix.
SymMatrix invert_dense(const SymMatrix& a);

}  // namespace pvseq
