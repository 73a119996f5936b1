// Combinatorial invariants of the 4-dimensional quasitoric orbifold attached
// to an integer sequence: local group orders, smoothness, dual linear forms
// at the torus-fixed points, localization push-forwards, the intersection
// matrix, and its inverse relation with the matrix A.
//
// Equivariant classes are represented purely by their restrictions to the
// n+2 fixed points p_i (i cyclic mod n+2); push-forwards are localization
// sums evaluated at deterministic generic points (1, t), with multi-point
// agreement asserting that the sum is the expected constant.
//
// The push-forward layer requires n >= 1: with n = 0 the fixed-point cycle
// has length two and the localization data degenerates. Local orders,
// smoothness and the fixed-point duals remain defined for n = 0.

#pragma once

#include <cstddef>
#include <vector>

#include "pvseq/tridiag.hpp"

namespace pvseq {

/// Linear form c1*u1 + c2*u2 on the 2-torus Lie algebra.
struct LinearForm2 {
    Rational c1;
    Rational c2;

    /// Pairing with a lattice vector: c1*w.a + c2*w.b.
    Rational pair_with(const Vec2& w) const { return c1 * w.a + c2 * w.b; }

    /// Value at the evaluation point (u1, u2) = (1, t).
    Rational at(const Rational& t) const { return c1 + c2 * t; }

    bool is_zero() const { return c1.is_zero() && c2.is_zero(); }

    LinearForm2& operator+=(const LinearForm2& o) {
        c1 += o.c1;
        c2 += o.c2;
        return *this;
    }
    friend LinearForm2 operator*(const Rational& s, const LinearForm2& f) {
        return {s * f.c1, s * f.c2};
    }
    friend bool operator==(const LinearForm2&, const LinearForm2&) = default;
};

/// Integer sequence satisfying the nondegeneracy assumption; the only input
/// the orbifold layer accepts.
class IntSequence {
public:
    explicit IntSequence(VectorSequence seq);
    const VectorSequence& seq() const { return seq_; }
    std::size_t n() const { return seq_.n(); }

private:
    VectorSequence seq_;
};

/// Data at the fixed point p_i = X_i with X_{i+1}, i = 0..n+1 cyclic.
struct FixedPointData {
    std::size_t index = 0;
    Vec2 weight_first;        // v_i
    Vec2 weight_second;       // v_{i+1}
    LinearForm2 dual_first;   // xi_i at p_i
    LinearForm2 dual_second;  // xi_{i+1} at p_i
    mpz_class local_order;    // |det(v_i, v_{i+1})|
};

/// |det(v_i, v_{i+1})| for i = 0..n+1; the closing entry is always 1.
std::vector<mpz_class> local_group_orders(const IntSequence& v);

/// True iff every consecutive pair is a lattice basis.
bool is_smooth(const IntSequence& v);

/// Dual pairs at all n+2 fixed points: the inverse transpose of the 2x2
/// matrix with columns v_i, v_{i+1}.
std::vector<FixedPointData> fixed_point_data(const IntSequence& v);

/// xi_i restricted to p_j: nonzero only for j = i or j = i-1 (cyclic).
LinearForm2 restriction(const IntSequence& v, std::size_t class_i,
                        std::size_t point_j);

/// The localization sum for xi_i cup xi_j evaluated at the point (1, t).
/// The point must keep every denominator form nonzero.
Rational localization_sum(const IntSequence& v, std::size_t i, std::size_t j,
                          const Rational& t);

/// First `count` admissible evaluation parameters t among 1, 2, 3, ...
/// Throws generic_point_failure if the candidate list is exhausted.
std::vector<Rational> admissible_points(const IntSequence& v, std::size_t count);

/// <alpha_i dual cup alpha_j dual, [X]>: the localization sum evaluated at
/// two generic points, with agreement asserted.
Rational gysin_pushforward(const IntSequence& v, std::size_t i, std::size_t j);

/// Full (n+2) x (n+2) matrix of push-forwards, indices 0..n+1. Its inner
/// n x n block is the inverse of A.
SymMatrix intersection_matrix(const IntSequence& v);

/// Checks (a) sum_i <u, v_i> xi_i|_{p_j} = u at every fixed point for both
/// basis forms u, and (b) the three-term relation
/// B[i-1][i] v_{i-1} + B[i][i] v_i + B[i+1][i] v_{i+1} = 0 for 1 <= i <= n.
bool pullback_relation_check(const IntSequence& v);

/// Inverse of the inner n x n intersection block; equals A.
/// Throws singular_intersection_block (which must not occur).
SymMatrix kronecker_dual_gram(const IntSequence& v);

}  // namespace pvseq
