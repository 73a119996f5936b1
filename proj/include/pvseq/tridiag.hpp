// The tridiagonal side of the correspondence: closed-form inverse of A,
// cofactors by three-term minor recurrences, reconstruction of a sequence
// from a tridiagonal matrix, the connected-component classifier, and
// realization of any component label by an explicit sequence.

#pragma once

#include <cstddef>
#include <vector>

#include "pvseq/inertia.hpp"
#include "pvseq/winding.hpp"

namespace pvseq {

/// Symmetric tridiagonal matrix: diagonal p_0..p_{n-1}, superdiagonal
/// q_0..q_{n-2}.
class TriDiagSym {
public:
    TriDiagSym() = default;
    TriDiagSym(std::vector<Rational> diag, std::vector<Rational> super);

    std::size_t order() const { return diag_.size(); }
    const std::vector<Rational>& diag() const { return diag_; }
    const std::vector<Rational>& super() const { return super_; }

    SymMatrix to_sym() const;

    friend bool operator==(const TriDiagSym&, const TriDiagSym&) = default;

private:
    std::vector<Rational> diag_;
    std::vector<Rational> super_;
};

/// Determinant via the minor recurrence D_k = p_k D_{k-1} - q_{k-1}^2 D_{k-2}.
Rational tridiag_det(const TriDiagSym& b);

/// Membership in W: nonsingular with nowhere-zero superdiagonal.
bool in_w(const TriDiagSym& b);

/// A^{-1} of a valid sequence: diagonal s_i = -det(v_{i-1}, v_{i+1}) /
/// (m_{i-1} m_i), superdiagonal 1/m_i, with m_i = det(v_i, v_{i+1}).
TriDiagSym inverse_closed_form(const VectorSequence& v);

/// Cofactor of entry (i, j), 0-based. For i <= j it equals
/// (-1)^{i+j} * D_i * N_{n-1-j} * q_i ... q_{j-1}, with D the leading and
/// N the trailing minors; symmetric for i > j.
Rational cofactor_tridiag(const TriDiagSym& b, std::size_t i, std::size_t j);

/// Inverse of the bijection: the unique sequence with a_1 = 1 whose matrix A
/// has inverse b. Throws not_in_w.
VectorSequence reconstruct(const TriDiagSym& b);

struct ComponentLabel {
    std::vector<int> interior_signs;  // sgn det(v_i, v_{i+1}), i = 1..n-1
    int signature = 0;

    friend bool operator==(const ComponentLabel&, const ComponentLabel&) = default;
};

/// Connected-component label of v in V/R*.
ComponentLabel classify(const VectorSequence& v);

enum class TypeFamily { I, II };

struct TypeLabel {
    TypeFamily family = TypeFamily::I;
    int k = 0;  // rotation number

    friend bool operator==(const TypeLabel&, const TypeLabel&) = default;
};

/// Type of a normalized sequence (det(v_i, v_{i+1}) > 0 for i = 0..n-1):
/// family I when det(v_n, v_{n+1}) < 0, II when > 0, k = R(v).
/// Throws not_normalized when the precondition fails.
TypeLabel type_label(const VectorSequence& v);

/// A normalized counterclockwise sequence of the given type; Type I
/// witnesses have S = n, Type II witnesses have S = n + 2.
VectorSequence type_witness(std::size_t n, const TypeLabel& label);

/// Some sequence v with classify(v) = label. Throws invalid_label on
/// parity or range violations.
VectorSequence realize(std::size_t n, const ComponentLabel& label);

/// The R*-action (a, b) -> (r a, b / r) applied to every vector.
VectorSequence scale_action(const VectorSequence& v, const Rational& r);

/// Canonical representative with a_1 = 1.
VectorSequence normalize_first_a(const VectorSequence& v);

}  // namespace pvseq
