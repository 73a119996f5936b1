// Plane vectors, vector sequences and the reduction procedure.
//
// A sequence is the tuple (v_0, v_1, ..., v_n, v_{n+1}) with the fixed
// endpoints v_0 = (0,1) and v_{n+1} = (1,0); only v_1..v_n are stored.
// All values are immutable after construction.

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "pvseq/errors.hpp"
#include "pvseq/rational.hpp"

namespace pvseq {

struct Vec2 {
    Rational a;
    Rational b;

    bool is_zero() const { return a.is_zero() && b.is_zero(); }
    bool is_integral() const { return a.is_integer() && b.is_integer(); }

    Vec2 operator-() const { return {-a, -b}; }
    friend bool operator==(const Vec2&, const Vec2&) = default;
};

/// det of the 2x2 matrix with columns u and w: u.a*w.b - w.a*u.b.
Rational cross(const Vec2& u, const Vec2& w);

class VectorSequence {
public:
    VectorSequence() = default;
    explicit VectorSequence(std::vector<Vec2> inner) : inner_(std::move(inner)) {}

    std::size_t n() const { return inner_.size(); }

    /// v_i for 0 <= i <= n+2: vec(0) = (0,1), vec(n+1) = (1,0), and
    /// vec(n+2) = v_0 again (cyclic closure). Out of range throws.
    const Vec2& vec(std::size_t i) const;

    const std::vector<Vec2>& inner() const { return inner_; }

    friend bool operator==(const VectorSequence&, const VectorSequence&) = default;

private:
    std::vector<Vec2> inner_;
};

enum class ReductionReason {
    ZeroVector,
    DependentWithPredecessor,
    DependentWithV0,
    DependentWithVnPlus1,
};

struct ReductionReport {
    VectorSequence reduced;
    std::size_t removed_count = 0;
    // 1-based index within the sequence as it was when the vector was removed
    std::vector<std::pair<std::size_t, ReductionReason>> steps;
};

/// True iff det(v_i, v_{i+1}) != 0 for all i = 0..n. The closing pair
/// (v_{n+1}, v_0) has det 1 and needs no check.
bool satisfies_assumption(const VectorSequence& v);

/// Removes zero vectors and vectors dependent with a neighbour until the
/// assumption holds or the sequence is empty, always taking the lowest
/// applicable index first. Signature-preserving up to extra zero eigenvalues.
ReductionReport reduce(const VectorSequence& v);

/// Returns v with v_i negated, 1 <= i <= n.
VectorSequence flip(const VectorSequence& v, std::size_t i);

}  // namespace pvseq
