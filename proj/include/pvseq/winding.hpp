// The two sequence invariants R(v) and S(v), and the signature identity
// Sign(A) = 4R(v) - S(v).
//
// Each step v_i -> v_{i+1} is read as the arc of angle < pi in the direction
// of sgn det(v_i, v_{i+1}); R(v) is the winding number of the closed path
// through v_0, ..., v_{n+1}, v_0. Computed exactly by signed ray crossing
// against a reference direction collinear with no sequence vector.

#pragma once

#include <cstddef>
#include <vector>

#include "pvseq/inertia.hpp"

namespace pvseq {

struct WindingReport {
    int rotation = 0;                 // R(v)
    int s_value = 0;                  // S(v) = 1 + sum of det signs
    std::vector<int> det_signs;       // sgn det(v_i, v_{i+1}), i = 0..n
    int predicted_signature = 0;      // 4R(v) - S(v)
};

int s_value(const VectorSequence& v);
int rotation_number(const VectorSequence& v);
WindingReport winding_report(const VectorSequence& v);

struct TheoremCheck {
    WindingReport report;
    int signature = 0;
    bool ok = false;  // always true; false is a bug trap
};

/// Sign(A) by exact congruence inertia against 4R(v) - S(v).
TheoremCheck verify_main_theorem(const VectorSequence& v);

/// Smallest N >= 0 such that d = (1, N) is collinear with no vector of v.
Vec2 reference_direction(const VectorSequence& v);

/// Rotation number computed against a caller-chosen admissible direction.
int rotation_number_with(const VectorSequence& v, const Vec2& d);

/// Upper-half-plane sequence turning counterclockwise up to v_k and
/// clockwise after it; Sign(A) = n - 2k, R = 0, S = -n + 2k.
VectorSequence upper_half_witness(std::size_t n, std::size_t k);

/// Builds the witness and checks all three identities. 0 <= k <= n.
bool corollary_check(std::size_t n, std::size_t k);

}  // namespace pvseq
