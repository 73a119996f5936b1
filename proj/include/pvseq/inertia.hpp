// Exact inertia of rational symmetric matrices.
//
// inertia_congruence diagonalizes by congruences P*A*P^T and works for
// singular input; negatives_by_minors is the leading-minor sign-change count
// and applies only when every minor is nonzero.

#pragma once

#include "pvseq/gram.hpp"

namespace pvseq {

struct Inertia {
    int positive = 0;
    int negative = 0;
    int zero = 0;

    int signature() const { return positive - negative; }
    friend bool operator==(const Inertia&, const Inertia&) = default;
};

Inertia inertia_congruence(const SymMatrix& a);

/// Number of sign changes in 1, D_1, ..., D_n, which equals the number of
/// negative eigenvalues. Throws minor_vanishes(k) when some D_k = 0.
int negatives_by_minors(const SymMatrix& a);

int signature(const SymMatrix& a);

}  // namespace pvseq
