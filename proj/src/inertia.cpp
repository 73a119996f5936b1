#include "pvseq/inertia.hpp"

namespace pvseq {

namespace {

using Dense = std::vector<std::vector<Rational>>;

// Congruence "row j added to (or subtracted from) row k, same on columns".
void add_row_col(Dense& m, std::size_t k, std::size_t j, bool subtract) {
    const std::size_t n = m.size();
    for (std::size_t c = 0; c < n; ++c)
        subtract ? m[k][c] -= m[j][c] : m[k][c] += m[j][c];
    for (std::size_t r = 0; r < n; ++r)
        subtract ? m[r][k] -= m[r][j] : m[r][k] += m[r][j];
}

}  // namespace

Inertia inertia_congruence(const SymMatrix& a) {
    const std::size_t n = a.order();
    Dense m(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = a.at(i, j);

    Inertia result;
    for (std::size_t k = 0; k < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t j = k + 1;
            while (j < n && m[j][k].is_zero()) ++j;
            if (j == n) {
                // Row and column k vanish on the active block.
                ++result.zero;
                continue;
            }
            // Restore a nonzero pivot: the + congruence gives pivot
            // m[j][j] + 2*m[j][k]; when that cancels, the - congruence
            // gives -4*m[j][k] != 0.
            add_row_col(m, k, j, false);
            if (m[k][k].is_zero()) {
                add_row_col(m, k, j, true);
                add_row_col(m, k, j, true);
            }
        }
        const Rational pivot = m[k][k];
        pivot.sgn() > 0 ? ++result.positive : ++result.negative;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m[i][k].is_zero()) continue;
            Rational factor = m[i][k] / pivot;
            for (std::size_t c = k; c < n; ++c) m[i][c] -= factor * m[k][c];
            for (std::size_t r = k; r < n; ++r) m[r][i] -= factor * m[r][k];
        }
    }
    return result;
}

int negatives_by_minors(const SymMatrix& a) {
    const std::vector<Rational> minors = leading_minors(a);
    for (std::size_t k = 1; k < minors.size(); ++k)
        if (minors[k].is_zero()) throw minor_vanishes(k);
    int changes = 0;
    for (std::size_t k = 1; k < minors.size(); ++k)
        if (minors[k - 1].sgn() != minors[k].sgn()) ++changes;
    return changes;
}

int signature(const SymMatrix& a) { return inertia_congruence(a).signature(); }

}  // namespace pvseq
