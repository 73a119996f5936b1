#include "pvseq/gram.hpp"

namespace pvseq {

bool SymMatrix::is_identity() const {
    for (std::size_t i = 0; i < order_; ++i)
        for (std::size_t j = 0; j < order_; ++j) {
            const Rational& e = at(i, j);
            if (i == j ? e != Rational(1) : !e.is_zero()) return false;
        }
    return true;
}

SymMatrix build_gram(const VectorSequence& v) {
    const std::size_t n = v.n();
    SymMatrix a(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            a.set_sym(i, j, v.vec(i + 1).a * v.vec(j + 1).b);
    return a;
}

Rational det_product(const VectorSequence& v) {
    const std::size_t n = v.n();
    if (n == 0) return Rational(1);
    Rational result = v.vec(1).a * v.vec(n).b;
    for (std::size_t i = 1; i + 1 <= n; ++i) {
        const Vec2& u = v.vec(i);
        const Vec2& w = v.vec(i + 1);
        result *= w.a * u.b - u.a * w.b;
    }
    return result;
}

namespace {

using Dense = std::vector<std::vector<Rational>>;

Dense to_dense(const SymMatrix& a) {
    const std::size_t n = a.order();
    Dense m(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = a.at(i, j);
    return m;
}

// Determinant of the leading k x k block by cofactor expansion along the
// first row. Fallback path for vanished pivot chains; k stays small.
Rational det_cofactor(const Dense& m, std::vector<std::size_t> rows,
                      std::vector<std::size_t> cols) {
    const std::size_t k = rows.size();
    if (k == 0) return Rational(1);
    if (k == 1) return m[rows[0]][cols[0]];
    Rational result(0);
    int sign = 1;
    for (std::size_t c = 0; c < k; ++c) {
        const Rational& pivot = m[rows[0]][cols[c]];
        if (!pivot.is_zero()) {
            std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
            std::vector<std::size_t> sub_cols;
            sub_cols.reserve(k - 1);
            for (std::size_t d = 0; d < k; ++d)
                if (d != c) sub_cols.push_back(cols[d]);
            Rational term = pivot * det_cofactor(m, sub_rows, sub_cols);
            result += sign > 0 ? term : -term;
        }
        sign = -sign;
    }
    return result;
}

Rational det_leading_block(const Dense& m, std::size_t k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    return det_cofactor(m, idx, idx);
}

}  // namespace

std::vector<Rational> leading_minors(const SymMatrix& a) {
    const std::size_t n = a.order();
    std::vector<Rational> minors;
    minors.reserve(n + 1);
    minors.emplace_back(1);

    Dense m = to_dense(a);
    Rational product(1);
    for (std::size_t k = 0; k < n; ++k) {
        const Rational& pivot = m[k][k];
        product *= pivot;
        minors.push_back(product);
        if (pivot.is_zero()) {
            // Pivot chain broken: remaining minors by cofactor expansion.
            for (std::size_t j = k + 2; j <= n; ++j)
                minors.push_back(det_leading_block(to_dense(a), j));
            return minors;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m[i][k].is_zero()) continue;
            Rational factor = m[i][k] / pivot;
            for (std::size_t j = k; j < n; ++j)
                m[i][j] -= factor * m[k][j];
        }
    }
    return minors;
}

Rational det(const SymMatrix& a) { return leading_minors(a).back(); }

bool product_is_identity(const SymMatrix& x, const SymMatrix& y) {
    const std::size_t n = x.order();
    if (y.order() != n) return false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rational sum(0);
            for (std::size_t k = 0; k < n; ++k) sum += x.at(i, k) * y.at(k, j);
            if (i == j ? sum != Rational(1) : !sum.is_zero()) return false;
        }
    return true;
}

SymMatrix invert_dense(const SymMatrix& a) {
    const std::size_t n = a.order();
    Dense m = to_dense(a);
    Dense inv(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = Rational(1);

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot_row = k;
        while (pivot_row < n && m[pivot_row][k].is_zero()) ++pivot_row;
        if (pivot_row == n) throw singular_matrix("invert_dense: singular matrix");
        if (pivot_row != k) {
            std::swap(m[pivot_row], m[k]);
            std::swap(inv[pivot_row], inv[k]);
        }
        Rational pivot = m[k][k];
        for (std::size_t j = 0; j < n; ++j) {
            m[k][j] /= pivot;
            inv[k][j] /= pivot;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || m[i][k].is_zero()) continue;
            Rational factor = m[i][k];
            for (std::size_t j = 0; j < n; ++j) {
                m[i][j] -= factor * m[k][j];
                inv[i][j] -= factor * inv[k][j];
            }
        }
    }

    SymMatrix result(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            if (inv[i][j] != inv[j][i])
                throw internal_check_failure("invert_dense: asymmetric inverse of symmetric input");
            result.set_sym(i, j, inv[i][j]);
        }
    return result;
}

}  // namespace pvseq
