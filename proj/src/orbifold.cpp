#include "pvseq/orbifold.hpp"

namespace pvseq {

IntSequence::IntSequence(VectorSequence seq) : seq_(std::move(seq)) {
    for (const Vec2& w : seq_.inner())
        if (!w.is_integral())
            throw std::domain_error("IntSequence: entries must be integers");
    if (!satisfies_assumption(seq_))
        throw degenerate_sequence("IntSequence: assumption fails");
}

namespace {

std::size_t points(const IntSequence& v) { return v.n() + 2; }

// The push-forward layer works over the cyclic arrangement of n+2 fixed
// points, which needs the two divisors incident to a point to be distinct;
// with n = 0 the 2-cycle degenerates and no localization data is defined.
void require_nonempty(const IntSequence& v, const char* who) {
    if (v.n() == 0)
        throw std::domain_error(std::string(who) + ": requires n >= 1");
}

}  // namespace

std::vector<mpz_class> local_group_orders(const IntSequence& v) {
    std::vector<mpz_class> orders;
    orders.reserve(points(v));
    for (std::size_t i = 0; i < points(v); ++i)
        orders.push_back(abs(cross(v.seq().vec(i), v.seq().vec(i + 1)).num()));
    return orders;
}

bool is_smooth(const IntSequence& v) {
    for (const mpz_class& order : local_group_orders(v))
        if (order != 1) return false;
    return true;
}

std::vector<FixedPointData> fixed_point_data(const IntSequence& v) {
    std::vector<FixedPointData> data;
    data.reserve(points(v));
    for (std::size_t i = 0; i < points(v); ++i) {
        const Vec2& u = v.seq().vec(i);
        const Vec2& w = v.seq().vec(i + 1);
        const Rational m = cross(u, w);
        FixedPointData d;
        d.index = i;
        d.weight_first = u;
        d.weight_second = w;
        d.dual_first = {w.b / m, -w.a / m};
        d.dual_second = {-u.b / m, u.a / m};
        d.local_order = abs(m.num());
        data.push_back(std::move(d));
    }
    return data;
}

LinearForm2 restriction(const IntSequence& v, std::size_t class_i,
                        std::size_t point_j) {
    const std::size_t cycle = points(v);
    if (class_i >= cycle || point_j >= cycle)
        throw std::out_of_range("restriction: index past n+1");
    // X_i meets only p_{i-1} and p_i.
    const Vec2& u = v.seq().vec(point_j);
    const Vec2& w = v.seq().vec(point_j + 1);
    const Rational m = cross(u, w);
    if (point_j == class_i) return {w.b / m, -w.a / m};
    if ((point_j + 1) % cycle == class_i) return {-u.b / m, u.a / m};
    return {Rational(0), Rational(0)};
}

Rational localization_sum(const IntSequence& v, std::size_t i, std::size_t j,
                          const Rational& t) {
    require_nonempty(v, "localization_sum");
    const std::size_t cycle = points(v);
    Rational sum(0);
    for (std::size_t k = 0; k < cycle; ++k) {
        const LinearForm2 num_i = restriction(v, i, k);
        const LinearForm2 num_j = restriction(v, j, k);
        if (num_i.is_zero() || num_j.is_zero()) continue;
        const LinearForm2 den_first = restriction(v, k, k);
        const LinearForm2 den_second = restriction(v, (k + 1) % cycle, k);
        const Rational m = cross(v.seq().vec(k), v.seq().vec(k + 1));
        const Rational denominator = m * den_first.at(t) * den_second.at(t);
        if (denominator.is_zero())
            throw generic_point_failure("localization_sum: denominator vanishes at the point");
        sum += num_i.at(t) * num_j.at(t) / denominator;
    }
    return sum;
}

std::vector<Rational> admissible_points(const IntSequence& v, std::size_t count) {
    require_nonempty(v, "admissible_points");
    // Each denominator form kills at most one t, so small integers suffice.
    const std::vector<FixedPointData> data = fixed_point_data(v);
    std::vector<Rational> found;
    for (long t = 1; found.size() < count && t <= 4 * static_cast<long>(points(v)) + 16; ++t) {
        const Rational rt(t);
        bool ok = true;
        for (const FixedPointData& d : data)
            if (d.dual_first.at(rt).is_zero() || d.dual_second.at(rt).is_zero()) {
                ok = false;
                break;
            }
        if (ok) found.emplace_back(rt);
    }
    if (found.size() < count)
        throw generic_point_failure("admissible_points: candidate list exhausted");
    return found;
}

namespace {

Rational pushforward_at_points(const IntSequence& v, std::size_t i, std::size_t j,
                               const std::vector<Rational>& pts) {
    Rational value = localization_sum(v, i, j, pts.at(0));
    for (std::size_t p = 1; p < pts.size(); ++p)
        if (localization_sum(v, i, j, pts[p]) != value)
            throw internal_check_failure(
                "gysin_pushforward: localization sum is not constant");
    return value;
}

}  // namespace

Rational gysin_pushforward(const IntSequence& v, std::size_t i, std::size_t j) {
    return pushforward_at_points(v, i, j, admissible_points(v, 2));
}

SymMatrix intersection_matrix(const IntSequence& v) {
    require_nonempty(v, "intersection_matrix");
    const std::size_t cycle = points(v);
    const std::vector<Rational> pts = admissible_points(v, 2);
    SymMatrix b(cycle);
    for (std::size_t i = 0; i < cycle; ++i)
        for (std::size_t j = i; j < cycle; ++j)
            b.set_sym(i, j, pushforward_at_points(v, i, j, pts));
    return b;
}

bool pullback_relation_check(const IntSequence& v) {
    require_nonempty(v, "pullback_relation_check");
    const std::size_t cycle = points(v);
    const LinearForm2 basis[2] = {{Rational(1), Rational(0)},
                                  {Rational(0), Rational(1)}};
    for (std::size_t j = 0; j < cycle; ++j) {
        for (const LinearForm2& u : basis) {
            LinearForm2 sum{Rational(0), Rational(0)};
            for (std::size_t i = 0; i < cycle; ++i)
                sum += u.pair_with(v.seq().vec(i)) * restriction(v, i, j);
            if (!(sum == u)) return false;
        }
    }

    const SymMatrix b = intersection_matrix(v);
    for (std::size_t i = 1; i <= v.n(); ++i) {
        const Vec2& prev = v.seq().vec(i - 1);
        const Vec2& cur = v.seq().vec(i);
        const Vec2& next = v.seq().vec(i + 1);
        const Rational ca = b.at(i - 1, i) * prev.a + b.at(i, i) * cur.a +
                            b.at(i + 1, i) * next.a;
        const Rational cb = b.at(i - 1, i) * prev.b + b.at(i, i) * cur.b +
                            b.at(i + 1, i) * next.b;
        if (!ca.is_zero() || !cb.is_zero()) return false;
    }
    return true;
}

SymMatrix kronecker_dual_gram(const IntSequence& v) {
    require_nonempty(v, "kronecker_dual_gram");
    const std::size_t n = v.n();
    const SymMatrix full = intersection_matrix(v);
    SymMatrix inner(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            inner.set_sym(i, j, full.at(i + 1, j + 1));
    try {
        return invert_dense(inner);
    } catch (const singular_matrix&) {
        throw singular_intersection_block(
            "kronecker_dual_gram: intersection block is singular");
    }
}

}  // namespace pvseq
