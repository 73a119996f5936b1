#include "pvseq/winding.hpp"

namespace pvseq {

namespace {

void require_assumption(const VectorSequence& v) {
    if (!satisfies_assumption(v))
        throw degenerate_sequence("some det(v_i, v_{i+1}) vanishes");
}

}  // namespace

int s_value(const VectorSequence& v) {
    require_assumption(v);
    int sum = 1;
    for (std::size_t i = 0; i <= v.n(); ++i)
        sum += cross(v.vec(i), v.vec(i + 1)).sgn();
    return sum;
}

Vec2 reference_direction(const VectorSequence& v) {
    // Each v_i is collinear with (1, N) for at most one N, so the search
    // ends by N = n + 2.
    for (long N = 0;; ++N) {
        Vec2 d{Rational(1), Rational(N)};
        bool ok = true;
        for (std::size_t i = 0; i <= v.n() + 1 && ok; ++i)
            ok = !cross(v.vec(i), d).is_zero();
        if (ok) return d;
    }
}

int rotation_number_with(const VectorSequence& v, const Vec2& d) {
    require_assumption(v);
    int winding = 0;
    for (std::size_t i = 0; i <= v.n() + 1; ++i) {
        const Vec2& u = v.vec(i);
        const Vec2& w = v.vec(i + 1);
        // The arc is < pi, so it sweeps past the ray through d at most once:
        // exactly when d lies strictly inside the cone from u to w taken in
        // the direction of s.
        const int s = cross(u, w).sgn();
        if (cross(u, d).sgn() == s && cross(d, w).sgn() == s) winding += s;
    }
    return winding;
}

int rotation_number(const VectorSequence& v) {
    require_assumption(v);
    return rotation_number_with(v, reference_direction(v));
}

WindingReport winding_report(const VectorSequence& v) {
    require_assumption(v);
    WindingReport report;
    report.det_signs.reserve(v.n() + 1);
    for (std::size_t i = 0; i <= v.n(); ++i)
        report.det_signs.push_back(cross(v.vec(i), v.vec(i + 1)).sgn());
    report.s_value = 1;
    for (int s : report.det_signs) report.s_value += s;
    report.rotation = rotation_number(v);
    report.predicted_signature = 4 * report.rotation - report.s_value;
    return report;
}

TheoremCheck verify_main_theorem(const VectorSequence& v) {
    TheoremCheck check;
    check.report = winding_report(v);
    check.signature = signature(build_gram(v));
    check.ok = check.signature == check.report.predicted_signature;
    return check;
}

VectorSequence upper_half_witness(std::size_t n, std::size_t k) {
    // Counterclockwise fan v_i = (-i, k+1-i) for i <= k, then clockwise fan
    // v_i = (i-k, n+1-i); every b_i >= 1 and every det sign is forced.
    std::vector<Vec2> inner;
    inner.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) {
        if (i <= k)
            inner.push_back({Rational(-static_cast<long>(i)),
                             Rational(static_cast<long>(k + 1 - i))});
        else
            inner.push_back({Rational(static_cast<long>(i - k)),
                             Rational(static_cast<long>(n + 1 - i))});
    }
    return VectorSequence(std::move(inner));
}

bool corollary_check(std::size_t n, std::size_t k) {
    const VectorSequence v = upper_half_witness(n, k);
    const int expected_sign = static_cast<int>(n) - 2 * static_cast<int>(k);
    return signature(build_gram(v)) == expected_sign &&
           rotation_number(v) == 0 &&
           s_value(v) == -expected_sign;
}

}  // namespace pvseq
