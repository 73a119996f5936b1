#include "pvseq/tridiag.hpp"

#include <cmath>
#include <stdexcept>

namespace pvseq {

TriDiagSym::TriDiagSym(std::vector<Rational> diag, std::vector<Rational> super)
    : diag_(std::move(diag)), super_(std::move(super)) {
    const std::size_t expected = diag_.empty() ? 0 : diag_.size() - 1;
    if (super_.size() != expected)
        throw std::invalid_argument("TriDiagSym: superdiagonal length must be order-1");
}

SymMatrix TriDiagSym::to_sym() const {
    const std::size_t n = order();
    SymMatrix a(n);
    for (std::size_t i = 0; i < n; ++i) a.set_sym(i, i, diag_[i]);
    for (std::size_t i = 0; i + 1 < n; ++i) a.set_sym(i, i + 1, super_[i]);
    return a;
}

namespace {

// Leading minors D_0..D_n of a tridiagonal matrix.
std::vector<Rational> top_minors(const TriDiagSym& b) {
    const std::size_t n = b.order();
    std::vector<Rational> d(n + 1);
    d[0] = Rational(1);
    for (std::size_t k = 1; k <= n; ++k) {
        d[k] = b.diag()[k - 1] * d[k - 1];
        if (k >= 2) d[k] -= b.super()[k - 2] * b.super()[k - 2] * d[k - 2];
    }
    return d;
}

// Trailing minors N_0..N_n (N_k = det of the lower-right k x k block).
std::vector<Rational> bottom_minors(const TriDiagSym& b) {
    const std::size_t n = b.order();
    std::vector<Rational> d(n + 1);
    d[0] = Rational(1);
    for (std::size_t k = 1; k <= n; ++k) {
        d[k] = b.diag()[n - k] * d[k - 1];
        if (k >= 2) d[k] -= b.super()[n - k] * b.super()[n - k] * d[k - 2];
    }
    return d;
}

}  // namespace

Rational tridiag_det(const TriDiagSym& b) { return top_minors(b).back(); }

bool in_w(const TriDiagSym& b) {
    for (const Rational& q : b.super())
        if (q.is_zero()) return false;
    return !tridiag_det(b).is_zero();
}

TriDiagSym inverse_closed_form(const VectorSequence& v) {
    const std::size_t n = v.n();
    if (n == 0)
        throw degenerate_sequence("inverse_closed_form: empty sequence");
    if (!satisfies_assumption(v))
        throw degenerate_sequence("inverse_closed_form: assumption fails");

    std::vector<Rational> m(n + 1);
    for (std::size_t i = 0; i <= n; ++i) m[i] = cross(v.vec(i), v.vec(i + 1));

    std::vector<Rational> diag(n), super(n >= 1 ? n - 1 : 0);
    for (std::size_t i = 1; i <= n; ++i)
        diag[i - 1] = -cross(v.vec(i - 1), v.vec(i + 1)) / (m[i - 1] * m[i]);
    for (std::size_t i = 1; i + 1 <= n; ++i) super[i - 1] = m[i].inv();
    return TriDiagSym(std::move(diag), std::move(super));
}

Rational cofactor_tridiag(const TriDiagSym& b, std::size_t i, std::size_t j) {
    if (i > j) return cofactor_tridiag(b, j, i);
    const std::size_t n = b.order();
    if (j >= n) throw std::out_of_range("cofactor_tridiag: index past order");
    const std::vector<Rational> top = top_minors(b);
    const std::vector<Rational> bottom = bottom_minors(b);
    Rational c = top[i] * bottom[n - 1 - j];
    for (std::size_t l = i; l < j; ++l) c *= b.super()[l];
    return (i + j) % 2 == 0 ? c : -c;
}

VectorSequence reconstruct(const TriDiagSym& b) {
    const std::size_t n = b.order();
    if (n == 0) return VectorSequence();
    for (const Rational& q : b.super())
        if (q.is_zero()) throw not_in_w("reconstruct: zero superdiagonal entry");
    const Rational d = tridiag_det(b);
    if (d.is_zero()) throw not_in_w("reconstruct: singular matrix");

    const Rational c_first_last = cofactor_tridiag(b, 0, n - 1);
    std::vector<Vec2> inner(n);
    for (std::size_t idx = 0; idx < n; ++idx) {
        inner[idx].a = cofactor_tridiag(b, idx, n - 1) / c_first_last;
        inner[idx].b = cofactor_tridiag(b, 0, idx) / d;
    }
    return VectorSequence(std::move(inner));
}

ComponentLabel classify(const VectorSequence& v) {
    if (!satisfies_assumption(v))
        throw degenerate_sequence("classify: assumption fails");
    ComponentLabel label;
    const std::size_t n = v.n();
    for (std::size_t i = 1; i + 1 <= n; ++i)
        label.interior_signs.push_back(cross(v.vec(i), v.vec(i + 1)).sgn());
    label.signature = signature(build_gram(v));
    return label;
}

TypeLabel type_label(const VectorSequence& v) {
    const std::size_t n = v.n();
    for (std::size_t i = 0; i + 1 <= n; ++i)
        if (cross(v.vec(i), v.vec(i + 1)).sgn() <= 0)
            throw not_normalized("type_label: det(v_i, v_{i+1}) <= 0 below the last pair");
    const int last = cross(v.vec(n), v.vec(n + 1)).sgn();
    if (last == 0) throw degenerate_sequence("type_label: det(v_n, v_{n+1}) = 0");
    TypeLabel label;
    label.family = last < 0 ? TypeFamily::I : TypeFamily::II;
    label.k = rotation_number(v);
    return label;
}

namespace {

// theta mod 360 into [0, 360)
Rational mod360(const Rational& theta) {
    mpz_class fq;
    mpz_class num = theta.num(), den = theta.den() * 360;
    mpz_fdiv_q(fq.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return theta - Rational(fq * 360, 1);
}

// Rational point of the unit circle near angle theta (degrees), via the
// tangent-half-angle parametrization with t snapped to a dyadic rational of
// the given precision. Angles in [90, 270) go through the antipode so the
// parameter stays in [-1, 1].
Vec2 circle_point(const Rational& theta, int precision_bits) {
    Rational th = mod360(theta);
    bool negate = false;
    if (th >= Rational(90) && th < Rational(270)) {
        negate = true;
        th -= Rational(180);
    } else if (th >= Rational(270)) {
        th -= Rational(360);
    }
    const double half_rad = th.to_double() * std::acos(-1.0) / 360.0;
    const long long scale = 1LL << precision_bits;
    const long long snapped =
        std::llround(std::tan(half_rad) * static_cast<double>(scale));
    const Rational t(snapped, scale);
    const Rational denom = Rational(1) + t * t;
    Vec2 p{(Rational(1) - t * t) / denom, (Rational(2) * t) / denom};
    return negate ? -p : p;
}

void validate_type(std::size_t n, const TypeLabel& label) {
    if (n == 0) throw invalid_label("type_witness: n must be >= 1");
    const int k = label.k;
    if (label.family == TypeFamily::I) {
        if (k < 0 || k > static_cast<int>(n / 2))
            throw invalid_label("type_witness: Type I needs 0 <= k <= n/2");
    } else {
        if (k < 1 || k > static_cast<int>((n + 1) / 2))
            throw invalid_label("type_witness: Type II needs 1 <= k <= (n+1)/2");
    }
}

VectorSequence witness_at_precision(std::size_t n, const TypeLabel& label,
                                    int precision_bits) {
    // Counterclockwise steps of width delta from 90 degrees; the step is
    // sized so the final arc closes with the required direction and total
    // turning 360k.
    Rational delta;
    if (label.family == TypeFamily::I)
        delta = label.k == 0
                    ? Rational(45, static_cast<long>(n))
                    : Rational(360L * label.k - 45, static_cast<long>(n));
    else
        delta = Rational(360L * label.k - 90, static_cast<long>(n + 1));

    std::vector<Vec2> inner(n);
    for (std::size_t i = 1; i <= n; ++i)
        inner[i - 1] = circle_point(
            Rational(90) + Rational(static_cast<long>(i)) * delta, precision_bits);
    return VectorSequence(std::move(inner));
}

bool matches_type(const VectorSequence& v, const TypeLabel& label) {
    const std::size_t n = v.n();
    for (std::size_t i = 0; i + 1 <= n; ++i)
        if (cross(v.vec(i), v.vec(i + 1)).sgn() != 1) return false;
    const int want_last = label.family == TypeFamily::I ? -1 : 1;
    if (cross(v.vec(n), v.vec(n + 1)).sgn() != want_last) return false;
    return rotation_number(v) == label.k;
}

constexpr int kMinPrecision = 16;
constexpr int kMaxPrecision = 48;

}  // namespace

VectorSequence type_witness(std::size_t n, const TypeLabel& label) {
    validate_type(n, label);
    for (int bits = kMinPrecision; bits <= kMaxPrecision; bits += 8) {
        VectorSequence v = witness_at_precision(n, label, bits);
        if (matches_type(v, label)) return v;
    }
    throw internal_check_failure("type_witness: refinement exhausted");
}

VectorSequence realize(std::size_t n, const ComponentLabel& label) {
    if (n == 0) throw invalid_label("realize: n must be >= 1");
    if (label.interior_signs.size() != n - 1)
        throw invalid_label("realize: expected n-1 interior signs");
    for (int s : label.interior_signs)
        if (s != 1 && s != -1) throw invalid_label("realize: signs must be +-1");
    const int sigma = label.signature;
    if (std::abs(sigma) > static_cast<int>(n) ||
        (sigma - static_cast<int>(n)) % 2 != 0)
        throw invalid_label("realize: signature out of range or wrong parity");

    // Sign = 4k - n on Type I and 4k - n - 2 on Type II picks the type.
    TypeLabel type;
    if ((sigma + static_cast<int>(n)) % 4 == 0) {
        type.family = TypeFamily::I;
        type.k = (sigma + static_cast<int>(n)) / 4;
    } else {
        type.family = TypeFamily::II;
        type.k = (sigma + static_cast<int>(n) + 2) / 4;
    }

    for (int bits = kMinPrecision; bits <= kMaxPrecision; bits += 8) {
        VectorSequence v = witness_at_precision(n, type, bits);
        if (!matches_type(v, type)) continue;
        // Greedy suffix flips: negating v_{i+1}..v_n toggles exactly
        // sgn det(v_i, v_{i+1}) among the classified signs.
        std::vector<Vec2> work = v.inner();
        for (std::size_t i = 1; i + 1 <= n; ++i) {
            const int current = cross(work[i - 1], work[i]).sgn();
            if (current != label.interior_signs[i - 1])
                for (std::size_t j = i; j < n; ++j) work[j] = -work[j];
        }
        VectorSequence flipped{std::move(work)};
        if (classify(flipped) == label) return flipped;
    }
    throw internal_check_failure("realize: refinement exhausted");
}

VectorSequence scale_action(const VectorSequence& v, const Rational& r) {
    if (r.is_zero()) throw std::domain_error("scale_action: r must be nonzero");
    std::vector<Vec2> inner = v.inner();
    for (Vec2& w : inner) {
        w.a *= r;
        w.b /= r;
    }
    return VectorSequence(std::move(inner));
}

VectorSequence normalize_first_a(const VectorSequence& v) {
    if (v.n() == 0) return v;
    const Rational& a1 = v.vec(1).a;
    if (a1.is_zero())
        throw degenerate_sequence("normalize_first_a: a_1 = 0");
    return scale_action(v, a1.inv());
}

}  // namespace pvseq
