#include "pvseq/sweep.hpp"

#include "pvseq/orbifold.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pvseq {

bool check_main_theorem(const VectorSequence& v, std::string* why) {
    const TheoremCheck check = verify_main_theorem(v);
    if (check.ok) return true;
    if (why)
        *why = "Sign(A) = " + std::to_string(check.signature) + " but 4R-S = " +
               std::to_string(check.report.predicted_signature);
    return false;
}

bool check_inverse_roundtrip(const VectorSequence& v, std::string* why) {
    const TriDiagSym b = inverse_closed_form(v);
    if (!product_is_identity(b.to_sym(), build_gram(v))) {
        if (why) *why = "closed-form inverse times A is not the identity";
        return false;
    }
    if (reconstruct(b) != normalize_first_a(v)) {
        if (why) *why = "reconstruct(Psi(v)) differs from the a_1-normalized v";
        return false;
    }
    return true;
}

bool check_w_roundtrip(const TriDiagSym& b, std::string* why) {
    const VectorSequence v = reconstruct(b);
    if (inverse_closed_form(v) != b) {
        if (why) *why = "Psi(reconstruct(B)) differs from B";
        return false;
    }
    return true;
}

bool check_orbifold_identities(const VectorSequence& raw, std::string* why) {
    const IntSequence v{raw};
    const std::size_t cycle = raw.n() + 2;
    const SymMatrix full = intersection_matrix(v);

    // det(v_i, v_{i+1}) * push(i, i+1) = 1, cyclically.
    for (std::size_t i = 0; i < cycle; ++i) {
        const Rational m = cross(raw.vec(i), raw.vec(i + 1));
        if (m * full.at(i, (i + 1) % cycle) != Rational(1)) {
            if (why) *why = "adjacent push-forward is not 1/det at i=" + std::to_string(i);
            return false;
        }
    }

    // Cyclically non-adjacent classes have vanishing products.
    for (std::size_t i = 0; i < cycle; ++i)
        for (std::size_t j = i; j < cycle; ++j) {
            const std::size_t gap = std::min(j - i, cycle - (j - i));
            if (gap >= 2 && !full.at(i, j).is_zero()) {
                if (why) *why = "non-adjacent push-forward is nonzero";
                return false;
            }
        }

    if (!pullback_relation_check(v)) {
        if (why) *why = "pullback relation fails";
        return false;
    }

    // Localization sums are point-independent.
    const std::vector<Rational> pts = admissible_points(v, 3);
    for (std::size_t i = 0; i < cycle; ++i)
        for (std::size_t j = i; j < cycle; ++j) {
            const Rational a = localization_sum(v, i, j, pts[0]);
            if (localization_sum(v, i, j, pts[1]) != a ||
                localization_sum(v, i, j, pts[2]) != a) {
                if (why) *why = "localization sum varies with the evaluation point";
                return false;
            }
        }

    // Inner block = closed-form inverse of A, and its inverse is A again.
    const std::size_t n = raw.n();
    const SymMatrix closed = inverse_closed_form(raw).to_sym();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (full.at(i + 1, j + 1) != closed.at(i, j)) {
                if (why) *why = "intersection block differs from the closed-form inverse";
                return false;
            }
    if (kronecker_dual_gram(v) != build_gram(raw)) {
        if (why) *why = "inverse of the intersection block differs from A";
        return false;
    }
    return true;
}

bool check_sylvester_minors(const VectorSequence& v, std::string* why) {
    const SymMatrix a = build_gram(v);
    const Inertia exact = inertia_congruence(a);
    try {
        const int negatives = negatives_by_minors(a);
        if (negatives != exact.negative || exact.zero != 0) {
            if (why) *why = "minor sign changes disagree with congruence inertia";
            return false;
        }
    } catch (const minor_vanishes&) {
        // Criterion does not apply; nothing to compare.
    }
    return true;
}

namespace {

CaseKernel kernel_for(SweepKind kind) {
    switch (kind) {
        case SweepKind::MainTheorem:
            return [](const FuzzConfig& cfg, std::uint64_t i, std::string* why) {
                return check_main_theorem(generate_sequence(cfg, i), why);
            };
        case SweepKind::InverseRoundtrip:
            return [](const FuzzConfig& cfg, std::uint64_t i, std::string* why) {
                return check_inverse_roundtrip(generate_sequence(cfg, i), why);
            };
        case SweepKind::WRoundtrip:
            return [](const FuzzConfig& cfg, std::uint64_t i, std::string* why) {
                return check_w_roundtrip(generate_tridiag(cfg, i), why);
            };
        case SweepKind::OrbifoldIdentities:
            return [](const FuzzConfig& cfg, std::uint64_t i, std::string* why) {
                FuzzConfig integer_cfg = cfg;
                integer_cfg.integer_only = true;
                return check_orbifold_identities(generate_sequence(integer_cfg, i),
                                                 why);
            };
        case SweepKind::SylvesterMinors:
            return [](const FuzzConfig& cfg, std::uint64_t i, std::string* why) {
                return check_sylvester_minors(generate_sequence(cfg, i), why);
            };
        case SweepKind::Composite:
            return [](const FuzzConfig& cfg, std::uint64_t i, std::string* why) {
                const VectorSequence v = generate_sequence(cfg, i);
                return check_main_theorem(v, why) &&
                       check_inverse_roundtrip(v, why) &&
                       check_sylvester_minors(v, why) &&
                       check_w_roundtrip(generate_tridiag(cfg, i), why) &&
                       (!cfg.integer_only || check_orbifold_identities(v, why));
            };
    }
    throw std::logic_error("kernel_for: unknown sweep kind");
}

bool run_case(const FuzzConfig& cfg, const CaseKernel& kernel, std::uint64_t i,
              std::string* why) {
    try {
        return kernel(cfg, i, why);
    } catch (const std::exception& e) {
        if (why) *why = std::string("exception: ") + e.what();
        return false;
    }
}

}  // namespace

SweepOutcome run_custom_sweep(const FuzzConfig& cfg, const CaseKernel& kernel,
                              ExecMode mode) {
    validate(cfg);
    SweepOutcome outcome;
    outcome.cases = cfg.count;
    const std::int64_t count = static_cast<std::int64_t>(cfg.count);

    if (mode == ExecMode::Serial) {
        for (std::int64_t i = 0; i < count; ++i) {
            std::string why;
            if (!run_case(cfg, kernel, static_cast<std::uint64_t>(i), &why)) {
                ++outcome.failures;
                if (outcome.first_failure < 0) {
                    outcome.first_failure = i;
                    outcome.first_failure_detail = why;
                }
            }
        }
        return outcome;
    }

    std::uint64_t failures = 0;
    std::int64_t first = -1;
    std::string first_detail;
#ifdef _OPENMP
#pragma omp parallel
    {
        std::uint64_t local_failures = 0;
        std::int64_t local_first = -1;
        std::string local_detail;
#pragma omp for schedule(dynamic, 16)
        for (std::int64_t i = 0; i < count; ++i) {
            std::string why;
            if (!run_case(cfg, kernel, static_cast<std::uint64_t>(i), &why)) {
                ++local_failures;
                if (local_first < 0 || i < local_first) {
                    local_first = i;
                    local_detail = why;
                }
            }
        }
#pragma omp critical
        {
            failures += local_failures;
            if (local_first >= 0 && (first < 0 || local_first < first)) {
                first = local_first;
                first_detail = local_detail;
            }
        }
    }
#else
    for (std::int64_t i = 0; i < count; ++i) {
        std::string why;
        if (!run_case(cfg, kernel, static_cast<std::uint64_t>(i), &why)) {
            ++failures;
            if (first < 0) {
                first = i;
                first_detail = why;
            }
        }
    }
#endif
    outcome.failures = failures;
    outcome.first_failure = first;
    outcome.first_failure_detail = std::move(first_detail);
    return outcome;
}

SweepOutcome run_sweep(const FuzzConfig& cfg, SweepKind kind, ExecMode mode) {
    return run_custom_sweep(cfg, kernel_for(kind), mode);
}

}  // namespace pvseq
