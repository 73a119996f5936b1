// End-to-end acceptance suite. Every check is exact rational arithmetic;
// the only tolerance in the file is the abstention floor of the test-only
// floating eigenvalue oracle. Prints one line per criterion and exits with
// the number of failures.

#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "pvseq/orbifold.hpp"
#include "pvseq/sweep.hpp"
#include "test_helpers.hpp"

using namespace pvseq;
using namespace pvseq::testing;

namespace {

int failures = 0;
int criterion_number = 0;

void criterion(const std::string& description, const std::function<bool()>& body) {
    ++criterion_number;
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string(" (") + e.what() + ")";
    }
    if (!ok) ++failures;
    std::printf("criterion %d: %s  %s%s\n", criterion_number,
                ok ? "PASS" : "FAIL", description.c_str(), note.c_str());
    std::fflush(stdout);
}

bool expect(bool condition, const char* what) {
    if (!condition) std::printf("    failed: %s\n", what);
    return condition;
}

// ----- 1: the three worked sequences ---------------------------------------

bool worked_examples() {
    bool ok = true;
    ok &= expect(build_gram(mixed_pair()) == make_sym({{1, 1}, {1, 0}}),
                 "first matrix");
    ok &= expect(build_gram(definite_pair()) == make_sym({{1, 1}, {1, 2}}),
                 "second matrix");
    ok &= expect(build_gram(double_turn()) == make_sym({{1, 0, -1, 1},
                                                        {0, 0, 1, -1},
                                                        {-1, 1, 0, 0},
                                                        {1, -1, 0, 1}}),
                 "third matrix");

    const int expected[3][3] = {{0, 1, 4}, {2, 1, 2}, {2, 2, 6}};
    const VectorSequence seqs[3] = {mixed_pair(), definite_pair(), double_turn()};
    for (int i = 0; i < 3; ++i) {
        const TheoremCheck check = verify_main_theorem(seqs[i]);
        ok &= expect(check.signature == expected[i][0], "signature");
        ok &= expect(check.report.rotation == expected[i][1], "rotation");
        ok &= expect(check.report.s_value == expected[i][2], "S value");
        ok &= expect(check.ok, "signature identity");
    }
    return ok;
}

// ----- 2: the 4x4 whose inverse is a scaled Cartan matrix ------------------

bool cartan_inverse_three_routes() {
    bool ok = true;
    const VectorSequence v = cartan_seq();
    ok &= expect(build_gram(v) == make_sym({{4, 3, 2, 1},
                                            {3, 6, 4, 2},
                                            {2, 4, 6, 3},
                                            {1, 2, 3, 4}}),
                 "matrix A");

    SymMatrix expected(4);
    const long cartan[4][4] = {
        {2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i; j < 4; ++j)
            expected.set_sym(i, j, Rational(cartan[i][j], 5));

    const SymMatrix closed = inverse_closed_form(v).to_sym();
    const SymMatrix dense = invert_dense(build_gram(v));
    const SymMatrix full = intersection_matrix(IntSequence{v});
    SymMatrix localization(4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i; j < 4; ++j)
            localization.set_sym(i, j, full.at(i + 1, j + 1));

    ok &= expect(closed == expected, "closed form route");
    ok &= expect(dense == expected, "dense inversion route");
    ok &= expect(localization == expected, "localization route");
    return ok;
}

// ----- 3: signature identity fuzz ------------------------------------------

bool signature_identity_fuzz() {
    FuzzConfig cfg;
    cfg.seed = 987654321;
    cfg.count = 10000;
    cfg.n_max = 8;
    cfg.entry_bound = 9;
    cfg.integer_only = true;
    const SweepOutcome outcome =
        run_sweep(cfg, SweepKind::MainTheorem, ExecMode::Parallel);
    if (outcome.failures != 0)
        std::printf("    first failure at case %lld: %s\n",
                    static_cast<long long>(outcome.first_failure),
                    outcome.first_failure_detail.c_str());
    return outcome.cases == 10000 && outcome.failures == 0;
}

// ----- 4: upper-half-plane witnesses ----------------------------------------

bool upper_half_witnesses() {
    bool ok = true;
    for (std::size_t n = 1; n <= 6; ++n)
        for (std::size_t k = 0; k <= n; ++k) {
            const VectorSequence v = upper_half_witness(n, k);
            const int target = static_cast<int>(n) - 2 * static_cast<int>(k);
            ok &= expect(signature(build_gram(v)) == target, "signature n-2k");
            ok &= expect(rotation_number(v) == 0, "rotation zero");
            ok &= expect(s_value(v) == -target, "S = -n+2k");
        }
    return ok;
}

// ----- 5: inverse and reconstruction round trips ----------------------------

bool roundtrip_fuzz() {
    FuzzConfig seq_cfg;
    seq_cfg.seed = 555;
    seq_cfg.count = 1000;
    seq_cfg.n_max = 8;
    seq_cfg.entry_bound = 9;
    const SweepOutcome seqs =
        run_sweep(seq_cfg, SweepKind::InverseRoundtrip, ExecMode::Parallel);

    FuzzConfig w_cfg;
    w_cfg.seed = 556;
    w_cfg.count = 1000;
    w_cfg.n_max = 6;
    w_cfg.entry_bound = 9;
    const SweepOutcome ws =
        run_sweep(w_cfg, SweepKind::WRoundtrip, ExecMode::Parallel);

    if (seqs.failures != 0)
        std::printf("    sequence side: %s\n", seqs.first_failure_detail.c_str());
    if (ws.failures != 0)
        std::printf("    matrix side: %s\n", ws.first_failure_detail.c_str());
    return seqs.failures == 0 && ws.failures == 0 && seqs.cases == 1000 &&
           ws.cases == 1000;
}

// ----- 6: component realization ----------------------------------------------

bool component_realization() {
    bool ok = true;
    const std::size_t expected_counts[] = {6, 16, 40};
    for (std::size_t n = 2; n <= 4; ++n) {
        std::set<std::pair<std::vector<int>, int>> seen;
        const std::size_t patterns = std::size_t{1} << (n - 1);
        for (std::size_t bits = 0; bits < patterns; ++bits)
            for (std::size_t k = 0; k <= n; ++k) {
                ComponentLabel label;
                for (std::size_t p = 0; p + 1 < n; ++p)
                    label.interior_signs.push_back((bits >> p) & 1 ? 1 : -1);
                label.signature = static_cast<int>(n) - 2 * static_cast<int>(k);
                const VectorSequence v = realize(n, label);
                ok &= expect(classify(v) == label, "classify(realize(l)) = l");
                seen.insert({label.interior_signs, label.signature});
            }
        ok &= expect(seen.size() == expected_counts[n - 2],
                     "2^{n-1}(n+1) distinct labels");
    }

    for (std::size_t n = 2; n <= 4; ++n) {
        for (int k = 0; k <= static_cast<int>(n / 2); ++k)
            ok &= expect(s_value(type_witness(n, {TypeFamily::I, k})) ==
                             static_cast<int>(n),
                         "family I witness has S = n");
        for (int k = 1; k <= static_cast<int>((n + 1) / 2); ++k)
            ok &= expect(s_value(type_witness(n, {TypeFamily::II, k})) ==
                             static_cast<int>(n) + 2,
                         "family II witness has S = n+2");
    }
    return ok;
}

// ----- 7: localization identities --------------------------------------------

bool localization_identities_fuzz() {
    FuzzConfig cfg;
    cfg.seed = 777;
    cfg.count = 500;
    cfg.n_max = 6;
    cfg.entry_bound = 5;
    cfg.integer_only = true;
    const SweepOutcome outcome =
        run_sweep(cfg, SweepKind::OrbifoldIdentities, ExecMode::Parallel);
    if (outcome.failures != 0)
        std::printf("    first failure at case %lld: %s\n",
                    static_cast<long long>(outcome.first_failure),
                    outcome.first_failure_detail.c_str());
    return outcome.cases == 500 && outcome.failures == 0;
}

// ----- 8: Sylvester cross-checks ----------------------------------------------

bool sylvester_cross_checks() {
    FuzzConfig cfg;
    cfg.seed = 888;
    cfg.count = 2000;
    cfg.n_max = 6;
    cfg.entry_bound = 9;
    cfg.integer_only = true;
    const SweepOutcome minors =
        run_sweep(cfg, SweepKind::SylvesterMinors, ExecMode::Parallel);
    bool ok = expect(minors.failures == 0, "minor route equals congruence");

    int compared = 0;
    for (std::uint64_t i = 0; i < 1000; ++i) {
        const SymMatrix a = build_gram(generate_sequence(cfg, i));
        int pos = 0, neg = 0;
        if (!jacobi_inertia(a, 1e-6, pos, neg)) continue;  // oracle abstains
        ++compared;
        if (inertia_congruence(a) != Inertia{pos, neg, 0}) {
            ok = expect(false, "float oracle disagrees with exact inertia");
            break;
        }
    }
    ok &= expect(compared > 500, "float oracle compared enough cases");
    return ok;
}

}  // namespace

int main() {
    criterion("worked examples reproduce matrices, signatures and winding data",
              worked_examples);
    criterion("worked 4x4 inverse identical via closed form, dense inversion "
              "and localization",
              cartan_inverse_three_routes);
    criterion("Sign(A) = 4R - S on 10000 random integer sequences",
              signature_identity_fuzz);
    criterion("upper-half-plane witnesses realize every signature n - 2k "
              "(n <= 6)",
              upper_half_witnesses);
    criterion("inverse and reconstruction round trips on 1000 + 1000 cases",
              roundtrip_fuzz);
    criterion("all 2^{n-1}(n+1) component labels realized and classified "
              "(n = 2, 3, 4)",
              component_realization);
    criterion("localization identities on 500 random integer sequences",
              localization_identities_fuzz);
    criterion("minor sign changes and float eigenvalue oracle agree with "
              "exact inertia",
              sylvester_cross_checks);

    if (failures == 0)
        std::printf("acceptance: all %d criteria passed\n", criterion_number);
    else
        std::printf("acceptance: %d of %d criteria FAILED\n", failures,
                    criterion_number);
    return failures;
}
