// Property sweeps over generated inputs.
//
// Each sweep kind runs an independent per-case check over the generated
// stream; cases share nothing, so the parallel driver is a plain OpenMP
// loop. A serial reference driver is kept alongside it and the two must
// produce identical outcomes for identical configs (the tests assert this;
// bench/ compares their throughput).

#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "pvseq/generate.hpp"

namespace pvseq {

enum class SweepKind {
    MainTheorem,         // Sign(A) = 4R(v) - S(v)
    InverseRoundtrip,    // B A = I and reconstruct(B) = a_1-normalized v
    WRoundtrip,          // inverse_closed_form(reconstruct(B)) = B over W
    OrbifoldIdentities,  // localization identities on integer sequences
    SylvesterMinors,     // minor sign changes vs congruence negatives
    Composite,           // everything applicable to the configured stream
};

enum class ExecMode { Serial, Parallel };

struct SweepOutcome {
    std::uint64_t cases = 0;
    std::uint64_t failures = 0;
    std::int64_t first_failure = -1;  // lowest failing case index, or -1
    std::string first_failure_detail;

    friend bool operator==(const SweepOutcome&, const SweepOutcome&) = default;
};

/// Per-case check: true on pass; on failure may describe why.
using CaseKernel =
    std::function<bool(const FuzzConfig&, std::uint64_t index, std::string* why)>;

SweepOutcome run_sweep(const FuzzConfig& cfg, SweepKind kind, ExecMode mode);

/// Driver with caller-supplied kernel; the named kinds go through here.
SweepOutcome run_custom_sweep(const FuzzConfig& cfg, const CaseKernel& kernel,
                              ExecMode mode);

// The per-case kernels behind the named kinds, usable directly.
bool check_main_theorem(const VectorSequence& v, std::string* why);
bool check_inverse_roundtrip(const VectorSequence& v, std::string* why);
bool check_w_roundtrip(const TriDiagSym& b, std::string* why);
bool check_orbifold_identities(const VectorSequence& v, std::string* why);
bool check_sylvester_minors(const VectorSequence& v, std::string* why);

}  // namespace pvseq
