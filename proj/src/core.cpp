#include "pvseq/core.hpp"

#include <optional>
#include <stdexcept>

namespace pvseq {

namespace {

const Vec2 kV0{Rational(0), Rational(1)};
const Vec2 kVnPlus1{Rational(1), Rational(0)};

}  // namespace

Rational cross(const Vec2& u, const Vec2& w) {
    return u.a * w.b - w.a * u.b;
}

const Vec2& VectorSequence::vec(std::size_t i) const {
    const std::size_t n = inner_.size();
    if (i == 0 || i == n + 2) return kV0;
    if (i == n + 1) return kVnPlus1;
    if (i > n + 2) throw std::out_of_range("VectorSequence::vec: index past n+2");
    return inner_[i - 1];
}

bool satisfies_assumption(const VectorSequence& v) {
    for (std::size_t i = 0; i <= v.n(); ++i)
        if (cross(v.vec(i), v.vec(i + 1)).is_zero()) return false;
    return true;
}

namespace {

// Lowest applicable 1-based index and its removal reason, if any.
std::optional<std::pair<std::size_t, ReductionReason>>
next_removal(const std::vector<Vec2>& w) {
    const std::size_t n = w.size();
    for (std::size_t idx = 1; idx <= n; ++idx) {
        const Vec2& cur = w[idx - 1];
        if (cur.is_zero())
            return {{idx, ReductionReason::ZeroVector}};
        if (idx == 1 && cur.a.is_zero())
            return {{idx, ReductionReason::DependentWithV0}};
        if (idx == n && cur.b.is_zero())
            return {{idx, ReductionReason::DependentWithVnPlus1}};
        if (idx >= 2 && cross(w[idx - 2], cur).is_zero())
            return {{idx, ReductionReason::DependentWithPredecessor}};
    }
    return std::nullopt;
}

}  // namespace

ReductionReport reduce(const VectorSequence& v) {
    ReductionReport report;
    std::vector<Vec2> work = v.inner();
    while (auto hit = next_removal(work)) {
        work.erase(work.begin() + static_cast<std::ptrdiff_t>(hit->first - 1));
        report.steps.push_back(*hit);
    }
    report.reduced = VectorSequence(std::move(work));
    report.removed_count = report.steps.size();
    return report;
}

VectorSequence flip(const VectorSequence& v, std::size_t i) {
    if (i < 1 || i > v.n())
        throw std::out_of_range("flip: index must be in 1..n");
    std::vector<Vec2> w = v.inner();
    w[i - 1] = -w[i - 1];
    return VectorSequence(std::move(w));
}

}  // namespace pvseq
