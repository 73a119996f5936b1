#include "pvseq/generate.hpp"

#include <random>
#include <stdexcept>

namespace pvseq {

void validate(const FuzzConfig& cfg) {
    if (cfg.count < 1) throw std::invalid_argument("fuzz: count must be >= 1");
    if (cfg.n_max < 1) throw std::invalid_argument("fuzz: n-max must be >= 1");
    if (cfg.entry_bound < 1)
        throw std::invalid_argument("fuzz: entry-bound must be >= 1");
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::mt19937_64 case_rng(std::uint64_t seed, std::uint64_t index,
                         std::uint64_t attempt) {
    return std::mt19937_64(
        splitmix64(splitmix64(seed ^ 0x706c616e65736571ULL) + index) ^
        splitmix64(attempt));
}

Rational draw_scalar(std::mt19937_64& rng, const FuzzConfig& cfg) {
    std::uniform_int_distribution<long> num(-cfg.entry_bound, cfg.entry_bound);
    if (cfg.integer_only) return Rational(num(rng));
    std::uniform_int_distribution<long> den(1, cfg.entry_bound);
    return Rational(num(rng), den(rng));
}

VectorSequence draw_sequence(std::mt19937_64& rng, const FuzzConfig& cfg) {
    std::uniform_int_distribution<std::size_t> len(1, cfg.n_max);
    std::vector<Vec2> inner(len(rng));
    for (Vec2& w : inner) {
        w.a = draw_scalar(rng, cfg);
        w.b = draw_scalar(rng, cfg);
    }
    return VectorSequence(std::move(inner));
}

constexpr std::uint64_t kMaxRetries = 100;

}  // namespace

VectorSequence generate_sequence(const FuzzConfig& cfg, std::uint64_t index) {
    for (std::uint64_t attempt = 0; attempt < kMaxRetries; ++attempt) {
        std::mt19937_64 rng = case_rng(cfg.seed, index, attempt);
        VectorSequence v = draw_sequence(rng, cfg);
        if (satisfies_assumption(v)) return v;
    }
    throw std::runtime_error("generate_sequence: retry budget exhausted");
}

TriDiagSym generate_tridiag(const FuzzConfig& cfg, std::uint64_t index) {
    for (std::uint64_t attempt = 0; attempt < kMaxRetries; ++attempt) {
        std::mt19937_64 rng = case_rng(cfg.seed ^ 0x7472696469616730ULL, index,
                                       attempt);
        std::uniform_int_distribution<std::size_t> len(1, cfg.n_max);
        const std::size_t n = len(rng);
        std::vector<Rational> diag(n), super(n - 1);
        for (Rational& p : diag) p = draw_scalar(rng, cfg);
        bool zero_q = false;
        for (Rational& q : super) {
            q = draw_scalar(rng, cfg);
            zero_q |= q.is_zero();
        }
        if (zero_q) continue;
        TriDiagSym b(std::move(diag), std::move(super));
        if (!tridiag_det(b).is_zero()) return b;
    }
    throw std::runtime_error("generate_tridiag: retry budget exhausted");
}

VectorSequence generate_raw_sequence(const FuzzConfig& cfg, std::uint64_t index) {
    std::mt19937_64 rng = case_rng(cfg.seed ^ 0x64656772617a7a65ULL, index, 0);
    std::vector<Vec2> inner = draw_sequence(rng, cfg).inner();
    std::uniform_int_distribution<int> mutation(0, 3);
    std::uniform_int_distribution<long> factor(-3, 3);
    for (std::size_t i = 0; i < inner.size(); ++i) {
        switch (mutation(rng)) {
            case 0:
                inner[i] = {Rational(0), Rational(0)};
                break;
            case 1:
                if (i > 0) {
                    const Rational k(factor(rng));
                    inner[i] = {k * inner[i - 1].a, k * inner[i - 1].b};
                }
                break;
            default:
                break;
        }
    }
    return VectorSequence(std::move(inner));
}

}  // namespace pvseq
