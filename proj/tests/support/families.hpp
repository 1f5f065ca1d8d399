#pragma once

#include <cstdint>
#include <vector>

#include "tietze/expand.hpp"
#include "tietze/sequence.hpp"

namespace tietze::testing {

// 1 + 1/(1 + 1/(1 + ...)).
inline SemiRegularCF golden() {
    return SemiRegularCF::generated(1, [](std::size_t) { return Term{Sign::Plus, 1}; });
}

inline SemiRegularCF golden(std::size_t length) {
    return golden().truncated(length);
}

// b0 - 1/(2 - 1/(2 - ...)); q_n = n + 1 for every b0.
inline SemiRegularCF all_minus_twos(Rational b0 = 2) {
    return SemiRegularCF::generated(std::move(b0), [](std::size_t) { return Term{Sign::Minus, 2}; });
}

inline SemiRegularCF finite(Rational b0, std::vector<std::pair<int, Rational>> terms) {
    std::vector<Term> out;
    for (auto& [a, b] : terms) {
        out.push_back(Term{a > 0 ? Sign::Plus : Sign::Minus, std::move(b)});
    }
    return SemiRegularCF(std::move(b0), std::move(out));
}

// Seeded mixed corpus: lengths 1..max_length, half the seeds integer-only,
// the minus probability cycling through 0, 1/4, 1/2, 3/4.
inline std::vector<SemiRegularCF> random_corpus(std::size_t count, std::size_t max_length,
                                                std::uint64_t base_seed = 20221) {
    std::vector<SemiRegularCF> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        RandomSpec spec;
        spec.seed = base_seed + i;
        spec.length = 1 + (i * 7919) % max_length;
        spec.b_max = (i % 3 == 0) ? Rational(5, 2) : Rational(6);
        spec.minus_probability = Rational(static_cast<long>(i % 4), 4);
        spec.integer_only = (i % 2 == 0);
        out.push_back(random_tietze(spec));
    }
    return out;
}

} // namespace tietze::testing
