#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "tietze/rational.hpp"
#include "tietze/sequence.hpp"

namespace tietze {

enum class ExpansionAlgo { Regular, Negative, NearestInteger };

inline const char* to_string(ExpansionAlgo algo) {
    switch (algo) {
    case ExpansionAlgo::Regular: return "regular";
    case ExpansionAlgo::Negative: return "negative";
    case ExpansionAlgo::NearestInteger: return "nearest";
    }
    return "?";
}

inline std::optional<ExpansionAlgo> parse_algo(std::string_view name) {
    if (name == "regular") return ExpansionAlgo::Regular;
    if (name == "negative") return ExpansionAlgo::Negative;
    if (name == "nearest") return ExpansionAlgo::NearestInteger;
    return std::nullopt;
}

/// Euclidean expansion: b_0 = floor(x), every a_n = +1, integer b_n >= 1.
inline SemiRegularCF regular_expand(const Rational& x) {
    Rational b0 = x.floor();
    Rational rest = x - b0;
    std::vector<Term> terms;
    while (rest != 0) {
        Rational y = rest.reciprocal();
        Rational b = y.floor();
        rest = y - b;
        terms.push_back(Term{Sign::Plus, std::move(b)});
    }
    return SemiRegularCF(std::move(b0), std::move(terms));
}

/// Minus expansion x = b_0 - 1/(b_1 - 1/(b_2 - ...)): b_0 = ceil(x), every
/// a_n = -1, integer b_n >= 2. Integers expand to b_0 alone.
inline SemiRegularCF negative_expand(const Rational& x) {
    Rational b0 = x.ceil();
    Rational rest = b0 - x;
    std::vector<Term> terms;
    while (rest != 0) {
        Rational y = rest.reciprocal();
        Rational b = y.ceil();
        rest = b - y;
        terms.push_back(Term{Sign::Minus, std::move(b)});
    }
    return SemiRegularCF(std::move(b0), std::move(terms));
}

/// Nearest-integer expansion: each step takes the closest integer and
/// continues with the signed remainder. Halves round away from zero, so a
/// remainder of exactly 1/2 always appears as -1/2 and yields b = 2.
/// Every b_n >= 2.
inline SemiRegularCF nearest_int_expand(const Rational& x) {
    Rational b0 = x.round_half_away();
    Rational rest = x - b0;
    std::vector<Term> terms;
    while (rest != 0) {
        Sign a = rest.sign() > 0 ? Sign::Plus : Sign::Minus;
        Rational y = rest.abs().reciprocal();
        Rational b = y.round_half_away();
        rest = y - b;
        terms.push_back(Term{a, std::move(b)});
    }
    return SemiRegularCF(std::move(b0), std::move(terms));
}

inline SemiRegularCF expand(ExpansionAlgo algo, const Rational& x) {
    switch (algo) {
    case ExpansionAlgo::Regular: return regular_expand(x);
    case ExpansionAlgo::Negative: return negative_expand(x);
    case ExpansionAlgo::NearestInteger: return nearest_int_expand(x);
    }
    throw std::invalid_argument("unknown expansion algorithm");
}

/// Parameters of random_tietze().
struct RandomSpec {
    std::uint64_t seed = 0;
    std::size_t length = 1;
    /// Upper end for b_n. Must be >= 2 so that a = -1 stays reachable.
    Rational b_max = 4;
    /// Probability of a_n = -1, in [0, 1].
    Rational minus_probability = Rational(1, 2);
    bool integer_only = false;
    /// Largest denominator of a non-integer b_n.
    std::uint32_t max_denominator = 12;
};

namespace detail {

inline std::int64_t to_int64(const Integer& z) {
    if (!z.fits_slong_p()) {
        throw std::invalid_argument("random_tietze: b_max too large");
    }
    return z.get_si();
}

} // namespace detail

/// Seeded random sequence satisfying the admissibility conditions by
/// construction. The a_n are drawn first; then b_n is drawn from [2, b_max]
/// when a_{n+1} = -1 and from [1, b_max] otherwise. Non-integer b_n have a
/// denominator drawn from [1, max_denominator].
inline SemiRegularCF random_tietze(const RandomSpec& spec) {
    if (spec.length == 0) {
        throw std::invalid_argument("random_tietze: length must be >= 1");
    }
    if (spec.b_max < 2) {
        throw std::invalid_argument("random_tietze: b_max must be >= 2");
    }
    if (spec.minus_probability < 0 || spec.minus_probability > 1) {
        throw std::invalid_argument("random_tietze: minus_probability must lie in [0, 1]");
    }
    if (spec.max_denominator == 0) {
        throw std::invalid_argument("random_tietze: max_denominator must be >= 1");
    }
    std::mt19937_64 rng(spec.seed);
    auto uniform = [&](std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
    };

    const std::int64_t p_num = detail::to_int64(spec.minus_probability.numerator());
    const std::int64_t p_den = detail::to_int64(spec.minus_probability.denominator());
    std::vector<Sign> signs(spec.length);
    for (auto& a : signs) {
        a = uniform(0, p_den - 1) < p_num ? Sign::Minus : Sign::Plus;
    }

    std::vector<Term> terms;
    terms.reserve(spec.length);
    for (std::size_t i = 0; i < spec.length; ++i) {
        bool next_is_minus = i + 1 < spec.length && signs[i + 1] == Sign::Minus;
        std::int64_t lo = next_is_minus ? 2 : 1;
        Rational b;
        if (spec.integer_only) {
            b = uniform(lo, detail::to_int64(spec.b_max.floor()));
        } else {
            std::int64_t den = uniform(1, spec.max_denominator);
            std::int64_t hi = detail::to_int64((spec.b_max * den).floor());
            b = Rational(uniform(lo * den, hi), den);
        }
        terms.push_back(Term{signs[i], std::move(b)});
    }

    std::int64_t b0_num = uniform(-8, 8);
    std::int64_t b0_den = uniform(1, spec.integer_only ? 1 : spec.max_denominator);
    Rational b0(b0_num, b0_den);
    return SemiRegularCF(std::move(b0), std::move(terms));
}

} // namespace tietze
