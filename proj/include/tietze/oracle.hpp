#pragma once

#include <cstddef>

#include "tietze/errors.hpp"
#include "tietze/rational.hpp"
#include "tietze/sequence.hpp"

namespace tietze {

/// Evaluates b_0 + a_1/(b_1 + a_2/(b_2 + ... + a_n/b_n)) by one backward
/// pass, innermost fraction first.
///
/// Cross-check oracle for the recurrence engine: shares no code with
/// convergents.hpp or tails.hpp and does not require a valid sequence.
/// Throws ZeroDenominator naming the term whose denominator vanished.
inline Rational fold_eval(const SemiRegularCF& cf, std::size_t n) {
    cf.require(n);
    if (n == 0) {
        return cf.b0();
    }
    Rational acc = cf.term(n).b;
    for (std::size_t i = n; i >= 1; --i) {
        if (acc == 0) {
            throw ZeroDenominator(i);
        }
        Rational numerator(to_int(cf.term(i).a));
        Rational outer = (i == 1) ? cf.b0() : cf.term(i - 1).b;
        acc = outer + numerator / acc;
    }
    return acc;
}

} // namespace tietze
