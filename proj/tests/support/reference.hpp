#pragma once

// Test-only reference arithmetic. Uses Boost.Multiprecision's cpp_rational
// rather than GMP, and evaluates continued fractions straight from their
// nested definition, so nothing here shares a code path with the library.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <vector>

#include "tietze/rational.hpp"
#include "tietze/sequence.hpp"

namespace tietze::testing {

using RefRational = boost::multiprecision::cpp_rational;

inline RefRational to_ref(const Rational& r) {
    return RefRational(r.str());
}

inline Rational from_ref(const RefRational& r) {
    return Rational::from_string(r.str());
}

struct RefTerm {
    int a;
    RefRational b;
};

struct RefSequence {
    RefRational b0;
    std::vector<RefTerm> terms;
};

inline RefSequence to_ref(const SemiRegularCF& cf, std::size_t n) {
    RefSequence out{to_ref(cf.b0()), {}};
    for (std::size_t i = 1; i <= n; ++i) {
        Term t = cf.term(i);
        out.terms.push_back({to_int(t.a), to_ref(t.b)});
    }
    return out;
}

// a_{i+1}/(b_{i+1} + a_{i+2}/(... + a_last/b_last)), straight recursion.
inline RefRational nested_tail(const RefSequence& s, std::size_t i, std::size_t last) {
    const RefTerm& t = s.terms[i];
    if (i + 1 == last) {
        return RefRational(t.a) / t.b;
    }
    return RefRational(t.a) / (t.b + nested_tail(s, i + 1, last));
}

// b_0 + a_1/(b_1 + ... + a_n/b_n).
inline RefRational nested_value(const RefSequence& s, std::size_t n) {
    if (n == 0) {
        return s.b0;
    }
    return s.b0 + nested_tail(s, 0, n);
}

// x_{n,k}.
inline RefRational nested_tail_value(const RefSequence& s, std::size_t n, std::size_t k) {
    return nested_tail(s, n, n + k);
}

// Fibonacci numbers F_0 = 0, F_1 = 1, ... by direct iteration.
inline RefRational fibonacci(std::size_t n) {
    boost::multiprecision::cpp_int a = 0, b = 1;
    for (std::size_t i = 0; i < n; ++i) {
        boost::multiprecision::cpp_int c = a + b;
        a = b;
        b = c;
    }
    return RefRational(a);
}

} // namespace tietze::testing
