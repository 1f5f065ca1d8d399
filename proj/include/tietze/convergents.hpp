#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tietze/errors.hpp"
#include "tietze/rational.hpp"
#include "tietze/sequence.hpp"

namespace tietze {

class ConvergentState;
inline ConvergentState init_state(const Rational& b0);
inline ConvergentState step_unchecked(const ConvergentState& s, const Term& t);

/// Sliding window (n, p_{n-1}, p_n, q_{n-1}, q_n) of the three-term
/// recurrence
///
///     p_n = b_n p_{n-1} + a_n p_{n-2},   p_{-1} = 1, p_0 = b_0
///     q_n = b_n q_{n-1} + a_n q_{n-2},   q_{-1} = 0, q_0 = 1
///
/// together with the running product a_1 a_2 ... a_n and the last b_n (needed
/// to check b_n + a_{n+1} >= 1 when the next term arrives). Only init_state()
/// and step() construct states.
class ConvergentState {
public:
    std::size_t index() const { return n_; }
    const Rational& p_prev() const { return p_prev_; }
    const Rational& p() const { return p_; }
    const Rational& q_prev() const { return q_prev_; }
    const Rational& q() const { return q_; }
    Sign det_product() const { return det_product_; }
    const std::optional<Rational>& last_b() const { return last_b_; }

    /// p_n / q_n. Throws std::domain_error if q_n = 0 (unreachable for
    /// valid sequences).
    Rational value() const { return p_ / q_; }

    friend bool operator==(const ConvergentState&, const ConvergentState&) = default;

private:
    friend ConvergentState init_state(const Rational& b0);
    friend ConvergentState step_unchecked(const ConvergentState& s, const Term& t);

    std::size_t n_ = 0;
    Rational p_prev_ = 1;
    Rational p_ = 0;
    Rational q_prev_ = 0;
    Rational q_ = 1;
    Sign det_product_ = Sign::Plus;
    std::optional<Rational> last_b_;
};

inline ConvergentState init_state(const Rational& b0) {
    ConvergentState s;
    s.p_ = b0;
    return s;
}

/// Advances the window without checking admissibility. For probing invalid
/// sequences in experiments.
inline ConvergentState step_unchecked(const ConvergentState& s, const Term& t) {
    ConvergentState next;
    next.n_ = s.n_ + 1;
    next.p_prev_ = s.p_;
    next.q_prev_ = s.q_;
    next.p_ = t.b * s.p_ + t.a * s.p_prev_;
    next.q_ = t.b * s.q_ + t.a * s.q_prev_;
    next.det_product_ = s.det_product_ * t.a;
    next.last_b_ = t.b;
    return next;
}

enum class StepCheck { Checked, Unchecked };

/// Appends term s.index()+1. In checked mode throws TietzeViolation when the
/// new term has b < 1 or when the previous term fails b_n + a_{n+1} >= 1.
inline ConvergentState step(const ConvergentState& s, const Term& t,
                            StepCheck check = StepCheck::Checked) {
    if (check == StepCheck::Checked) {
        if (s.last_b() && *s.last_b() + Rational(to_int(t.a)) < 1) {
            throw TietzeViolation(s.index(), ViolationReason::GapViolation);
        }
        if (t.b < 1) {
            throw TietzeViolation(s.index() + 1, ViolationReason::BTooSmall);
        }
    }
    return step_unchecked(s, t);
}

/// State at index n, reached by checked steps from n = 0.
inline ConvergentState state_at(const SemiRegularCF& cf, std::size_t n) {
    cf.require(n);
    ConvergentState s = init_state(cf.b0());
    for (std::size_t i = 1; i <= n; ++i) {
        s = step(s, cf.term(i));
    }
    return s;
}

/// States for indices 0..n inclusive.
inline std::vector<ConvergentState> states_through(const SemiRegularCF& cf, std::size_t n) {
    cf.require(n);
    std::vector<ConvergentState> out;
    out.reserve(n + 1);
    out.push_back(init_state(cf.b0()));
    for (std::size_t i = 1; i <= n; ++i) {
        out.push_back(step(out.back(), cf.term(i)));
    }
    return out;
}

/// p_n / q_n, the value of the finite continued fraction b_0 + a_1/b_1 + ... + a_n/b_n.
inline Rational convergent(const SemiRegularCF& cf, std::size_t n) {
    return state_at(cf, n).value();
}

/// Verifies p_n q_{n-1} - p_{n-1} q_n = (-1)^{n-1} a_1 ... a_n and returns
/// that sign. Throws IdentityViolation if the identity fails.
inline Sign determinant_check(const ConvergentState& s) {
    if (s.index() == 0) {
        throw std::invalid_argument("determinant identity needs n >= 1");
    }
    Sign alternating = (s.index() % 2 == 1) ? Sign::Plus : Sign::Minus;
    Sign expected = alternating * s.det_product();
    Rational cross = s.p() * s.q_prev() - s.p_prev() * s.q();
    if (cross != Rational(to_int(expected))) {
        throw IdentityViolation("determinant identity fails at n = " + std::to_string(s.index())
                                + ": cross product is " + cross.str());
    }
    return expected;
}

/// b_0 + sum_{k=1..n} (-1)^{k-1} a_1...a_k / (q_{k-1} q_k).
///
/// Only the q recurrence is shared with convergent(); the numerators p_k are
/// never formed, so agreement with convergent() is a real check.
inline Rational series_partial_sum(const SemiRegularCF& cf, std::size_t n) {
    require_valid(cf, n);
    Rational sum = cf.b0();
    Rational q_prev = 0;
    Rational q = 1;
    Sign product = Sign::Plus;
    for (std::size_t k = 1; k <= n; ++k) {
        Term t = cf.term(k);
        Rational q_next = t.b * q + t.a * q_prev;
        product = product * t.a;
        Sign sign = (k % 2 == 1) ? product : -product;
        sum += sign * (Rational(1) / (q * q_next));
        q_prev = std::move(q);
        q = std::move(q_next);
    }
    return sum;
}

/// q_n + a_{n+1} q_{n-1}; at least 1 along any valid sequence.
inline Rational gap(const ConvergentState& s, Sign a_next) {
    return s.q() + a_next * s.q_prev();
}

} // namespace tietze
