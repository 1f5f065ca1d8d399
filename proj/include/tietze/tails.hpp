#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tietze/convergents.hpp"
#include "tietze/errors.hpp"
#include "tietze/rational.hpp"
#include "tietze/sequence.hpp"

namespace tietze {

/// x_{n,k} = a_{n+1}/b_{n+1} + a_{n+2}/b_{n+2} + ... + a_{n+k}/b_{n+k}, the
/// value of the depth-k continued fraction that starts after index n.
///
/// On a valid sequence 0 < x_{n,k} <= 1 when a_{n+1} = +1 and
/// -1 <= x_{n,k} < 0 when a_{n+1} = -1.
struct TailValue {
    std::size_t n = 0;
    std::size_t k = 1;
    Rational value;
};

namespace detail {

// Backward recursion x_{j-1,.} = a_j / (b_j + x_{j,.}), seeded with
// x_{end-1,1} = a_end / b_end. Calls `emit(j - 1, x)` for every start index
// from end-1 down to `stop`.
template <typename Emit>
void backward_tails(const SemiRegularCF& cf, std::size_t stop, std::size_t end, Emit&& emit) {
    Term innermost = cf.term(end);
    if (innermost.b < 1) {
        throw DenominatorBelowOne(end, innermost.b);
    }
    Rational x = innermost.a * innermost.b.reciprocal();
    emit(end - 1, x);
    for (std::size_t j = end - 1; j > stop; --j) {
        Term t = cf.term(j);
        Rational denom = t.b + x;
        if (denom < 1) {
            throw DenominatorBelowOne(j, denom);
        }
        x = t.a * denom.reciprocal();
        emit(j - 1, x);
    }
}

} // namespace detail

/// x_{n,k} by strict backward recursion. Every intermediate denominator
/// b_{n+j} + x_{n+j,.} is checked to be >= 1; on a valid sequence that can
/// never fail, so DenominatorBelowOne means the input was not admissible.
inline TailValue tail(const SemiRegularCF& cf, std::size_t n, std::size_t k) {
    if (k == 0) {
        throw std::invalid_argument("tail depth k must be >= 1");
    }
    cf.require(n + k);
    TailValue out{n, k, {}};
    detail::backward_tails(cf, n, n + k, [&](std::size_t, const Rational& x) { out.value = x; });
    return out;
}

/// All tails that end at index `end`: x_{n,end-n} for n = 0..end-1, from one
/// backward pass. Element i holds start index i.
inline std::vector<TailValue> tails_ending_at(const SemiRegularCF& cf, std::size_t end) {
    if (end == 0) {
        return {};
    }
    cf.require(end);
    std::vector<TailValue> out(end);
    detail::backward_tails(cf, 0, end, [&](std::size_t start, const Rational& x) {
        out[start] = TailValue{start, end - start, x};
    });
    return out;
}

/// (p_n + x_{n,k} p_{n-1}) / (q_n + x_{n,k} q_{n-1}), which must equal
/// p_{n+k}/q_{n+k}. Throws IdentityViolation if it does not.
inline Rational shift_check(const SemiRegularCF& cf, std::size_t n, std::size_t k) {
    require_valid(cf, n + k);
    Rational x = tail(cf, n, k).value;
    auto states = states_through(cf, n + k);
    const ConvergentState& at_n = states[n];
    Rational shifted = (at_n.p() + x * at_n.p_prev()) / (at_n.q() + x * at_n.q_prev());
    Rational direct = states[n + k].value();
    if (shifted != direct) {
        throw IdentityViolation("shift identity fails at n = " + std::to_string(n) + ", k = "
                                + std::to_string(k) + ": " + shifted.str() + " vs " + direct.str());
    }
    return shifted;
}

/// 1 / (q_n |q_n + x_{n,k} q_{n-1}|), an upper bound on
/// |p_{n+k}/q_{n+k} - p_n/q_n|. The bound is checked against the actual
/// distance before returning.
inline Rational error_bound(const SemiRegularCF& cf, std::size_t n, std::size_t k) {
    require_valid(cf, n + k);
    Rational x = tail(cf, n, k).value;
    auto states = states_through(cf, n + k);
    const ConvergentState& at_n = states[n];
    Rational bound = Rational(1) / (at_n.q() * (at_n.q() + x * at_n.q_prev()).abs());
    Rational distance = (states[n + k].value() - at_n.value()).abs();
    if (distance > bound) {
        throw IdentityViolation("error bound fails at n = " + std::to_string(n) + ", k = "
                                + std::to_string(k));
    }
    return bound;
}

namespace detail {

// 1 / (q_n D_n) with D_n = q_n when a_{n+1} = +1 and D_n = q_n - q_{n-1}
// when a_{n+1} = -1.
//
// Writing p_{n+k}/q_{n+k} - p_n/q_n via the shift identity and the
// determinant identity gives magnitude |x| / (q_n (q_n + x q_{n-1})) with
// x = x_{n,k}. For x in (0, 1] this is at most 1/q_n^2; for x in [-1, 0) it
// grows with |x| and peaks at 1/(q_n (q_n - q_{n-1})). D_n >= 1 is the gap
// inequality q_n + a_{n+1} q_{n-1} >= 1. All deeper convergents sit on the
// same side of p_n/q_n, so the bound also covers the limit.
inline Rational uniform_bound_from(const ConvergentState& s, Sign a_next) {
    Rational d = a_next == Sign::Plus ? s.q() : s.q() - s.q_prev();
    if (d < 1) {
        throw IdentityViolation("uniform bound denominator below 1 at n = "
                                + std::to_string(s.index()) + ": " + d.str());
    }
    return Rational(1) / (s.q() * d);
}

} // namespace detail

/// A bound on |p_{n+k}/q_{n+k} - p_n/q_n| valid for every k >= 1 at once.
/// Needs a_{n+1}, so term n+1 must exist.
inline Rational uniform_step_bound(const SemiRegularCF& cf, std::size_t n) {
    require_valid(cf, n + 1);
    return detail::uniform_bound_from(state_at(cf, n), cf.term(n + 1).a);
}

/// Largest m with 0 <= m < n and a_{m+1} = +1, if any.
inline std::optional<std::size_t> anchor_index(const SemiRegularCF& cf, std::size_t n) {
    cf.require(n);
    for (std::size_t m = n; m-- > 0;) {
        if (cf.term(m + 1).a == Sign::Plus) {
            return m;
        }
    }
    return std::nullopt;
}

enum class Regime { PlusAnchor, AllMinusTail };

inline const char* to_string(Regime r) {
    return r == Regime::PlusAnchor ? "plus_anchor" : "all_minus_tail";
}

struct ErrorCertificate {
    std::size_t n = 0;
    std::optional<std::size_t> anchor;
    Rational bound;
    Regime regime = Regime::AllMinusTail;
    /// 2 / q_m^2 for the anchor m; set only in the PlusAnchor regime.
    std::optional<Rational> coarse_bound;
};

/// Certified bound on the distance from p_n/q_n to every deeper convergent
/// (and hence to the limit).
///
/// With an anchor m = m(n): every convergent past m lies within 1/q_m^2 of
/// p_m/q_m on one side (its tail x_{m,.} is positive), so the triangle
/// inequality gives |p_n/q_n - p_m/q_m| + 1/q_m^2, which never exceeds
/// 2/q_m^2. Without an anchor, a_1 = ... = a_n = -1 and the uniform step
/// bound at n is used instead.
inline ErrorCertificate certify(const SemiRegularCF& cf, std::size_t n) {
    require_valid(cf, n + 1);
    ErrorCertificate cert;
    cert.n = n;
    cert.anchor = anchor_index(cf, n);
    auto states = states_through(cf, n);
    if (!cert.anchor) {
        cert.regime = Regime::AllMinusTail;
        cert.bound = detail::uniform_bound_from(states[n], cf.term(n + 1).a);
        return cert;
    }
    const ConvergentState& at_m = states[*cert.anchor];
    Rational leg = (states[n].value() - at_m.value()).abs();
    Rational inv_q2 = Rational(1) / (at_m.q() * at_m.q());
    cert.regime = Regime::PlusAnchor;
    cert.bound = leg + inv_q2;
    cert.coarse_bound = 2 * inv_q2;
    if (leg <= inv_q2 && cert.bound > *cert.coarse_bound) {
        throw IdentityViolation("anchored certificate exceeds 2/q_m^2 at n = " + std::to_string(n));
    }
    return cert;
}

struct EvalResult {
    Rational approximation;
    Rational certified_error;
    std::size_t steps_used = 0;
    bool exact = false;
};

inline constexpr std::size_t kDefaultMaxSteps = 10'000;

/// Walks the convergents until the uniform step bound at n is <= eps and
/// returns p_n/q_n with that bound. A finite sequence that runs out first
/// yields its exact value with zero error.
///
/// Convergence is guaranteed for valid infinite sequences but comes with no
/// rate, so the walk stops after `max_steps` steps with BudgetExhausted.
inline EvalResult evaluate(const SemiRegularCF& cf, const Rational& eps,
                           std::size_t max_steps = kDefaultMaxSteps) {
    if (eps <= 0) {
        throw std::invalid_argument("eps must be positive");
    }
    if (max_steps == 0) {
        throw std::invalid_argument("max_steps must be >= 1");
    }
    ConvergentState s = init_state(cf.b0());
    std::optional<Rational> best;
    for (;;) {
        std::size_t n = s.index();
        if (!cf.has_term(n + 1)) {
            return EvalResult{s.value(), 0, n, true};
        }
        Term next = cf.term(n + 1);
        // The gap condition at n must hold before the bound is meaningful.
        if (s.last_b() && *s.last_b() + Rational(to_int(next.a)) < 1) {
            throw TietzeViolation(n, ViolationReason::GapViolation);
        }
        Rational bound = detail::uniform_bound_from(s, next.a);
        if (bound <= eps) {
            return EvalResult{s.value(), std::move(bound), n, false};
        }
        if (!best || bound < *best) {
            best = bound;
        }
        if (n >= max_steps) {
            throw BudgetExhausted(max_steps, *best);
        }
        s = step(s, next);
    }
}

} // namespace tietze
