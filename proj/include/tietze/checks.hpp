#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tietze/convergents.hpp"
#include "tietze/errors.hpp"
#include "tietze/oracle.hpp"
#include "tietze/rational.hpp"
#include "tietze/sequence.hpp"
#include "tietze/tails.hpp"

namespace tietze {

struct InvariantResult {
    std::string name;
    bool pass = true;
    /// First index n at which the invariant failed.
    std::optional<std::size_t> first_failing_index;
    /// Depth k of the failure, for invariants over (n, k) pairs.
    std::optional<std::size_t> first_failing_depth;
};

struct CheckReport {
    std::size_t horizon = 0;
    ValidationReport validation;
    std::vector<InvariantResult> invariants;

    bool pass() const {
        if (!validation.valid()) {
            return false;
        }
        for (const auto& r : invariants) {
            if (!r.pass) {
                return false;
            }
        }
        return true;
    }
};

namespace detail {

class InvariantRecorder {
public:
    explicit InvariantRecorder(std::string name) { result_.name = std::move(name); }

    // Keeps the lexicographically smallest failing (n, k).
    void expect(bool ok, std::size_t n, std::optional<std::size_t> k = std::nullopt) {
        if (ok) {
            return;
        }
        if (result_.pass
            || std::pair(n, k.value_or(0))
                   < std::pair(*result_.first_failing_index, result_.first_failing_depth.value_or(0))) {
            result_.pass = false;
            result_.first_failing_index = n;
            result_.first_failing_depth = k;
        }
    }

    template <typename Fn>
    void expect_no_throw(Fn&& fn, std::size_t n, std::optional<std::size_t> k = std::nullopt) {
        try {
            expect(fn(), n, k);
        } catch (const Error&) {
            expect(false, n, k);
        } catch (const std::domain_error&) {
            expect(false, n, k);
        }
    }

    InvariantResult take() { return std::move(result_); }

private:
    InvariantResult result_;
};

} // namespace detail

/// Runs every exact identity and inequality over indices up to `horizon`:
///
///   determinant_identity  p_n q_{n-1} - p_{n-1} q_n = (-1)^{n-1} a_1...a_n
///   series_equivalence    series_partial_sum(n) = p_n/q_n
///   oracle_equivalence    fold_eval(n) = p_n/q_n
///   gap_positivity        q_n >= 1 and q_n + a_{n+1} q_{n-1} >= 1
///   monotone_gap          the gap above is non-decreasing in n
///   chain_inequality      q_n >= q_m + a_{m+1} q_{m-1} >= 1 for n > m >= 1
///   tail_bounds           sign(x_{n,k}) = a_{n+1}, |x_{n,k}| <= 1, open at 0
///   shift_identity        (p_n + x p_{n-1})/(q_n + x q_{n-1}) = p_{n+k}/q_{n+k}
///   error_bound           |p_{n+k}/q_{n+k} - p_n/q_n| <= 1/(q_n |q_n + x q_{n-1}|)
///                         <= uniform_step_bound(n)
///
/// Invariants are only evaluated on a valid prefix; an invalid one yields a
/// report with the violation and no invariant results.
inline CheckReport run_checks(const SemiRegularCF& cf, std::size_t horizon) {
    CheckReport report;
    report.horizon = horizon;
    report.validation = validate(cf, horizon);
    if (!report.validation.valid()) {
        return report;
    }

    const auto states = states_through(cf, horizon);
    std::vector<Term> terms;
    terms.reserve(horizon);
    for (std::size_t i = 1; i <= horizon; ++i) {
        terms.push_back(cf.term(i));
    }
    auto a_at = [&](std::size_t i) { return terms[i - 1].a; };

    detail::InvariantRecorder det("determinant_identity");
    for (std::size_t n = 1; n <= horizon; ++n) {
        det.expect_no_throw([&] { determinant_check(states[n]); return true; }, n);
    }

    detail::InvariantRecorder series("series_equivalence");
    detail::InvariantRecorder oracle("oracle_equivalence");
    for (std::size_t n = 0; n <= horizon; ++n) {
        Rational value = states[n].value();
        series.expect_no_throw([&] { return series_partial_sum(cf, n) == value; }, n);
        oracle.expect_no_throw([&] { return fold_eval(cf, n) == value; }, n);
    }

    // Gaps g_n = q_n + a_{n+1} q_{n-1} for every n whose a_{n+1} is known.
    detail::InvariantRecorder positivity("gap_positivity");
    detail::InvariantRecorder monotone("monotone_gap");
    std::vector<Rational> gaps;
    for (std::size_t n = 0; n <= horizon; ++n) {
        bool ok = states[n].q() >= 1;
        if (n < horizon) {
            gaps.push_back(gap(states[n], a_at(n + 1)));
            ok = ok && gaps.back() >= 1;
            if (n > 0) {
                monotone.expect(gaps[n] >= gaps[n - 1], n);
            }
        }
        positivity.expect(ok, n);
    }

    detail::InvariantRecorder chain("chain_inequality");
    for (std::size_t m = 1; m < horizon; ++m) {
        for (std::size_t n = m + 1; n <= horizon; ++n) {
            chain.expect(states[n].q() >= gaps[m] && gaps[m] >= 1, m, n - m);
        }
    }

    detail::InvariantRecorder tails("tail_bounds");
    detail::InvariantRecorder shift("shift_identity");
    detail::InvariantRecorder bound("error_bound");
    std::vector<Rational> uniform;
    for (std::size_t n = 0; n < horizon; ++n) {
        uniform.push_back(detail::uniform_bound_from(states[n], a_at(n + 1)));
    }
    for (std::size_t end = 1; end <= horizon; ++end) {
        std::vector<TailValue> column;
        try {
            column = tails_ending_at(cf, end);
        } catch (const DenominatorBelowOne& e) {
            tails.expect(false, e.index() > 0 ? e.index() - 1 : 0);
            continue;
        }
        for (const TailValue& t : column) {
            const Rational& x = t.value;
            bool in_range = a_at(t.n + 1) == Sign::Plus ? (x > 0 && x <= 1) : (x >= -1 && x < 0);
            tails.expect(in_range, t.n, t.k);

            const ConvergentState& at_n = states[t.n];
            Rational denom = at_n.q() + x * at_n.q_prev();
            if (denom == 0) {
                shift.expect(false, t.n, t.k);
                bound.expect(false, t.n, t.k);
                continue;
            }
            Rational target = states[end].value();
            shift.expect((at_n.p() + x * at_n.p_prev()) / denom == target, t.n, t.k);
            Rational eb = Rational(1) / (at_n.q() * denom.abs());
            bound.expect((target - at_n.value()).abs() <= eb && eb <= uniform[t.n], t.n, t.k);
        }
    }

    for (auto* r : {&det, &series, &oracle, &positivity, &monotone, &chain, &tails, &shift, &bound}) {
        report.invariants.push_back(r->take());
    }
    return report;
}

} // namespace tietze
