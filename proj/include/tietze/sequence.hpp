#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "tietze/errors.hpp"
#include "tietze/rational.hpp"

namespace tietze {

/// Partial numerator a_n. Exactly two inhabitants.
enum class Sign : int { Minus = -1, Plus = 1 };

constexpr int to_int(Sign s) { return static_cast<int>(s); }
constexpr Sign operator*(Sign x, Sign y) { return x == y ? Sign::Plus : Sign::Minus; }
constexpr Sign operator-(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }

inline Rational operator*(Sign s, const Rational& r) { return s == Sign::Plus ? r : -r; }

/// One partial fraction a_n / b_n. A Term may carry b < 1; validate() is
/// what decides whether a sequence of terms is admissible.
struct Term {
    Sign a = Sign::Plus;
    Rational b = 1;

    friend bool operator==(const Term&, const Term&) = default;
};

/// b_0 + a_1/(b_1 + a_2/(b_2 + ...)), terms indexed from 1.
///
/// Three storage modes share one read interface:
///   - finite: an explicit list of terms;
///   - periodic: a finite prefix followed by an endlessly repeated period;
///   - generated: term n is produced on demand by a pure function of n.
/// Values are immutable; copies share the generator.
class SemiRegularCF {
public:
    using Generator = std::function<Term(std::size_t)>;

    SemiRegularCF() = default;

    SemiRegularCF(Rational b0, std::vector<Term> terms)
        : b0_(std::move(b0)), prefix_(std::move(terms)) {}

    static SemiRegularCF periodic(Rational b0, std::vector<Term> prefix, std::vector<Term> period) {
        if (period.empty()) {
            throw std::invalid_argument("periodic continued fraction needs a non-empty period");
        }
        SemiRegularCF cf(std::move(b0), std::move(prefix));
        cf.period_ = std::move(period);
        return cf;
    }

    /// `gen(n)` must be deterministic. `length` bounds the sequence; nullopt
    /// means unbounded.
    static SemiRegularCF generated(Rational b0, Generator gen,
                                   std::optional<std::size_t> length = std::nullopt) {
        SemiRegularCF cf(std::move(b0), {});
        cf.generator_ = std::make_shared<const Generator>(std::move(gen));
        cf.generated_length_ = length;
        return cf;
    }

    const Rational& b0() const { return b0_; }

    /// Number of terms, or nullopt for an unbounded sequence.
    std::optional<std::size_t> length() const {
        if (generator_) {
            return generated_length_;
        }
        if (!period_.empty()) {
            return std::nullopt;
        }
        return prefix_.size();
    }

    bool is_finite() const { return length().has_value(); }

    /// True when term n (n >= 1) exists. Index 0 always exists (b_0).
    bool has_term(std::size_t n) const {
        auto len = length();
        return !len || n <= *len;
    }

    /// Term n, 1-based. Throws InsufficientTerms past the end.
    Term term(std::size_t n) const {
        if (n == 0 || !has_term(n)) {
            throw InsufficientTerms(n, length().value_or(0));
        }
        if (generator_) {
            return (*generator_)(n);
        }
        if (n <= prefix_.size()) {
            return prefix_[n - 1];
        }
        return period_[(n - 1 - prefix_.size()) % period_.size()];
    }

    /// Throws InsufficientTerms unless terms 1..n all exist.
    void require(std::size_t n) const {
        if (!has_term(n)) {
            throw InsufficientTerms(n, length().value_or(0));
        }
    }

    /// Materialized finite prefix b_0; a_1/b_1 ... a_n/b_n.
    SemiRegularCF truncated(std::size_t n) const {
        require(n);
        if (!generator_ && period_.empty()) {
            return SemiRegularCF(b0_, std::vector<Term>(prefix_.begin(), prefix_.begin() + static_cast<std::ptrdiff_t>(n)));
        }
        std::vector<Term> terms;
        terms.reserve(n);
        for (std::size_t i = 1; i <= n; ++i) {
            terms.push_back(term(i));
        }
        return SemiRegularCF(b0_, std::move(terms));
    }

    /// Explicitly stored leading terms (all terms for a finite sequence).
    std::span<const Term> prefix() const { return prefix_; }
    std::span<const Term> period() const { return period_; }
    bool is_generated() const { return static_cast<bool>(generator_); }

    /// Structural equality of the stored representation. Generated sequences
    /// compare equal only to copies sharing the same generator.
    friend bool operator==(const SemiRegularCF& x, const SemiRegularCF& y) {
        return x.b0_ == y.b0_ && x.prefix_ == y.prefix_ && x.period_ == y.period_
            && x.generator_ == y.generator_ && x.generated_length_ == y.generated_length_;
    }

private:
    Rational b0_;
    std::vector<Term> prefix_;
    std::vector<Term> period_;
    std::shared_ptr<const Generator> generator_;
    std::optional<std::size_t> generated_length_;
};

struct Violation {
    std::size_t index = 0;
    ViolationReason reason = ViolationReason::BTooSmall;

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
    std::optional<Violation> first_violation;

    bool valid() const { return !first_violation.has_value(); }
};

/// Checks the admissibility conditions on the truncation to `upto` terms:
/// b_n >= 1 for 1 <= n <= upto, and b_n + a_{n+1} >= 1 for 1 <= n < upto.
/// The last term of the truncation needs only b >= 1. Violations are
/// reported as data; only a missing term throws.
inline ValidationReport validate(const SemiRegularCF& cf, std::size_t upto) {
    cf.require(upto);
    ValidationReport report;
    std::optional<Term> prev;
    for (std::size_t n = 1; n <= upto; ++n) {
        Term t = cf.term(n);
        if (prev && prev->b + Rational(to_int(t.a)) < 1) {
            report.first_violation = Violation{n - 1, ViolationReason::GapViolation};
            return report;
        }
        if (t.b < 1) {
            report.first_violation = Violation{n, ViolationReason::BTooSmall};
            return report;
        }
        prev = std::move(t);
    }
    return report;
}

/// Validates a finite sequence in full.
inline ValidationReport validate(const SemiRegularCF& cf) {
    auto len = cf.length();
    if (!len) {
        throw std::invalid_argument("validate(cf) needs a finite sequence; pass a horizon");
    }
    return validate(cf, *len);
}

/// Throws TietzeViolation at the first violation within `upto` terms.
inline void require_valid(const SemiRegularCF& cf, std::size_t upto) {
    auto report = validate(cf, upto);
    if (!report.valid()) {
        throw TietzeViolation(report.first_violation->index, report.first_violation->reason);
    }
}

} // namespace tietze
