#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "tietze/rational.hpp"

namespace tietze {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class ViolationReason { BTooSmall, GapViolation };

inline const char* to_string(ViolationReason r) {
    switch (r) {
    case ViolationReason::BTooSmall: return "BTooSmall";
    case ViolationReason::GapViolation: return "GapViolation";
    }
    return "?";
}

/// An operation needed a term past the end of a finite sequence.
class InsufficientTerms : public Error {
public:
    InsufficientTerms(std::size_t requested, std::size_t available)
        : Error("term " + std::to_string(requested) + " requested but only "
                + std::to_string(available) + " available"),
          requested_(requested), available_(available) {}

    std::size_t requested() const { return requested_; }
    std::size_t available() const { return available_; }

private:
    std::size_t requested_;
    std::size_t available_;
};

/// The input breaks b_n >= 1 or b_n + a_{n+1} >= 1 at `index`.
class TietzeViolation : public Error {
public:
    TietzeViolation(std::size_t index, ViolationReason reason)
        : Error(std::string("sequence is not Tietze-valid at index ") + std::to_string(index)
                + " (" + to_string(reason) + ")"),
          index_(index), reason_(reason) {}

    std::size_t index() const { return index_; }
    ViolationReason reason() const { return reason_; }

private:
    std::size_t index_;
    ViolationReason reason_;
};

/// An exact identity or inequality that holds for every valid input came out
/// false. Indicates a defect in the library, not in the caller's data.
class IdentityViolation : public Error {
public:
    using Error::Error;
};

/// A backward-recursion denominator b_{n+j} + x_{n+j,.} dropped below 1.
class DenominatorBelowOne : public Error {
public:
    DenominatorBelowOne(std::size_t index, const Rational& value)
        : Error("tail denominator at index " + std::to_string(index) + " is " + value.str()
                + " < 1"),
          index_(index), value_(value) {}

    std::size_t index() const { return index_; }
    const Rational& value() const { return value_; }

private:
    std::size_t index_;
    Rational value_;
};

/// Nested evaluation hit a zero denominator at term `index`.
class ZeroDenominator : public Error {
public:
    explicit ZeroDenominator(std::size_t index)
        : Error("zero denominator while folding at index " + std::to_string(index)),
          index_(index) {}

    std::size_t index() const { return index_; }

private:
    std::size_t index_;
};

/// evaluate() ran out of steps before the certified error reached eps.
class BudgetExhausted : public Error {
public:
    BudgetExhausted(std::size_t max_steps, Rational best_bound)
        : Error("no certificate within " + std::to_string(max_steps)
                + " steps; best bound " + best_bound.str()),
          max_steps_(max_steps), best_bound_(std::move(best_bound)) {}

    std::size_t max_steps() const { return max_steps_; }
    const Rational& best_bound() const { return best_bound_; }

private:
    std::size_t max_steps_;
    Rational best_bound_;
};

/// Malformed sequence document. `where` is a byte offset or a field path.
class ParseError : public Error {
public:
    ParseError(std::string where, const std::string& what)
        : Error(where + ": " + what), where_(std::move(where)) {}

    const std::string& where() const { return where_; }

private:
    std::string where_;
};

} // namespace tietze
