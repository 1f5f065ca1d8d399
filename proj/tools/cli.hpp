#pragma once

// Command-line front end. run() is kept free of process state so the test
// suites can drive it in-process with string streams.
//
// Exit codes: 0 success, 1 invalid input or failed invariant (details in the
// stdout document), 2 usage error, 3 evaluation budget exhausted.

#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "tietze/checks.hpp"
#include "tietze/document.hpp"
#include "tietze/expand.hpp"
#include "tietze/tietze.hpp"

namespace tietze::cli {

enum ExitCode : int { kOk = 0, kInvalid = 1, kUsage = 2, kBudget = 3 };

using Json = nlohmann::ordered_json;

namespace detail {

inline Json violation_json(std::size_t index, ViolationReason reason) {
    Json v;
    v["index"] = index;
    v["reason"] = to_string(reason);
    return v;
}

inline Json error_json(const std::exception& e) {
    Json doc;
    if (const auto* p = dynamic_cast<const ParseError*>(&e)) {
        doc["error"] = "parse_error";
        doc["where"] = p->where();
    } else if (const auto* v = dynamic_cast<const TietzeViolation*>(&e)) {
        doc["error"] = "tietze_violation";
        doc["first_violation"] = violation_json(v->index(), v->reason());
    } else if (const auto* t = dynamic_cast<const InsufficientTerms*>(&e)) {
        doc["error"] = "insufficient_terms";
        doc["requested"] = t->requested();
        doc["available"] = t->available();
    } else if (dynamic_cast<const IdentityViolation*>(&e) != nullptr) {
        doc["error"] = "identity_violation";
    } else if (dynamic_cast<const DenominatorBelowOne*>(&e) != nullptr) {
        doc["error"] = "denominator_below_one";
    } else if (dynamic_cast<const ZeroDenominator*>(&e) != nullptr) {
        doc["error"] = "zero_denominator";
    } else {
        doc["error"] = "invalid_input";
    }
    doc["message"] = e.what();
    return doc;
}

inline Json optional_index(const std::optional<std::size_t>& i) {
    return i ? Json(*i) : Json(nullptr);
}

struct InputOptions {
    bool repeat = false;
};

// Reads the document from `in`. With --repeat the term list is continued
// periodically: term n is terms[(n - 1) mod len].
inline SemiRegularCF read_sequence(std::istream& in, const InputOptions& opts) {
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    SemiRegularCF cf = parse_cf(text);
    if (!opts.repeat) {
        return cf;
    }
    if (cf.prefix().empty()) {
        throw ParseError("terms", "--repeat needs at least one term");
    }
    return SemiRegularCF::periodic(cf.b0(), {},
                                   std::vector<Term>(cf.prefix().begin(), cf.prefix().end()));
}

} // namespace detail

inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
               std::ostream& err) {
    CLI::App app{"Exact semi-regular continued fractions: expansions, convergents, "
                 "certified evaluation and invariant checks",
                 "tietze"};
    app.require_subcommand(1);

    detail::InputOptions input;
    std::optional<unsigned> decimals;

    std::string algo_name;
    std::string expand_value;
    auto* expand_cmd = app.add_subcommand("expand", "Expand a rational into a continued fraction");
    expand_cmd->add_option("--algo", algo_name, "regular | negative | nearest")
        ->required()
        ->check(CLI::IsMember({"regular", "negative", "nearest"}));
    expand_cmd->add_option("value", expand_value, "Rational [-]digits[/digits]")->required();

    std::string eps_text;
    std::size_t max_steps = kDefaultMaxSteps;
    auto* eval_cmd = app.add_subcommand("eval", "Certified evaluation of a document read from stdin");
    eval_cmd->add_option("--eps", eps_text, "Target error bound, a positive rational")->required();
    eval_cmd->add_option("--max-steps", max_steps, "Step budget")->check(CLI::PositiveNumber);
    eval_cmd->add_flag("--repeat", input.repeat, "Continue the term list periodically");
    eval_cmd->add_option("--decimals", decimals, "Also print a truncated decimal (display only)");

    std::size_t conv_n = 0;
    auto* conv_cmd = app.add_subcommand("convergents", "List convergents p_n/q_n for n = 0..N");
    conv_cmd->add_option("-n", conv_n, "Last index")->required();
    conv_cmd->add_flag("--repeat", input.repeat, "Continue the term list periodically");
    conv_cmd->add_option("--decimals", decimals, "Also print truncated decimals (display only)");

    std::size_t cert_n = 0;
    auto* cert_cmd = app.add_subcommand("certify", "Certified error bound at index N");
    cert_cmd->add_option("-n", cert_n, "Index")->required();
    cert_cmd->add_flag("--repeat", input.repeat, "Continue the term list periodically");

    std::optional<std::size_t> check_n;
    auto* check_cmd = app.add_subcommand("check", "Validate and run every exact invariant");
    check_cmd->add_option("-n", check_n, "Horizon (default: document length)");
    check_cmd->add_flag("--repeat", input.repeat, "Continue the term list periodically");

    std::vector<std::string> argv_storage{"tietze"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_storage) {
        argv.push_back(s.data());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "tietze: " << e.what() << "\n";
        return kUsage;
    }

    auto emit = [&](const Json& doc) { out << doc.dump() << "\n"; };

    try {
        if (expand_cmd->parsed()) {
            auto x = Rational::parse(expand_value);
            if (!x) {
                throw ParseError("value", "malformed rational '" + expand_value + "'");
            }
            out << serialize_cf(expand(*parse_algo(algo_name), *x)) << "\n";
            return kOk;
        }

        if (eval_cmd->parsed()) {
            auto eps = Rational::parse(eps_text);
            if (!eps || *eps <= 0) {
                err << "tietze: --eps must be a positive rational\n";
                return kUsage;
            }
            SemiRegularCF cf = detail::read_sequence(in, input);
            try {
                EvalResult r = evaluate(cf, *eps, max_steps);
                Json doc;
                doc["approximation"] = r.approximation.str();
                doc["certified_error"] = r.certified_error.str();
                doc["steps_used"] = r.steps_used;
                doc["exact"] = r.exact;
                if (decimals) {
                    doc["decimal"] = r.approximation.to_decimal(*decimals);
                }
                emit(doc);
                return kOk;
            } catch (const BudgetExhausted& e) {
                Json doc;
                doc["error"] = "budget_exhausted";
                doc["max_steps"] = e.max_steps();
                doc["best_bound"] = e.best_bound().str();
                emit(doc);
                return kBudget;
            }
        }

        if (conv_cmd->parsed()) {
            SemiRegularCF cf = detail::read_sequence(in, input);
            require_valid(cf, conv_n);
            Json list = Json::array();
            for (const ConvergentState& s : states_through(cf, conv_n)) {
                Json row;
                row["n"] = s.index();
                row["p"] = s.p().str();
                row["q"] = s.q().str();
                row["value"] = s.value().str();
                if (decimals) {
                    row["decimal"] = s.value().to_decimal(*decimals);
                }
                list.push_back(std::move(row));
            }
            emit(list);
            return kOk;
        }

        if (cert_cmd->parsed()) {
            SemiRegularCF cf = detail::read_sequence(in, input);
            ErrorCertificate c = certify(cf, cert_n);
            Json doc;
            doc["anchor"] = detail::optional_index(c.anchor);
            doc["regime"] = to_string(c.regime);
            doc["bound"] = c.bound.str();
            emit(doc);
            return kOk;
        }

        if (check_cmd->parsed()) {
            if (input.repeat && !check_n) {
                err << "tietze: check --repeat needs -n\n";
                return kUsage;
            }
            SemiRegularCF cf = detail::read_sequence(in, input);
            std::size_t horizon = check_n.value_or(cf.length().value_or(0));
            CheckReport report = run_checks(cf, horizon);
            Json doc;
            doc["valid"] = report.validation.valid();
            if (const auto& v = report.validation.first_violation) {
                doc["first_violation"] = detail::violation_json(v->index, v->reason);
            } else {
                doc["first_violation"] = nullptr;
            }
            doc["horizon"] = report.horizon;
            Json invariants = Json::array();
            for (const InvariantResult& r : report.invariants) {
                Json row;
                row["name"] = r.name;
                row["pass"] = r.pass;
                row["first_failing_index"] = detail::optional_index(r.first_failing_index);
                if (r.first_failing_depth) {
                    row["first_failing_depth"] = *r.first_failing_depth;
                }
                invariants.push_back(std::move(row));
            }
            doc["invariants"] = std::move(invariants);
            emit(doc);
            return report.pass() ? kOk : kInvalid;
        }
    } catch (const Error& e) {
        emit(detail::error_json(e));
        return kInvalid;
    } catch (const std::invalid_argument& e) {
        emit(detail::error_json(e));
        return kInvalid;
    } catch (const std::domain_error& e) {
        emit(detail::error_json(e));
        return kInvalid;
    }
    return kUsage;
}

} // namespace tietze::cli
