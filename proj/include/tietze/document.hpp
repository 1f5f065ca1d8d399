#pragma once

// Text form of a finite sequence:
//
//     {"b0":"<rational>","terms":[{"a":<1|-1>,"b":"<rational>"}, ...]}
//
// Rationals are strings in the grammar [-]digits[/digits] so that nothing
// passes through floating point. Parsing is strict about shape and types;
// non-canonical rationals ("4/6") are accepted and reduced. Serialization
// emits canonical rationals with a fixed field order and no whitespace.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "tietze/errors.hpp"
#include "tietze/rational.hpp"
#include "tietze/sequence.hpp"

namespace tietze {

namespace detail {

inline std::string line_col(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

inline Rational rational_field(const nlohmann::json& j, const std::string& path) {
    if (!j.is_string()) {
        throw ParseError(path, "expected a rational string");
    }
    auto r = Rational::parse(j.get_ref<const std::string&>());
    if (!r) {
        throw ParseError(path, "malformed rational '" + j.get<std::string>() + "'");
    }
    return *r;
}

inline void require_keys(const nlohmann::json& j, const std::string& path,
                         std::initializer_list<const char*> keys) {
    if (!j.is_object()) {
        throw ParseError(path.empty() ? "document" : path, "expected an object");
    }
    for (const char* key : keys) {
        if (!j.contains(key)) {
            throw ParseError(path + (path.empty() ? "" : ".") + key, "missing field");
        }
    }
    for (const auto& [key, value] : j.items()) {
        bool known = false;
        for (const char* k : keys) {
            known = known || key == k;
        }
        if (!known) {
            throw ParseError(path + (path.empty() ? "" : ".") + key, "unknown field");
        }
    }
}

} // namespace detail

/// Strict parse of a sequence document. Throws ParseError carrying either a
/// line/column (syntax) or a field path such as "terms[2].a" (shape).
/// The result is not validated.
inline SemiRegularCF parse_cf(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
        throw ParseError(detail::line_col(text, byte), "invalid JSON");
    }
    detail::require_keys(doc, "", {"b0", "terms"});
    Rational b0 = detail::rational_field(doc["b0"], "b0");
    const auto& terms_json = doc["terms"];
    if (!terms_json.is_array()) {
        throw ParseError("terms", "expected an array");
    }
    std::vector<Term> terms;
    terms.reserve(terms_json.size());
    for (std::size_t i = 0; i < terms_json.size(); ++i) {
        std::string path = "terms[" + std::to_string(i) + "]";
        const auto& t = terms_json[i];
        detail::require_keys(t, path, {"a", "b"});
        const auto& a = t["a"];
        bool plus = a.is_number_unsigned() && a.get<unsigned long long>() == 1;
        bool minus = a.is_number_integer() && !a.is_number_unsigned() && a.get<long long>() == -1;
        if (!plus && !minus) {
            throw ParseError(path + ".a", "a must be the integer 1 or -1");
        }
        terms.push_back(Term{plus ? Sign::Plus : Sign::Minus,
                             detail::rational_field(t["b"], path + ".b")});
    }
    return SemiRegularCF(std::move(b0), std::move(terms));
}

/// Canonical document for a finite, explicitly stored sequence.
inline std::string serialize_cf(const SemiRegularCF& cf) {
    if (!cf.is_finite() || cf.is_generated()) {
        throw std::invalid_argument("only finite stored sequences can be serialized");
    }
    nlohmann::ordered_json doc;
    doc["b0"] = cf.b0().str();
    doc["terms"] = nlohmann::ordered_json::array();
    for (const Term& t : cf.prefix()) {
        nlohmann::ordered_json term;
        term["a"] = to_int(t.a);
        term["b"] = t.b.str();
        doc["terms"].push_back(std::move(term));
    }
    return doc.dump();
}

} // namespace tietze
