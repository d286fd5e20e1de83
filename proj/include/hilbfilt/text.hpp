#pragma once

#include "hilbfilt/monomial.hpp"

#include <string>
#include <vector>

namespace hilbfilt {

/// Default variable names for generated instances (ambient counts are
/// desk scale, capped at 6).
inline std::vector<std::string> default_var_names(int ambient) {
    static const char* names[] = {"x", "y", "z", "w", "v", "u"};
    std::vector<std::string> vars;
    for (int i = 0; i < ambient; ++i)
        vars.push_back(i < 6 ? names[i] : "t" + std::to_string(i));
    return vars;
}

/// Monomial text syntax: factors `var` or `var^exp` joined by `*`;
/// the unit monomial is written `1`. Examples: `x^2*y`, `y^3`, `1`.
inline std::string format_monomial(const Monomial& m, const std::vector<std::string>& vars) {
    std::string out;
    for (int i = 0; i < m.ambient(); ++i) {
        const int e = m.exponent(i);
        if (e == 0) continue;
        if (!out.empty()) out += '*';
        out += vars.at(i);
        if (e > 1) out += '^' + std::to_string(e);
    }
    return out.empty() ? "1" : out;
}

inline std::vector<std::string> format_ideal(const MonomialIdeal& ideal,
                                             const std::vector<std::string>& vars) {
    std::vector<std::string> out;
    out.reserve(ideal.generators().size());
    for (const Monomial& g : ideal.generators()) out.push_back(format_monomial(g, vars));
    return out;
}

/// Compact one-string ideal rendering for instance descriptors and logs.
inline std::string describe_ideal(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) return "(0)";
    const std::vector<std::string> vars = default_var_names(ideal.ambient());
    std::string out = "(";
    bool first = true;
    for (const Monomial& g : ideal.generators()) {
        if (!first) out += ",";
        out += format_monomial(g, vars);
        first = false;
    }
    return out + ")";
}

namespace detail {

[[noreturn]] inline void parse_fail(const std::string& text, std::size_t column,
                                    const std::string& what) {
    throw Error(Error::Code::ParseError, "malformed monomial '" + text + "' at column " +
                                             std::to_string(column + 1) + ": " + what);
}

} // namespace detail

/// Parse the monomial text syntax against a declared variable list.
/// Errors carry the 1-based column of the offending token.
inline Monomial parse_monomial(const std::string& text, const std::vector<std::string>& vars) {
    const int D = static_cast<int>(vars.size());
    std::vector<int> exps(D, 0);
    if (text.empty()) detail::parse_fail(text, 0, "empty monomial");
    if (text == "1") return Monomial(std::move(exps));

    std::size_t pos = 0;
    while (pos < text.size()) {
        // factor: var [^ exp]
        std::size_t start = pos;
        while (pos < text.size() && text[pos] != '*' && text[pos] != '^') ++pos;
        const std::string name = text.substr(start, pos - start);
        int var = -1;
        for (int i = 0; i < D; ++i)
            if (vars[i] == name) {
                var = i;
                break;
            }
        if (var < 0) detail::parse_fail(text, start, "unknown variable '" + name + "'");

        int exp = 1;
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            std::size_t exp_start = pos;
            if (pos >= text.size() || text[pos] == '-')
                detail::parse_fail(text, pos, "exponent must be a non-negative integer");
            long long value = 0;
            while (pos < text.size() && text[pos] != '*') {
                const char c = text[pos];
                if (c < '0' || c > '9')
                    detail::parse_fail(text, pos, "exponent must be a non-negative integer");
                value = value * 10 + (c - '0');
                if (value > 1'000'000)
                    detail::parse_fail(text, exp_start, "exponent too large");
                ++pos;
            }
            if (pos == exp_start) detail::parse_fail(text, pos, "missing exponent after '^'");
            exp = static_cast<int>(value);
        }
        exps[var] += exp;

        if (pos < text.size()) {
            if (text[pos] != '*') detail::parse_fail(text, pos, "expected '*' between factors");
            ++pos;
            if (pos == text.size()) detail::parse_fail(text, pos, "trailing '*'");
        }
    }
    return Monomial(std::move(exps));
}

inline MonomialIdeal parse_ideal(const std::vector<std::string>& texts,
                                 const std::vector<std::string>& vars) {
    std::vector<Monomial> gens;
    gens.reserve(texts.size());
    for (const std::string& t : texts) gens.push_back(parse_monomial(t, vars));
    return MonomialIdeal::minimalize(static_cast<int>(vars.size()), std::move(gens));
}

} // namespace hilbfilt
