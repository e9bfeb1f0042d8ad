#pragma once

#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "nok/multipoly.hpp"
#include "nok/valuation.hpp"

namespace nok {

// Parsed ideal file: declared variables, generator expressions, and the
// valuation options. Format:
//
//   vars: x0 x1 x2          required, >= 2 names
//   order: x1 x2            optional valuation priority (non-dehom variables)
//   dehom: x0               optional dehomogenization variable (default: first)
//   gens:                   required, one expression per line after it
//   x0*x1
//   x0^2 + 3/2*x1*x2
//
// '#' starts a comment; blank lines are ignored; whitespace is free.
struct ParsedIdeal {
    std::vector<std::string> variables;
    std::vector<std::string> generator_text;
    std::optional<HomogeneousIdeal> ideal;
    ValuationConfig valuation;
};

namespace detail {

struct ExprParser {
    const std::string& text;
    int line;
    std::size_t pos = 0;
    const std::map<std::string, int>& var_index;
    int num_vars;

    ExprParser(const std::string& text_, int line_, const std::map<std::string, int>& vars,
               int num_vars_)
        : text(text_), line(line_), var_index(vars), num_vars(num_vars_) {}

    [[noreturn]] void fail(const std::string& msg) const {
        throw syntax_error(msg, line, static_cast<int>(pos) + 1);
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool peek(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }

    bool accept(char c) {
        if (peek(c)) {
            ++pos;
            return true;
        }
        return false;
    }

    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }

    std::string parse_integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected an integer");
        return text.substr(start, pos - start);
    }

    std::string parse_name() {
        skip_ws();
        std::size_t start = pos;
        if (pos >= text.size() ||
            !(std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            fail("expected a variable name");
        ++pos;
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                     text[pos] == '_'))
            ++pos;
        return text.substr(start, pos - start);
    }

    Rational parse_coefficient() {
        std::string num = parse_integer();
        std::string lit = num;
        if (accept('/')) lit += "/" + parse_integer();
        try {
            return rational_from_string(lit);
        } catch (const precondition_error&) {
            fail("bad coefficient '" + lit + "'");
        }
    }

    // factor := coefficient | name ('^' integer)?
    void parse_factor(Rational& coeff, ExponentVector& exps) {
        skip_ws();
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            coeff *= parse_coefficient();
            return;
        }
        std::size_t name_pos = pos;
        std::string name = parse_name();
        auto it = var_index.find(name);
        if (it == var_index.end()) {
            pos = name_pos;
            fail("unknown variable '" + name + "'");
        }
        int e = 1;
        if (accept('^')) {
            std::string p = parse_integer();
            try {
                e = std::stoi(p);
            } catch (...) {
                fail("exponent out of range");
            }
        }
        exps[static_cast<std::size_t>(it->second)] += e;
    }

    MultiPoly parse_term(bool negative) {
        Rational coeff(negative ? -1 : 1);
        ExponentVector exps(static_cast<std::size_t>(num_vars), 0);
        parse_factor(coeff, exps);
        while (accept('*')) parse_factor(coeff, exps);
        return MultiPoly::monomial(num_vars, std::move(exps), coeff);
    }

    MultiPoly parse_expression() {
        MultiPoly sum(num_vars);
        bool negative = false;
        if (accept('-')) negative = true;
        else accept('+');
        sum = sum + parse_term(negative);
        while (!at_end()) {
            if (accept('+')) sum = sum + parse_term(false);
            else if (accept('-')) sum = sum + parse_term(true);
            else fail("expected '+' or '-'");
        }
        return sum;
    }
};

inline std::string strip_comment(const std::string& line) {
    std::size_t hash = line.find('#');
    return hash == std::string::npos ? line : line.substr(0, hash);
}

inline bool blank(const std::string& line) {
    for (char c : line)
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    return true;
}

inline std::vector<std::string> split_names(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string w;
    while (is >> w) out.push_back(w);
    return out;
}

} // namespace detail

inline ParsedIdeal parse_ideal(const std::string& text) {
    std::vector<std::pair<int, std::string>> lines; // (1-based line number, content)
    {
        std::istringstream is(text);
        std::string raw;
        int no = 0;
        while (std::getline(is, raw)) {
            ++no;
            std::string body = detail::strip_comment(raw);
            if (!detail::blank(body)) lines.emplace_back(no, body);
        }
    }
    if (lines.empty()) throw syntax_error("empty input", 1, 1);

    ParsedIdeal out;
    std::size_t cursor = 0;

    auto header_value = [&](const std::string& key) -> std::optional<std::string> {
        if (cursor >= lines.size()) return std::nullopt;
        const std::string& body = lines[cursor].second;
        std::size_t start = body.find_first_not_of(" \t");
        if (start == std::string::npos) return std::nullopt;
        if (body.compare(start, key.size(), key) != 0) return std::nullopt;
        std::size_t after = start + key.size();
        std::size_t colon = body.find_first_not_of(" \t", after);
        if (colon == std::string::npos || body[colon] != ':') return std::nullopt;
        ++cursor;
        return body.substr(colon + 1);
    };

    auto vars_value = header_value("vars");
    if (!vars_value)
        throw syntax_error("expected 'vars: <name>...' as the first directive", lines[0].first, 1);
    out.variables = detail::split_names(*vars_value);
    if (out.variables.size() < 2)
        throw too_few_variables("need at least 2 variables", lines[cursor - 1].first, 1);
    std::map<std::string, int> var_index;
    for (std::size_t i = 0; i < out.variables.size(); ++i) {
        if (!var_index.emplace(out.variables[i], static_cast<int>(i)).second)
            throw syntax_error("duplicate variable '" + out.variables[i] + "'",
                               lines[cursor - 1].first, 1);
    }
    const int num_vars = static_cast<int>(out.variables.size());

    std::optional<std::vector<std::string>> order_names;
    std::optional<std::string> dehom_name;
    for (;;) {
        if (auto v = header_value("order")) {
            order_names = detail::split_names(*v);
            continue;
        }
        if (auto v = header_value("dehom")) {
            auto names = detail::split_names(*v);
            if (names.size() != 1)
                throw syntax_error("dehom takes exactly one variable", lines[cursor - 1].first, 1);
            dehom_name = names[0];
            continue;
        }
        break;
    }

    auto gens_value = header_value("gens");
    if (!gens_value || !detail::blank(*gens_value))
        throw syntax_error("expected 'gens:' introducing the generator list",
                           cursor < lines.size() ? lines[cursor].first : lines.back().first, 1);

    int dehom_index = 0;
    if (dehom_name) {
        auto it = var_index.find(*dehom_name);
        if (it == var_index.end())
            throw syntax_error("dehom variable '" + *dehom_name + "' is not declared", 1, 1);
        dehom_index = it->second;
    }

    ValuationConfig cfg;
    if (order_names) {
        cfg.num_vars = num_vars;
        cfg.dehomogenize_index = dehom_index;
        for (const auto& name : *order_names) {
            auto it = var_index.find(name);
            if (it == var_index.end())
                throw syntax_error("order variable '" + name + "' is not declared", 1, 1);
            cfg.variable_order.push_back(it->second);
        }
        try {
            validate(cfg);
        } catch (const precondition_error& e) {
            throw syntax_error(std::string("bad valuation order: ") + e.what(), 1, 1);
        }
    } else {
        cfg = default_valuation(num_vars, dehom_index);
    }
    out.valuation = cfg;

    std::vector<MultiPoly> gens;
    for (; cursor < lines.size(); ++cursor) {
        const auto& [line_no, body] = lines[cursor];
        detail::ExprParser parser(body, line_no, var_index, num_vars);
        MultiPoly g = parser.parse_expression();
        auto d = g.homogeneous_degree();
        if (!d || *d == 0) {
            std::string trimmed = body;
            if (auto p = trimmed.find_first_not_of(" \t"); p != std::string::npos)
                trimmed = trimmed.substr(p);
            throw not_homogeneous("generator '" + trimmed + "' is not homogeneous of positive degree",
                                  line_no, 1);
        }
        gens.push_back(std::move(g));
        std::string trimmed = body;
        if (auto p = trimmed.find_first_not_of(" \t"); p != std::string::npos)
            trimmed = trimmed.substr(p);
        if (auto p = trimmed.find_last_not_of(" \t\r"); p != std::string::npos)
            trimmed = trimmed.substr(0, p + 1);
        out.generator_text.push_back(trimmed);
    }
    if (gens.empty())
        throw syntax_error("at least one generator is required", lines.back().first, 1);

    out.ideal = HomogeneousIdeal(num_vars, std::move(gens));
    return out;
}

} // namespace nok
