#pragma once

#include <array>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ddecomp/error.hpp"
#include "ddecomp/family.hpp"
#include "ddecomp/mpoly.hpp"
#include "ddecomp/rational.hpp"

namespace ddecomp {

// A parsed analysis problem: exactly one of the polynomial / matrix
// payloads is present.
struct Problem {
    enum class Kind { polynomial, matrix };
    Kind kind = Kind::polynomial;
    TimeDomain time_domain = TimeDomain::continuous;
    std::array<std::string, 2> params{"r", "p"};

    MPoly poly;  // polynomial kind

    Grid A, B, C, K;  // matrix kind; B, C, K may be empty together

    std::optional<std::array<Rational, 4>> box;  // xmin, xmax, ymin, ymax
    int grid = 256;
};

namespace detail {

struct Lexer {
    std::string_view text;
    std::size_t pos = 0;
    int line, col;

    Lexer(std::string_view t, int line0, int col0) : text(t), line(line0), col(col0) {}

    void advance() {
        if (pos < text.size()) {
            if (text[pos] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++pos;
        }
    }
    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) advance();
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line, col); }
};

// expression grammar:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' integer)*
//   base   := ratio | 'i' | variable | '(' expr ')' | '-' base
//   ratio  := decimal ('/' decimal)*     (division only between literals)
struct ExprParser {
    Lexer& lx;
    const std::vector<std::string>& vars;

    struct Node {
        MPoly poly;
        bool literal = false;  // pure numeric literal (ratio)
    };

    MPoly parse() {
        Node n = expr();
        if (!lx.eof()) lx.fail("unexpected trailing input in expression");
        return n.poly;
    }

    Node expr() {
        bool neg = false;
        char c = lx.peek();
        if (c == '+' || c == '-') {
            neg = c == '-';
            lx.advance();
        }
        Node acc = term();
        if (neg) acc.poly = -acc.poly;
        while (true) {
            char op = lx.peek();
            if (op != '+' && op != '-') break;
            lx.advance();
            Node rhs = term();
            acc.poly = op == '+' ? acc.poly + rhs.poly : acc.poly - rhs.poly;
            acc.literal = false;
        }
        return acc;
    }

    Node term() {
        Node acc = factor();
        while (true) {
            char op = lx.peek();
            if (op == '*') {
                lx.advance();
                Node rhs = factor();
                acc.poly *= rhs.poly;
                acc.literal = acc.literal && rhs.literal;
            } else if (op == '/') {
                lx.fail("'/' is only allowed between numeric literals");
            } else {
                break;
            }
        }
        return acc;
    }

    Node factor() {
        Node b = base();
        while (lx.peek() == '^') {
            lx.advance();
            if (!std::isdigit(static_cast<unsigned char>(lx.peek())))
                lx.fail("exponent must be a nonnegative integer");
            long e = 0;
            while (lx.pos < lx.text.size() &&
                   std::isdigit(static_cast<unsigned char>(lx.text[lx.pos]))) {
                e = e * 10 + (lx.text[lx.pos] - '0');
                if (e > 1000000) lx.fail("exponent too large");
                lx.advance();
            }
            b.poly = b.poly.pow(static_cast<unsigned>(e));
            // an integer power of a literal is still a constant but no
            // longer a division-eligible literal
            b.literal = false;
        }
        return b;
    }

    Node base() {
        char c = lx.peek();
        if (c == '-') {
            lx.advance();
            Node b = base();
            b.poly = -b.poly;
            return b;  // stays literal: "-1/2" parses as (-1)/2
        }
        if (c == '(') {
            lx.advance();
            Node inner = expr();
            if (lx.peek() != ')') lx.fail("expected ')'");
            lx.advance();
            inner.literal = false;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return ratio();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name;
            while (lx.pos < lx.text.size() &&
                   (std::isalnum(static_cast<unsigned char>(lx.text[lx.pos])) ||
                    lx.text[lx.pos] == '_')) {
                name.push_back(lx.text[lx.pos]);
                lx.advance();
            }
            if (name == "i") return {MPoly(GaussianRational::i()), false};
            for (auto& v : vars)
                if (v == name) return {MPoly::variable(name), false};
            lx.fail("unknown variable '" + name + "'");
        }
        lx.fail(std::string("unexpected character '") + c + "'");
    }

    Node ratio() {
        Rational acc = decimal();
        while (lx.peek() == '/') {
            lx.advance();
            char c = lx.peek();
            bool neg = false;
            if (c == '-') {
                neg = true;
                lx.advance();
                c = lx.peek();
            }
            if (!std::isdigit(static_cast<unsigned char>(c)) && c != '.')
                lx.fail("'/' is only allowed between numeric literals");
            Rational d = decimal();
            if (neg) d = -d;
            if (d.is_zero()) lx.fail("division by zero in literal");
            acc /= d;
        }
        return {MPoly(acc), true};
    }

    Rational decimal() {
        lx.skip_ws();
        std::string tok;
        while (lx.pos < lx.text.size() &&
               (std::isdigit(static_cast<unsigned char>(lx.text[lx.pos])) ||
                lx.text[lx.pos] == '.')) {
            tok.push_back(lx.text[lx.pos]);
            lx.advance();
        }
        try {
            return Rational::from_decimal(tok);
        } catch (const ParseError& e) {
            lx.fail(e.what());
        }
    }
};

}  // namespace detail

// Parses one expression over the given variables (plus 'i').
inline MPoly parse_expression(std::string_view text, const std::vector<std::string>& vars,
                              int line0 = 1, int col0 = 1) {
    detail::Lexer lx(text, line0, col0);
    detail::ExprParser ep{lx, vars};
    return ep.parse();
}

namespace detail {

inline Grid parse_matrix(std::string_view text, const std::vector<std::string>& vars, int line0) {
    Lexer lx(text, line0, 1);
    if (lx.peek() != '[') lx.fail("matrix must start with '['");
    lx.advance();
    Grid rows;
    while (true) {
        if (lx.peek() != '[') lx.fail("matrix row must start with '['");
        lx.advance();
        std::vector<MPoly> row;
        while (true) {
            // parse one entry expression up to ',' or ']' at depth 0
            std::size_t start = lx.pos;
            int depth = 0;
            int sl = lx.line, sc = lx.col;
            while (lx.pos < lx.text.size()) {
                char ch = lx.text[lx.pos];
                if (ch == '(') ++depth;
                if (ch == ')') --depth;
                if (depth == 0 && (ch == ',' || ch == ']')) break;
                lx.advance();
            }
            if (lx.pos >= lx.text.size()) lx.fail("unterminated matrix row");
            std::string_view entry = lx.text.substr(start, lx.pos - start);
            row.push_back(parse_expression(entry, vars, sl, sc));
            if (lx.text[lx.pos] == ',') {
                lx.advance();
                continue;
            }
            lx.advance();  // ']'
            break;
        }
        rows.push_back(std::move(row));
        char c = lx.peek();
        if (c == ',') {
            lx.advance();
            continue;
        }
        if (c == ']') {
            lx.advance();
            break;
        }
        lx.fail("expected ',' or ']' between matrix rows");
    }
    if (!lx.eof()) lx.fail("unexpected trailing input after matrix");
    return rows;
}

}  // namespace detail

// Parses the line-oriented key/value input format. Keys: kind, time,
// params, poly, A, B, C, K, box, grid. '#' starts a comment. Matrix values
// may span lines until their brackets balance.
inline Problem parse_input(std::string_view text) {
    Problem pr;
    bool saw_kind = false, saw_time = false, saw_poly = false;
    bool sawA = false, sawB = false, sawC = false, sawK = false;

    std::vector<std::pair<int, std::string>> entries;  // line, "key: value"
    {
        std::vector<std::string> lines;
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t end = text.find('\n', start);
            if (end == std::string_view::npos) end = text.size();
            lines.emplace_back(text.substr(start, end - start));
            start = end + 1;
        }
        for (std::size_t li = 0; li < lines.size(); ++li) {
            std::string s = lines[li];
            if (auto hash = s.find('#'); hash != std::string::npos) s.erase(hash);
            auto notspace = [](unsigned char c) { return !std::isspace(c); };
            if (std::find_if(s.begin(), s.end(), notspace) == s.end()) continue;
            // continuation: append lines until brackets balance
            long bal = 0;
            for (char c : s) bal += (c == '[') - (c == ']');
            std::size_t lj = li;
            while (bal > 0 && lj + 1 < lines.size()) {
                ++lj;
                std::string nxt = lines[lj];
                if (auto hash = nxt.find('#'); hash != std::string::npos) nxt.erase(hash);
                s += "\n" + nxt;
                for (char c : nxt) bal += (c == '[') - (c == ']');
            }
            if (bal != 0) throw ParseError("unbalanced brackets", static_cast<int>(li + 1), 1);
            entries.emplace_back(static_cast<int>(li + 1), s);
            li = lj;
        }
    }

    // params first, so expressions know their variables
    for (auto& [line, s] : entries) {
        auto colon = s.find(':');
        if (colon == std::string::npos) throw ParseError("expected 'key: value'", line, 1);
        std::string key = s.substr(0, colon);
        key.erase(std::remove_if(key.begin(), key.end(),
                                 [](unsigned char c) { return std::isspace(c); }),
                  key.end());
        if (key != "params") continue;
        std::string val = s.substr(colon + 1);
        std::vector<std::string> names;
        std::string cur;
        for (char c : val + " ") {
            if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
                if (!cur.empty()) names.push_back(std::exchange(cur, ""));
            } else {
                cur.push_back(c);
            }
        }
        if (names.size() != 2) throw ParseError("params must name exactly two variables", line, 1);
        for (auto& nm : names) {
            if (nm == "s" || nm == "i" || nm == "w" || nm[0] == '_' ||
                !std::isalpha(static_cast<unsigned char>(nm[0])))
                throw ParseError("parameter name '" + nm + "' is reserved or invalid", line, 1);
        }
        if (names[0] == names[1]) throw ParseError("parameter names must differ", line, 1);
        pr.params = {names[0], names[1]};
    }

    std::vector<std::string> poly_vars{"s", pr.params[0], pr.params[1]};
    std::vector<std::string> mat_vars{pr.params[0], pr.params[1]};

    for (auto& [line, s] : entries) {
        auto colon = s.find(':');
        std::string key = s.substr(0, colon);
        key.erase(std::remove_if(key.begin(), key.end(),
                                 [](unsigned char c) { return std::isspace(c); }),
                  key.end());
        std::string val = s.substr(colon + 1);
        auto trim = [](std::string v) {
            auto issp = [](unsigned char c) { return std::isspace(c); };
            while (!v.empty() && issp(v.front())) v.erase(v.begin());
            while (!v.empty() && issp(v.back())) v.pop_back();
            return v;
        };
        std::string tv = trim(val);
        if (key == "params") continue;
        if (key == "kind") {
            if (tv == "polynomial") pr.kind = Problem::Kind::polynomial;
            else if (tv == "matrix") pr.kind = Problem::Kind::matrix;
            else throw ParseError("kind must be 'polynomial' or 'matrix'", line, 1);
            saw_kind = true;
        } else if (key == "time") {
            if (tv == "continuous") pr.time_domain = TimeDomain::continuous;
            else if (tv == "discrete") pr.time_domain = TimeDomain::discrete;
            else throw ParseError("time must be 'continuous' or 'discrete'", line, 1);
            saw_time = true;
        } else if (key == "poly") {
            pr.poly = parse_expression(val, poly_vars, line, static_cast<int>(colon) + 2);
            saw_poly = true;
        } else if (key == "A" || key == "B" || key == "C" || key == "K") {
            Grid g = detail::parse_matrix(val, mat_vars, line);
            if (key == "A") { pr.A = std::move(g); sawA = true; }
            else if (key == "B") { pr.B = std::move(g); sawB = true; }
            else if (key == "C") { pr.C = std::move(g); sawC = true; }
            else { pr.K = std::move(g); sawK = true; }
        } else if (key == "box") {
            std::array<Rational, 4> b;
            std::size_t start = 0, idx = 0;
            std::string bv = tv;
            for (std::size_t i = 0; i <= bv.size(); ++i) {
                if (i == bv.size() || bv[i] == ':') {
                    if (idx >= 4) throw ParseError("box needs XMIN:XMAX:YMIN:YMAX", line, 1);
                    b[idx++] = Rational::from_decimal(trim(bv.substr(start, i - start)));
                    start = i + 1;
                }
            }
            if (idx != 4) throw ParseError("box needs XMIN:XMAX:YMIN:YMAX", line, 1);
            if (!(b[0] < b[1]) || !(b[2] < b[3]))
                throw ParseError("box must satisfy XMIN < XMAX and YMIN < YMAX", line, 1);
            pr.box = b;
        } else if (key == "grid") {
            try {
                pr.grid = std::stoi(tv);
            } catch (...) {
                throw ParseError("grid must be an integer", line, 1);
            }
            if (pr.grid < 16) throw ParseError("grid must be at least 16", line, 1);
        } else {
            throw ParseError("unknown key '" + key + "'", line, 1);
        }
    }

    if (!saw_kind) throw ParseError("missing 'kind'");
    if (!saw_time) throw ParseError("missing 'time'");
    if (pr.kind == Problem::Kind::polynomial) {
        if (!saw_poly) throw ParseError("polynomial problem needs 'poly'");
        if (sawA || sawB || sawC || sawK)
            throw ParseError("polynomial problem must not carry matrices");
        if (pr.poly.degree_in("s") < 1)
            throw ParseError("family must have degree at least 1 in s");
    } else {
        if (saw_poly) throw ParseError("matrix problem must not carry 'poly'");
        if (!sawA) throw ParseError("matrix problem needs 'A'");
        check_rect(pr.A, "A");
        if (pr.A.size() != pr.A[0].size()) throw ParseError("A must be square");
        int given = sawB + sawC + sawK;
        if (given != 0 && given != 3)
            throw ParseError("B, C, K must be given together (or not at all)");
    }
    return pr;
}

}  // namespace ddecomp
