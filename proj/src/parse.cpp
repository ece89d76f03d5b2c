#include "cfroots/parse.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace cfroots {

namespace {

// Sparse accumulation form used while parsing; densified at the end.
struct SparsePoly {
    std::map<std::vector<int>, Integer> terms;  // exponents -> coefficient

    static SparsePoly constant(Integer c) {
        SparsePoly p;
        if (c != 0) p.terms[{}] = std::move(c);
        return p;
    }
};

std::vector<int> pad(const std::vector<int>& e, std::size_t n) {
    std::vector<int> out = e;
    out.resize(n, 0);
    return out;
}

SparsePoly add(const SparsePoly& a, const SparsePoly& b, int sign) {
    SparsePoly out = a;
    for (const auto& [e, c] : b.terms) {
        auto& slot = out.terms[e];
        slot += sign > 0 ? c : -c;
        if (slot == 0) out.terms.erase(e);
    }
    return out;
}

std::vector<int> merge_exponents(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
}

SparsePoly mul(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly out;
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms) {
            auto e = merge_exponents(ea, eb);
            auto& slot = out.terms[e];
            slot += ca * cb;
            if (slot == 0) out.terms.erase(e);
        }
    return out;
}

SparsePoly pow(const SparsePoly& a, long e) {
    SparsePoly out = SparsePoly::constant(1);
    SparsePoly base = a;
    while (e > 0) {
        if (e & 1) out = mul(out, base);
        base = mul(base, base);
        e >>= 1;
    }
    return out;
}

struct Lexer {
    const std::string& text;
    std::size_t pos = 0;
    int line = 1, col = 1;

    explicit Lexer(const std::string& t) : text(t) {}

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
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            advance();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            advance();
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) { throw parse_error(msg, line, col); }
};

struct Parser {
    Lexer lex;
    std::map<std::string, int> var_index;
    std::vector<std::string> var_names;
    bool fixed_vars = false;

    explicit Parser(const std::string& text) : lex(text) {}

    std::string ident() {
        lex.skip_ws();
        std::string name;
        while (lex.pos < lex.text.size()) {
            char c = lex.text[lex.pos];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
                name += c;
                lex.advance();
            } else {
                break;
            }
        }
        return name;
    }

    SparsePoly variable(const std::string& name) {
        auto it = var_index.find(name);
        int idx;
        if (it == var_index.end()) {
            if (fixed_vars) lex.fail("undeclared variable '" + name + "'");
            idx = static_cast<int>(var_names.size());
            var_index[name] = idx;
            var_names.push_back(name);
        } else {
            idx = it->second;
        }
        SparsePoly p;
        std::vector<int> e(static_cast<std::size_t>(idx) + 1, 0);
        e[static_cast<std::size_t>(idx)] = 1;
        p.terms[e] = 1;
        return p;
    }

    Integer integer_literal() {
        lex.skip_ws();
        std::string digits;
        while (lex.pos < lex.text.size() &&
               std::isdigit(static_cast<unsigned char>(lex.text[lex.pos]))) {
            digits += lex.text[lex.pos];
            lex.advance();
        }
        if (digits.empty()) lex.fail("expected an integer");
        return Integer(digits);
    }

    long exponent() {
        Integer e = integer_literal();
        if (e < 0 || e > 4096) lex.fail("exponent out of supported range");
        return e.get_si();
    }

    SparsePoly factor() {
        char c = lex.peek();
        if (c == '(') {
            lex.advance();
            SparsePoly p = expression();
            if (!lex.eat(')')) lex.fail("expected ')'");
            return maybe_power(p);
        }
        if (c == '-') {
            lex.advance();
            return add(SparsePoly{}, factor(), -1);
        }
        if (c == '+') {
            lex.advance();
            return factor();
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return maybe_power(SparsePoly::constant(integer_literal()));
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name = ident();
            if (name.empty()) lex.fail("expected a variable name");
            return maybe_power(variable(name));
        }
        if (c == '.') lex.fail("non-integer literal");
        lex.fail(std::string("unexpected character '") + c + "'");
    }

    SparsePoly maybe_power(SparsePoly base) {
        if (lex.eat('^')) {
            if (lex.peek() == '.') lex.fail("non-integer literal");
            return pow(base, exponent());
        }
        if (lex.peek() == '.') lex.fail("non-integer literal");
        return base;
    }

    SparsePoly term() {
        SparsePoly p = factor();
        while (lex.eat('*')) p = mul(p, factor());
        return p;
    }

    SparsePoly expression() {
        SparsePoly p = term();
        while (true) {
            char c = lex.peek();
            if (c == '+') {
                lex.advance();
                p = add(p, term(), +1);
            } else if (c == '-') {
                lex.advance();
                p = add(p, term(), -1);
            } else {
                break;
            }
        }
        return p;
    }

    SystemSource run() {
        // Optional `vars x,y;` header.
        lex.skip_ws();
        std::size_t mark = lex.pos;
        int mline = lex.line, mcol = lex.col;
        std::string head = ident();
        if (head == "vars") {
            fixed_vars = true;
            do {
                std::string name = ident();
                if (name.empty()) lex.fail("expected a variable name in header");
                if (var_index.count(name)) lex.fail("duplicate variable '" + name + "'");
                var_index[name] = static_cast<int>(var_names.size());
                var_names.push_back(name);
            } while (lex.eat(','));
            if (!lex.eat(';')) lex.fail("expected ';' after header");
        } else {
            lex.pos = mark;
            lex.line = mline;
            lex.col = mcol;
        }

        std::vector<SparsePoly> polys;
        while (true) {
            lex.skip_ws();
            if (lex.pos >= lex.text.size()) break;
            polys.push_back(expression());
            lex.skip_ws();
            if (lex.pos >= lex.text.size()) break;
            if (!lex.eat(';')) lex.fail("expected ';' between polynomials");
        }
        if (polys.empty()) throw parse_error("empty system", lex.line, lex.col);

        const int n = std::max<std::size_t>(var_names.size(), 1);
        SystemSource out;
        out.variables = var_names;
        if (out.variables.empty()) out.variables.push_back("x");
        std::size_t total = 1;
        for (const auto& p : polys)
            for (const auto& [e, c] : p.terms) {
                (void)c;
                std::size_t sz = 1;
                for (std::size_t k = 0; k < static_cast<std::size_t>(n); ++k)
                    sz *= static_cast<std::size_t>((k < e.size() ? e[k] : 0) + 1);
                total = std::max(total, sz);
            }
        if (total > (1u << 24))
            throw parse_error("polynomial too large for the dense representation", 1, 1);
        for (const auto& p : polys) {
            std::vector<std::pair<std::vector<int>, Integer>> terms;
            terms.reserve(p.terms.size());
            for (const auto& [e, c] : p.terms)
                terms.emplace_back(pad(e, static_cast<std::size_t>(n)), c);
            out.polynomials.push_back(TensorPoly::from_terms(n, terms));
        }
        return out;
    }
};

Rational parse_rational_token(const std::string& tok, int line, int col) {
    auto slash = tok.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(tok));
        Integer num(tok.substr(0, slash));
        Integer den(tok.substr(slash + 1));
        if (den == 0) throw parse_error("zero denominator", line, col);
        return make_rational(num, den);
    } catch (const std::invalid_argument&) {
        throw parse_error("malformed rational '" + tok + "'", line, col);
    }
}

std::string strip(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

SystemSource parse_system(const std::string& text) {
    Parser p(text);
    return p.run();
}

DomainBox parse_box(const std::string& text) {
    DomainBox box;
    std::stringstream ss(text);
    std::string axis;
    int col = 1;
    while (std::getline(ss, axis, ',')) {
        auto colon = axis.find(':');
        if (colon == std::string::npos) throw parse_error("expected lo:hi", 1, col);
        std::string lo = strip(axis.substr(0, colon));
        std::string hi = strip(axis.substr(colon + 1));
        if (lo.empty() || hi.empty()) throw parse_error("empty endpoint", 1, col);
        if (lo == "inf" || lo == "+inf")
            throw parse_error("lower endpoint must be finite", 1, col);
        AxisInterval iv;
        iv.lo = parse_rational_token(lo, 1, col);
        if (hi == "inf" || hi == "+inf") {
            iv.hi = std::nullopt;
        } else {
            iv.hi = parse_rational_token(hi, 1, col);
            if (*iv.hi < iv.lo) throw parse_error("box with lo > hi", 1, col);
        }
        box.axes.push_back(std::move(iv));
        col += static_cast<int>(axis.size()) + 1;
    }
    if (box.axes.empty()) throw parse_error("empty box", 1, 1);
    return box;
}

std::string print_box(const DomainBox& box) {
    std::ostringstream os;
    for (std::size_t k = 0; k < box.axes.size(); ++k) {
        if (k) os << ",";
        os << to_string(box.axes[k].lo) << ":"
           << (box.axes[k].hi ? to_string(*box.axes[k].hi) : std::string("inf"));
    }
    return os.str();
}

}  // namespace cfroots
