#include "zarlat/parse.hpp"

#include <cctype>

#include "internal.hpp"

namespace zarlat {

namespace {

struct Cursor {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    std::string digits() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw ParseError("expected digits", pos);
        return s.substr(start, pos - start);
    }

    std::string ident() {
        skip_ws();
        std::size_t start = pos;
        if (pos >= s.size() || !std::isalpha(static_cast<unsigned char>(s[pos])))
            throw ParseError("expected a variable name", pos);
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        return s.substr(start, pos - start);
    }
};

Elem parse_integer_like(Cursor& cur, const RingPtr& ring) {
    bool negative = false;
    if (cur.eat('-')) negative = true;
    else cur.eat('+');
    mpz_class v(cur.digits());
    if (negative) v = -v;
    if (!cur.done()) throw ParseError("unexpected trailing input", cur.pos);
    return Elem::from_int(ring, v);
}

// rational := digits ('/' digits)?
mpq_class parse_rational(Cursor& cur) {
    mpz_class num(cur.digits());
    if (cur.eat('/')) {
        std::size_t den_at = cur.pos;
        mpz_class den(cur.digits());
        if (den == 0) throw ParseError("zero denominator", den_at);
        mpq_class q(num, den);
        q.canonicalize();
        return q;
    }
    return mpq_class(num);
}

// factor := rational | var ('^' nat)?
Elem parse_factor(Cursor& cur, const RingPtr& ring) {
    char c = cur.peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
        return Elem::from_rational(ring, parse_rational(cur));
    }
    std::size_t var_at = cur.pos;
    std::string name = cur.ident();
    const auto& vars = ring->variables();
    std::size_t vi = 0;
    while (vi < vars.size() && vars[vi] != name) ++vi;
    if (vi == vars.size())
        throw ParseError("unknown variable '" + name + "' in " + ring->name(), var_at);
    std::uint64_t exp = 1;
    if (cur.eat('^')) {
        std::size_t exp_at = cur.pos;
        mpz_class e(cur.digits());
        if (e > 100000) throw ParseError("exponent too large", exp_at);
        exp = e.get_ui();
    }

    if (ring->kind() == Ring::Kind::uni_poly) {
        UniPoly p(static_cast<std::size_t>(exp) + 1, mpq_class(0));
        p.back() = 1;
        return Elem::from_uni(ring, std::move(p));
    }
    Monomial m(ring->var_count(), 0);
    m[vi] = static_cast<std::uint32_t>(exp);
    return Elem::monomial(ring, std::move(m));
}

Elem parse_poly(Cursor& cur, const RingPtr& ring) {
    Elem acc = zero(ring);
    bool first = true;
    while (true) {
        bool negative = false;
        if (cur.eat('-')) negative = true;
        else if (cur.eat('+')) {
            if (first) throw ParseError("unexpected leading '+'", cur.pos - 1);
        } else if (!first) {
            break;
        }
        if (cur.done()) throw ParseError("expected a term", cur.pos);
        Elem term = parse_factor(cur, ring);
        while (cur.eat('*')) term = mul(term, parse_factor(cur, ring));
        acc = negative ? sub(acc, term) : add(acc, term);
        first = false;
        if (cur.done()) return acc;
    }
    throw ParseError("unexpected trailing input", cur.pos);
}

} // namespace

Elem parse_elem(const std::string& text, const RingPtr& ring) {
    Cursor cur{text};
    if (cur.done()) throw ParseError("empty input", 0);
    switch (ring->kind()) {
        case Ring::Kind::integers:
        case Ring::Kind::modular: return parse_integer_like(cur, ring);
        case Ring::Kind::uni_poly:
        case Ring::Kind::multi_poly: return parse_poly(cur, ring);
    }
    throw InternalError("unreachable");
}

} // namespace zarlat
