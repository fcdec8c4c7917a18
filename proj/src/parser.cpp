#include "exalg/parser.hpp"

#include <cctype>
#include <stdexcept>
#include <vector>

namespace exalg {

namespace {

struct Token {
    enum Kind { number, ident, symbol, end } kind;
    std::string text;
    std::size_t pos;
};

[[noreturn]] void fail(std::size_t pos, const std::string& msg) {
    throw std::invalid_argument("parse error at position " +
                                std::to_string(pos) + ": " + msg);
}

std::vector<Token> lex(const std::string& src) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < src.size()) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() &&
                   std::isdigit(static_cast<unsigned char>(src[j])))
                ++j;
            out.push_back({Token::number, src.substr(i, j - i), i});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[j])) ||
                    src[j] == '_'))
                ++j;
            out.push_back({Token::ident, src.substr(i, j - i), i});
            i = j;
            continue;
        }
        if (std::string("+-*^/()").find(c) != std::string::npos) {
            out.push_back({Token::symbol, std::string(1, c), i});
            ++i;
            continue;
        }
        fail(i, std::string("unexpected character '") + c + "'");
    }
    out.push_back({Token::end, "", src.size()});
    return out;
}

// The two evaluation targets share the descent; an adapter supplies the
// algebra. pow receives the atom's name when it was a bare identifier so the
// graded adapter can reject squared odd generators.
template <class Alg>
class Parser {
public:
    Parser(const std::string& src, Alg& alg) : toks_(lex(src)), alg_(alg) {}

    typename Alg::Value run() {
        auto v = expr();
        if (cur().kind != Token::end)
            fail(cur().pos, "unexpected '" + cur().text + "'");
        return v;
    }

private:
    const Token& cur() const { return toks_[at_]; }
    const Token& next() const { return toks_[at_ + 1]; }
    bool is_sym(const char* s) const {
        return cur().kind == Token::symbol && cur().text == s;
    }
    void advance() { ++at_; }

    typename Alg::Value expr() {
        bool negate = false;
        if (is_sym("-") && next().kind != Token::number) {
            advance();
            negate = true;
        }
        auto v = term();
        if (negate) v = alg_.neg(std::move(v));
        while (is_sym("+") || is_sym("-")) {
            bool minus = cur().text == "-";
            advance();
            auto rhs = term();
            v = minus ? alg_.sub(std::move(v), std::move(rhs))
                      : alg_.add(std::move(v), std::move(rhs));
        }
        return v;
    }

    typename Alg::Value term() {
        auto v = factor();
        while (is_sym("*")) {
            advance();
            v = alg_.mul(std::move(v), factor());
        }
        return v;
    }

    typename Alg::Value factor() {
        const std::string* bare = nullptr;
        std::size_t pos = cur().pos;
        if (cur().kind == Token::ident) bare = &cur().text;
        auto v = atom();
        if (is_sym("^")) {
            advance();
            if (cur().kind != Token::number)
                fail(cur().pos, "expected a nonnegative integer exponent");
            if (cur().text.size() > 4)
                fail(cur().pos, "exponent too large");
            long n = std::stol(cur().text);
            advance();
            v = alg_.pow(std::move(v), n, bare, pos);
        }
        return v;
    }

    typename Alg::Value atom() {
        if (is_sym("-") && next().kind == Token::number) {
            advance();
            return alg_.rational(-rational_tail());
        }
        if (cur().kind == Token::number) return alg_.rational(rational_tail());
        if (cur().kind == Token::ident) {
            auto v = alg_.ident(cur().text, cur().pos);
            advance();
            return v;
        }
        if (is_sym("(")) {
            advance();
            auto v = expr();
            if (!is_sym(")")) fail(cur().pos, "expected ')'");
            advance();
            return v;
        }
        fail(cur().pos, cur().kind == Token::end
                            ? "unexpected end of input"
                            : "unexpected '" + cur().text + "'");
    }

    // nat ("/" nat)?, the sign already consumed
    Rat rational_tail() {
        Rat num(mpz_class(cur().text));
        advance();
        if (is_sym("/")) {
            advance();
            if (cur().kind != Token::number)
                fail(cur().pos, "expected a denominator");
            mpz_class den(cur().text);
            if (den == 0) fail(cur().pos, "zero denominator");
            advance();
            num /= Rat(den);
        }
        return num;
    }

    std::vector<Token> toks_;
    std::size_t at_ = 0;
    Alg& alg_;
};

struct PolyAlg {
    using Value = Poly;
    RingPtr ring;
    const Params* params;

    Value rational(const Rat& c) { return Poly::constant(ring, c); }
    Value ident(const std::string& name, std::size_t pos) {
        if (ring->index_of(name) >= 0) return Poly::generator(ring, name);
        auto it = params->find(name);
        if (it != params->end()) return Poly::constant(ring, it->second);
        fail(pos, "unknown identifier '" + name + "'");
    }
    Value add(Value a, const Value& b) { return a + b; }
    Value sub(Value a, const Value& b) { return a - b; }
    Value mul(const Value& a, const Value& b) { return a * b; }
    Value neg(const Value& a) { return -a; }
    Value pow(const Value& a, long n, const std::string*, std::size_t) {
        Value r = Poly::constant(ring, rat(1));
        for (long i = 0; i < n; ++i) r = r * a;
        return r;
    }
};

struct GcaAlg {
    using Value = GcaElement;
    SigPtr sig;
    const Params* params;

    Value rational(const Rat& c) { return GcaElement::constant(sig, c); }
    Value ident(const std::string& name, std::size_t pos) {
        if (sig->index_of(name) >= 0) return GcaElement::generator(sig, name);
        auto it = params->find(name);
        if (it != params->end()) return GcaElement::constant(sig, it->second);
        fail(pos, "unknown identifier '" + name + "'");
    }
    Value add(Value a, const Value& b) { return a + b; }
    Value sub(Value a, const Value& b) { return a - b; }
    Value mul(const Value& a, const Value& b) { return gca_product(a, b); }
    Value neg(const Value& a) { return -a; }
    Value pow(const Value& a, long n, const std::string* bare,
              std::size_t pos) {
        if (bare && n > 1) {
            int i = sig->index_of(*bare);
            if (i >= 0 && sig->gens[i].odd())
                fail(pos, "odd generator '" + *bare +
                              "' cannot be raised to the power " +
                              std::to_string(n));
        }
        Value r = GcaElement::constant(sig, rat(1));
        for (long i = 0; i < n; ++i) r = gca_product(r, a);
        return r;
    }
};

}  // namespace

Rat parse_rational(const std::string& src) {
    auto toks = lex(src);
    std::size_t at = 0;
    bool neg = false;
    if (toks[at].kind == Token::symbol && toks[at].text == "-") {
        neg = true;
        ++at;
    }
    if (toks[at].kind != Token::number) fail(toks[at].pos, "expected a number");
    Rat num(mpz_class(toks[at].text));
    ++at;
    if (toks[at].kind == Token::symbol && toks[at].text == "/") {
        ++at;
        if (toks[at].kind != Token::number)
            fail(toks[at].pos, "expected a denominator");
        mpz_class den(toks[at].text);
        if (den == 0) fail(toks[at].pos, "zero denominator");
        num /= Rat(den);
        ++at;
    }
    if (toks[at].kind != Token::end)
        fail(toks[at].pos, "unexpected '" + toks[at].text + "'");
    return neg ? Rat(-num) : num;
}

Poly parse_poly(const std::string& src, const RingPtr& ring,
                const Params& params) {
    PolyAlg alg{ring, &params};
    return Parser<PolyAlg>(src, alg).run();
}

GcaElement parse_gca(const std::string& src, const SigPtr& sig,
                     const Params& params) {
    GcaAlg alg{sig, &params};
    return Parser<GcaAlg>(src, alg).run();
}

}  // namespace exalg
