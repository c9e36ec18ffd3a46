#include "klsw/qformat.hpp"

#include <cctype>
#include <stdexcept>

namespace klsw {

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
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

    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("parse_qexpr: " + what + " at position " +
                                    std::to_string(pos) + " in \"" + s + "\"");
    }

    long integer() {
        skip_ws();
        bool neg = false;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) neg = s[pos++] == '-';
        if (pos >= s.size() || !std::isdigit((unsigned char)s[pos])) fail("expected integer");
        long v = 0;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) v = v * 10 + (s[pos++] - '0');
        return neg ? -v : v;
    }

    // expr := term (('+'|'-') term)*
    RatFn expr() {
        RatFn v = term();
        while (true) {
            char c = peek();
            if (c == '+') {
                ++pos;
                v += term();
            } else if (c == '-') {
                ++pos;
                v -= term();
            } else {
                return v;
            }
        }
    }

    // term := ['-'] power (power | '/' power)*   (juxtaposition multiplies)
    RatFn term() {
        bool neg = false;
        while (peek() == '-') {
            ++pos;
            neg = !neg;
        }
        RatFn v = power();
        while (true) {
            char c = peek();
            if (c == '/') {
                ++pos;
                v /= power();
            } else if (c == '*') {
                ++pos;
                v *= power();
            } else if (c == '[' || c == '(' || c == 'u' || std::isdigit((unsigned char)c)) {
                v *= power();
            } else {
                break;
            }
        }
        return neg ? -v : v;
    }

    // power := atom ['^' int]
    RatFn power() {
        RatFn v = atom();
        if (peek() == '^') {
            ++pos;
            long e = integer();
            RatFn r = RatFn::one();
            RatFn base = e < 0 ? RatFn::one() / v : v;
            for (long i = 0; i < (e < 0 ? -e : e); ++i) r *= base;
            return r;
        }
        return v;
    }

    RatFn atom() {
        char c = peek();
        if (c == '[') {
            ++pos;
            long k = integer();
            if (!eat(']')) fail("expected ']'");
            if (k < 0) fail("negative quantum integer");
            if (pos < s.size() && s[pos] == '!') {
                ++pos;
                return RatFn::qfact((int)k);
            }
            return RatFn::qint((int)k);
        }
        if (c == '(') {
            ++pos;
            RatFn v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (c == 'u') {
            ++pos;
            if (peek() == '^') {
                ++pos;
                return RatFn::u_pow((int)integer());
            }
            return RatFn::u_pow(1);
        }
        if (std::isdigit((unsigned char)c)) return RatFn(integer());
        fail("unexpected character");
    }
};

}  // namespace

RatFn parse_qexpr(const std::string& text) {
    Parser p(text);
    RatFn v = p.expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return v;
}

}  // namespace klsw
