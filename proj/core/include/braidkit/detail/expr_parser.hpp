#pragma once

#include "braidkit/scalars.hpp"

#include <cctype>
#include <string>
#include <string_view>

namespace braidkit::detail {

// Recursive-descent parser for + - * / ^ expressions with integer literals,
// identifiers and parentheses. Sem supplies the value semantics.
template <class Sem>
class ExprParser {
public:
    using T = typename Sem::value_type;

    ExprParser(std::string_view text, const Sem& sem) : s_(text), sem_(sem) {}

    T parse() {
        skip();
        if (pos_ >= s_.size()) throw ParseError("empty expression", pos_);
        T v = expr();
        skip();
        if (pos_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
        return v;
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    T expr() {
        T v = term();
        for (;;) {
            if (eat('+'))
                v = sem_.add(v, term());
            else if (eat('-'))
                v = sem_.sub(v, term());
            else
                return v;
        }
    }

    T term() {
        T v = unary();
        for (;;) {
            skip();
            std::size_t at = pos_;
            if (eat('*'))
                v = sem_.mul(v, unary());
            else if (eat('/'))
                v = sem_.div(v, unary(), at);
            else
                return v;
        }
    }

    T unary() {
        if (eat('-')) return sem_.neg(unary());
        if (eat('+')) return unary();
        return power();
    }

    int exponent() {
        skip();
        std::size_t at = pos_;
        bool paren = eat('(');
        bool negative = false;
        if (eat('-'))
            negative = true;
        else
            eat('+');
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected integer exponent", pos_);
        long k = std::stol(std::string(s_.substr(start, pos_ - start)));
        if (k > 1000000) throw ParseError("exponent too large", at);
        if (paren && !eat(')')) throw ParseError("expected ')'", pos_);
        return static_cast<int>(negative ? -k : k);
    }

    T power() {
        T base = atom();
        skip();
        std::size_t at = pos_;
        if (eat('^')) return sem_.pow(base, exponent(), at);
        return base;
    }

    T atom() {
        skip();
        if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            T v = expr();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return sem_.integer(mpz_class(std::string(s_.substr(start, pos_ - start))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            return sem_.identifier(std::string(s_.substr(start, pos_ - start)), start);
        }
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }

    std::string_view s_;
    const Sem& sem_;
    std::size_t pos_ = 0;
};

}  // namespace braidkit::detail
