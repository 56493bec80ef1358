#include "astk/polynomial.hpp"

#include <cctype>

namespace astk {

namespace {

class Parser {
public:
    Parser(const RingPtr& ring, const std::string& text) : ring_(ring), s_(text) {}

    Poly run() {
        Poly p = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw DomainError("cannot parse polynomial \"" + s_ + "\" at " + std::to_string(pos_) + ": " + what);
    }
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
    bool at_atom() {
        skip();
        if (pos_ >= s_.size()) return false;
        char c = s_[pos_];
        return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '(';
    }

    Poly expr() {
        Poly out = eat('-') ? -term() : (eat('+'), term());
        for (;;) {
            if (eat('+')) out += term();
            else if (eat('-')) out -= term();
            else return out;
        }
    }
    Poly term() {
        Poly out = power();
        for (;;) {
            if (eat('*')) out = out * power();
            else if (at_atom()) out = out * power();
            else return out;
        }
    }
    std::string digits() {
        skip();
        std::size_t b = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (b == pos_) fail("expected a number");
        return s_.substr(b, pos_ - b);
    }
    Poly power() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = digits();
            if (pos_ < s_.size() && s_[pos_] == '/') {
                ++pos_;
                num += "/" + digits();
            }
            return Poly::constant(ring_, parse_rational(num));
        }
        if (eat('(')) {
            Poly inner = expr();
            if (!eat(')')) fail("expected ')'");
            if (eat('^')) {
                if (eat('-')) fail("negative power of a parenthesized expression");
                return inner.pow(static_cast<unsigned>(std::stoul(digits())));
            }
            return inner;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t b = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            const std::string name = s_.substr(b, pos_ - b);
            std::size_t idx = ring_->nvars();
            for (std::size_t i = 0; i < ring_->nvars(); ++i)
                if (ring_->variables[i] == name) idx = i;
            if (idx == ring_->nvars()) fail("unknown variable " + name);
            int e = 1;
            if (eat('^')) {
                bool neg = eat('-');
                e = std::stoi(digits());
                if (neg) e = -e;
            }
            if (e < 0 && !ring_->laurent()) fail("negative exponent outside a Laurent ring");
            return Poly::variable(ring_, idx, e);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    const RingPtr& ring_;
    std::string s_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const RingPtr& ring, const std::string& text) { return Parser(ring, text).run(); }

}  // namespace astk
