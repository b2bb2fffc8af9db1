#include "tdcad/parse.hpp"

#include <cctype>

#include "tdcad/errors.hpp"

namespace tdcad {

namespace {

class PolyParser {
public:
    PolyParser(const std::string& text, VarOrderPtr order, int line)
        : text_(text), order_(std::move(order)), line_(line) {}

    Polynomial parse() {
        Polynomial p = parse_poly();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError(msg, line_, (int)pos_ + 1);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace((unsigned char)text_[pos_])) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    Polynomial parse_poly() {
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        Polynomial acc = parse_term();
        if (neg) acc = -acc;
        while (true) {
            if (eat('+'))
                acc = acc + parse_term();
            else if (eat('-'))
                acc = acc - parse_term();
            else
                break;
        }
        return acc;
    }

    Polynomial parse_term() {
        Polynomial acc = parse_factor();
        while (eat('*')) acc = acc * parse_factor();
        // juxtaposition like "2x" or "x y" is rejected here
        char c = peek();
        if (std::isalnum((unsigned char)c) || c == '(' || c == '_')
            fail("missing operator (juxtaposition not allowed)");
        return acc;
    }

    Polynomial parse_factor() {
        Polynomial base = parse_atom();
        if (eat('^')) {
            skip_ws();
            if (pos_ >= text_.size() || !std::isdigit((unsigned char)text_[pos_]))
                fail("expected exponent");
            unsigned k = 0;
            while (pos_ < text_.size() && std::isdigit((unsigned char)text_[pos_])) {
                k = k * 10 + (unsigned)(text_[pos_] - '0');
                if (k > 10000) fail("exponent too large");
                ++pos_;
            }
            return base.pow(k);
        }
        return base;
    }

    Polynomial parse_atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial p = parse_poly();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit((unsigned char)c)) return parse_number();
        if (std::isalpha((unsigned char)c) || c == '_') return parse_ident();
        fail(std::string("unexpected character '") + c + "'");
    }

    Polynomial parse_number() {
        std::string digits;
        while (pos_ < text_.size() && std::isdigit((unsigned char)text_[pos_]))
            digits += text_[pos_++];
        if (pos_ < text_.size() && text_[pos_] == '/') {
            size_t save = pos_;
            ++pos_;
            skip_ws();
            std::string den;
            while (pos_ < text_.size() && std::isdigit((unsigned char)text_[pos_]))
                den += text_[pos_++];
            if (den.empty()) {
                pos_ = save;
                fail("expected denominator digits");
            }
            return Polynomial(order_, rational_from_string(digits + "/" + den));
        }
        return Polynomial(order_, rational_from_string(digits));
    }

    Polynomial parse_ident() {
        std::string name;
        while (pos_ < text_.size() &&
               (std::isalnum((unsigned char)text_[pos_]) || text_[pos_] == '_'))
            name += text_[pos_++];
        Var v = order_->find(name);
        if (v == 0) fail("undeclared variable '" + name + "'");
        return Polynomial::variable(order_, v);
    }

    const std::string& text_;
    VarOrderPtr order_;
    int line_;
    size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const VarOrderPtr& order, int line) {
    return PolyParser(text, order, line).parse();
}

}  // namespace tdcad
