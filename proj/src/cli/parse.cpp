#include "wres/cli/parse.hpp"

#include <cctype>

#include "wres/error.hpp"

namespace wres {

namespace {

class Parser {
public:
    Parser(std::string_view s, const Ring& ring) : s_(s), ring_(ring) {}

    Polynomial parse() {
        Polynomial p = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw Error(ErrorKind::ParseError, "at offset " + std::to_string(pos_) + ": " + msg);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Polynomial expr() {
        Polynomial acc = term();
        for (;;) {
            if (accept('+')) acc = acc + term();
            else if (accept('-')) acc = acc - term();
            else return acc;
        }
    }

    Polynomial term() {
        Polynomial acc = unary();
        while (accept('*')) acc = acc * unary();
        return acc;
    }

    Polynomial unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    Polynomial power() {
        Polynomial base = atom();
        if (accept('^')) {
            skip();
            std::string digits = readDigits();
            if (digits.empty()) fail("expected exponent");
            if (digits.size() > 9) fail("exponent too large");
            return base.pow(std::stoul(digits));
        }
        return base;
    }

    std::string readDigits() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return std::string(s_.substr(start, pos_ - start));
    }

    Polynomial atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            if (!accept(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num(readDigits());
            Integer den = 1;
            std::size_t save = pos_;
            skip();
            if (pos_ < s_.size() && s_[pos_] == '/') {
                ++pos_;
                skip();
                std::string d = readDigits();
                if (d.empty()) fail("expected denominator");
                den = Integer(d);
                if (den == 0) fail("zero denominator");
            } else {
                pos_ = save;
            }
            Rational q(num, den);
            q.canonicalize();
            return Polynomial::constant(ring_, q);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            std::string name(s_.substr(start, pos_ - start));
            auto idx = ring_->indexOf(name);
            if (!idx) throw Error(ErrorKind::UnknownVariable, "unknown variable '" + name + "' at offset " + std::to_string(start));
            return Polynomial::variable(ring_, *idx);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view s_;
    const Ring& ring_;
    std::size_t pos_ = 0;
};

std::string trim(std::string_view s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return std::string(s.substr(a, b - a));
}

std::vector<std::string> split(std::string_view text, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        std::size_t k = text.find(sep, start);
        std::string piece = trim(text.substr(start, k == std::string_view::npos ? std::string_view::npos : k - start));
        if (!piece.empty()) out.push_back(piece);
        if (k == std::string_view::npos) break;
        start = k + 1;
    }
    return out;
}

} // namespace

Polynomial parsePolynomial(std::string_view text, const Ring& ring) {
    return Parser(text, ring).parse();
}

std::vector<Polynomial> parsePolynomialList(std::string_view text, const Ring& ring) {
    std::vector<Polynomial> out;
    for (const auto& piece : split(text, ';')) out.push_back(parsePolynomial(piece, ring));
    return out;
}

std::vector<std::string> parseVariableList(std::string_view text) {
    auto vars = split(text, ',');
    for (const auto& v : vars) {
        bool ok = std::isalpha(static_cast<unsigned char>(v[0])) || v[0] == '_';
        for (char c : v) ok = ok && (std::isalnum(static_cast<unsigned char>(c)) || c == '_');
        if (!ok) throw Error(ErrorKind::ParseError, "bad variable name '" + v + "'");
    }
    if (vars.empty()) throw Error(ErrorKind::ParseError, "empty variable list");
    return vars;
}

} // namespace wres
