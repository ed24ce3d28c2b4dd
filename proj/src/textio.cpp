#include "salab/textio.hpp"

#include <cctype>
#include <sstream>

namespace salab {

namespace {

struct Token {
    enum Kind { Num, Ident, Plus, Minus, Star, Hat, Slash, LPar, RPar, End } kind;
    std::string text;
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }
    const Token& peek() const { return tok_; }
    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < s_.size() && std::isspace((unsigned char)s_[i_])) ++i_;
        std::size_t start = i_;
        if (i_ >= s_.size()) {
            tok_ = {Token::End, "", start};
            return;
        }
        char c = s_[i_];
        if (std::isdigit((unsigned char)c)) {
            std::size_t j = i_;
            while (j < s_.size() && std::isdigit((unsigned char)s_[j])) ++j;
            tok_ = {Token::Num, s_.substr(i_, j - i_), start};
            i_ = j;
            return;
        }
        if (std::isalpha((unsigned char)c)) {
            std::size_t j = i_;
            while (j < s_.size() && std::isalnum((unsigned char)s_[j])) ++j;
            tok_ = {Token::Ident, s_.substr(i_, j - i_), start};
            i_ = j;
            return;
        }
        ++i_;
        switch (c) {
            case '+': tok_ = {Token::Plus, "+", start}; return;
            case '-': tok_ = {Token::Minus, "-", start}; return;
            case '*': tok_ = {Token::Star, "*", start}; return;
            case '^': tok_ = {Token::Hat, "^", start}; return;
            case '/': tok_ = {Token::Slash, "/", start}; return;
            case '(': tok_ = {Token::LPar, "(", start}; return;
            case ')': tok_ = {Token::RPar, ")", start}; return;
            default: throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
    }

    const std::string& s_;
    std::size_t i_ = 0;
    Token tok_;
};

class Parser {
public:
    Parser(const std::string& s, int n) : lex_(s), n_(n) {}

    MixedForm parse() {
        MixedForm v = expr();
        if (lex_.peek().kind != Token::End)
            throw ParseError("trailing input", lex_.peek().pos);
        return v;
    }

private:
    MixedForm expr() {
        MixedForm v = term();
        while (lex_.peek().kind == Token::Plus || lex_.peek().kind == Token::Minus) {
            Token op = lex_.next();
            MixedForm t = term();
            if (op.kind == Token::Plus)
                v += t;
            else
                v -= t;
        }
        return v;
    }

    // '^' followed by an integer is a power of the preceding factor; any
    // other '^' separates exterior-product factors (dz1^dzb2).
    MixedForm term() {
        bool neg = false;
        while (lex_.peek().kind == Token::Minus || lex_.peek().kind == Token::Plus) {
            if (lex_.next().kind == Token::Minus) neg = !neg;
        }
        MixedForm v(scalar_one());
        MixedForm last = factor();
        for (;;) {
            Token::Kind k = lex_.peek().kind;
            if (k == Token::Star) {
                lex_.next();
                v = wedge(v, last);
                last = factor();
            } else if (k == Token::Hat) {
                lex_.next();
                if (lex_.peek().kind == Token::Num) {
                    Token e = lex_.next();
                    long exp = std::stol(e.text);
                    MixedForm acc(scalar_one());
                    for (long i = 0; i < exp; ++i) acc = wedge(acc, last);
                    last = acc;
                } else {
                    v = wedge(v, last);
                    last = factor();
                }
            } else {
                break;
            }
        }
        v = wedge(v, last);
        if (neg) v = -v;
        return v;
    }

    Form scalar_one() { return Form::scalar(Scalar::one(n_)); }

    MixedForm factor() {
        Token t = lex_.next();
        switch (t.kind) {
            case Token::Num: {
                Rat num(t.text);
                Rat val = num;
                if (lex_.peek().kind == Token::Slash) {
                    lex_.next();
                    if (lex_.peek().kind != Token::Num)
                        throw ParseError("expected denominator", lex_.peek().pos);
                    Token d = lex_.next();
                    Rat den(d.text);
                    if (den == 0) throw ParseError("zero denominator", d.pos);
                    val = num / den;
                }
                CRat c(val);
                if (lex_.peek().kind == Token::Ident && lex_.peek().text == "i") {
                    lex_.next();
                    c = c * CRat::i();
                }
                return MixedForm(Form::scalar(Scalar::constant(n_, c)));
            }
            case Token::Ident: return ident(t);
            case Token::LPar: {
                MixedForm v = expr();
                if (lex_.peek().kind != Token::RPar)
                    throw ParseError("expected ')'", lex_.peek().pos);
                lex_.next();
                return v;
            }
            default: throw ParseError("expected a factor", t.pos);
        }
    }

    MixedForm ident(const Token& t) {
        const std::string& s = t.text;
        if (s == "i") return MixedForm(Form::scalar(Scalar::constant(n_, CRat::i())));
        if (s == "eps") return MixedForm(Form::scalar(Scalar::eps(n_)));
        auto index_after = [&](std::size_t off) -> int {
            if (s.size() <= off) throw ParseError("missing index in '" + s + "'", t.pos);
            for (std::size_t i = off; i < s.size(); ++i)
                if (!std::isdigit((unsigned char)s[i]))
                    throw ParseError("bad generator '" + s + "'", t.pos);
            int idx = std::stoi(s.substr(off));
            if (idx < 1 || idx > n_)
                throw ParseError("index out of range in '" + s + "'", t.pos);
            return idx;
        };
        if (s.rfind("dzb", 0) == 0) return MixedForm(Form::basis(n_, {}, {index_after(3)}));
        if (s.rfind("dz", 0) == 0) return MixedForm(Form::basis(n_, {index_after(2)}, {}));
        if (s.rfind("zb", 0) == 0) return MixedForm(Form::scalar(Scalar::coord_bar(n_, index_after(2))));
        if (s.rfind("z", 0) == 0) return MixedForm(Form::scalar(Scalar::coord(n_, index_after(1))));
        throw ParseError("unknown name '" + s + "'", t.pos);
    }

    Lexer lex_;
    int n_;
};

std::string mono_str(const Mono& m, int n) {
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const std::string& g, int e) {
        if (e == 0) return;
        if (!first) os << "*";
        first = false;
        os << g;
        if (e > 1) os << "^" << e;
    };
    for (int i = 0; i < n; ++i) emit("z" + std::to_string(i + 1), m[i]);
    for (int i = 0; i < n; ++i) emit("zb" + std::to_string(i + 1), m[n + i]);
    emit("eps", m[2 * n]);
    return os.str();
}

// Coefficient as a leading product factor; "" means 1, "-" means -1.
std::string coeff_factor(const CRat& c) {
    if (c.im == 0) {
        if (c.re == 1) return "";
        if (c.re == -1) return "-";
        return rat_str(c.re);
    }
    if (c.re == 0) return crat_str(c);       // e.g. "1/3i"
    return "(" + crat_str(c) + ")";          // e.g. "(3/2+1/3i)"
}

void append_scalar_terms(std::ostringstream& os, const Scalar& s, int n, bool& first,
                         const std::string& basis) {
    for (const auto& [m, c] : s.terms()) {
        std::string mono = mono_str(m, n);
        std::string coeff = coeff_factor(c);
        std::string body;
        if (coeff == "" || coeff == "-") {
            body = coeff;
            if (mono.empty() && basis.empty())
                body += "1";
            else {
                body += mono;
                if (!mono.empty() && !basis.empty()) body += "*";
                body += basis;
            }
        } else {
            body = coeff;
            if (!mono.empty()) body += "*" + mono;
            if (!basis.empty()) body += "*" + basis;
        }
        if (!first) os << " + ";
        first = false;
        os << body;
    }
}

std::string basis_str(const FormKey& k) {
    std::ostringstream os;
    bool first = true;
    for (int i : k.I) {
        if (!first) os << "^";
        first = false;
        os << "dz" << i;
    }
    for (int j : k.J) {
        if (!first) os << "^";
        first = false;
        os << "dzb" << j;
    }
    return os.str();
}

}  // namespace

MixedForm parse_expr(const std::string& text, int n) { return Parser(text, n).parse(); }

Scalar parse_scalar(const std::string& text, int n) {
    MixedForm m = parse_expr(text, n);
    for (const auto& [d, f] : m.parts())
        if (d != Bidegree{0, 0}) throw TypeError("expected a scalar, got a form: " + text);
    return m.component(0, 0).scalar_value();
}

Form parse_form(const std::string& text, int n, int p, int q) {
    MixedForm m = parse_expr(text, n);
    for (const auto& [d, f] : m.parts())
        if (d != Bidegree{p, q})
            throw TypeError("expected a (" + std::to_string(p) + "," + std::to_string(q) +
                            ")-form: " + text);
    return m.component(p, q);
}

std::string scalar_str(const Scalar& s) {
    if (s.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    append_scalar_terms(os, s, s.dim(), first, "");
    return os.str();
}

std::string form_str(const Form& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, s] : f.terms()) append_scalar_terms(os, s, f.dim(), first, basis_str(k));
    return os.str();
}

std::string mixed_str(const MixedForm& m) {
    if (m.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, f] : m.parts()) {
        if (!first) os << " + ";
        first = false;
        os << form_str(f);
    }
    return os.str();
}

std::string Scalar::str() const { return scalar_str(*this); }
std::string Form::str() const { return form_str(*this); }
std::string MixedForm::str() const { return mixed_str(*this); }

std::string VectorField10::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 1; i <= n_; ++i) {
        if (i > 1) os << ", ";
        os << component(i).str();
    }
    os << "]";
    return os.str();
}

}  // namespace salab
