#include "starplane/ast.hpp"

#include <cctype>

namespace starplane {

const char* generator_name(GenId g) {
    switch (g) {
        case GenId::Z: return "z";
        case GenId::Zb: return "zb";
        case GenId::Zi: return "zi";
        case GenId::Zbi: return "zbi";
        case GenId::H: return "H";
        case GenId::R2: return "r2";
        case GenId::I: return "i";
    }
    return "?";
}

namespace {

class Parser {
  public:
    Parser(const std::string& text, ParseMode mode) : text_(text), mode_(mode) {}

    Ast run() {
        skip_ws();
        if (eof()) throw ParseError("empty expression", 0);
        Ast e = parse_expr();
        skip_ws();
        if (!eof()) throw ParseError("trailing input", pos_);
        return e;
    }

  private:
    const std::string& text_;
    ParseMode mode_;
    size_t pos_ = 0;

    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return eof() ? '\0' : text_[pos_]; }
    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool consume(char c) {
        skip_ws();
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c, const char* what) {
        if (!consume(c)) throw ParseError(std::string("expected '") + c + "' " + what, pos_);
    }

    Ast parse_expr() {
        size_t begin = pos_;
        skip_ws();
        std::vector<Ast> terms;
        bool lead_neg = consume('-');
        Ast first = parse_term();
        if (lead_neg) {
            Ast neg;
            neg.kind = AstKind::Negation;
            neg.span = {begin, pos_};
            neg.children.push_back(std::move(first));
            first = std::move(neg);
        }
        terms.push_back(std::move(first));
        while (true) {
            skip_ws();
            if (peek() == '+') {
                ++pos_;
                terms.push_back(parse_term());
            } else if (peek() == '-') {
                ++pos_;
                size_t nbegin = pos_;
                Ast t = parse_term();
                Ast neg;
                neg.kind = AstKind::Negation;
                neg.span = {nbegin, pos_};
                neg.children.push_back(std::move(t));
                terms.push_back(std::move(neg));
            } else {
                break;
            }
        }
        if (terms.size() == 1) return std::move(terms[0]);
        Ast sum;
        sum.kind = AstKind::Sum;
        sum.span = {begin, pos_};
        sum.children = std::move(terms);
        return sum;
    }

    Ast parse_term() {
        size_t begin = pos_;
        std::vector<Ast> factors;
        factors.push_back(parse_factor());
        while (true) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                factors.push_back(parse_factor());
            } else {
                break;
            }
        }
        if (factors.size() == 1) return std::move(factors[0]);
        Ast prod;
        prod.kind = AstKind::Product;
        prod.span = {begin, pos_};
        prod.children = std::move(factors);
        return prod;
    }

    Ast parse_factor() {
        skip_ws();
        size_t begin = pos_;
        if (peek() == '-') {
            ++pos_;
            Ast inner = parse_factor();
            Ast neg;
            neg.kind = AstKind::Negation;
            neg.span = {begin, pos_};
            neg.children.push_back(std::move(inner));
            return neg;
        }
        if (peek() == '(') {
            ++pos_;
            Ast inner = parse_expr();
            expect(')', "to close group");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            Ast num;
            num.kind = AstKind::Number;
            num.number = parse_rational();
            num.span = {begin, pos_};
            return num;
        }
        if (std::isalpha(static_cast<unsigned char>(peek()))) {
            std::string id = parse_identifier();
            if (id == "comm" || id == "star") {
                expect('(', "after call name");
                Ast call;
                call.kind = id == "comm" ? AstKind::CommCall : AstKind::StarCall;
                call.children.push_back(parse_expr());
                expect(',', "between call arguments");
                call.children.push_back(parse_expr());
                if (call.kind == AstKind::StarCall && consume(',')) {
                    skip_ws();
                    size_t p = pos_;
                    Rational ord = parse_rational();
                    if (!is_integer(ord) || ord < 0)
                        throw ParseError("star order must be a non-negative integer", p);
                    call.star_order = static_cast<int>(to_long(ord));
                }
                expect(')', "to close call");
                call.span = {begin, pos_};
                return call;
            }
            GenId g;
            if (id == "z")
                g = GenId::Z;
            else if (id == "zb")
                g = GenId::Zb;
            else if (id == "zi")
                g = GenId::Zi;
            else if (id == "zbi")
                g = GenId::Zbi;
            else if (id == "H")
                g = GenId::H;
            else if (id == "r2")
                g = GenId::R2;
            else if (id == "i")
                g = GenId::I;
            else
                throw ParseError("unknown identifier '" + id + "'", begin);
            Ast gen;
            gen.kind = AstKind::Generator;
            gen.gen = g;
            gen.span = {begin, pos_};
            return maybe_power(std::move(gen), begin);
        }
        throw ParseError("expected an atom", pos_);
    }

    Ast maybe_power(Ast base, size_t begin) {
        skip_ws();
        if (peek() != '^') return base;
        ++pos_;
        skip_ws();
        bool parens = consume('(');
        size_t p = pos_;
        Rational e = parse_signed_rational();
        if (parens) expect(')', "to close exponent");
        if (mode_ == ParseMode::Word && !is_integer(e))
            throw ParseError("rational exponent is not allowed in word mode", p);
        Ast pw;
        pw.kind = AstKind::Power;
        pw.gen = base.gen;
        pw.exponent = e;
        pw.span = {begin, pos_};
        return pw;
    }

    std::string parse_identifier() {
        size_t start = pos_;
        while (!eof() && (std::isalnum(static_cast<unsigned char>(text_[pos_])))) ++pos_;
        return text_.substr(start, pos_ - start);
    }

    Rational parse_signed_rational() {
        bool neg = consume('-');
        Rational r = parse_rational();
        return neg ? Rational(-r) : r;
    }

    Rational parse_rational() {
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("expected a number", pos_);
        long num = parse_integer();
        if (peek() == '/') {
            ++pos_;
            size_t p = pos_;
            long den = parse_integer();
            if (den == 0) throw ParseError("zero denominator", p);
            return rat(num, den);
        }
        return rat(num);
    }

    long parse_integer() {
        size_t start = pos_;
        long v = 0;
        while (!eof() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v < 0) throw ParseError("integer literal overflow", start);
            ++pos_;
        }
        if (pos_ == start) throw ParseError("expected digits", start);
        return v;
    }
};

}  // namespace

ParseResult parse(const std::string& text, ParseMode mode) {
    if (text.empty()) throw ParseError("empty input", 0);
    Parser p(text, mode);
    return {p.run(), mode};
}

bool ast_equal(const Ast& a, const Ast& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case AstKind::Number:
            if (!(a.number == b.number)) return false;
            break;
        case AstKind::Generator:
            if (a.gen != b.gen) return false;
            break;
        case AstKind::Power:
            if (a.gen != b.gen || !(a.exponent == b.exponent)) return false;
            break;
        case AstKind::StarCall:
            if (a.star_order != b.star_order) return false;
            break;
        case AstKind::FunctionCall:
            if (a.func_name != b.func_name) return false;
            break;
        default: break;
    }
    if (a.children.size() != b.children.size()) return false;
    for (size_t i = 0; i < a.children.size(); ++i)
        if (!ast_equal(a.children[i], b.children[i])) return false;
    return true;
}

namespace {

NCPoly generator_ncpoly(GenId g, long exp, size_t pos) {
    switch (g) {
        case GenId::Z: return NCPoly::generator_power(Letter::Z, static_cast<int>(exp));
        case GenId::Zb: return NCPoly::generator_power(Letter::Zb, static_cast<int>(exp));
        case GenId::Zi: return NCPoly::generator_power(Letter::Zi, static_cast<int>(exp));
        case GenId::Zbi: return NCPoly::generator_power(Letter::Zbi, static_cast<int>(exp));
        case GenId::H:
            if (exp < 0) throw ParseError("negative power of H", pos);
            return NCPoly::h_power(static_cast<int>(exp));
        case GenId::R2: return NCPoly::r2_power(static_cast<int>(exp));
        case GenId::I: {
            GaussianRational v(1);
            GaussianRational unit = GaussianRational::i();
            long e = ((exp % 4) + 4) % 4;
            for (long j = 0; j < e; ++j) v *= unit;
            return NCPoly::scalar(v);
        }
    }
    throw std::logic_error("bad generator");
}

Symbol generator_symbol(GenId g, const Rational& exp, size_t pos) {
    switch (g) {
        case GenId::Z: return Symbol::monomial(exp, rat(0));
        case GenId::Zb: return Symbol::monomial(rat(0), exp);
        case GenId::Zi: return Symbol::monomial(Rational(-exp), rat(0));
        case GenId::Zbi: return Symbol::monomial(rat(0), Rational(-exp));
        case GenId::R2:
            if (!is_integer(exp))
                throw ParseError("fractional |z|^2 power would need odd |z| powers", pos);
            return Symbol::monomial(exp, exp);
        case GenId::H: {
            if (!is_integer(exp) || exp < 0) throw ParseError("H power must be a non-negative integer", pos);
            return Symbol::constant(HPolynomial::h_power(static_cast<int>(to_long(exp))));
        }
        case GenId::I: {
            if (!is_integer(exp)) throw ParseError("fractional power of i", pos);
            GaussianRational v(1);
            long e = ((to_long(exp) % 4) + 4) % 4;
            for (long j = 0; j < e; ++j) v *= GaussianRational::i();
            return Symbol::constant(HPolynomial(v));
        }
    }
    throw std::logic_error("bad generator");
}

}  // namespace

NCPoly to_ncpoly(const Ast& ast) {
    switch (ast.kind) {
        case AstKind::Number: return NCPoly::scalar(GaussianRational(ast.number));
        case AstKind::Generator: return generator_ncpoly(ast.gen, 1, ast.span.begin);
        case AstKind::Power: {
            if (!is_integer(ast.exponent))
                throw ParseError("rational exponent in word mode", ast.span.begin);
            return generator_ncpoly(ast.gen, to_long(ast.exponent), ast.span.begin);
        }
        case AstKind::Negation: return to_ncpoly(ast.children[0]).scaled(GaussianRational(-1));
        case AstKind::Sum: {
            NCPoly acc;
            for (auto& c : ast.children) acc += to_ncpoly(c);
            return acc;
        }
        case AstKind::Product: {
            NCPoly acc = NCPoly::one();
            for (auto& c : ast.children) acc = acc * to_ncpoly(c);
            return acc;
        }
        case AstKind::CommCall: {
            NCPoly a = to_ncpoly(ast.children[0]);
            NCPoly b = to_ncpoly(ast.children[1]);
            return a * b - b * a;
        }
        case AstKind::StarCall:
            throw ParseError("star product is a symbol-mode construct", ast.span.begin);
        case AstKind::FunctionCall:
            throw ParseError("unknown function", ast.span.begin);
    }
    throw std::logic_error("bad ast kind");
}

Symbol to_symbol(const Ast& ast, const StarConfig& cfg) {
    switch (ast.kind) {
        case AstKind::Number: return Symbol::constant(HPolynomial(GaussianRational(ast.number)));
        case AstKind::Generator: return generator_symbol(ast.gen, rat(1), ast.span.begin);
        case AstKind::Power: return generator_symbol(ast.gen, ast.exponent, ast.span.begin);
        case AstKind::Negation: return -to_symbol(ast.children[0], cfg);
        case AstKind::Sum: {
            Symbol acc;
            for (auto& c : ast.children) acc += to_symbol(c, cfg);
            return acc;
        }
        case AstKind::Product: {
            Symbol acc = Symbol::constant(HPolynomial(1));
            for (auto& c : ast.children) acc = acc * to_symbol(c, cfg);
            return acc;
        }
        case AstKind::CommCall: {
            Symbol a = to_symbol(ast.children[0], cfg);
            Symbol b = to_symbol(ast.children[1], cfg);
            return moyal_star(a, b, cfg).value - moyal_star(b, a, cfg).value;
        }
        case AstKind::StarCall: {
            Symbol a = to_symbol(ast.children[0], cfg);
            Symbol b = to_symbol(ast.children[1], cfg);
            StarConfig local = cfg;
            if (ast.star_order) local.order = *ast.star_order;
            return moyal_star(a, b, local).value;
        }
        case AstKind::FunctionCall:
            throw ParseError("unknown function", ast.span.begin);
    }
    throw std::logic_error("bad ast kind");
}

}  // namespace starplane
