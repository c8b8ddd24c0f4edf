#include "starplane/render.hpp"

#include <json.hpp>
#include <sstream>

namespace starplane {

namespace {

using nlohmann::json;

std::string rational_str(const Rational& q) { return q.get_str(); }

// ---- plain ----

std::string plain_exponent(const Rational& e) {
    if (is_integer(e) && e > 0) return rational_str(e);
    return "(" + rational_str(e) + ")";
}

std::string plain_ast(const Ast& a, bool parenthesize_compound) {
    std::ostringstream out;
    switch (a.kind) {
        case AstKind::Number: out << rational_str(a.number); break;
        case AstKind::Generator: out << generator_name(a.gen); break;
        case AstKind::Power:
            out << generator_name(a.gen) << "^" << plain_exponent(a.exponent);
            break;
        case AstKind::Negation: {
            const Ast& c = a.children[0];
            // '-' binds to a whole term in expr position but to a single
            // factor inside products; parenthesizing compound children keeps
            // the rendering unambiguous in every position.
            bool parens = c.kind == AstKind::Sum || c.kind == AstKind::Product ||
                          c.kind == AstKind::Negation;
            out << "-";
            out << (parens ? "(" : "") << plain_ast(c, false) << (parens ? ")" : "");
            break;
        }
        case AstKind::Sum: {
            std::ostringstream s;
            for (size_t i = 0; i < a.children.size(); ++i) {
                const Ast& c = a.children[i];
                if (i == 0) {
                    s << plain_ast(c, false);
                } else if (c.kind == AstKind::Negation) {
                    s << " - " << plain_ast(c.children[0],
                                            c.children[0].kind == AstKind::Sum);
                    continue;
                } else {
                    s << " + " << plain_ast(c, false);
                }
            }
            if (parenthesize_compound)
                out << "(" << s.str() << ")";
            else
                out << s.str();
            break;
        }
        case AstKind::Product: {
            std::ostringstream s;
            for (size_t i = 0; i < a.children.size(); ++i) {
                if (i) s << "*";
                const Ast& c = a.children[i];
                bool parens = c.kind == AstKind::Sum || c.kind == AstKind::Negation;
                s << (parens ? "(" : "") << plain_ast(c, false) << (parens ? ")" : "");
            }
            out << s.str();
            break;
        }
        case AstKind::CommCall:
            out << "comm(" << plain_ast(a.children[0], false) << ", "
                << plain_ast(a.children[1], false) << ")";
            break;
        case AstKind::StarCall:
            out << "star(" << plain_ast(a.children[0], false) << ", "
                << plain_ast(a.children[1], false);
            if (a.star_order) out << ", " << *a.star_order;
            out << ")";
            break;
        case AstKind::FunctionCall:
            out << a.func_name << "(";
            for (size_t i = 0; i < a.children.size(); ++i) {
                if (i) out << ", ";
                out << plain_ast(a.children[i], false);
            }
            out << ")";
            break;
    }
    return out.str();
}

// Renders one sum term: sign separated by the caller.
struct SignedPiece {
    bool negative = false;
    std::string body;
};

// A Gaussian rational as a leading factor; "1" suppressed when followed by
// other factors.
SignedPiece coeff_factor(const GaussianRational& c, bool has_tail) {
    SignedPiece p;
    GaussianRational v = c;
    if (v.is_real()) {
        if (v.re < 0) {
            p.negative = true;
            v.re = -v.re;
        }
        if (v.re == 1 && has_tail) {
            p.body = "";
        } else {
            p.body = rational_str(v.re);
        }
        return p;
    }
    if (v.re == 0) {
        if (v.im < 0) {
            p.negative = true;
            v.im = -v.im;
        }
        if (v.im == 1)
            p.body = "i";
        else
            p.body = rational_str(v.im) + "*i";
        return p;
    }
    p.body = to_string(v);  // "(a+b*i)" form
    return p;
}

void append_factor(std::string& body, const std::string& f) {
    if (f.empty()) return;
    if (!body.empty()) body += "*";
    body += f;
}

std::string word_factors_plain(const Word& w) {
    std::string out;
    size_t i = 0;
    while (i < w.size()) {
        size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        std::string f = letter_name(w[i]);
        if (j - i > 1) f += "^" + std::to_string(j - i);
        append_factor(out, f);
        i = j;
    }
    return out;
}

std::string hpow_plain(int h) {
    if (h == 0) return "";
    std::string s = "H";
    if (h > 1) s += "^" + std::to_string(h);
    return s;
}

std::string r2_plain(int m) {
    if (m == 0) return "";
    std::string s = "r2";
    if (m != 1) s += "^" + (m > 0 ? std::to_string(m) : ("(" + std::to_string(m) + ")"));
    return s;
}

std::string ncpoly_plain(const NCPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto& [key, coeff] : p.terms()) {
        std::string tail;
        append_factor(tail, hpow_plain(key.hdeg));
        append_factor(tail, r2_plain(key.modpow));
        append_factor(tail, word_factors_plain(key.word));
        SignedPiece c = coeff_factor(coeff, !tail.empty());
        std::string body = c.body;
        append_factor(body, tail);
        if (body.empty()) body = "1";
        if (first) {
            out << (c.negative ? "-" : "") << body;
            first = false;
        } else {
            out << (c.negative ? " - " : " + ") << body;
        }
    }
    return out.str();
}

std::string monomial_plain(const PuiseuxMonomial& m) {
    std::string out;
    if (m.a != 0) {
        std::string f = "z";
        if (m.a != 1) f += "^" + plain_exponent(m.a);
        append_factor(out, f);
    }
    if (m.b != 0) {
        std::string f = "zb";
        if (m.b != 1) f += "^" + plain_exponent(m.b);
        append_factor(out, f);
    }
    return out;
}

// Deterministic symbol term order: total degree descending, then z-exponent
// descending, then zb descending.
std::vector<std::pair<PuiseuxMonomial, HPolynomial>> symbol_ordered(const Symbol& s) {
    std::vector<std::pair<PuiseuxMonomial, HPolynomial>> v(s.terms().begin(), s.terms().end());
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) {
        Rational dx = x.first.a + x.first.b, dy = y.first.a + y.first.b;
        if (dx != dy) return dx > dy;
        if (x.first.a != y.first.a) return x.first.a > y.first.a;
        return x.first.b > y.first.b;
    });
    return v;
}

std::string symbol_plain(const Symbol& s) {
    if (s.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto& [m, hc] : symbol_ordered(s)) {
        std::string mono = monomial_plain(m);
        bool negative = false;
        std::string body;
        if (hc.coeffs().size() == 1) {
            auto& [h, c] = *hc.coeffs().begin();
            SignedPiece cp = coeff_factor(c, h != 0 || !mono.empty());
            negative = cp.negative;
            body = cp.body;
            append_factor(body, hpow_plain(h));
        } else {
            body = "(" + to_string(hc) + ")";
        }
        append_factor(body, mono);
        if (body.empty()) body = "1";
        if (first) {
            out << (negative ? "-" : "") << body;
            first = false;
        } else {
            out << (negative ? " - " : " + ") << body;
        }
    }
    return out.str();
}

std::string diffop_plain(const DiffOpPoly& d) {
    DiffOpPoly canon = d.canonical();
    if (canon.terms().empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto& [key, coeff] : canon.terms()) {
        auto [r, s] = key;
        std::string dpart;
        if (r > 0) dpart += r == 1 ? "dz" : ("dz^" + std::to_string(r));
        if (s > 0) append_factor(dpart, s == 1 ? "dzb" : ("dzb^" + std::to_string(s)));
        std::string cpart;
        bool negative = false;
        if (coeff.size() == 1) {
            auto& [k2, c2] = *coeff.terms().begin();
            std::string tail;
            append_factor(tail, hpow_plain(k2.hdeg));
            append_factor(tail, r2_plain(k2.modpow));
            append_factor(tail, word_factors_plain(k2.word));
            SignedPiece cp = coeff_factor(c2, !tail.empty() || !dpart.empty());
            negative = cp.negative;
            cpart = cp.body;
            append_factor(cpart, tail);
        } else {
            cpart = "(" + ncpoly_plain(coeff) + ")";
        }
        std::string body = cpart;
        append_factor(body, dpart);
        if (body.empty()) body = "1";
        if (first) {
            out << (negative ? "-" : "") << body;
            first = false;
        } else {
            out << (negative ? " - " : " + ") << body;
        }
    }
    return out.str();
}

// ---- latex ----

std::string latex_letter(Letter l, int count) {
    std::string base;
    switch (l) {
        case Letter::Z: base = "z"; break;
        case Letter::Zb: base = "\\bar{z}"; break;
        case Letter::Zi: base = "z^{-1}"; break;
        case Letter::Zbi: base = "\\bar{z}^{-1}"; break;
    }
    if (count == 1) return base;
    if (l == Letter::Zi) return "z^{-" + std::to_string(count) + "}";
    if (l == Letter::Zbi) return "\\bar{z}^{-" + std::to_string(count) + "}";
    return base + "^{" + std::to_string(count) + "}";
}

std::string latex_coeff(const GaussianRational& c, bool has_tail, bool& negative) {
    GaussianRational v = c;
    negative = false;
    if (v.is_real()) {
        if (v.re < 0) {
            negative = true;
            v.re = -v.re;
        }
        if (v.re == 1 && has_tail) return "";
        return rational_str(v.re);
    }
    if (v.re == 0) {
        if (v.im < 0) {
            negative = true;
            v.im = -v.im;
        }
        if (v.im == 1) return "i";
        return rational_str(v.im) + " i";
    }
    return "(" + to_string(v) + ")";
}

std::string ncpoly_latex(const NCPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto& [key, coeff] : p.terms()) {
        std::string tail;
        auto push = [&](const std::string& f) {
            if (f.empty()) return;
            if (!tail.empty()) tail += " ";
            tail += f;
        };
        if (key.hdeg == 1)
            push("H");
        else if (key.hdeg > 1)
            push("H^{" + std::to_string(key.hdeg) + "}");
        if (key.modpow != 0) push("|z|^{" + std::to_string(2 * key.modpow) + "}");
        size_t i = 0;
        while (i < key.word.size()) {
            size_t j = i;
            while (j < key.word.size() && key.word[j] == key.word[i]) ++j;
            push(latex_letter(key.word[i], static_cast<int>(j - i)));
            i = j;
        }
        bool neg = false;
        std::string cs = latex_coeff(coeff, !tail.empty(), neg);
        std::string body = cs;
        if (!tail.empty()) body = cs.empty() ? tail : cs + " " + tail;
        if (body.empty()) body = "1";
        if (first) {
            out << (neg ? "-" : "") << body;
            first = false;
        } else {
            out << (neg ? " - " : " + ") << body;
        }
    }
    return out.str();
}

std::string latex_rational_exp(const Rational& e) { return "{" + rational_str(e) + "}"; }

std::string symbol_latex(const Symbol& s) {
    if (s.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto& [m, hc] : symbol_ordered(s)) {
        std::string tail;
        auto push = [&](const std::string& f) {
            if (f.empty()) return;
            if (!tail.empty()) tail += " ";
            tail += f;
        };
        if (m.a != 0) push(m.a == 1 ? "z" : "z^" + latex_rational_exp(m.a));
        if (m.b != 0) push(m.b == 1 ? "\\bar{z}" : "\\bar{z}^" + latex_rational_exp(m.b));
        std::string body;
        bool neg = false;
        if (hc.coeffs().size() == 1) {
            auto& [h, c] = *hc.coeffs().begin();
            std::string cs = latex_coeff(c, h != 0 || !tail.empty(), neg);
            body = cs;
            std::string hp;
            if (h == 1)
                hp = "H";
            else if (h > 1)
                hp = "H^{" + std::to_string(h) + "}";
            if (!hp.empty()) body = body.empty() ? hp : body + " " + hp;
        } else {
            body = "\\left(" + to_string(hc) + "\\right)";
        }
        if (!tail.empty()) body = body.empty() ? tail : body + " " + tail;
        if (body.empty()) body = "1";
        if (first) {
            out << (neg ? "-" : "") << body;
            first = false;
        } else {
            out << (neg ? " - " : " + ") << body;
        }
    }
    return out.str();
}

std::string diffop_latex(const DiffOpPoly& d) {
    DiffOpPoly canon = d.canonical();
    if (canon.terms().empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto& [key, coeff] : canon.terms()) {
        auto [r, s] = key;
        std::string dpart;
        if (r == 1)
            dpart = "\\partial_z";
        else if (r > 1)
            dpart = "\\partial_z^{" + std::to_string(r) + "}";
        if (s >= 1) {
            if (!dpart.empty()) dpart += " ";
            dpart += s == 1 ? "\\partial_{\\bar{z}}"
                            : "\\partial_{\\bar{z}}^{" + std::to_string(s) + "}";
        }
        std::string body = "\\left(" + ncpoly_latex(coeff) + "\\right)";
        if (!dpart.empty()) body += " " + dpart;
        if (first) {
            out << body;
            first = false;
        } else {
            out << " + " << body;
        }
    }
    return out.str();
}

std::string ast_latex(const Ast& a) {
    switch (a.kind) {
        case AstKind::Number: return rational_str(a.number);
        case AstKind::Generator:
            switch (a.gen) {
                case GenId::Z: return "z";
                case GenId::Zb: return "\\bar{z}";
                case GenId::Zi: return "z^{-1}";
                case GenId::Zbi: return "\\bar{z}^{-1}";
                case GenId::H: return "H";
                case GenId::R2: return "|z|^{2}";
                case GenId::I: return "i";
            }
            return "?";
        case AstKind::Power: {
            Ast g;
            g.kind = AstKind::Generator;
            g.gen = a.gen;
            return ast_latex(g) + "^{" + rational_str(a.exponent) + "}";
        }
        case AstKind::Negation: return "-" + ast_latex(a.children[0]);
        case AstKind::Sum: {
            std::string s;
            for (size_t i = 0; i < a.children.size(); ++i) {
                if (i) s += a.children[i].kind == AstKind::Negation ? " " : " + ";
                s += ast_latex(a.children[i]);
            }
            return s;
        }
        case AstKind::Product: {
            std::string s;
            for (size_t i = 0; i < a.children.size(); ++i) {
                if (i) s += " ";
                const Ast& c = a.children[i];
                bool parens = c.kind == AstKind::Sum || c.kind == AstKind::Negation;
                s += parens ? "\\left(" + ast_latex(c) + "\\right)" : ast_latex(c);
            }
            return s;
        }
        case AstKind::CommCall:
            return "\\left[" + ast_latex(a.children[0]) + ", " + ast_latex(a.children[1]) +
                   "\\right]";
        case AstKind::StarCall:
            return ast_latex(a.children[0]) + " \\star " + ast_latex(a.children[1]);
        case AstKind::FunctionCall: return a.func_name;
    }
    return "?";
}

// ---- json ----

json gaussian_json(const GaussianRational& c) {
    return json{{"re", rational_str(c.re)}, {"im", rational_str(c.im)}};
}

json hpoly_json(const HPolynomial& h) {
    json arr = json::array();
    for (auto& [k, c] : h.coeffs()) arr.push_back(json{{"h", k}, {"coeff", gaussian_json(c)}});
    return arr;
}

json ncpoly_json(const NCPoly& p) {
    json terms = json::array();
    for (auto& [key, coeff] : p.terms()) {
        std::string w;
        for (Letter l : key.word) {
            if (!w.empty()) w += " ";
            w += letter_name(l);
        }
        terms.push_back(json{{"h", key.hdeg},
                             {"r2", key.modpow},
                             {"word", w},
                             {"coeff", gaussian_json(coeff)}});
    }
    return json{{"type", "ncpoly"}, {"terms", terms}};
}

json symbol_json(const Symbol& s) {
    json terms = json::array();
    for (auto& [m, hc] : symbol_ordered(s)) {
        terms.push_back(json{{"z", rational_str(m.a)},
                             {"zb", rational_str(m.b)},
                             {"coeff", hpoly_json(hc)}});
    }
    return json{{"type", "symbol"}, {"terms", terms}};
}

json diffop_json(const DiffOpPoly& d) {
    DiffOpPoly canon = d.canonical();
    json terms = json::array();
    for (auto& [key, coeff] : canon.terms()) {
        terms.push_back(json{{"dz", key.first},
                             {"dzb", key.second},
                             {"coeff", ncpoly_json(coeff)["terms"]}});
    }
    return json{{"type", "diffop"}, {"terms", terms}};
}

json ast_json(const Ast& a) {
    switch (a.kind) {
        case AstKind::Number: return json{{"kind", "number"}, {"value", rational_str(a.number)}};
        case AstKind::Generator:
            return json{{"kind", "generator"}, {"name", generator_name(a.gen)}};
        case AstKind::Power:
            return json{{"kind", "power"},
                        {"base", generator_name(a.gen)},
                        {"exponent", rational_str(a.exponent)}};
        case AstKind::Negation:
            return json{{"kind", "negation"}, {"child", ast_json(a.children[0])}};
        case AstKind::Sum:
        case AstKind::Product:
        case AstKind::CommCall:
        case AstKind::StarCall:
        case AstKind::FunctionCall: {
            json kids = json::array();
            for (auto& c : a.children) kids.push_back(ast_json(c));
            std::string kind = a.kind == AstKind::Sum        ? "sum"
                               : a.kind == AstKind::Product  ? "product"
                               : a.kind == AstKind::CommCall ? "comm"
                               : a.kind == AstKind::StarCall ? "star"
                                                             : "call";
            json j{{"kind", kind}, {"children", kids}};
            if (a.star_order) j["order"] = *a.star_order;
            return j;
        }
    }
    return json{};
}

}  // namespace

std::string render(const Ast& ast, RenderFormat fmt) {
    switch (fmt) {
        case RenderFormat::Plain: return plain_ast(ast, false);
        case RenderFormat::Latex: return ast_latex(ast);
        case RenderFormat::Json: return ast_json(ast).dump();
    }
    return "";
}

std::string render(const NCPoly& p, RenderFormat fmt) {
    switch (fmt) {
        case RenderFormat::Plain: return ncpoly_plain(p);
        case RenderFormat::Latex: return ncpoly_latex(p);
        case RenderFormat::Json: return ncpoly_json(p).dump();
    }
    return "";
}

std::string render(const Symbol& s, RenderFormat fmt) {
    switch (fmt) {
        case RenderFormat::Plain: return symbol_plain(s);
        case RenderFormat::Latex: return symbol_latex(s);
        case RenderFormat::Json: return symbol_json(s).dump();
    }
    return "";
}

std::string render(const DiffOpPoly& d, RenderFormat fmt) {
    switch (fmt) {
        case RenderFormat::Plain: return diffop_plain(d);
        case RenderFormat::Latex: return diffop_latex(d);
        case RenderFormat::Json: return diffop_json(d).dump();
    }
    return "";
}

}  // namespace starplane
