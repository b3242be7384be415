#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "errors.hpp"
#include "fields.hpp"
#include "presentation.hpp"

namespace locreg {

// Byte span of a token or statement in the session text.
struct SourceSpan {
    int start = 0;
    int end = 0;
    int line = 1;
    int column = 1;
};

struct SyntaxError : Error {
    SyntaxError(const std::string& msg, SourceSpan span, std::string expected = "")
        : Error(msg), span(span), expected(std::move(expected)) {}
    const char* kind() const override { return "SyntaxError"; }
    SourceSpan span;
    std::string expected;
};

struct UndeclaredName : Error {
    UndeclaredName(const std::string& msg, SourceSpan span) : Error(msg), span(span) {}
    const char* kind() const override { return "UndeclaredName"; }
    SourceSpan span;
};

struct Redeclaration : Error {
    Redeclaration(const std::string& msg, SourceSpan span) : Error(msg), span(span) {}
    const char* kind() const override { return "Redeclaration"; }
    SourceSpan span;
};

// --- AST -------------------------------------------------------------------
// Polynomials stay symbolic in the AST (integer coefficients, named variables)
// and are bound to a ring's ambient at execution time.

struct AstTerm {
    long long coeff = 1;
    std::vector<std::pair<std::string, int>> factors;  // (variable, exponent)

    bool operator==(const AstTerm&) const = default;
};

struct AstPoly {
    std::vector<AstTerm> terms;
    SourceSpan span;

    bool operator==(const AstPoly& o) const { return terms == o.terms; }
};

struct FieldDecl {
    FieldSpec spec;
    SourceSpan span;
    bool operator==(const FieldDecl& o) const { return spec == o.spec; }
};

struct RingDecl {
    std::string name;
    FieldSpec field;
    std::vector<std::string> vars;
    std::vector<AstPoly> relations;
    SourceSpan span;
    bool operator==(const RingDecl& o) const {
        return name == o.name && field == o.field && vars == o.vars && relations == o.relations;
    }
};

struct IdealDecl {
    std::string name;
    std::vector<AstPoly> gens;
    std::string ring;
    SourceSpan span;
    bool operator==(const IdealDecl& o) const {
        return name == o.name && gens == o.gens && ring == o.ring;
    }
};

struct MapDecl {
    std::string name;
    std::string source, target;
    std::vector<AstPoly> images;
    SourceSpan span;
    bool operator==(const MapDecl& o) const {
        return name == o.name && source == o.source && target == o.target && images == o.images;
    }
};

struct QuotientDecl {
    std::string ring_name, map_name;
    std::string base_ring, ideal;
    SourceSpan span;
    bool operator==(const QuotientDecl& o) const {
        return ring_name == o.ring_name && map_name == o.map_name && base_ring == o.base_ring &&
               ideal == o.ideal;
    }
};

struct ComposeDecl {
    std::string name;
    std::string second, first;  // name = second * first (second after first)
    SourceSpan span;
    bool operator==(const ComposeDecl& o) const {
        return name == o.name && second == o.second && first == o.first;
    }
};

struct DiagramDecl {
    std::string name;
    bool is_square = false;
    std::vector<std::string> arrows;  // triangle: phi, psi; square: phi, psi, phi2, psi2
    Orientation orientation = Orientation::Clockwise;
    SourceSpan span;
    bool operator==(const DiagramDecl& o) const {
        return name == o.name && is_square == o.is_square && arrows == o.arrows &&
               orientation == o.orientation;
    }
};

struct ComputeQuery {
    std::string invariant;
    std::vector<std::string> args;
    SourceSpan span;
    bool operator==(const ComputeQuery& o) const {
        return invariant == o.invariant && args == o.args;
    }
};

struct CheckQuery {
    std::string predicate;
    std::vector<std::string> args;
    SourceSpan span;
    bool operator==(const CheckQuery& o) const {
        return predicate == o.predicate && args == o.args;
    }
};

struct SetOption {
    std::string option;                 // trunc_degree | dim_override
    std::optional<std::string> subject; // ring name for dim_override
    long long value = 0;
    SourceSpan span;
    bool operator==(const SetOption& o) const {
        return option == o.option && subject == o.subject && value == o.value;
    }
};

using Statement = std::variant<FieldDecl, RingDecl, IdealDecl, MapDecl, QuotientDecl, ComposeDecl,
                               DiagramDecl, ComputeQuery, CheckQuery, SetOption>;

struct SessionAst {
    std::vector<Statement> statements;
    bool operator==(const SessionAst&) const = default;
};

inline SourceSpan statement_span(const Statement& s) {
    return std::visit([](const auto& x) { return x.span; }, s);
}

// --- Lexer -----------------------------------------------------------------

namespace session_detail {

enum class Tok {
    Ident,
    Int,
    Semi,
    Comma,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Equals,
    Colon,
    Arrow,
    Slash,
    Star,
    Plus,
    Minus,
    Caret,
    End
};

inline const char* tok_str(Tok t) {
    switch (t) {
        case Tok::Ident: return "identifier";
        case Tok::Int: return "integer";
        case Tok::Semi: return "';'";
        case Tok::Comma: return "','";
        case Tok::LParen: return "'('";
        case Tok::RParen: return "')'";
        case Tok::LBracket: return "'['";
        case Tok::RBracket: return "']'";
        case Tok::Equals: return "'='";
        case Tok::Colon: return "':'";
        case Tok::Arrow: return "'->'";
        case Tok::Slash: return "'/'";
        case Tok::Star: return "'*'";
        case Tok::Plus: return "'+'";
        case Tok::Minus: return "'-'";
        case Tok::Caret: return "'^'";
        case Tok::End: return "end of input";
    }
    return "?";
}

struct Token {
    Tok kind;
    std::string text;
    long long value = 0;
    SourceSpan span;
};

inline std::vector<Token> lex(const std::string& text) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto span_at = [&](std::size_t start, std::size_t end) {
        SourceSpan s;
        s.start = static_cast<int>(start);
        s.end = static_cast<int>(end);
        s.line = line;
        s.column = col;
        return s;
    };
    while (i < text.size()) {
        char c = text[i];
        if (c == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (c == ' ' || c == '\t' || c == '\r') {
            ++col;
            ++i;
            continue;
        }
        if (c == '#') {  // line comment
            while (i < text.size() && text[i] != '\n') ++i;
            continue;
        }
        std::size_t start = i;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) ||
                                       text[i] == '_'))
                ++i;
            Token t{Tok::Ident, text.substr(start, i - start), 0, span_at(start, i)};
            col += static_cast<int>(i - start);
            out.push_back(std::move(t));
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            std::string digits = text.substr(start, i - start);
            if (digits.size() > 15)
                throw SyntaxError("integer literal too large", span_at(start, i));
            Token t{Tok::Int, digits, std::stoll(digits), span_at(start, i)};
            col += static_cast<int>(i - start);
            out.push_back(std::move(t));
            continue;
        }
        auto single = [&](Tok k) {
            Token t{k, text.substr(start, 1), 0, span_at(start, start + 1)};
            ++i;
            ++col;
            out.push_back(std::move(t));
        };
        switch (c) {
            case ';': single(Tok::Semi); break;
            case ',': single(Tok::Comma); break;
            case '(': single(Tok::LParen); break;
            case ')': single(Tok::RParen); break;
            case '[': single(Tok::LBracket); break;
            case ']': single(Tok::RBracket); break;
            case '=': single(Tok::Equals); break;
            case ':': single(Tok::Colon); break;
            case '/': single(Tok::Slash); break;
            case '*': single(Tok::Star); break;
            case '+': single(Tok::Plus); break;
            case '^': single(Tok::Caret); break;
            case '-':
                if (i + 1 < text.size() && text[i + 1] == '>') {
                    Token t{Tok::Arrow, "->", 0, span_at(start, start + 2)};
                    i += 2;
                    col += 2;
                    out.push_back(std::move(t));
                } else {
                    single(Tok::Minus);
                }
                break;
            default:
                throw SyntaxError(std::string("unexpected character '") + c + "'",
                                  span_at(start, start + 1));
        }
    }
    Token end{Tok::End, "", 0, {}};
    end.span.start = end.span.end = static_cast<int>(text.size());
    end.span.line = line;
    end.span.column = col;
    out.push_back(std::move(end));
    return out;
}

// --- Parser with name binding ----------------------------------------------

enum class SymKind { Ring, Ideal, Map, Diagram };

inline const char* sym_kind_str(SymKind k) {
    switch (k) {
        case SymKind::Ring: return "ring";
        case SymKind::Ideal: return "ideal";
        case SymKind::Map: return "map";
        case SymKind::Diagram: return "diagram";
    }
    return "?";
}

class Parser {
  public:
    explicit Parser(const std::string& text) : tokens_(lex(text)) {}

    SessionAst parse() {
        SessionAst ast;
        if (peek().kind == Tok::End)
            throw SyntaxError("empty session", peek().span, "statement");
        while (peek().kind != Tok::End) ast.statements.push_back(statement());
        return ast;
    }

  private:
    const Token& peek(int ahead = 0) const {
        std::size_t i = pos_ + static_cast<std::size_t>(ahead);
        return i < tokens_.size() ? tokens_[i] : tokens_.back();
    }
    Token advance() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }
    Token expect(Tok kind, const std::string& what) {
        if (peek().kind != kind)
            throw SyntaxError("expected " + what + ", found '" + describe(peek()) + "'",
                              peek().span, what);
        return advance();
    }
    static std::string describe(const Token& t) {
        return t.kind == Tok::End ? "end of input" : t.text;
    }
    Token expect_keyword(const std::string& kw) {
        if (peek().kind != Tok::Ident || peek().text != kw)
            throw SyntaxError("expected '" + kw + "', found '" + describe(peek()) + "'",
                              peek().span, kw);
        return advance();
    }
    bool at_keyword(const std::string& kw) const {
        return peek().kind == Tok::Ident && peek().text == kw;
    }

    void declare(const std::string& name, SymKind kind, SourceSpan span) {
        if (symbols_.count(name))
            throw Redeclaration("name '" + name + "' already declared", span);
        symbols_.emplace(name, kind);
    }
    SymKind resolve(const std::string& name, SourceSpan span) const {
        auto it = symbols_.find(name);
        if (it == symbols_.end()) throw UndeclaredName("undeclared name '" + name + "'", span);
        return it->second;
    }

    FieldSpec field_spec() {
        if (at_keyword("QQ")) {
            advance();
            return FieldSpec::rationals();
        }
        if (at_keyword("GF")) {
            advance();
            expect(Tok::LParen, "'('");
            Token p = expect(Tok::Int, "prime");
            expect(Tok::RParen, "')'");
            try {
                return FieldSpec::prime_field(p.value);
            } catch (const InvalidField& e) {
                throw SyntaxError(e.what(), p.span, "prime");
            }
        }
        throw SyntaxError("expected 'QQ' or 'GF(p)', found '" + describe(peek()) + "'",
                          peek().span, "field");
    }

    AstPoly poly(const std::vector<std::string>& vars) {
        AstPoly p;
        p.span = peek().span;
        bool negative = false;
        if (peek().kind == Tok::Minus) {
            advance();
            negative = true;
        }
        p.terms.push_back(term(vars, negative));
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            bool neg = advance().kind == Tok::Minus;
            p.terms.push_back(term(vars, neg));
        }
        p.span.end = tokens_[pos_ - 1].span.end;
        return p;
    }

    // term := factor ('*' factor)*;  factor := INT | VAR ('^' INT)?
    // Integer factors fold into the coefficient.
    AstTerm term(const std::vector<std::string>& vars, bool negative) {
        AstTerm t;
        t.coeff = 1;
        for (;;) {
            if (peek().kind == Tok::Int) {
                long long v = advance().value;
                if (t.coeff > 1000000000000000LL / (v > 0 ? v : 1))
                    throw SyntaxError("coefficient too large", peek().span);
                t.coeff *= v;
            } else if (peek().kind == Tok::Ident) {
                Token v = advance();
                bool known = false;
                for (const auto& name : vars) known = known || name == v.text;
                if (!known) throw UndeclaredName("undeclared variable '" + v.text + "'", v.span);
                int exp = 1;
                if (peek().kind == Tok::Caret) {
                    advance();
                    Token e = expect(Tok::Int, "exponent");
                    if (e.value > 64) throw SyntaxError("exponent too large", e.span);
                    exp = static_cast<int>(e.value);
                }
                t.factors.emplace_back(v.text, exp);
            } else {
                throw SyntaxError("expected a term, found '" + describe(peek()) + "'",
                                  peek().span, "term");
            }
            if (peek().kind == Tok::Star) {
                advance();
                continue;
            }
            break;
        }
        if (negative) t.coeff = -t.coeff;
        return t;
    }

    std::vector<AstPoly> polylist(const std::vector<std::string>& vars, Tok closer) {
        std::vector<AstPoly> out;
        if (peek().kind == closer) return out;
        out.push_back(poly(vars));
        while (peek().kind == Tok::Comma) {
            advance();
            out.push_back(poly(vars));
        }
        return out;
    }

    const std::vector<std::string>& ring_vars(const std::string& name, SourceSpan span) {
        if (resolve(name, span) != SymKind::Ring)
            throw UndeclaredName("'" + name + "' is not a ring", span);
        return ring_vars_.at(name);
    }

    Statement statement() {
        Token head = expect(Tok::Ident, "statement keyword");
        SourceSpan span = head.span;
        auto finish = [&](auto node) {
            node.span.start = span.start;
            node.span.line = span.line;
            node.span.column = span.column;
            node.span.end = tokens_[pos_ - 1].span.end;
            return Statement(std::move(node));
        };

        if (head.text == "field") {
            FieldDecl d;
            d.spec = field_spec();
            expect(Tok::Semi, "';'");
            if (field_declared_)
                throw Redeclaration("field already declared", span);
            field_declared_ = true;
            session_field_ = d.spec;
            return finish(std::move(d));
        }
        if (head.text == "ring") {
            RingDecl d;
            d.name = expect(Tok::Ident, "ring name").text;
            expect(Tok::Equals, "'='");
            expect_keyword("local");
            Token ft = peek();
            d.field = field_spec();
            if (!field_declared_)
                throw UndeclaredName("no field declared before ring", ft.span);
            if (!(d.field == session_field_))
                throw UndeclaredName("ring field " + d.field.name() +
                                         " differs from the session field " +
                                         session_field_.name(),
                                     ft.span);
            expect(Tok::LBracket, "'['");
            if (peek().kind == Tok::Ident) {
                d.vars.push_back(advance().text);
                while (peek().kind == Tok::Comma) {
                    advance();
                    d.vars.push_back(expect(Tok::Ident, "variable").text);
                }
            }
            expect(Tok::RBracket, "']'");
            expect(Tok::Slash, "'/'");
            expect(Tok::LParen, "'('");
            d.relations = polylist(d.vars, Tok::RParen);
            expect(Tok::RParen, "')'");
            expect(Tok::Semi, "';'");
            declare(d.name, SymKind::Ring, span);
            ring_vars_[d.name] = d.vars;
            return finish(std::move(d));
        }
        if (head.text == "ideal") {
            IdealDecl d;
            d.name = expect(Tok::Ident, "ideal name").text;
            expect(Tok::Equals, "'='");
            expect(Tok::LParen, "'('");
            // the ring is named after the generator list; find it first
            std::size_t list_start = pos_;
            int depth = 1;
            while (depth > 0) {
                if (peek().kind == Tok::End)
                    throw SyntaxError("unterminated ideal generator list", peek().span, "')'");
                if (peek().kind == Tok::LParen) ++depth;
                if (peek().kind == Tok::RParen) --depth;
                if (depth > 0) advance();
            }
            expect(Tok::RParen, "')'");
            expect_keyword("in");
            Token rt = expect(Tok::Ident, "ring name");
            d.ring = rt.text;
            const auto& vars = ring_vars(d.ring, rt.span);
            std::size_t after = pos_;
            pos_ = list_start;
            d.gens = polylist(vars, Tok::RParen);
            if (peek().kind != Tok::RParen)
                throw SyntaxError("malformed generator list", peek().span, "')'");
            pos_ = after;
            expect(Tok::Semi, "';'");
            declare(d.name, SymKind::Ideal, span);
            return finish(std::move(d));
        }
        if (head.text == "map") {
            MapDecl d;
            d.name = expect(Tok::Ident, "map name").text;
            expect(Tok::Colon, "':'");
            Token st = expect(Tok::Ident, "source ring");
            d.source = st.text;
            ring_vars(d.source, st.span);
            expect(Tok::Arrow, "'->'");
            Token tt = expect(Tok::Ident, "target ring");
            d.target = tt.text;
            const auto& tvars = ring_vars(d.target, tt.span);
            expect(Tok::Equals, "'='");
            expect(Tok::LBracket, "'['");
            d.images = polylist(tvars, Tok::RBracket);
            expect(Tok::RBracket, "']'");
            expect(Tok::Semi, "';'");
            declare(d.name, SymKind::Map, span);
            return finish(std::move(d));
        }
        if (head.text == "quotient") {
            QuotientDecl d;
            d.ring_name = expect(Tok::Ident, "quotient ring name").text;
            expect(Tok::Comma, "','");
            d.map_name = expect(Tok::Ident, "projection name").text;
            expect(Tok::Equals, "'='");
            Token bt = expect(Tok::Ident, "ring name");
            d.base_ring = bt.text;
            const auto& vars = ring_vars(d.base_ring, bt.span);
            expect(Tok::Slash, "'/'");
            Token it = expect(Tok::Ident, "ideal name");
            d.ideal = it.text;
            if (resolve(d.ideal, it.span) != SymKind::Ideal)
                throw UndeclaredName("'" + d.ideal + "' is not an ideal", it.span);
            expect(Tok::Semi, "';'");
            declare(d.ring_name, SymKind::Ring, span);
            declare(d.map_name, SymKind::Map, span);
            ring_vars_[d.ring_name] = vars;
            return finish(std::move(d));
        }
        if (head.text == "compose") {
            ComposeDecl d;
            d.name = expect(Tok::Ident, "map name").text;
            expect(Tok::Equals, "'='");
            Token g = expect(Tok::Ident, "map name");
            d.second = g.text;
            if (resolve(d.second, g.span) != SymKind::Map)
                throw UndeclaredName("'" + d.second + "' is not a map", g.span);
            expect(Tok::Star, "'*'");
            Token f = expect(Tok::Ident, "map name");
            d.first = f.text;
            if (resolve(d.first, f.span) != SymKind::Map)
                throw UndeclaredName("'" + d.first + "' is not a map", f.span);
            expect(Tok::Semi, "';'");
            declare(d.name, SymKind::Map, span);
            return finish(std::move(d));
        }
        if (head.text == "diagram") {
            DiagramDecl d;
            d.name = expect(Tok::Ident, "diagram name").text;
            expect(Tok::Equals, "'='");
            if (at_keyword("triangle")) {
                advance();
                d.is_square = false;
            } else if (at_keyword("square")) {
                advance();
                d.is_square = true;
            } else {
                throw SyntaxError("expected 'triangle' or 'square'", peek().span,
                                  "triangle|square");
            }
            expect(Tok::LParen, "'('");
            int count = d.is_square ? 4 : 2;
            for (int k = 0; k < count; ++k) {
                if (k) expect(Tok::Comma, "','");
                Token a = expect(Tok::Ident, "map name");
                if (resolve(a.text, a.span) != SymKind::Map)
                    throw UndeclaredName("'" + a.text + "' is not a map", a.span);
                d.arrows.push_back(a.text);
            }
            expect(Tok::RParen, "')'");
            if (at_keyword("clockwise")) {
                advance();
                d.orientation = Orientation::Clockwise;
            } else if (at_keyword("anticlockwise")) {
                advance();
                d.orientation = Orientation::Anticlockwise;
            } else {
                throw SyntaxError("expected an orientation", peek().span,
                                  "clockwise|anticlockwise");
            }
            expect(Tok::Semi, "';'");
            declare(d.name, SymKind::Diagram, span);
            return finish(std::move(d));
        }
        if (head.text == "compute" || head.text == "check") {
            bool is_check = head.text == "check";
            std::string op = expect(Tok::Ident, is_check ? "predicate" : "invariant").text;
            std::vector<std::string> args;
            while (peek().kind == Tok::Ident) {
                Token a = advance();
                resolve(a.text, a.span);
                args.push_back(a.text);
            }
            expect(Tok::Semi, "';'");
            if (is_check) {
                CheckQuery q;
                q.predicate = op;
                q.args = std::move(args);
                return finish(std::move(q));
            }
            ComputeQuery q;
            q.invariant = op;
            q.args = std::move(args);
            return finish(std::move(q));
        }
        if (head.text == "set") {
            SetOption d;
            Token o = expect(Tok::Ident, "option name");
            d.option = o.text;
            if (d.option == "trunc_degree") {
                d.value = expect(Tok::Int, "value").value;
            } else if (d.option == "dim_override") {
                Token s = expect(Tok::Ident, "ring name");
                if (resolve(s.text, s.span) != SymKind::Ring)
                    throw UndeclaredName("'" + s.text + "' is not a ring", s.span);
                d.subject = s.text;
                d.value = expect(Tok::Int, "value").value;
            } else {
                throw SyntaxError("unknown option '" + d.option + "'", o.span,
                                  "trunc_degree|dim_override");
            }
            expect(Tok::Semi, "';'");
            return finish(std::move(d));
        }
        throw SyntaxError("unknown statement '" + head.text + "'", head.span, "statement");
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::map<std::string, SymKind> symbols_;
    std::map<std::string, std::vector<std::string>> ring_vars_;
    bool field_declared_ = false;
    FieldSpec session_field_;
};

}  // namespace session_detail

inline SessionAst parse_session(const std::string& text) {
    return session_detail::Parser(text).parse();
}

// --- Printer (canonical form; reparses to an equal AST) ---------------------

inline std::string print_poly(const AstPoly& p) {
    if (p.terms.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < p.terms.size(); ++i) {
        const AstTerm& t = p.terms[i];
        long long c = t.coeff;
        if (i == 0) {
            if (c < 0) s += "-";
        } else {
            s += c < 0 ? " - " : " + ";
        }
        long long mag = c < 0 ? -c : c;
        std::string factors;
        for (std::size_t k = 0; k < t.factors.size(); ++k) {
            if (k) factors += "*";
            factors += t.factors[k].first;
            if (t.factors[k].second != 1)
                factors += "^" + std::to_string(t.factors[k].second);
        }
        if (factors.empty()) {
            s += std::to_string(mag);
        } else if (mag == 1) {
            s += factors;
        } else {
            s += std::to_string(mag) + "*" + factors;
        }
    }
    return s;
}

inline std::string print_polylist(const std::vector<AstPoly>& ps) {
    std::string s;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (i) s += ", ";
        s += print_poly(ps[i]);
    }
    return s;
}

inline std::string print_statement(const Statement& stmt) {
    struct Printer {
        std::string operator()(const FieldDecl& d) { return "field " + d.spec.name() + ";"; }
        std::string operator()(const RingDecl& d) {
            std::string s = "ring " + d.name + " = local " + d.field.name() + "[";
            for (std::size_t i = 0; i < d.vars.size(); ++i) {
                if (i) s += ",";
                s += d.vars[i];
            }
            return s + "]/(" + print_polylist(d.relations) + ");";
        }
        std::string operator()(const IdealDecl& d) {
            return "ideal " + d.name + " = (" + print_polylist(d.gens) + ") in " + d.ring + ";";
        }
        std::string operator()(const MapDecl& d) {
            return "map " + d.name + " : " + d.source + " -> " + d.target + " = [" +
                   print_polylist(d.images) + "];";
        }
        std::string operator()(const QuotientDecl& d) {
            return "quotient " + d.ring_name + ", " + d.map_name + " = " + d.base_ring + " / " +
                   d.ideal + ";";
        }
        std::string operator()(const ComposeDecl& d) {
            return "compose " + d.name + " = " + d.second + " * " + d.first + ";";
        }
        std::string operator()(const DiagramDecl& d) {
            std::string s = "diagram " + d.name + " = ";
            s += d.is_square ? "square(" : "triangle(";
            for (std::size_t i = 0; i < d.arrows.size(); ++i) {
                if (i) s += ", ";
                s += d.arrows[i];
            }
            s += ") ";
            s += d.orientation == Orientation::Clockwise ? "clockwise" : "anticlockwise";
            return s + ";";
        }
        std::string operator()(const ComputeQuery& q) {
            std::string s = "compute " + q.invariant;
            for (const auto& a : q.args) s += " " + a;
            return s + ";";
        }
        std::string operator()(const CheckQuery& q) {
            std::string s = "check " + q.predicate;
            for (const auto& a : q.args) s += " " + a;
            return s + ";";
        }
        std::string operator()(const SetOption& d) {
            std::string s = "set " + d.option;
            if (d.subject) s += " " + *d.subject;
            return s + " " + std::to_string(d.value) + ";";
        }
    };
    return std::visit(Printer{}, stmt);
}

inline std::string print_session(const SessionAst& ast) {
    std::string out;
    for (const auto& s : ast.statements) {
        out += print_statement(s);
        out += "\n";
    }
    return out;
}

}  // namespace locreg
