#include "kstab/dsl.hpp"

#include <cctype>
#include <memory>
#include <optional>
#include <set>

#include "kstab/errors.hpp"

namespace kstab {

namespace {

// ---- tokens ---------------------------------------------------------------

enum class Tok {
    Integer, Ident,
    Plus, Minus, Star, Slash, Caret,
    LParen, RParen, LBracket, RBracket,
    Comma, Equals, Semicolon, End
};

struct Token {
    Tok kind = Tok::End;
    std::string text;
    int line = 1, col = 1;
};

[[noreturn]] void fail(const std::string& msg, int line, int col) {
    throw ParseError(msg, line, col);
}

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t by) {
        for (std::size_t j = 0; j < by; ++j, ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < text.size()) {
        char c = text[i];
        if (c == '#') { // comment to end of line
            while (i < text.size() && text[i] != '\n') advance(1);
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        Token t;
        t.line = line;
        t.col = col;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
                ++j;
            if (j < text.size() && text[j] == '.')
                fail("decimal literal '" +
                         text.substr(i, j + 2 <= text.size() ? j - i + 2 : j - i + 1) +
                         "...' not allowed in exact input; write a fraction p/q",
                     line, col);
            t.kind = Tok::Integer;
            t.text = text.substr(i, j - i);
            advance(j - i);
            out.push_back(std::move(t));
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
                ++j;
            t.kind = Tok::Ident;
            t.text = text.substr(i, j - i);
            advance(j - i);
            out.push_back(std::move(t));
            continue;
        }
        switch (c) {
            case '+': t.kind = Tok::Plus; break;
            case '-': t.kind = Tok::Minus; break;
            case '*': t.kind = Tok::Star; break;
            case '/': t.kind = Tok::Slash; break;
            case '^': t.kind = Tok::Caret; break;
            case '(': t.kind = Tok::LParen; break;
            case ')': t.kind = Tok::RParen; break;
            case '[': t.kind = Tok::LBracket; break;
            case ']': t.kind = Tok::RBracket; break;
            case ',': t.kind = Tok::Comma; break;
            case '=': t.kind = Tok::Equals; break;
            case ';': t.kind = Tok::Semicolon; break;
            case '.':
                fail("decimal literal not allowed in exact input; write a "
                     "fraction p/q",
                     line, col);
            default:
                fail(std::string("unexpected character '") + c + "'", line, col);
        }
        t.text = std::string(1, c);
        advance(1);
        out.push_back(std::move(t));
    }
    Token end;
    end.kind = Tok::End;
    end.line = line;
    end.col = col;
    out.push_back(end);
    return out;
}

// ---- syntax tree ----------------------------------------------------------

struct Node;
using NodePtr = std::unique_ptr<Node>;

struct Node {
    enum Kind { Const, Var, Basis, Pow, Mul, Add, Sub, Neg } kind = Const;
    Rational value;           // Const
    std::string name;         // Var
    std::vector<int> indices; // Basis
    int exponent = 0;         // Pow (base in a)
    NodePtr a, b;
    int line = 1, col = 1;
};

// ---- parser ---------------------------------------------------------------

class Parser {
  public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    NodePtr expression() {
        NodePtr node;
        const Token& lead = peek();
        if (lead.kind == Tok::Plus || lead.kind == Tok::Minus) {
            get();
            node = term();
            if (lead.kind == Tok::Minus) {
                NodePtr neg = make(Node::Neg, lead);
                neg->a = std::move(node);
                node = std::move(neg);
            }
        } else {
            node = term();
        }
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            Token op = get();
            NodePtr rhs = term();
            NodePtr bin = make(op.kind == Tok::Plus ? Node::Add : Node::Sub, op);
            bin->a = std::move(node);
            bin->b = std::move(rhs);
            node = std::move(bin);
        }
        return node;
    }

    std::vector<std::pair<std::string, NodePtr>> document() {
        std::vector<std::pair<std::string, NodePtr>> out;
        while (peek().kind != Tok::End) {
            Token name = expect(Tok::Ident, "a name");
            expect(Tok::Equals, "'='");
            NodePtr e = expression();
            expect(Tok::Semicolon, "';'");
            out.emplace_back(name.text, std::move(e));
        }
        if (out.empty())
            fail("empty document: expected at least one 'name = expression;'",
                 peek().line, peek().col);
        return out;
    }

    void expect_end() {
        const Token& t = peek();
        if (t.kind != Tok::End)
            fail("unexpected input after expression: '" + describe(t) + "'",
                 t.line, t.col);
    }

  private:
    NodePtr term() {
        NodePtr node = factor();
        while (peek().kind == Tok::Star) {
            Token op = get();
            NodePtr rhs = factor();
            NodePtr bin = make(Node::Mul, op);
            bin->a = std::move(node);
            bin->b = std::move(rhs);
            node = std::move(bin);
        }
        return node;
    }

    NodePtr factor() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::Integer: {
                Token num = get();
                NodePtr node = make(Node::Const, num);
                if (peek().kind == Tok::Slash) {
                    get();
                    Token den = expect(Tok::Integer, "a denominator");
                    if (Rational::parse(den.text).is_zero())
                        fail("zero denominator", den.line, den.col);
                    node->value = Rational::parse(num.text + "/" + den.text);
                } else {
                    node->value = Rational::parse(num.text);
                }
                return node;
            }
            case Tok::Ident: {
                Token id = get();
                if (id.text == "e" && peek().kind == Tok::LBracket)
                    return basis(id);
                NodePtr node = make(Node::Var, id);
                node->name = id.text;
                if (peek().kind == Tok::Caret) {
                    get();
                    Token exp = expect(Tok::Integer, "an integer exponent");
                    NodePtr p = make(Node::Pow, exp);
                    p->a = std::move(node);
                    p->exponent = small_int(exp);
                    return p;
                }
                return node;
            }
            case Tok::LParen: {
                get();
                NodePtr node = expression();
                expect(Tok::RParen, "')'");
                return node;
            }
            default:
                fail("expected a rational, a variable, 'e[...]', or '(': got '" +
                         describe(t) + "'",
                     t.line, t.col);
        }
    }

    NodePtr basis(const Token& id) {
        NodePtr node = make(Node::Basis, id);
        expect(Tok::LBracket, "'['");
        for (;;) {
            Token idx = expect(Tok::Integer, "a coordinate index");
            int v = small_int(idx);
            if (v < 1) fail("coordinate indices are 1-based", idx.line, idx.col);
            node->indices.push_back(v);
            if (peek().kind == Tok::Comma) {
                get();
                continue;
            }
            break;
        }
        expect(Tok::RBracket, "']'");
        return node;
    }

    static NodePtr make(Node::Kind k, const Token& t) {
        NodePtr n = std::make_unique<Node>();
        n->kind = k;
        n->line = t.line;
        n->col = t.col;
        return n;
    }

    int small_int(const Token& t) {
        try {
            std::size_t used = 0;
            int v = std::stoi(t.text, &used);
            if (used != t.text.size()) throw std::invalid_argument("trail");
            return v;
        } catch (const std::exception&) {
            fail("integer '" + t.text + "' out of range", t.line, t.col);
        }
    }

    const Token& peek() const { return toks_[pos_]; }
    Token get() { return toks_[pos_++]; }

    Token expect(Tok kind, const std::string& what) {
        const Token& t = peek();
        if (t.kind != kind)
            fail("expected " + what + ", got '" + describe(t) + "'", t.line, t.col);
        return get();
    }

    static std::string describe(const Token& t) {
        if (t.kind == Tok::End) return "end of input";
        return t.text;
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

// ---- evaluation -----------------------------------------------------------

struct EvalContext {
    int n = 0;
    bool fibered = false;
    FiberedSpace fs;
};

// Global coordinate index of a variable name, or 0 when unknown.
int resolve_variable(const std::string& name, const EvalContext& ctx,
                     std::string* why) {
    auto suffix_index = [](const std::string& s) -> int {
        if (s.size() < 2) return 0;
        for (std::size_t i = 1; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return 0;
        try {
            return std::stoi(s.substr(1));
        } catch (const std::exception&) {
            return 0;
        }
    };
    if (ctx.fibered) {
        int idx = suffix_index(name);
        if (name[0] == 'x' && idx >= 1) {
            if (idx > ctx.fs.d) {
                *why = "base variable " + name + " exceeds the base dimension " +
                       std::to_string(ctx.fs.d);
                return 0;
            }
            return idx;
        }
        if (name[0] == 'y' && idx >= 1) {
            if (idx > ctx.fs.rf) {
                *why = "fiber variable " + name + " exceeds the fiber rank " +
                       std::to_string(ctx.fs.rf);
                return 0;
            }
            return ctx.fs.d + idx;
        }
        if (name == "x" || name == "y" || name == "z") {
            *why = "fibered inputs use x1..xd and y1..yrf, not the aliases x,y,z";
            return 0;
        }
        *why = "unknown variable '" + name + "'";
        return 0;
    }
    if (name == "x" || name == "y" || name == "z") {
        if (ctx.n > 3) {
            *why = "alias '" + name + "' is only available in dimension <= 3; use x1..x" +
                   std::to_string(ctx.n);
            return 0;
        }
        int idx = name == "x" ? 1 : name == "y" ? 2 : 3;
        if (idx > ctx.n) {
            *why = "variable '" + name + "' needs dimension >= " + std::to_string(idx) +
                   ", but the dimension is " + std::to_string(ctx.n);
            return 0;
        }
        return idx;
    }
    if (name[0] == 'x') {
        int idx = suffix_index(name);
        if (idx >= 1) {
            if (idx > ctx.n) {
                *why = "variable " + name + " exceeds the dimension " +
                       std::to_string(ctx.n);
                return 0;
            }
            return idx;
        }
    }
    *why = "unknown variable '" + name + "'";
    return 0;
}

// Smallest dimension covering the variables and wedge indices of the tree.
void infer_requirements(const Node& node, int* min_n, bool* uses_alias) {
    switch (node.kind) {
        case Node::Var: {
            const std::string& s = node.name;
            if (s == "x") { *min_n = std::max(*min_n, 1); *uses_alias = true; }
            else if (s == "y") { *min_n = std::max(*min_n, 2); *uses_alias = true; }
            else if (s == "z") { *min_n = std::max(*min_n, 3); *uses_alias = true; }
            else if (s[0] == 'x' && s.size() > 1) {
                bool digits = true;
                for (std::size_t i = 1; i < s.size(); ++i)
                    if (!std::isdigit(static_cast<unsigned char>(s[i]))) digits = false;
                if (digits) {
                    try {
                        *min_n = std::max(*min_n, std::stoi(s.substr(1)));
                    } catch (const std::exception&) {
                        fail("variable index in '" + s + "' out of range", node.line,
                             node.col);
                    }
                }
            }
            break;
        }
        case Node::Basis:
            for (int idx : node.indices) *min_n = std::max(*min_n, idx);
            // A rank-r wedge needs at least r coordinates (repeats vanish
            // but stay well-formed).
            *min_n = std::max(*min_n, static_cast<int>(node.indices.size()));
            break;
        default:
            break;
    }
    if (node.a) infer_requirements(*node.a, min_n, uses_alias);
    if (node.b) infer_requirements(*node.b, min_n, uses_alias);
}

MultiVector evaluate(const Node& node, const EvalContext& ctx) {
    const int n = ctx.n;
    switch (node.kind) {
        case Node::Const:
            return MultiVector::function(Polynomial::constant(n, node.value));
        case Node::Var: {
            std::string why;
            int idx = resolve_variable(node.name, ctx, &why);
            if (idx == 0) fail(why, node.line, node.col);
            return MultiVector::function(Polynomial::variable(n, idx));
        }
        case Node::Basis: {
            for (int idx : node.indices)
                if (idx > n)
                    fail("wedge index " + std::to_string(idx) +
                             " exceeds the dimension " + std::to_string(n),
                         node.line, node.col);
            if (static_cast<int>(node.indices.size()) > n)
                fail("wedge rank " + std::to_string(node.indices.size()) +
                         " exceeds the dimension " + std::to_string(n),
                     node.line, node.col);
            MultiVector m(n, static_cast<int>(node.indices.size()));
            m.add_term(node.indices, Polynomial::constant(n, Rational(1)));
            return m;
        }
        case Node::Pow: {
            MultiVector base = evaluate(*node.a, ctx);
            if (base.degree() != 0)
                fail("'^' applies to scalar factors only", node.line, node.col);
            if (node.exponent < 0)
                fail("negative exponents are not supported", node.line, node.col);
            if (node.exponent > 512)
                fail("exponent " + std::to_string(node.exponent) + " too large",
                     node.line, node.col);
            MultiVector acc =
                MultiVector::function(Polynomial::constant(n, Rational(1)));
            for (int i = 0; i < node.exponent; ++i) acc = wedge(acc, base);
            return acc;
        }
        case Node::Neg:
            return evaluate(*node.a, ctx).scaled(Rational(-1));
        case Node::Mul:
            return wedge(evaluate(*node.a, ctx), evaluate(*node.b, ctx));
        case Node::Add:
        case Node::Sub: {
            MultiVector lhs = evaluate(*node.a, ctx);
            MultiVector rhs = evaluate(*node.b, ctx);
            if (node.kind == Node::Sub) rhs = rhs.scaled(Rational(-1));
            if (lhs.degree() != rhs.degree()) {
                if (lhs.is_zero()) return rhs;
                if (rhs.is_zero()) return lhs;
                fail("cannot add multivectors of different ranks (" +
                         std::to_string(lhs.degree()) + " and " +
                         std::to_string(rhs.degree()) + ")",
                     node.line, node.col);
            }
            return lhs + rhs;
        }
    }
    fail("internal parser error", node.line, node.col); // unreachable
}

EvalContext plain_context(const Node& root, int n) {
    int min_n = 1;
    bool alias = false;
    infer_requirements(root, &min_n, &alias);
    EvalContext ctx;
    ctx.n = n > 0 ? n : min_n;
    if (n > 0 && min_n > n)
        throw InvalidInput("expression needs dimension >= " + std::to_string(min_n) +
                           ", but dimension " + std::to_string(n) + " was given");
    return ctx;
}

} // namespace

// ---- public entry points --------------------------------------------------

MultiVector parse_mvf(const std::string& text, int n) {
    if (n < 0) throw InvalidInput("dimension must be positive");
    Parser p(tokenize(text));
    NodePtr root = p.expression();
    p.expect_end();
    return evaluate(*root, plain_context(*root, n));
}

MultiVector parse_mvf_fibered(const std::string& text, const FiberedSpace& fs) {
    if (fs.d < 1 || fs.rf < 1)
        throw InvalidInput("fibered space needs base dimension >= 1 and fiber "
                           "rank >= 1");
    Parser p(tokenize(text));
    NodePtr root = p.expression();
    p.expect_end();
    EvalContext ctx;
    ctx.n = fs.n();
    ctx.fibered = true;
    ctx.fs = fs;
    return evaluate(*root, ctx);
}

NamedMultiVectors parse_document_dsl(const std::string& text, int n) {
    if (n < 0) throw InvalidInput("dimension must be positive");
    Parser p(tokenize(text));
    auto assigns = p.document();
    int min_n = 1;
    bool alias = false;
    for (const auto& [name, node] : assigns)
        infer_requirements(*node, &min_n, &alias);
    NamedMultiVectors out;
    out.n = n > 0 ? n : min_n;
    if (n > 0 && min_n > n)
        throw InvalidInput("document needs dimension >= " + std::to_string(min_n) +
                           ", but dimension " + std::to_string(n) + " was given");
    EvalContext ctx;
    ctx.n = out.n;
    std::set<std::string> seen;
    for (const auto& [name, node] : assigns) {
        if (!seen.insert(name).second)
            fail("duplicate name '" + name + "'", node->line, node->col);
        out.entries.emplace_back(name, evaluate(*node, ctx));
    }
    return out;
}

} // namespace kstab
