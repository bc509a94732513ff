#include "sprd/expr.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <optional>
#include <utility>

#include "sprd/errors.hpp"

namespace sprd::expr {

struct Expr::Node {
    Kind kind;
    double value = 0.0;
    Function function = Function::Exp;
    std::vector<Expr> children;
};

namespace {

constexpr std::array<std::pair<std::string_view, Function>, 7> kFunctions{{
    {"exp", Function::Exp},
    {"ln", Function::Ln},
    {"sin", Function::Sin},
    {"cos", Function::Cos},
    {"sqrt", Function::Sqrt},
    {"abs", Function::Abs},
    {"pow", Function::Pow},
}};

std::optional<Function> lookup_function(std::string_view name) {
    for (const auto& [n, f] : kFunctions) {
        if (n == name) return f;
    }
    return std::nullopt;
}

// Deeper nesting than this is rejected rather than risking the stack.
constexpr int kMaxDepth = 512;

class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) {}

    Expr parse_all() {
        Expr e = parse_sum();
        skip_ws();
        if (pos_ != src_.size()) fail("expected operator or end of input");
        return e;
    }

private:
    std::string_view src_;
    std::size_t pos_ = 0;
    int depth_ = 0;

    struct DepthGuard {
        Parser& p;
        explicit DepthGuard(Parser& parser) : p(parser) {
            if (++p.depth_ > kMaxDepth) p.fail("expression nested too deeply");
        }
        ~DepthGuard() { --p.depth_; }
    };

    [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(pos_, what); }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    void expect(char c, const char* what) {
        if (peek() != c) fail(what);
        ++pos_;
    }

    Expr parse_sum() {
        DepthGuard guard(*this);
        Expr lhs = parse_product();
        for (;;) {
            char c = peek();
            if (c != '+' && c != '-') return lhs;
            ++pos_;
            Expr rhs = parse_product();
            lhs = Expr::binary(c == '+' ? Kind::Add : Kind::Sub, std::move(lhs), std::move(rhs));
        }
    }

    Expr parse_product() {
        Expr lhs = parse_unary();
        for (;;) {
            char c = peek();
            if (c != '*' && c != '/') return lhs;
            ++pos_;
            Expr rhs = parse_unary();
            lhs = Expr::binary(c == '*' ? Kind::Mul : Kind::Div, std::move(lhs), std::move(rhs));
        }
    }

    Expr parse_unary() {
        DepthGuard guard(*this);
        if (peek() == '-') {
            ++pos_;
            return Expr::neg(parse_unary());
        }
        return parse_power();
    }

    // power := primary ('^' unary)? ; recursion through unary makes ^ right-assoc.
    Expr parse_power() {
        Expr base = parse_primary();
        if (peek() == '^') {
            ++pos_;
            Expr exponent = parse_unary();
            return Expr::binary(Kind::Pow, std::move(base), std::move(exponent));
        }
        return base;
    }

    Expr parse_primary() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Expr inner = parse_sum();
            expect(')', "expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_identifier();
        if (c == '\0') fail("expected operand, found end of input");
        fail(std::string("expected operand, found '") + c + "'");
    }

    Expr parse_number() {
        const std::size_t start = pos_;
        auto digits = [&] {
            std::size_t n = 0;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                ++pos_;
                ++n;
            }
            return n;
        };
        std::size_t mantissa = digits();
        if (pos_ < src_.size() && src_[pos_] == '.') {
            ++pos_;
            mantissa += digits();
        }
        if (mantissa == 0) {
            pos_ = start;
            fail("expected digits in number");
        }
        if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
            std::size_t save = pos_;
            ++pos_;
            if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) ++pos_;
            if (digits() == 0) pos_ = save;  // "2e" alone: leave 'e' for the identifier check
        }
        double value = 0.0;
        auto [ptr, ec] = std::from_chars(src_.data() + start, src_.data() + pos_, value);
        if (ec != std::errc() || ptr != src_.data() + pos_ || !std::isfinite(value)) {
            pos_ = start;
            fail("numeric literal out of range");
        }
        if (pos_ < src_.size() &&
            (std::isalpha(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '(')) {
            fail("implicit multiplication is not allowed; use '*'");
        }
        return Expr::literal(value);
    }

    Expr parse_identifier() {
        const std::size_t start = pos_;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
            ++pos_;
        }
        std::string_view name = src_.substr(start, pos_ - start);
        if (name == "x") return Expr::var_x();
        if (name == "t") return Expr::var_t();
        auto f = lookup_function(name);
        if (!f) throw UnknownIdentifierError(start, std::string(name));
        expect('(', "expected '(' after function name");
        std::vector<Expr> args;
        args.push_back(parse_sum());
        while (peek() == ',') {
            ++pos_;
            args.push_back(parse_sum());
        }
        if (static_cast<int>(args.size()) != arity(*f)) {
            fail(std::string(name) + " takes " + std::to_string(arity(*f)) + " argument(s)");
        }
        expect(')', "expected ')' to close argument list");
        return Expr::call(*f, std::move(args));
    }
};

int precedence(const Expr& e) {
    switch (e.kind()) {
        case Kind::Add:
        case Kind::Sub: return 1;
        case Kind::Mul:
        case Kind::Div: return 2;
        case Kind::Neg: return 3;
        case Kind::Pow: return 4;
        default: return 5;
    }
}

void unparse_into(const Expr& e, std::string& out);

void unparse_child(const Expr& child, bool parens, std::string& out) {
    if (parens) out += '(';
    unparse_into(child, out);
    if (parens) out += ')';
}

void unparse_into(const Expr& e, std::string& out) {
    const auto& ch = e.children();
    switch (e.kind()) {
        case Kind::Literal: {
            std::array<char, 32> buf{};
            auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), e.value());
            out.append(buf.data(), ptr);
            return;
        }
        case Kind::VarX: out += 'x'; return;
        case Kind::VarT: out += 't'; return;
        case Kind::Neg:
            out += '-';
            unparse_child(ch[0], precedence(ch[0]) < 3, out);
            return;
        case Kind::Pow:
            unparse_child(ch[0], precedence(ch[0]) <= 4, out);
            out += '^';
            unparse_child(ch[1], precedence(ch[1]) < 3, out);
            return;
        case Kind::Add:
        case Kind::Sub:
        case Kind::Mul:
        case Kind::Div: {
            const int p = precedence(e);
            unparse_child(ch[0], precedence(ch[0]) < p, out);
            out += e.kind() == Kind::Add   ? '+'
                   : e.kind() == Kind::Sub ? '-'
                   : e.kind() == Kind::Mul ? '*'
                                           : '/';
            unparse_child(ch[1], precedence(ch[1]) <= p, out);
            return;
        }
        case Kind::Call:
            out += function_name(e.function());
            out += '(';
            for (std::size_t i = 0; i < ch.size(); ++i) {
                if (i) out += ',';
                unparse_into(ch[i], out);
            }
            out += ')';
            return;
    }
}

double checked(double v, const char* what) {
    if (!std::isfinite(v)) throw EvalError(std::string("non-finite result from ") + what);
    return v;
}

}  // namespace

int arity(Function f) { return f == Function::Pow ? 2 : 1; }

std::string_view function_name(Function f) {
    for (const auto& [n, fn] : kFunctions) {
        if (fn == f) return n;
    }
    return "?";
}

Expr Expr::literal(double value) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Literal;
    n->value = value;
    return Expr(std::move(n));
}

Expr Expr::var_x() {
    static const Expr x(std::make_shared<const Node>(Node{Kind::VarX, 0.0, Function::Exp, {}}));
    return x;
}

Expr Expr::var_t() {
    static const Expr t(std::make_shared<const Node>(Node{Kind::VarT, 0.0, Function::Exp, {}}));
    return t;
}

Expr Expr::neg(Expr operand) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Neg;
    n->children.push_back(std::move(operand));
    return Expr(std::move(n));
}

Expr Expr::binary(Kind op, Expr lhs, Expr rhs) {
    if (op != Kind::Add && op != Kind::Sub && op != Kind::Mul && op != Kind::Div &&
        op != Kind::Pow) {
        throw ArgumentError("Expr::binary: not a binary operator");
    }
    auto n = std::make_shared<Node>();
    n->kind = op;
    n->children.push_back(std::move(lhs));
    n->children.push_back(std::move(rhs));
    return Expr(std::move(n));
}

Expr Expr::call(Function f, std::vector<Expr> args) {
    if (static_cast<int>(args.size()) != arity(f)) {
        throw ArgumentError("Expr::call: wrong argument count for " + std::string(function_name(f)));
    }
    auto n = std::make_shared<Node>();
    n->kind = Kind::Call;
    n->function = f;
    n->children = std::move(args);
    return Expr(std::move(n));
}

Kind Expr::kind() const { return node_->kind; }
double Expr::value() const { return node_->value; }
Function Expr::function() const { return node_->function; }
const std::vector<Expr>& Expr::children() const { return node_->children; }

bool operator==(const Expr& a, const Expr& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind()) return false;
    if (a.kind() == Kind::Literal) return a.value() == b.value();
    if (a.kind() == Kind::Call && a.function() != b.function()) return false;
    const auto& ca = a.children();
    const auto& cb = b.children();
    if (ca.size() != cb.size()) return false;
    for (std::size_t i = 0; i < ca.size(); ++i) {
        if (!(ca[i] == cb[i])) return false;
    }
    return true;
}

Expr parse(std::string_view source) { return Parser(source).parse_all(); }

std::string unparse(const Expr& e) {
    std::string out;
    unparse_into(e, out);
    return out;
}

double eval(const Expr& e, double x, double t) {
    const auto& ch = e.children();
    switch (e.kind()) {
        case Kind::Literal: return e.value();
        case Kind::VarX: return x;
        case Kind::VarT: return t;
        case Kind::Neg: return -eval(ch[0], x, t);
        case Kind::Add: return checked(eval(ch[0], x, t) + eval(ch[1], x, t), "'+'");
        case Kind::Sub: return checked(eval(ch[0], x, t) - eval(ch[1], x, t), "'-'");
        case Kind::Mul: return checked(eval(ch[0], x, t) * eval(ch[1], x, t), "'*'");
        case Kind::Div: {
            const double num = eval(ch[0], x, t);
            const double den = eval(ch[1], x, t);
            if (den == 0.0) throw EvalError("division by zero");
            return checked(num / den, "'/'");
        }
        case Kind::Pow: return checked(std::pow(eval(ch[0], x, t), eval(ch[1], x, t)), "'^'");
        case Kind::Call: {
            const double a = eval(ch[0], x, t);
            switch (e.function()) {
                case Function::Exp: return checked(std::exp(a), "exp");
                case Function::Ln:
                    if (a <= 0.0) throw EvalError("ln of non-positive value");
                    return std::log(a);
                case Function::Sin: return std::sin(a);
                case Function::Cos: return std::cos(a);
                case Function::Sqrt:
                    if (a < 0.0) throw EvalError("sqrt of negative value");
                    return std::sqrt(a);
                case Function::Abs: return std::fabs(a);
                case Function::Pow: return checked(std::pow(a, eval(ch[1], x, t)), "pow");
            }
        }
    }
    throw EvalError("malformed expression node");
}

}  // namespace sprd::expr
