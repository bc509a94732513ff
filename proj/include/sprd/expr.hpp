#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace sprd::expr {

enum class Kind { Literal, VarX, VarT, Neg, Add, Sub, Mul, Div, Pow, Call };

enum class Function { Exp, Ln, Sin, Cos, Sqrt, Abs, Pow };

/// Number of arguments a function call takes.
int arity(Function f);
std::string_view function_name(Function f);

/// Immutable expression tree over x, t, literals, + - * / ^, unary minus and
/// the calls exp, ln, sin, cos, sqrt, abs, pow. Copies share nodes.
class Expr {
public:
    static Expr literal(double value);
    static Expr var_x();
    static Expr var_t();
    static Expr neg(Expr operand);
    static Expr binary(Kind op, Expr lhs, Expr rhs);
    static Expr call(Function f, std::vector<Expr> args);

    Kind kind() const;
    double value() const;              ///< Literal only
    Function function() const;         ///< Call only
    const std::vector<Expr>& children() const;

    /// Structural equality; literals compare by value.
    friend bool operator==(const Expr& a, const Expr& b);

private:
    struct Node;
    explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/// Parses `source`. `^` is right-associative and binds tighter than unary
/// minus; whitespace is ignored; implicit multiplication is rejected.
/// Throws SyntaxError or UnknownIdentifierError.
Expr parse(std::string_view source);

/// Minimal-parenthesis source form; parse(unparse(e)) == e.
std::string unparse(const Expr& e);

/// Evaluates with IEEE double arithmetic. Throws EvalError for ln of a
/// non-positive value, division by zero, or any other non-finite result.
double eval(const Expr& e, double x, double t);

}  // namespace sprd::expr
