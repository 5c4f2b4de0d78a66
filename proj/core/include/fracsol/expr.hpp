#ifndef FRACSOL_EXPR_HPP
#define FRACSOL_EXPR_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "fracsol/rational.hpp"

namespace fracsol {

enum class ExprKind { Constant, Variable, Add, Mul, Pow, Exp, Neg };

namespace detail {
struct ExprNode;
using NodePtr = std::shared_ptr<const ExprNode>;
} // namespace detail

/// Immutable expression tree over one spatial variable `x` and real constants.
/// Nodes are hash-consed: structurally equal trees share one node, so
/// operator== is exact structural equality and repeated subtrees cost nothing.
/// All operations are pure; values are safe to share across threads.
class Expr {
public:
    Expr() : Expr(constant(0.0)) {}

    static Expr constant(double value);
    static Expr variable();
    static Expr add(std::vector<Expr> children);
    static Expr mul(std::vector<Expr> children);
    static Expr pow(Expr base, Rational exponent);
    static Expr exp_of(Expr argument);
    static Expr neg(Expr argument);

    friend Expr operator+(const Expr& a, const Expr& b) { return add({a, b}); }
    friend Expr operator-(const Expr& a, const Expr& b) { return add({a, neg(b)}); }
    friend Expr operator*(const Expr& a, const Expr& b) { return mul({a, b}); }
    friend Expr operator-(const Expr& a) { return neg(a); }

    ExprKind kind() const;
    double constant_value() const;   // Constant nodes only
    Rational exponent() const;       // Pow nodes only
    std::size_t child_count() const;
    Expr child(std::size_t i) const;

    bool is_constant(double value) const;

    /// Structural equality (exact, via hash-consing).
    friend bool operator==(const Expr& a, const Expr& b) { return a.node_ == b.node_; }
    friend bool operator!=(const Expr& a, const Expr& b) { return !(a == b); }

    /// Value at x. Throws DomainError on poles and invalid powers, naming the
    /// offending subexpression. Deterministic: same tree, same x, same bits.
    double evaluate(double x) const;

    /// order-fold spatial derivative; order 0 returns the expression itself.
    Expr differentiate(int order = 1) const;

    /// Constant folding, 0/1 identity elimination, flattening of nested
    /// Add/Mul, like-term and like-factor collection. Value-preserving away
    /// from removable singularities.
    Expr simplify_basic() const;

    /// Infix text that parse() accepts back with identical values.
    std::string str() const;

    const detail::NodePtr& node() const { return node_; }

private:
    explicit Expr(detail::NodePtr node) : node_(std::move(node)) {}
    detail::NodePtr node_;
};

/// Parse infix expression text over the grammar documented in the README
/// (operators + - * / ^, function exp, variable x, decimal literals, rational
/// exponents). Throws SyntaxError with a byte offset, or UnknownSymbol.
Expr parse(const std::string& text);

/// n deterministic sample points: midpoints of n uniform cells of [lo, hi].
std::vector<double> sample_points(double lo, double hi, int n = 20);

/// Numerical agreement on the deterministic sample grid:
/// |a - b| <= tol * (1 + max(|a|, |b|)) at every point.
bool numerically_equal(const Expr& a, const Expr& b, double lo, double hi,
                       double tol = 1e-10, int n = 20);

/// True when |e| <= threshold at every sample point (evaluation failures
/// count as "not negligible").
bool is_negligible(const Expr& e, double lo, double hi,
                   double threshold = 1e-12, int n = 20);

} // namespace fracsol

#endif
