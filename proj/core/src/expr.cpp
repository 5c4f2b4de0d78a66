#include "fracsol/expr.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <mutex>
#include <optional>
#include <unordered_map>

#include "fracsol/errors.hpp"

namespace fracsol {
namespace detail {

struct ExprNode {
    ExprKind kind;
    double constant = 0.0;
    Rational exponent;
    std::vector<NodePtr> children;
    std::size_t hash = 0;
    std::uint64_t id = 0; // creation order; stable within a process run
};

namespace {

std::size_t hash_combine(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t node_hash(ExprKind kind, double constant, const Rational& exponent,
                      const std::vector<NodePtr>& children) {
    if (constant == 0.0) constant = 0.0; // collapse -0.0
    std::uint64_t cbits;
    std::memcpy(&cbits, &constant, sizeof cbits);
    std::size_t h = hash_combine(static_cast<std::size_t>(kind) * 0x9e3779b9, cbits);
    h = hash_combine(h, static_cast<std::size_t>(exponent.num()));
    h = hash_combine(h, static_cast<std::size_t>(exponent.den()));
    for (const auto& c : children) h = hash_combine(h, c->id);
    return h;
}

bool node_equal(const ExprNode& n, ExprKind kind, double constant,
                const Rational& exponent, const std::vector<NodePtr>& children) {
    if (n.kind != kind || n.exponent != exponent) return false;
    double a = n.constant == 0.0 ? 0.0 : n.constant;
    double b = constant == 0.0 ? 0.0 : constant;
    if (std::memcmp(&a, &b, sizeof a) != 0) return false;
    if (n.children.size() != children.size()) return false;
    for (std::size_t i = 0; i < children.size(); ++i)
        if (n.children[i].get() != children[i].get()) return false;
    return true;
}

// Process-wide hash-cons table plus memo caches for derivative/simplify.
struct Interner {
    std::mutex mu;
    std::unordered_multimap<std::size_t, NodePtr> table;
    std::unordered_map<const ExprNode*, NodePtr> diff_cache; // simplified d/dx
    std::unordered_map<const ExprNode*, NodePtr> simp_cache;
    std::uint64_t next_id = 1;

    static Interner& instance() {
        static Interner self;
        return self;
    }
};

NodePtr make_node(ExprKind kind, double constant, Rational exponent,
                  std::vector<NodePtr> children) {
    if (constant == 0.0) constant = 0.0;
    auto& in = Interner::instance();
    const std::size_t h = node_hash(kind, constant, exponent, children);
    std::lock_guard<std::mutex> lock(in.mu);
    auto [lo, hi] = in.table.equal_range(h);
    for (auto it = lo; it != hi; ++it)
        if (node_equal(*it->second, kind, constant, exponent, children)) return it->second;
    auto node = std::make_shared<ExprNode>();
    node->kind = kind;
    node->constant = constant;
    node->exponent = exponent;
    node->children = std::move(children);
    node->hash = h;
    node->id = in.next_id++;
    in.table.emplace(h, node);
    return node;
}

NodePtr mk_constant(double v) { return make_node(ExprKind::Constant, v, Rational(0), {}); }
NodePtr mk_variable() { return make_node(ExprKind::Variable, 0.0, Rational(0), {}); }
NodePtr mk_add(std::vector<NodePtr> cs) {
    if (cs.empty()) return mk_constant(0.0);
    if (cs.size() == 1) return cs[0];
    return make_node(ExprKind::Add, 0.0, Rational(0), std::move(cs));
}
NodePtr mk_mul(std::vector<NodePtr> cs) {
    if (cs.empty()) return mk_constant(1.0);
    if (cs.size() == 1) return cs[0];
    return make_node(ExprKind::Mul, 0.0, Rational(0), std::move(cs));
}
NodePtr mk_pow(NodePtr b, Rational q) {
    return make_node(ExprKind::Pow, 0.0, q, {std::move(b)});
}
NodePtr mk_exp(NodePtr u) { return make_node(ExprKind::Exp, 0.0, Rational(0), {std::move(u)}); }
NodePtr mk_neg(NodePtr u) { return make_node(ExprKind::Neg, 0.0, Rational(0), {std::move(u)}); }

std::string node_str(const ExprNode* n);

// ---------------------------------------------------------------------------
// evaluation

double pow_int(double base, std::int64_t e, const ExprNode* where) {
    if (e < 0) {
        if (base == 0.0)
            throw DomainError("zero raised to a negative power in " + node_str(where));
        return 1.0 / pow_int(base, -e, where);
    }
    double r = 1.0, b = base;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

double eval_node(const ExprNode* n, double x,
                 std::unordered_map<const ExprNode*, double>& memo) {
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    double v = 0.0;
    switch (n->kind) {
    case ExprKind::Constant: v = n->constant; break;
    case ExprKind::Variable: v = x; break;
    case ExprKind::Add:
        for (const auto& c : n->children) v += eval_node(c.get(), x, memo);
        break;
    case ExprKind::Mul:
        v = 1.0;
        for (const auto& c : n->children) v *= eval_node(c.get(), x, memo);
        break;
    case ExprKind::Pow: {
        const double b = eval_node(n->children[0].get(), x, memo);
        const Rational& q = n->exponent;
        if (q.is_integer()) {
            v = pow_int(b, q.num(), n);
        } else {
            if (b < 0.0)
                throw DomainError("negative base under a fractional power in " + node_str(n));
            if (b == 0.0 && q.value() < 0.0)
                throw DomainError("zero raised to a negative power in " + node_str(n));
            v = std::pow(b, q.value());
        }
        break;
    }
    case ExprKind::Exp: v = std::exp(eval_node(n->children[0].get(), x, memo)); break;
    case ExprKind::Neg: v = -eval_node(n->children[0].get(), x, memo); break;
    }
    memo.emplace(n, v);
    return v;
}

// ---------------------------------------------------------------------------
// simplification

NodePtr simplify_node(const NodePtr& n);

std::optional<double> checked_pow(double base, const Rational& q) {
    if (q.is_integer()) {
        if (base == 0.0 && q.num() < 0) return std::nullopt;
        double r = 1.0, b = base;
        std::int64_t e = q.num() < 0 ? -q.num() : q.num();
        while (e > 0) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        if (q.num() < 0) r = 1.0 / r;
        if (!std::isfinite(r)) return std::nullopt;
        return r;
    }
    if (base < 0.0) return std::nullopt;
    if (base == 0.0 && q.value() < 0.0) return std::nullopt;
    const double r = std::pow(base, q.value());
    if (!std::isfinite(r)) return std::nullopt;
    return r;
}

// s * u with the constant folded into u's leading constant, keeping the
// "constant first inside Mul" normal form.
NodePtr scale_node(double s, const NodePtr& u) {
    if (s == 0.0) return mk_constant(0.0);
    if (u->kind == ExprKind::Constant) return mk_constant(s * u->constant);
    if (s == 1.0) return u;
    if (u->kind == ExprKind::Mul && u->children[0]->kind == ExprKind::Constant) {
        const double c = s * u->children[0]->constant;
        std::vector<NodePtr> rest(u->children.begin() + 1, u->children.end());
        if (c == 0.0) return mk_constant(0.0);
        if (c == 1.0) return mk_mul(std::move(rest));
        std::vector<NodePtr> cs;
        cs.reserve(rest.size() + 1);
        cs.push_back(mk_constant(c));
        for (auto& r : rest) cs.push_back(std::move(r));
        return mk_mul(std::move(cs));
    }
    return mk_mul({mk_constant(s), u});
}

// (constant multiplier, remaining factor) of a simplified term
std::pair<double, NodePtr> split_scale(const NodePtr& u) {
    if (u->kind == ExprKind::Constant) return {u->constant, mk_constant(1.0)};
    if (u->kind == ExprKind::Mul && u->children[0]->kind == ExprKind::Constant) {
        std::vector<NodePtr> rest(u->children.begin() + 1, u->children.end());
        return {u->children[0]->constant, mk_mul(std::move(rest))};
    }
    return {1.0, u};
}

NodePtr simp_pow(NodePtr base, Rational q) {
    if (q.is_zero()) return mk_constant(1.0);
    if (q == Rational(1)) return base;
    if (base->kind == ExprKind::Constant) {
        if (auto v = checked_pow(base->constant, q)) return mk_constant(*v);
        return mk_pow(std::move(base), q);
    }
    if (base->kind == ExprKind::Pow && q.is_integer() && base->exponent.is_integer())
        return simp_pow(base->children[0], base->exponent * q);
    if (base->kind == ExprKind::Exp)
        return mk_exp(scale_node(q.value(), base->children[0]));
    return mk_pow(std::move(base), q);
}

NodePtr simp_add(std::vector<NodePtr> children) {
    // children are simplified; flatten, fold constants, collect like terms
    std::vector<NodePtr> flat;
    for (auto& c : children) {
        if (c->kind == ExprKind::Add)
            flat.insert(flat.end(), c->children.begin(), c->children.end());
        else
            flat.push_back(std::move(c));
    }
    double const_sum = 0.0;
    std::vector<std::pair<NodePtr, double>> groups; // (core, coefficient)
    std::unordered_map<const ExprNode*, std::size_t> index;
    for (auto& c : flat) {
        if (c->kind == ExprKind::Constant) {
            const_sum += c->constant;
            continue;
        }
        auto [coef, core] = split_scale(c);
        auto it = index.find(core.get());
        if (it == index.end()) {
            index.emplace(core.get(), groups.size());
            groups.emplace_back(core, coef);
        } else {
            groups[it->second].second += coef;
        }
    }
    std::sort(groups.begin(), groups.end(),
              [](const auto& a, const auto& b) { return a.first->id < b.first->id; });
    std::vector<NodePtr> out;
    if (const_sum != 0.0) out.push_back(mk_constant(const_sum));
    for (auto& [core, coef] : groups) {
        if (coef == 0.0) continue;
        out.push_back(scale_node(coef, core));
    }
    if (out.empty()) return mk_constant(0.0);
    return mk_add(std::move(out));
}

NodePtr simp_mul(std::vector<NodePtr> children) {
    std::vector<NodePtr> flat;
    double const_prod = 1.0;
    // flatten and strip signs / constants
    std::vector<NodePtr> stack(children.rbegin(), children.rend());
    while (!stack.empty()) {
        NodePtr c = stack.back();
        stack.pop_back();
        if (c->kind == ExprKind::Mul) {
            for (auto it = c->children.rbegin(); it != c->children.rend(); ++it)
                stack.push_back(*it);
        } else if (c->kind == ExprKind::Neg) {
            const_prod = -const_prod;
            stack.push_back(c->children[0]);
        } else if (c->kind == ExprKind::Constant) {
            const_prod *= c->constant;
        } else {
            flat.push_back(std::move(c));
        }
    }
    if (const_prod == 0.0) return mk_constant(0.0);
    // collect exponents per base
    std::vector<std::pair<NodePtr, Rational>> groups; // (base, exponent sum)
    std::unordered_map<const ExprNode*, std::size_t> index;
    auto add_factor = [&](const NodePtr& base, const Rational& q) {
        auto it = index.find(base.get());
        if (it == index.end()) {
            index.emplace(base.get(), groups.size());
            groups.emplace_back(base, q);
        } else {
            groups[it->second].second = groups[it->second].second + q;
        }
    };
    for (auto& f : flat) {
        if (f->kind == ExprKind::Pow)
            add_factor(f->children[0], f->exponent);
        else
            add_factor(f, Rational(1));
    }
    std::sort(groups.begin(), groups.end(),
              [](const auto& a, const auto& b) { return a.first->id < b.first->id; });
    std::vector<NodePtr> factors;
    for (auto& [base, q] : groups) {
        if (q.is_zero()) continue;
        NodePtr factor = simp_pow(base, q);
        if (factor->kind == ExprKind::Constant) {
            const_prod *= factor->constant; // folded, e.g. x^2 * x^-2
            continue;
        }
        factors.push_back(std::move(factor));
    }
    if (const_prod == 0.0) return mk_constant(0.0);
    std::vector<NodePtr> out;
    if (const_prod != 1.0 || factors.empty()) out.push_back(mk_constant(const_prod));
    for (auto& f : factors) out.push_back(std::move(f));
    return mk_mul(std::move(out));
}

NodePtr simplify_node(const NodePtr& n) {
    {
        auto& in = Interner::instance();
        std::lock_guard<std::mutex> lock(in.mu);
        auto it = in.simp_cache.find(n.get());
        if (it != in.simp_cache.end()) return it->second;
    }
    NodePtr r;
    switch (n->kind) {
    case ExprKind::Constant:
        r = n->constant == 0.0 ? mk_constant(0.0) : n;
        break;
    case ExprKind::Variable:
        r = n;
        break;
    case ExprKind::Add: {
        std::vector<NodePtr> cs;
        cs.reserve(n->children.size());
        for (const auto& c : n->children) cs.push_back(simplify_node(c));
        r = simp_add(std::move(cs));
        break;
    }
    case ExprKind::Mul: {
        std::vector<NodePtr> cs;
        cs.reserve(n->children.size());
        for (const auto& c : n->children) cs.push_back(simplify_node(c));
        r = simp_mul(std::move(cs));
        break;
    }
    case ExprKind::Pow:
        r = simp_pow(simplify_node(n->children[0]), n->exponent);
        break;
    case ExprKind::Exp: {
        NodePtr u = simplify_node(n->children[0]);
        if (u->kind == ExprKind::Constant) {
            const double v = std::exp(u->constant);
            r = std::isfinite(v) ? mk_constant(v) : mk_exp(std::move(u));
        } else {
            r = mk_exp(std::move(u));
        }
        break;
    }
    case ExprKind::Neg:
        r = scale_node(-1.0, simplify_node(n->children[0]));
        break;
    }
    auto& in = Interner::instance();
    std::lock_guard<std::mutex> lock(in.mu);
    in.simp_cache.emplace(n.get(), r);
    return r;
}

// ---------------------------------------------------------------------------
// differentiation (returns the simplified derivative; memoized per node)

NodePtr diff_node(const NodePtr& n) {
    {
        auto& in = Interner::instance();
        std::lock_guard<std::mutex> lock(in.mu);
        auto it = in.diff_cache.find(n.get());
        if (it != in.diff_cache.end()) return it->second;
    }
    NodePtr r;
    switch (n->kind) {
    case ExprKind::Constant: r = mk_constant(0.0); break;
    case ExprKind::Variable: r = mk_constant(1.0); break;
    case ExprKind::Add: {
        std::vector<NodePtr> cs;
        cs.reserve(n->children.size());
        for (const auto& c : n->children) cs.push_back(diff_node(c));
        r = simplify_node(mk_add(std::move(cs)));
        break;
    }
    case ExprKind::Mul: {
        std::vector<NodePtr> terms;
        for (std::size_t i = 0; i < n->children.size(); ++i) {
            std::vector<NodePtr> factors = n->children;
            factors[i] = diff_node(n->children[i]);
            terms.push_back(mk_mul(std::move(factors)));
        }
        r = simplify_node(mk_add(std::move(terms)));
        break;
    }
    case ExprKind::Pow: {
        const Rational& q = n->exponent;
        r = simplify_node(mk_mul({mk_constant(q.value()),
                                  mk_pow(n->children[0], q - Rational(1)),
                                  diff_node(n->children[0])}));
        break;
    }
    case ExprKind::Exp:
        r = simplify_node(mk_mul({mk_exp(n->children[0]), diff_node(n->children[0])}));
        break;
    case ExprKind::Neg:
        r = simplify_node(mk_neg(diff_node(n->children[0])));
        break;
    }
    auto& in = Interner::instance();
    std::lock_guard<std::mutex> lock(in.mu);
    in.diff_cache.emplace(n.get(), r);
    return r;
}

// ---------------------------------------------------------------------------
// printing

std::string format_double(double v) {
    if (v == static_cast<std::int64_t>(v) && std::abs(v) < 1e15)
        return std::to_string(static_cast<std::int64_t>(v));
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string exponent_str(const Rational& q) {
    if (q.is_integer()) return std::to_string(q.num());
    return "(" + std::to_string(q.num()) + "/" + std::to_string(q.den()) + ")";
}

bool atomic_for_mul(const ExprNode* n) {
    switch (n->kind) {
    case ExprKind::Constant: return n->constant >= 0.0;
    case ExprKind::Variable:
    case ExprKind::Exp:
    case ExprKind::Pow: return true;
    default: return false;
    }
}

std::string node_str(const ExprNode* n) {
    switch (n->kind) {
    case ExprKind::Constant: return format_double(n->constant);
    case ExprKind::Variable: return "x";
    case ExprKind::Add: {
        std::string out = "(";
        bool first = true;
        for (const auto& c : n->children) {
            std::string s = node_str(c.get());
            if (first) {
                out += s;
                first = false;
            } else if (!s.empty() && s[0] == '-') {
                out += s;
            } else {
                out += "+" + s;
            }
        }
        return out + ")";
    }
    case ExprKind::Mul: {
        std::string out;
        bool first = true;
        for (const auto& c : n->children) {
            std::string s = atomic_for_mul(c.get()) ? node_str(c.get())
                                                    : "(" + node_str(c.get()) + ")";
            out += first ? s : "*" + s;
            first = false;
        }
        return out;
    }
    case ExprKind::Pow: {
        const ExprNode* b = n->children[0].get();
        const bool atomic = (b->kind == ExprKind::Variable) ||
                            (b->kind == ExprKind::Exp) ||
                            (b->kind == ExprKind::Constant && b->constant >= 0.0 &&
                             b->constant == static_cast<std::int64_t>(b->constant));
        std::string base = atomic ? node_str(b) : "(" + node_str(b) + ")";
        return base + "^" + exponent_str(n->exponent);
    }
    case ExprKind::Exp: return "exp(" + node_str(n->children[0].get()) + ")";
    case ExprKind::Neg: {
        const ExprNode* u = n->children[0].get();
        std::string s = node_str(u);
        if (u->kind == ExprKind::Add || (!s.empty() && s[0] == '-')) return "-(" + s + ")";
        return "-" + s;
    }
    }
    return "?";
}

} // namespace
} // namespace detail

// ---------------------------------------------------------------------------
// Expr public surface

using detail::NodePtr;

Expr Expr::constant(double value) { return Expr(detail::mk_constant(value)); }
Expr Expr::variable() { return Expr(detail::mk_variable()); }

Expr Expr::add(std::vector<Expr> children) {
    std::vector<NodePtr> cs;
    cs.reserve(children.size());
    for (auto& c : children) cs.push_back(c.node());
    return Expr(detail::mk_add(std::move(cs)));
}

Expr Expr::mul(std::vector<Expr> children) {
    std::vector<NodePtr> cs;
    cs.reserve(children.size());
    for (auto& c : children) cs.push_back(c.node());
    return Expr(detail::mk_mul(std::move(cs)));
}

Expr Expr::pow(Expr base, Rational exponent) {
    return Expr(detail::mk_pow(base.node(), exponent));
}

Expr Expr::exp_of(Expr argument) { return Expr(detail::mk_exp(argument.node())); }
Expr Expr::neg(Expr argument) { return Expr(detail::mk_neg(argument.node())); }

ExprKind Expr::kind() const { return node_->kind; }
double Expr::constant_value() const { return node_->constant; }
Rational Expr::exponent() const { return node_->exponent; }
std::size_t Expr::child_count() const { return node_->children.size(); }
Expr Expr::child(std::size_t i) const { return Expr(node_->children.at(i)); }

bool Expr::is_constant(double value) const {
    return node_->kind == ExprKind::Constant && node_->constant == value;
}

double Expr::evaluate(double x) const {
    std::unordered_map<const detail::ExprNode*, double> memo;
    return detail::eval_node(node_.get(), x, memo);
}

Expr Expr::differentiate(int order) const {
    if (order < 0) throw DomainError("derivative order must be nonnegative");
    NodePtr cur = node_;
    for (int k = 0; k < order; ++k) cur = detail::diff_node(cur);
    return Expr(cur);
}

Expr Expr::simplify_basic() const { return Expr(detail::simplify_node(node_)); }

std::string Expr::str() const { return detail::node_str(node_.get()); }

// ---------------------------------------------------------------------------
// parser

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    Expr run() {
        Expr e = parse_expr();
        skip_ws();
        if (pos_ != s_.size()) throw SyntaxError("unexpected trailing input", pos_);
        return e;
    }

private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    Expr parse_expr() {
        std::vector<Expr> terms;
        bool lead_neg = eat('-');
        Expr first = parse_term();
        terms.push_back(lead_neg ? Expr::neg(first) : first);
        for (;;) {
            if (eat('+'))
                terms.push_back(parse_term());
            else if (eat('-'))
                terms.push_back(Expr::neg(parse_term()));
            else
                break;
        }
        return Expr::add(std::move(terms));
    }

    Expr parse_term() {
        std::vector<Expr> factors;
        factors.push_back(parse_factor());
        for (;;) {
            if (eat('*'))
                factors.push_back(parse_factor());
            else if (eat('/'))
                factors.push_back(Expr::pow(parse_factor(), Rational(-1)));
            else
                break;
        }
        return Expr::mul(std::move(factors));
    }

    Expr parse_factor() {
        Expr base = parse_base();
        if (eat('^')) return Expr::pow(base, parse_exponent());
        return base;
    }

    Rational parse_exponent() {
        skip_ws();
        if (eat('(')) {
            bool neg = eat('-');
            std::int64_t num = parse_integer();
            std::int64_t den = 1;
            if (eat('/')) den = parse_integer();
            if (!eat(')')) throw SyntaxError("expected ')' in rational exponent", pos_);
            return Rational(neg ? -num : num, den);
        }
        bool neg = eat('-');
        Rational r = parse_number_rational();
        return neg ? -r : r;
    }

    std::int64_t parse_integer() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) throw SyntaxError("expected an integer", start);
        return std::stoll(s_.substr(start, pos_ - start));
    }

    Rational parse_number_rational() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) throw SyntaxError("expected a number", start);
        if (pos_ < s_.size() && s_[pos_] == '.') {
            ++pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        }
        return Rational::from_decimal(s_.substr(start, pos_ - start));
    }

    Expr parse_base() {
        skip_ws();
        if (pos_ >= s_.size()) throw SyntaxError("unexpected end of input", pos_);
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Expr e = parse_expr();
            if (!eat(')')) throw SyntaxError("expected ')'", pos_);
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            const std::string name = s_.substr(start, pos_ - start);
            if (name == "x") return Expr::variable();
            if (name == "exp") {
                if (!eat('(')) throw SyntaxError("expected '(' after exp", pos_);
                Expr arg = parse_expr();
                if (!eat(')')) throw SyntaxError("expected ')'", pos_);
                return Expr::exp_of(arg);
            }
            throw UnknownSymbol(name, start);
        }
        throw SyntaxError(std::string("unexpected character '") + c + "'", pos_);
    }

    Expr parse_number() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ < s_.size() && s_[pos_] == '.') {
            ++pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        }
        if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
            std::size_t mark = pos_;
            ++pos_;
            if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) ++pos_;
            if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            } else {
                pos_ = mark; // not an exponent suffix
            }
        }
        return Expr::constant(std::strtod(s_.c_str() + start, nullptr));
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

} // namespace

Expr parse(const std::string& text) { return Parser(text).run(); }

Rational Rational::from_decimal(const std::string& text) {
    const auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(std::stoll(text));
    const std::string whole = text.substr(0, dot);
    const std::string frac = text.substr(dot + 1);
    if (frac.size() > 15) throw DomainError("decimal literal too precise for an exact rational");
    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    const std::int64_t w = whole.empty() ? 0 : std::stoll(whole);
    const std::int64_t f = frac.empty() ? 0 : std::stoll(frac);
    return Rational(w * den + f, den);
}

std::vector<double> sample_points(double lo, double hi, int n) {
    std::vector<double> pts(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        pts[static_cast<std::size_t>(i)] = lo + (hi - lo) * (2.0 * i + 1.0) / (2.0 * n);
    return pts;
}

bool numerically_equal(const Expr& a, const Expr& b, double lo, double hi, double tol, int n) {
    for (double x : sample_points(lo, hi, n)) {
        const double va = a.evaluate(x);
        const double vb = b.evaluate(x);
        if (std::abs(va - vb) > tol * (1.0 + std::max(std::abs(va), std::abs(vb)))) return false;
    }
    return true;
}

bool is_negligible(const Expr& e, double lo, double hi, double threshold, int n) {
    try {
        for (double x : sample_points(lo, hi, n))
            if (std::abs(e.evaluate(x)) > threshold) return false;
    } catch (const DomainError&) {
        return false;
    }
    return true;
}

} // namespace fracsol
