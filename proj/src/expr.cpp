#include "rda/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

namespace rda {

enum class NodeKind { number, var_x, var_y, add, sub, mul, div, pow, neg, call };
enum class Fn { sin, cos, exp, sqrt, abs };

class ExprNode {
public:
    NodeKind kind;
    double value = 0.0;
    Fn fn = Fn::sin;
    std::shared_ptr<const ExprNode> lhs, rhs;
};

namespace {

using NodePtr = std::shared_ptr<const ExprNode>;

NodePtr make_num(double v) {
    auto n = std::make_shared<ExprNode>();
    n->kind = NodeKind::number;
    n->value = v;
    return n;
}

NodePtr make_var(NodeKind k) {
    auto n = std::make_shared<ExprNode>();
    n->kind = k;
    return n;
}

NodePtr make_bin(NodeKind k, NodePtr a, NodePtr b) {
    auto n = std::make_shared<ExprNode>();
    n->kind = k;
    n->lhs = std::move(a);
    n->rhs = std::move(b);
    return n;
}

NodePtr make_neg(NodePtr a) {
    auto n = std::make_shared<ExprNode>();
    n->kind = NodeKind::neg;
    n->lhs = std::move(a);
    return n;
}

NodePtr make_call(Fn fn, NodePtr a) {
    auto n = std::make_shared<ExprNode>();
    n->kind = NodeKind::call;
    n->fn = fn;
    n->lhs = std::move(a);
    return n;
}

class Parser {
public:
    explicit Parser(const std::string& src) : src_(src) {}

    NodePtr parse() {
        skip_ws();
        if (pos_ >= src_.size()) fail("expected expression");
        NodePtr e = parse_sum();
        skip_ws();
        if (pos_ < src_.size()) fail("expected operator or end of input");
        return e;
    }

private:
    const std::string& src_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        std::ostringstream m;
        m << "syntax error at offset " << pos_ << ": " << msg;
        throw syntax_error(m.str(), pos_);
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    NodePtr parse_sum() {
        NodePtr e = parse_term();
        for (;;) {
            if (accept('+'))
                e = make_bin(NodeKind::add, e, parse_term());
            else if (accept('-'))
                e = make_bin(NodeKind::sub, e, parse_term());
            else
                return e;
        }
    }

    NodePtr parse_term() {
        NodePtr e = parse_factor();
        for (;;) {
            if (accept('*'))
                e = make_bin(NodeKind::mul, e, parse_factor());
            else if (accept('/'))
                e = make_bin(NodeKind::div, e, parse_factor());
            else
                return e;
        }
    }

    // factor := '-' factor | power; power := atom ('^' factor)?
    // This puts ^ above unary minus: -x^2 == -(x^2), and 2^-3 parses.
    NodePtr parse_factor() {
        if (accept('-')) return make_neg(parse_factor());
        NodePtr base = parse_atom();
        if (accept('^')) return make_bin(NodeKind::pow, base, parse_factor());
        return base;
    }

    NodePtr parse_atom() {
        skip_ws();
        if (pos_ >= src_.size()) fail("expected number, variable, function, or '('");
        const char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            NodePtr e = parse_sum();
            if (!accept(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c))) return parse_ident();
        fail("expected number, variable, function, or '('");
    }

    NodePtr parse_number() {
        const char* begin = src_.c_str() + pos_;
        char* end = nullptr;
        const double v = std::strtod(begin, &end);
        if (end == begin) fail("malformed number");
        pos_ += static_cast<std::size_t>(end - begin);
        return make_num(v);
    }

    NodePtr parse_ident() {
        const std::size_t start = pos_;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
            ++pos_;
        const std::string name = src_.substr(start, pos_ - start);
        if (name == "x") return make_var(NodeKind::var_x);
        if (name == "y") return make_var(NodeKind::var_y);

        Fn fn;
        if (name == "sin")
            fn = Fn::sin;
        else if (name == "cos")
            fn = Fn::cos;
        else if (name == "exp")
            fn = Fn::exp;
        else if (name == "sqrt")
            fn = Fn::sqrt;
        else if (name == "abs")
            fn = Fn::abs;
        else {
            pos_ = start;
            fail("unknown identifier '" + name + "'");
        }
        if (!accept('(')) fail("expected '(' after function name");
        NodePtr arg = parse_sum();
        if (!accept(')')) fail("expected ')'");
        return make_call(fn, arg);
    }
};

double eval_node(const ExprNode& n, double x, double y) {
    switch (n.kind) {
        case NodeKind::number: return n.value;
        case NodeKind::var_x: return x;
        case NodeKind::var_y: return y;
        case NodeKind::add: return eval_node(*n.lhs, x, y) + eval_node(*n.rhs, x, y);
        case NodeKind::sub: return eval_node(*n.lhs, x, y) - eval_node(*n.rhs, x, y);
        case NodeKind::mul: return eval_node(*n.lhs, x, y) * eval_node(*n.rhs, x, y);
        case NodeKind::div: return eval_node(*n.lhs, x, y) / eval_node(*n.rhs, x, y);
        case NodeKind::pow: return std::pow(eval_node(*n.lhs, x, y), eval_node(*n.rhs, x, y));
        case NodeKind::neg: return -eval_node(*n.lhs, x, y);
        case NodeKind::call: {
            const double a = eval_node(*n.lhs, x, y);
            switch (n.fn) {
                case Fn::sin: return std::sin(a);
                case Fn::cos: return std::cos(a);
                case Fn::exp: return std::exp(a);
                case Fn::sqrt: return std::sqrt(a);
                case Fn::abs: return std::fabs(a);
            }
        }
    }
    return 0.0;
}

void print_node(const ExprNode& n, std::ostream& out) {
    switch (n.kind) {
        case NodeKind::number: {
            char buf[40];
            std::snprintf(buf, sizeof(buf), "%.17g", n.value);
            out << buf;
            return;
        }
        case NodeKind::var_x: out << "x"; return;
        case NodeKind::var_y: out << "y"; return;
        case NodeKind::add:
        case NodeKind::sub:
        case NodeKind::mul:
        case NodeKind::div:
        case NodeKind::pow: {
            const char* op = n.kind == NodeKind::add   ? "+"
                             : n.kind == NodeKind::sub ? "-"
                             : n.kind == NodeKind::mul ? "*"
                             : n.kind == NodeKind::div ? "/"
                                                       : "^";
            out << "(";
            print_node(*n.lhs, out);
            out << op;
            print_node(*n.rhs, out);
            out << ")";
            return;
        }
        case NodeKind::neg:
            out << "(-";
            print_node(*n.lhs, out);
            out << ")";
            return;
        case NodeKind::call: {
            const char* name = n.fn == Fn::sin    ? "sin"
                               : n.fn == Fn::cos  ? "cos"
                               : n.fn == Fn::exp  ? "exp"
                               : n.fn == Fn::sqrt ? "sqrt"
                                                  : "abs";
            out << name << "(";
            print_node(*n.lhs, out);
            out << ")";
            return;
        }
    }
}

}  // namespace

Expr Expr::parse(const std::string& src) {
    Parser p(src);
    return Expr(p.parse());
}

double Expr::eval(double x, double y) const {
    if (!root_) throw error("eval of empty expression");
    return eval_node(*root_, x, y);
}

std::string Expr::print() const {
    if (!root_) return "";
    std::ostringstream out;
    print_node(*root_, out);
    return out.str();
}

}  // namespace rda
