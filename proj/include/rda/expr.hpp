// Arithmetic expression language for coefficient formulas in config files:
// numbers, variables x/y, + - * / ^ with unary minus, and sin/cos/exp/sqrt/abs.
// ^ is right-associative and binds tighter than unary minus.
#pragma once

#include <memory>
#include <string>

#include "rda/errors.hpp"

namespace rda {

class ExprNode;

class Expr {
public:
    Expr() = default;

    double eval(double x, double y = 0.0) const;
    std::string print() const;
    bool valid() const { return root_ != nullptr; }

    // Parses src or throws syntax_error with the byte offset of the problem.
    static Expr parse(const std::string& src);

private:
    explicit Expr(std::shared_ptr<const ExprNode> root) : root_(std::move(root)) {}
    std::shared_ptr<const ExprNode> root_;
};

}  // namespace rda
