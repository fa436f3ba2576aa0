#include "ecfield/expr.hpp"

#include <cctype>
#include <stdexcept>

namespace ecf {

namespace {

struct Token {
    enum class Kind { Int, Var, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
    Kind kind;
    size_t pos;
    Integer value{0};
    char var = 0;
};

[[noreturn]] void syntax_error(size_t pos, const std::string& what) {
    throw std::invalid_argument("syntax error at position " + std::to_string(pos) + ": " + what);
}

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            Token t{Token::Kind::Int, i};
            t.value = Integer(text.substr(i, j - i));
            out.push_back(t);
            i = j;
            continue;
        }
        if (c == 'x' || c == 'y' || c == 'X' || c == 'Y' || c == 'Z') {
            Token t{Token::Kind::Var, i};
            t.var = c;
            out.push_back(t);
            ++i;
            continue;
        }
        Token t{Token::Kind::End, i};
        switch (c) {
            case '+': t.kind = Token::Kind::Plus; break;
            case '-': t.kind = Token::Kind::Minus; break;
            case '*': t.kind = Token::Kind::Star; break;
            case '/': t.kind = Token::Kind::Slash; break;
            case '^': t.kind = Token::Kind::Caret; break;
            case '(': t.kind = Token::Kind::LParen; break;
            case ')': t.kind = Token::Kind::RParen; break;
            default: syntax_error(i, std::string("unexpected character '") + c + "'");
        }
        out.push_back(t);
        ++i;
    }
    out.push_back(Token{Token::Kind::End, text.size()});
    return out;
}

std::shared_ptr<ExprAst> make_node(ExprAst::Kind kind, ExprPtr lhs = nullptr,
                                   ExprPtr rhs = nullptr) {
    auto n = std::make_shared<ExprAst>();
    n->kind = kind;
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    return n;
}

class Parser {
public:
    Parser(std::vector<Token> tokens, ExprMode mode) : t_(std::move(tokens)), mode_(mode) {}

    ExprPtr parse() {
        ExprPtr e = expr();
        if (cur().kind != Token::Kind::End) syntax_error(cur().pos, "trailing input");
        return e;
    }

private:
    const Token& cur() const { return t_[i_]; }
    void advance() { ++i_; }
    bool accept(Token::Kind k) {
        if (cur().kind != k) return false;
        advance();
        return true;
    }

    ExprPtr expr() {
        ExprPtr e = term();
        for (;;) {
            if (accept(Token::Kind::Plus))
                e = make_node(ExprAst::Kind::Add, e, term());
            else if (accept(Token::Kind::Minus))
                e = make_node(ExprAst::Kind::Sub, e, term());
            else
                return e;
        }
    }

    ExprPtr term() {
        ExprPtr e = factor();
        for (;;) {
            if (accept(Token::Kind::Star))
                e = make_node(ExprAst::Kind::Mul, e, factor());
            else if (accept(Token::Kind::Slash))
                e = make_node(ExprAst::Kind::Div, e, factor());
            else
                return e;
        }
    }

    ExprPtr factor() {
        if (accept(Token::Kind::Minus)) return make_node(ExprAst::Kind::Neg, factor());
        return power();
    }

    ExprPtr power() {
        ExprPtr e = atom();
        while (cur().kind == Token::Kind::Caret) {
            size_t pos = cur().pos;
            advance();
            if (cur().kind == Token::Kind::Minus)
                syntax_error(cur().pos, "negative exponents are not allowed; use division");
            if (cur().kind != Token::Kind::Int)
                syntax_error(pos, "'^' needs a nonnegative integer exponent");
            if (!cur().value.fits_slong_p()) syntax_error(cur().pos, "exponent too large");
            auto n = make_node(ExprAst::Kind::Pow, e);
            n->exponent = cur().value.get_si();
            advance();
            e = n;
        }
        return e;
    }

    ExprPtr atom() {
        if (cur().kind == Token::Kind::Int) {
            auto n = std::make_shared<ExprAst>();
            n->kind = ExprAst::Kind::Literal;
            n->literal = cur().value;
            advance();
            return n;
        }
        if (cur().kind == Token::Kind::Var) {
            char v = cur().var;
            bool affine_var = v == 'x' || v == 'y';
            if (mode_ == ExprMode::Affine && !affine_var)
                syntax_error(cur().pos, "projective variable in affine mode");
            if (mode_ == ExprMode::Homogeneous && affine_var)
                syntax_error(cur().pos, "affine variable in homogeneous mode");
            auto n = std::make_shared<ExprAst>();
            n->kind = ExprAst::Kind::Var;
            n->var = v;
            advance();
            return n;
        }
        if (accept(Token::Kind::LParen)) {
            ExprPtr e = expr();
            if (!accept(Token::Kind::RParen)) syntax_error(cur().pos, "expected ')'");
            return e;
        }
        syntax_error(cur().pos, "expected a literal, variable or '('");
    }

    std::vector<Token> t_;
    size_t i_ = 0;
    ExprMode mode_;
};

}  // namespace

ExprPtr parse_expr(const std::string& text, ExprMode mode) {
    return Parser(tokenize(text), mode).parse();
}

ExprMode detect_mode(const std::string& text) {
    bool affine = false, hom = false;
    for (size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == 'x' || c == 'y') affine = true;
        if (c == 'X' || c == 'Y' || c == 'Z') hom = true;
    }
    if (affine && hom)
        throw std::invalid_argument("mixed affine and projective variables in expression");
    return hom ? ExprMode::Homogeneous : ExprMode::Affine;
}

CurveFunction eval_affine(const ExprPtr& ast, const WeierstrassCurve& curve) {
    const FieldSpec& k = curve.field();
    switch (ast->kind) {
        case ExprAst::Kind::Literal:
            return CurveFunction::constant(curve, FieldElement(k, ast->literal));
        case ExprAst::Kind::Var:
            return ast->var == 'x' ? CurveFunction::coordinate_x(curve)
                                   : CurveFunction::coordinate_y(curve);
        case ExprAst::Kind::Add: return eval_affine(ast->lhs, curve) + eval_affine(ast->rhs, curve);
        case ExprAst::Kind::Sub: return eval_affine(ast->lhs, curve) - eval_affine(ast->rhs, curve);
        case ExprAst::Kind::Mul: return eval_affine(ast->lhs, curve) * eval_affine(ast->rhs, curve);
        case ExprAst::Kind::Div: return eval_affine(ast->lhs, curve) / eval_affine(ast->rhs, curve);
        case ExprAst::Kind::Neg: return -eval_affine(ast->lhs, curve);
        case ExprAst::Kind::Pow: return eval_affine(ast->lhs, curve).pow(ast->exponent);
    }
    throw std::logic_error("unhandled expression node");
}

namespace {

struct TriFraction {
    TriPoly num, den;
};

TriFraction eval_tri(const ExprPtr& ast, const FieldSpec& k) {
    TriPoly one = TriPoly::constant(k, FieldElement::one(k));
    switch (ast->kind) {
        case ExprAst::Kind::Literal:
            return {TriPoly::constant(k, FieldElement(k, ast->literal)), one};
        case ExprAst::Kind::Var: {
            int axis = ast->var == 'X' ? 0 : (ast->var == 'Y' ? 1 : 2);
            return {TriPoly::variable(k, axis), one};
        }
        case ExprAst::Kind::Add: {
            TriFraction a = eval_tri(ast->lhs, k), b = eval_tri(ast->rhs, k);
            return {a.num * b.den + b.num * a.den, a.den * b.den};
        }
        case ExprAst::Kind::Sub: {
            TriFraction a = eval_tri(ast->lhs, k), b = eval_tri(ast->rhs, k);
            return {a.num * b.den - b.num * a.den, a.den * b.den};
        }
        case ExprAst::Kind::Mul: {
            TriFraction a = eval_tri(ast->lhs, k), b = eval_tri(ast->rhs, k);
            return {a.num * b.num, a.den * b.den};
        }
        case ExprAst::Kind::Div: {
            TriFraction a = eval_tri(ast->lhs, k), b = eval_tri(ast->rhs, k);
            if (b.num.is_zero()) throw std::domain_error("division by zero in expression");
            return {a.num * b.den, a.den * b.num};
        }
        case ExprAst::Kind::Neg: {
            TriFraction a = eval_tri(ast->lhs, k);
            return {-a.num, a.den};
        }
        case ExprAst::Kind::Pow: {
            TriFraction a = eval_tri(ast->lhs, k);
            int e = static_cast<int>(ast->exponent);
            return {a.num.pow(e), a.den.pow(e)};
        }
    }
    throw std::logic_error("unhandled expression node");
}

}  // namespace

HomogeneousFraction eval_homogeneous(const ExprPtr& ast, const FieldSpec& spec) {
    TriFraction f = eval_tri(ast, spec);
    return HomogeneousFraction(f.num, f.den);  // homogeneity checked here
}

CurveFunction parse_function(const WeierstrassCurve& curve, const std::string& text) {
    ExprMode mode = detect_mode(text);
    ExprPtr ast = parse_expr(text, mode);
    if (mode == ExprMode::Affine) return eval_affine(ast, curve);
    return from_homogeneous(curve, eval_homogeneous(ast, curve.field()));
}

}  // namespace ecf
