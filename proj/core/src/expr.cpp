#include "qmech/expr.hpp"

#include <cctype>
#include <utility>
#include <vector>

namespace qmech {
namespace {

constexpr long kMaxExponent = 1000000;

struct Token {
    enum class Kind { Integer, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
    Kind kind;
    int line;
    int col;
    BigInt value;      // Integer
    std::string text;  // Ident
};

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> out;
    int line = 1;
    int col = 1;
    std::size_t k = 0;
    auto advance = [&](char c) {
        if (c == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    };
    while (k < text.size()) {
        char c = text[k];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            advance(c);
            ++k;
            continue;
        }
        Token tok;
        tok.line = line;
        tok.col = col;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) {
                digits += text[k];
                advance(text[k]);
                ++k;
            }
            tok.kind = Token::Kind::Integer;
            tok.value = BigInt(digits);
            out.push_back(std::move(tok));
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name;
            while (k < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[k])) || text[k] == '_')) {
                name += text[k];
                advance(text[k]);
                ++k;
            }
            tok.kind = Token::Kind::Ident;
            tok.text = std::move(name);
            out.push_back(std::move(tok));
            continue;
        }
        switch (c) {
            case '+': tok.kind = Token::Kind::Plus; break;
            case '-': tok.kind = Token::Kind::Minus; break;
            case '*': tok.kind = Token::Kind::Star; break;
            case '/': tok.kind = Token::Kind::Slash; break;
            case '^': tok.kind = Token::Kind::Caret; break;
            case '(': tok.kind = Token::Kind::LParen; break;
            case ')': tok.kind = Token::Kind::RParen; break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", line, col);
        }
        advance(c);
        ++k;
        out.push_back(std::move(tok));
    }
    Token end;
    end.kind = Token::Kind::End;
    end.line = line;
    end.col = col;
    out.push_back(std::move(end));
    return out;
}

class Parser {
  public:
    Parser(std::vector<Token> tokens, const ParseOptions& options)
        : tokens_(std::move(tokens)), options_(options) {}

    ExprPtr run() {
        ExprPtr e = parse_expr();
        if (peek().kind != Token::Kind::End) {
            throw ParseError("unexpected trailing input", peek().line, peek().col);
        }
        return e;
    }

  private:
    const Token& peek() const { return tokens_[pos_]; }
    Token take() { return tokens_[pos_++]; }

    Token expect(Token::Kind kind, const std::string& what) {
        if (peek().kind != kind) {
            throw ParseError("expected " + what, peek().line, peek().col);
        }
        return take();
    }

    static ExprPtr make(ExprNode::Kind kind, const Token& at) {
        auto node = std::make_unique<ExprNode>();
        node->kind = kind;
        node->line = at.line;
        node->col = at.col;
        return node;
    }

    ExprPtr parse_expr() {
        ExprPtr left = parse_term();
        while (peek().kind == Token::Kind::Plus || peek().kind == Token::Kind::Minus) {
            Token op = take();
            ExprPtr node = make(op.kind == Token::Kind::Plus ? ExprNode::Kind::Add
                                                             : ExprNode::Kind::Sub,
                                op);
            node->lhs = std::move(left);
            node->rhs = parse_term();
            left = std::move(node);
        }
        return left;
    }

    ExprPtr parse_term() {
        ExprPtr left = parse_factor();
        while (peek().kind == Token::Kind::Star || peek().kind == Token::Kind::Slash) {
            Token op = take();
            ExprPtr node = make(op.kind == Token::Kind::Star ? ExprNode::Kind::Mul
                                                             : ExprNode::Kind::Div,
                                op);
            node->lhs = std::move(left);
            node->rhs = parse_factor();
            left = std::move(node);
        }
        return left;
    }

    ExprPtr parse_factor() {
        if (peek().kind == Token::Kind::Minus) {
            Token op = take();
            ExprPtr node = make(ExprNode::Kind::Neg, op);
            node->lhs = parse_factor();
            return node;
        }
        return parse_power();
    }

    ExprPtr parse_power() {
        ExprPtr base = parse_atom();
        if (peek().kind != Token::Kind::Caret) return base;
        Token caret = take();
        ExprPtr node = make(ExprNode::Kind::Pow, caret);
        node->line = base->line;
        node->col = base->col;
        node->lhs = std::move(base);
        parse_exponent(*node);
        return node;
    }

    long small_int(const Token& tok) {
        if (tok.value > kMaxExponent) {
            throw ParseError("exponent too large", tok.line, tok.col);
        }
        return static_cast<long>(tok.value);
    }

    void parse_exponent(ExprNode& node) {
        if (peek().kind == Token::Kind::Integer) {
            Token tok = take();
            node.exp_num = small_int(tok);
            node.exp_den = 1;
            return;
        }
        expect(Token::Kind::LParen, "an exponent");
        bool negative = false;
        if (peek().kind == Token::Kind::Minus) {
            take();
            negative = true;
        }
        Token num = expect(Token::Kind::Integer, "an integer exponent");
        node.exp_num = small_int(num);
        if (negative) node.exp_num = -node.exp_num;
        node.exp_den = 1;
        if (peek().kind == Token::Kind::Slash) {
            take();
            Token den = expect(Token::Kind::Integer, "an exponent denominator");
            if (den.value != 2) {
                throw ParseError("only half-integer exponents are supported", den.line,
                                 den.col);
            }
            node.exp_den = 2;
        }
        expect(Token::Kind::RParen, "')'");
    }

    ExprPtr parse_atom() {
        const Token& tok = peek();
        switch (tok.kind) {
            case Token::Kind::Integer: {
                Token t = take();
                ExprPtr node = make(ExprNode::Kind::Integer, t);
                node->value = t.value;
                return node;
            }
            case Token::Kind::Ident: {
                Token t = take();
                if (t.text == "q") return make(ExprNode::Kind::SymbolQ, t);
                if (t.text == "i") return make(ExprNode::Kind::SymbolI, t);
                if (t.text == "x") return make(ExprNode::Kind::GenX, t);
                if (t.text == "p") return make(ExprNode::Kind::GenP, t);
                if (!options_.auto_declare_parameters &&
                    options_.parameters.find(t.text) == options_.parameters.end()) {
                    throw ParseError("undeclared identifier '" + t.text + "'", t.line,
                                     t.col);
                }
                ExprPtr node = make(ExprNode::Kind::Param, t);
                node->name = t.text;
                return node;
            }
            case Token::Kind::LParen: {
                take();
                ExprPtr inner = parse_expr();
                expect(Token::Kind::RParen, "')'");
                return inner;
            }
            default:
                throw ParseError("expected a value", tok.line, tok.col);
        }
    }

    std::vector<Token> tokens_;
    const ParseOptions& options_;
    std::size_t pos_ = 0;
};

bool is_atomic(ExprNode::Kind kind) {
    switch (kind) {
        case ExprNode::Kind::Integer:
        case ExprNode::Kind::SymbolQ:
        case ExprNode::Kind::SymbolI:
        case ExprNode::Kind::GenX:
        case ExprNode::Kind::GenP:
        case ExprNode::Kind::Param:
            return true;
        default:
            return false;
    }
}

}  // namespace

ExprPtr parse_expression(const std::string& text, const ParseOptions& options) {
    Parser parser(tokenize(text), options);
    return parser.run();
}

bool ast_equal(const ExprNode& a, const ExprNode& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case ExprNode::Kind::Integer:
            return a.value == b.value;
        case ExprNode::Kind::SymbolQ:
        case ExprNode::Kind::SymbolI:
        case ExprNode::Kind::GenX:
        case ExprNode::Kind::GenP:
            return true;
        case ExprNode::Kind::Param:
            return a.name == b.name;
        case ExprNode::Kind::Neg:
            return ast_equal(*a.lhs, *b.lhs);
        case ExprNode::Kind::Pow:
            return a.exp_num == b.exp_num && a.exp_den == b.exp_den &&
                   ast_equal(*a.lhs, *b.lhs);
        default:
            return ast_equal(*a.lhs, *b.lhs) && ast_equal(*a.rhs, *b.rhs);
    }
}

std::string ast_to_text(const ExprNode& node) {
    switch (node.kind) {
        case ExprNode::Kind::Integer:
            return node.value.str();
        case ExprNode::Kind::SymbolQ:
            return "q";
        case ExprNode::Kind::SymbolI:
            return "i";
        case ExprNode::Kind::GenX:
            return "x";
        case ExprNode::Kind::GenP:
            return "p";
        case ExprNode::Kind::Param:
            return node.name;
        case ExprNode::Kind::Neg:
            return "(-" + ast_to_text(*node.lhs) + ")";
        case ExprNode::Kind::Add:
            return "(" + ast_to_text(*node.lhs) + "+" + ast_to_text(*node.rhs) + ")";
        case ExprNode::Kind::Sub:
            return "(" + ast_to_text(*node.lhs) + "-" + ast_to_text(*node.rhs) + ")";
        case ExprNode::Kind::Mul:
            return "(" + ast_to_text(*node.lhs) + "*" + ast_to_text(*node.rhs) + ")";
        case ExprNode::Kind::Div:
            return "(" + ast_to_text(*node.lhs) + "/" + ast_to_text(*node.rhs) + ")";
        case ExprNode::Kind::Pow: {
            std::string base = ast_to_text(*node.lhs);
            // Only a chained power is printed without its own parentheses.
            if (node.lhs->kind == ExprNode::Kind::Pow) base = "(" + base + ")";
            std::string exp;
            if (node.exp_den == 1 && node.exp_num >= 0) {
                exp = std::to_string(node.exp_num);
            } else if (node.exp_den == 1) {
                exp = "(" + std::to_string(node.exp_num) + ")";
            } else {
                exp = "(" + std::to_string(node.exp_num) + "/2)";
            }
            return base + "^" + exp;
        }
    }
    throw Error("unreachable expression node kind");
}

QPoly lower_to_qpoly(const ExprNode& node) {
    switch (node.kind) {
        case ExprNode::Kind::Integer:
            return QPoly(ScalarExpr(BigRat(node.value)));
        case ExprNode::Kind::SymbolQ:
            return QPoly(ScalarExpr::q_power(1));
        case ExprNode::Kind::SymbolI:
            return QPoly(ScalarExpr::imaginary_unit());
        case ExprNode::Kind::GenX:
            return QPoly::x();
        case ExprNode::Kind::GenP:
            return QPoly::p();
        case ExprNode::Kind::Param:
            return QPoly(ScalarExpr::parameter(node.name));
        case ExprNode::Kind::Add:
            return lower_to_qpoly(*node.lhs) + lower_to_qpoly(*node.rhs);
        case ExprNode::Kind::Sub:
            return lower_to_qpoly(*node.lhs) - lower_to_qpoly(*node.rhs);
        case ExprNode::Kind::Mul:
            return lower_to_qpoly(*node.lhs) * lower_to_qpoly(*node.rhs);
        case ExprNode::Kind::Neg:
            return -lower_to_qpoly(*node.lhs);
        case ExprNode::Kind::Div: {
            QPoly divisor = lower_to_qpoly(*node.rhs);
            if (!divisor.is_scalar()) {
                throw ParseError("division requires a scalar divisor", node.rhs->line,
                                 node.rhs->col);
            }
            ScalarExpr s = divisor.scalar_part();
            if (s.is_zero()) {
                throw ParseError("division by zero", node.rhs->line, node.rhs->col);
            }
            return lower_to_qpoly(*node.lhs) * s.inverse();
        }
        case ExprNode::Kind::Pow: {
            QPoly base = lower_to_qpoly(*node.lhs);
            if (node.exp_den == 2) {
                if (!(base == QPoly(ScalarExpr::q_power(1)))) {
                    throw ParseError("half-integer exponents are only supported on q",
                                     node.line, node.col);
                }
                return QPoly(ScalarExpr::s_power(static_cast<int>(node.exp_num)));
            }
            long e = node.exp_num;
            if (e >= 0 && !base.is_scalar()) {
                return base.pow(static_cast<unsigned>(e));
            }
            if (!base.is_scalar()) {
                throw ParseError("negative exponent requires an invertible scalar",
                                 node.line, node.col);
            }
            ScalarExpr s = base.scalar_part();
            if (e < 0 && s.is_zero()) {
                throw ParseError("division by zero", node.line, node.col);
            }
            return QPoly(s.pow(static_cast<int>(e)));
        }
    }
    throw Error("unreachable expression node kind");
}

QPoly parse_qpoly(const std::string& text, const ParseOptions& options) {
    ExprPtr ast = parse_expression(text, options);
    return lower_to_qpoly(*ast);
}

ScalarExpr parse_scalar(const std::string& text, const ParseOptions& options) {
    ExprPtr ast = parse_expression(text, options);
    QPoly value = lower_to_qpoly(*ast);
    if (!value.is_scalar()) {
        throw ParseError("expected a scalar expression", ast->line, ast->col);
    }
    return value.scalar_part();
}

}  // namespace qmech
