#include "cr/expr.hpp"

#include <cctype>

namespace cr {

namespace {

struct Token {
    enum class Kind { Number, Ident, Op, End } kind;
    std::string text;
    int line, col;
};

class Lexer {
  public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }
    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

  private:
    void advance() {
        while (pos_ < s_.size() && std::isspace((unsigned char)s_[pos_])) bump();
        tok_.line = line_;
        tok_.col = col_;
        if (pos_ >= s_.size()) {
            tok_.kind = Token::Kind::End;
            tok_.text = "";
            return;
        }
        char c = s_[pos_];
        if (std::isdigit((unsigned char)c)) {
            tok_.kind = Token::Kind::Number;
            tok_.text.clear();
            while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) {
                tok_.text += s_[pos_];
                bump();
            }
            return;
        }
        if (std::isalpha((unsigned char)c) || c == '_') {
            tok_.kind = Token::Kind::Ident;
            tok_.text.clear();
            while (pos_ < s_.size() && (std::isalnum((unsigned char)s_[pos_]) || s_[pos_] == '_')) {
                tok_.text += s_[pos_];
                bump();
            }
            return;
        }
        if (std::string("+-*/^(),").find(c) != std::string::npos) {
            tok_.kind = Token::Kind::Op;
            tok_.text = std::string(1, c);
            bump();
            return;
        }
        throw ParseError(line_, col_, std::string("unexpected character '") + c + "'");
    }
    void bump() {
        if (s_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string& s_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_;
};

class Parser {
  public:
    explicit Parser(const std::string& s) : lex_(s) {}

    ExprPtr run() {
        ExprPtr e = sum();
        const Token& t = lex_.peek();
        if (t.kind != Token::Kind::End) throw ParseError(t.line, t.col, "unexpected '" + t.text + "'");
        return e;
    }

  private:
    static std::shared_ptr<Expr> node(Expr::Kind k, const Token& at) {
        auto e = std::make_shared<Expr>();
        e->kind = k;
        e->line = at.line;
        e->col = at.col;
        return e;
    }

    bool is_op(const char* s) const {
        return lex_.peek().kind == Token::Kind::Op && lex_.peek().text == s;
    }

    ExprPtr sum() {
        ExprPtr left = product();
        while (is_op("+") || is_op("-")) {
            Token op = lex_.take();
            auto e = node(op.text == "+" ? Expr::Kind::Add : Expr::Kind::Sub, op);
            e->a = left;
            e->b = product();
            left = e;
        }
        return left;
    }

    ExprPtr product() {
        ExprPtr left = factor();
        while (is_op("*") || is_op("/")) {
            Token op = lex_.take();
            auto e = node(op.text == "*" ? Expr::Kind::Mul : Expr::Kind::Div, op);
            e->a = left;
            e->b = factor();
            left = e;
        }
        return left;
    }

    ExprPtr factor() {
        if (is_op("-")) {
            Token op = lex_.take();
            auto e = node(Expr::Kind::Neg, op);
            e->a = factor();
            return e;
        }
        if (is_op("+")) {
            lex_.take();
            return factor();
        }
        return power();
    }

    ExprPtr power() {
        ExprPtr base = primary();
        if (!is_op("^")) return base;
        Token op = lex_.take();
        const Token& t = lex_.peek();
        if (t.kind != Token::Kind::Number) {
            throw ParseError(t.line, t.col, "exponent must be a nonnegative integer literal");
        }
        Token num = lex_.take();
        auto e = node(Expr::Kind::Pow, op);
        e->a = base;
        mpz_class k(num.text);
        if (k > 1000) throw ParseError(num.line, num.col, "exponent too large");
        e->power = (int)k.get_si();
        return e;
    }

    ExprPtr primary() {
        const Token& t = lex_.peek();
        if (t.kind == Token::Kind::Number) {
            Token num = lex_.take();
            auto e = node(Expr::Kind::Number, num);
            e->num = mpz_class(num.text);
            return e;
        }
        if (t.kind == Token::Kind::Ident) {
            Token id = lex_.take();
            if (id.text == "sqrt") {
                if (!is_op("(")) {
                    const Token& nx = lex_.peek();
                    throw ParseError(nx.line, nx.col, "sqrt needs a parenthesized argument");
                }
                lex_.take();
                auto e = node(Expr::Kind::Sqrt, id);
                e->a = sum();
                expect(")");
                return e;
            }
            auto e = node(Expr::Kind::Ident, id);
            e->name = id.text;
            return e;
        }
        if (is_op("(")) {
            lex_.take();
            ExprPtr e = sum();
            expect(")");
            return e;
        }
        throw ParseError(t.line, t.col, t.kind == Token::Kind::End ? "unexpected end of expression"
                                                                   : "unexpected '" + t.text + "'");
    }

    void expect(const char* s) {
        const Token& t = lex_.peek();
        if (!(t.kind == Token::Kind::Op && t.text == s)) {
            throw ParseError(t.line, t.col, std::string("expected '") + s + "'");
        }
        lex_.take();
    }

    Lexer lex_;
};

}  // namespace

ExprPtr parse_expression(const std::string& text) { return Parser(text).run(); }

namespace {

// shared evaluation skeleton; V must provide the algebra of the mode
template <class V, class MakeConst, class MakeVar, class DoSqrt>
V eval_generic(const ExprPtr& e, const SpacePtr& sp, const ParamMap& params,
               const MakeConst& cnst, const MakeVar& var, const DoSqrt& sq) {
    auto rec = [&](auto&& self, const ExprPtr& x) -> V {
        switch (x->kind) {
            case Expr::Kind::Number: return cnst(Gaussian(mpq_class(x->num)));
            case Expr::Kind::Ident: {
                if (x->name == "i") return cnst(Gaussian::i());
                if (sp) {
                    int v = sp->find(x->name);
                    if (v >= 0) return var(v);
                }
                auto it = params.find(x->name);
                if (it != params.end()) return cnst(it->second);
                throw ParseError(x->line, x->col, "unknown identifier '" + x->name + "'");
            }
            case Expr::Kind::Neg: return -self(self, x->a);
            case Expr::Kind::Add: return self(self, x->a) + self(self, x->b);
            case Expr::Kind::Sub: return self(self, x->a) - self(self, x->b);
            case Expr::Kind::Mul: return self(self, x->a) * self(self, x->b);
            case Expr::Kind::Div: {
                V num = self(self, x->a);
                V den = self(self, x->b);
                if (den.is_zero()) throw ParseError(x->line, x->col, "division by zero");
                try {
                    return num / den;
                } catch (const std::domain_error& err) {
                    throw ParseError(x->line, x->col, err.what());
                }
            }
            case Expr::Kind::Pow: return self(self, x->a).pow(x->power);
            case Expr::Kind::Sqrt: return sq(self(self, x->a), x);
        }
        throw std::logic_error("unhandled expression node");
    };
    return rec(rec, e);
}

}  // namespace

RatFn eval_ratfn(const ExprPtr& e, const SpacePtr& sp, const ParamMap& params) {
    return eval_generic<RatFn>(
        e, sp, params, [&](const Gaussian& c) { return RatFn::constant(sp, c); },
        [&](int v) { return RatFn::variable(sp, v); },
        [&](const RatFn&, const ExprPtr& at) -> RatFn {
            throw ParseError(at->line, at->col, "sqrt needs series mode");
        });
}

TruncSeries eval_series(const ExprPtr& e, const SpacePtr& sp, const ParamMap& params, int order) {
    return eval_generic<TruncSeries>(
        e, sp, params, [&](const Gaussian& c) { return TruncSeries::constant(sp, c, order); },
        [&](int v) { return TruncSeries::variable(sp, v, order); },
        [&](const TruncSeries& s, const ExprPtr& at) -> TruncSeries {
            try {
                return s.sqrt();
            } catch (const std::domain_error& err) {
                throw ParseError(at->line, at->col, err.what());
            }
        });
}

Gaussian eval_constant(const ExprPtr& e, const ParamMap& params) {
    RatFn f = eval_ratfn(e, make_scalar_space(), params);
    if (!f.is_constant()) throw ParseError(e->line, e->col, "expected a constant expression");
    return f.as_constant();
}

}  // namespace cr
