#include "saddleform/parser.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <utility>
#include <vector>

namespace saddleform {

namespace {

struct Token {
    enum Kind { Int, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };
    Kind kind = End;
    std::string text;
    std::size_t pos = 0;
};

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace((unsigned char)c)) {
            ++i;
            continue;
        }
        Token tok;
        tok.pos = i;
        if (std::isdigit((unsigned char)c)) {
            tok.kind = Token::Int;
            while (i < text.size() && std::isdigit((unsigned char)text[i])) tok.text += text[i++];
        } else if (std::isalpha((unsigned char)c)) {
            tok.kind = Token::Ident;
            while (i < text.size() && (std::isalnum((unsigned char)text[i])))
                tok.text += text[i++];
        } else {
            switch (c) {
                case '+': tok.kind = Token::Plus; break;
                case '-': tok.kind = Token::Minus; break;
                case '*': tok.kind = Token::Star; break;
                case '^': tok.kind = Token::Caret; break;
                case '/': tok.kind = Token::Slash; break;
                case '(': tok.kind = Token::LParen; break;
                case ')': tok.kind = Token::RParen; break;
                default:
                    throw SyntaxError(i, std::string("unexpected character '") + c + "'");
            }
            tok.text = c;
            ++i;
        }
        out.push_back(std::move(tok));
    }
    Token end;
    end.kind = Token::End;
    end.pos = text.size();
    out.push_back(end);
    return out;
}

/// A subexpression value: exactly one of scalar or form is set.
struct Value {
    std::optional<TruncatedSeries> scalar;
    std::optional<OneForm> form;

    static Value of(TruncatedSeries s) {
        Value v;
        v.scalar = std::move(s);
        return v;
    }
    static Value of(OneForm f) {
        Value v;
        v.form = std::move(f);
        return v;
    }
    bool is_form() const { return form.has_value(); }
};

class Parser {
public:
    Parser(const std::string& text, const VarContext& ctx)
        : ctx_(ctx), toks_(tokenize(text)) {}

    Value parse_expression() {
        bool negate = false;
        if (peek().kind == Token::Minus) {
            advance();
            negate = true;
        }
        Value acc = parse_term();
        if (negate) acc = negated(acc);
        while (peek().kind == Token::Plus || peek().kind == Token::Minus) {
            bool minus = advance().kind == Token::Minus;
            std::size_t pos = peek().pos;
            Value rhs = parse_term();
            if (minus) rhs = negated(rhs);
            acc = add(std::move(acc), std::move(rhs), pos);
        }
        return acc;
    }

    void expect_end() {
        if (peek().kind != Token::End)
            throw SyntaxError(peek().pos, "unexpected '" + peek().text + "'");
    }

    std::size_t end_pos() const { return toks_.back().pos; }

private:
    const Token& peek() const { return toks_[at_]; }
    const Token& advance() { return toks_[at_++]; }

    const Token& require(Token::Kind k, const std::string& what) {
        if (peek().kind != k) throw SyntaxError(peek().pos, "expected " + what);
        return advance();
    }

    static Value negated(const Value& v) {
        if (v.is_form()) return Value::of(-*v.form);
        return Value::of(-*v.scalar);
    }

    static Value add(Value a, Value b, std::size_t pos) {
        if (a.is_form() != b.is_form()) {
            // a vanished scalar may stand in for the zero form
            if (!a.is_form() && a.scalar->is_zero()) return b;
            if (!b.is_form() && b.scalar->is_zero()) return a;
            throw SyntaxError(pos, "cannot add a scalar and a one-form");
        }
        if (a.is_form()) return Value::of(*a.form + *b.form);
        return Value::of(*a.scalar + *b.scalar);
    }

    Value parse_term() {
        Value acc = parse_factor();
        while (peek().kind == Token::Star) {
            advance();
            std::size_t pos = peek().pos;
            Value rhs = parse_factor();
            if (acc.is_form() && rhs.is_form())
                throw SyntaxError(pos, "product of two one-forms");
            if (acc.is_form())
                acc = Value::of(*rhs.scalar * *acc.form);
            else if (rhs.is_form())
                acc = Value::of(*acc.scalar * *rhs.form);
            else
                acc = Value::of(*acc.scalar * *rhs.scalar);
        }
        return acc;
    }

    Value parse_factor() {
        Value base = parse_atom();
        if (peek().kind != Token::Caret) return base;
        const Token& caret = advance();
        if (base.is_form())
            throw SyntaxError(caret.pos, "a one-form cannot be raised to a power");
        const Token& e = require(Token::Int, "a non-negative integer exponent");
        unsigned long k = 0;
        try {
            k = std::stoul(e.text);
        } catch (const std::exception&) {
            throw SyntaxError(e.pos, "exponent out of range");
        }
        if (k > 10000) throw SyntaxError(e.pos, "exponent out of range");
        return Value::of(base.scalar->pow_u((unsigned)k));
    }

    Value parse_atom() {
        const Token& tok = peek();
        switch (tok.kind) {
            case Token::Int:
                return Value::of(TruncatedSeries::constant(ctx_, parse_rational()));
            case Token::LParen: {
                advance();
                Value inner = parse_expression();
                require(Token::RParen, "')'");
                return inner;
            }
            case Token::Ident:
                return parse_named();
            default:
                throw SyntaxError(tok.pos, "unexpected '" + tok.text + "'");
        }
    }

    Gaussian parse_rational() {
        const Token& num = require(Token::Int, "an integer");
        BigInt n(num.text);
        if (peek().kind != Token::Slash) return Gaussian(Rational(std::move(n)));
        advance();
        const Token& den = require(Token::Int, "a denominator");
        BigInt d(den.text);
        if (d == 0) throw SyntaxError(den.pos, "zero denominator");
        return Gaussian(Rational(std::move(n), std::move(d)));
    }

    Value parse_named() {
        const Token& tok = advance();
        const std::string& name = tok.text;
        if (name == "i") return Value::of(TruncatedSeries::constant(ctx_, Gaussian::i()));
        if (name == "exp" && peek().kind == Token::LParen) {
            advance();
            std::size_t pos = peek().pos;
            Value inner = parse_expression();
            require(Token::RParen, "')'");
            if (inner.is_form()) throw SyntaxError(pos, "exp of a one-form");
            return Value::of(inner.scalar->exp_series());
        }
        if (name == "d" && peek().kind == Token::LParen) {
            advance();
            std::size_t pos = peek().pos;
            Value inner = parse_expression();
            require(Token::RParen, "')'");
            if (inner.is_form()) throw SyntaxError(pos, "d of a one-form");
            return Value::of(ext_d(*inner.scalar));
        }
        if (name == ctx_.tname || ctx_.has_variable(name))
            return Value::of(TruncatedSeries::variable(ctx_, name));
        if (name.size() > 1 && name[0] == 'd') {
            std::string rest = name.substr(1);
            if (ctx_.has_variable(rest)) {
                OneForm f(ctx_);
                f.set_component(ctx_.index_of(rest),
                                TruncatedSeries::constant(ctx_, Gaussian(1)));
                return Value::of(std::move(f));
            }
            if (rest == ctx_.tname)
                throw SyntaxError(tok.pos, "the parameter has no basis covector");
        }
        throw UnknownVariable(name);
    }

    VarContext ctx_;
    std::vector<Token> toks_;
    std::size_t at_ = 0;
};

std::string trimmed(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

int parse_uint_field(const std::string& value, std::size_t pos, const std::string& key) {
    try {
        std::size_t used = 0;
        int v = std::stoi(value, &used);
        if (used != value.size() || v < 0) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw SyntaxError(pos, key + " must be a non-negative integer");
    }
}

} // namespace

OneForm parse_form(const std::string& text, const VarContext& ctx) {
    Parser p(text, ctx);
    Value v = p.parse_expression();
    p.expect_end();
    if (v.is_form()) return std::move(*v.form);
    if (v.scalar->is_zero()) return OneForm::zero(ctx);
    throw SyntaxError(p.end_pos(), "expression is a scalar, not a one-form");
}

TruncatedSeries parse_scalar(const std::string& text, const VarContext& ctx) {
    Parser p(text, ctx);
    Value v = p.parse_expression();
    p.expect_end();
    if (v.is_form()) throw SyntaxError(p.end_pos(), "expression is a one-form, not a scalar");
    return std::move(*v.scalar);
}

InputProblem parse_input_text(const std::string& text) {
    std::map<std::string, std::pair<std::string, std::size_t>> fields;
    std::size_t offset = 0;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::size_t line_start = offset;
        offset += line.size() + 1;
        std::string body = trimmed(line);
        if (body.empty() || body[0] == '#') continue;
        std::size_t eq = body.find('=');
        if (eq == std::string::npos)
            throw SyntaxError(line_start, "expected `key = value`");
        std::string key = trimmed(body.substr(0, eq));
        std::string value = trimmed(body.substr(eq + 1));
        if (key != "n" && key != "mode" && key != "omega" && key != "deg" && key != "tdeg")
            throw SyntaxError(line_start, "unknown key `" + key + "`");
        if (fields.count(key)) throw SyntaxError(line_start, "duplicate key `" + key + "`");
        if (value.empty()) throw SyntaxError(line_start, "empty value for `" + key + "`");
        std::size_t lead = line.find_first_not_of(" \t");
        std::size_t value_start =
            line_start + line.find_first_not_of(" \t", lead + eq + 1);
        fields[key] = {value, value_start};
    }

    for (const char* required : {"n", "mode", "omega"})
        if (!fields.count(required))
            throw MissingAssignment(std::string("input lacks `") + required + "`");

    int n = parse_uint_field(fields["n"].first, fields["n"].second, "n");
    if (n < 2) throw SyntaxError(fields["n"].second, "n must be at least 2");
    int D = fields.count("deg") ? parse_uint_field(fields["deg"].first, fields["deg"].second, "deg") : 10;
    int J = fields.count("tdeg") ? parse_uint_field(fields["tdeg"].first, fields["tdeg"].second, "tdeg") : 4;

    const std::string& mode = fields["mode"].first;
    bool center = mode == "center";
    if (!center && mode != "saddle")
        throw SyntaxError(fields["mode"].second, "mode must be `saddle` or `center`");

    VarContext ctx = center ? VarContext::center(n, D, J) : VarContext::saddle(n, D, J);
    OneForm omega = OneForm::zero(ctx);
    try {
        omega = parse_form(fields["omega"].first, ctx);
    } catch (const SyntaxError& e) {
        // Rebase the position from the expression to the whole input text.
        throw SyntaxError(fields["omega"].second + e.position(), e.detail());
    }
    InputProblem prob(ctx, std::move(omega));
    prob.center = center;
    prob.omega_text = fields["omega"].first;
    return prob;
}

InputProblem parse_input_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidPath("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_input_text(buf.str());
}

} // namespace saddleform
