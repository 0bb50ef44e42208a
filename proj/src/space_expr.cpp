#include "tcn/space_expr.hpp"

#include <cctype>
#include <climits>

namespace tcn {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    SpaceExpr parse()
    {
        SpaceExpr expr = term();
        for (;;) {
            skip_ws();
            if (at_end()) break;
            if (peek() != '*') fail("expected '*' or end of input");
            ++pos_;
            expr = SpaceExpr::product(std::move(expr), term());
        }
        return expr;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    [[noreturn]] void fail(const std::string& message) const { fail_at(message, pos_); }
    [[noreturn]] void fail_at(const std::string& message, std::size_t pos) const
    {
        throw ParseError(message + " at column " + std::to_string(pos + 1), pos + 1);
    }

    void skip_ws()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    void expect(char c)
    {
        skip_ws();
        if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    SpaceExpr term()
    {
        skip_ws();
        if (at_end()) fail("expected a space name");
        const std::size_t start = pos_;
        while (!at_end() && std::isalpha(static_cast<unsigned char>(peek()))) ++pos_;
        const std::string_view name = text_.substr(start, pos_ - start);
        if (name.empty()) fail("expected a space name");

        if (name == "load") {
            expect('(');
            const std::size_t open = pos_;
            const std::size_t close = text_.find(')', open);
            if (close == std::string_view::npos) fail_at("unterminated load(", open - 1);
            std::string_view path = text_.substr(open, close - open);
            while (!path.empty() && std::isspace(static_cast<unsigned char>(path.front()))) path.remove_prefix(1);
            while (!path.empty() && std::isspace(static_cast<unsigned char>(path.back()))) path.remove_suffix(1);
            if (path.empty()) fail_at("empty path in load()", open);
            pos_ = close + 1;
            return SpaceExpr::load(std::string(path));
        }

        SpaceExpr::Kind kind;
        if (name == "S")
            kind = SpaceExpr::Kind::Sphere;
        else if (name == "T")
            kind = SpaceExpr::Kind::Torus;
        else if (name == "RP")
            kind = SpaceExpr::Kind::RP;
        else if (name == "CP")
            kind = SpaceExpr::Kind::CP;
        else
            fail_at("unknown space name '" + std::string(name) + "'", start);

        expect('(');
        skip_ws();
        const std::size_t arg_pos = pos_;
        bool negative = false;
        if (!at_end() && (peek() == '-' || peek() == '+')) {
            negative = peek() == '-';
            ++pos_;
        }
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
        long long value = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            value = value * 10 + (peek() - '0');
            if (value > INT_MAX) fail_at("integer argument too large", arg_pos);
            ++pos_;
        }
        if (negative) value = -value;
        if (value <= 0) fail_at("argument must be positive, got " + std::to_string(value), arg_pos);
        expect(')');
        return SpaceExpr{kind, static_cast<int>(value), {}, {}};
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

SpaceExpr SpaceExpr::product(SpaceExpr lhs, SpaceExpr rhs)
{
    SpaceExpr out{Kind::Product, 0, {}, {}};
    out.operands.push_back(std::move(lhs));
    out.operands.push_back(std::move(rhs));
    return out;
}

ParseError::ParseError(const std::string& message, std::size_t column) : InputError(message), column_(column) {}

SpaceExpr parse_space(std::string_view text)
{
    return Parser(text).parse();
}

std::string pretty_print(const SpaceExpr& expr)
{
    const std::string arg = "(" + std::to_string(expr.arg) + ")";
    switch (expr.kind) {
    case SpaceExpr::Kind::Sphere: return "S" + arg;
    case SpaceExpr::Kind::Torus: return "T" + arg;
    case SpaceExpr::Kind::RP: return "RP" + arg;
    case SpaceExpr::Kind::CP: return "CP" + arg;
    case SpaceExpr::Kind::Load: return "load(" + expr.path + ")";
    case SpaceExpr::Kind::Product: return pretty_print(expr.operands.at(0)) + "*" + pretty_print(expr.operands.at(1));
    }
    return {};
}

SpaceDescriptor evaluate(const SpaceExpr& expr, const Field& field, const LoadOptions& options)
{
    switch (expr.kind) {
    case SpaceExpr::Kind::Sphere: return mk_sphere(expr.arg, field);
    case SpaceExpr::Kind::Torus: return mk_torus(expr.arg, field);
    case SpaceExpr::Kind::RP: return mk_rp(expr.arg);
    case SpaceExpr::Kind::CP: return mk_cp(expr.arg, field);
    case SpaceExpr::Kind::Load: return load_space(expr.path, options);
    case SpaceExpr::Kind::Product: {
        const SpaceDescriptor lhs = evaluate(expr.operands.at(0), field, options);
        const SpaceDescriptor rhs = evaluate(expr.operands.at(1), field, options);
        if (!(lhs.algebra->field() == rhs.algebra->field()))
            throw InputError("cannot multiply " + lhs.name + " over " + lhs.algebra->field().to_string() + " with " +
                             rhs.name + " over " + rhs.algebra->field().to_string());
        return product(lhs, rhs);
    }
    }
    throw InputError("unknown expression kind");
}

}  // namespace tcn
