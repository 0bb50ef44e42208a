#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tcn/algebra.hpp"
#include "tcn/algebra_io.hpp"
#include "tcn/error.hpp"

namespace tcn {

// Parsed space expression. Product nodes hold exactly two operands and the
// grammar builds them left-associated.
struct SpaceExpr {
    enum class Kind { Sphere, Torus, RP, CP, Load, Product };

    Kind kind = Kind::Sphere;
    int arg = 0;       // Sphere/Torus/RP/CP
    std::string path;  // Load
    std::vector<SpaceExpr> operands;

    static SpaceExpr sphere(int k) { return {Kind::Sphere, k, {}, {}}; }
    static SpaceExpr torus(int m) { return {Kind::Torus, m, {}, {}}; }
    static SpaceExpr rp(int m) { return {Kind::RP, m, {}, {}}; }
    static SpaceExpr cp(int m) { return {Kind::CP, m, {}, {}}; }
    static SpaceExpr load(std::string p) { return {Kind::Load, 0, std::move(p), {}}; }
    static SpaceExpr product(SpaceExpr lhs, SpaceExpr rhs);

    bool operator==(const SpaceExpr&) const = default;
};

// Thrown by parse_space; `column` is 1-based.
class ParseError : public InputError {
public:
    ParseError(const std::string& message, std::size_t column);
    std::size_t column() const { return column_; }

private:
    std::size_t column_;
};

//   expr := term ('*' term)*
//   term := NAME '(' INT ')' | 'load(' PATH ')'     NAME ∈ {S, T, RP, CP}
// Whitespace between tokens is ignored; names are case-sensitive.
SpaceExpr parse_space(std::string_view text);

// Canonical text form. Right-nested products print flattened, since the
// grammar has no parentheses.
std::string pretty_print(const SpaceExpr& expr);

// Builds the descriptor. RP is always over F_2; other builders use `field`.
SpaceDescriptor evaluate(const SpaceExpr& expr, const Field& field, const LoadOptions& options = {});

}  // namespace tcn
