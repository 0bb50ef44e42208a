#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace tcn {

// Coefficient field: the rationals or a prime field F_p.
class Field {
public:
    enum class Kind { Rationals, Prime };

    static Field rationals() { return Field(Kind::Rationals, 0); }
    // Throws FieldError unless p is prime.
    static Field prime(std::uint64_t p);
    // Accepts "Q" or "Fp:<p>".
    static Field parse(std::string_view text);

    Kind kind() const { return kind_; }
    // 0 for Q.
    std::uint64_t characteristic() const { return p_; }
    std::string to_string() const;

    bool operator==(const Field&) const = default;

private:
    Field(Kind kind, std::uint64_t p) : kind_(kind), p_(p) {}

    Kind kind_;
    std::uint64_t p_;
};

// An exact field element. Rationals are kept in canonical reduced form with a
// positive denominator, inline while numerator and denominator fit in int64
// and as GMP rationals otherwise; residues are kept in [0, p). Equality is
// structural.
class Scalar {
public:
    Scalar(const Field& field, long value);
    Scalar(const Field& field, const mpz_class& value);
    Scalar(const Field& field, const mpz_class& num, const mpz_class& den);

    static Scalar zero(const Field& field) { return Scalar(field, 0L); }
    static Scalar one(const Field& field) { return Scalar(field, 1L); }
    // "int" or "int/int".
    static Scalar parse(const Field& field, std::string_view text);

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& rhs) const;
    Scalar operator-(const Scalar& rhs) const;
    Scalar operator*(const Scalar& rhs) const;
    Scalar operator/(const Scalar& rhs) const { return *this * rhs.inverse(); }
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& rhs) { return *this = *this + rhs; }
    Scalar& operator-=(const Scalar& rhs) { return *this = *this - rhs; }
    Scalar& operator*=(const Scalar& rhs) { return *this = *this * rhs; }

    Scalar inverse() const;

    bool operator==(const Scalar& rhs) const;

    // Valid only over Q.
    mpq_class rational() const;
    // Valid only over F_p.
    std::uint64_t residue() const;

    std::string to_string() const;

private:
    struct Small {
        std::int64_t num;
        std::int64_t den;
        bool operator==(const Small&) const = default;
    };
    using Value = std::variant<Small, mpq_class, std::uint64_t>;

    struct Raw {};
    Scalar(Raw, const Field& field, Value value) : field_(field), value_(std::move(value)) {}
    // Canonical form of a reduced rational.
    static Value from_mpq(mpq_class q);

    void require_same_field(const Scalar& rhs) const;

    Field field_;
    Value value_;
};

}  // namespace tcn
