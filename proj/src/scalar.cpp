#include "tcn/scalar.hpp"

#include <charconv>
#include <limits>
#include <numeric>
#include <optional>

#include "tcn/error.hpp"

namespace tcn {

namespace {

using u128 = unsigned __int128;

std::uint64_t reduce_mod(const mpz_class& value, std::uint64_t p)
{
    mpz_class r = value % mpz_class(std::to_string(p));
    if (r < 0) r += mpz_class(std::to_string(p));
    return std::stoull(r.get_str());
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p)
{
    std::uint64_t result = 1 % p;
    base %= p;
    while (exp > 0) {
        if (exp & 1) result = static_cast<std::uint64_t>(u128(result) * base % p);
        base = static_cast<std::uint64_t>(u128(base) * base % p);
        exp >>= 1;
    }
    return result;
}

mpz_class parse_integer(std::string_view text, std::string_view whole)
{
    std::string s(text);
    if (s.empty()) throw InputError("empty integer in scalar '" + std::string(whole) + "'");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw InputError("malformed scalar '" + std::string(whole) + "'");
    for (std::size_t i = start; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9')
            throw InputError("malformed scalar '" + std::string(whole) + "'");
    }
    if (s[0] == '+') s.erase(0, 1);
    return mpz_class(s);
}

}  // namespace

Field Field::prime(std::uint64_t p)
{
    mpz_class z(std::to_string(p));
    if (p < 2 || mpz_probab_prime_p(z.get_mpz_t(), 30) == 0)
        throw FieldError("field characteristic " + std::to_string(p) + " is not prime");
    return Field(Kind::Prime, p);
}

Field Field::parse(std::string_view text)
{
    if (text == "Q") return rationals();
    if (text.substr(0, 3) == "Fp:") {
        std::string_view digits = text.substr(3);
        std::uint64_t p = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
        if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size())
            throw InputError("malformed field '" + std::string(text) + "'");
        try {
            return prime(p);
        } catch (const FieldError& e) {
            throw InputError(e.what());
        }
    }
    throw InputError("unknown field '" + std::string(text) + "' (expected Q or Fp:<p>)");
}

std::string Field::to_string() const
{
    return kind_ == Kind::Rationals ? "Q" : "Fp:" + std::to_string(p_);
}

Scalar::Scalar(const Field& field, long value) : field_(field)
{
    if (field.kind() == Field::Kind::Rationals) {
        value_ = Small{value, 1};
        if (value == std::numeric_limits<long>::min()) value_ = mpq_class(value);
    } else if (field.characteristic() <= std::uint64_t(std::numeric_limits<long>::max())) {
        const auto p = static_cast<long>(field.characteristic());
        long r = value % p;
        value_ = std::uint64_t(r < 0 ? r + p : r);
    } else {
        value_ = reduce_mod(mpz_class(value), field.characteristic());
    }
}

Scalar::Scalar(const Field& field, const mpz_class& value) : field_(field)
{
    if (field.kind() == Field::Kind::Rationals)
        value_ = from_mpq(mpq_class(value));
    else
        value_ = reduce_mod(value, field.characteristic());
}

Scalar::Scalar(const Field& field, const mpz_class& num, const mpz_class& den) : field_(field)
{
    if (den == 0) throw FieldError("zero denominator");
    if (field.kind() == Field::Kind::Rationals) {
        mpq_class q(num, den);
        q.canonicalize();
        value_ = from_mpq(std::move(q));
    } else {
        *this = Scalar(field, num) / Scalar(field, den);
    }
}

Scalar::Value Scalar::from_mpq(mpq_class q)
{
    const mpz_class& num = q.get_num();
    const mpz_class& den = q.get_den();
    if (mpz_fits_slong_p(num.get_mpz_t()) && mpz_fits_slong_p(den.get_mpz_t())) {
        const long a = num.get_si();
        if (a != std::numeric_limits<std::int64_t>::min()) return Small{a, den.get_si()};
    }
    return q;
}

namespace {

using Small64 = std::int64_t;
constexpr Small64 kMin64 = std::numeric_limits<Small64>::min();

mpq_class to_mpq(Small64 num, Small64 den)
{
    mpq_class q;
    mpz_set_si(q.get_num_mpz_t(), num);
    mpz_set_si(q.get_den_mpz_t(), den);
    return q;
}

// Reduced a/b·c/d, or nullopt on overflow.
std::optional<std::pair<Small64, Small64>> small_mul(Small64 a, Small64 b, Small64 c, Small64 d)
{
    const Small64 g1 = std::gcd(a, d);
    const Small64 g2 = std::gcd(c, b);
    if (g1 > 1) { a /= g1; d /= g1; }
    if (g2 > 1) { c /= g2; b /= g2; }
    Small64 num, den;
    if (__builtin_mul_overflow(a, c, &num) || __builtin_mul_overflow(b, d, &den) || num == kMin64)
        return std::nullopt;
    return std::pair{num, den};
}

std::optional<std::pair<Small64, Small64>> small_add(Small64 a, Small64 b, Small64 c, Small64 d)
{
    Small64 num, den;
    if (b == d) {
        if (__builtin_add_overflow(a, c, &num)) return std::nullopt;
        den = b;
    } else {
        Small64 ad, cb;
        if (__builtin_mul_overflow(a, d, &ad) || __builtin_mul_overflow(c, b, &cb) ||
            __builtin_add_overflow(ad, cb, &num) || __builtin_mul_overflow(b, d, &den))
            return std::nullopt;
    }
    if (num == kMin64) return std::nullopt;
    if (num == 0) return std::pair{Small64{0}, Small64{1}};
    if (den != 1) {
        const Small64 g = std::gcd(num, den);
        num /= g;
        den /= g;
    }
    return std::pair{num, den};
}

}  // namespace

Scalar Scalar::parse(const Field& field, std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Scalar(field, parse_integer(text, text));
    mpz_class num = parse_integer(text.substr(0, slash), text);
    mpz_class den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) throw InputError("zero denominator in scalar '" + std::string(text) + "'");
    try {
        return Scalar(field, num, den);
    } catch (const FieldError& e) {
        throw InputError("scalar '" + std::string(text) + "': " + e.what());
    }
}

bool Scalar::is_zero() const
{
    if (auto s = std::get_if<Small>(&value_)) return s->num == 0;
    if (auto r = std::get_if<std::uint64_t>(&value_)) return *r == 0;
    return false;
}

bool Scalar::is_one() const
{
    if (auto s = std::get_if<Small>(&value_)) return s->num == 1 && s->den == 1;
    if (auto r = std::get_if<std::uint64_t>(&value_)) return *r == 1;
    return false;
}

void Scalar::require_same_field(const Scalar& rhs) const
{
    if (!(field_ == rhs.field_))
        throw FieldError("mixed-field operation: " + field_.to_string() + " vs " +
                         rhs.field_.to_string());
}

Scalar Scalar::operator+(const Scalar& rhs) const
{
    require_same_field(rhs);
    if (auto r = std::get_if<std::uint64_t>(&value_)) {
        const std::uint64_t p = field_.characteristic();
        u128 s = u128(*r) + std::get<std::uint64_t>(rhs.value_);
        return Scalar(Raw{}, field_, static_cast<std::uint64_t>(s % p));
    }
    auto x = std::get_if<Small>(&value_);
    auto y = std::get_if<Small>(&rhs.value_);
    if (x && y) {
        if (auto s = small_add(x->num, x->den, y->num, y->den)) return Scalar(Raw{}, field_, Small{s->first, s->second});
    }
    return Scalar(Raw{}, field_, from_mpq(rational() + rhs.rational()));
}

Scalar Scalar::operator-() const
{
    if (auto s = std::get_if<Small>(&value_)) return Scalar(Raw{}, field_, Small{-s->num, s->den});
    if (auto q = std::get_if<mpq_class>(&value_)) return Scalar(Raw{}, field_, from_mpq(-*q));
    const std::uint64_t r = std::get<std::uint64_t>(value_);
    return Scalar(Raw{}, field_, r == 0 ? std::uint64_t{0} : field_.characteristic() - r);
}

Scalar Scalar::operator-(const Scalar& rhs) const
{
    require_same_field(rhs);
    return *this + (-rhs);
}

Scalar Scalar::operator*(const Scalar& rhs) const
{
    require_same_field(rhs);
    if (auto r = std::get_if<std::uint64_t>(&value_)) {
        u128 m = u128(*r) * std::get<std::uint64_t>(rhs.value_);
        return Scalar(Raw{}, field_, static_cast<std::uint64_t>(m % field_.characteristic()));
    }
    auto x = std::get_if<Small>(&value_);
    auto y = std::get_if<Small>(&rhs.value_);
    if (x && y) {
        if (auto s = small_mul(x->num, x->den, y->num, y->den)) return Scalar(Raw{}, field_, Small{s->first, s->second});
    }
    return Scalar(Raw{}, field_, from_mpq(rational() * rhs.rational()));
}

Scalar Scalar::inverse() const
{
    if (is_zero()) throw FieldError("inverse of zero");
    if (auto s = std::get_if<Small>(&value_))
        return Scalar(Raw{}, field_, s->num < 0 ? Small{-s->den, -s->num} : Small{s->den, s->num});
    if (auto q = std::get_if<mpq_class>(&value_)) {
        mpq_class inv = 1 / *q;
        inv.canonicalize();
        return Scalar(Raw{}, field_, from_mpq(std::move(inv)));
    }
    const std::uint64_t p = field_.characteristic();
    return Scalar(Raw{}, field_, pow_mod(std::get<std::uint64_t>(value_), p - 2, p));
}

bool Scalar::operator==(const Scalar& rhs) const
{
    return field_ == rhs.field_ && value_ == rhs.value_;
}

mpq_class Scalar::rational() const
{
    if (auto s = std::get_if<Small>(&value_)) return to_mpq(s->num, s->den);
    if (auto q = std::get_if<mpq_class>(&value_)) return *q;
    throw FieldError("rational() on a prime-field scalar");
}

std::uint64_t Scalar::residue() const
{
    if (auto r = std::get_if<std::uint64_t>(&value_)) return *r;
    throw FieldError("residue() on a rational scalar");
}

std::string Scalar::to_string() const
{
    if (auto s = std::get_if<Small>(&value_))
        return s->den == 1 ? std::to_string(s->num) : std::to_string(s->num) + "/" + std::to_string(s->den);
    if (auto q = std::get_if<mpq_class>(&value_)) return q->get_str();
    return std::to_string(std::get<std::uint64_t>(value_));
}

}  // namespace tcn
