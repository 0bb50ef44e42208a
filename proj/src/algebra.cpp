#include "tcn/algebra.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "tcn/error.hpp"

namespace tcn {

namespace {

bool odd(long v) { return (v % 2) != 0; }

// sum_t c_t * (basis_t * rhs_basis)
SparseVector right_multiply(const Algebra& alg, const SparseVector& lhs, std::size_t rhs)
{
    std::vector<Term> acc;
    for (const auto& t : lhs.terms()) {
        for (const SparseVector prod = alg.multiply_basis(t.index, rhs); const auto& p : prod.terms())
            acc.push_back({p.index, t.coeff * p.coeff});
    }
    return SparseVector::from_terms(alg.field(), std::move(acc));
}

SparseVector left_multiply(const Algebra& alg, std::size_t lhs, const SparseVector& rhs)
{
    std::vector<Term> acc;
    for (const auto& t : rhs.terms()) {
        for (const SparseVector prod = alg.multiply_basis(lhs, t.index); const auto& p : prod.terms())
            acc.push_back({p.index, t.coeff * p.coeff});
    }
    return SparseVector::from_terms(alg.field(), std::move(acc));
}

std::string names(const Algebra& alg, std::initializer_list<std::size_t> idx)
{
    std::string out = "(";
    bool first = true;
    for (auto i : idx) {
        if (!first) out += ", ";
        out += alg.basis_name(i);
        first = false;
    }
    return out + ")";
}

std::vector<std::string> generator_names(int m)
{
    if (m <= 3) {
        static const char* letters[] = {"x", "y", "z"};
        return std::vector<std::string>(letters, letters + m);
    }
    std::vector<std::string> out;
    for (int i = 1; i <= m; ++i) out.push_back("x" + std::to_string(i));
    return out;
}

// F[x]/(x^{m+1}) with deg x = d.
AlgebraPtr truncated_polynomial(int m, int d, const Field& field)
{
    std::vector<BasisElement> basis{{"1", 0}, {"x", d}};
    for (int i = 2; i <= m; ++i) basis.push_back({"x^" + std::to_string(i), i * d});
    AlgebraBuilder b(field, basis, 0);
    for (int i = 1; i <= m; ++i) {
        for (int j = 1; i + j <= m; ++j)
            b.set_product(i, j, SparseVector::unit(field, i + j));
    }
    return b.build();
}

}  // namespace

// ---------------------------------------------------------------- Element

Element::Element(std::shared_ptr<const Algebra> algebra, SparseVector coeffs)
    : algebra_(std::move(algebra)), coeffs_(std::move(coeffs))
{
    if (!algebra_) throw AlgebraMismatch("element without algebra");
    if (!(coeffs_.field() == algebra_->field()))
        throw FieldError("element coefficients over the wrong field");
    if (!coeffs_.is_zero() && coeffs_.terms().back().index >= algebra_->dim())
        throw InputError("element index outside the algebra basis");
}

Element Element::zero(std::shared_ptr<const Algebra> algebra)
{
    const Field f = algebra->field();
    return Element(std::move(algebra), SparseVector(f));
}

Element Element::unit(std::shared_ptr<const Algebra> algebra)
{
    const std::size_t u = algebra->unit_index();
    return basis(std::move(algebra), u);
}

Element Element::basis(std::shared_ptr<const Algebra> algebra, std::size_t index)
{
    const Field f = algebra->field();
    return Element(std::move(algebra), SparseVector::unit(f, index));
}

std::optional<int> Element::degree() const
{
    if (is_zero()) return std::nullopt;
    const int d = algebra_->degree(coeffs_.terms().front().index);
    for (const auto& t : coeffs_.terms()) {
        if (algebra_->degree(t.index) != d) return std::nullopt;
    }
    return d;
}

void Element::require_same_algebra(const Element& rhs) const
{
    if (algebra_ != rhs.algebra_) throw AlgebraMismatch("elements belong to different algebras");
}

Element Element::operator+(const Element& rhs) const
{
    require_same_algebra(rhs);
    return Element(algebra_, coeffs_ + rhs.coeffs_);
}

Element Element::operator-(const Element& rhs) const
{
    require_same_algebra(rhs);
    return Element(algebra_, coeffs_ - rhs.coeffs_);
}

Element Element::operator-() const { return Element(algebra_, -coeffs_); }

void Algebra::multiply_basis_into(std::size_t lhs, std::size_t rhs, const Scalar& factor,
                                  std::vector<Term>& out) const
{
    for (const SparseVector prod = multiply_basis(lhs, rhs); const auto& p : prod.terms())
        out.push_back({p.index, factor * p.coeff});
}

Element Element::operator*(const Element& rhs) const
{
    require_same_algebra(rhs);
    std::vector<Term> acc;
    for (const auto& a : coeffs_.terms()) {
        for (const auto& b : rhs.coeffs_.terms())
            algebra_->multiply_basis_into(a.index, b.index, a.coeff * b.coeff, acc);
    }
    return Element(algebra_, SparseVector::from_terms(field(), std::move(acc)));
}

Element Element::scaled(const Scalar& factor) const
{
    return Element(algebra_, coeffs_.scaled(factor));
}

Element Element::pow(int exponent) const
{
    if (exponent < 0) throw InputError("negative exponent");
    Element out = unit(algebra_);
    for (int i = 0; i < exponent; ++i) out = out * *this;
    return out;
}

bool Element::operator==(const Element& rhs) const
{
    return algebra_ == rhs.algebra_ && coeffs_ == rhs.coeffs_;
}

std::string Element::to_string() const
{
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : coeffs_.terms()) {
        std::string c = t.coeff.to_string();
        bool negative = !c.empty() && c[0] == '-';
        if (negative) c.erase(0, 1);
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        if (c != "1") os << c << "*";
        os << algebra_->basis_name(t.index);
        first = false;
    }
    return os.str();
}

// ----------------------------------------------------------- GradedAlgebra

GradedAlgebra::GradedAlgebra(Field field, std::vector<BasisElement> basis, std::size_t unit_index,
                             ProductTable products)
    : field_(field), basis_(std::move(basis)), unit_(unit_index), products_(std::move(products))
{
    if (basis_.empty()) throw InputError("algebra basis is empty");
    if (unit_ >= basis_.size()) throw InputError("unit index outside the basis");
    for (const auto& b : basis_) {
        if (b.degree < 0) throw InputError("basis element '" + b.name + "' has negative degree");
        top_degree_ = std::max(top_degree_, b.degree);
    }
    const std::size_t n = basis_.size();
    for (auto it = products_.begin(); it != products_.end();) {
        if (it->first >= n * n) throw InputError("product entry outside the basis");
        if (!(it->second.field() == field_)) throw FieldError("product entry over the wrong field");
        if (!it->second.is_zero() && it->second.terms().back().index >= n)
            throw InputError("product result outside the basis");
        if (it->second.is_zero())
            it = products_.erase(it);
        else
            ++it;
    }
}

SparseVector GradedAlgebra::multiply_basis(std::size_t lhs, std::size_t rhs) const
{
    auto it = products_.find(lhs * basis_.size() + rhs);
    if (it == products_.end()) return SparseVector(field_);
    return it->second;
}

std::optional<std::size_t> GradedAlgebra::find(const std::string& name) const
{
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (basis_[i].name == name) return i;
    }
    return std::nullopt;
}

bool GradedAlgebra::has_reduced_part() const
{
    return std::any_of(basis_.begin(), basis_.end(), [](const auto& b) { return b.degree > 0; });
}

// --------------------------------------------------------- AlgebraBuilder

AlgebraBuilder::AlgebraBuilder(Field field, std::vector<BasisElement> basis, std::size_t unit_index)
    : field_(field), basis_(std::move(basis)), unit_(unit_index)
{
}

AlgebraBuilder& AlgebraBuilder::set_product(std::size_t lhs, std::size_t rhs, SparseVector result)
{
    const std::size_t n = basis_.size();
    if (lhs >= n || rhs >= n) throw InputError("product operand outside the basis");
    products_.insert_or_assign(lhs * n + rhs, std::move(result));
    return *this;
}

AlgebraPtr AlgebraBuilder::build() const
{
    const std::size_t n = basis_.size();
    GradedAlgebra::ProductTable table = products_;
    for (const auto& [key, value] : products_) {
        const std::size_t i = key / n, j = key % n;
        const std::size_t mirror = j * n + i;
        if (table.count(mirror)) continue;
        const bool negate = odd(long(basis_.at(i).degree) * basis_.at(j).degree);
        table.emplace(mirror, negate ? -value : value);
    }
    if (unit_ < n) {
        for (std::size_t b = 0; b < n; ++b) {
            table.try_emplace(unit_ * n + b, SparseVector::unit(field_, b));
            table.try_emplace(b * n + unit_, SparseVector::unit(field_, b));
        }
    }
    return std::make_shared<const GradedAlgebra>(field_, basis_, unit_, std::move(table));
}

// -------------------------------------------------------------- validate

std::string to_string(Violation::Kind kind)
{
    switch (kind) {
    case Violation::Kind::UnitDegree: return "unit-degree";
    case Violation::Kind::UnitLaw: return "unit-law";
    case Violation::Kind::DegreeAdditivity: return "degree-additivity";
    case Violation::Kind::GradedCommutativity: return "graded-commutativity";
    case Violation::Kind::Associativity: return "associativity";
    }
    return "unknown";
}

std::vector<Violation> validate(const GradedAlgebra& alg, bool check_associativity)
{
    std::vector<Violation> out;
    const std::size_t n = alg.dim();
    const std::size_t u = alg.unit_index();
    const Field& f = alg.field();

    if (alg.degree(u) != 0)
        out.push_back({Violation::Kind::UnitDegree, {u}, "unit '" + alg.basis_name(u) + "' has nonzero degree"});
    for (std::size_t b = 0; b < n; ++b) {
        if (b != u && alg.degree(b) == 0)
            out.push_back({Violation::Kind::UnitDegree, {b},
                           "second degree-0 basis element '" + alg.basis_name(b) + "'"});
    }

    for (std::size_t b = 0; b < n; ++b) {
        const SparseVector e = SparseVector::unit(f, b);
        if (!(alg.multiply_basis(u, b) == e) || !(alg.multiply_basis(b, u) == e))
            out.push_back({Violation::Kind::UnitLaw, {u, b},
                           "unit does not act as identity on '" + alg.basis_name(b) + "'"});
    }

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const int want = alg.degree(i) + alg.degree(j);
            for (const SparseVector prod = alg.multiply_basis(i, j); const auto& t : prod.terms()) {
                if (alg.degree(t.index) != want) {
                    out.push_back({Violation::Kind::DegreeAdditivity, {i, j},
                                   "product " + names(alg, {i, j}) + " has a term '" +
                                       alg.basis_name(t.index) + "' of degree " +
                                       std::to_string(alg.degree(t.index)) + ", expected " +
                                       std::to_string(want)});
                    break;
                }
            }
        }
    }

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            SparseVector ji = alg.multiply_basis(j, i);
            if (odd(long(alg.degree(i)) * alg.degree(j))) ji = -ji;
            if (!(alg.multiply_basis(i, j) == ji))
                out.push_back({Violation::Kind::GradedCommutativity, {i, j},
                               "b_i b_j != (-1)^{|b_i||b_j|} b_j b_i at " + names(alg, {i, j})});
        }
    }

    if (check_associativity) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                const SparseVector ij = alg.multiply_basis(i, j);
                for (std::size_t k = 0; k < n; ++k) {
                    const SparseVector lhs = right_multiply(alg, ij, k);
                    const SparseVector rhs = left_multiply(alg, i, alg.multiply_basis(j, k));
                    if (!(lhs == rhs))
                        out.push_back({Violation::Kind::Associativity, {i, j, k},
                                       "(b_i b_j) b_k != b_i (b_j b_k) at " + names(alg, {i, j, k})});
                }
            }
        }
    }
    return out;
}

// ------------------------------------------------------------------ spaces

void check_space(const SpaceDescriptor& space)
{
    if (!space.algebra) throw InputError("space '" + space.name + "' has no algebra");
    if (space.formal_dim < space.algebra->top_degree())
        throw InputError("space '" + space.name + "': formal dimension " +
                         std::to_string(space.formal_dim) + " below top cohomological degree " +
                         std::to_string(space.algebra->top_degree()));
    if (space.cat_upper) {
        if (*space.cat_upper < 0)
            throw InputError("space '" + space.name + "': cat upper bound is negative");
        if (*space.cat_upper == 0 && space.algebra->has_reduced_part())
            throw InputError("space '" + space.name +
                             "': cat upper bound 0 but the reduced cohomology is nonzero");
    }
}

SpaceDescriptor mk_point(const Field& field)
{
    AlgebraBuilder b(field, {{"1", 0}}, 0);
    return {"pt", b.build(), 0, kContractible, 0, 1, std::nullopt};
}

SpaceDescriptor mk_sphere(int k, const Field& field)
{
    if (k <= 0) throw InputError("sphere dimension must be positive, got " + std::to_string(k));
    AlgebraBuilder b(field, {{"1", 0}, {"u", k}}, 0);
    return {"S(" + std::to_string(k) + ")", b.build(), k, k - 1, 1, odd(k) ? 2 : 3, k};
}

SpaceDescriptor mk_torus(int m, const Field& field)
{
    if (m <= 0) throw InputError("torus rank must be positive, got " + std::to_string(m));
    if (m > 20) throw SizeLimitError("torus rank above 20 is not supported");
    const auto gens = generator_names(m);
    const bool short_names = m <= 3;

    // Monomials as generator bitmasks ordered by degree, then lexicographically
    // in their sorted generator lists.
    std::vector<unsigned> masks(std::size_t{1} << m);
    for (unsigned s = 0; s < masks.size(); ++s) masks[s] = s;
    auto members = [m](unsigned s) {
        std::vector<int> v;
        for (int i = 0; i < m; ++i)
            if (s & (1u << i)) v.push_back(i);
        return v;
    };
    std::sort(masks.begin(), masks.end(), [&](unsigned a, unsigned b) {
        const int pa = std::popcount(a), pb = std::popcount(b);
        if (pa != pb) return pa < pb;
        return members(a) < members(b);
    });
    std::vector<std::size_t> position(masks.size());
    std::vector<BasisElement> basis;
    for (std::size_t i = 0; i < masks.size(); ++i) {
        position[masks[i]] = i;
        std::string name;
        for (int g : members(masks[i])) name += (name.empty() || short_names ? "" : "·") + gens[g];
        basis.push_back({name.empty() ? "1" : name, std::popcount(masks[i])});
    }

    AlgebraBuilder b(field, basis, 0);
    for (unsigned s : masks) {
        for (unsigned t : masks) {
            if (s == 0 || t == 0 || (s & t)) continue;
            // Sign of reordering the concatenated generator word.
            int inversions = 0;
            for (int a : members(s))
                for (int c : members(t))
                    if (a > c) ++inversions;
            const Scalar c = odd(inversions) ? -Scalar::one(field) : Scalar::one(field);
            b.set_product(position[s], position[t],
                          SparseVector::unit(field, position[s | t]).scaled(c));
        }
    }
    std::optional<int> tc2;
    if (m == 2) tc2 = 3;
    return {"T(" + std::to_string(m) + ")", b.build(), m, 0, m, tc2, std::nullopt};
}

SpaceDescriptor mk_rp(int m)
{
    if (m <= 0) throw InputError("projective dimension must be positive, got " + std::to_string(m));
    return {"RP(" + std::to_string(m) + ")", truncated_polynomial(m, 1, Field::prime(2)), m, 0, m,
            std::nullopt, std::nullopt};
}

SpaceDescriptor mk_cp(int m, const Field& field)
{
    if (m <= 0) throw InputError("projective dimension must be positive, got " + std::to_string(m));
    return {"CP(" + std::to_string(m) + ")", truncated_polynomial(m, 2, field), 2 * m, 1, m,
            std::nullopt, std::nullopt};
}

AlgebraPtr tensor_product(const GradedAlgebra& lhs, const GradedAlgebra& rhs)
{
    if (!(lhs.field() == rhs.field()))
        throw FieldError("product of spaces over different fields: " + lhs.field().to_string() +
                         " and " + rhs.field().to_string());
    const Field f = lhs.field();
    const std::size_t nl = lhs.dim(), nr = rhs.dim();
    std::vector<BasisElement> basis;
    basis.reserve(nl * nr);
    for (std::size_t a = 0; a < nl; ++a) {
        for (std::size_t b = 0; b < nr; ++b)
            basis.push_back({lhs.basis_name(a) + "⊗" + rhs.basis_name(b), lhs.degree(a) + rhs.degree(b)});
    }
    AlgebraBuilder builder(f, basis, lhs.unit_index() * nr + rhs.unit_index());
    for (std::size_t a = 0; a < nl; ++a) {
        for (std::size_t b = 0; b < nr; ++b) {
            for (std::size_t c = 0; c < nl; ++c) {
                const SparseVector ac = lhs.multiply_basis(a, c);
                if (ac.is_zero()) continue;
                for (std::size_t d = 0; d < nr; ++d) {
                    const SparseVector bd = rhs.multiply_basis(b, d);
                    if (bd.is_zero()) continue;
                    const bool negate = odd(long(rhs.degree(b)) * lhs.degree(c));
                    std::vector<Term> terms;
                    for (const auto& x : ac.terms())
                        for (const auto& y : bd.terms())
                            terms.push_back({x.index * nr + y.index, x.coeff * y.coeff});
                    SparseVector v = SparseVector::from_terms(f, std::move(terms));
                    builder.set_product(a * nr + b, c * nr + d, negate ? -v : v);
                }
            }
        }
    }
    return builder.build();
}

SpaceDescriptor product(const SpaceDescriptor& lhs, const SpaceDescriptor& rhs)
{
    SpaceDescriptor out;
    out.name = lhs.name + "*" + rhs.name;
    out.algebra = tensor_product(*lhs.algebra, *rhs.algebra);
    out.formal_dim = lhs.formal_dim + rhs.formal_dim;
    out.connectivity = std::min(lhs.connectivity, rhs.connectivity);
    if (lhs.cat_upper && rhs.cat_upper) out.cat_upper = *lhs.cat_upper + *rhs.cat_upper;
    return out;
}

}  // namespace tcn
