#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tcn/linalg.hpp"
#include "tcn/scalar.hpp"

namespace tcn {

// Anything with a finite homogeneous basis and a bilinear multiplication
// given on basis pairs. Implemented by tabulated algebras and by lazily
// multiplied tensor powers.
class Algebra {
public:
    virtual ~Algebra() = default;

    virtual const Field& field() const = 0;
    virtual std::size_t dim() const = 0;
    virtual int degree(std::size_t index) const = 0;
    virtual std::string basis_name(std::size_t index) const = 0;
    virtual std::size_t unit_index() const = 0;
    virtual int top_degree() const = 0;
    virtual SparseVector multiply_basis(std::size_t lhs, std::size_t rhs) const = 0;
    // Appends factor * (lhs · rhs) to out, unsorted and possibly with repeats.
    virtual void multiply_basis_into(std::size_t lhs, std::size_t rhs, const Scalar& factor,
                                     std::vector<Term>& out) const;
};

// Sparse field-coefficient vector over an algebra basis.
class Element {
public:
    Element(std::shared_ptr<const Algebra> algebra, SparseVector coeffs);

    static Element zero(std::shared_ptr<const Algebra> algebra);
    static Element unit(std::shared_ptr<const Algebra> algebra);
    static Element basis(std::shared_ptr<const Algebra> algebra, std::size_t index);

    const std::shared_ptr<const Algebra>& algebra() const { return algebra_; }
    const SparseVector& coeffs() const& { return coeffs_; }
    SparseVector coeffs() && { return std::move(coeffs_); }
    const Field& field() const { return algebra_->field(); }

    bool is_zero() const { return coeffs_.is_zero(); }
    // Degree when all terms share one degree; nullopt for zero or mixed elements.
    std::optional<int> degree() const;

    Element operator+(const Element& rhs) const;
    Element operator-(const Element& rhs) const;
    Element operator-() const;
    Element operator*(const Element& rhs) const;
    Element scaled(const Scalar& factor) const;
    Element pow(int exponent) const;

    // Structural equality; elements of distinct algebra objects are unequal.
    bool operator==(const Element& rhs) const;

    // e.g. "2*x⊗1 - 1/3*y"
    std::string to_string() const;

private:
    void require_same_algebra(const Element& rhs) const;

    std::shared_ptr<const Algebra> algebra_;
    SparseVector coeffs_;
};

struct BasisElement {
    std::string name;
    int degree = 0;

    bool operator==(const BasisElement&) const = default;
};

// Finite-dimensional graded algebra presented by basis and structure
// constants. The constructor checks only structural sanity (indices, fields,
// nonnegative degrees); algebraic laws are checked by validate().
class GradedAlgebra : public Algebra {
public:
    using ProductTable = std::unordered_map<std::size_t, SparseVector>;  // key lhs*dim+rhs

    GradedAlgebra(Field field, std::vector<BasisElement> basis, std::size_t unit_index,
                  ProductTable products);

    const Field& field() const override { return field_; }
    std::size_t dim() const override { return basis_.size(); }
    int degree(std::size_t index) const override { return basis_.at(index).degree; }
    std::string basis_name(std::size_t index) const override { return basis_.at(index).name; }
    std::size_t unit_index() const override { return unit_; }
    int top_degree() const override { return top_degree_; }
    SparseVector multiply_basis(std::size_t lhs, std::size_t rhs) const override;

    const std::vector<BasisElement>& basis() const { return basis_; }
    std::optional<std::size_t> find(const std::string& name) const;
    // True when some basis element has positive degree.
    bool has_reduced_part() const;

private:
    Field field_;
    std::vector<BasisElement> basis_;
    std::size_t unit_;
    ProductTable products_;
    int top_degree_ = 0;
};

using AlgebraPtr = std::shared_ptr<const GradedAlgebra>;

// Collects structure constants, then fills in missing entries from the
// graded-commutativity sign and the unit law.
class AlgebraBuilder {
public:
    AlgebraBuilder(Field field, std::vector<BasisElement> basis, std::size_t unit_index);

    AlgebraBuilder& set_product(std::size_t lhs, std::size_t rhs, SparseVector result);
    // Missing (j,i) entries become (-1)^{|i||j|} (i,j); missing unit products
    // become the identity.
    AlgebraPtr build() const;

private:
    Field field_;
    std::vector<BasisElement> basis_;
    std::size_t unit_;
    std::unordered_map<std::size_t, SparseVector> products_;
};

struct Violation {
    enum class Kind { UnitDegree, UnitLaw, DegreeAdditivity, GradedCommutativity, Associativity };

    Kind kind;
    std::vector<std::size_t> indices;  // offending basis pair or triple
    std::string message;
};

std::string to_string(Violation::Kind kind);

// Reports every violated law. Associativity is O(dim^3) products and may be
// skipped by the caller.
std::vector<Violation> validate(const GradedAlgebra& algebra, bool check_associativity = true);

// H*(X; F) together with geometric metadata.
struct SpaceDescriptor {
    std::string name;
    AlgebraPtr algebra;
    int formal_dim = 0;
    int connectivity = 0;
    std::optional<int> cat_upper;
    std::optional<int> tc2_known;
    // Set for spheres so odd spheres can attach the geodesic planner's domain count.
    std::optional<int> sphere_dim;
};

// Throws InputError when formal_dim < top degree or the cat bound is
// impossible (negative, or zero on a space with nonzero reduced cohomology).
void check_space(const SpaceDescriptor& space);

// Connectivity recorded for contractible spaces.
inline constexpr int kContractible = 1 << 20;

SpaceDescriptor mk_point(const Field& field);
SpaceDescriptor mk_sphere(int k, const Field& field);
SpaceDescriptor mk_torus(int m, const Field& field);
SpaceDescriptor mk_rp(int m);
SpaceDescriptor mk_cp(int m, const Field& field);

// Graded tensor product with Koszul sign (a⊗b)(c⊗d) = (-1)^{|b||c|} ac⊗bd.
AlgebraPtr tensor_product(const GradedAlgebra& lhs, const GradedAlgebra& rhs);
SpaceDescriptor product(const SpaceDescriptor& lhs, const SpaceDescriptor& rhs);

}  // namespace tcn
