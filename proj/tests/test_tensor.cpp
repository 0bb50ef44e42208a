#include <doctest.h>

#include <random>

#include "support/oracles.hpp"
#include "tcn/error.hpp"
#include "tcn/tensor.hpp"

using namespace tcn;

namespace {

const Field Q = Field::rationals();

Element base_named(const AlgebraPtr& alg, const std::string& name)
{
    return Element::basis(alg, alg->find(name).value());
}

Element tensor_basis(const TensorPtr& t, std::initializer_list<const char*> names)
{
    std::vector<std::size_t> slots;
    for (const char* n : names) slots.push_back(t->base()->find(n).value());
    return Element::basis(t, t->encode(slots));
}

Element random_homogeneous(std::mt19937_64& rng, const std::shared_ptr<const Algebra>& alg, int degree,
                           std::size_t max_terms = 6)
{
    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < alg->dim(); ++i)
        if (alg->degree(i) == degree) candidates.push_back(i);
    std::shuffle(candidates.begin(), candidates.end(), rng);
    if (candidates.size() > max_terms) candidates.resize(max_terms);
    std::uniform_int_distribution<long> coeff(-4, 4);
    std::vector<Term> terms;
    for (auto i : candidates) terms.push_back({i, Scalar(alg->field(), coeff(rng))});
    return Element(alg, SparseVector::from_terms(alg->field(), std::move(terms)));
}

int random_degree(std::mt19937_64& rng, const Algebra& alg)
{
    std::uniform_int_distribution<std::size_t> pick(0, alg.dim() - 1);
    return alg.degree(pick(rng));
}

testing::DenseElement to_dense(const Element& e)
{
    testing::DenseElement out;
    for (const auto& t : e.coeffs().terms()) out.emplace(t.index, t.coeff);
    return out;
}

std::vector<AlgebraPtr> sample_bases()
{
    return {mk_sphere(1, Q).algebra, mk_sphere(2, Q).algebra, mk_torus(2, Q).algebra, mk_rp(2).algebra,
            mk_cp(2, Q).algebra, product(mk_sphere(1, Q), mk_sphere(2, Q)).algebra};
}

}  // namespace

TEST_CASE("tensor power shape")
{
    const AlgebraPtr t2 = mk_torus(2, Q).algebra;
    const TensorPtr t = tensor_power(t2, 3);
    CHECK(t->dim() == 64);
    CHECK(t->top_degree() == 6);
    CHECK(t->basis_name(t->unit_index()) == "1⊗1⊗1");
    CHECK(t->decode(t->encode({1, 2, 3})) == std::vector<std::size_t>{1, 2, 3});
    CHECK(t->basis_in_degree(6).size() == 1);
    CHECK_THROWS_AS(tensor_power(t2, 0), InputError);
    CHECK_THROWS_AS(tensor_power(t2, 10, 1000), SizeLimitError);
}

TEST_CASE("n = 1 reproduces the base algebra")
{
    for (const auto& base : sample_bases()) {
        const TensorPtr t = tensor_power(base, 1);
        REQUIRE(t->dim() == base->dim());
        for (std::size_t i = 0; i < base->dim(); ++i) {
            CHECK(t->degree(i) == base->degree(i));
            for (std::size_t j = 0; j < base->dim(); ++j) CHECK(t->multiply_basis(i, j) == base->multiply_basis(i, j));
        }
    }
}

TEST_CASE("Koszul signs on S^1 ⊗ S^1")
{
    const TensorPtr t = tensor_power(mk_sphere(1, Q).algebra, 2);
    const Element u1 = tensor_basis(t, {"u", "1"}), u2 = tensor_basis(t, {"1", "u"});
    const Element uu = tensor_basis(t, {"u", "u"});
    CHECK(u1 * u2 == uu);
    CHECK(u2 * u1 == -uu);
}

TEST_CASE("v^n pins the sign convention")
{
    for (int k : {2, 4}) {
        const AlgebraPtr base = mk_sphere(k, Q).algebra;
        const Element u = base_named(base, "u");
        for (int n = 2; n <= 5; ++n) {
            const TensorPtr t = tensor_power(base, n);
            Element v = slot_class(t, u, n).scaled(Scalar(Q, 1 - n));
            for (int i = 1; i < n; ++i) v = v + slot_class(t, u, i);
            const Element power = v.pow(n);

            mpz_class expected = 1 - n;
            for (int i = 2; i <= n; ++i) expected *= i;
            const Element top = Element::basis(t, t->encode(std::vector<std::size_t>(n, 1)));
            CHECK(power == top.scaled(Scalar(Q, expected)));
            CHECK(diagonal_pullback(t, v).is_zero());
        }
    }
    // The spelled-out n = 3 case.
    const AlgebraPtr s2 = mk_sphere(2, Q).algebra;
    const TensorPtr t = tensor_power(s2, 3);
    const Element u = base_named(s2, "u");
    const Element v = slot_class(t, u, 1) + slot_class(t, u, 2) - slot_class(t, u, 3).scaled(Scalar(Q, 2));
    CHECK(v.pow(3) == tensor_basis(t, {"u", "u", "u"}).scaled(Scalar(Q, -12)));
}

TEST_CASE("slot classes")
{
    const AlgebraPtr t2 = mk_torus(2, Q).algebra;
    const TensorPtr t = tensor_power(t2, 2);
    CHECK(slot_class(t, base_named(t2, "x"), 1) == tensor_basis(t, {"x", "1"}));
    CHECK(slot_class(t, Element::unit(t2), 2) == Element::unit(t));
    CHECK_THROWS_AS(slot_class(t, Element::unit(t2), 3), InputError);
    CHECK_THROWS_AS(slot_class(t, Element::unit(t2), 0), InputError);

    const AlgebraPtr s2 = mk_sphere(2, Q).algebra;
    const TensorPtr t3 = tensor_power(s2, 3);
    const Element c = slot_class(t3, base_named(s2, "u"), 3);
    CHECK(c == tensor_basis(t3, {"1", "1", "u"}));
    CHECK(c.degree() == 2);
}

TEST_CASE("diagonal pullback examples")
{
    const AlgebraPtr s2 = mk_sphere(2, Q).algebra;
    const TensorPtr t = tensor_power(s2, 2);
    const Element u = base_named(s2, "u");
    CHECK(diagonal_pullback(t, slot_class(t, u, 1) - slot_class(t, u, 2)).is_zero());

    const AlgebraPtr t2 = mk_torus(2, Q).algebra;
    const TensorPtr tt = tensor_power(t2, 2);
    CHECK(diagonal_pullback(tt, tensor_basis(tt, {"x", "y"})) == base_named(t2, "xy"));
    CHECK(diagonal_pullback(tt, tensor_basis(tt, {"y", "x"})) == -base_named(t2, "xy"));

    const TensorPtr other = tensor_power(t2, 2);
    CHECK_THROWS_AS(diagonal_pullback(other, tensor_basis(tt, {"x", "y"})), AlgebraMismatch);
}

TEST_CASE("multiplication agrees with the reference tensor")
{
    std::mt19937_64 rng(17);
    for (const auto& base : sample_bases()) {
        for (int n : {2, 3}) {
            const TensorPtr t = tensor_power(base, n);
            const testing::ReferenceTensor ref(base, n);
            for (int trial = 0; trial < 25; ++trial) {
                const Element a = random_homogeneous(rng, t, random_degree(rng, *t));
                const Element b = random_homogeneous(rng, t, random_degree(rng, *t));
                CHECK(to_dense(a * b) == ref.multiply(to_dense(a), to_dense(b)));
            }
        }
    }
}

TEST_CASE("diagonal pullback is a ring homomorphism")
{
    std::mt19937_64 rng(19);
    for (const auto& base : sample_bases()) {
        for (int n : {2, 3}) {
            const TensorPtr t = tensor_power(base, n);
            for (int trial = 0; trial < 25; ++trial) {
                const Element a = random_homogeneous(rng, t, random_degree(rng, *t));
                const Element b = random_homogeneous(rng, t, random_degree(rng, *t));
                CHECK(diagonal_pullback(t, a * b) == diagonal_pullback(t, a) * diagonal_pullback(t, b));
                CHECK(diagonal_pullback(t, a + b) == diagonal_pullback(t, a) + diagonal_pullback(t, b));
            }
            CHECK(diagonal_pullback(t, Element::unit(t)) == Element::unit(base));
        }
    }
}

TEST_CASE("tensor powers are graded commutative")
{
    std::mt19937_64 rng(23);
    for (const auto& base : sample_bases()) {
        const TensorPtr t = tensor_power(base, 3);
        for (int trial = 0; trial < 30; ++trial) {
            const int da = random_degree(rng, *t), db = random_degree(rng, *t);
            const Element a = random_homogeneous(rng, t, da), b = random_homogeneous(rng, t, db);
            const Element ba = b * a;
            CHECK(a * b == ((da * db) % 2 ? -ba : ba));
        }
    }
}

TEST_CASE("pullback after slot inclusion is the identity")
{
    for (const auto& base : sample_bases()) {
        const TensorPtr t = tensor_power(base, 3);
        for (std::size_t b = 0; b < base->dim(); ++b)
            for (int slot = 1; slot <= 3; ++slot)
                CHECK(diagonal_pullback(t, slot_class(t, Element::basis(base, b), slot)) == Element::basis(base, b));
    }
}

TEST_CASE("kernel of the diagonal")
{
    SUBCASE("S^2, n = 2")
    {
        const AlgebraPtr s2 = mk_sphere(2, Q).algebra;
        const TensorPtr t = tensor_power(s2, 2);
        const KernelBasis k = kernel_of_diagonal(t);
        REQUIRE(k.degrees.size() == 2);
        CHECK(k.degrees[0].degree == 2);
        REQUIRE(k.degrees[0].basis.size() == 1);
        const Element u = base_named(s2, "u");
        const Element expected = slot_class(t, u, 1) - slot_class(t, u, 2);
        const Element& z = k.degrees[0].basis[0];
        CHECK((z == expected || z == -expected));
        CHECK(k.degrees[1].degree == 4);
        CHECK(k.degrees[1].basis.size() == 1);
        CHECK(k.degrees[1].domain_dim == 1);
        CHECK(kernel_of_diagonal(t, 2).degrees.size() == 1);
    }
    SUBCASE("point")
    {
        for (int n = 1; n <= 5; ++n) CHECK(kernel_of_diagonal(tensor_power(mk_point(Q).algebra, n)).total_dim() == 0);
    }
    SUBCASE("dimensions match the reference and the rank identity")
    {
        for (const auto& base : sample_bases()) {
            for (int n : {2, 3}) {
                const TensorPtr t = tensor_power(base, n);
                const KernelBasis k = kernel_of_diagonal(t);
                std::size_t total = 0;
                for (const auto& d : k.degrees) {
                    CHECK(d.basis.size() + d.image_rank == d.domain_dim);
                    total += d.domain_dim;
                    for (const auto& e : d.basis) {
                        CHECK(diagonal_pullback(t, e).is_zero());
                        CHECK(e.degree() == d.degree);
                    }
                }
                CHECK(total + 1 == t->dim());  // only the unit lives in degree 0
                CHECK(k.total_dim() == testing::ReferenceTensor(base, n).kernel().size());
            }
        }
    }
}

TEST_CASE("canonical zero divisor products are nonzero")
{
    std::mt19937_64 rng(29);
    std::vector<AlgebraPtr> bases = sample_bases();
    for (int i = 0; i < 10; ++i) bases.push_back(testing::random_valid_algebra(rng, Q));
    for (const auto& base : bases) {
        for (int n = 2; n <= 4; ++n) {
            const TensorPtr t = tensor_power(base, n);
            for (std::size_t b = 0; b < base->dim(); ++b) {
                if (base->degree(b) == 0) continue;
                const Element v = Element::basis(base, b);
                Element product = Element::unit(t);
                for (int i = 1; i < n; ++i) product = product * (slot_class(t, v, i) - slot_class(t, v, n));
                CHECK_FALSE(product.is_zero());
                std::vector<std::size_t> slots(n, b);
                slots.back() = base->unit_index();
                const Scalar c = product.coeffs().at(t->encode(slots));
                CHECK((c == Scalar::one(base->field()) || c == -Scalar::one(base->field())));
            }
        }
    }
}

TEST_CASE("canonical zero divisors lie in the kernel")
{
    for (const auto& base : sample_bases()) {
        const TensorPtr t = tensor_power(base, 3);
        const auto gens = canonical_zero_divisors(t);
        CHECK(gens.size() == (base->dim() - 1) * 2);
        for (const auto& g : gens) CHECK(diagonal_pullback(t, g).is_zero());
    }
}
