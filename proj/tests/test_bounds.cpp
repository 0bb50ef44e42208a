#include <doctest.h>

#include <random>

#include "support/oracles.hpp"
#include "tcn/algebra_io.hpp"
#include "tcn/bounds.hpp"
#include "tcn/error.hpp"

using namespace tcn;

namespace {

const Field Q = Field::rationals();

std::string data(const char* name) { return std::string(TCN_TEST_DATA) + "/" + name; }

std::vector<SpaceDescriptor> small_spaces()
{
    return {mk_point(Q),      mk_sphere(1, Q), mk_sphere(2, Q), mk_sphere(3, Q),
            mk_torus(2, Q),   mk_rp(2),        mk_rp(3),        mk_cp(2, Q),
            mk_sphere(2, Field::prime(2)), product(mk_sphere(1, Q), mk_sphere(2, Q))};
}

std::size_t ipow(std::size_t b, int n)
{
    std::size_t r = 1;
    while (n-- > 0) r *= b;
    return r;
}

}  // namespace

TEST_CASE("zcl of spheres")
{
    const AlgebraPtr s2 = mk_sphere(2, Q).algebra;
    const ZclResult r = zero_divisor_cup_length(s2, 2, true);
    CHECK(r.m == 2);
    REQUIRE(r.certificate.has_value());
    CHECK(r.certificate->factors.size() == 2);
    const TensorPtr t = tensor_power(s2, 2);
    const Element top = Element::basis(t, t->encode({1, 1}));
    const Element& p = r.certificate->product;
    REQUIRE(p.coeffs().size() == 1);
    CHECK(p.coeffs().terms()[0].index == top.coeffs().terms()[0].index);

    // ū = u⊗1 − 1⊗u squares to −2·u⊗u.
    const Element u = Element::basis(s2, 1);
    const Element ubar = slot_class(t, u, 1) - slot_class(t, u, 2);
    CHECK(ubar * ubar == top.scaled(Scalar(Q, -2)));

    CHECK(zero_divisor_cup_length(s2, 3).m == 3);
    CHECK(zero_divisor_cup_length(mk_sphere(3, Q).algebra, 3).m == 2);
    CHECK(testing::brute_force_zcl(s2, 3) == 3);
    CHECK(testing::brute_force_zcl(mk_sphere(3, Q).algebra, 3) == 2);
}

TEST_CASE("zcl edge cases")
{
    for (int n = 1; n <= 6; ++n) CHECK(zero_divisor_cup_length(mk_point(Q).algebra, n).m == 0);
    CHECK(zero_divisor_cup_length(mk_torus(2, Q).algebra, 1).m == 0);
    CHECK_THROWS_AS(zero_divisor_cup_length(mk_torus(2, Q).algebra, 0), InputError);
    CHECK_THROWS_AS(zero_divisor_cup_length(mk_torus(2, Q).algebra, 12, false, 1000), SizeLimitError);
}

TEST_CASE("torus certificates")
{
    const AlgebraPtr t2 = mk_torus(2, Q).algebra;
    CHECK(zero_divisor_cup_length(t2, 2).m == 2);
    for (int n : {3, 4}) {
        const ZclResult r = zero_divisor_cup_length(t2, n, true);
        CHECK(r.m >= 2 * (n - 1));
        REQUIRE(r.certificate.has_value());
        CHECK(static_cast<int>(r.certificate->factors.size()) == r.m);
        CHECK(check_certificate(*r.certificate) == "");
        CHECK(r.certificate->tensor->n() == n);
    }

    // The explicit product (x_2 − x_1)⋯(x_n − x_1)(y_2 − y_1)⋯(y_n − y_1).
    for (int n = 2; n <= 4; ++n) {
        const TensorPtr t = tensor_power(t2, n);
        const Element x = Element::basis(t2, 1), y = Element::basis(t2, 2);
        Element p = Element::unit(t);
        for (int i = 2; i <= n; ++i) p = p * (slot_class(t, x, i) - slot_class(t, x, 1));
        for (int i = 2; i <= n; ++i) p = p * (slot_class(t, y, i) - slot_class(t, y, 1));
        CHECK_FALSE(p.is_zero());
    }
}

TEST_CASE("certificate checker rejects bad certificates")
{
    const AlgebraPtr s2 = mk_sphere(2, Q).algebra;
    const ZclResult r = zero_divisor_cup_length(s2, 2, true);
    REQUIRE(r.certificate.has_value());
    const TensorPtr own = r.certificate->tensor;
    CHECK(check_certificate(*r.certificate) == "");

    Certificate bad = *r.certificate;
    bad.product = bad.product.scaled(Scalar(Q, 3));
    CHECK(check_certificate(bad) != "");

    Certificate not_zero_divisor = *r.certificate;
    not_zero_divisor.factors[0] = Element::basis(own, own->encode({1, 0}));
    CHECK(check_certificate(not_zero_divisor) != "");

    // Elements of a different tensor power object do not mix.
    Certificate foreign = *r.certificate;
    foreign.tensor = tensor_power(s2, 2);
    CHECK(check_certificate(foreign) != "");

    CHECK(check_certificate(Certificate{own, {}, Element::unit(own)}) != "");
    CHECK(check_certificate(Certificate{nullptr, r.certificate->factors, r.certificate->product}) != "");
}

TEST_CASE("ideal-power iteration agrees with the brute-force oracle")
{
    for (const auto& s : small_spaces()) {
        for (int n = 2; n <= 6 && ipow(s.algebra->dim(), n) <= 64; ++n) {
            CAPTURE(s.name);
            CAPTURE(n);
            const int m = zero_divisor_cup_length(s.algebra, n).m;
            CHECK(m == testing::brute_force_zcl(s.algebra, n));
            CHECK(m == zero_divisor_cup_length(s.algebra, n, false, kDefaultMaxTensorDim,
                                               ZclMethod::KernelIdealPowers)
                           .m);
        }
    }
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 12; ++trial) {
        const Field f = trial % 3 == 2 ? Field::prime(2) : Q;
        const AlgebraPtr a = testing::random_valid_algebra(rng, f);
        for (int n = 2; n <= 6 && ipow(a->dim(), n) <= 64; ++n) {
            const int m = zero_divisor_cup_length(a, n).m;
            CHECK(m == testing::brute_force_zcl(a, n));
            CHECK(m == zero_divisor_cup_length(a, n, false, kDefaultMaxTensorDim, ZclMethod::KernelIdealPowers).m);
        }
    }
}

TEST_CASE("zcl is monotone in n and respects the degree cap")
{
    std::vector<AlgebraPtr> algebras;
    for (const auto& s : small_spaces()) algebras.push_back(s.algebra);
    std::mt19937_64 rng(37);
    for (int i = 0; i < 6; ++i) algebras.push_back(testing::random_valid_algebra(rng, Q));
    for (const auto& a : algebras) {
        int previous = 0;
        for (int n = 2; n <= 4; ++n) {
            const int m = zero_divisor_cup_length(a, n).m;
            CHECK(m >= previous);
            CHECK(m <= n * a->top_degree());
            if (a->has_reduced_part()) CHECK(m >= n - 1);
            previous = m;
        }
    }
}

TEST_CASE("even spheres reach the degree cap pattern")
{
    for (int k : {2, 4, 6})
        for (int n = 2; n <= 6; ++n) CHECK(zero_divisor_cup_length(mk_sphere(k, Q).algebra, n).m == n);
}

TEST_CASE("field sensitivity")
{
    CHECK(zero_divisor_cup_length(mk_sphere(2, Field::prime(2)).algebra, 2).m == 1);
    CHECK(zero_divisor_cup_length(mk_sphere(2, Field::prime(3)).algebra, 2).m == 2);
    // (1-n)n! = -6 at n = 3 survives mod 5.
    CHECK(zero_divisor_cup_length(mk_sphere(2, Field::prime(5)).algebra, 3).m == 3);
    for (std::uint64_t p : {2, 3}) {
        const AlgebraPtr s2 = mk_sphere(2, Field::prime(p)).algebra;
        CHECK(zero_divisor_cup_length(s2, 3).m == testing::brute_force_zcl(s2, 3));
    }
}

TEST_CASE("lower bounds")
{
    const LowerBound s3 = tc_lower(mk_sphere(3, Q), 4);
    CHECK(s3.value == 4);
    CHECK(s3.zcl.m == 3);
    CHECK(tc_lower(mk_sphere(2, Q), 3).value == 4);
    const LowerBound pt = tc_lower(mk_point(Q), 5);
    CHECK(pt.value == 1);
    CHECK(pt.source == LowerSource::Zcl);
    CHECK(to_string(LowerSource::NontrivialCohomology) == "nontrivial-cohomology");

    // Over F_2 the even-sphere zcl at n = 3 drops to n - 1; ties report zcl.
    const LowerBound f2 = tc_lower(mk_sphere(2, Field::prime(2)), 3);
    CHECK(f2.zcl.m == 2);
    CHECK(f2.value == 3);
    CHECK(f2.source == LowerSource::Zcl);
}

TEST_CASE("upper bounds")
{
    const UpperBound s2 = tc_upper(mk_sphere(2, Q), 3);
    CHECK(s2.upper_cat == 4);
    CHECK(s2.upper_growth == 7);
    CHECK(s2.value == 4);

    const UpperBound t2 = tc_upper(mk_torus(2, Q), 2);
    CHECK(t2.upper_cat == 5);
    CHECK(t2.upper_growth == 5);
    CHECK(t2.value == 5);

    const UpperBound s3 = tc_upper(mk_sphere(3, Q), 2);
    CHECK(s3.upper_cat == 3);
    CHECK(s3.upper_growth == 3);
    CHECK(s3.value == 3);

    SpaceDescriptor no_cat = mk_sphere(2, Q);
    no_cat.cat_upper.reset();
    CHECK_THROWS_AS(tc_upper(no_cat, 2), InputError);
    CHECK_THROWS_AS(tc_upper(mk_sphere(2, Q), 1), InputError);
}

TEST_CASE("bound reports")
{
    const BoundReport s2 = bounds_report(mk_sphere(2, Q), 3);
    CHECK(s2.lower == 4);
    CHECK(s2.upper == 4);
    CHECK(s2.exact == 4);
    CHECK(s2.field == Q);
    CHECK_FALSE(s2.planner_upper.has_value());

    const BoundReport s3 = bounds_report(mk_sphere(3, Q), 3);
    CHECK(s3.lower == 3);
    CHECK(s3.upper == 4);
    CHECK_FALSE(s3.exact.has_value());
    CHECK(s3.planner_upper == 3);

    const BoundReport t2 = bounds_report(mk_torus(2, Q), 3, true);
    CHECK(t2.lower >= 5);
    CHECK(t2.upper == 7);
    REQUIRE(t2.zcl.certificate.has_value());
    CHECK(t2.zcl.certificate->factors.size() == 4);

    const BoundReport f2 = bounds_report(mk_sphere(2, Field::prime(2)), 2);
    CHECK(f2.zcl.m == 1);
    CHECK(f2.lower == 2);
    CHECK(f2.upper == 3);
    CHECK(f2.field == Field::prime(2));

    CHECK_THROWS_AS(bounds_report(mk_sphere(2, Q), 1), InputError);
}

TEST_CASE("inconsistent metadata is an error")
{
    const SpaceDescriptor wrong = load_space(data("wrong_tc2.json"));
    try {
        bounds_report(wrong, 2);
        FAIL("expected a metadata error");
    } catch (const MetadataError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("tc2=1") != std::string::npos);
        CHECK(msg.find("lower bound 3") != std::string::npos);
    }

    SpaceDescriptor low_cat = mk_torus(2, Q);
    low_cat.cat_upper = 1;
    low_cat.tc2_known.reset();
    CHECK_THROWS_AS(bounds_report(low_cat, 3), MetadataError);
}

TEST_CASE("gap between S^2 and T^2")
{
    const GapRecord g3 = gap_demo(3);
    CHECK(g3.sphere_exact == 4);
    CHECK(g3.torus_lower == 5);
    CHECK(g3.sphere.exact == 4);
    CHECK(mk_sphere(2, Q).tc2_known == 3);
    CHECK(mk_torus(2, Q).tc2_known == 3);

    const GapRecord g4 = gap_demo(4);
    CHECK(g4.sphere_exact == 5);
    CHECK(g4.torus_lower == 7);

    const GapRecord g5 = gap_demo(5);
    CHECK(g5.sphere_exact == 6);
    CHECK(g5.torus_lower == 9);

    CHECK_THROWS_AS(gap_demo(2), InputError);
}
