#include "tcn/bounds.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "tcn/error.hpp"
#include "tcn/linalg.hpp"
#include "tcn/sphere_planner.hpp"

namespace tcn {

namespace {

// A spanning vector, remembered as the product of the zero divisors listed
// in `factors` (indices into the pool of candidate factors).
struct TrackedProduct {
    Element value;
    std::vector<std::size_t> factors;
};

}  // namespace

ZclResult zero_divisor_cup_length(const AlgebraPtr& base, int n, bool want_certificate, std::size_t max_dim,
                                  ZclMethod method)
{
    if (n <= 0) throw InputError("n must be positive, got " + std::to_string(n));
    ZclResult out;
    out.n = n;
    if (n == 1) return out;

    const TensorPtr tensor = tensor_power(base, n, max_dim);
    const int top = tensor->top_degree();

    // Level 0 is the unit for generator products and the kernel itself for
    // ideal powers (which then counts as level 1).
    std::vector<Element> pool;
    std::vector<TrackedProduct> current;
    if (method == ZclMethod::GeneratorProducts) {
        pool = canonical_zero_divisors(tensor);
        current.push_back({Element::unit(tensor), {}});
    } else {
        pool = kernel_of_diagonal(tensor).all();
        for (std::size_t i = 0; i < pool.size(); ++i) current.push_back({pool[i], {i}});
        if (current.empty()) return out;
        out.m = 1;
    }
    if (pool.empty()) return out;

    for (;;) {
        std::map<int, EchelonBasis> spans;
        std::vector<TrackedProduct> next;
        for (const auto& w : current) {
            const int dw = *w.value.degree();
            for (std::size_t zi = 0; zi < pool.size(); ++zi) {
                const int d = dw + *pool[zi].degree();
                if (d > top) continue;
                Element p = pool[zi] * w.value;
                if (p.is_zero()) continue;
                auto& span = spans.try_emplace(d, tensor->field()).first->second;
                if (!span.insert(p.coeffs())) continue;
                std::vector<std::size_t> factors{zi};
                factors.insert(factors.end(), w.factors.begin(), w.factors.end());
                next.push_back({std::move(p), std::move(factors)});
            }
        }
        if (next.empty()) break;
        current = std::move(next);
        ++out.m;
    }

    if (want_certificate && out.m > 0) {
        const TrackedProduct& first = current.front();
        Certificate cert{tensor, {}, first.value};
        for (auto i : first.factors) cert.factors.push_back(pool[i]);
        out.certificate = std::move(cert);
    }
    return out;
}

std::string check_certificate(const Certificate& certificate)
{
    const TensorPtr& tensor = certificate.tensor;
    if (!tensor) return "certificate names no tensor power";
    if (certificate.factors.empty()) return "certificate has no factors";
    Element acc = Element::unit(tensor);
    for (std::size_t i = 0; i < certificate.factors.size(); ++i) {
        const Element& f = certificate.factors[i];
        if (f.algebra() != tensor) return "factor " + std::to_string(i) + " is not in this tensor power";
        if (!diagonal_pullback(tensor, f).is_zero())
            return "factor " + std::to_string(i) + " is not a zero divisor";
        acc = acc * f;
    }
    if (acc.is_zero()) return "factor product vanishes";
    if (certificate.product.algebra() != tensor) return "product is not in this tensor power";
    if (!(acc == certificate.product)) return "stored product differs from the recomputed product";
    return {};
}

std::string to_string(LowerSource source)
{
    return source == LowerSource::Zcl ? "zcl" : "nontrivial-cohomology";
}

LowerBound tc_lower(const SpaceDescriptor& space, int n, bool want_certificate, std::size_t max_dim)
{
    LowerBound out;
    out.zcl = zero_divisor_cup_length(space.algebra, n, want_certificate, max_dim);
    out.value = out.zcl.m + 1;
    out.source = LowerSource::Zcl;
    if (n >= 2 && space.algebra->has_reduced_part() && n > out.value) {
        out.value = n;
        out.source = LowerSource::NontrivialCohomology;
    }
    return out;
}

UpperBound tc_upper(const SpaceDescriptor& space, int n)
{
    if (n < 2) throw InputError("upper bounds need n >= 2, got " + std::to_string(n));
    if (!space.cat_upper)
        throw InputError("space '" + space.name +
                         "' has no cat upper bound; supply meta.cat_upper (or meta.dim) in the algebra file");
    UpperBound out;
    out.upper_cat = n * *space.cat_upper + 1;
    out.value = out.upper_cat;
    if (space.tc2_known) {
        out.upper_growth = n * *space.tc2_known - n + 1;
        out.value = std::min(out.value, *out.upper_growth);
    }
    return out;
}

BoundReport bounds_report(const SpaceDescriptor& space, int n, bool want_certificate, std::size_t max_dim)
{
    if (n < 2) throw InputError("bounds need n >= 2, got " + std::to_string(n));
    BoundReport r;
    r.space = space.name;
    r.n = n;
    r.field = space.algebra->field();

    const UpperBound upper = tc_upper(space, n);
    LowerBound lower = tc_lower(space, n, want_certificate, max_dim);
    r.lower = lower.value;
    r.lower_source = lower.source;
    r.zcl = std::move(lower.zcl);
    r.upper = upper.value;
    r.upper_cat = upper.upper_cat;
    r.upper_growth = upper.upper_growth;
    if (space.sphere_dim && *space.sphere_dim % 2 == 1) r.planner_upper = domain_count(*space.sphere_dim, n);

    if (r.lower > r.upper) {
        std::string msg = "inconsistent metadata for '" + space.name + "' at n=" + std::to_string(n) +
                          ": lower bound " + std::to_string(r.lower) + " (zcl " + std::to_string(r.zcl.m) +
                          " over " + r.field.to_string() + ") exceeds upper bound " + std::to_string(r.upper) +
                          " derived from cat_upper=" + std::to_string(*space.cat_upper);
        if (space.tc2_known) msg += ", tc2=" + std::to_string(*space.tc2_known);
        throw MetadataError(msg);
    }
    if (r.lower == r.upper) r.exact = r.lower;
    return r;
}

GapRecord gap_demo(int n)
{
    if (n < 3) throw InputError("gap comparison needs n >= 3 (at n = 2 both spaces have TC_2 = 3)");
    const Field q = Field::rationals();
    GapRecord g;
    g.n = n;
    g.sphere = bounds_report(mk_sphere(2, q), n);
    g.torus = bounds_report(mk_torus(2, q), n);
    if (!g.sphere.exact || *g.sphere.exact != n + 1)
        throw std::logic_error("S(2) at n=" + std::to_string(n) + " is not exactly n+1");
    g.sphere_exact = *g.sphere.exact;
    g.torus_lower = g.torus.lower;
    if (g.torus_lower < 2 * n - 1 || g.torus_lower <= g.sphere_exact)
        throw std::logic_error("T(2) lower bound " + std::to_string(g.torus_lower) + " fails to exceed " +
                               std::to_string(g.sphere_exact) + " at n=" + std::to_string(n));
    return g;
}

}  // namespace tcn
