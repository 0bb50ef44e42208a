#include "tcn/sphere_planner.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "tcn/error.hpp"

namespace tcn {

namespace {

double norm(std::span<const double> v)
{
    double s = 0.0;
    for (double c : v) s += c * c;
    return std::sqrt(s);
}

double distance(std::span<const double> a, std::span<const double> b)
{
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(s);
}

double sum_norm(std::span<const double> a, std::span<const double> b)
{
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] + b[i]) * (a[i] + b[i]);
    return std::sqrt(s);
}

std::vector<double> normalize(std::vector<double> v)
{
    const double r = norm(v);
    for (double& c : v) c /= r;
    return v;
}

void require_odd(int k)
{
    if (k < 1 || k % 2 == 0)
        throw InputError("no planner for even spheres: S^" + std::to_string(k) +
                         " has no nonvanishing tangent field (TC_n(S^even) = n+1, so n domains cannot suffice)");
}

void require_same_dim(std::span<const SpherePoint> config)
{
    if (config.empty()) throw InputError("configuration is empty");
    for (const auto& p : config) {
        if (p.ambient_dim() != config.front().ambient_dim())
            throw InputError("configuration points have different dimensions");
    }
}

std::vector<double> random_unit(std::mt19937_64& rng, std::size_t dim)
{
    std::normal_distribution<double> gauss;
    std::vector<double> v(dim);
    do {
        for (double& c : v) c = gauss(rng);
    } while (norm(v) < 1e-12);
    return normalize(std::move(v));
}

SpherePoint perturb(const SpherePoint& x, double delta, std::mt19937_64& rng)
{
    auto dir = random_unit(rng, x.ambient_dim());
    std::vector<double> v = x.coords();
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += delta * dir[i];
    return SpherePoint::normalized(std::move(v));
}

SpherePoint negated(const SpherePoint& x)
{
    std::vector<double> v = x.coords();
    for (double& c : v) c = -c;
    return SpherePoint(std::move(v));
}

double plan_distance(const Plan& a, const Plan& b)
{
    double sup = 0.0;
    for (std::size_t i = 0; i < a.paths.size(); ++i)
        for (std::size_t s = 0; s < a.paths[i].samples.size(); ++s)
            sup = std::max(sup, distance(a.paths[i].samples[s], b.paths[i].samples[s]));
    return sup;
}

}  // namespace

SpherePoint::SpherePoint(std::vector<double> coords) : coords_(std::move(coords))
{
    if (coords_.size() < 2) throw InputError("sphere points need at least 2 coordinates");
    const double r = norm(coords_);
    if (!std::isfinite(r) || std::abs(r - 1.0) > kUnitTolerance)
        throw InputError("point is not on the unit sphere (norm " + std::to_string(r) + ")");
}

SpherePoint SpherePoint::normalized(std::vector<double> coords)
{
    if (coords.size() < 2) throw InputError("sphere points need at least 2 coordinates");
    const double r = norm(coords);
    if (!std::isfinite(r) || r == 0.0) throw InputError("cannot normalize a zero or non-finite vector");
    for (double& c : coords) c /= r;
    return SpherePoint(std::move(coords), Trusted{});
}

std::vector<double> tangent_field(const SpherePoint& x)
{
    require_odd(x.sphere_dim());
    std::vector<double> v(x.ambient_dim());
    for (std::size_t i = 0; i + 1 < v.size(); i += 2) {
        v[i] = -x[i + 1];
        v[i + 1] = x[i];
    }
    return v;
}

Path geodesic(const SpherePoint& x, const SpherePoint& y, int samples, double antipode_tol)
{
    if (samples < 2) throw InputError("a path needs at least 2 sample intervals");
    if (x.ambient_dim() != y.ambient_dim()) throw InputError("geodesic endpoints have different dimensions");
    if (!(antipode_tol > 0.0 && antipode_tol < 1.0)) throw InputError("antipode tolerance must lie in (0, 1)");

    const auto& a = x.coords();
    const auto& b = y.coords();
    const std::size_t dim = a.size();
    Path path;
    path.k = x.sphere_dim();
    path.samples.reserve(samples + 1);
    path.samples.push_back(a);

    const double pi = std::numbers::pi;
    if (sum_norm(a, b) < antipode_tol) {
        const auto v = tangent_field(x);
        for (int s = 1; s <= samples; ++s) {
            const double t = double(s) / samples;
            const double c = std::cos(pi * t), sn = std::sin(pi * t);
            std::vector<double> p(dim);
            for (std::size_t i = 0; i < dim; ++i) p[i] = c * a[i] + sn * v[i] + t * (b[i] + a[i]);
            path.samples.push_back(normalize(std::move(p)));
        }
    } else if (a == b) {
        for (int s = 1; s <= samples; ++s) path.samples.push_back(a);
    } else if (distance(a, b) < antipode_tol) {
        for (int s = 1; s <= samples; ++s) {
            const double t = double(s) / samples;
            std::vector<double> p(dim);
            for (std::size_t i = 0; i < dim; ++i) p[i] = (1 - t) * a[i] + t * b[i];
            path.samples.push_back(normalize(std::move(p)));
        }
    } else {
        const double theta = 2.0 * std::atan2(distance(a, b), sum_norm(a, b));
        const double st = std::sin(theta);
        for (int s = 1; s <= samples; ++s) {
            const double t = double(s) / samples;
            const double wa = std::sin((1 - t) * theta) / st, wb = std::sin(t * theta) / st;
            std::vector<double> p(dim);
            for (std::size_t i = 0; i < dim; ++i) p[i] = wa * a[i] + wb * b[i];
            path.samples.push_back(std::move(p));
        }
    }
    return path;
}

int domain_index(std::span<const SpherePoint> config, double antipode_tol)
{
    require_same_dim(config);
    int j = 0;
    for (std::size_t i = 1; i < config.size(); ++i) {
        if (sum_norm(config[i].coords(), config[0].coords()) < antipode_tol) ++j;
    }
    return j;
}

Plan plan(std::span<const SpherePoint> config, int samples, double antipode_tol)
{
    require_same_dim(config);
    const int k = config.front().sphere_dim();
    require_odd(k);
    Plan p;
    p.k = k;
    p.n = static_cast<int>(config.size());
    p.samples = samples;
    p.domain = domain_index(config, antipode_tol);
    for (const auto& xi : config) p.paths.push_back(geodesic(config.front(), xi, samples, antipode_tol));
    return p;
}

double endpoint_residual(const Plan& p, std::span<const SpherePoint> config)
{
    double worst = 0.0;
    for (std::size_t i = 0; i < p.paths.size() && i < config.size(); ++i)
        worst = std::max(worst, distance(p.paths[i].samples.back(), config[i].coords()));
    return worst;
}

int domain_count(int k, int n)
{
    require_odd(k);
    if (n < 1) throw InputError("n must be positive");
    return n;
}

ContinuityReport continuity_probe(const ContinuityOptions& o)
{
    require_odd(o.k);
    if (o.n < 1 || o.trials < 0) throw InputError("continuity probe needs n >= 1 and trials >= 0");
    std::mt19937_64 rng(o.seed);
    std::bernoulli_distribution coin(0.5);
    const std::size_t dim = std::size_t(o.k) + 1;

    ContinuityReport r;
    r.trials = o.trials;
    r.per_domain.assign(o.n, 0);
    for (int trial = 0; trial < o.trials; ++trial) {
        const bool keep_ties = trial % 2 == 1;
        std::vector<SpherePoint> config{SpherePoint::normalized(random_unit(rng, dim))};
        std::vector<bool> tied(o.n, false);
        for (int i = 1; i < o.n; ++i) {
            tied[i] = coin(rng);
            config.push_back(tied[i] ? negated(config[0]) : SpherePoint::normalized(random_unit(rng, dim)));
        }

        std::vector<SpherePoint> moved{perturb(config[0], o.delta, rng)};
        for (int i = 1; i < o.n; ++i)
            moved.push_back(keep_ties && tied[i] ? negated(moved[0]) : perturb(config[i], o.delta, rng));

        const Plan before = plan(config, o.samples, o.antipode_tol);
        const Plan after = plan(moved, o.samples, o.antipode_tol);
        r.max_endpoint_residual =
            std::max({r.max_endpoint_residual, endpoint_residual(before, config), endpoint_residual(after, moved)});
        if (before.domain != after.domain) {
            ++r.domain_changes;
            continue;
        }
        ++r.same_domain;
        ++r.per_domain[before.domain];
        const double sup = plan_distance(before, after);
        r.max_ratio = std::max(r.max_ratio, sup / o.delta);
        if (sup > o.lipschitz_constant * o.delta) ++r.violations;
    }
    return r;
}

}  // namespace tcn
