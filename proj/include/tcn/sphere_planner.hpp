#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace tcn {

// Unit vector in R^{k+1}.
class SpherePoint {
public:
    // Requires | |x| - 1 | <= 1e-9; throws InputError otherwise.
    explicit SpherePoint(std::vector<double> coords);
    // Scales x onto the sphere; throws InputError for the zero vector.
    static SpherePoint normalized(std::vector<double> coords);

    const std::vector<double>& coords() const { return coords_; }
    std::size_t ambient_dim() const { return coords_.size(); }
    int sphere_dim() const { return static_cast<int>(coords_.size()) - 1; }
    double operator[](std::size_t i) const { return coords_[i]; }

    bool operator==(const SpherePoint&) const = default;

private:
    struct Trusted {};
    SpherePoint(std::vector<double> coords, Trusted) : coords_(std::move(coords)) {}

    std::vector<double> coords_;
};

inline constexpr double kUnitTolerance = 1e-9;
inline constexpr double kDefaultAntipodeTolerance = 1e-8;

struct Path {
    int k = 0;
    // samples.size() = m + 1 for parameters t = 0, 1/m, ..., 1.
    std::vector<std::vector<double>> samples;
};

struct Plan {
    int k = 0;
    int n = 0;
    int domain = 0;
    int samples = 0;
    std::vector<Path> paths;  // path i runs from x_1 to x_i
};

// V(x) = (-x_2, x_1, -x_4, x_3, ...). Throws InputError for even k.
std::vector<double> tangent_field(const SpherePoint& x);

// Geodesic from x to y sampled at m+1 uniform parameters.
//   |x + y| < tol : semicircle cos(πt)x + sin(πt)V(x), leaving x along V(x)
//                   (odd k only);
//   x == y        : constant path;
//   |x - y| < tol : normalized chord (limit of the great-circle arc);
//   otherwise     : constant-speed great-circle arc.
// Inside the tolerance bands the paths are corrected so that they still end
// exactly at y.
Path geodesic(const SpherePoint& x, const SpherePoint& y, int samples,
              double antipode_tol = kDefaultAntipodeTolerance);

// Number of i in 2..n with x_i within tol of -x_1.
int domain_index(std::span<const SpherePoint> config, double antipode_tol = kDefaultAntipodeTolerance);

// Path i = geodesic(x_1, x_i); all paths share the bitwise-identical start x_1.
Plan plan(std::span<const SpherePoint> config, int samples, double antipode_tol = kDefaultAntipodeTolerance);

// Largest |path_i(1) - x_i| over the plan.
double endpoint_residual(const Plan& p, std::span<const SpherePoint> config);

// Number of domains U_0..U_{n-1} covering (S^k)^n. Throws InputError for even k.
int domain_count(int k, int n);

struct ContinuityOptions {
    int k = 3;
    int n = 3;
    int trials = 1000;
    double delta = 1e-4;
    int samples = 64;
    double antipode_tol = kDefaultAntipodeTolerance;
    double lipschitz_constant = 100.0;
    std::uint64_t seed = 1;
};

struct ContinuityReport {
    int trials = 0;
    int same_domain = 0;
    int domain_changes = 0;  // excluded pairs
    int violations = 0;      // same domain but sup distance > C·δ
    double max_ratio = 0.0;  // max over same-domain pairs of sup distance / δ
    double max_endpoint_residual = 0.0;
    std::vector<int> per_domain;  // same-domain pairs, by domain index
};

// Compares plans for random configurations and δ-perturbations of them. Trials
// alternate between generic perturbations (which may change the stratum) and
// perturbations that keep a random subset of points tied to -x_1.
ContinuityReport continuity_probe(const ContinuityOptions& options);

}  // namespace tcn
