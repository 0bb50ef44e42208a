#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tcn/algebra.hpp"
#include "tcn/tensor.hpp"

namespace tcn {

// Explicit zero divisors whose product is nonzero.
struct Certificate {
    TensorPtr tensor;              // the tensor power the elements live in
    std::vector<Element> factors;  // each in ker d_n*
    Element product;               // factors multiplied left to right
};

struct ZclResult {
    int n = 0;
    int m = 0;  // zero-divisor cup-length
    std::optional<Certificate> certificate;
};

enum class ZclMethod {
    // Spans of products of k canonical zero divisors slot(b, i) − slot(b, n).
    // These generate ker d_n* as an ideal, so by graded commutativity the
    // k-th power of the kernel is the ideal generated by such products, and
    // it is nonzero exactly when one of them is.
    GeneratorProducts,
    // P_1 = ker d_n*, P_{k+1} = span{z·w : z in a kernel basis, w in a basis
    // of P_k}. Far larger intermediate spaces; kept as a cross-check.
    KernelIdealPowers,
};

// Largest m such that m elements of ker d_n* have a nonzero product. Spanning
// vectors are kept together with the factors that produced them, so the
// first surviving vector of the last nonzero level is the certificate.
// n = 1 yields m = 0.
ZclResult zero_divisor_cup_length(const AlgebraPtr& base, int n, bool want_certificate = false,
                                  std::size_t max_dim = kDefaultMaxTensorDim,
                                  ZclMethod method = ZclMethod::GeneratorProducts);

// Re-multiplies the factors, checks each lies in ker d_n*, and compares with
// the stored product. Returns an empty string when sound, else the reason.
std::string check_certificate(const Certificate& certificate);

enum class LowerSource { Zcl, NontrivialCohomology };
std::string to_string(LowerSource source);

struct LowerBound {
    int value = 1;
    LowerSource source = LowerSource::Zcl;
    ZclResult zcl;
};

// max(zcl + 1, n when the reduced cohomology is nonzero). n = 1 gives 1.
LowerBound tc_lower(const SpaceDescriptor& space, int n, bool want_certificate = false,
                    std::size_t max_dim = kDefaultMaxTensorDim);

struct UpperBound {
    int value = 0;
    int upper_cat = 0;                // n·cat + 1
    std::optional<int> upper_growth;  // n·TC_2 − n + 1
};

// Requires n >= 2. Throws InputError when the space carries no cat upper bound.
UpperBound tc_upper(const SpaceDescriptor& space, int n);

struct BoundReport {
    std::string space;
    int n = 0;
    Field field = Field::rationals();
    int lower = 1;
    LowerSource lower_source = LowerSource::Zcl;
    ZclResult zcl;
    int upper = 0;
    int upper_cat = 0;
    std::optional<int> upper_growth;
    std::optional<int> exact;
    // Odd spheres: number of domains of the geodesic planner, an upper bound
    // realized constructively rather than cohomologically.
    std::optional<int> planner_upper;
};

// Requires n >= 2. Throws MetadataError when lower > upper.
BoundReport bounds_report(const SpaceDescriptor& space, int n, bool want_certificate = false,
                          std::size_t max_dim = kDefaultMaxTensorDim);

struct GapRecord {
    int n = 0;
    BoundReport sphere;  // S^2
    BoundReport torus;   // T^2
    int sphere_exact = 0;
    int torus_lower = 0;
};

// Compares S^2 and T^2 (both with TC_2 = 3) at level n >= 3 over Q. Throws
// std::logic_error if S^2 is not exactly n+1 or T^2 does not exceed it.
GapRecord gap_demo(int n);

}  // namespace tcn
