#pragma once

// Test-only reference computations. Nothing here calls into the tensor or
// bounds modules: tensors are dense-indexed maps multiplied with a separately
// written Koszul sign, and kernels come from a plain dense elimination.

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "tcn/algebra.hpp"

namespace tcn::testing {

using DenseElement = std::map<std::size_t, Scalar>;  // tuple index -> nonzero coefficient

class ReferenceTensor {
public:
    ReferenceTensor(AlgebraPtr base, int n);

    std::size_t dim() const { return tuples_.size(); }
    int degree(std::size_t index) const { return degrees_[index]; }
    const std::vector<std::size_t>& tuple(std::size_t index) const { return tuples_[index]; }
    std::size_t index_of(const std::vector<std::size_t>& tuple) const;

    DenseElement multiply(const DenseElement& a, const DenseElement& b) const;
    // n-fold product in the base, as coefficients over base indices.
    DenseElement collapse(const DenseElement& a) const;
    // Kernel of collapse, one basis per positive degree, flattened.
    std::vector<DenseElement> kernel() const;

    const AlgebraPtr& base() const { return base_; }
    int n() const { return n_; }

private:
    AlgebraPtr base_;
    int n_;
    std::vector<std::vector<std::size_t>> tuples_;
    std::vector<int> degrees_;
};

// Largest m such that some product of m kernel-basis elements is nonzero,
// by exhaustive level-by-level search over all products (deduplicated up to
// a scalar multiple, which cannot change whether later products vanish).
int brute_force_zcl(const AlgebraPtr& base, int n);

// Random graded-commutative, associative, unital algebra with at most
// max_dim basis elements over `field`, found by rejection sampling against
// validate().
AlgebraPtr random_valid_algebra(std::mt19937_64& rng, const Field& field, std::size_t max_dim = 4);

}  // namespace tcn::testing
