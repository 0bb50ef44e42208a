#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "tcn/algebra.hpp"

namespace tcn {

// Default cap on (dim base)^n.
inline constexpr std::size_t kDefaultMaxTensorDim = 200000;

// H*(X)^{⊗n}, the cohomology model of X^n. Basis tensors are n-tuples of base
// indices in lexicographic order (slot 1 most significant). Products are
// computed on demand with the Koszul sign
//   (a_1⊗…⊗a_n)(b_1⊗…⊗b_n) = (-1)^{Σ_{i>j} |a_i||b_j|} a_1b_1⊗…⊗a_nb_n.
class TensorAlgebra : public Algebra {
public:
    TensorAlgebra(AlgebraPtr base, int n, std::size_t max_dim = kDefaultMaxTensorDim);

    const Field& field() const override { return base_->field(); }
    std::size_t dim() const override { return degrees_.size(); }
    int degree(std::size_t index) const override { return degrees_.at(index); }
    std::string basis_name(std::size_t index) const override;
    std::size_t unit_index() const override { return unit_; }
    int top_degree() const override { return top_degree_; }
    SparseVector multiply_basis(std::size_t lhs, std::size_t rhs) const override;
    void multiply_basis_into(std::size_t lhs, std::size_t rhs, const Scalar& factor,
                             std::vector<Term>& out) const override;

    const AlgebraPtr& base() const { return base_; }
    int n() const { return n_; }

    std::vector<std::size_t> decode(std::size_t index) const;
    std::size_t encode(const std::vector<std::size_t>& slots) const;
    // Basis indices of the given degree, increasing.
    const std::vector<std::size_t>& basis_in_degree(int degree) const;

private:
    AlgebraPtr base_;
    int n_;
    std::size_t unit_ = 0;
    int top_degree_ = 0;
    std::vector<int> degrees_;
    // Base products and degrees, dense by lhs * dim + rhs.
    std::vector<std::vector<Term>> base_products_;
    std::vector<int> base_degrees_;
    std::map<int, std::vector<std::size_t>> by_degree_;
};

using TensorPtr = std::shared_ptr<const TensorAlgebra>;

// Throws InputError for n <= 0, SizeLimitError when (dim base)^n > max_dim.
TensorPtr tensor_power(AlgebraPtr base, int n, std::size_t max_dim = kDefaultMaxTensorDim);

// 1⊗…⊗e⊗…⊗1 with e in slot `slot` (1-based): the pullback along the
// projection onto that factor.
Element slot_class(const TensorPtr& tensor, const Element& e, int slot);

// The diagonal pullback d_n*: a_1⊗…⊗a_n ↦ a_1⋯a_n, extended linearly.
Element diagonal_pullback(const TensorPtr& tensor, const Element& e);

struct DegreeKernel {
    int degree = 0;
    std::size_t domain_dim = 0;  // dimension of the degree-d part of the tensor power
    std::size_t image_rank = 0;
    std::vector<Element> basis;
};

// ker d_n* per positive degree, in increasing degree.
struct KernelBasis {
    std::vector<DegreeKernel> degrees;

    std::vector<Element> all() const;
    std::size_t total_dim() const;
};

// slot(b, i) − slot(b, n) for every non-unit base basis element b and slot
// i < n, ordered by b then i. These lie in ker d_n* and generate it as an
// ideal: modulo them every basic tensor a_1⊗…⊗a_n reduces to
// slot(a_1⋯a_n, n), on which d_n* is injective.
std::vector<Element> canonical_zero_divisors(const TensorPtr& tensor);

KernelBasis kernel_of_diagonal(const TensorPtr& tensor, std::optional<int> max_degree = std::nullopt);

}  // namespace tcn
