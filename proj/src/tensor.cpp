#include "tcn/tensor.hpp"

#include <algorithm>

#include "tcn/error.hpp"

namespace tcn {

TensorAlgebra::TensorAlgebra(AlgebraPtr base, int n, std::size_t max_dim) : base_(std::move(base)), n_(n)
{
    if (!base_) throw InputError("tensor power of a null algebra");
    if (n <= 0) throw InputError("tensor power exponent must be positive, got " + std::to_string(n));
    const std::size_t b = base_->dim();
    std::size_t total = 1;
    for (int i = 0; i < n; ++i) {
        if (total > max_dim / b)
            throw SizeLimitError("tensor power dimension " + std::to_string(b) + "^" + std::to_string(n) +
                                 " exceeds the cap " + std::to_string(max_dim));
        total *= b;
    }
    degrees_.resize(total);
    for (std::size_t idx = 0; idx < total; ++idx) {
        int d = 0;
        for (std::size_t rest = idx, i = 0; i < std::size_t(n); ++i, rest /= b) d += base_->degree(rest % b);
        degrees_[idx] = d;
        by_degree_[d].push_back(idx);
    }
    unit_ = encode(std::vector<std::size_t>(n, base_->unit_index()));
    base_degrees_.resize(b);
    base_products_.resize(b * b);
    for (std::size_t i = 0; i < b; ++i) {
        base_degrees_[i] = base_->degree(i);
        for (std::size_t j = 0; j < b; ++j) base_products_[i * b + j] = base_->multiply_basis(i, j).terms();
    }
    top_degree_ = n * base_->top_degree();
}

std::vector<std::size_t> TensorAlgebra::decode(std::size_t index) const
{
    const std::size_t b = base_->dim();
    std::vector<std::size_t> slots(n_);
    for (int i = n_ - 1; i >= 0; --i) {
        slots[i] = index % b;
        index /= b;
    }
    return slots;
}

std::size_t TensorAlgebra::encode(const std::vector<std::size_t>& slots) const
{
    const std::size_t b = base_->dim();
    std::size_t index = 0;
    for (auto s : slots) index = index * b + s;
    return index;
}

const std::vector<std::size_t>& TensorAlgebra::basis_in_degree(int degree) const
{
    static const std::vector<std::size_t> empty;
    auto it = by_degree_.find(degree);
    return it == by_degree_.end() ? empty : it->second;
}

std::string TensorAlgebra::basis_name(std::size_t index) const
{
    std::string out;
    for (auto s : decode(index)) {
        if (!out.empty()) out += "⊗";
        out += base_->basis_name(s);
    }
    return out;
}

SparseVector TensorAlgebra::multiply_basis(std::size_t lhs, std::size_t rhs) const
{
    std::vector<Term> out;
    multiply_basis_into(lhs, rhs, Scalar::one(field()), out);
    return SparseVector::from_terms(field(), std::move(out));
}

void TensorAlgebra::multiply_basis_into(std::size_t lhs, std::size_t rhs, const Scalar& factor,
                                        std::vector<Term>& out) const
{
    const std::size_t b = base_->dim();
    thread_local std::vector<const std::vector<Term>*> slot_products;
    slot_products.assign(n_, nullptr);

    // Slots are read from n down to 1. Moving b_j leftward past a_{j+1},…,a_n
    // contributes |b_j| Σ_{i>j} |a_i| to the sign exponent.
    long sign_exp = 0;
    long a_suffix = 0;
    bool monomial = true;
    std::size_t index = 0, place = 1;
    for (int j = n_ - 1; j >= 0; --j, lhs /= b, rhs /= b) {
        const std::size_t aj = lhs % b, bj = rhs % b;
        sign_exp += a_suffix * base_degrees_[bj];
        a_suffix += base_degrees_[aj];
        const auto& p = base_products_[aj * b + bj];
        if (p.empty()) return;
        slot_products[j] = &p;
        if (p.size() == 1) {
            index += p.front().index * place;
            place *= b;
        } else {
            monomial = false;
        }
    }
    const Scalar sign = (sign_exp % 2) ? -factor : factor;

    if (monomial) {
        Scalar c = sign;
        for (const auto* p : slot_products)
            if (!p->front().coeff.is_one()) c *= p->front().coeff;
        out.push_back({index, std::move(c)});
        return;
    }

    thread_local std::vector<Term> acc, next;
    acc.assign(1, {0, sign});
    for (const auto* p : slot_products) {
        next.clear();
        for (const auto& t : acc)
            for (const auto& q : *p) next.push_back({t.index * b + q.index, t.coeff * q.coeff});
        std::swap(acc, next);
    }
    out.insert(out.end(), acc.begin(), acc.end());
}

TensorPtr tensor_power(AlgebraPtr base, int n, std::size_t max_dim)
{
    return std::make_shared<const TensorAlgebra>(std::move(base), n, max_dim);
}

Element slot_class(const TensorPtr& tensor, const Element& e, int slot)
{
    if (e.algebra() != tensor->base()) throw AlgebraMismatch("slot_class: element is not from the base algebra");
    if (slot < 1 || slot > tensor->n())
        throw InputError("slot " + std::to_string(slot) + " outside 1.." + std::to_string(tensor->n()));
    std::vector<std::size_t> slots(tensor->n(), tensor->base()->unit_index());
    std::vector<Term> terms;
    for (const auto& t : e.coeffs().terms()) {
        slots[slot - 1] = t.index;
        terms.push_back({tensor->encode(slots), t.coeff});
    }
    return Element(tensor, SparseVector::from_terms(tensor->field(), std::move(terms)));
}

namespace {

SparseVector diagonal_image(const TensorAlgebra& tensor, std::size_t index)
{
    const GradedAlgebra& base = *tensor.base();
    const auto slots = tensor.decode(index);
    SparseVector acc = SparseVector::unit(base.field(), slots[0]);
    for (std::size_t i = 1; i < slots.size() && !acc.is_zero(); ++i) {
        std::vector<Term> next;
        for (const auto& t : acc.terms())
            for (const SparseVector prod = base.multiply_basis(t.index, slots[i]); const auto& q : prod.terms())
                next.push_back({q.index, t.coeff * q.coeff});
        acc = SparseVector::from_terms(base.field(), std::move(next));
    }
    return acc;
}

}  // namespace

Element diagonal_pullback(const TensorPtr& tensor, const Element& e)
{
    if (e.algebra() != tensor) throw AlgebraMismatch("diagonal_pullback: element is not from this tensor power");
    SparseVector acc(tensor->field());
    for (const auto& t : e.coeffs().terms()) acc.axpy(t.coeff, diagonal_image(*tensor, t.index));
    return Element(tensor->base(), std::move(acc));
}

std::vector<Element> canonical_zero_divisors(const TensorPtr& tensor)
{
    const AlgebraPtr& base = tensor->base();
    std::vector<Element> out;
    for (std::size_t b = 0; b < base->dim(); ++b) {
        if (b == base->unit_index()) continue;
        const Element e = Element::basis(base, b);
        const Element last = slot_class(tensor, e, tensor->n());
        for (int i = 1; i < tensor->n(); ++i) out.push_back(slot_class(tensor, e, i) - last);
    }
    return out;
}

std::vector<Element> KernelBasis::all() const
{
    std::vector<Element> out;
    for (const auto& d : degrees) out.insert(out.end(), d.basis.begin(), d.basis.end());
    return out;
}

std::size_t KernelBasis::total_dim() const
{
    std::size_t n = 0;
    for (const auto& d : degrees) n += d.basis.size();
    return n;
}

KernelBasis kernel_of_diagonal(const TensorPtr& tensor, std::optional<int> max_degree)
{
    const Field& f = tensor->field();
    const int top = std::min(tensor->top_degree(), max_degree.value_or(tensor->top_degree()));
    KernelBasis out;
    for (int d = 1; d <= top; ++d) {
        const auto& domain = tensor->basis_in_degree(d);
        if (domain.empty()) continue;

        // Rows indexed by base basis elements, columns by the local position of
        // each degree-d tensor.
        const std::size_t base_dim = tensor->base()->dim();
        std::vector<std::vector<Term>> rows(base_dim);
        for (std::size_t col = 0; col < domain.size(); ++col) {
            const SparseVector image = diagonal_image(*tensor, domain[col]);
            for (const auto& t : image.terms()) rows[t.index].push_back({col, t.coeff});
        }
        SparseMatrix m(f, domain.size());
        for (auto& r : rows) {
            if (!r.empty()) m.rows.push_back(SparseVector::from_terms(f, std::move(r)));
        }

        DegreeKernel dk;
        dk.degree = d;
        dk.domain_dim = domain.size();
        dk.image_rank = row_reduce(m).rank;
        for (const auto& v : kernel_basis(m)) {
            std::vector<Term> terms;
            for (const auto& t : v.terms()) terms.push_back({domain[t.index], t.coeff});
            dk.basis.emplace_back(tensor, SparseVector::from_terms(f, std::move(terms)));
        }
        out.degrees.push_back(std::move(dk));
    }
    return out;
}

}  // namespace tcn
