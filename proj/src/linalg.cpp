#include "tcn/linalg.hpp"

#include <algorithm>

#include "tcn/error.hpp"

namespace tcn {

SparseVector SparseVector::from_terms(const Field& field, std::vector<Term> terms)
{
    std::sort(terms.begin(), terms.end(),
                     [](const Term& a, const Term& b) { return a.index < b.index; });
    SparseVector out(field);
    for (auto& t : terms) {
        if (!(t.coeff.field() == field)) throw FieldError("term field differs from vector field");
        if (!out.terms_.empty() && out.terms_.back().index == t.index) {
            out.terms_.back().coeff += t.coeff;
            if (out.terms_.back().coeff.is_zero()) out.terms_.pop_back();
        } else if (!t.coeff.is_zero()) {
            out.terms_.push_back(std::move(t));
        }
    }
    return out;
}

SparseVector SparseVector::unit(const Field& field, std::size_t index)
{
    SparseVector out(field);
    out.terms_.push_back({index, Scalar::one(field)});
    return out;
}

Scalar SparseVector::at(std::size_t index) const
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), index,
                               [](const Term& t, std::size_t i) { return t.index < i; });
    if (it != terms_.end() && it->index == index) return it->coeff;
    return Scalar::zero(field_);
}

std::optional<std::size_t> SparseVector::leading_index() const
{
    if (terms_.empty()) return std::nullopt;
    return terms_.front().index;
}

void SparseVector::axpy(const Scalar& factor, const SparseVector& other)
{
    if (!(other.field_ == field_)) throw FieldError("mixed-field vector operation");
    if (factor.is_zero() || other.is_zero()) return;
    std::vector<Term> merged;
    merged.reserve(terms_.size() + other.terms_.size());
    auto a = terms_.begin();
    auto b = other.terms_.begin();
    while (a != terms_.end() || b != other.terms_.end()) {
        if (b == other.terms_.end() || (a != terms_.end() && a->index < b->index)) {
            merged.push_back(std::move(*a++));
        } else if (a == terms_.end() || b->index < a->index) {
            merged.push_back({b->index, factor * b->coeff});
            ++b;
        } else {
            Scalar c = a->coeff + factor * b->coeff;
            if (!c.is_zero()) merged.push_back({a->index, std::move(c)});
            ++a;
            ++b;
        }
    }
    terms_ = std::move(merged);
}

SparseVector SparseVector::scaled(const Scalar& factor) const
{
    SparseVector out(field_);
    if (factor.is_zero()) return out;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back({t.index, t.coeff * factor});
    return out;
}

SparseVector SparseVector::operator+(const SparseVector& rhs) const
{
    SparseVector out = *this;
    out.axpy(Scalar::one(field_), rhs);
    return out;
}

SparseVector SparseVector::operator-(const SparseVector& rhs) const
{
    SparseVector out = *this;
    out.axpy(-Scalar::one(field_), rhs);
    return out;
}

SparseVector SparseVector::operator-() const
{
    return scaled(-Scalar::one(field_));
}

SparseVector EchelonBasis::reduce(const SparseVector& v) const
{
    SparseVector out = v;
    for (const auto& t : v.terms()) {
        auto it = rows_.find(t.index);
        if (it != rows_.end()) out.axpy(-t.coeff, it->second);
    }
    return out;
}

bool EchelonBasis::insert(const SparseVector& v)
{
    if (!(v.field() == field_)) throw FieldError("mixed-field row");
    SparseVector r = reduce(v);
    if (r.is_zero()) return false;
    const std::size_t pivot = *r.leading_index();
    r = r.scaled(r.terms().front().coeff.inverse());
    for (auto& [p, row] : rows_) {
        Scalar c = row.at(pivot);
        if (!c.is_zero()) row.axpy(-c, r);
    }
    rows_.emplace(pivot, std::move(r));
    return true;
}

RowEchelon EchelonBasis::to_row_echelon() const
{
    RowEchelon out;
    out.rank = rows_.size();
    for (const auto& [p, row] : rows_) {
        out.pivots.push_back(p);
        out.rows.push_back(row);
    }
    return out;
}

RowEchelon row_reduce(const SparseMatrix& matrix)
{
    EchelonBasis basis(matrix.field);
    for (const auto& row : matrix.rows) {
        if (!(row.field() == matrix.field)) throw FieldError("mixed fields in matrix");
        for (const auto& t : row.terms()) {
            if (t.index >= matrix.cols) throw InputError("matrix entry outside column range");
        }
        basis.insert(row);
    }
    return basis.to_row_echelon();
}

std::vector<SparseVector> kernel_basis(const SparseMatrix& matrix)
{
    const RowEchelon rre = row_reduce(matrix);
    std::vector<bool> is_pivot(matrix.cols, false);
    for (auto p : rre.pivots) is_pivot[p] = true;

    std::vector<SparseVector> out;
    for (std::size_t free = 0; free < matrix.cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Term> terms{{free, Scalar::one(matrix.field)}};
        for (std::size_t r = 0; r < rre.rows.size(); ++r) {
            Scalar c = rre.rows[r].at(free);
            if (!c.is_zero()) terms.push_back({rre.pivots[r], -c});
        }
        out.push_back(SparseVector::from_terms(matrix.field, std::move(terms)));
    }
    return out;
}

}  // namespace tcn
