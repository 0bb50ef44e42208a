#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "tcn/scalar.hpp"

namespace tcn {

struct Term {
    std::size_t index;
    Scalar coeff;

    bool operator==(const Term&) const = default;
};

// Sparse coordinate vector: strictly increasing indices, no zero
// coefficients. Every mutating operation restores that form.
class SparseVector {
public:
    explicit SparseVector(const Field& field) : field_(field) {}
    // Sorts, merges duplicate indices, drops zeros.
    static SparseVector from_terms(const Field& field, std::vector<Term> terms);
    static SparseVector unit(const Field& field, std::size_t index);

    const Field& field() const { return field_; }
    // Rvalue overload returns by value so `for (auto& t : f().terms())` is safe.
    const std::vector<Term>& terms() const& { return terms_; }
    std::vector<Term> terms() && { return std::move(terms_); }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    // Coefficient at index, zero if absent.
    Scalar at(std::size_t index) const;
    std::optional<std::size_t> leading_index() const;

    // this += factor * other
    void axpy(const Scalar& factor, const SparseVector& other);
    SparseVector scaled(const Scalar& factor) const;

    SparseVector operator+(const SparseVector& rhs) const;
    SparseVector operator-(const SparseVector& rhs) const;
    SparseVector operator-() const;

    bool operator==(const SparseVector& rhs) const = default;

private:
    Field field_;
    std::vector<Term> terms_;
};

// Row-major sparse matrix over a single field.
struct SparseMatrix {
    Field field;
    std::size_t cols = 0;
    std::vector<SparseVector> rows;

    SparseMatrix(const Field& f, std::size_t c) : field(f), cols(c) {}
};

struct RowEchelon {
    std::size_t rank = 0;
    // Reduced rows in increasing pivot order; leading coefficient 1.
    std::vector<SparseVector> rows;
    std::vector<std::size_t> pivots;
};

// Incrementally maintained reduced row-echelon basis of a subspace.
class EchelonBasis {
public:
    explicit EchelonBasis(const Field& field) : field_(field) {}

    // v minus its projection onto the span along the pivot columns.
    SparseVector reduce(const SparseVector& v) const;
    // Adds v when it is independent of the current span; returns whether it was.
    bool insert(const SparseVector& v);

    std::size_t rank() const { return rows_.size(); }
    RowEchelon to_row_echelon() const;

private:
    Field field_;
    std::map<std::size_t, SparseVector> rows_;  // keyed by pivot column
};

// Reduced row-echelon form over the exact field. Throws FieldError when rows
// disagree with the matrix field.
RowEchelon row_reduce(const SparseMatrix& matrix);

// Basis of {x : M x = 0}, one vector per free column, in increasing column
// order. Each vector has coefficient 1 at its free column.
std::vector<SparseVector> kernel_basis(const SparseMatrix& matrix);

}  // namespace tcn
