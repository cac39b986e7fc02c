#pragma once

#include <cstddef>
#include <vector>

#include "derivar/rational.hpp"

namespace derivar {

/// Dense matrix of exact rationals, row major.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<Rational> row(std::size_t r) const;
    void set_row(std::size_t r, const std::vector<Rational>& v);

    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

struct RrefResult {
    Matrix mat;
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
};

/// Exact Gauss-Jordan reduced row echelon form. Idempotent.
RrefResult rref(Matrix m);

/// Row space in canonical reduced-echelon form; the unique representation a
/// subspace gets here, so subspace equality is basis equality.
class Subspace {
public:
    Subspace() = default;
    static Subspace zero(std::size_t ambient);
    static Subspace from_rows(const Matrix& rows);
    static Subspace from_vectors(std::size_t ambient, const std::vector<std::vector<Rational>>& vs);

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// Residual of v after eliminating all pivot coordinates.
    std::vector<Rational> reduce(std::vector<Rational> v) const;
    bool contains(const std::vector<Rational>& v) const;

    friend bool operator==(const Subspace& a, const Subspace& b) = default;

private:
    std::size_t ambient_ = 0;
    Matrix basis_;
    std::vector<std::size_t> pivots_;

    friend class RrefBuilder;
};

/// Incremental reduced-echelon accumulator. Rows stay fully reduced and
/// sorted by pivot, so take() is already canonical.
class RrefBuilder {
public:
    explicit RrefBuilder(std::size_t ambient) : ambient_(ambient) {}

    /// Returns true if v enlarged the span.
    bool insert(std::vector<Rational> v);
    void insert_subspace(const Subspace& s);

    std::size_t rank() const { return rows_.size(); }
    std::size_t ambient() const { return ambient_; }
    bool full() const { return rows_.size() == ambient_; }

    Subspace take() &&;

private:
    std::size_t ambient_;
    std::vector<std::vector<Rational>> rows_;  // sorted by pivot column
    std::vector<std::size_t> pivots_;
};

/// RREF basis of {v : m v = 0}; ambient = m.cols().
Subspace kernel_basis(const Matrix& m);

/// Zassenhaus intersection. Requires equal ambient.
Subspace intersect(const Subspace& a, const Subspace& b);

Subspace sum(const Subspace& a, const Subspace& b);
bool subspace_eq(const Subspace& a, const Subspace& b);
bool contains(const Subspace& s, const std::vector<Rational>& v);

}  // namespace derivar
