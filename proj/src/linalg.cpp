#include "derivar/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace derivar {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

std::vector<Rational> Matrix::row(std::size_t r) const {
    return std::vector<Rational>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                                 data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

void Matrix::set_row(std::size_t r, const std::vector<Rational>& v) {
    std::copy(v.begin(), v.end(), data_.begin() + static_cast<std::ptrdiff_t>(r * cols_));
}

RrefResult rref(Matrix m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (m.at(i, c) != 0) { piv = i; break; }
        }
        if (piv == rows) continue;
        if (piv != r) {
            for (std::size_t j = c; j < cols; ++j) std::swap(m.at(r, j), m.at(piv, j));
        }
        Rational inv = 1 / m.at(r, c);
        for (std::size_t j = c; j < cols; ++j) m.at(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Rational f = m.at(i, c);
            for (std::size_t j = c; j < cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    // keep only the nonzero rows
    Matrix out(r, cols);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < cols; ++j) out.at(i, j) = m.at(i, j);
    return {std::move(out), std::move(pivots), r};
}

Subspace Subspace::zero(std::size_t ambient) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = Matrix(0, ambient);
    return s;
}

Subspace Subspace::from_rows(const Matrix& rows) {
    RrefResult r = rref(rows);
    Subspace s;
    s.ambient_ = rows.cols();
    s.basis_ = std::move(r.mat);
    s.pivots_ = std::move(r.pivots);
    return s;
}

Subspace Subspace::from_vectors(std::size_t ambient, const std::vector<std::vector<Rational>>& vs) {
    Matrix m(vs.size(), ambient);
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (vs[i].size() != ambient) throw std::invalid_argument("vector/ambient size mismatch");
        m.set_row(i, vs[i]);
    }
    return from_rows(m);
}

std::vector<Rational> Subspace::reduce(std::vector<Rational> v) const {
    if (v.size() != ambient_) throw std::invalid_argument("ambient dimension mismatch");
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        const Rational& f = v[pivots_[i]];
        if (f == 0) continue;
        Rational c = f;
        for (std::size_t j = pivots_[i]; j < ambient_; ++j) v[j] -= c * basis_.at(i, j);
    }
    return v;
}

bool Subspace::contains(const std::vector<Rational>& v) const {
    std::vector<Rational> r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](const Rational& x) { return x == 0; });
}

bool RrefBuilder::insert(std::vector<Rational> v) {
    if (v.size() != ambient_) throw std::invalid_argument("ambient dimension mismatch");
    // eliminate against existing rows
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Rational& f = v[pivots_[i]];
        if (f == 0) continue;
        Rational c = f;
        const auto& row = rows_[i];
        for (std::size_t j = pivots_[i]; j < ambient_; ++j) v[j] -= c * row[j];
    }
    std::size_t p = 0;
    while (p < ambient_ && v[p] == 0) ++p;
    if (p == ambient_) return false;
    Rational inv = 1 / v[p];
    for (std::size_t j = p; j < ambient_; ++j) v[j] *= inv;
    // clear column p in the accumulated rows
    for (auto& row : rows_) {
        if (row[p] == 0) continue;
        Rational c = row[p];
        for (std::size_t j = p; j < ambient_; ++j) row[j] -= c * v[j];
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p);
    std::size_t idx = static_cast<std::size_t>(pos - pivots_.begin());
    pivots_.insert(pos, p);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(v));
    return true;
}

void RrefBuilder::insert_subspace(const Subspace& s) {
    for (std::size_t i = 0; i < s.dim(); ++i) insert(s.basis().row(i));
}

Subspace RrefBuilder::take() && {
    Subspace s;
    s.ambient_ = ambient_;
    s.basis_ = Matrix(rows_.size(), ambient_);
    for (std::size_t i = 0; i < rows_.size(); ++i) s.basis_.set_row(i, rows_[i]);
    s.pivots_ = std::move(pivots_);
    return s;
}

Subspace kernel_basis(const Matrix& m) {
    const std::size_t cols = m.cols();
    RrefResult red = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t p : red.pivots) is_pivot[p] = true;

    RrefBuilder out(cols);
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(cols);
        v[f] = 1;
        for (std::size_t i = 0; i < red.rank; ++i) v[red.pivots[i]] = -red.mat.at(i, f);
        out.insert(std::move(v));
    }
    return std::move(out).take();
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient())
        throw std::invalid_argument("intersect: ambient dimension mismatch");
    const std::size_t n = a.ambient();
    const std::size_t ra = a.dim(), rb = b.dim();
    // Zassenhaus: echelonize [A A; B 0]; rows with zero left half carry the
    // intersection in their right half.
    Matrix block(ra + rb, 2 * n);
    for (std::size_t i = 0; i < ra; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            block.at(i, j) = a.basis().at(i, j);
            block.at(i, n + j) = a.basis().at(i, j);
        }
    for (std::size_t i = 0; i < rb; ++i)
        for (std::size_t j = 0; j < n; ++j) block.at(ra + i, j) = b.basis().at(i, j);
    RrefResult red = rref(std::move(block));

    RrefBuilder out(n);
    for (std::size_t i = 0; i < red.rank; ++i) {
        bool left_zero = true;
        for (std::size_t j = 0; j < n && left_zero; ++j) left_zero = red.mat.at(i, j) == 0;
        if (!left_zero) continue;
        std::vector<Rational> v(n);
        for (std::size_t j = 0; j < n; ++j) v[j] = red.mat.at(i, n + j);
        out.insert(std::move(v));
    }
    return std::move(out).take();
}

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw std::invalid_argument("sum: ambient dimension mismatch");
    RrefBuilder out(a.ambient());
    out.insert_subspace(a);
    out.insert_subspace(b);
    return std::move(out).take();
}

bool subspace_eq(const Subspace& a, const Subspace& b) {
    return a == b;
}

bool contains(const Subspace& s, const std::vector<Rational>& v) {
    return s.contains(v);
}

}  // namespace derivar
