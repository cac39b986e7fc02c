#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "derivar/rational.hpp"

namespace derivar {

/// Length of the subtree (token count) starting at `pos` in a preorder
/// shape code ('I' = internal node, 'L' = leaf).
std::size_t subtree_extent(std::string_view code, std::size_t pos);

/// Planar binary tree, stored as its preorder code over {'I','L'}.
/// A tree with n leaves has n-1 internal nodes and code length 2n-1.
class TreeShape {
public:
    TreeShape() : code_("L"), leaf_count_(1) {}
    static TreeShape leaf() { return TreeShape(); }
    static TreeShape from_code(std::string code);
    static TreeShape join(const TreeShape& left, const TreeShape& right);

    /// All shapes with the given leaf count, sorted by code (Catalan many).
    static const std::vector<TreeShape>& all(int leaf_count);

    const std::string& code() const { return code_; }
    int leaf_count() const { return leaf_count_; }
    int internal_count() const { return leaf_count_ - 1; }
    bool is_leaf() const { return leaf_count_ == 1; }

    TreeShape left() const;
    TreeShape right() const;

    friend std::strong_ordering operator<=>(const TreeShape& a, const TreeShape& b) {
        return a.code_ <=> b.code_;
    }
    friend bool operator==(const TreeShape& a, const TreeShape& b) { return a.code_ == b.code_; }

private:
    std::string code_;
    int leaf_count_;
    TreeShape(std::string code, int leaves) : code_(std::move(code)), leaf_count_(leaves) {}
};

/// Permutation of {1,...,n}, stored as the image sequence.
class Perm {
public:
    explicit Perm(std::vector<int> images);
    static Perm identity(int n);
    static Perm transposition(int n, int i, int j);
    /// All permutations of degree n in lexicographic order.
    static std::vector<Perm> all(int n);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& images() const { return images_; }

    /// compose(s, t) applies t first: compose(s,t)(i) = s(t(i)), so that
    /// act(compose(s,t), p) = act(s, act(t, p)).
    static Perm compose(const Perm& s, const Perm& t);
    Perm inverse() const;

    friend bool operator==(const Perm&, const Perm&) = default;

private:
    std::vector<int> images_;
};

/// Multilinear nonassociative monomial: a planar binary tree with operation
/// indices on internal nodes (preorder) and a permutation of {1..n} on the
/// leaves (left to right).
class Monomial {
public:
    Monomial(TreeShape shape, std::vector<int> op_labels, std::vector<int> leaf_vars);
    static Monomial leaf() { return Monomial(TreeShape::leaf(), {}, {1}); }
    static Monomial join(int op, const Monomial& left, const Monomial& right);

    int arity() const { return shape_.leaf_count(); }
    const TreeShape& shape() const { return shape_; }
    const std::vector<int>& op_labels() const { return ops_; }
    const std::vector<int>& leaf_vars() const { return leaves_; }
    int max_op() const;

    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b) = default;

private:
    TreeShape shape_;
    std::vector<int> ops_;
    std::vector<int> leaves_;
};

/// Rational combination of monomials of one arity over one alphabet.
/// Zero coefficients are never stored; term order is the canonical
/// monomial order, so any serialization is deterministic.
class Poly {
public:
    Poly() = default;
    Poly(int arity, int alphabet_size) : arity_(arity), alphabet_(alphabet_size) {}
    static Poly monomial(const Monomial& m, int alphabet_size, Rational coeff = Rational(1));

    int arity() const { return arity_; }
    int alphabet_size() const { return alphabet_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const Monomial& m, const Rational& c);

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Rational& c);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Rational& c, Poly p) { return p *= c; }
    friend bool operator==(const Poly&, const Poly&) = default;

private:
    int arity_ = 0;
    int alphabet_ = 0;
    std::map<Monomial, Rational> terms_;
};

/// All multilinear monomials of the given arity over the given alphabet in
/// canonical order: shape code, then op labels, then leaf labels, each
/// lexicographic. Size is Catalan(n-1) * k^(n-1) * n!.
std::vector<Monomial> enumerate_monomials(int arity, int alphabet_size);
std::size_t basis_size(int arity, int alphabet_size);

/// Rank of m in enumerate_monomials(m.arity(), alphabet_size), and back.
std::size_t index_of(const Monomial& m, int alphabet_size);
Monomial monomial_at(int arity, int alphabet_size, std::size_t index);

/// Leaf relabeling i -> sigma(i).
Monomial act(const Perm& sigma, const Monomial& m);
Poly act(const Perm& sigma, const Poly& p);

/// Operadic partial composition: inner replaces the leaf labeled
/// `position` of outer; inner's labels shift up by position-1, outer's
/// labels above `position` shift up by arity(inner)-1.
Monomial graft(const Monomial& outer, int position, const Monomial& inner);
Poly graft_poly(const Poly& outer, int position, const Poly& inner);

/// Coordinates in the enumerate_monomials basis.
std::vector<Rational> coords(const Poly& p);
Poly poly_from_coords(int arity, int alphabet_size, const std::vector<Rational>& v);

}  // namespace derivar
