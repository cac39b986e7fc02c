#pragma once

#include <map>
#include <string>
#include <vector>

#include "derivar/diff_term.hpp"
#include "derivar/presentations.hpp"

namespace derivar {

/// Derivative orders per variable position; the grouping key of a
/// multilinear differential monomial. For an arity-n expansion of a
/// derived monomial the total is at most n-1.
using Pattern = std::vector<int>;

/// Rational combination of DiffTerms, multilinear in x1..xn (each term uses
/// every variable exactly once). Lives over a presentation's raw alphabet.
class DiffPoly {
public:
    DiffPoly() = default;
    DiffPoly(int arity, int alphabet_size) : arity_(arity), alphabet_(alphabet_size) {}

    int arity() const { return arity_; }
    int alphabet_size() const { return alphabet_; }
    const std::map<DiffTerm, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const DiffTerm& t, const Rational& c);
    DiffPoly& operator+=(const DiffPoly& o);
    DiffPoly& operator-=(const DiffPoly& o);
    DiffPoly& operator*=(const Rational& c);
    friend DiffPoly operator+(DiffPoly a, const DiffPoly& b) { return a += b; }
    friend DiffPoly operator-(DiffPoly a, const DiffPoly& b) { return a -= b; }
    friend bool operator==(const DiffPoly&, const DiffPoly&) = default;

private:
    int arity_ = 0;
    int alphabet_ = 0;
    std::map<DiffTerm, Rational> terms_;
};

/// Names of the 2k derived symbols of a presentation with k operations:
/// prec, succ for k = 1, else prec_<op>, succ_<op> per operation.
std::vector<std::string> derived_symbol_names(const OperadPresentation& p);

/// Generalized derivation D(ab) = D(a)b + aD(b) + lambda*ab, D(d^s x) = d^(s+1) x.
DiffPoly apply_derivation(const DiffPoly& dp, const Rational& lambda);

/// Bilinear tree join a ->  m_op(a, b).
DiffPoly diff_product(int op, const DiffPoly& a, const DiffPoly& b);

/// Leibniz expansion of a polynomial over the derived alphabet
/// (symbol 2j = prec_j: u prec v -> m_j(u, D v); 2j+1 = succ_j: m_j(D u, v)).
DiffPoly expand(const Poly& f, const Rational& lambda);

/// Splits a multilinear DiffPoly by derivative-order pattern, stripping
/// orders off the leaves. Summing the groups (with orders restored)
/// recovers the input. Throws on non-multilinear input.
std::map<Pattern, Poly> group(const DiffPoly& dp);

/// True iff every pattern component of the expansion vanishes in Var(n),
/// i.e. f is a derived identity of the variety.
bool is_derived_identity(const OperadPresentation& p, const Poly& f, const Rational& lambda);

/// Kernel of M_n(derived alphabet) -> sum over patterns of Var(n); by the
/// hat-construction and its converse this equals the white-product kernel
/// white_relations(p, nov, n).relations.
Subspace derived_identity_space(const OperadPresentation& p, int n, const Rational& lambda);

/// True iff derived_identity_space is the same canonical subspace for
/// every lambda in the list (throws on an empty list).
bool lambda_invariance(const OperadPresentation& p, int n, const std::vector<Rational>& lambdas);

/// All patterns of length n with total at most max_total, lexicographic.
std::vector<Pattern> patterns_up_to(int n, int max_total);

}  // namespace derivar
