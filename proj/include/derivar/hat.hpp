#pragma once

#include <cstdint>
#include <map>
#include <utility>

#include "derivar/diff_term.hpp"
#include "derivar/rational.hpp"

namespace derivar {

/// x^(n) . x^(m) = C(n+m-1, n) x^(n+m-1) in the divided-power Novikov
/// algebra H. The (0,0) corner is flagged and treated as annihilation by
/// the bilinear operations: in the polynomial model the product is
/// u d(v), and d(x^(0)) = 0.
struct HProduct {
    bool annihilated = false;
    Rational coeff;
    int index = -1;
};

HProduct h_mult(int n, int m);

/// Verifies the Novikov axioms on all basis triples x^(a), x^(b), x^(c)
/// with 1 <= a, b, c <= bound, exactly.
bool check_h_novikov(int bound);

/// Element of the free magmatic differential algebra on generators x_i,
/// truncated by d^N(x) = 0 (one operation, label 0).
class TruncatedDiffElement {
public:
    explicit TruncatedDiffElement(int truncation);
    static TruncatedDiffElement generator(int truncation, int var, int order = 0);

    int truncation() const { return truncation_; }
    const std::map<DiffTerm, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const DiffTerm& t, const Rational& c);
    TruncatedDiffElement& operator+=(const TruncatedDiffElement& o);
    TruncatedDiffElement& operator*=(const Rational& c);

    /// Ordinary derivation; a leaf already at order N-1 contributes zero.
    TruncatedDiffElement derivation() const;

    friend TruncatedDiffElement mul(const TruncatedDiffElement& a, const TruncatedDiffElement& b);
    friend bool operator==(const TruncatedDiffElement&, const TruncatedDiffElement&) = default;

private:
    int truncation_;
    std::map<DiffTerm, Rational> terms_;
};

/// Derived operations on the truncated algebra: a prec b = a d(b),
/// a succ b = d(a) b.
TruncatedDiffElement prec(const TruncatedDiffElement& a, const TruncatedDiffElement& b);
TruncatedDiffElement succ(const TruncatedDiffElement& a, const TruncatedDiffElement& b);

enum class DerivedOp { Prec, Succ };

/// Element of A tensor H: finite combination of (tree term, divided-power
/// index) pairs, with a cap on the H index so an undersized truncation
/// surfaces as an error instead of silent wraparound.
class HatElement {
public:
    explicit HatElement(int max_index);

    int max_index() const { return max_index_; }
    const std::map<std::pair<DiffTerm, int>, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const DiffTerm& t, int index, const Rational& c);  // throws past max_index
    HatElement& operator+=(const HatElement& o);

    friend bool operator==(const HatElement&, const HatElement&) = default;

private:
    int max_index_;
    std::map<std::pair<DiffTerm, int>, Rational> terms_;
};

/// (a x^(p)) prec (b x^(q)) = ab x^(p).x^(q);  succ swaps the H factors.
HatElement hat_ops(const HatElement& u, const HatElement& v, DerivedOp which);

/// psi(a) = sum_s d^s(a) tensor x^(s); finite by truncation.
HatElement psi(const TruncatedDiffElement& a, int max_index);

/// Draws random truncated elements and checks psi(a op b) = psi(a) op psi(b)
/// for both derived operations. Deterministic for a fixed seed.
bool check_psi_homomorphism(int sample_count, int truncation, std::uint64_t seed);

}  // namespace derivar
