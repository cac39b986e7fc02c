#include "derivar/hat.hpp"

#include <random>
#include <stdexcept>

namespace derivar {

HProduct h_mult(int n, int m) {
    if (n < 0 || m < 0) throw std::invalid_argument("divided-power index must be nonnegative");
    if (n == 0 && m == 0) return {true, Rational(0), -1};
    return {false, Rational(binomial(n + m - 1, n)), n + m - 1};
}

namespace {

using HElt = std::map<int, Rational>;

HElt h_elt_mult(const HElt& a, const HElt& b) {
    HElt out;
    for (const auto& [n, cn] : a)
        for (const auto& [m, cm] : b) {
            HProduct r = h_mult(n, m);
            if (r.annihilated || r.coeff == 0) continue;
            Rational& slot = out[r.index];
            slot += cn * cm * r.coeff;
            if (slot == 0) out.erase(r.index);
        }
    return out;
}

HElt h_sub(HElt a, const HElt& b) {
    for (const auto& [i, c] : b) {
        Rational& slot = a[i];
        slot -= c;
        if (slot == 0) a.erase(i);
    }
    return a;
}

}  // namespace

bool check_h_novikov(int bound) {
    if (bound < 2) throw std::invalid_argument("check_h_novikov needs bound >= 2");
    for (int a = 1; a <= bound; ++a)
        for (int b = 1; b <= bound; ++b)
            for (int c = 1; c <= bound; ++c) {
                HElt A{{a, 1}}, B{{b, 1}}, C{{c, 1}};
                // left symmetry: (ab)c - a(bc) = (ba)c - b(ac)
                HElt lhs = h_sub(h_elt_mult(h_elt_mult(A, B), C), h_elt_mult(A, h_elt_mult(B, C)));
                HElt rhs = h_sub(h_elt_mult(h_elt_mult(B, A), C), h_elt_mult(B, h_elt_mult(A, C)));
                if (!h_sub(lhs, rhs).empty()) return false;
                // right commutativity: (ab)c = (ac)b
                if (!h_sub(h_elt_mult(h_elt_mult(A, B), C), h_elt_mult(h_elt_mult(A, C), B)).empty())
                    return false;
            }
    return true;
}

TruncatedDiffElement::TruncatedDiffElement(int truncation) : truncation_(truncation) {
    if (truncation < 1) throw std::invalid_argument("truncation must be at least 1");
}

TruncatedDiffElement TruncatedDiffElement::generator(int truncation, int var, int order) {
    TruncatedDiffElement e(truncation);
    e.add_term(DiffTerm::leaf(var, order), 1);
    return e;
}

void TruncatedDiffElement::add_term(const DiffTerm& t, const Rational& c) {
    if (t.max_op() > 0) throw std::invalid_argument("truncated algebra is magmatic (one operation)");
    for (const DiffLeaf& l : t.leaves())
        if (l.order >= truncation_)
            throw std::invalid_argument("derivative order reaches the truncation bound");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(t, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

TruncatedDiffElement& TruncatedDiffElement::operator+=(const TruncatedDiffElement& o) {
    if (o.truncation_ != truncation_) throw std::invalid_argument("truncation mismatch");
    for (const auto& [t, c] : o.terms_) add_term(t, c);
    return *this;
}

TruncatedDiffElement& TruncatedDiffElement::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [t, coeff] : terms_) coeff *= c;
    return *this;
}

TruncatedDiffElement TruncatedDiffElement::derivation() const {
    TruncatedDiffElement out(truncation_);
    for (const auto& [t, c] : terms_) {
        for (std::size_t i = 0; i < t.leaves().size(); ++i) {
            int next = t.leaves()[i].order + 1;
            if (next >= truncation_) continue;  // d^N(x) = 0
            out.add_term(t.with_leaf_order(i, next), c);
        }
    }
    return out;
}

TruncatedDiffElement mul(const TruncatedDiffElement& a, const TruncatedDiffElement& b) {
    if (a.truncation_ != b.truncation_) throw std::invalid_argument("truncation mismatch");
    TruncatedDiffElement out(a.truncation_);
    for (const auto& [ta, ca] : a.terms_)
        for (const auto& [tb, cb] : b.terms_) out.add_term(DiffTerm::join(0, ta, tb), ca * cb);
    return out;
}

TruncatedDiffElement prec(const TruncatedDiffElement& a, const TruncatedDiffElement& b) {
    return mul(a, b.derivation());
}

TruncatedDiffElement succ(const TruncatedDiffElement& a, const TruncatedDiffElement& b) {
    return mul(a.derivation(), b);
}

HatElement::HatElement(int max_index) : max_index_(max_index) {
    if (max_index < 0) throw std::invalid_argument("max divided-power index must be nonnegative");
}

void HatElement::add_term(const DiffTerm& t, int index, const Rational& c) {
    if (index < 0) throw std::invalid_argument("negative divided-power index");
    if (index > max_index_)
        throw std::invalid_argument("divided-power index exceeds truncation; raise the bound");
    if (c == 0) return;
    auto key = std::make_pair(t, index);
    auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

HatElement& HatElement::operator+=(const HatElement& o) {
    for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, c);
    return *this;
}

HatElement hat_ops(const HatElement& u, const HatElement& v, DerivedOp which) {
    if (u.max_index() != v.max_index())
        throw std::invalid_argument("hat elements have incompatible truncations");
    HatElement out(u.max_index());
    for (const auto& [ku, cu] : u.terms())
        for (const auto& [kv, cv] : v.terms()) {
            const auto& [ta, p] = ku;
            const auto& [tb, q] = kv;
            HProduct r = which == DerivedOp::Prec ? h_mult(p, q) : h_mult(q, p);
            if (r.annihilated || r.coeff == 0) continue;
            out.add_term(DiffTerm::join(0, ta, tb), r.index, cu * cv * r.coeff);
        }
    return out;
}

HatElement psi(const TruncatedDiffElement& a, int max_index) {
    HatElement out(max_index);
    TruncatedDiffElement cur = a;
    for (int s = 0; !cur.is_zero(); ++s) {
        if (s > max_index)
            throw std::invalid_argument("psi: divided-power index exceeds truncation");
        for (const auto& [t, c] : cur.terms()) out.add_term(t, s, c);
        cur = cur.derivation();
    }
    return out;
}

bool check_psi_homomorphism(int sample_count, int truncation, std::uint64_t seed) {
    if (truncation < 2) throw std::invalid_argument("truncation must be at least 2");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> leaf_count(1, 3);
    std::uniform_int_distribution<int> term_count(1, 3);
    std::uniform_int_distribution<int> var_dist(1, 3);
    std::uniform_int_distribution<int> order_dist(0, truncation - 1);
    std::uniform_int_distribution<int> coeff_dist(-3, 3);

    auto random_term = [&]() {
        const auto& shapes = TreeShape::all(leaf_count(rng));
        std::uniform_int_distribution<std::size_t> shape_dist(0, shapes.size() - 1);
        const TreeShape& s = shapes[shape_dist(rng)];
        std::vector<int> ops(static_cast<std::size_t>(s.internal_count()), 0);
        std::vector<DiffLeaf> leaves;
        for (int i = 0; i < s.leaf_count(); ++i) leaves.push_back({var_dist(rng), order_dist(rng)});
        return DiffTerm(s, std::move(ops), std::move(leaves));
    };
    auto random_element = [&]() {
        TruncatedDiffElement e(truncation);
        int nterms = term_count(rng);
        for (int i = 0; i < nterms; ++i) {
            int c = coeff_dist(rng);
            if (c == 0) c = 1;
            e.add_term(random_term(), c);
        }
        return e;
    };

    // products have at most 6 leaves, each absorbing < truncation derivatives
    const int max_index = 6 * truncation + 1;
    for (int i = 0; i < sample_count; ++i) {
        TruncatedDiffElement a = random_element();
        TruncatedDiffElement b = random_element();
        HatElement pa = psi(a, max_index);
        HatElement pb = psi(b, max_index);
        if (!(psi(prec(a, b), max_index) == hat_ops(pa, pb, DerivedOp::Prec))) return false;
        if (!(psi(succ(a, b), max_index) == hat_ops(pa, pb, DerivedOp::Succ))) return false;
    }
    return true;
}

}  // namespace derivar
