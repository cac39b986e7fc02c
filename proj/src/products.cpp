#include "derivar/products.hpp"

#include <stdexcept>

namespace derivar {

namespace {

bool is_nov(const OperadPresentation& q) {
    return q.content_hash() == builtin("nov").content_hash();
}

struct TreePieces {
    std::string code;
    std::vector<int> ops;
    std::vector<int> leaves;
};

TreePieces join_pieces(int op, const TreePieces& l, const TreePieces& r) {
    TreePieces t;
    t.code = "I" + l.code + r.code;
    t.ops.reserve(l.ops.size() + r.ops.size() + 1);
    t.ops.push_back(op);
    t.ops.insert(t.ops.end(), l.ops.begin(), l.ops.end());
    t.ops.insert(t.ops.end(), r.ops.begin(), r.ops.end());
    t.leaves = l.leaves;
    t.leaves.insert(t.leaves.end(), r.leaves.begin(), r.leaves.end());
    return t;
}

}  // namespace

PairAlphabet::PairAlphabet(const OperadPresentation& p, const OperadPresentation& q) {
    const bool nov_names = is_nov(q);
    for (int j = 0; j < p.alphabet_size(); ++j) {
        for (int l = 0; l < q.alphabet_size(); ++l) {
            std::string suffix;
            if (nov_names) {
                suffix = p.alphabet_size() > 1 ? "_" + p.ops[static_cast<std::size_t>(j)] : "";
                symbols_.push_back({j, l, false});
                names_.push_back("prec" + suffix);
                symbols_.push_back({j, l, true});
                names_.push_back("succ" + suffix);
            } else {
                suffix = "_" + p.ops[static_cast<std::size_t>(j)] + "_" + q.ops[static_cast<std::size_t>(l)];
                symbols_.push_back({j, l, false});
                names_.push_back("al" + suffix);
                symbols_.push_back({j, l, true});
                names_.push_back("cr" + suffix);
            }
        }
    }
}

std::pair<Monomial, Monomial> PairAlphabet::evaluate(const Monomial& m) const {
    const std::string& code = m.shape().code();
    std::size_t cpos = 0, opos = 0, lpos = 0;

    auto rec = [&](auto&& self) -> std::pair<TreePieces, TreePieces> {
        if (code[cpos] == 'L') {
            ++cpos;
            int v = m.leaf_vars()[lpos++];
            TreePieces leaf{"L", {}, {v}};
            return {leaf, leaf};
        }
        ++cpos;
        int s = m.op_labels()[opos++];
        if (s >= size()) throw std::invalid_argument("symbol index outside pair alphabet");
        const PairSymbol& sym = symbols_[static_cast<std::size_t>(s)];
        auto [lp, lq] = self(self);
        auto [rp, rq] = self(self);
        TreePieces pside = join_pieces(sym.p_op, lp, rp);
        TreePieces qside =
            sym.crossed ? join_pieces(sym.q_op, rq, lq) : join_pieces(sym.q_op, lq, rq);
        return {pside, qside};
    };

    auto [pp, qq] = rec(rec);
    return {Monomial(TreeShape::from_code(pp.code), pp.ops, pp.leaves),
            Monomial(TreeShape::from_code(qq.code), qq.ops, qq.leaves)};
}

Matrix phi_map(const OperadPresentation& p, const OperadPresentation& q, int n) {
    PairAlphabet alphabet(p, q);
    auto cp = component(p, n);
    auto cq = component(q, n);
    std::vector<Monomial> cols = enumerate_monomials(n, alphabet.size());
    Matrix phi(cp->dim * cq->dim, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        auto [pm, qm] = alphabet.evaluate(cols[c]);
        std::vector<Rational> vp = normal_form(*cp, Poly::monomial(pm, p.alphabet_size()));
        std::vector<Rational> vq = normal_form(*cq, Poly::monomial(qm, q.alphabet_size()));
        for (std::size_t i = 0; i < vp.size(); ++i) {
            if (vp[i] == 0) continue;
            for (std::size_t j = 0; j < vq.size(); ++j) {
                if (vq[j] == 0) continue;
                phi.at(i * vq.size() + j, c) = vp[i] * vq[j];
            }
        }
    }
    return phi;
}

namespace {

/// Presentation over the pair alphabet holding the given relations; feeds
/// the shared consequence-expansion machinery.
OperadPresentation synthetic_presentation(const PairAlphabet& alphabet, std::vector<Poly> rel2,
                                          std::vector<Poly> rel3) {
    OperadPresentation s;
    s.name = "pair";
    s.ops = alphabet.names();
    s.rel2 = std::move(rel2);
    s.rel3 = std::move(rel3);
    return s;
}

std::vector<Poly> subspace_polys(const Subspace& s, int arity, int alphabet_size) {
    std::vector<Poly> out;
    out.reserve(s.dim());
    for (std::size_t i = 0; i < s.dim(); ++i)
        out.push_back(poly_from_coords(arity, alphabet_size, s.basis().row(i)));
    return out;
}

}  // namespace

WhiteResult white_relations(const OperadPresentation& p, const OperadPresentation& q, int n) {
    if (n < 2 || n > kMaxArity) throw std::invalid_argument("white product arity out of bounds");
    WhiteResult r{p, q, n, PairAlphabet(p, q), {}, {}, 0, {}, {}, {}, 0};
    r.phi = phi_map(p, q, n);
    r.relations = kernel_basis(r.phi);
    r.image_dim = r.phi.cols() - r.relations.dim();

    if (n == 2) {
        r.arity2_kernel = r.relations;
        r.induced = Subspace::zero(r.relations.ambient());
    } else {
        Matrix phi2 = phi_map(p, q, 2);
        r.arity2_kernel = kernel_basis(phi2);
        if (r.arity2_kernel.dim() == 0) {
            r.induced = Subspace::zero(r.relations.ambient());
        } else {
            OperadPresentation synth = synthetic_presentation(
                r.alphabet, subspace_polys(r.arity2_kernel, 2, r.alphabet.size()), {});
            r.induced = relation_subspace(synth, n);
        }
    }

    RrefBuilder complement(r.relations.ambient());
    complement.insert_subspace(r.induced);
    for (std::size_t i = 0; i < r.relations.dim(); ++i) {
        std::vector<Rational> row = r.relations.basis().row(i);
        if (complement.insert(row))
            r.new_generators.push_back(poly_from_coords(n, r.alphabet.size(), r.relations.basis().row(i)));
    }
    r.new_dim = r.relations.dim() - r.induced.dim();
    return r;
}

WhiteResult derived_identities(const OperadPresentation& p, int n) {
    return white_relations(p, builtin("nov"), n);
}

bool relations_match(const WhiteResult& result, const std::vector<Poly>& generators) {
    const int n = result.arity;
    const int k = result.alphabet.size();
    std::vector<Poly> g2, g3, gn;
    for (const Poly& g : generators) {
        if (g.alphabet_size() != k)
            throw std::invalid_argument("relations_match: generator alphabet mismatch");
        if (g.arity() == 2) g2.push_back(g);
        else if (g.arity() == 3 && n >= 3) g3.push_back(g);
        else if (g.arity() == n) gn.push_back(g);
        else throw std::invalid_argument("relations_match: generator arity unsupported");
    }
    std::vector<Poly> rel2 = subspace_polys(result.arity2_kernel, 2, k);
    rel2.insert(rel2.end(), g2.begin(), g2.end());
    Subspace base = [&] {
        if (rel2.empty() && g3.empty()) return Subspace::zero(result.relations.ambient());
        return relation_subspace(synthetic_presentation(result.alphabet, rel2, g3), n);
    }();
    return sum(base, sn_closure_span(gn, n, k)) == result.relations;
}

}  // namespace derivar
