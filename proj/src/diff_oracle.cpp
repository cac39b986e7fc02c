#include "derivar/diff_oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace derivar {

void DiffPoly::add_term(const DiffTerm& t, const Rational& c) {
    if (t.leaf_count() != arity_) throw std::invalid_argument("diff term arity mismatch");
    if (t.max_op() >= alphabet_) throw std::invalid_argument("diff term op outside alphabet");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(t, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

DiffPoly& DiffPoly::operator+=(const DiffPoly& o) {
    if (terms_.empty() && arity_ == 0 && alphabet_ == 0) {
        arity_ = o.arity_;
        alphabet_ = o.alphabet_;
    }
    if (o.arity_ != arity_ || o.alphabet_ != alphabet_)
        throw std::invalid_argument("diff poly arity/alphabet mismatch");
    for (const auto& [t, c] : o.terms_) add_term(t, c);
    return *this;
}

DiffPoly& DiffPoly::operator-=(const DiffPoly& o) {
    if (terms_.empty() && arity_ == 0 && alphabet_ == 0) {
        arity_ = o.arity_;
        alphabet_ = o.alphabet_;
    }
    if (o.arity_ != arity_ || o.alphabet_ != alphabet_)
        throw std::invalid_argument("diff poly arity/alphabet mismatch");
    for (const auto& [t, c] : o.terms_) add_term(t, -c);
    return *this;
}

DiffPoly& DiffPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [t, coeff] : terms_) coeff *= c;
    return *this;
}

std::vector<std::string> derived_symbol_names(const OperadPresentation& p) {
    std::vector<std::string> names;
    for (const std::string& op : p.ops) {
        std::string suffix = p.alphabet_size() > 1 ? "_" + op : "";
        names.push_back("prec" + suffix);
        names.push_back("succ" + suffix);
    }
    return names;
}

namespace {

/// D of a single term; the lambda contribution enters once per internal node.
std::map<DiffTerm, Rational> derive_term(const DiffTerm& t, const Rational& lambda) {
    std::map<DiffTerm, Rational> out;
    for (std::size_t i = 0; i < t.leaves().size(); ++i) {
        DiffTerm up = t.with_leaf_order(i, t.leaves()[i].order + 1);
        out[up] += 1;
    }
    if (lambda != 0 && t.leaf_count() > 1) {
        out[t] += lambda * t.shape().internal_count();
    }
    return out;
}

}  // namespace

DiffPoly apply_derivation(const DiffPoly& dp, const Rational& lambda) {
    DiffPoly out(dp.arity(), dp.alphabet_size());
    for (const auto& [t, c] : dp.terms())
        for (const auto& [s, cc] : derive_term(t, lambda)) out.add_term(s, c * cc);
    return out;
}

DiffPoly diff_product(int op, const DiffPoly& a, const DiffPoly& b) {
    if (a.alphabet_size() != b.alphabet_size())
        throw std::invalid_argument("diff product alphabet mismatch");
    DiffPoly out(a.arity() + b.arity(), a.alphabet_size());
    for (const auto& [ta, ca] : a.terms())
        for (const auto& [tb, cb] : b.terms()) out.add_term(DiffTerm::join(op, ta, tb), ca * cb);
    return out;
}

namespace {

DiffPoly expand_monomial(const Monomial& m, const Rational& lambda, int raw_alphabet) {
    const std::string& code = m.shape().code();
    std::size_t cpos = 0, opos = 0, lpos = 0;
    auto rec = [&](auto&& self) -> DiffPoly {
        if (code[cpos] == 'L') {
            ++cpos;
            int v = m.leaf_vars()[lpos++];
            DiffPoly p(1, raw_alphabet);
            p.add_term(DiffTerm::leaf(v, 0), 1);
            return p;
        }
        ++cpos;
        int sym = m.op_labels()[opos++];
        int j = sym / 2;
        bool crossed = sym % 2 == 1;
        DiffPoly left = self(self);
        DiffPoly right = self(self);
        // prec: u m_j d(v); succ: d(u) m_j v
        return crossed ? diff_product(j, apply_derivation(left, lambda), right)
                       : diff_product(j, left, apply_derivation(right, lambda));
    };
    return rec(rec);
}

}  // namespace

DiffPoly expand(const Poly& f, const Rational& lambda) {
    if (f.alphabet_size() % 2 != 0)
        throw std::invalid_argument("expand: derived alphabet must have an even symbol count");
    const int raw = f.alphabet_size() / 2;
    DiffPoly out(f.arity(), raw);
    for (const auto& [m, c] : f.terms()) {
        DiffPoly e = expand_monomial(m, lambda, raw);
        e *= c;
        out += e;
    }
    return out;
}

std::map<Pattern, Poly> group(const DiffPoly& dp) {
    const int n = dp.arity();
    std::map<Pattern, Poly> out;
    for (const auto& [t, c] : dp.terms()) {
        Pattern pat(static_cast<std::size_t>(n), 0);
        std::vector<int> vars;
        std::vector<bool> seen(static_cast<std::size_t>(n), false);
        vars.reserve(t.leaves().size());
        for (const DiffLeaf& l : t.leaves()) {
            if (l.var > n || seen[static_cast<std::size_t>(l.var - 1)])
                throw std::invalid_argument("group: input is not multilinear in x1..xn");
            seen[static_cast<std::size_t>(l.var - 1)] = true;
            pat[static_cast<std::size_t>(l.var - 1)] = l.order;
            vars.push_back(l.var);
        }
        Monomial stripped(t.shape(), t.op_labels(), vars);
        auto [it, inserted] = out.emplace(pat, Poly(n, dp.alphabet_size()));
        it->second.add_term(stripped, c);
    }
    for (auto it = out.begin(); it != out.end();) {
        if (it->second.is_zero()) it = out.erase(it);
        else ++it;
    }
    return out;
}

bool is_derived_identity(const OperadPresentation& p, const Poly& f, const Rational& lambda) {
    if (f.alphabet_size() != 2 * p.alphabet_size())
        throw std::invalid_argument("is_derived_identity: derived alphabet size mismatch");
    if (f.is_zero()) return true;
    for (const auto& [pat, poly] : group(expand(f, lambda)))
        if (!is_identity(p, poly)) return false;
    return true;
}

std::vector<Pattern> patterns_up_to(int n, int max_total) {
    std::vector<Pattern> out;
    Pattern cur(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int pos, int budget) -> void {
        if (pos == n) {
            out.push_back(cur);
            return;
        }
        for (int s = 0; s <= budget; ++s) {
            cur[static_cast<std::size_t>(pos)] = s;
            self(self, pos + 1, budget - s);
        }
        cur[static_cast<std::size_t>(pos)] = 0;
    };
    rec(rec, 0, max_total);
    std::sort(out.begin(), out.end());
    return out;
}

Subspace derived_identity_space(const OperadPresentation& p, int n, const Rational& lambda) {
    auto comp = component(p, n);
    const int derived_k = 2 * p.alphabet_size();
    std::vector<Monomial> cols = enumerate_monomials(n, derived_k);
    std::vector<Pattern> pats = patterns_up_to(n, n - 1);
    Matrix mat(pats.size() * comp->dim, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        DiffPoly e = expand(Poly::monomial(cols[c], derived_k), lambda);
        std::map<Pattern, Poly> groups = group(e);
        for (std::size_t pi = 0; pi < pats.size(); ++pi) {
            auto it = groups.find(pats[pi]);
            if (it == groups.end()) continue;
            std::vector<Rational> nf = normal_form(*comp, it->second);
            for (std::size_t j = 0; j < nf.size(); ++j)
                if (nf[j] != 0) mat.at(pi * comp->dim + j, c) = nf[j];
        }
    }
    return kernel_basis(mat);
}

bool lambda_invariance(const OperadPresentation& p, int n, const std::vector<Rational>& lambdas) {
    if (lambdas.empty()) throw std::invalid_argument("lambda_invariance: empty lambda list");
    Subspace first = derived_identity_space(p, n, lambdas.front());
    for (std::size_t i = 1; i < lambdas.size(); ++i)
        if (!(derived_identity_space(p, n, lambdas[i]) == first)) return false;
    return true;
}

}  // namespace derivar
