#include "derivar/freeop.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace derivar {

std::size_t subtree_extent(std::string_view code, std::size_t pos) {
    // walking preorder: 'I' consumes one pending subtree and opens two,
    // 'L' consumes one
    std::size_t need = 1, i = pos;
    while (i < code.size()) {
        if (code[i] == 'I') ++need;
        else --need;
        ++i;
        if (need == 0) return i - pos;
    }
    throw std::invalid_argument("truncated tree code");
}

TreeShape TreeShape::from_code(std::string code) {
    if (code.empty()) throw std::invalid_argument("empty tree code");
    for (char c : code)
        if (c != 'I' && c != 'L') throw std::invalid_argument("bad tree code character");
    if (subtree_extent(code, 0) != code.size())
        throw std::invalid_argument("tree code does not describe exactly one tree");
    int leaves = static_cast<int>(std::count(code.begin(), code.end(), 'L'));
    return TreeShape(std::move(code), leaves);
}

TreeShape TreeShape::join(const TreeShape& left, const TreeShape& right) {
    return TreeShape("I" + left.code_ + right.code_, left.leaf_count_ + right.leaf_count_);
}

TreeShape TreeShape::left() const {
    if (is_leaf()) throw std::invalid_argument("leaf has no subtrees");
    std::size_t ext = subtree_extent(code_, 1);
    std::string sub = code_.substr(1, ext);
    return TreeShape(std::move(sub), static_cast<int>(std::count(code_.begin() + 1, code_.begin() + 1 + static_cast<std::ptrdiff_t>(ext), 'L')));
}

TreeShape TreeShape::right() const {
    if (is_leaf()) throw std::invalid_argument("leaf has no subtrees");
    std::size_t lext = subtree_extent(code_, 1);
    std::string sub = code_.substr(1 + lext);
    return TreeShape(std::move(sub), static_cast<int>(std::count(code_.begin() + 1 + static_cast<std::ptrdiff_t>(lext), code_.end(), 'L')));
}

namespace {

std::vector<TreeShape> gen_shapes(int n) {
    if (n == 1) return {TreeShape::leaf()};
    std::vector<TreeShape> out;
    for (int l = 1; l < n; ++l) {
        for (const TreeShape& ls : gen_shapes(l))
            for (const TreeShape& rs : gen_shapes(n - l)) out.push_back(TreeShape::join(ls, rs));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

const std::vector<TreeShape>& TreeShape::all(int leaf_count) {
    if (leaf_count < 1) throw std::invalid_argument("leaf count must be positive");
    static std::mutex mu;
    static std::map<int, std::vector<TreeShape>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(leaf_count);
    if (it == cache.end()) it = cache.emplace(leaf_count, gen_shapes(leaf_count)).first;
    return it->second;
}

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
        if (v < 1 || v > static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(v - 1)])
            throw std::invalid_argument("not a permutation");
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
}

Perm Perm::identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Perm(std::move(v));
}

Perm Perm::transposition(int n, int i, int j) {
    Perm p = identity(n);
    std::swap(p.images_[static_cast<std::size_t>(i - 1)], p.images_[static_cast<std::size_t>(j - 1)]);
    return p;
}

std::vector<Perm> Perm::all(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    std::vector<Perm> out;
    do {
        out.push_back(Perm(v));
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

Perm Perm::compose(const Perm& s, const Perm& t) {
    if (s.degree() != t.degree()) throw std::invalid_argument("degree mismatch");
    std::vector<int> v(static_cast<std::size_t>(s.degree()));
    for (int i = 1; i <= s.degree(); ++i) v[static_cast<std::size_t>(i - 1)] = s(t(i));
    return Perm(std::move(v));
}

Perm Perm::inverse() const {
    std::vector<int> v(images_.size());
    for (int i = 1; i <= degree(); ++i) v[static_cast<std::size_t>((*this)(i) - 1)] = i;
    return Perm(std::move(v));
}

Monomial::Monomial(TreeShape shape, std::vector<int> op_labels, std::vector<int> leaf_vars)
    : shape_(std::move(shape)), ops_(std::move(op_labels)), leaves_(std::move(leaf_vars)) {
    const int n = shape_.leaf_count();
    if (static_cast<int>(ops_.size()) != n - 1) throw std::invalid_argument("op label count must be arity-1");
    if (static_cast<int>(leaves_.size()) != n) throw std::invalid_argument("leaf label count must equal arity");
    for (int op : ops_)
        if (op < 0) throw std::invalid_argument("negative op label");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : leaves_) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
            throw std::invalid_argument("leaf labels must be a permutation of 1..n");
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
}

Monomial Monomial::join(int op, const Monomial& left, const Monomial& right) {
    std::vector<int> ops;
    ops.reserve(left.ops_.size() + right.ops_.size() + 1);
    ops.push_back(op);
    ops.insert(ops.end(), left.ops_.begin(), left.ops_.end());
    ops.insert(ops.end(), right.ops_.begin(), right.ops_.end());
    std::vector<int> leaves(left.leaves_);
    leaves.insert(leaves.end(), right.leaves_.begin(), right.leaves_.end());
    return Monomial(TreeShape::join(left.shape_, right.shape_), std::move(ops), std::move(leaves));
}

int Monomial::max_op() const {
    int m = -1;
    for (int op : ops_) m = std::max(m, op);
    return m;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.shape_ <=> b.shape_; c != 0) return c;
    if (auto c = a.ops_ <=> b.ops_; c != 0) return c;
    return a.leaves_ <=> b.leaves_;
}

Poly Poly::monomial(const Monomial& m, int alphabet_size, Rational coeff) {
    Poly p(m.arity(), alphabet_size);
    p.add_term(m, coeff);
    return p;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
    if (m.arity() != arity_) throw std::invalid_argument("term arity mismatch");
    if (m.max_op() >= alphabet_) throw std::invalid_argument("op label outside alphabet");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& o) {
    if (terms_.empty() && arity_ == 0 && alphabet_ == 0) {
        arity_ = o.arity_;
        alphabet_ = o.alphabet_;
    }
    if (o.arity_ != arity_ || o.alphabet_ != alphabet_)
        throw std::invalid_argument("polynomial arity/alphabet mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (terms_.empty() && arity_ == 0 && alphabet_ == 0) {
        arity_ = o.arity_;
        alphabet_ = o.alphabet_;
    }
    if (o.arity_ != arity_ || o.alphabet_ != alphabet_)
        throw std::invalid_argument("polynomial arity/alphabet mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly& Poly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

std::vector<Monomial> enumerate_monomials(int arity, int alphabet_size) {
    if (arity < 1 || alphabet_size < 1)
        throw std::invalid_argument("arity and alphabet size must be positive");
    std::vector<Monomial> out;
    out.reserve(basis_size(arity, alphabet_size));
    const auto& shapes = TreeShape::all(arity);
    std::vector<int> ops(static_cast<std::size_t>(arity - 1), 0);
    for (const TreeShape& s : shapes) {
        std::fill(ops.begin(), ops.end(), 0);
        while (true) {
            std::vector<int> leaves(static_cast<std::size_t>(arity));
            std::iota(leaves.begin(), leaves.end(), 1);
            do {
                out.emplace_back(s, ops, leaves);
            } while (std::next_permutation(leaves.begin(), leaves.end()));
            // odometer over op labels, most significant first
            int i = arity - 2;
            while (i >= 0 && ops[static_cast<std::size_t>(i)] == alphabet_size - 1) {
                ops[static_cast<std::size_t>(i)] = 0;
                --i;
            }
            if (i < 0) break;
            ++ops[static_cast<std::size_t>(i)];
        }
    }
    return out;
}

std::size_t basis_size(int arity, int alphabet_size) {
    if (arity < 1 || alphabet_size < 1)
        throw std::invalid_argument("arity and alphabet size must be positive");
    std::size_t catalan = TreeShape::all(arity).size();
    std::size_t result = catalan;
    for (int i = 0; i < arity - 1; ++i) result *= static_cast<std::size_t>(alphabet_size);
    for (int i = 2; i <= arity; ++i) result *= static_cast<std::size_t>(i);
    return result;
}

namespace {

std::size_t perm_rank(const std::vector<int>& leaves) {
    const std::size_t n = leaves.size();
    std::size_t rank = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t smaller = 0;
        for (std::size_t j = i + 1; j < n; ++j)
            if (leaves[j] < leaves[i]) ++smaller;
        rank = rank * (n - i) + smaller;
    }
    return rank;
}

std::vector<int> perm_unrank(int n, std::size_t rank) {
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 1);
    std::size_t fact = 1;
    for (int i = 2; i < n; ++i) fact *= static_cast<std::size_t>(i);
    std::vector<int> out;
    for (int i = n - 1; i >= 0; --i) {
        std::size_t idx = fact == 0 ? 0 : rank / fact;
        rank %= fact == 0 ? 1 : fact;
        out.push_back(pool[idx]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
        if (i > 1) fact /= static_cast<std::size_t>(i);
    }
    return out;
}

}  // namespace

std::size_t index_of(const Monomial& m, int alphabet_size) {
    if (m.max_op() >= alphabet_size) throw std::invalid_argument("op label outside alphabet");
    const int n = m.arity();
    const auto& shapes = TreeShape::all(n);
    auto it = std::lower_bound(shapes.begin(), shapes.end(), m.shape());
    if (it == shapes.end() || !(*it == m.shape())) throw std::invalid_argument("unknown shape");
    std::size_t shape_rank = static_cast<std::size_t>(it - shapes.begin());
    std::size_t op_rank = 0;
    for (int op : m.op_labels()) op_rank = op_rank * static_cast<std::size_t>(alphabet_size) + static_cast<std::size_t>(op);
    std::size_t ops_total = 1;
    for (int i = 0; i < n - 1; ++i) ops_total *= static_cast<std::size_t>(alphabet_size);
    std::size_t fact = 1;
    for (int i = 2; i <= n; ++i) fact *= static_cast<std::size_t>(i);
    return (shape_rank * ops_total + op_rank) * fact + perm_rank(m.leaf_vars());
}

Monomial monomial_at(int arity, int alphabet_size, std::size_t index) {
    if (index >= basis_size(arity, alphabet_size)) throw std::invalid_argument("monomial index out of range");
    std::size_t fact = 1;
    for (int i = 2; i <= arity; ++i) fact *= static_cast<std::size_t>(i);
    std::size_t leaf_rank = index % fact;
    index /= fact;
    std::size_t ops_total = 1;
    for (int i = 0; i < arity - 1; ++i) ops_total *= static_cast<std::size_t>(alphabet_size);
    std::size_t op_rank = index % ops_total;
    std::size_t shape_rank = index / ops_total;
    std::vector<int> ops(static_cast<std::size_t>(arity - 1));
    for (int i = arity - 2; i >= 0; --i) {
        ops[static_cast<std::size_t>(i)] = static_cast<int>(op_rank % static_cast<std::size_t>(alphabet_size));
        op_rank /= static_cast<std::size_t>(alphabet_size);
    }
    return Monomial(TreeShape::all(arity)[shape_rank], std::move(ops), perm_unrank(arity, leaf_rank));
}

Monomial act(const Perm& sigma, const Monomial& m) {
    if (sigma.degree() != m.arity()) throw std::invalid_argument("permutation degree mismatch");
    std::vector<int> leaves(m.leaf_vars());
    for (int& v : leaves) v = sigma(v);
    return Monomial(m.shape(), m.op_labels(), std::move(leaves));
}

Poly act(const Perm& sigma, const Poly& p) {
    if (sigma.degree() != p.arity()) throw std::invalid_argument("permutation degree mismatch");
    Poly out(p.arity(), p.alphabet_size());
    for (const auto& [m, c] : p.terms()) out.add_term(act(sigma, m), c);
    return out;
}

Monomial graft(const Monomial& outer, int position, const Monomial& inner) {
    if (position < 1 || position > outer.arity())
        throw std::invalid_argument("graft position out of range");
    const int na = inner.arity();
    // locate the leaf carrying the label `position`
    std::size_t leaf_idx = 0;
    while (outer.leaf_vars()[leaf_idx] != position) ++leaf_idx;
    const std::string& code = outer.shape().code();
    std::size_t code_pos = 0, seen = 0;
    for (;; ++code_pos) {
        if (code[code_pos] == 'L') {
            if (seen == leaf_idx) break;
            ++seen;
        }
    }
    std::string new_code = code.substr(0, code_pos) + inner.shape().code() + code.substr(code_pos + 1);
    std::size_t ops_before = static_cast<std::size_t>(
        std::count(code.begin(), code.begin() + static_cast<std::ptrdiff_t>(code_pos), 'I'));
    std::vector<int> ops(outer.op_labels().begin(), outer.op_labels().begin() + static_cast<std::ptrdiff_t>(ops_before));
    ops.insert(ops.end(), inner.op_labels().begin(), inner.op_labels().end());
    ops.insert(ops.end(), outer.op_labels().begin() + static_cast<std::ptrdiff_t>(ops_before), outer.op_labels().end());
    std::vector<int> leaves;
    leaves.reserve(static_cast<std::size_t>(outer.arity() + na - 1));
    for (std::size_t i = 0; i < outer.leaf_vars().size(); ++i) {
        int v = outer.leaf_vars()[i];
        if (i == leaf_idx) {
            for (int w : inner.leaf_vars()) leaves.push_back(w + position - 1);
        } else {
            leaves.push_back(v > position ? v + na - 1 : v);
        }
    }
    return Monomial(TreeShape::from_code(std::move(new_code)), std::move(ops), std::move(leaves));
}

Poly graft_poly(const Poly& outer, int position, const Poly& inner) {
    if (outer.alphabet_size() != inner.alphabet_size())
        throw std::invalid_argument("graft alphabet mismatch");
    if (position < 1 || position > outer.arity())
        throw std::invalid_argument("graft position out of range");
    Poly out(outer.arity() + inner.arity() - 1, outer.alphabet_size());
    for (const auto& [mo, co] : outer.terms())
        for (const auto& [mi, ci] : inner.terms()) out.add_term(graft(mo, position, mi), co * ci);
    return out;
}

std::vector<Rational> coords(const Poly& p) {
    std::vector<Rational> v(basis_size(p.arity(), p.alphabet_size()));
    for (const auto& [m, c] : p.terms()) v[index_of(m, p.alphabet_size())] = c;
    return v;
}

Poly poly_from_coords(int arity, int alphabet_size, const std::vector<Rational>& v) {
    if (v.size() != basis_size(arity, alphabet_size))
        throw std::invalid_argument("coordinate vector size mismatch");
    Poly p(arity, alphabet_size);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) p.add_term(monomial_at(arity, alphabet_size, i), v[i]);
    return p;
}

}  // namespace derivar
