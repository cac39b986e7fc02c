#include "derivar/presentations.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "derivar/parser.hpp"

namespace derivar {

std::string OperadPresentation::canonical_string() const {
    std::ostringstream os;
    os << "derivar-presentation v1\nops";
    for (const auto& op : ops) os << ' ' << op;
    os << "\nrel2";
    for (const auto& r : rel2) os << '|' << render(r, ops);
    os << "\nrel3";
    for (const auto& r : rel3) os << '|' << render(r, ops);
    os << '\n';
    return os.str();
}

std::uint64_t OperadPresentation::content_hash() const {
    // FNV-1a
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : canonical_string()) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

void OperadPresentation::validate() const {
    if (ops.empty()) throw std::invalid_argument("presentation needs at least one operation");
    for (std::size_t i = 0; i < ops.size(); ++i)
        for (std::size_t j = i + 1; j < ops.size(); ++j)
            if (ops[i] == ops[j]) throw std::invalid_argument("duplicate operation name: " + ops[i]);
    auto check = [&](const Poly& r, int arity) {
        if (r.arity() != arity)
            throw std::invalid_argument("relation arity mismatch in presentation '" + name + "'");
        if (r.alphabet_size() != alphabet_size())
            throw std::invalid_argument("relation alphabet mismatch in presentation '" + name + "'");
    };
    for (const auto& r : rel2) check(r, 2);
    for (const auto& r : rel3) check(r, 3);
}

namespace {

OperadPresentation make_builtin(const std::string& name) {
    const std::vector<std::string> m = {"m"};
    auto rel = [&](const char* src, int arity) { return parse_expr(src, m, arity); };
    OperadPresentation p;
    p.name = name;
    p.ops = m;
    if (name == "mag") {
        // no relations
    } else if (name == "com") {
        // commutative associative; commutativity alone would leave a
        // 3-dimensional arity-3 component
        p.rel2 = {rel("m(x1,x2) - m(x2,x1)", 2)};
        p.rel3 = {rel("m(m(x1,x2),x3) - m(x1,m(x2,x3))", 3)};
    } else if (name == "as") {
        p.rel3 = {rel("m(m(x1,x2),x3) - m(x1,m(x2,x3))", 3)};
    } else if (name == "lie") {
        p.rel2 = {rel("m(x1,x2) + m(x2,x1)", 2)};
        p.rel3 = {rel("m(m(x1,x2),x3) - m(x1,m(x2,x3)) + m(x2,m(x1,x3))", 3)};
    } else if (name == "nov") {
        p.rel3 = {rel("m(m(x1,x2),x3) - m(x1,m(x2,x3)) - m(m(x2,x1),x3) + m(x2,m(x1,x3))", 3),
                  rel("m(m(x1,x2),x3) - m(m(x1,x3),x2)", 3)};
    } else {
        throw std::invalid_argument("unknown builtin presentation: " + name);
    }
    return p;
}

}  // namespace

const std::vector<std::string>& builtin_names() {
    static const std::vector<std::string> names = {"mag", "com", "as", "lie", "nov"};
    return names;
}

bool is_builtin(const std::string& name) {
    for (const auto& n : builtin_names())
        if (n == name) return true;
    return false;
}

OperadPresentation builtin(const std::string& name) {
    return make_builtin(name);
}

namespace {

std::mutex g_mutex;
std::map<std::pair<std::uint64_t, int>, std::shared_ptr<const Component>> g_components;
std::shared_ptr<ComponentStore> g_store;

std::vector<std::size_t> non_pivots(std::size_t ambient, const std::vector<std::size_t>& pivots) {
    std::vector<std::size_t> out;
    std::size_t pi = 0;
    for (std::size_t c = 0; c < ambient; ++c) {
        if (pi < pivots.size() && pivots[pi] == c) ++pi;
        else out.push_back(c);
    }
    return out;
}

Subspace compute_relations(const OperadPresentation& p, int n) {
    const int k = p.alphabet_size();
    const std::size_t ambient = basis_size(n, k);
    if (n == 1) return Subspace::zero(ambient);

    std::vector<Poly> gens;
    if (n == 2) {
        gens = p.rel2;
    } else {
        if (n == 3) gens = p.rel3;
        const Component& prev = *component(p, n - 1);
        std::vector<Poly> prev_polys;
        prev_polys.reserve(prev.relations.dim());
        for (std::size_t i = 0; i < prev.relations.dim(); ++i)
            prev_polys.push_back(poly_from_coords(n - 1, k, prev.relations.basis().row(i)));
        for (const Poly& r : prev_polys) {
            for (const Monomial& g : enumerate_monomials(2, k)) {
                Poly gp = Poly::monomial(g, k);
                gens.push_back(graft_poly(gp, 1, r));
                gens.push_back(graft_poly(gp, 2, r));
                for (int j = 1; j < n; ++j) gens.push_back(graft_poly(r, j, gp));
            }
        }
    }
    return sn_closure_span(gens, n, k);
}

}  // namespace

Subspace sn_closure_span(const std::vector<Poly>& gens, int n, int alphabet_size) {
    const std::size_t ambient = basis_size(n, alphabet_size);
    RrefBuilder builder(ambient);
    std::vector<Poly> queue;
    for (const Poly& g : gens) {
        if (g.is_zero()) continue;
        if (g.arity() != n || g.alphabet_size() != alphabet_size)
            throw std::invalid_argument("sn_closure_span: generator arity/alphabet mismatch");
        if (builder.insert(coords(g))) queue.push_back(g);
    }
    // adjacent transpositions generate S_n; a span closed under them is
    // closed under the whole action
    std::vector<Perm> gens_sn;
    for (int i = 1; i < n; ++i) gens_sn.push_back(Perm::transposition(n, i, i + 1));
    while (!queue.empty()) {
        Poly v = std::move(queue.back());
        queue.pop_back();
        for (const Perm& tau : gens_sn) {
            Poly w = act(tau, v);
            if (builder.insert(coords(w))) queue.push_back(std::move(w));
        }
    }
    return std::move(builder).take();
}

void set_component_store(std::shared_ptr<ComponentStore> store) {
    std::lock_guard<std::mutex> lock(g_mutex);
    g_store = std::move(store);
}

std::shared_ptr<const Component> component(const OperadPresentation& p, int n) {
    if (n < 1 || n > kMaxArity)
        throw std::invalid_argument("arity out of bounds (1.." + std::to_string(kMaxArity) + ")");
    p.validate();
    const std::uint64_t hash = p.content_hash();
    const auto key = std::make_pair(hash, n);
    std::shared_ptr<ComponentStore> store;
    {
        std::lock_guard<std::mutex> lock(g_mutex);
        auto it = g_components.find(key);
        if (it != g_components.end()) return it->second;
        store = g_store;
    }
    if (store) {
        if (auto loaded = store->load(p, n)) {
            auto sp = std::make_shared<const Component>(std::move(*loaded));
            std::lock_guard<std::mutex> lock(g_mutex);
            auto [it, inserted] = g_components.emplace(key, sp);
            return it->second;
        }
    }
    Component c;
    c.presentation_hash = hash;
    c.arity = n;
    c.alphabet_size = p.alphabet_size();
    c.relations = compute_relations(p, n);
    c.normal_basis = non_pivots(c.relations.ambient(), c.relations.pivots());
    c.dim = c.normal_basis.size();
    auto sp = std::make_shared<const Component>(std::move(c));
    if (store) store->store(p, n, *sp);
    std::lock_guard<std::mutex> lock(g_mutex);
    auto [it, inserted] = g_components.emplace(key, sp);
    return it->second;  // write-once: first computation wins
}

Subspace relation_subspace(const OperadPresentation& p, int n) {
    return component(p, n)->relations;
}

std::vector<Rational> normal_form(const Component& c, const Poly& p) {
    if (p.arity() != c.arity) throw std::invalid_argument("normal_form: arity mismatch");
    if (p.alphabet_size() != c.alphabet_size)
        throw std::invalid_argument("normal_form: alphabet mismatch");
    std::vector<Rational> residual = c.relations.reduce(coords(p));
    std::vector<Rational> out;
    out.reserve(c.normal_basis.size());
    for (std::size_t idx : c.normal_basis) out.push_back(residual[idx]);
    return out;
}

bool is_identity(const OperadPresentation& p, const Poly& f) {
    if (f.is_zero()) return true;
    auto c = component(p, f.arity());
    for (const Rational& x : normal_form(*c, f))
        if (x != 0) return false;
    return true;
}

}  // namespace derivar
