#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "derivar/freeop.hpp"
#include "derivar/linalg.hpp"

namespace derivar {

/// Largest arity the consequence expansion will compute.
constexpr int kMaxArity = 5;

/// A variety of binary algebras: named operations plus relation
/// polynomials of arities 2 and 3 (quadratic binary operads).
struct OperadPresentation {
    std::string name;
    std::vector<std::string> ops;
    std::vector<Poly> rel2;
    std::vector<Poly> rel3;

    int alphabet_size() const { return static_cast<int>(ops.size()); }

    /// Stable serialization of ops + relations (name excluded); two
    /// presentations with equal canonical strings share cached components.
    std::string canonical_string() const;
    std::uint64_t content_hash() const;

    void validate() const;  // throws std::invalid_argument
};

/// Built-in presentations: mag, com, as, lie, nov.
OperadPresentation builtin(const std::string& name);
bool is_builtin(const std::string& name);
const std::vector<std::string>& builtin_names();

/// Arity component Var(n): the relation subspace inside M_n plus the
/// normal (non-pivot) monomial basis of the quotient.
struct Component {
    std::uint64_t presentation_hash = 0;
    int arity = 0;
    int alphabet_size = 0;
    Subspace relations;
    std::vector<std::size_t> normal_basis;
    std::size_t dim = 0;
};

/// Optional persistent layer underneath the in-memory component memo.
class ComponentStore {
public:
    virtual ~ComponentStore() = default;
    virtual std::optional<Component> load(const OperadPresentation& p, int arity) = 0;
    virtual void store(const OperadPresentation& p, int arity, const Component& c) = 0;
};

/// Installs (or clears, with nullptr) the persistent component store.
void set_component_store(std::shared_ptr<ComponentStore> store);

/// Canonical basis of the smallest S_n-invariant subspace of M_n
/// containing the given polynomials (closure under adjacent
/// transpositions to a fixpoint).
Subspace sn_closure_span(const std::vector<Poly>& gens, int n, int alphabet_size);

/// The multilinear consequence space R_P(n) of the presentation's
/// relations, as a canonical subspace of M_n coordinates.
Subspace relation_subspace(const OperadPresentation& p, int n);

/// Memoized per (content hash, arity).
std::shared_ptr<const Component> component(const OperadPresentation& p, int n);

/// Coordinates of p's image in the quotient, over the normal basis.
std::vector<Rational> normal_form(const Component& c, const Poly& p);

bool is_identity(const OperadPresentation& p, const Poly& f);

}  // namespace derivar
