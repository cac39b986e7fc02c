#pragma once

#include <string>
#include <utility>
#include <vector>

#include "derivar/linalg.hpp"
#include "derivar/presentations.hpp"

namespace derivar {

/// One derived symbol of the pair alphabet: evaluated on (x1,x2) it yields
/// m_{p_op}(x1,x2) tensor q_{q_op}(x1,x2) when aligned, and
/// m_{p_op}(x1,x2) tensor q_{q_op}(x2,x1) when crossed.
struct PairSymbol {
    int p_op;
    int q_op;
    bool crossed;
};

/// The 2 * kP * kQ derived symbols for a white product P o Q. When Q is the
/// Novikov presentation the aligned/crossed symbols are named prec/succ
/// (x1 prec x2 = x1 d(x2), x1 succ x2 = d(x1) x2).
class PairAlphabet {
public:
    PairAlphabet(const OperadPresentation& p, const OperadPresentation& q);

    int size() const { return static_cast<int>(symbols_.size()); }
    const PairSymbol& symbol(int i) const { return symbols_[static_cast<std::size_t>(i)]; }
    const std::vector<std::string>& names() const { return names_; }

    /// Evaluates a pair-alphabet monomial to its (P-side, Q-side) image;
    /// crossed symbols swap the Q-side subtrees.
    std::pair<Monomial, Monomial> evaluate(const Monomial& m) const;

private:
    std::vector<PairSymbol> symbols_;
    std::vector<std::string> names_;
};

/// The arity-n slice of the white product P o Q: the evaluation matrix Phi
/// from M_n(pair alphabet) into P(n) tensor Q(n), its kernel (the derived
/// identities in free pair-symbol form), the arity-2 kernel, the arity-n
/// consequences of the arity-2 kernel, and canonical representatives of
/// the relations that are new at arity n.
struct WhiteResult {
    OperadPresentation p;
    OperadPresentation q;
    int arity = 0;
    PairAlphabet alphabet;
    Matrix phi;                // (dim P(n) * dim Q(n)) x |M_n(pair)|
    Subspace relations;        // ker phi
    std::size_t image_dim = 0; // rank of phi
    Subspace arity2_kernel;    // ker phi at arity 2 (equals `relations` when arity == 2)
    Subspace induced;          // consequences of arity2_kernel at this arity
    std::vector<Poly> new_generators;  // kernel basis vectors outside `induced`
    std::size_t new_dim = 0;           // relations.dim() - induced.dim()
};

Matrix phi_map(const OperadPresentation& p, const OperadPresentation& q, int n);
WhiteResult white_relations(const OperadPresentation& p, const OperadPresentation& q, int n);

/// white_relations against the Novikov operad: the derived identities of P.
WhiteResult derived_identities(const OperadPresentation& p, int n);

/// True iff the consequence closure of the generators (arities 2, 3 or n
/// over the pair alphabet), together with the arity-2 kernel's own
/// consequences, spans exactly result.relations.
bool relations_match(const WhiteResult& result, const std::vector<Poly>& generators);

}  // namespace derivar
