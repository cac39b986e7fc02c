#pragma once

#include <compare>
#include <vector>

#include "derivar/freeop.hpp"

namespace derivar {

/// A generator occurrence d^order(x_var).
struct DiffLeaf {
    int var = 0;
    int order = 0;
    auto operator<=>(const DiffLeaf&) const = default;
};

/// Tree monomial with operation-labeled internal nodes and DiffLeaf leaves.
/// Unlike Monomial, leaf variables may repeat (free differential magma).
class DiffTerm {
public:
    DiffTerm(TreeShape shape, std::vector<int> op_labels, std::vector<DiffLeaf> leaves);
    static DiffTerm leaf(int var, int order) { return DiffTerm(TreeShape::leaf(), {}, {{var, order}}); }
    static DiffTerm join(int op, const DiffTerm& left, const DiffTerm& right);

    int leaf_count() const { return shape_.leaf_count(); }
    const TreeShape& shape() const { return shape_; }
    const std::vector<int>& op_labels() const { return ops_; }
    const std::vector<DiffLeaf>& leaves() const { return leaves_; }
    int max_op() const;
    int total_order() const;

    /// Each leaf individually rewritten; used by derivations.
    DiffTerm with_leaf_order(std::size_t leaf_index, int order) const;

    friend std::strong_ordering operator<=>(const DiffTerm& a, const DiffTerm& b);
    friend bool operator==(const DiffTerm&, const DiffTerm&) = default;

private:
    TreeShape shape_;
    std::vector<int> ops_;
    std::vector<DiffLeaf> leaves_;
};

}  // namespace derivar
