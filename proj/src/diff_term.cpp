#include "derivar/diff_term.hpp"

#include <algorithm>
#include <stdexcept>

namespace derivar {

DiffTerm::DiffTerm(TreeShape shape, std::vector<int> op_labels, std::vector<DiffLeaf> leaves)
    : shape_(std::move(shape)), ops_(std::move(op_labels)), leaves_(std::move(leaves)) {
    if (static_cast<int>(ops_.size()) != shape_.internal_count())
        throw std::invalid_argument("op label count must match internal node count");
    if (static_cast<int>(leaves_.size()) != shape_.leaf_count())
        throw std::invalid_argument("leaf count mismatch");
    for (const DiffLeaf& l : leaves_)
        if (l.var < 1 || l.order < 0) throw std::invalid_argument("bad differential leaf");
    for (int op : ops_)
        if (op < 0) throw std::invalid_argument("negative op label");
}

DiffTerm DiffTerm::join(int op, const DiffTerm& left, const DiffTerm& right) {
    std::vector<int> ops;
    ops.reserve(left.ops_.size() + right.ops_.size() + 1);
    ops.push_back(op);
    ops.insert(ops.end(), left.ops_.begin(), left.ops_.end());
    ops.insert(ops.end(), right.ops_.begin(), right.ops_.end());
    std::vector<DiffLeaf> leaves(left.leaves_);
    leaves.insert(leaves.end(), right.leaves_.begin(), right.leaves_.end());
    return DiffTerm(TreeShape::join(left.shape_, right.shape_), std::move(ops), std::move(leaves));
}

int DiffTerm::max_op() const {
    int m = -1;
    for (int op : ops_) m = std::max(m, op);
    return m;
}

int DiffTerm::total_order() const {
    int s = 0;
    for (const DiffLeaf& l : leaves_) s += l.order;
    return s;
}

DiffTerm DiffTerm::with_leaf_order(std::size_t leaf_index, int order) const {
    std::vector<DiffLeaf> leaves(leaves_);
    leaves[leaf_index].order = order;
    return DiffTerm(shape_, ops_, std::move(leaves));
}

std::strong_ordering operator<=>(const DiffTerm& a, const DiffTerm& b) {
    if (auto c = a.shape_ <=> b.shape_; c != 0) return c;
    if (auto c = a.ops_ <=> b.ops_; c != 0) return c;
    return a.leaves_ <=> b.leaves_;
}

}  // namespace derivar
