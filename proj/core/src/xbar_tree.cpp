#include "lingdyn/xbar_tree.hpp"

#include "lingdyn/error.hpp"

#include <string>

namespace lingdyn::xbar {

namespace {

NodeState flip(NodeState s) { return s == NodeState::ZERO ? NodeState::ONE : NodeState::ZERO; }

Rule flip(Rule r) {
    switch (r) {
    case Rule::EXCITE: return Rule::DECAY;
    case Rule::DECAY: return Rule::EXCITE;
    case Rule::PERSIST: return Rule::PERSIST;
    }
    return r;
}

std::vector<StateCount> recurrence_counts(std::uint32_t depth) {
    std::vector<StateCount> counts;
    counts.reserve(depth + 1);
    counts.push_back({1, 0});
    for (std::uint32_t n = 1; n <= depth; ++n) {
        const StateCount& prev = counts.back();
        std::uint64_t ones = 0;
        if (__builtin_add_overflow(prev.zeros, prev.ones, &ones))
            throw DomainError("grow: state count overflows 64 bits at step " + std::to_string(n));
        counts.push_back({prev.ones, ones});
    }
    return counts;
}

} // namespace

const FTreeNode& FTree::node(NodeId id) const {
    if (id >= nodes_.size()) throw DomainError("FTree: node id out of range");
    return nodes_[id];
}

std::vector<NodeId> FTree::children(NodeId id) const {
    if (id >= nodes_.size()) throw DomainError("FTree: node id out of range");
    std::vector<NodeId> out;
    for (std::uint8_t k = 0; k < child_count_[id]; ++k)
        out.push_back(static_cast<NodeId>(child_begin_[id] + k));
    return out;
}

std::vector<NodeId> FTree::level(std::uint32_t step) const {
    if (step > depth_) throw DomainError("FTree: step out of range");
    std::vector<NodeId> out;
    if (counts_only_) return out;
    for (std::size_t i = level_begin_[step]; i < level_begin_[step + 1]; ++i)
        out.push_back(static_cast<NodeId>(i));
    return out;
}

std::vector<Branch> branches(NodeState state, bool symmetric) {
    const NodeState canonical = symmetric ? flip(state) : state;
    std::vector<Branch> out;
    if (canonical == NodeState::ZERO) {
        out.push_back({Rule::EXCITE, NodeState::ONE});
    } else {
        out.push_back({Rule::DECAY, NodeState::ZERO});
        out.push_back({Rule::PERSIST, NodeState::ONE});
    }
    if (symmetric)
        for (Branch& b : out) b = {flip(b.rule), flip(b.child)};
    return out;
}

FTree grow(std::uint32_t depth, const GrowOptions& options) {
    FTree tree;
    tree.depth_ = depth;
    tree.counts_only_ = options.counts_only;
    tree.counts_ = recurrence_counts(depth);
    if (options.counts_only) return tree;

    if (depth > options.max_materialized_depth)
        throw ResourceError("grow: depth " + std::to_string(depth) + " exceeds materialized limit " +
                            std::to_string(options.max_materialized_depth) + " (use counts-only)");
    std::size_t total = 0;
    for (const StateCount& c : tree.counts_) total += c.total();
    if (total > options.node_cap)
        throw ResourceError("grow: " + std::to_string(total) + " nodes exceed cap " +
                            std::to_string(options.node_cap));

    tree.nodes_.reserve(total);
    tree.child_begin_.assign(total, 0);
    tree.child_count_.assign(total, 0);
    tree.level_begin_.push_back(0);
    tree.nodes_.push_back({0, NodeState::ZERO, 0, std::nullopt, std::nullopt});
    tree.level_begin_.push_back(1);

    for (std::uint32_t step = 1; step <= depth; ++step) {
        const std::size_t begin = tree.level_begin_[step - 1];
        const std::size_t end = tree.level_begin_[step];
        for (std::size_t p = begin; p < end; ++p) {
            tree.child_begin_[p] = tree.nodes_.size();
            for (const Branch& b : branches(tree.nodes_[p].state)) {
                const auto id = static_cast<NodeId>(tree.nodes_.size());
                tree.nodes_.push_back({id, b.child, step, static_cast<NodeId>(p), b.rule});
                ++tree.child_count_[p];
            }
        }
        tree.level_begin_.push_back(tree.nodes_.size());
    }
    return tree;
}

StateCount count_states(const FTree& tree, std::uint32_t step) {
    if (step > tree.depth())
        throw DomainError("count_states: step " + std::to_string(step) + " > depth " +
                          std::to_string(tree.depth()));
    if (tree.counts_only()) return tree.counts()[step];
    StateCount c;
    for (NodeId id : tree.level(step)) {
        if (tree.node(id).state == NodeState::ZERO)
            ++c.zeros;
        else
            ++c.ones;
    }
    return c;
}

std::vector<ParentCandidate> parents_consistent_with(NodeState state, bool symmetric) {
    std::vector<ParentCandidate> out;
    const NodeState root_state = symmetric ? NodeState::ONE : NodeState::ZERO;
    if (state == root_state) out.push_back({});
    for (NodeState parent : {NodeState::ZERO, NodeState::ONE})
        for (const Branch& b : branches(parent, symmetric))
            if (b.child == state) out.push_back({parent, b.rule});
    return out;
}

NodeId ancestor(const FTree& tree, NodeId id, std::uint32_t step) {
    const FTreeNode* n = &tree.node(id);
    if (step > n->step) throw DomainError("ancestor: requested step is after the node's step");
    while (n->step > step) n = &tree.node(*n->parent);
    return n->id;
}

FTree symmetric(const FTree& tree) {
    FTree out = tree;
    out.symmetric_ = !tree.symmetric_;
    for (FTreeNode& n : out.nodes_) {
        n.state = flip(n.state);
        if (n.rule) n.rule = flip(*n.rule);
    }
    for (StateCount& c : out.counts_) c = {c.ones, c.zeros};
    return out;
}

std::string_view to_string(NodeState s) { return s == NodeState::ZERO ? "ZERO" : "ONE"; }

std::string_view to_string(Rule r) {
    switch (r) {
    case Rule::EXCITE: return "EXCITE";
    case Rule::DECAY: return "DECAY";
    case Rule::PERSIST: return "PERSIST";
    }
    return "?";
}

} // namespace lingdyn::xbar
