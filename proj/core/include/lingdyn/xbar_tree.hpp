#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace lingdyn::xbar {

enum class NodeState : std::uint8_t { ZERO, ONE };

/// EXCITE is sigma+ on |0>, DECAY is sigma- on |1>, PERSIST is the
/// (sigma+ sigma-)^n loop on |1>, collapsed to a single step.
enum class Rule : std::uint8_t { EXCITE, DECAY, PERSIST };

using NodeId = std::uint32_t;

struct FTreeNode {
    NodeId id = 0;
    NodeState state = NodeState::ZERO;
    std::uint32_t step = 0;
    std::optional<NodeId> parent;
    std::optional<Rule> rule; // absent exactly on the root
};

struct StateCount {
    std::uint64_t zeros = 0;
    std::uint64_t ones = 0;

    std::uint64_t total() const { return zeros + ones; }
    friend bool operator==(const StateCount&, const StateCount&) = default;
};

struct GrowOptions {
    std::size_t node_cap = std::size_t{1} << 20;
    std::uint32_t max_materialized_depth = 30;
    /// Use the (zeros, ones) -> (ones, zeros + ones) recurrence and store no nodes.
    bool counts_only = false;
};

/// Breadth-first tree. Node ids are assigned level by level; within one
/// parent the DECAY/EXCITE child precedes the PERSIST child.
class FTree {
public:
    std::uint32_t depth() const { return depth_; }
    bool counts_only() const { return counts_only_; }
    /// True for the tree obtained by exchanging |0> <-> |1> and sigma+ <-> sigma-.
    bool is_symmetric() const { return symmetric_; }

    const std::vector<FTreeNode>& nodes() const { return nodes_; }
    const FTreeNode& node(NodeId id) const;
    std::vector<NodeId> children(NodeId id) const;
    /// Ids of all nodes generated at `step`; empty in counts-only trees.
    std::vector<NodeId> level(std::uint32_t step) const;

    /// Per-step (zeros, ones), index = step.
    const std::vector<StateCount>& counts() const { return counts_; }

    friend FTree grow(std::uint32_t depth, const GrowOptions& options);
    friend FTree symmetric(const FTree& tree);

private:
    std::uint32_t depth_ = 0;
    bool counts_only_ = false;
    bool symmetric_ = false;
    std::vector<FTreeNode> nodes_;
    std::vector<std::size_t> level_begin_;  // size depth+2 when materialized
    std::vector<std::size_t> child_begin_;  // per node, into nodes_
    std::vector<std::uint8_t> child_count_;
    std::vector<StateCount> counts_;
};

struct Branch {
    Rule rule;
    NodeState child;
};

/// Forward branching table. ZERO -> {EXCITE: ONE}; ONE -> {DECAY: ZERO, PERSIST: ONE}.
/// With `symmetric` the states and EXCITE/DECAY are exchanged.
std::vector<Branch> branches(NodeState state, bool symmetric = false);

/// Throws DomainError on counts-only depth overflow, ResourceError when a
/// materialized tree would exceed the depth limit or the node cap.
FTree grow(std::uint32_t depth, const GrowOptions& options = {});

/// Tally of ZERO/ONE nodes at `step`. For materialized trees the nodes are
/// counted directly. Throws DomainError if step > depth.
StateCount count_states(const FTree& tree, std::uint32_t step);

/// A local inversion of one forward step. Both fields absent = "is the root".
struct ParentCandidate {
    std::optional<NodeState> parent_state;
    std::optional<Rule> rule;

    bool is_root_case() const { return !parent_state.has_value(); }
    friend bool operator==(const ParentCandidate&, const ParentCandidate&) = default;
};

/// Every (parent state, rule) that could have produced a node in `state`.
/// ONE has two candidates, which is why the backward walk is not determined
/// by the state alone.
std::vector<ParentCandidate> parents_consistent_with(NodeState state, bool symmetric = false);

/// Walks stored parent links back to the ancestor at `step`.
NodeId ancestor(const FTree& tree, NodeId id, std::uint32_t step);

/// Flips every state and swaps EXCITE <-> DECAY; ids and shape are kept.
FTree symmetric(const FTree& tree);

std::string_view to_string(NodeState s);
std::string_view to_string(Rule r);

} // namespace lingdyn::xbar
