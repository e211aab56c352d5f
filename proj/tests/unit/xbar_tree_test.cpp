#include "oracles.hpp"

#include "lingdyn/error.hpp"
#include "lingdyn/fibonacci.hpp"
#include "lingdyn/xbar_tree.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace lingdyn::xbar;

namespace {

std::vector<std::uint64_t> totals(const FTree& t) {
    std::vector<std::uint64_t> out;
    for (std::uint32_t s = 0; s <= t.depth(); ++s) out.push_back(count_states(t, s).total());
    return out;
}

TEST(XbarTree, SmallDepths) {
    EXPECT_EQ(totals(grow(3)), (std::vector<std::uint64_t>{1, 1, 2, 3}));
    const FTree root = grow(0);
    ASSERT_EQ(root.nodes().size(), 1u);
    EXPECT_EQ(root.nodes()[0].state, NodeState::ZERO);
    EXPECT_FALSE(root.nodes()[0].parent.has_value());
    EXPECT_FALSE(root.nodes()[0].rule.has_value());
    EXPECT_EQ(totals(grow(10)), (std::vector<std::uint64_t>{1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89}));
}

TEST(XbarTree, CountsFollowRecurrence) {
    const auto rec = lingdyn::oracle::state_count_recurrence(25);
    const FTree t = grow(25, {.counts_only = true});
    for (std::uint32_t s = 0; s <= 25; ++s) {
        const StateCount c = count_states(t, s);
        EXPECT_EQ(c.zeros, rec[s].first);
        EXPECT_EQ(c.ones, rec[s].second);
        EXPECT_EQ(lingdyn::fibonacci::Int128(c.total()), lingdyn::fibonacci::fib(s + 1));
    }
    const FTree m = grow(12);
    EXPECT_EQ(count_states(m, 3), (StateCount{1, 2}));
    EXPECT_EQ(count_states(m, 0), (StateCount{1, 0}));
    EXPECT_EQ(count_states(m, 6), (StateCount{5, 8}));
    EXPECT_THROW(count_states(m, 13), lingdyn::DomainError);
}

TEST(XbarTree, EdgesObeyBranchingTable) {
    const FTree t = grow(14);
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::size_t> pick(1, t.nodes().size() - 1);
    for (int k = 0; k < 2000; ++k) {
        const FTreeNode& n = t.node(static_cast<NodeId>(pick(rng)));
        ASSERT_TRUE(n.parent && n.rule);
        const FTreeNode& p = t.node(*n.parent);
        EXPECT_EQ(n.step, p.step + 1);
        bool allowed = false;
        for (const Branch& b : branches(p.state)) allowed |= b.rule == *n.rule && b.child == n.state;
        EXPECT_TRUE(allowed);
    }
    for (const FTreeNode& n : t.nodes()) {
        const auto kids = t.children(n.id);
        if (n.step == t.depth()) {
            EXPECT_TRUE(kids.empty());
            continue;
        }
        EXPECT_EQ(kids.size(), n.state == NodeState::ZERO ? 1u : 2u);
        if (kids.size() == 2) {
            EXPECT_EQ(*t.node(kids[0]).rule, Rule::DECAY);
            EXPECT_EQ(*t.node(kids[1]).rule, Rule::PERSIST);
        }
    }
}

TEST(XbarTree, BreadthFirstIds) {
    const FTree t = grow(8);
    for (std::size_t i = 0; i < t.nodes().size(); ++i) {
        EXPECT_EQ(t.nodes()[i].id, i);
        if (i) EXPECT_LE(t.nodes()[i - 1].step, t.nodes()[i].step);
    }
}

TEST(XbarTree, BackwardAmbiguity) {
    const auto one = parents_consistent_with(NodeState::ONE);
    ASSERT_EQ(one.size(), 2u);
    EXPECT_NE(std::find(one.begin(), one.end(), ParentCandidate{NodeState::ZERO, Rule::EXCITE}), one.end());
    EXPECT_NE(std::find(one.begin(), one.end(), ParentCandidate{NodeState::ONE, Rule::PERSIST}), one.end());
    const auto zero = parents_consistent_with(NodeState::ZERO);
    EXPECT_NE(std::find(zero.begin(), zero.end(), ParentCandidate{NodeState::ONE, Rule::DECAY}), zero.end());

    // A ONE node at step >= 2 whose state alone does not fix its parent,
    // while the stored link does.
    const FTree t = grow(6);
    bool witnessed = false;
    for (const FTreeNode& n : t.nodes()) {
        if (n.step < 2 || n.state != NodeState::ONE) continue;
        witnessed = parents_consistent_with(n.state).size() == 2;
        const NodeId a = ancestor(t, n.id, n.step - 1);
        EXPECT_EQ(a, *n.parent);
        EXPECT_EQ(ancestor(t, n.id, 0), 0u);
        if (witnessed) break;
    }
    EXPECT_TRUE(witnessed);
}

TEST(XbarTree, SymmetricTree) {
    const FTree t = grow(9);
    const FTree s = symmetric(t);
    EXPECT_EQ(s.nodes()[0].state, NodeState::ONE);
    EXPECT_EQ(totals(symmetric(grow(3))), (std::vector<std::uint64_t>{1, 1, 2, 3}));
    for (std::size_t i = 0; i < t.nodes().size(); ++i) {
        EXPECT_NE(s.nodes()[i].state, t.nodes()[i].state);
        EXPECT_EQ(s.nodes()[i].parent, t.nodes()[i].parent);
    }
    const FTree back = symmetric(s);
    for (std::size_t i = 0; i < t.nodes().size(); ++i) {
        EXPECT_EQ(back.nodes()[i].state, t.nodes()[i].state);
        EXPECT_EQ(back.nodes()[i].rule, t.nodes()[i].rule);
    }
    EXPECT_EQ(totals(s), totals(t));
}

TEST(XbarTree, ResourceLimits) {
    EXPECT_THROW(grow(31), lingdyn::ResourceError);
    EXPECT_THROW(grow(28), lingdyn::ResourceError);  // more than 2^20 nodes
    EXPECT_NO_THROW(grow(60, {.counts_only = true}));
    EXPECT_THROW(grow(200, {.counts_only = true}), lingdyn::DomainError);
    EXPECT_THROW(grow(10, {.node_cap = 100}), lingdyn::ResourceError);
}

} // namespace
