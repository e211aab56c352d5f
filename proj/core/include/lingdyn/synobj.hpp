#pragma once

#include "lingdyn/lexicon.hpp"

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace lingdyn::syntax {

/// Identity of a syntactic object. Internal Merge re-uses the moved object
/// itself, so every position holding the same Uid is an occurrence of one
/// copy class.
using Uid = std::uint64_t;

/// Address of a term: member indices from the root. Member indices follow
/// storage order, which carries no linguistic meaning.
using Path = std::vector<std::uint8_t>;

/// Immutable binary set tree. A SynObj is a cheap handle; Merge builds new
/// nodes on top of existing ones and never touches them (No Tampering).
class SynObj {
public:
    SynObj() = default;

    static SynObj leaf(LexItemPtr item, Uid uid);
    /// Throws DerivationError when a and b are the same object.
    static SynObj pair(const SynObj& a, const SynObj& b, Uid uid);

    bool valid() const { return node_ != nullptr; }
    bool is_leaf() const;
    const LexItem& item() const;
    const LexItemPtr& item_ptr() const;
    const SynObj& member(std::size_t i) const;
    Uid uid() const;
    std::uint64_t content_hash() const;
    std::size_t leaf_count() const;

    /// Order-free serialization: {a,b} and {b,a} print identically. Members
    /// are sorted by content hash (ties by text); uids are not included.
    std::string canonical() const;

    /// Deep structural equality ignoring member order and identity.
    bool structurally_equal(const SynObj& other) const;
    bool same_object(const SynObj& other) const { return node_ == other.node_; }

    /// Index (0 or 1) of the member that comes first in canonical order.
    std::size_t canonical_first() const;

private:
    struct Node;
    explicit SynObj(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/// Hash compatible with set equality.
struct SynObjContentHash {
    std::size_t operator()(const SynObj& s) const { return static_cast<std::size_t>(s.content_hash()); }
};

struct SynObjStructuralEqual {
    bool operator()(const SynObj& a, const SynObj& b) const { return a.structurally_equal(b); }
};

/// Throws DomainError if the path leaves the tree.
SynObj at(const SynObj& root, const Path& path);

/// Every position (root included) whose object has this uid, in preorder
/// over storage order.
std::vector<Path> occurrences(const SynObj& root, Uid uid);

/// All positions of the tree in preorder.
std::vector<Path> positions(const SynObj& root);

/// Is `path` a strict extension of `prefix`?
bool strictly_inside(const Path& path, const Path& prefix);
bool starts_with(const Path& path, const Path& prefix);

} // namespace lingdyn::syntax
