#include "lingdyn/synobj.hpp"

#include "lingdyn/error.hpp"

#include <algorithm>
#include <functional>

namespace lingdyn::syntax {

namespace {

// FNV-1a then a splitmix finalizer: stable across platforms and runs.
std::uint64_t hash_text(std::string_view s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

} // namespace

struct SynObj::Node {
    Uid uid = 0;
    LexItemPtr item;
    std::array<SynObj, 2> members;
    std::uint64_t hash = 0;
    std::size_t leaves = 1;
};

SynObj SynObj::leaf(LexItemPtr item, Uid uid) {
    if (!item) throw DomainError("SynObj::leaf: null lexical item");
    auto n = std::make_shared<Node>();
    n->uid = uid;
    n->hash = mix(hash_text(item->id()));
    n->item = std::move(item);
    return SynObj(std::move(n));
}

SynObj SynObj::pair(const SynObj& a, const SynObj& b, Uid uid) {
    if (!a.valid() || !b.valid()) throw DerivationError("Merge: invalid operand");
    if (a.same_object(b)) throw DerivationError("Merge: cannot form {a, a} from a single object");
    auto n = std::make_shared<Node>();
    n->uid = uid;
    n->members = {a, b};
    const std::uint64_t lo = std::min(a.content_hash(), b.content_hash());
    const std::uint64_t hi = std::max(a.content_hash(), b.content_hash());
    n->hash = mix(mix(lo) ^ (hi + 0x632be59bd9b4e019ull));
    n->leaves = a.leaf_count() + b.leaf_count();
    return SynObj(std::move(n));
}

bool SynObj::is_leaf() const { return node_->item != nullptr; }

const LexItem& SynObj::item() const {
    if (!is_leaf()) throw DomainError("SynObj::item on a set");
    return *node_->item;
}

const LexItemPtr& SynObj::item_ptr() const { return node_->item; }

const SynObj& SynObj::member(std::size_t i) const {
    if (is_leaf() || i > 1) throw DomainError("SynObj::member: no such member");
    return node_->members[i];
}

Uid SynObj::uid() const { return node_->uid; }
std::uint64_t SynObj::content_hash() const { return node_->hash; }
std::size_t SynObj::leaf_count() const { return node_->leaves; }

std::size_t SynObj::canonical_first() const {
    const SynObj& a = member(0);
    const SynObj& b = member(1);
    if (a.content_hash() != b.content_hash()) return a.content_hash() < b.content_hash() ? 0 : 1;
    return a.canonical() <= b.canonical() ? 0 : 1;
}

std::string SynObj::canonical() const {
    if (is_leaf()) return item().id();
    const std::size_t f = canonical_first();
    return "{" + member(f).canonical() + "," + member(1 - f).canonical() + "}";
}

bool SynObj::structurally_equal(const SynObj& other) const {
    if (same_object(other)) return true;
    if (content_hash() != other.content_hash() || leaf_count() != other.leaf_count()) return false;
    if (is_leaf() != other.is_leaf()) return false;
    if (is_leaf()) return item().id() == other.item().id();
    const SynObj& a0 = member(0);
    const SynObj& a1 = member(1);
    const SynObj& b0 = other.member(0);
    const SynObj& b1 = other.member(1);
    return (a0.structurally_equal(b0) && a1.structurally_equal(b1)) ||
           (a0.structurally_equal(b1) && a1.structurally_equal(b0));
}

SynObj at(const SynObj& root, const Path& path) {
    SynObj cur = root;
    for (std::uint8_t i : path) {
        if (cur.is_leaf() || i > 1) throw DomainError("path leaves the tree");
        cur = cur.member(i);
    }
    return cur;
}

std::vector<Path> positions(const SynObj& root) {
    std::vector<Path> out;
    Path p;
    std::function<void(const SynObj&)> walk = [&](const SynObj& s) {
        out.push_back(p);
        if (s.is_leaf()) return;
        for (std::uint8_t i = 0; i < 2; ++i) {
            p.push_back(i);
            walk(s.member(i));
            p.pop_back();
        }
    };
    walk(root);
    return out;
}

std::vector<Path> occurrences(const SynObj& root, Uid uid) {
    std::vector<Path> out;
    Path p;
    std::function<void(const SynObj&)> walk = [&](const SynObj& s) {
        if (s.uid() == uid) out.push_back(p);
        if (s.is_leaf()) return;
        for (std::uint8_t i = 0; i < 2; ++i) {
            p.push_back(i);
            walk(s.member(i));
            p.pop_back();
        }
    };
    walk(root);
    return out;
}

bool starts_with(const Path& path, const Path& prefix) {
    return path.size() >= prefix.size() && std::equal(prefix.begin(), prefix.end(), path.begin());
}

bool strictly_inside(const Path& path, const Path& prefix) {
    return path.size() > prefix.size() && starts_with(path, prefix);
}

} // namespace lingdyn::syntax
