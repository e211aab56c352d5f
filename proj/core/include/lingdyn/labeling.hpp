#pragma once

#include "lingdyn/synobj.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace lingdyn::syntax {

/// Occurrence analysis of one root. An occurrence is "lower" when it is
/// deeper than the shallowest occurrence of its class; lower occurrences
/// (and everything inside them) are invisible to minimal search.
class CopyContext {
public:
    explicit CopyContext(SynObj root);

    const SynObj& root() const { return root_; }
    const std::vector<Path>& occurrences(Uid uid) const;
    std::size_t occurrence_count(Uid uid) const { return occurrences(uid).size(); }
    bool is_copy(Uid uid) const { return occurrence_count(uid) > 1; }
    bool is_lower(const Path& p) const;
    /// First shallowest occurrence in preorder.
    const Path& highest(Uid uid) const;
    const std::map<Uid, std::vector<Path>>& classes() const { return occ_; }

private:
    SynObj root_;
    std::map<Uid, std::vector<Path>> occ_;
    std::map<Uid, std::size_t> min_depth_;
    std::set<Path> lower_;
};

enum class LabelKind {
    LEXICAL,        ///< a leaf names itself
    HEAD,           ///< {H, XP}: the unique head-eligible lexical member
    SHARED_FEATURE, ///< {XP, YP} (or {H, H}): a category both members carry
    PROJECTED,      ///< minimal search passed a non-head or an invisible copy
};

struct Label {
    std::string category;
    /// Categories visible to a containing {XP, YP}: the labeling head's
    /// category tags, or the shared ones.
    std::vector<std::string> prominent;
    LabelKind kind = LabelKind::LEXICAL;
};

/// Minimal search at transfer.
///
/// For a set {a, b}, members that are lower copies are skipped. With one
/// visible member the set takes its label. Otherwise a unique head-eligible
/// lexical member (not -H) labels it. Two such heads must share a category.
/// With none, a non-head lexical item is passed over and the phrase beside it
/// projects; two phrases {XP, YP} are labeled by the first category they
/// share. Anything else is unlabelable.
class Labeler {
public:
    explicit Labeler(const CopyContext& context) : ctx_(context) {}

    /// Throws UnlabelableError.
    const Label& label(const Path& p);

private:
    Label compute(const Path& p);
    const CopyContext& ctx_;
    std::map<Path, Label> memo_;
};

/// Label of `so` taken as its own transfer root.
Label label(const SynObj& so);

std::string_view to_string(LabelKind k);

} // namespace lingdyn::syntax
