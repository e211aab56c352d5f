#include "lingdyn/labeling.hpp"

#include "lingdyn/error.hpp"

#include <algorithm>
#include <functional>
#include <limits>

namespace lingdyn::syntax {

CopyContext::CopyContext(SynObj root) : root_(std::move(root)) {
    if (!root_.valid()) throw DomainError("CopyContext: invalid root");
    Path p;
    std::function<void(const SynObj&)> walk = [&](const SynObj& s) {
        occ_[s.uid()].push_back(p);
        if (s.is_leaf()) return;
        for (std::uint8_t i = 0; i < 2; ++i) {
            p.push_back(i);
            walk(s.member(i));
            p.pop_back();
        }
    };
    walk(root_);
    for (const auto& [uid, paths] : occ_) {
        std::size_t m = std::numeric_limits<std::size_t>::max();
        for (const auto& q : paths) m = std::min(m, q.size());
        min_depth_[uid] = m;
    }
    // A position is lower when it, or any position containing it, is deeper
    // than its class's shallowest occurrence.
    std::function<void(const SynObj&, bool)> mark = [&](const SynObj& s, bool inherited) {
        const bool lower = inherited || p.size() > min_depth_.at(s.uid());
        if (lower) lower_.insert(p);
        if (s.is_leaf()) return;
        for (std::uint8_t i = 0; i < 2; ++i) {
            p.push_back(i);
            mark(s.member(i), lower);
            p.pop_back();
        }
    };
    mark(root_, false);
}

const std::vector<Path>& CopyContext::occurrences(Uid uid) const {
    static const std::vector<Path> none;
    auto it = occ_.find(uid);
    return it == occ_.end() ? none : it->second;
}

bool CopyContext::is_lower(const Path& p) const { return lower_.contains(p); }

const Path& CopyContext::highest(Uid uid) const {
    const auto& paths = occurrences(uid);
    if (paths.empty()) throw DomainError("CopyContext::highest: uid not in tree");
    const std::size_t m = min_depth_.at(uid);
    for (const auto& q : paths)
        if (q.size() == m) return q;
    return paths.front();
}

namespace {

std::vector<std::string> shared(std::vector<std::string> a, std::vector<std::string> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::vector<std::string> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Path child(const Path& p, std::uint8_t i) {
    Path q = p;
    q.push_back(i);
    return q;
}

} // namespace

const Label& Labeler::label(const Path& p) {
    auto it = memo_.find(p);
    if (it != memo_.end()) return it->second;
    Label l = compute(p);
    return memo_.emplace(p, std::move(l)).first->second;
}

Label Labeler::compute(const Path& p) {
    const SynObj so = at(ctx_.root(), p);
    if (so.is_leaf()) {
        const LexItem& it = so.item();
        return {it.category(), it.categories(), LabelKind::LEXICAL};
    }

    std::vector<std::uint8_t> visible;
    for (std::uint8_t i = 0; i < 2; ++i)
        if (!ctx_.is_lower(child(p, i))) visible.push_back(i);
    // Inside a lower copy everything is invisible; read it as if it were the
    // highest occurrence.
    if (visible.empty()) {
        if (ctx_.is_lower(p)) return label(ctx_.highest(so.uid()));
        throw UnlabelableError("both members of " + so.canonical() + " are lower copies");
    }
    if (visible.size() == 1) {
        Label l = label(child(p, visible.front()));
        l.kind = LabelKind::PROJECTED;
        return l;
    }

    const SynObj& a = so.member(0);
    const SynObj& b = so.member(1);
    auto is_head = [](const SynObj& s) { return s.is_leaf() && s.item().head_eligible(); };

    if (is_head(a) != is_head(b)) {
        const LexItem& h = is_head(a) ? a.item() : b.item();
        return {h.category(), h.categories(), LabelKind::HEAD};
    }
    if (!is_head(a) && a.is_leaf() != b.is_leaf()) {
        // A non-head lexical item is passed over; the phrase beside it projects.
        Label l = label(child(p, a.is_leaf() ? 1 : 0));
        l.kind = LabelKind::PROJECTED;
        return l;
    }

    const Label& la = label(child(p, 0));
    const Label& lb = label(child(p, 1));
    std::vector<std::string> common = shared(la.prominent, lb.prominent);
    if (common.empty())
        throw UnlabelableError("no head and no shared feature in " + so.canonical());
    return {common.front(), common, LabelKind::SHARED_FEATURE};
}

Label label(const SynObj& so) {
    CopyContext ctx(so);
    Labeler l(ctx);
    return l.label({});
}

std::string_view to_string(LabelKind k) {
    switch (k) {
    case LabelKind::LEXICAL: return "lexical";
    case LabelKind::HEAD: return "head";
    case LabelKind::SHARED_FEATURE: return "shared_feature";
    case LabelKind::PROJECTED: return "projected";
    }
    return "?";
}

} // namespace lingdyn::syntax
