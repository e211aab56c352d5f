#include "lingdyn/transfer.hpp"

#include "lingdyn/error.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace lingdyn::syntax {

namespace {

Path child(const Path& p, std::uint8_t i) {
    Path q = p;
    q.push_back(i);
    return q;
}

} // namespace

std::size_t SpecHeadComplement::first(const SynObj& set, const Path& where, const CopyContext& ctx) const {
    const SynObj& a = set.member(0);
    const SynObj& b = set.member(1);
    // 0: specifier leaf, 1: head, 2: complement leaf, 3: phrase
    auto rank = [](const SynObj& s) {
        if (!s.is_leaf()) return 3;
        const LexItem& it = s.item();
        if (it.head_eligible()) return 1;
        return it.complement() ? 2 : 0;
    };
    const int ra = rank(a);
    const int rb = rank(b);
    if (ra == 3 && rb == 1) return 1;
    if (ra == 1 && rb == 3) return 0;
    if (ra != rb) {
        // A leaf beside a phrase: specifier leaves lead, complement leaves trail.
        if (ra == 3) return rb == 0 ? 1 : 0;
        if (rb == 3) return ra == 0 ? 0 : 1;
        return ra < rb ? 0 : 1;
    }
    if (ra == 3) {
        const bool ma = ctx.is_copy(a.uid()) && !ctx.is_lower(child(where, 0));
        const bool mb = ctx.is_copy(b.uid()) && !ctx.is_lower(child(where, 1));
        if (ma != mb) return ma ? 0 : 1;
        if (a.leaf_count() != b.leaf_count()) return a.leaf_count() < b.leaf_count() ? 0 : 1;
    }
    return set.canonical_first();
}

namespace {

struct Position {
    Path path;
    SynObj so;
    std::size_t order = 0; // linear (PF) order of the position
    std::optional<std::size_t> parent;
};

} // namespace

TransferOutput transfer(const SynObj& root, const TransferOptions& options) {
    if (!root.valid()) throw DomainError("transfer: invalid root");
    CopyContext ctx(root);
    Labeler labeler(ctx);
    static const SpecHeadComplement default_policy;
    const Linearization& lin = options.linearization ? *options.linearization : default_policy;

    // Positions in linear order: depth-first, earlier member first.
    std::vector<Position> pos;
    std::map<Path, std::size_t> index;
    std::function<void(const SynObj&, const Path&, std::optional<std::size_t>)> walk =
        [&](const SynObj& s, const Path& p, std::optional<std::size_t> parent) {
            const std::size_t me = pos.size();
            pos.push_back({p, s, me, parent});
            index[p] = me;
            if (s.is_leaf()) return;
            const std::size_t f = lin.first(s, p, ctx);
            for (std::size_t k : {f, 1 - f}) walk(s.member(k), child(p, static_cast<std::uint8_t>(k)), me);
        };
    walk(root, {}, std::nullopt);

    // Choose one occurrence per copy class, then silence everything below a
    // silent occurrence. A class whose chosen occurrence ends up inside a
    // silent copy is re-chosen among its live occurrences.
    const auto& classes = ctx.classes();
    std::map<Uid, std::size_t> chosen;
    auto pick = [&](const std::vector<std::size_t>& cands) {
        return *std::min_element(cands.begin(), cands.end(), [&](std::size_t x, std::size_t y) {
            const std::size_t dx = pos[x].path.size();
            const std::size_t dy = pos[y].path.size();
            if (dx != dy)
                return options.pronunciation == Pronunciation::LOWEST ? dx > dy : dx < dy;
            return pos[x].order < pos[y].order;
        });
    };
    std::vector<bool> live(pos.size(), true);
    auto recompute_live = [&] {
        for (std::size_t i = 0; i < pos.size(); ++i) {
            const bool parent_live = !pos[i].parent || live[*pos[i].parent];
            const Uid u = pos[i].so.uid();
            const bool own = options.pronunciation == Pronunciation::ALL || !chosen.contains(u) ||
                             chosen.at(u) == i;
            live[i] = parent_live && own;
        }
    };
    if (options.pronunciation != Pronunciation::ALL) {
        for (const auto& [uid, paths] : classes) {
            if (paths.size() < 2) continue;
            std::vector<std::size_t> c;
            for (const auto& p : paths) c.push_back(index.at(p));
            chosen[uid] = pick(c);
        }
        for (std::size_t round = 0; round <= classes.size(); ++round) {
            recompute_live();
            bool changed = false;
            for (auto& [uid, at_idx] : chosen) {
                const auto& ch = pos[at_idx];
                if (!ch.parent || live[*ch.parent]) continue;
                std::vector<std::size_t> c;
                for (const auto& p : classes.at(uid)) {
                    const std::size_t i = index.at(p);
                    if (!pos[i].parent || live[*pos[i].parent]) c.push_back(i);
                }
                if (c.empty()) continue;
                const std::size_t next = pick(c);
                if (next != at_idx) {
                    at_idx = next;
                    changed = true;
                }
            }
            if (!changed) break;
        }
    }
    recompute_live();

    TransferOutput out;
    for (std::size_t i = 0; i < pos.size(); ++i) {
        const SynObj& s = pos[i].so;
        if (live[i] && s.is_leaf() && s.item().pronounceable())
            out.pf.push_back({s.item().phon(), s.item().id(), s.uid()});
    }

    std::function<LfNode(const SynObj&, const Path&)> build = [&](const SynObj& s, const Path& p) {
        LfNode n;
        n.uid = s.uid();
        n.lower_copy = ctx.is_lower(p);
        n.silent = !live[index.at(p)];
        n.class_size = ctx.occurrence_count(s.uid());
        if (s.is_leaf()) {
            n.lex_id = s.item().id();
            n.phon = s.item().phon();
        }
        try {
            const Label& l = labeler.label(p);
            n.label = l.category;
            n.label_kind = l.kind;
        } catch (const UnlabelableError& e) {
            n.label_error = e.reason();
            out.failures.push_back(s.canonical());
        }
        if (!s.is_leaf()) {
            const std::size_t f = s.canonical_first();
            for (std::size_t k : {f, 1 - f})
                n.members.push_back(build(s.member(k), child(p, static_cast<std::uint8_t>(k))));
        }
        return n;
    };
    out.lf = build(root, {});

    if (options.strict && !out.failures.empty())
        throw UnlabelableError("transfer: cannot label " + out.failures.front());
    return out;
}

std::pair<Derivation, TransferOutput> transfer(const Derivation& d, const SynObj& root,
                                               const TransferOptions& options) {
    Derivation next = record_transfer(d, root);
    TransferOutput out = transfer(root, options);
    return {std::move(next), std::move(out)};
}

std::string TransferOutput::pf_string() const {
    std::string s;
    for (const auto& t : pf) {
        if (!s.empty()) s += ' ';
        s += t.phon;
    }
    return s;
}

std::vector<std::string> TransferOutput::pf_words() const {
    std::vector<std::string> w;
    for (const auto& t : pf) w.push_back(t.phon);
    return w;
}

namespace {

template <class F>
void visit(const LfNode& n, F&& f) {
    f(n);
    for (const auto& m : n.members) visit(m, f);
}

} // namespace

std::size_t TransferOutput::lf_occurrences(Uid uid) const {
    std::size_t c = 0;
    visit(lf, [&](const LfNode& n) { c += n.uid == uid; });
    return c;
}

std::size_t TransferOutput::pronounced_occurrences(Uid uid) const {
    std::size_t c = 0;
    visit(lf, [&](const LfNode& n) { c += n.uid == uid && !n.silent; });
    return c;
}

std::string_view to_string(Pronunciation p) {
    switch (p) {
    case Pronunciation::HIGHEST: return "highest";
    case Pronunciation::LOWEST: return "lowest";
    case Pronunciation::ALL: return "all";
    }
    return "?";
}

Pronunciation pronunciation_from_string(std::string_view s) {
    if (s == "highest") return Pronunciation::HIGHEST;
    if (s == "lowest") return Pronunciation::LOWEST;
    if (s == "all") return Pronunciation::ALL;
    throw DomainError("unknown pronunciation policy '" + std::string(s) + "'");
}

} // namespace lingdyn::syntax
